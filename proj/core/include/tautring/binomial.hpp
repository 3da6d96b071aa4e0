#pragma once

#include "tautring/rational.hpp"

namespace tautring {

// Generalized binomial coefficient n(n-1)...(n-k+1)/k!, zero for k < 0.
// Integer-valued for every integer top, negative tops included.
Integer binom(long n, long k);

}  // namespace tautring
