#pragma once

#include "tautring/binomial.hpp"
#include "tautring/derivations.hpp"
#include "tautring/expr.hpp"
#include "tautring/ideals.hpp"
#include "tautring/monomial.hpp"
#include "tautring/operators.hpp"
#include "tautring/rational.hpp"
#include "tautring/relations.hpp"
#include "tautring/taut_poly.hpp"
