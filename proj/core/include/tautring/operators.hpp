#pragma once

#include "tautring/taut_poly.hpp"

namespace tautring {

/// Second-order operator of bidegree (-1, 0):
///
///   D = 1/2 sum_{m,n>=1} C(m+n, n) p_{m+n-1} d/dp_m d/dp_n
///     +     sum_{m,n>=1} C(m+n-1, n) q_{m+n-1} d/dq_m d/dp_n
///     -     sum_{n>=1}   q_{n-1} d/dp_n
///
/// with q_0 replaced by ctx.q0. Indices produced above ctx.bound are kept.
TautPoly apply_D(const RingContext& ctx, const TautPoly& f);

/// Multiplication-by-k pull-back: scales bidegree (P, I) by k^(2P - I).
TautPoly pullback(const RingContext& ctx, long k, const TautPoly& f);

/// Multiplication-by-k push-forward: scales bidegree (P, I) by k^(2g - 2P + I).
/// A negative exponent (codim above g in the free ring) yields a rational
/// factor; with k = 0 it throws std::domain_error.
TautPoly pushforward(const RingContext& ctx, long k, const TautPoly& f);

struct SeriesBound {
  int max_codim = 0;
};

/// exp(f) = sum_k f^k / k!, dropping codim > bound.max_codim.
/// Throws std::invalid_argument if f has a codim-0 term.
TautPoly series_exp(const TautPoly& f, SeriesBound bound);

}  // namespace tautring
