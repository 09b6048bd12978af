#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chebmul/counting.hpp"
#include "chebmul/poly.hpp"
#include "chebmul/rational.hpp"

namespace chebmul {

namespace detail {
inline bool ring_close(double x, double y) {
  return std::abs(x - y) <= 1e-6 * std::max({1.0, std::abs(x), std::abs(y)});
}
inline bool ring_close(const Rat& x, const Rat& y) { return x == y; }
inline bool ring_close(const Counted& x, const Counted& y) {
  return ring_close(x.value(), y.value());
}
}  // namespace detail

// Monomial product by two Chebyshev products: the other direction of the
// linear-time equivalence between the two multiplication problems.
//
// Feed the raw coefficient vectors to the Chebyshev multiplier as they
// are.  Its high outputs satisfy 2 f_k = sum a_{k-l} b_l for k >= d, i.e.
// half the plain convolution, independent of how the constant term is
// read; so the top d+1 product coefficients are 2 f_k, and the low d come
// the same way from the product of the two reversed inputs:
//
//   c_k = 2 f_k          for k = d..2d,
//   c_k = 2 g_{2d-k}     for k = 0..d-1.
//
// Both routes cover k = d; the overlap is checked.  Exactly two mul_cheb
// calls plus 2n-1 doublings.
template <CoeffRing T, class MulC>
MonoPoly<T> mono_mul_via_cheb(const MonoPoly<T>& a, const MonoPoly<T>& b, MulC&& mul_cheb) {
  detail::require_equal_sizes(a.size(), b.size(), "mono_mul_via_cheb");
  const std::size_t n = a.size(), d = n - 1;

  const ChebPoly<T> f = mul_cheb(ChebPoly<T>(a.c), ChebPoly<T>(b.c));
  const ChebPoly<T> g = mul_cheb(ChebPoly<T>(reverse(a).c), ChebPoly<T>(reverse(b).c));

  const T two(2.0);
  std::vector<T> c(2 * n - 1);
  for (std::size_t k = d; k <= 2 * d; ++k) c[k] = f.c[k] * two;
  for (std::size_t k = 0; k + 1 <= d; ++k) c[k] = g.c[2 * d - k] * two;

  if (!detail::ring_close(f.c[d], g.c[d]))
    throw std::logic_error("mono_mul_via_cheb: overlap check failed, multiplier does not follow "
                           "the halved-constant product convention");
  return MonoPoly<T>(std::move(c));
}

}  // namespace chebmul
