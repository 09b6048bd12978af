#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chebmul/poly.hpp"
#include "chebmul/rational.hpp"

namespace chebmul {

// Quadratic-cost conversions between the two bases.  These exist as test
// oracles (the fast paths never convert), so clarity beats speed here.

// Expands c[0]/2 + sum c[k] T_k into powers of x by accumulating the
// recurrence T_k = 2x T_{k-1} - T_{k-2}.
template <CoeffRing T>
MonoPoly<T> cheb_to_mono(const ChebPoly<T>& p) {
  const std::size_t n = p.size();
  const T two(2.0), half(0.5);
  std::vector<T> out(n);
  out[0] = p.c[0] * half;
  // rolling T_{k-1}, T_{k-2} coefficient vectors
  std::vector<T> tkm2{T(1.0)};        // T_0
  std::vector<T> tkm1{T(0.0), T(1.0)};  // T_1
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < tkm1.size(); ++i) out[i] += p.c[k] * tkm1[i];
    if (k + 1 < n) {
      std::vector<T> tk(k + 2);
      for (std::size_t i = 0; i <= k; ++i) tk[i + 1] = two * tkm1[i];
      for (std::size_t i = 0; i < tkm2.size(); ++i) tk[i] = tk[i] - tkm2[i];
      tkm2 = std::move(tkm1);
      tkm1 = std::move(tk);
    }
  }
  return MonoPoly<T>(std::move(out));
}

// Exact inverse of cheb_to_mono over an exact ring: peel the leading
// monomial coefficient against T_d (whose leading coefficient is 2^{d-1})
// and subtract, walking down to the constant.
template <CoeffRing T>
ChebPoly<T> mono_to_cheb(const MonoPoly<T>& p) {
  const std::size_t n = p.size();
  std::vector<T> rem = p.c;
  std::vector<T> out(n);

  // Chebyshev coefficient triangle T_0..T_{n-1}, built once.
  std::vector<std::vector<T>> tri(n);
  tri[0] = {T(1.0)};
  if (n > 1) tri[1] = {T(0.0), T(1.0)};
  const T two(2.0);
  for (std::size_t k = 2; k < n; ++k) {
    std::vector<T> tk(k + 1);
    for (std::size_t i = 0; i < k; ++i) tk[i + 1] = two * tri[k - 1][i];
    for (std::size_t i = 0; i < tri[k - 2].size(); ++i) tk[i] = tk[i] - tri[k - 2][i];
    tri[k] = std::move(tk);
  }

  const T half(0.5);
  T scale(1.0);  // 1 / 2^{k-1} for the current k
  for (std::size_t i = 2; i < n; ++i) scale = scale * half;
  for (std::size_t k = n; k-- > 1;) {
    const T ck = rem[k] * scale;
    out[k] = ck;
    for (std::size_t i = 0; i <= k; ++i) rem[i] = rem[i] - ck * tri[k][i];
    scale = scale * two;
  }
  out[0] = T(2.0) * rem[0];
  return ChebPoly<T>(std::move(out));
}

// Value of the Chebyshev form at x, by the recurrence on T_k values.
template <CoeffRing T>
T eval_cheb(const ChebPoly<T>& p, const T& x) {
  const T half(0.5), two(2.0);
  T acc = p.c[0] * half;
  T tkm2(1.0), tkm1 = x;
  for (std::size_t k = 1; k < p.size(); ++k) {
    acc += p.c[k] * tkm1;
    T tk = two * x * tkm1 - tkm2;
    tkm2 = tkm1;
    tkm1 = tk;
  }
  return acc;
}

template <CoeffRing T>
T eval_mono(const MonoPoly<T>& p, const T& x) {
  T acc = p.c.back();
  for (std::size_t i = p.size() - 1; i-- > 0;) acc = acc * x + p.c[i];
  return acc;
}

// The reference Chebyshev product: a straight transcription of the product
// formula (one case each for the constant, the mixed middle range, and the
// pure-convolution tail), evaluated over exact rationals.  Kept independent
// of the optimized implementations it serves as the oracle for.
inline ChebPoly<Rat> exact_cheb_product(const ChebPoly<Rat>& a, const ChebPoly<Rat>& b) {
  detail::require_equal_sizes(a.size(), b.size(), "exact_cheb_product");
  const std::size_t n = a.size(), d = n - 1;
  const Rat half(1, 2);
  std::vector<Rat> c(2 * n - 1);

  c[0] = a.c[0] * b.c[0] * half;
  for (std::size_t l = 1; l <= d; ++l) c[0] += a.c[l] * b.c[l];

  for (std::size_t k = 1; k + 1 <= d; ++k) {
    Rat s;
    for (std::size_t l = 0; l <= k; ++l) s += a.c[k - l] * b.c[l];
    for (std::size_t l = 1; l + k <= d; ++l) s += a.c[l] * b.c[k + l] + a.c[k + l] * b.c[l];
    c[k] = s * half;
  }

  for (std::size_t k = (d == 0 ? 1 : d); k <= 2 * d; ++k) {
    Rat s;
    for (std::size_t l = k - d; l <= d; ++l) s += a.c[k - l] * b.c[l];
    c[k] = s * half;
  }
  return ChebPoly<Rat>(std::move(c));
}

inline ChebPoly<Rat> to_rat(const ChebPoly<double>& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (double x : p.c) c.emplace_back(x);
  return ChebPoly<Rat>(std::move(c));
}

inline MonoPoly<Rat> to_rat(const MonoPoly<double>& p) {
  std::vector<Rat> c;
  c.reserve(p.size());
  for (double x : p.c) c.emplace_back(x);
  return MonoPoly<Rat>(std::move(c));
}

// Relative error ||c - chat||_2 / ||c||_2 against the exact product.  Both
// squared norms are accumulated over rationals (doubles convert exactly);
// the only floating-point step is the final square root of the ratio.
inline double relative_error(const ChebPoly<double>& approx, const ChebPoly<Rat>& exact) {
  detail::require_equal_sizes(approx.size(), exact.size(), "relative_error");
  Rat num, den;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const Rat diff = exact.c[i] - Rat(approx.c[i]);
    num += diff * diff;
    den += exact.c[i] * exact.c[i];
  }
  if (den == Rat(0)) throw std::domain_error("relative_error: exact polynomial is identically zero");
  return std::sqrt((num / den).to_double());
}

}  // namespace chebmul
