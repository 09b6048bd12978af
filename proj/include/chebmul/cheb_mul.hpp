#pragma once

#include <cmath>
#include <cstdlib>

#include "chebmul/dct.hpp"
#include "chebmul/fft.hpp"
#include "chebmul/mono_mul.hpp"
#include "chebmul/poly.hpp"

namespace chebmul {

// Direct quadratic method.  A literal evaluation of the product rule
// T_i T_j = (T_{i+j} + T_{|i-j|}) / 2: every pairwise product a_i b_j is
// formed once, and each symmetric pair sum a_i b_j + a_j b_i feeds both
// the order-(i+j) convolution and the mixed middle sum of order |i-j|.
// Over the counting ring this costs exactly n^2 + 2n - 1 multiplications
// and (n-1)(3n-2)/2 additions.
template <CoeffRing T>
ChebPoly<T> mul_direct(const ChebPoly<T>& a, const ChebPoly<T>& b) {
  detail::require_equal_sizes(a.size(), b.size(), "mul_direct");
  const std::size_t n = a.size(), d = n - 1;
  const T half(0.5);
  std::vector<T> c(2 * n - 1);

  if (d == 0) {
    c[0] = a.c[0] * b.c[0] * half;
    return ChebPoly<T>(std::move(c));
  }

  // f[m] accumulates the order-m convolution; mid[k] accumulates
  // sum_{l>=1} (a_l b_{l+k} + a_{l+k} b_l).  A first contribution is a
  // store, not an addition.
  std::vector<T> f(2 * d + 1), mid(d);
  std::vector<char> f_seen(2 * d + 1, 0), mid_seen(d, 0);
  const auto feed_f = [&](std::size_t m, const T& v) {
    if (f_seen[m]) {
      f[m] += v;
    } else {
      f[m] = v;
      f_seen[m] = 1;
    }
  };

  T c0 = a.c[0] * b.c[0] * half;
  for (std::size_t l = 1; l <= d; ++l) {
    const T p = a.c[l] * b.c[l];
    c0 += p;
    feed_f(2 * l, p);
  }
  c[0] = c0;

  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j <= d; ++j) {
      const T t = a.c[i] * b.c[j] + a.c[j] * b.c[i];
      feed_f(i + j, t);
      const std::size_t k = j - i;
      if (i >= 1 && k + 1 <= d) {
        if (mid_seen[k]) {
          mid[k] += t;
        } else {
          mid[k] = t;
          mid_seen[k] = 1;
        }
      }
    }
  }

  for (std::size_t k = 1; k < d; ++k) c[k] = (f[k] + mid[k]) * half;
  for (std::size_t k = d; k <= 2 * d; ++k) c[k] = f[k] * half;
  return ChebPoly<T>(std::move(c));
}

namespace detail {

// Recombination shared by the reduction paths, assuming g was formed from
// zero-constant operands:
//   c_0 = f_0/2 + g_d,
//   c_k = (f_k + g_{d-k} + g_{d+k}) / 2   for 1 <= k <= d-1,
//   c_k = f_k / 2                         for d <= k <= 2d.
// Extra work: 2n-1 multiplications, 2n-3 additions.
template <CoeffRing T>
ChebPoly<T> assemble_pm(const std::vector<T>& f, const std::vector<T>& g, std::size_t n) {
  const std::size_t d = n - 1;
  const T half(0.5);
  std::vector<T> c(2 * n - 1);
  if (d == 0) {
    c[0] = f[0] * half;
    return ChebPoly<T>(std::move(c));
  }
  c[0] = f[0] * half + g[d];
  for (std::size_t k = 1; k < d; ++k) c[k] = (f[k] + g[d - k] + g[d + k]) * half;
  for (std::size_t k = d; k <= 2 * d; ++k) c[k] = f[k] * half;
  return ChebPoly<T>(std::move(c));
}

}  // namespace detail

// PM-Chebyshev reduction: reinterpret the coefficient vectors as monomial
// polynomials, compute f = a*b and the reversed-operand product
// g = a' * reverse(b'), then recombine linearly.  Exactly two calls to
// mul_mono and O(n) extra scalar work.
//
// With zero_constant_trick (the default) the constant coefficients of the
// g-operands are zeroed first, which removes the a_0 b_k / a_k b_0
// correction terms; the plain variant keeps them and exists so the
// 2 M(n) + 8n - 10 operation total of the unoptimized reduction can be
// measured.
template <CoeffRing T, class MulM>
ChebPoly<T> pm_chebyshev(const ChebPoly<T>& a, const ChebPoly<T>& b, MulM&& mul_mono,
                         bool zero_constant_trick = true) {
  detail::require_equal_sizes(a.size(), b.size(), "pm_chebyshev");
  const std::size_t n = a.size(), d = n - 1;

  const MonoPoly<T> abar(a.c);
  const MonoPoly<T> bbar(b.c);
  const MonoPoly<T> f = mul_mono(abar, bbar);

  MonoPoly<T> a2 = abar;
  MonoPoly<T> b2 = bbar;
  if (zero_constant_trick) {
    a2.c[0] = T(0.0);
    b2.c[0] = T(0.0);
  }
  const MonoPoly<T> g = mul_mono(a2, reverse(b2));

  if (zero_constant_trick || d == 0) return detail::assemble_pm(f.c, g.c, n);

  // plain recombination with the constant-coefficient corrections
  const T half(0.5);
  std::vector<T> c(2 * n - 1);
  c[0] = f.c[0] * half + g.c[d] - a.c[0] * b.c[0];
  for (std::size_t k = 1; k < d; ++k)
    c[k] = (f.c[k] + g.c[d - k] + g.c[d + k] - a.c[0] * b.c[k] - a.c[k] * b.c[0]) * half;
  for (std::size_t k = d; k <= 2 * d; ++k) c[k] = f.c[k] * half;
  return ChebPoly<T>(std::move(c));
}

// DFT-specialized reduction.  Both operands are transformed once; the
// spectrum of the reversed g-operand comes either from the twiddle pass
// over conj(B') (fast, slightly lossy) or from a genuine forward transform
// of the reversed coefficients (accurate).  Zeroing the constant
// coefficients happens in the spectral domain: subtracting a_0 shifts
// every spectrum value by the same real constant.
template <CoeffRing T>
ChebPoly<T> pm_dft_t(const ChebPoly<T>& a, const ChebPoly<T>& b, bool accurate) {
  detail::require_equal_sizes(a.size(), b.size(), "pm_dft");
  const std::size_t n = a.size(), d = n - 1;
  const std::size_t N = std::max<std::size_t>(2, next_pow2(2 * n - 1));
  const std::size_t m = N / 2;

  std::vector<T> pa(N), pb(N);
  std::copy(a.c.begin(), a.c.end(), pa.begin());
  std::copy(b.c.begin(), b.c.end(), pb.begin());
  const auto sa = real_dft_half(pa);
  const auto sb = real_dft_half(pb);

  std::vector<Cplx<T>> w(m + 1);
  for (std::size_t k = 0; k <= m; ++k) w[k] = sa[k] * sb[k];
  const std::vector<T> f = inverse_real_dft_half(w, N);

  std::vector<Cplx<T>> sa2(m + 1);
  for (std::size_t k = 0; k <= m; ++k) sa2[k] = Cplx<T>{sa[k].re - a.c[0], sa[k].im};

  std::vector<Cplx<T>> rspec;
  if (accurate) {
    std::vector<T> r2(N);  // reverse of b with b_0 zeroed, zero-padded
    for (std::size_t j = 1; j <= d; ++j) r2[d - j] = b.c[j];
    rspec = real_dft_half(r2);
  } else {
    std::vector<Cplx<T>> sb2(m + 1);
    for (std::size_t k = 0; k <= m; ++k) sb2[k] = Cplx<T>{sb[k].re - b.c[0], sb[k].im};
    rspec = reversed_spectrum_half(sb2, N, d);
  }

  for (std::size_t k = 0; k <= m; ++k) w[k] = sa2[k] * rspec[k];
  const std::vector<T> g = inverse_real_dft_half(w, N);

  return detail::assemble_pm(f, g, n);
}

inline ChebPoly<double> pm_dft(const ChebPoly<double>& a, const ChebPoly<double>& b) {
  return pm_dft_t<double>(a, b, false);
}

inline ChebPoly<double> pm_dft_accurate(const ChebPoly<double>& a, const ChebPoly<double>& b) {
  return pm_dft_t<double>(a, b, true);
}

// Largest magnitude the trimmed tail of a DCT product may carry before the
// result is considered corrupt.
inline constexpr double kDctTailTolerance = 1e-10;

// DCT-based method: evaluate both series at the N+1 Chebyshev points by a
// forward DCT-I, multiply the values, and interpolate back with another
// DCT-I scaled by 2/N.  N is the smallest power of two holding all 2n-1
// product coefficients strictly below the half-weighted T_N endpoint.
// Positions 2n-1..N of the result are exact zeros of the product; they are
// trimmed and must vanish to within kDctTailTolerance.
template <CoeffRing T>
ChebPoly<T> mul_dct_t(const ChebPoly<T>& a, const ChebPoly<T>& b) {
  detail::require_equal_sizes(a.size(), b.size(), "mul_dct");
  const std::size_t n = a.size();
  const std::size_t N = std::max<std::size_t>(2, next_pow2(2 * n - 1));

  std::vector<T> pa(N + 1), pb(N + 1);
  std::copy(a.c.begin(), a.c.end(), pa.begin());
  std::copy(b.c.begin(), b.c.end(), pb.begin());
  const std::vector<T> va = dct1(pa);
  const std::vector<T> vb = dct1(pb);

  std::vector<T> w(N + 1);
  for (std::size_t j = 0; j <= N; ++j) w[j] = va[j] * vb[j];
  std::vector<T> c = dct1(w);
  const T scale(2.0 / double(N));
  for (std::size_t k = 0; k <= N; ++k) c[k] = c[k] * scale;

  for (std::size_t k = 2 * n - 1; k <= N; ++k) {
    if (std::abs(scalar_value(c[k])) > kDctTailTolerance)
      throw std::runtime_error("mul_dct: trimmed tail exceeds tolerance");
  }
  c.resize(2 * n - 1);
  return ChebPoly<T>(std::move(c));
}

inline ChebPoly<double> mul_dct(const ChebPoly<double>& a, const ChebPoly<double>& b) {
  return mul_dct_t<double>(a, b);
}

}  // namespace chebmul
