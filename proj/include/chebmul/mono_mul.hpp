#pragma once

#include <algorithm>
#include <span>

#include "chebmul/fft.hpp"
#include "chebmul/poly.hpp"

namespace chebmul {
namespace detail {

// c_k = sum a_i b_{k-i}.  Each output coefficient starts from its first
// term, so equal-length inputs cost exactly n^2 multiplications and
// (n-1)^2 additions.
template <CoeffRing T>
void schoolbook_into(std::span<const T> a, std::span<const T> b, std::span<T> out) {
  const std::size_t na = a.size(), nb = b.size();
  for (std::size_t k = 0; k < na + nb - 1; ++k) {
    const std::size_t lo = k >= nb ? k - nb + 1 : 0;
    const std::size_t hi = std::min(k, na - 1);
    T acc = a[lo] * b[k - lo];
    for (std::size_t i = lo + 1; i <= hi; ++i) acc += a[i] * b[k - i];
    out[k] = acc;
  }
}

// One Karatsuba step: split at m = ceil(n/2),
//   p0 = lo*lo, p2 = hi*hi, p1 = (lo+hi)(lo+hi),
//   result = p0 + x^m (p1 - p0 - p2) + x^{2m} p2.
// The middle block is added only where it overlaps the p0/p2 copies; the
// seam at index 2m-1 is a plain store.  For n = 2^k and threshold 1 the
// cost is exactly n^{log 3} multiplications and 6 n^{log 3} - 8n + 2
// additions (A(n) = 3 A(n/2) + 4n - 4).
template <CoeffRing T>
std::vector<T> karatsuba_rec(std::span<const T> a, std::span<const T> b, std::size_t threshold) {
  const std::size_t n = a.size();
  if (n <= threshold || n == 1) {
    std::vector<T> out(2 * n - 1);
    schoolbook_into(a, b, std::span<T>(out));
    return out;
  }
  const std::size_t m = (n + 1) / 2;  // high halves have n-m <= m entries
  const std::span<const T> alo = a.first(m), ahi = a.subspan(m);
  const std::span<const T> blo = b.first(m), bhi = b.subspan(m);

  std::vector<T> sa(alo.begin(), alo.end()), sb(blo.begin(), blo.end());
  for (std::size_t i = 0; i < ahi.size(); ++i) sa[i] += ahi[i];
  for (std::size_t i = 0; i < bhi.size(); ++i) sb[i] += bhi[i];

  const std::vector<T> p0 = karatsuba_rec(alo, blo, threshold);
  std::vector<T> p1 = karatsuba_rec(std::span<const T>(sa), std::span<const T>(sb), threshold);
  const std::vector<T> p2 = karatsuba_rec(ahi, bhi, threshold);

  std::vector<T>& q = p1;
  for (std::size_t i = 0; i < p0.size(); ++i) q[i] -= p0[i];
  for (std::size_t i = 0; i < p2.size(); ++i) q[i] -= p2[i];

  std::vector<T> out(2 * n - 1);
  std::copy(p0.begin(), p0.end(), out.begin());
  std::copy(p2.begin(), p2.end(), out.begin() + 2 * m);
  for (std::size_t j = 0; j < q.size(); ++j) {
    const std::size_t pos = m + j;
    if (pos == 2 * m - 1)
      out[pos] = q[j];
    else
      out[pos] += q[j];
  }
  return out;
}

}  // namespace detail

template <CoeffRing T>
MonoPoly<T> mul_schoolbook(const MonoPoly<T>& a, const MonoPoly<T>& b) {
  detail::require_equal_sizes(a.size(), b.size(), "mul_schoolbook");
  std::vector<T> out(2 * a.size() - 1);
  detail::schoolbook_into<T>(a.c, b.c, out);
  return MonoPoly<T>(std::move(out));
}

// threshold: sizes at or below it fall back to schoolbook.  1 reproduces
// the closed-form operation counts; 32 is the speed default used by the
// benchmark harness.
template <CoeffRing T>
MonoPoly<T> mul_karatsuba(const MonoPoly<T>& a, const MonoPoly<T>& b, std::size_t threshold = 1) {
  detail::require_equal_sizes(a.size(), b.size(), "mul_karatsuba");
  if (threshold == 0) threshold = 1;
  return MonoPoly<T>(detail::karatsuba_rec<T>(a.c, b.c, threshold));
}

inline constexpr std::size_t kKaratsubaBenchThreshold = 32;

// Product by real-input DFT: pad to the next power of two holding all
// 2n-1 product coefficients, transform both operands, multiply the N/2+1
// hermitian half-spectra pointwise, transform back (the inverse applies
// the 1/N scaling, one multiplication per point).
template <CoeffRing T>
MonoPoly<T> mul_fft_t(const MonoPoly<T>& a, const MonoPoly<T>& b) {
  detail::require_equal_sizes(a.size(), b.size(), "mul_fft");
  const std::size_t n = a.size();
  const std::size_t len = 2 * n - 1;
  const std::size_t N = std::max<std::size_t>(2, next_pow2(len));
  std::vector<T> pa(N), pb(N);
  std::copy(a.c.begin(), a.c.end(), pa.begin());
  std::copy(b.c.begin(), b.c.end(), pb.begin());
  const auto sa = real_dft_half(pa);
  const auto sb = real_dft_half(pb);
  std::vector<Cplx<T>> prod(sa.size());
  for (std::size_t k = 0; k < sa.size(); ++k) prod[k] = sa[k] * sb[k];
  std::vector<T> c = inverse_real_dft_half(prod, N);
  c.resize(len);
  return MonoPoly<T>(std::move(c));
}

inline MonoPoly<double> mul_fft(const MonoPoly<double>& a, const MonoPoly<double>& b) {
  return mul_fft_t<double>(a, b);
}

}  // namespace chebmul
