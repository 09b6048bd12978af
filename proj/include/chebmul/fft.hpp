#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "chebmul/counting.hpp"
#include "chebmul/poly.hpp"

namespace chebmul {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Complex value over an arbitrary coefficient ring.  Exists so the same
// transform kernels run over plain doubles and over the counting scalar;
// conjugation and multiplication by +-i only flip signs and cost nothing.
template <CoeffRing T>
struct Cplx {
  T re{};
  T im{};

  friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
  friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
  friend Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }

  Cplx conj() const { return {re, -im}; }
  Cplx times_i() const { return {-im, re}; }
  Cplx times_minus_i() const { return {im, -re}; }
  Cplx scaled(const T& s) const { return {re * s, im * s}; }
};

// Bit-reversal table and twiddle factors w_n^k = e^{-2 pi i k/n} for one
// transform size.  Immutable once built; shared across threads.
struct FftPlan {
  std::size_t n;
  std::vector<std::size_t> bitrev;
  std::vector<std::complex<double>> twiddle;  // k < n/2

  explicit FftPlan(std::size_t size);
};

// Cached lookup keyed by size; returned references live for the program.
const FftPlan& fft_plan(std::size_t n);

// In-place radix-2 transform.  Forward computes X_k = sum_j x_j w^{jk};
// the inverse run uses conjugate twiddles and does NOT normalize — callers
// apply the 1/N scaling themselves, one multiplication per output value.
template <CoeffRing T>
void fft_inplace(std::vector<Cplx<T>>& x, bool inverse) {
  const std::size_t n = x.size();
  if (n <= 1) {
    if (n == 0) throw std::invalid_argument("fft: empty input");
    return;
  }
  const FftPlan& plan = fft_plan(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = plan.bitrev[i];
    if (i < j) std::swap(x[i], x[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t half = len >> 1;
    const std::size_t step = n / len;
    for (std::size_t base = 0; base < n; base += len) {
      for (std::size_t j = 0; j < half; ++j) {
        const std::complex<double> w = plan.twiddle[j * step];
        const Cplx<T> wt{T(w.real()), T(inverse ? -w.imag() : w.imag())};
        const Cplx<T> t = x[base + half + j] * wt;
        const Cplx<T> u = x[base + j];
        x[base + j] = u + t;
        x[base + half + j] = u - t;
      }
    }
  }
}

// Half-spectrum (length N/2+1) of a real vector of power-of-two length N,
// via one complex FFT of size N/2: even-index entries ride in the real
// lane, odd-index entries in the imaginary lane, and the split below
// untangles the two interleaved spectra.  The other half of the spectrum
// is implied by hermitian symmetry, value[N-k] = conj(value[k]).
template <CoeffRing T>
std::vector<Cplx<T>> real_dft_half(const std::vector<T>& x) {
  const std::size_t n = x.size();
  if (n < 2 || !is_pow2(n))
    throw std::invalid_argument("real_dft: size must be a power of two >= 2");
  const std::size_t m = n / 2;
  std::vector<Cplx<T>> z(m);
  for (std::size_t j = 0; j < m; ++j) z[j] = Cplx<T>{x[2 * j], x[2 * j + 1]};
  fft_inplace(z, false);

  const FftPlan& plan = fft_plan(n);
  std::vector<Cplx<T>> out(m + 1);
  const T half(0.5);
  for (std::size_t k = 0; k <= m; ++k) {
    const Cplx<T> zk = (k == m) ? z[0] : z[k];
    const Cplx<T> zc = ((k == 0 || k == m) ? z[0] : z[m - k]).conj();
    const Cplx<T> even = (zk + zc).scaled(half);
    const Cplx<T> odd = ((zk - zc).scaled(half)).times_minus_i();
    if (k == 0) {
      out[k] = even + odd;
    } else if (k == m) {
      out[k] = even - odd;  // w^{n/2} = -1
    } else {
      const std::complex<double> w = plan.twiddle[k];
      out[k] = even + odd * Cplx<T>{T(w.real()), T(w.imag())};
    }
  }
  return out;
}

// Inverse of real_dft_half.  Scales by 1/N on the way out, one
// multiplication per output value.
template <CoeffRing T>
std::vector<T> inverse_real_dft_half(const std::vector<Cplx<T>>& s, std::size_t n) {
  if (n < 2 || !is_pow2(n))
    throw std::invalid_argument("inverse_real_dft: size must be a power of two >= 2");
  const std::size_t m = n / 2;
  if (s.size() != m + 1)
    throw std::invalid_argument("inverse_real_dft: half-spectrum length must be N/2+1");
  const FftPlan& plan = fft_plan(n);
  const T half(0.5);
  std::vector<Cplx<T>> z(m);
  for (std::size_t k = 0; k < m; ++k) {
    const Cplx<T> xk = s[k];
    const Cplx<T> xc = s[m - k].conj();
    const Cplx<T> even2 = xk + xc;       // 2 * even spectrum
    const Cplx<T> oddw2 = xk - xc;       // 2 * w^k * odd spectrum
    Cplx<T> odd2;
    if (k == 0) {
      odd2 = oddw2;
    } else {
      const std::complex<double> w = plan.twiddle[k];
      odd2 = oddw2 * Cplx<T>{T(w.real()), T(-w.imag())};  // w^{-k}
    }
    z[k] = (even2 + odd2.times_i()).scaled(half);
  }
  fft_inplace(z, true);  // unnormalized: yields (N/2) * packed values
  std::vector<T> out(n);
  const T inv(1.0 / double(m));
  for (std::size_t j = 0; j < m; ++j) {
    out[2 * j] = z[j].re * inv;
    out[2 * j + 1] = z[j].im * inv;
  }
  return out;
}

namespace detail {
inline constexpr double kPi = 3.14159265358979323846264338327950288;
}

// Half-spectrum of the reversed polynomial r(x) = b(1/x) x^deg from the
// half-spectrum of b, using r(w^k) = w_deg^k * b(w^{-k}) and, since b is
// real, b(w^{-k}) = conj(b(w^k)).  The powers of w_deg are built by
// iterated multiplication — the O(n)-multiplication pass that replaces a
// full forward transform, at the price of an error that drifts linearly
// in k.
template <CoeffRing T>
std::vector<Cplx<T>> reversed_spectrum_half(const std::vector<Cplx<T>>& s, std::size_t n,
                                            std::size_t deg) {
  if (s.empty()) throw std::invalid_argument("reversed_spectrum: empty spectrum");
  const double ang = -2.0 * detail::kPi * double(deg) / double(n);
  const Cplx<T> wd{constant_like(std::cos(ang), s[0].re), constant_like(std::sin(ang), s[0].re)};
  Cplx<T> w{constant_like(1.0, s[0].re), constant_like(0.0, s[0].re)};
  std::vector<Cplx<T>> out(s.size());
  out[0] = s[0].conj();
  for (std::size_t k = 1; k < s.size(); ++k) {
    w = w * wd;
    out[k] = s[k].conj() * w;
  }
  return out;
}

// ---------------------------------------------------------------------------
// double-precision front end

// Either a full complex spectrum (values.size() == n) or the hermitian
// half-spectrum of a real input (values.size() == n/2+1).
struct Spectrum {
  std::size_t n = 0;
  bool half = false;
  std::vector<std::complex<double>> values;
};

Spectrum fft(const std::vector<std::complex<double>>& x);
std::vector<std::complex<double>> inverse_fft(const Spectrum& s);

Spectrum real_dft(const std::vector<double>& x);
std::vector<double> inverse_real_dft(const Spectrum& s);

// Spectrum of the degree-`deg` reversal of the underlying real polynomial;
// accepts both layouts (index reversal for full spectra, conjugation for
// half-spectra).
Spectrum spectrum_of_reversed(const Spectrum& s, std::size_t deg);

}  // namespace chebmul
