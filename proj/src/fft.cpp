#include "chebmul/fft.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace chebmul {

FftPlan::FftPlan(std::size_t size) : n(size) {
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  std::size_t bits = 0;
  while ((std::size_t(1) << bits) < n) ++bits;
  bitrev.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t r = 0;
    for (std::size_t b = 0; b < bits; ++b) r |= ((i >> b) & 1u) << (bits - 1 - b);
    bitrev[i] = r;
  }
  twiddle.resize(n / 2);
  const long double pi = 3.14159265358979323846264338327950288L;
  for (std::size_t k = 0; k < n / 2; ++k) {
    const long double ang = -2.0L * pi * static_cast<long double>(k) / static_cast<long double>(n);
    twiddle[k] = {static_cast<double>(cosl(ang)), static_cast<double>(sinl(ang))};
  }
}

const FftPlan& fft_plan(std::size_t n) {
  if (!is_pow2(n)) throw std::invalid_argument("fft: size must be a power of two");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<FftPlan>>* cache =
      new std::map<std::size_t, std::unique_ptr<FftPlan>>();
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = (*cache)[n];
  if (!slot) slot = std::make_unique<FftPlan>(n);
  return *slot;
}

namespace {

std::vector<Cplx<double>> to_kernel(const std::vector<std::complex<double>>& x) {
  std::vector<Cplx<double>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i].real(), x[i].imag()};
  return out;
}

std::vector<std::complex<double>> from_kernel(const std::vector<Cplx<double>>& x) {
  std::vector<std::complex<double>> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = {x[i].re, x[i].im};
  return out;
}

}  // namespace

Spectrum fft(const std::vector<std::complex<double>>& x) {
  if (!is_pow2(x.size())) throw std::invalid_argument("fft: size must be a power of two");
  auto buf = to_kernel(x);
  fft_inplace(buf, false);
  return Spectrum{x.size(), false, from_kernel(buf)};
}

std::vector<std::complex<double>> inverse_fft(const Spectrum& s) {
  if (s.half) throw std::invalid_argument("inverse_fft: expected a full spectrum");
  if (s.values.size() != s.n) throw std::invalid_argument("inverse_fft: corrupt spectrum");
  auto buf = to_kernel(s.values);
  fft_inplace(buf, true);
  const double inv = 1.0 / double(s.n);
  std::vector<std::complex<double>> out(s.n);
  for (std::size_t i = 0; i < s.n; ++i) out[i] = {buf[i].re * inv, buf[i].im * inv};
  return out;
}

Spectrum real_dft(const std::vector<double>& x) {
  return Spectrum{x.size(), true, from_kernel(real_dft_half(x))};
}

std::vector<double> inverse_real_dft(const Spectrum& s) {
  if (!s.half) throw std::invalid_argument("inverse_real_dft: expected a half-spectrum");
  return inverse_real_dft_half(to_kernel(s.values), s.n);
}

Spectrum spectrum_of_reversed(const Spectrum& s, std::size_t deg) {
  if (s.half) {
    if (s.values.size() != s.n / 2 + 1)
      throw std::invalid_argument("spectrum_of_reversed: corrupt half-spectrum");
    return Spectrum{s.n, true, from_kernel(reversed_spectrum_half(to_kernel(s.values), s.n, deg))};
  }
  if (s.values.size() != s.n)
    throw std::invalid_argument("spectrum_of_reversed: corrupt spectrum");
  // full layout: r(w^k) = w_deg^k * b(w^{N-k})
  const double ang = -2.0 * detail::kPi * double(deg) / double(s.n);
  const std::complex<double> wd = {std::cos(ang), std::sin(ang)};
  std::complex<double> w = {1.0, 0.0};
  Spectrum out{s.n, false, std::vector<std::complex<double>>(s.n)};
  out.values[0] = s.values[0];
  for (std::size_t k = 1; k < s.n; ++k) {
    w *= wd;
    out.values[k] = w * s.values[s.n - k];
  }
  return out;
}

}  // namespace chebmul
