#pragma once

#include "chebmul/fft.hpp"

namespace chebmul {

// DCT-I with both endpoints half-weighted,
//
//   F(x)_k = x_0/2 + sum_{j=1}^{N-1} x_j cos(pi j k / N) + (-1)^k x_N / 2,
//
// for inputs of length N+1 with N a power of two.  Under the halved-a0
// Chebyshev storage this evaluates the series at the points cos(pi k / N),
// and F(F(x)) = (N/2) x.  Computed as the real DFT of the even-symmetric
// extension of length 2N plus N+1 halvings.
template <CoeffRing T>
std::vector<T> dct1(const std::vector<T>& x) {
  if (x.size() < 2) throw std::invalid_argument("dct1: need at least two points");
  const std::size_t n = x.size() - 1;
  if (!is_pow2(n)) throw std::invalid_argument("dct1: length must be a power of two plus one");
  std::vector<T> y(2 * n);
  for (std::size_t j = 0; j <= n; ++j) y[j] = x[j];
  for (std::size_t j = 1; j < n; ++j) y[2 * n - j] = x[j];
  const auto s = real_dft_half(y);  // length n+1
  std::vector<T> out(n + 1);
  const T half(0.5);
  for (std::size_t k = 0; k <= n; ++k) out[k] = s[k].re * half;
  return out;
}

}  // namespace chebmul
