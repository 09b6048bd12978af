#include "chebmul/cost_model.hpp"

#include <stdexcept>

namespace chebmul {

namespace {

std::int64_t log2_exact(std::size_t n) {
  if (n == 0 || (n & (n - 1)) != 0)
    throw std::invalid_argument("cost model: n must be a power of two");
  std::int64_t k = 0;
  while ((std::size_t(1) << k) < n) ++k;
  return k;
}

std::int64_t pow3(std::int64_t k) {
  std::int64_t p = 1;
  while (k-- > 0) p *= 3;
  return p;
}

}  // namespace

CostSplit theoretical_cost(std::string_view method, std::size_t size) {
  const std::int64_t k = log2_exact(size);
  const std::int64_t n = static_cast<std::int64_t>(size);
  const std::int64_t L = k + 1;    // log2(2n)
  const std::int64_t P = pow3(k);  // n^{log2 3}

  if (method == "direct")
    return {n * n + 2 * n - 1, (n - 1) * (3 * n - 2) / 2, (5 * n * n - n) / 2, true};
  if (method == "lima")
    return {(n * n + 5 * n - 2) / 2, 3 * n * n + P - 6 * n + 2, (7 * n * n - 7 * n) / 2 + P + 1,
            true};
  if (method == "dct")
    return {3 * n * L - 2 * n + 3, (9 * n + 3) * L - 12 * n + 12, (12 * n + 3) * L - 14 * n + 15,
            true};
  if (method == "dct-via-fft") {
    // 2n-point DCT-I realized as a 4n-point real DFT plus 2n scalings
    const std::int64_t L4 = k + 2;  // log2(4n)
    CostSplit c{6 * n * L4 - 12 * n + 6, 18 * n * L4 - 30 * n + 12, 0, false};
    c.total = c.muls + c.adds;
    return c;
  }
  if (method == "pm-schoolbook")
    return {2 * n * n + 2 * n - 1, 2 * n * n - 2 * n, 4 * n * n - 1, true};
  if (method == "pm-karatsuba")
    return {2 * P + 2 * n - 1, 14 * P - 12 * n + 2, 16 * P - 10 * n + 1, true};
  if (method == "pm-dft")
    return {4 * n * L + 4 * n + 5, 12 * n * L - 12 * n + 14, 16 * n * L - 8 * n + 19, true};
  if (method == "pm-dft-accurate") {
    CostSplit c{5 * n * L - 3 * n + 9, 15 * n * L - 17 * n + 18, 0, false};
    c.total = c.muls + c.adds;
    return c;
  }
  throw std::invalid_argument("cost model: unknown method '" + std::string(method) + "'");
}

const std::vector<std::string>& cost_model_methods() {
  static const std::vector<std::string> methods = {
      "direct",        "lima",          "dct",    "dct-via-fft",
      "pm-schoolbook", "pm-karatsuba",  "pm-dft", "pm-dft-accurate"};
  return methods;
}

OpCount expected_op_count(std::string_view method, std::size_t size) {
  const std::int64_t k = log2_exact(size);
  const std::int64_t n = static_cast<std::int64_t>(size);
  const std::int64_t P = pow3(k);
  const auto u = [](std::int64_t v) { return static_cast<std::uint64_t>(v); };

  if (method == "schoolbook") return {u(n * n), u((n - 1) * (n - 1))};
  if (method == "karatsuba") return {u(P), u(6 * P - 8 * n + 2)};
  if (method == "direct") return {u(n * n + 2 * n - 1), u((n - 1) * (3 * n - 2) / 2)};
  // the reductions: two monomial products plus 2n-1 muls and 2n-3 adds of
  // recombination (n = 1 degenerates to a single halving)
  if (method == "pm-schoolbook") {
    if (n == 1) return {3, 0};
    return {u(2 * n * n + 2 * n - 1), u(2 * (n - 1) * (n - 1) + 2 * n - 3)};
  }
  if (method == "pm-karatsuba") {
    if (n == 1) return {3, 0};
    return {u(2 * P + 2 * n - 1), u(2 * (6 * P - 8 * n + 2) + 2 * n - 3)};
  }
  throw std::invalid_argument("op count: method '" + std::string(method) +
                              "' is not exactly countable");
}

const std::vector<std::string>& countable_methods() {
  static const std::vector<std::string> methods = {"schoolbook", "karatsuba", "direct",
                                                   "pm-schoolbook", "pm-karatsuba"};
  return methods;
}

}  // namespace chebmul
