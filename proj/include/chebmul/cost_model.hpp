#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chebmul/counting.hpp"

namespace chebmul {

// Cost of one multiplication measured in additions.  1, 2 and 4 are the
// presets the speedup plots use.
struct CostModel {
  double mul_weight = 1.0;
};

struct CostSplit {
  std::int64_t muls = 0;
  std::int64_t adds = 0;
  std::int64_t total = 0;        // closed-form operation total
  bool total_published = false;  // total has its own source formula (not just muls+adds)

  double weighted(const CostModel& m) const {
    return m.mul_weight * static_cast<double>(muls) + static_cast<double>(adds);
  }
};

// Closed-form operation counts for multiplying two size-n Chebyshev-basis
// polynomials, n = 2^k.  Methods:
//   direct, lima, dct, dct-via-fft, pm-schoolbook, pm-karatsuba, pm-dft,
//   pm-dft-accurate
// Throws on unknown methods and non-power-of-two sizes.
CostSplit theoretical_cost(std::string_view method, std::size_t n);

const std::vector<std::string>& cost_model_methods();

// Frozen expected counts for the exactly countable methods; instrumented
// runs must reproduce these operation for operation.  Methods:
//   schoolbook, karatsuba, direct, pm-schoolbook, pm-karatsuba
OpCount expected_op_count(std::string_view method, std::size_t n);

const std::vector<std::string>& countable_methods();

}  // namespace chebmul
