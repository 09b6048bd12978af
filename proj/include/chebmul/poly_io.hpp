#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace chebmul {

enum class PolyBasis { chebyshev, monomial };

const char* to_string(PolyBasis b);

struct PolyData {
  PolyBasis basis = PolyBasis::chebyshev;
  std::vector<double> coeffs;
};

struct PolyIoError : std::runtime_error {
  enum class Kind { io, header, coefficient, count };
  Kind kind;
  PolyIoError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Text format, one value per line after a two-line header:
//   basis chebyshev|monomial
//   n <count>
//   <coefficient>            (x count, %.16e — bit-exact double round trip)
PolyData read_poly(const std::string& path);
void write_poly(const std::string& path, PolyBasis basis, const std::vector<double>& coeffs);

}  // namespace chebmul
