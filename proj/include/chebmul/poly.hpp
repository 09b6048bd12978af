#pragma once

#include <concepts>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chebmul {

// Coefficient ring the generic multiplication routines run over.  Needs the
// usual +,-,* plus exact construction from small binary fractions (0.5, 2),
// which every instantiation here (double, Rat, Counted) provides.
template <class T>
concept CoeffRing =
    std::copyable<T> && std::default_initializable<T> &&
    requires(const T a, const T b) {
      { a + b } -> std::convertible_to<T>;
      { a - b } -> std::convertible_to<T>;
      { a * b } -> std::convertible_to<T>;
      { -a } -> std::convertible_to<T>;
      T(0.5);
    };

// Chebyshev expansion with the halved-constant convention:
//
//   a(x) = c[0]/2 + sum_{k=1}^{d} c[k] T_k(x),   d = size()-1.
//
// c[0] stores TWICE the constant term.  Every product formula in this
// library assumes this storage; conversions to and from the monomial basis
// are the only places the convention is translated.
template <CoeffRing T>
struct ChebPoly {
  std::vector<T> c;

  ChebPoly() : c(1) {}
  explicit ChebPoly(std::vector<T> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) throw std::invalid_argument("ChebPoly: empty coefficient vector");
  }

  std::size_t size() const { return c.size(); }
  std::size_t degree_bound() const { return c.size() - 1; }

  friend bool operator==(const ChebPoly& a, const ChebPoly& b) { return a.c == b.c; }
};

// Plain power-basis polynomial, ascending degree: a(x) = sum c[k] x^k.
template <CoeffRing T>
struct MonoPoly {
  std::vector<T> c;

  MonoPoly() : c(1) {}
  explicit MonoPoly(std::vector<T> coeffs) : c(std::move(coeffs)) {
    if (c.empty()) throw std::invalid_argument("MonoPoly: empty coefficient vector");
  }

  std::size_t size() const { return c.size(); }
  std::size_t degree_bound() const { return c.size() - 1; }

  friend bool operator==(const MonoPoly& a, const MonoPoly& b) { return a.c == b.c; }
};

// r(x) = p(1/x) x^d, i.e. the coefficient sequence read backwards.
template <CoeffRing T>
MonoPoly<T> reverse(const MonoPoly<T>& p) {
  std::vector<T> r(p.c.rbegin(), p.c.rend());
  return MonoPoly<T>(std::move(r));
}

namespace detail {
template <class P>
std::pair<P, P> pad_pair(const P& a, const P& b) {
  const std::size_t n = std::max(a.size(), b.size());
  P pa = a, pb = b;
  pa.c.resize(n);
  pb.c.resize(n);
  return {std::move(pa), std::move(pb)};
}
}  // namespace detail

// All multiplication entry points require equal lengths (the product
// formulas assume a common degree bound).  These helpers zero-pad the
// shorter operand so callers with ragged inputs can conform first.
template <CoeffRing T>
std::pair<ChebPoly<T>, ChebPoly<T>> pad_to_common(const ChebPoly<T>& a, const ChebPoly<T>& b) {
  return detail::pad_pair(a, b);
}

template <CoeffRing T>
std::pair<MonoPoly<T>, MonoPoly<T>> pad_to_common(const MonoPoly<T>& a, const MonoPoly<T>& b) {
  return detail::pad_pair(a, b);
}

namespace detail {
inline void require_equal_sizes(std::size_t na, std::size_t nb, const char* what) {
  if (na != nb)
    throw std::invalid_argument(std::string(what) + ": operand lengths differ (" +
                                std::to_string(na) + " vs " + std::to_string(nb) + ")");
}
}  // namespace detail

}  // namespace chebmul
