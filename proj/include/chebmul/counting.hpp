#pragma once

#include <cstdint>
#include <vector>

namespace chebmul {

// Tally of scalar operations from an instrumented run.  Conventions are
// frozen: multiplication by any constant (including 1/2 and 2) is one
// multiplication, subtraction is one addition, negation is free.
struct OpCount {
  std::uint64_t muls = 0;
  std::uint64_t adds = 0;

  std::uint64_t total() const { return muls + adds; }

  friend bool operator==(const OpCount&, const OpCount&) = default;
};

// A double that reports every ring operation to an OpCount owned by the
// calling context.  Values made from plain literals carry no tally and act
// as constants; any operation touching at least one tallied operand is
// counted against that tally.  No global state is involved, so counting
// runs on different tallies may proceed concurrently.
class Counted {
 public:
  Counted() = default;
  explicit Counted(double v) : v_(v) {}
  Counted(double v, OpCount& tally) : v_(v), tally_(&tally) {}

  double value() const { return v_; }

  Counted operator-() const { return Counted(-v_, tally_); }  // negation is free

  friend Counted operator+(const Counted& a, const Counted& b) {
    OpCount* t = pick(a, b);
    if (t) ++t->adds;
    return Counted(a.v_ + b.v_, t);
  }
  friend Counted operator-(const Counted& a, const Counted& b) {
    OpCount* t = pick(a, b);
    if (t) ++t->adds;
    return Counted(a.v_ - b.v_, t);
  }
  friend Counted operator*(const Counted& a, const Counted& b) {
    OpCount* t = pick(a, b);
    if (t) ++t->muls;
    return Counted(a.v_ * b.v_, t);
  }

  Counted& operator+=(const Counted& o) { *this = *this + o; return *this; }
  Counted& operator-=(const Counted& o) { *this = *this - o; return *this; }
  Counted& operator*=(const Counted& o) { *this = *this * o; return *this; }

  friend bool operator==(const Counted& a, const Counted& b) { return a.v_ == b.v_; }

  OpCount* tally() const { return tally_; }

 private:
  Counted(double v, OpCount* t) : v_(v), tally_(t) {}
  static OpCount* pick(const Counted& a, const Counted& b) {
    return a.tally_ ? a.tally_ : b.tally_;
  }

  double v_ = 0.0;
  OpCount* tally_ = nullptr;
};

// Plain value extraction, shared by code paths that run over both rings.
inline double scalar_value(double x) { return x; }
inline double scalar_value(const Counted& x) { return x.value(); }

// A constant that charges its operations to the same tally as `ref`.  Used
// where constants combine with each other (twiddle-power accumulation) so
// instrumented runs still see that work.
inline double constant_like(double v, double /*ref*/) { return v; }
inline Counted constant_like(double v, const Counted& ref) {
  return ref.tally() ? Counted(v, *ref.tally()) : Counted(v);
}

inline std::vector<Counted> counted_vector(const std::vector<double>& xs, OpCount& tally) {
  std::vector<Counted> out;
  out.reserve(xs.size());
  for (double x : xs) out.emplace_back(x, tally);
  return out;
}

inline std::vector<double> values_of(const std::vector<Counted>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Counted& x : xs) out.push_back(x.value());
  return out;
}

}  // namespace chebmul
