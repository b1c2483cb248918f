#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ncg {

/// Exact rational arithmetic for link prices and cost comparisons.
using Rat = boost::rational<long long>;

std::string to_string(const Rat& r);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on malformed
/// input or zero denominator.
Rat parse_rational(std::string_view text);

/// A cost value: a finite rational, or +inf (disconnected), or -inf (only as
/// a delta, e.g. reconnecting an isolated player). All infinite costs of the
/// same sign compare equal, so inf - inf = 0.
class Cost {
 public:
  Cost() : kind_(Kind::Finite), value_(0) {}
  Cost(Rat value) : kind_(Kind::Finite), value_(std::move(value)) {}
  Cost(long long value) : kind_(Kind::Finite), value_(value) {}

  static Cost infinity() { return Cost(Kind::PosInf); }
  static Cost neg_infinity() { return Cost(Kind::NegInf); }

  bool finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }

  const Rat& value() const {
    if (!finite()) throw std::logic_error("Cost::value on infinite cost");
    return value_;
  }

  friend Cost operator+(const Cost& a, const Cost& b) {
    if (a.finite() && b.finite()) return Cost(a.value_ + b.value_);
    if (a.is_pos_inf() && b.is_neg_inf()) return Cost(Rat(0));
    if (a.is_neg_inf() && b.is_pos_inf()) return Cost(Rat(0));
    return a.finite() ? b : a;
  }
  friend Cost operator-(const Cost& a, const Cost& b) { return a + b.negate(); }
  Cost& operator+=(const Cost& o) { return *this = *this + o; }

  Cost negate() const {
    switch (kind_) {
      case Kind::Finite: return Cost(-value_);
      case Kind::PosInf: return neg_infinity();
      default: return infinity();
    }
  }

  friend bool operator==(const Cost& a, const Cost& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.finite() || a.value_ == b.value_;
  }
  friend bool operator!=(const Cost& a, const Cost& b) { return !(a == b); }
  friend bool operator<(const Cost& a, const Cost& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) < rank(b.kind_);
    return a.finite() && a.value_ < b.value_;
  }
  friend bool operator>(const Cost& a, const Cost& b) { return b < a; }
  friend bool operator<=(const Cost& a, const Cost& b) { return !(b < a); }
  friend bool operator>=(const Cost& a, const Cost& b) { return !(a < b); }

  std::string str() const;

 private:
  enum class Kind { NegInf, Finite, PosInf };
  explicit Cost(Kind k) : kind_(k), value_(0) {}
  static int rank(Kind k) { return static_cast<int>(k); }

  Kind kind_;
  Rat value_;
};

}  // namespace ncg
