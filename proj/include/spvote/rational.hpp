#pragma once

#include <ostream>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "spvote/error.hpp"

namespace spvote {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational pow2(unsigned exponent) { return Rational(BigInt(1) << exponent); }

// Always "p/q", including integers ("1/1", "0/1").
inline std::string format_rational(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Exact probability in [0, 1], kept in lowest terms.
class Prob {
 public:
  Prob() = default;
  Prob(Rational value) : value_(std::move(value)) {  // NOLINT(google-explicit-constructor)
    if (value_ < 0 || value_ > 1) {
      throw DomainError("probability " + format_rational(value_) + " outside [0,1]");
    }
  }
  Prob(long long numerator, long long denominator) : Prob(Rational(numerator, denominator)) {}

  const Rational& value() const noexcept { return value_; }
  BigInt numerator() const { return boost::multiprecision::numerator(value_); }
  BigInt denominator() const { return boost::multiprecision::denominator(value_); }
  double to_double() const { return value_.convert_to<double>(); }

  friend bool operator==(const Prob&, const Prob&) = default;
  friend bool operator<(const Prob& a, const Prob& b) { return a.value_ < b.value_; }
  friend bool operator>(const Prob& a, const Prob& b) { return a.value_ > b.value_; }

 private:
  Rational value_{0};
};

inline std::string to_string(const Prob& p) { return format_rational(p.value()); }
inline std::ostream& operator<<(std::ostream& os, const Prob& p) { return os << to_string(p); }

}  // namespace spvote
