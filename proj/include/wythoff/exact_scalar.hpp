#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace wythoff {

using Rational = boost::rational<std::int64_t>;

/// An element a + b*sqrt(5) of Q(sqrt 5) with exact rational parts.
/// Rational-only values simply carry b = 0.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(std::int64_t a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(Rational a, Rational b = Rational(0)) : a_(a), b_(b) {}

  /// The golden ratio (1 + sqrt 5) / 2, which equals 2cos(pi/5).
  static ExactScalar golden();

  const Rational& rational_part() const { return a_; }
  const Rational& sqrt5_part() const { return b_; }
  bool is_zero() const { return a_.numerator() == 0 && b_.numerator() == 0; }

  ExactScalar operator+(const ExactScalar& o) const { return {a_ + o.a_, b_ + o.b_}; }
  ExactScalar operator-(const ExactScalar& o) const { return {a_ - o.a_, b_ - o.b_}; }
  ExactScalar operator-() const { return {-a_, -b_}; }
  ExactScalar operator*(const ExactScalar& o) const {
    return {a_ * o.a_ + Rational(5) * b_ * o.b_, a_ * o.b_ + b_ * o.a_};
  }
  ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
  ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }

  friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  double to_double() const;
  std::size_t hash() const;
  std::string to_string() const;

 private:
  Rational a_{0};
  Rational b_{0};
};

}  // namespace wythoff
