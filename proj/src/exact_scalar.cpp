#include "wythoff/exact_scalar.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace wythoff {

namespace {

std::size_t mix(std::size_t seed, std::int64_t v) {
  return seed ^ (std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

std::string rational_string(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << '/' << r.denominator();
  return os.str();
}

}  // namespace

ExactScalar ExactScalar::golden() { return {Rational(1, 2), Rational(1, 2)}; }

double ExactScalar::to_double() const {
  return boost::rational_cast<double>(a_) + boost::rational_cast<double>(b_) * std::sqrt(5.0);
}

std::size_t ExactScalar::hash() const {
  std::size_t h = 0;
  h = mix(h, a_.numerator());
  h = mix(h, a_.denominator());
  h = mix(h, b_.numerator());
  h = mix(h, b_.denominator());
  return h;
}

std::string ExactScalar::to_string() const {
  if (b_.numerator() == 0) return rational_string(a_);
  std::ostringstream os;
  if (a_.numerator() != 0) os << rational_string(a_) << '+';
  os << rational_string(b_) << "*sqrt5";
  return os.str();
}

}  // namespace wythoff
