#include "irrmaps/rational.hpp"

#include <stdexcept>

namespace irrmaps {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& num, const std::string& den) {
  return make_rational(Integer(num), Integer(den));
}

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace irrmaps
