#pragma once

#include <gmpxx.h>

#include <string>

namespace irrmaps {

using Integer = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational parse_rational(const std::string& num, const std::string& den);
std::string to_string(const Rational& q);
bool is_integer(const Rational& q);

}  // namespace irrmaps
