#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dqv {

using Integer = mpz_class;
using Rational = mpq_class;  // arithmetic results are canonical; mpq_class(n, d) is not

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

}  // namespace dqv
