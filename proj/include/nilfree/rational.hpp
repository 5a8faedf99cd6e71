#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nilfree {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical decimal form: "3", "-1/2".
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Accepts "7", "-3", "5/6". Throws std::invalid_argument otherwise.
Rational parse_rational(std::string_view text);

}  // namespace nilfree
