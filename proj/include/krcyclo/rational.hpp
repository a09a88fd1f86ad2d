#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace krcyclo {

// Exact rational scalar. mpq keeps values in lowest terms with positive
// denominator; every entry point from text re-canonicalizes.
using QQ = boost::multiprecision::mpq_rational;
using ZZ = boost::multiprecision::mpz_int;

// Parses "p" or "p/q". Throws std::invalid_argument on malformed input or
// zero denominator.
QQ parse_rational(const std::string& text);

std::string to_string(const QQ& value);

} // namespace krcyclo
