#pragma once

#include <gmpxx.h>

#include <string>

namespace coordmech {

/// Exact rational number. All costs, potentials and identities in this
/// library are computed in Rat; floating point appears only where an
/// irrational threshold (pi/4, pi/2, golden ratio) has to be compared.
using Rat = mpq_class;

/// Canonical rational from an integer pair. Throws on zero denominator.
Rat make_rat(long long num, long long den = 1);

/// Parse "12", "-3", or "num/den". Throws std::invalid_argument on
/// malformed text or zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical text form: "n" when the denominator is 1, else "n/d".
std::string rat_to_string(const Rat& q);

double to_double(const Rat& q);

}  // namespace coordmech
