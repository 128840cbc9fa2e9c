#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lieco {

/// Exact rational scalar. Always canonicalized (gcd 1, positive denominator).
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Parses "p/q", a plain integer, or a decimal with at most 9 fraction
/// digits (converted exactly). Throws std::invalid_argument otherwise.
Rat rat_parse(const std::string& text);

/// Canonical form: "p" when the denominator is 1, else "p/q".
std::string rat_str(const Rat& r);

double rat_d(const Rat& r);

std::string ratvec_str(const RatVec& v);

/// Parses a comma separated list of rationals.
RatVec ratvec_parse_csv(const std::string& text);

} // namespace lieco
