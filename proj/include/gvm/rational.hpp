#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace gvm {

using Rational = mpq_class;

// Accepts "p", "p/q", "-p/q" (whitespace trimmed). Throws InvalidArgument.
Rational parse_rational(std::string_view text);

// Canonical form: "3", "-1/2".
std::string to_string(const Rational& q);

std::vector<Rational> parse_rational_list(std::string_view text);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }
inline bool is_natural(const Rational& q) { return is_integer(q) && q >= 0; }
// q in (1/2)N, i.e. 2q is a non-negative integer.
inline bool is_half_natural(const Rational& q) { return q >= 0 && is_integer(Rational(2 * q)); }

long lcm_of_denominators(const std::vector<Rational>& v);

}  // namespace gvm
