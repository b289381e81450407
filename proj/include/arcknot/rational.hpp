#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace arcknot {

/// Arbitrary precision rational, always kept in lowest terms.
using Rat = mpq_class;
using Int = mpz_class;

/// Parses "p", "-p", "p/q" or a plain decimal such as "0.25".
/// Throws Error(Parse) on anything else or on a zero denominator.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& r);

/// p/q in lowest terms. Throws Error(Parse) when q is zero.
Rat make_rat(const Int& p, const Int& q);

int sign(const Rat& r);
int sign(const Int& z);

}  // namespace arcknot
