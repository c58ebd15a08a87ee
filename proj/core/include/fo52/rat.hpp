#pragma once

#include <gmpxx.h>

#include <string>

#include "fo52/errors.hpp"

namespace fo52 {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0;
// every constructor below canonicalizes, so values are always in lowest terms.
using Rat = mpq_class;

// Parses "p" or "p/q" (optional leading minus on either part). Rejects
// anything else, including q = 0.
Rat rat_parse(const std::string& s);

// Canonical form: "p/q", with "/q" omitted when q = 1.
std::string rat_str(const Rat& r);

inline Rat rat_of(long num, long den = 1) {
    if (den == 0) throw ParseError("rat_of: zero denominator");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline bool rat_is_zero(const Rat& r) { return sgn(r) == 0; }

} // namespace fo52
