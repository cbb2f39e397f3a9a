#pragma once

#include <gmpxx.h>

#include <string>

#include "orbitclass/error.hpp"

namespace orbitclass {

// Arbitrary-precision integers for polynomial coefficients, rationals for
// matrix entries and evaluation. No floating point anywhere.
using Int = mpz_class;
using Rat = mpq_class;

// Parse "p/q", "-3/7" or plain integers ("12", -12). Throws ParseError.
inline Rat parse_rational(const std::string& s) {
    Rat q;
    if (s.empty() || q.set_str(s, 10) != 0)
        throw Error(ErrorKind::ParseError, "invalid rational literal: '" + s + "'");
    if (q.get_den() == 0)
        throw Error(ErrorKind::ParseError, "zero denominator in rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rational_to_string(const Rat& q) { return q.get_str(); }

}  // namespace orbitclass
