#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mero {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP canonical form).
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) {
    return make_rat(Int(num), Int(den));
}

/// Integer part [q]: the floor, also for negative values.
inline Int floor_rat(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Int ceil_rat(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Renders "p/q", or just "p" when q = 1.
inline std::string rat_str(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Parses "p" or "p/q" with optional leading minus.
inline Rat parse_rat(const std::string& text) {
    Rat q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("parse_rat: zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace mero
