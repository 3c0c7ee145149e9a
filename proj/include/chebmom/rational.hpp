#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace chebmom {

using Rat = mpq_class;
using Int = mpz_class;

inline Int two_pow(unsigned k) {
    Int r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
    return r;
}

// Parses "p" or "p/q" (ASCII digits, optional leading '-').
inline Rat parse_rational(const std::string& text) {
    if (text.empty()) {
        throw std::invalid_argument("empty rational literal");
    }
    Rat q;
    try {
        q = Rat(text, 10);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("bad rational literal: '" + text + "'");
    }
    if (q.get_den() == 0) {
        throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
    }
    q.canonicalize();
    return q;
}

// "p" or "p/q", lowest terms.
inline std::string to_string(const Rat& value) {
    return value.get_str();
}

}  // namespace chebmom
