#include "chebmom/poly_text.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "chebmom/chebyshev.hpp"

namespace chebmom {

namespace {

std::string trimmed(const std::string& s) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, last - first + 1);
}

unsigned parse_degree(const std::string& digits, const std::string& term) {
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(),
                                       [](unsigned char c) { return std::isdigit(c); })) {
        throw std::invalid_argument("bad polynomial term '" + term + "': expected Tk or dTk");
    }
    return static_cast<unsigned>(std::stoul(digits));
}

RatPoly parse_sugar_term(const std::string& raw) {
    const std::string term = trimmed(raw);
    if (term.empty()) {
        throw std::invalid_argument("empty polynomial term");
    }
    const auto tpos = term.find('T');
    if (tpos == std::string::npos) {
        return RatPoly::constant(parse_rational(term));
    }
    const bool differentiate = tpos > 0 && term[tpos - 1] == 'd';
    std::string coeff_text = trimmed(term.substr(0, differentiate ? tpos - 1 : tpos));
    if (!coeff_text.empty() && coeff_text.back() == '*') {
        coeff_text = trimmed(coeff_text.substr(0, coeff_text.size() - 1));
    }
    const Rat coeff = coeff_text.empty() ? Rat(1) : parse_rational(coeff_text);
    const unsigned k = parse_degree(trimmed(term.substr(tpos + 1)), term);
    RatPoly base = chebyshev(k);
    if (differentiate) {
        base = derivative(base);
    }
    return coeff * std::move(base);
}

RatPoly parse_sugar(const std::string& text) {
    RatPoly result;
    std::string term;
    Rat sign(1);
    bool at_term_start = true;
    for (char c : text) {
        if ((c == '+' || c == '-') && !at_term_start) {
            result += sign * parse_sugar_term(term);
            term.clear();
            sign = (c == '-') ? Rat(-1) : Rat(1);
            at_term_start = true;
            continue;
        }
        if (c == '-' && at_term_start && trimmed(term).empty()) {
            sign = -sign;
            continue;
        }
        if (!std::isspace(static_cast<unsigned char>(c))) {
            at_term_start = false;
        }
        term += c;
    }
    result += sign * parse_sugar_term(term);
    return result;
}

}  // namespace

RatPoly parse_poly_spec(const std::string& text) {
    const std::string spec = trimmed(text);
    if (spec.empty()) {
        throw std::invalid_argument("empty polynomial spec");
    }
    if (spec.find('T') != std::string::npos) {
        return parse_sugar(spec);
    }
    return parse_coeff_list(spec);
}

}  // namespace chebmom
