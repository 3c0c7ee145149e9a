#include "chebmom/rat_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace chebmom {

RatPoly::RatPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

RatPoly::RatPoly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
    normalize();
}

RatPoly RatPoly::constant(Rat c) {
    RatPoly p;
    if (c != 0) {
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

RatPoly RatPoly::monomial(Rat c, unsigned power) {
    RatPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Rat(0));
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

RatPoly RatPoly::identity() {
    return RatPoly{Rat(0), Rat(1)};
}

const Rat& RatPoly::leading() const {
    if (coeffs_.empty()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Rat RatPoly::coeff(unsigned power) const {
    return power < coeffs_.size() ? coeffs_[power] : Rat(0);
}

Rat RatPoly::operator()(const Rat& x) const {
    Rat acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Rat(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RatPoly& RatPoly::operator*=(const Rat& s) {
    if (s == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) {
        c *= s;
    }
    return *this;
}

void RatPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

RatPoly operator-(RatPoly p) {
    return Rat(-1) * std::move(p);
}

RatPoly operator+(RatPoly lhs, const RatPoly& rhs) {
    lhs += rhs;
    return lhs;
}

RatPoly operator-(RatPoly lhs, const RatPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return RatPoly{};
    }
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return RatPoly(std::move(out));
}

RatPoly operator*(const Rat& s, RatPoly p) {
    p *= s;
    return p;
}

RatPoly pow(const RatPoly& base, unsigned exponent) {
    RatPoly result = RatPoly::constant(Rat(1));
    RatPoly sq = base;
    unsigned e = exponent;
    while (e > 0) {
        if (e & 1u) {
            result = result * sq;
        }
        e >>= 1u;
        if (e > 0) {
            sq = sq * sq;
        }
    }
    return result;
}

RatPoly compose(const RatPoly& outer, const RatPoly& inner) {
    RatPoly acc;
    const auto& c = outer.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        acc = acc * inner + RatPoly::constant(*it);
    }
    return acc;
}

RatPoly derivative(const RatPoly& p) {
    if (p.degree() < 1) {
        return RatPoly{};
    }
    std::vector<Rat> out(p.coeffs().size() - 1);
    for (std::size_t i = 1; i < p.coeffs().size(); ++i) {
        out[i - 1] = Rat(static_cast<long>(i)) * p.coeffs()[i];
    }
    return RatPoly(std::move(out));
}

RatPoly antiderivative(const RatPoly& p) {
    if (p.is_zero()) {
        return RatPoly{};
    }
    std::vector<Rat> out(p.coeffs().size() + 1, Rat(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        out[i + 1] = p.coeffs()[i] / Rat(static_cast<long>(i + 1));
    }
    return RatPoly(std::move(out));
}

RatDivMod divmod_monic(const RatPoly& dividend, const RatPoly& divisor) {
    if (divisor.is_zero() || divisor.leading() != 1) {
        throw std::invalid_argument("divmod_monic requires a monic divisor");
    }
    const int dd = divisor.degree();
    std::vector<Rat> rem = dividend.coeffs();
    if (dividend.degree() < dd) {
        return {RatPoly{}, dividend};
    }
    std::vector<Rat> quot(dividend.degree() - dd + 1, Rat(0));
    for (int k = dividend.degree(); k >= dd; --k) {
        Rat c = rem[k];
        if (c == 0) {
            continue;
        }
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= c * divisor.coeffs()[j];
        }
    }
    return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

namespace {

std::string trimmed(const std::string& s) {
    auto first = s.find_first_not_of(" \t");
    auto last = s.find_last_not_of(" \t");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, last - first + 1);
}

}  // namespace

RatPoly parse_coeff_list(const std::string& text) {
    std::vector<Rat> coeffs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        coeffs.push_back(parse_rational(trimmed(token)));
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("empty coefficient list");
    }
    return RatPoly(std::move(coeffs));
}

std::string format_coeff_list(const RatPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

std::string pretty(const RatPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::string out;
    for (int k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(static_cast<unsigned>(k));
        if (c == 0) {
            continue;
        }
        const bool negative = c < 0;
        Rat mag = negative ? Rat(-c) : c;
        if (out.empty()) {
            if (negative) {
                out += '-';
            }
        } else {
            out += negative ? " - " : " + ";
        }
        const bool unit = (mag == 1) && k != 0;
        if (!unit) {
            out += to_string(mag);
        }
        if (k > 0) {
            out += 'z';
            if (k > 1) {
                out += '^' + std::to_string(k);
            }
        }
    }
    return out;
}

}  // namespace chebmom
