#include "chebmom/int_poly.hpp"

#include <stdexcept>
#include <utility>

namespace chebmom {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

IntPoly::IntPoly(std::initializer_list<Int> coeffs) : coeffs_(coeffs) {
    normalize();
}

IntPoly IntPoly::monomial(Int c, unsigned power) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, Int(0));
        p.coeffs_[power] = std::move(c);
    }
    return p;
}

const Int& IntPoly::leading() const {
    if (coeffs_.empty()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return coeffs_.back();
}

Int IntPoly::coeff(unsigned power) const {
    return power < coeffs_.size() ? coeffs_[power] : Int(0);
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size(), Int(0));
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

RatPoly IntPoly::to_rat() const {
    std::vector<Rat> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.emplace_back(c);
    }
    return RatPoly(std::move(out));
}

void IntPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

IntPoly operator+(IntPoly lhs, const IntPoly& rhs) {
    lhs += rhs;
    return lhs;
}

IntPoly operator-(IntPoly lhs, const IntPoly& rhs) {
    lhs -= rhs;
    return lhs;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) {
        return IntPoly{};
    }
    const auto& a = lhs.coeffs();
    const auto& b = rhs.coeffs();
    std::vector<Int> out(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return IntPoly(std::move(out));
}

IntDivMod divmod_monic(const IntPoly& dividend, const IntPoly& divisor) {
    if (!divisor.monic()) {
        throw std::invalid_argument("divmod_monic requires a monic divisor");
    }
    const int dd = divisor.degree();
    if (dividend.degree() < dd) {
        return {IntPoly{}, dividend};
    }
    std::vector<Int> rem = dividend.coeffs();
    std::vector<Int> quot(dividend.degree() - dd + 1, Int(0));
    for (int k = dividend.degree(); k >= dd; --k) {
        Int c = rem[k];
        if (c == 0) {
            continue;
        }
        quot[k - dd] = c;
        for (int j = 0; j <= dd; ++j) {
            rem[k - dd + j] -= c * divisor.coeffs()[j];
        }
    }
    return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

}  // namespace chebmom
