#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "chebmom/rational.hpp"

namespace chebmom {

// Dense univariate polynomial over Q. Coefficients are stored ascending by
// power of z; the top stored coefficient is nonzero, and the zero polynomial
// stores nothing (degree -1).
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs);
    RatPoly(std::initializer_list<Rat> coeffs);

    static RatPoly constant(Rat c);
    static RatPoly monomial(Rat c, unsigned power);
    static RatPoly identity();  // z

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Rat& leading() const;
    Rat coeff(unsigned power) const;
    const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }

    Rat operator()(const Rat& x) const;

    RatPoly& operator+=(const RatPoly& rhs);
    RatPoly& operator-=(const RatPoly& rhs);
    RatPoly& operator*=(const Rat& s);

    friend bool operator==(const RatPoly& lhs, const RatPoly& rhs) noexcept = default;

private:
    void normalize();
    std::vector<Rat> coeffs_;
};

RatPoly operator-(RatPoly p);
RatPoly operator+(RatPoly lhs, const RatPoly& rhs);
RatPoly operator-(RatPoly lhs, const RatPoly& rhs);
RatPoly operator*(const RatPoly& lhs, const RatPoly& rhs);
RatPoly operator*(const Rat& s, RatPoly p);
RatPoly pow(const RatPoly& base, unsigned exponent);

// outer(inner(z)); degree multiplies when both sides are nonconstant.
RatPoly compose(const RatPoly& outer, const RatPoly& inner);

RatPoly derivative(const RatPoly& p);
// The primitive with zero constant term, so derivative(antiderivative(p)) == p.
RatPoly antiderivative(const RatPoly& p);

struct RatDivMod {
    RatPoly quotient;
    RatPoly remainder;
};
// Long division by a monic divisor; exact over Q.
RatDivMod divmod_monic(const RatPoly& dividend, const RatPoly& divisor);

// Text format shared by the CLI and fixtures: comma-separated ascending
// coefficients, each "p" or "p/q", e.g. "-1,0,2" for 2z^2 - 1.
RatPoly parse_coeff_list(const std::string& text);
std::string format_coeff_list(const RatPoly& p);

// Pretty form for diagnostics, e.g. "2z^2 - 1".
std::string pretty(const RatPoly& p);

}  // namespace chebmom
