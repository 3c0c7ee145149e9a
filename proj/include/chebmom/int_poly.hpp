#pragma once

#include <initializer_list>
#include <vector>

#include "chebmom/rat_poly.hpp"
#include "chebmom/rational.hpp"

namespace chebmom {

// Dense univariate polynomial over Z, ascending coefficients, top stored
// coefficient nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<Int> coeffs);

    static IntPoly monomial(Int c, unsigned power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& leading() const;
    Int coeff(unsigned power) const;
    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);

    RatPoly to_rat() const;

    friend bool operator==(const IntPoly&, const IntPoly&) noexcept = default;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPoly operator+(IntPoly lhs, const IntPoly& rhs);
IntPoly operator-(IntPoly lhs, const IntPoly& rhs);
IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

struct IntDivMod {
    IntPoly quotient;
    IntPoly remainder;
};
// Division with remainder by a monic divisor; everything stays in Z[z].
IntDivMod divmod_monic(const IntPoly& dividend, const IntPoly& divisor);

}  // namespace chebmom
