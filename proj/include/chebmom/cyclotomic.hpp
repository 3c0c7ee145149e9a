#pragma once

#include <utility>
#include <vector>

#include "chebmom/bigfloat.hpp"
#include "chebmom/int_poly.hpp"
#include "chebmom/rat_poly.hpp"

namespace chebmom {

unsigned euler_phi(unsigned m);
std::vector<unsigned> divisors_of(unsigned m);  // ascending

// Phi_order: monic, degree phi(order), obtained by exact division of
// z^order - 1 by the cyclotomic polynomials of all proper divisors.
IntPoly cyclotomic_poly(unsigned order);

// Element of Q(eps_M), eps_M = exp(2 pi i / M), stored in the power basis
// 1, eps, ..., eps^(phi(M)-1), always reduced modulo Phi_M. The reduced form
// is canonical: two elements are equal iff their coordinate vectors are.
class CycloNum {
public:
    explicit CycloNum(unsigned order);  // zero
    static CycloNum from_rational(unsigned order, Rat value);
    static CycloNum root_power(unsigned order, long exponent);     // eps^exponent
    static CycloNum from_poly(unsigned order, const RatPoly& p);   // p(eps)

    unsigned order() const noexcept { return order_; }
    const std::vector<Rat>& coords() const noexcept { return coords_; }
    bool is_zero() const noexcept;

    CycloNum& operator+=(const CycloNum& rhs);
    CycloNum& operator-=(const CycloNum& rhs);
    CycloNum& operator*=(const Rat& s);

    // Maps eps_order to eps_new_order^(new_order/order); requires
    // order | new_order.
    CycloNum lift_to(unsigned new_order) const;

    friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
    friend bool operator==(const CycloNum&, const CycloNum&) = default;

private:
    unsigned order_;
    std::vector<Rat> coords_;
};

CycloNum operator+(CycloNum a, const CycloNum& b);
CycloNum operator-(CycloNum a, const CycloNum& b);
CycloNum operator*(const Rat& s, CycloNum x);

// Lifts both operands into Q(eps_lcm).
std::pair<CycloNum, CycloNum> to_common_order(const CycloNum& a, const CycloNum& b);

// p(x) by Horner in Q(eps).
CycloNum eval_poly(const RatPoly& p, const CycloNum& x);

// Numeric image under eps_M -> exp(2 pi i / M).
BigComplex embed(const CycloNum& x, unsigned precision_bits);

// Exact test of sum_k sign_k * eps_order^(e_k) == 0.
bool root_power_sum_zero(unsigned order, const std::vector<std::pair<int, long>>& terms);

// f(z) = z^(j1 d) + z^((n-j1) d) - z^(j2 d) - z^((n-j2) d), with equal
// exponents combined. Requires d | n and 0 <= j1, j2 <= n/2.
IntPoly section_f_poly(unsigned n, unsigned d, unsigned j1, unsigned j2);

// Phi_order | f in Z[z] (Phi is monic, so the division stays integral).
bool divides_cyclotomic(const IntPoly& f, unsigned order);

}  // namespace chebmom
