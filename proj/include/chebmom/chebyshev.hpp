#pragma once

#include <map>
#include <vector>

#include "chebmom/rat_poly.hpp"

namespace chebmom {

// T_n, first kind: T_0 = 1, T_1 = z, T_{k+1} = 2 z T_k - T_{k-1}.
// Leading coefficient 2^(n-1) for n >= 1.
RatPoly chebyshev(unsigned n);

// T_0 .. T_max_degree computed in one recurrence pass.
std::vector<RatPoly> chebyshev_table(unsigned max_degree);

// U_n, second kind; T_m' = m * U_{m-1}.
RatPoly chebyshev_u(unsigned n);

// A polynomial written as sum_m terms[m] * T_m. Stored coefficients are
// nonzero, so equal polynomials have identical term maps.
class ChebExpansion {
public:
    ChebExpansion() = default;
    explicit ChebExpansion(std::map<unsigned, Rat> terms);

    // Greedy elimination of the leading term: while deg >= 1 the remainder's
    // leading coefficient fixes c_m = lc / 2^(m-1); the degree strictly drops
    // each round, so the loop terminates with an exact expansion.
    static ChebExpansion of(const RatPoly& p);

    RatPoly reconstruct() const;

    const std::map<unsigned, Rat>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    Rat coeff(unsigned m) const;

    friend bool operator==(const ChebExpansion&, const ChebExpansion&) = default;

private:
    std::map<unsigned, Rat> terms_;
};

// Exact check of the cleared-denominator identity
//   2 z^d T_d((z^2 + 1) / (2z)) = z^(2d) + 1.
// The left side is assembled over the denominator (2z)^d; the identity holds
// iff the cleared polynomials match coefficient-for-coefficient.
bool joukowski_identity_holds(unsigned d);

}  // namespace chebmom
