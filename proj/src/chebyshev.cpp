#include "chebmom/chebyshev.hpp"

#include <stdexcept>
#include <utility>

namespace chebmom {

std::vector<RatPoly> chebyshev_table(unsigned max_degree) {
    std::vector<RatPoly> table;
    table.reserve(max_degree + 1);
    table.push_back(RatPoly::constant(Rat(1)));
    if (max_degree == 0) {
        return table;
    }
    table.push_back(RatPoly::identity());
    const RatPoly two_z = RatPoly::monomial(Rat(2), 1);
    for (unsigned k = 2; k <= max_degree; ++k) {
        table.push_back(two_z * table[k - 1] - table[k - 2]);
    }
    return table;
}

RatPoly chebyshev(unsigned n) {
    return chebyshev_table(n).back();
}

RatPoly chebyshev_u(unsigned n) {
    RatPoly prev = RatPoly::constant(Rat(1));
    if (n == 0) {
        return prev;
    }
    RatPoly cur = RatPoly::monomial(Rat(2), 1);
    const RatPoly two_z = RatPoly::monomial(Rat(2), 1);
    for (unsigned k = 2; k <= n; ++k) {
        RatPoly next = two_z * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ChebExpansion::ChebExpansion(std::map<unsigned, Rat> terms) : terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        it = (it->second == 0) ? terms_.erase(it) : std::next(it);
    }
}

ChebExpansion ChebExpansion::of(const RatPoly& p) {
    ChebExpansion e;
    if (p.is_zero()) {
        return e;
    }
    const auto table = chebyshev_table(static_cast<unsigned>(p.degree()));
    RatPoly rem = p;
    while (!rem.is_zero()) {
        const int m = rem.degree();
        if (m == 0) {
            e.terms_.emplace(0u, rem.coeff(0));
            break;
        }
        Rat c = rem.leading() / Rat(two_pow(static_cast<unsigned>(m - 1)));
        rem -= c * table[static_cast<unsigned>(m)];
        e.terms_.emplace(static_cast<unsigned>(m), std::move(c));
    }
    return e;
}

RatPoly ChebExpansion::reconstruct() const {
    if (terms_.empty()) {
        return RatPoly{};
    }
    const auto table = chebyshev_table(terms_.rbegin()->first);
    RatPoly out;
    for (const auto& [m, c] : terms_) {
        out += c * table[m];
    }
    return out;
}

Rat ChebExpansion::coeff(unsigned m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool joukowski_identity_holds(unsigned d) {
    if (d == 0) {
        throw std::invalid_argument("joukowski identity needs d >= 1");
    }
    const RatPoly t = chebyshev(d);
    const RatPoly num{Rat(1), Rat(0), Rat(1)};  // z^2 + 1
    const RatPoly den{Rat(0), Rat(2)};          // 2z

    // S = sum_k a_k num^k den^(d-k), so T_d(num/den) = S / den^d.
    std::vector<RatPoly> den_pow(d + 1);
    den_pow[0] = RatPoly::constant(Rat(1));
    for (unsigned k = 1; k <= d; ++k) {
        den_pow[k] = den_pow[k - 1] * den;
    }
    RatPoly cleared;
    RatPoly num_pow = RatPoly::constant(Rat(1));
    for (unsigned k = 0; k <= d; ++k) {
        cleared += t.coeff(k) * (num_pow * den_pow[d - k]);
        if (k < d) {
            num_pow = num_pow * num;
        }
    }

    const RatPoly lhs = Rat(2) * (RatPoly::monomial(Rat(1), d) * cleared);
    RatPoly rhs = RatPoly::monomial(Rat(1), 2 * d) + RatPoly::constant(Rat(1));
    rhs = rhs * den_pow[d];
    return lhs == rhs;
}

}  // namespace chebmom
