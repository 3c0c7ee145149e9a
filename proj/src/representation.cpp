#include "chebmom/representation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "chebmom/chebyshev.hpp"
#include "chebmom/moment_space.hpp"

namespace chebmom {

namespace {

std::string join_degrees(const std::vector<unsigned>& degrees) {
    std::ostringstream out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        out << (i ? ", " : "") << degrees[i];
    }
    return out.str();
}

long pos_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

MuSigns node_mu_signs(const NodePair& np, unsigned m) {
    const long two_n = 2L * np.n;
    const long pm = np.p * static_cast<long>(m);
    const long qm = np.q * static_cast<long>(m);
    return {pos_mod(pm - qm, two_n) == 0, pos_mod(pm + qm, two_n) == 0};
}

MuSigns shift_mu_signs(const ShiftPair& sp, unsigned m) {
    if (!sp.generic) {
        throw NonExactPair("mu signs need a generic shift pair");
    }
    // Genericity kills the v^m = w^m (inverted: v^m = w^-m) branch, so only
    // eps_n^(km) = 1 survives, with the orientation fixing the sign.
    const bool relation = pos_mod(sp.k * static_cast<long>(m), sp.n) == 0;
    return sp.inverted ? MuSigns{false, relation} : MuSigns{relation, false};
}

// For real rational x, the fixed preimage is v = x + sqrt(x^2-1) with the
// principal root, except x < -1 where the |v| >= 1 branch flips the root.
// Then v^m - v^-m = 2 s(m) with s(m) = r * sqrt(delta), r = U_(m-1)(x),
// delta = x^2 - 1 (the root sign folded into r).
struct RadicalPart {
    Rat r;      // U_(m-1)(x), negated when the flipped root was chosen
    Rat delta;  // x^2 - 1
};

RadicalPart radical_part(const Rat& x, unsigned m) {
    RadicalPart out;
    out.r = chebyshev_u(m - 1)(x);
    out.delta = x * x - 1;
    if (x < -1) {
        out.r = -out.r;
    }
    return out;
}

MuSigns rational_mu_signs(const RationalPair& rp, unsigned m) {
    const RatPoly t = chebyshev(m);
    if (t(rp.a) != t(rp.b)) {
        return {};
    }
    // T_m(a) = T_m(b) forces {v^m, v^-m} = {w^m, w^-m}; which matching holds
    // is read off the radical parts of v^m and w^m.
    const RadicalPart sa = radical_part(rp.a, m);
    const RadicalPart sb = radical_part(rp.b, m);
    const bool sa_zero = sa.r == 0 || sa.delta == 0;
    const bool sb_zero = sb.r == 0 || sb.delta == 0;
    if (sa_zero && sb_zero) {
        return {true, true};  // v^m = w^m = +-1
    }
    if (sa_zero || sb_zero) {
        return {};
    }
    if (sa.r * sa.r * sa.delta != sb.r * sb.r * sb.delta) {
        return {};
    }
    // Squares agree and both radicands share a sign, so s_a = +-s_b with the
    // sign carried entirely by the rational factors.
    const bool same = (sa.r > 0) == (sb.r > 0);
    return {same, !same};
}

}  // namespace

NotDecomposable::NotDecomposable(std::vector<unsigned> degrees)
    : std::runtime_error("polynomial does not factor through T_d; blocking degrees: " +
                         join_degrees(degrees)),
      offending(std::move(degrees)) {}

std::optional<RatPoly> try_decompose_through(const RatPoly& F, unsigned d,
                                             std::vector<unsigned>* offending) {
    if (d == 0) {
        throw std::invalid_argument("decompose_through needs d >= 1");
    }
    const ChebExpansion expansion = ChebExpansion::of(F);
    std::map<unsigned, Rat> inner;
    std::vector<unsigned> blockers;
    for (const auto& [m, c] : expansion.terms()) {
        if (m % d == 0) {
            inner.emplace(m / d, c);
        } else {
            blockers.push_back(m);
        }
    }
    if (!blockers.empty()) {
        if (offending) {
            *offending = std::move(blockers);
        }
        return std::nullopt;
    }
    return ChebExpansion(std::move(inner)).reconstruct();
}

RatPoly decompose_through(const RatPoly& F, unsigned d) {
    std::vector<unsigned> blockers;
    if (auto inner = try_decompose_through(F, d, &blockers)) {
        return std::move(*inner);
    }
    throw NotDecomposable(std::move(blockers));
}

MuSigns mu_signs(const PointPair& pair, unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("mu_signs needs m >= 1");
    }
    if (const auto* np = std::get_if<NodePair>(&pair)) {
        return node_mu_signs(*np, m);
    }
    if (const auto* sp = std::get_if<ShiftPair>(&pair)) {
        return shift_mu_signs(*sp, m);
    }
    if (const auto* rp = std::get_if<RationalPair>(&pair)) {
        return rational_mu_signs(*rp, m);
    }
    throw NonExactPair("mu signs are undefined for numeric pairs");
}

TwoTermRep two_term(unsigned n, const RatPoly& q, const PointPair& pair) {
    if (!is_exact_pair(pair)) {
        throw NonExactPair("two-term representation requires an exact pair; "
                           "a wrong mu sign would silently corrupt the group GCDs");
    }
    const MembershipVerdict verdict = is_member(n, q, pair, 0);
    if (!verdict.member) {
        throw NotAMember("q is not a member; violating degrees: " + join_degrees(verdict.violations));
    }

    const RatPoly primitive = antiderivative(q);
    const ChebExpansion expansion = ChebExpansion::of(primitive);

    TwoTermRep rep;
    rep.constant = expansion.coeff(0);
    if (expansion.terms().empty() ||
        (expansion.terms().size() == 1 && expansion.terms().begin()->first == 0)) {
        rep.d1 = rep.d2 = n;
        return rep;
    }

    // Assign degrees (descending) to a mu = +1 and a mu = -1 group. A degree
    // carrying both signs goes wherever the running GCD stays largest, ties
    // to the plus group.
    struct Group {
        unsigned g = 0;  // gcd so far; 0 = empty
        std::map<unsigned, Rat> terms;
        int mu = +1;
    };
    Group plus;
    Group minus;
    minus.mu = -1;
    for (auto it = expansion.terms().rbegin(); it != expansion.terms().rend(); ++it) {
        const auto& [m, c] = *it;
        if (m == 0) {
            continue;
        }
        const MuSigns signs = mu_signs(pair, m);
        if (signs.empty()) {
            throw std::logic_error("member degree lost its endpoint equality");
        }
        Group* target = nullptr;
        if (signs.has_plus() && signs.has_minus()) {
            const unsigned gp = std::gcd(plus.g, m);
            const unsigned gm = std::gcd(minus.g, m);
            target = (gp >= gm) ? &plus : &minus;
        } else {
            target = signs.has_plus() ? &plus : &minus;
        }
        target->g = std::gcd(target->g, m);
        target->terms.emplace(m, c);
    }

    auto collapse = [](const Group& group) -> RatPoly {
        std::map<unsigned, Rat> scaled;
        for (const auto& [m, c] : group.terms) {
            scaled.emplace(m / group.g, c);
        }
        return ChebExpansion(std::move(scaled)).reconstruct();
    };

    const Group* first = plus.g != 0 ? &plus : &minus;
    const Group* second = (first == &plus && minus.g != 0) ? &minus : nullptr;
    // Lead with the group holding the top degree.
    if (second && second->terms.rbegin()->first > first->terms.rbegin()->first) {
        std::swap(first, second);
    }

    rep.d1 = first->g;
    rep.A = collapse(*first);
    if (second) {
        rep.d2 = second->g;
        rep.B = collapse(*second);
    } else {
        rep.d2 = rep.d1;
    }

    // The shared mu sign guarantees T_g(a) = T_g(b) for each group gcd by the
    // Joukowski identity; a == b is the only way to land at g == 1.
    if (rep.d1 < 2 || rep.d2 < 2 || !cheb_equal_at(pair, rep.d1).value ||
        !cheb_equal_at(pair, rep.d2).value) {
        throw std::logic_error("group GCD lost the endpoint equality");
    }
    if (compose(rep.A, chebyshev(rep.d1)) + compose(rep.B, chebyshev(rep.d2)) +
            RatPoly::constant(rep.constant) !=
        primitive) {
        throw std::logic_error("two-term reconstruction mismatch");
    }
    return rep;
}

}  // namespace chebmom
