#include "chebmom/moment_space.hpp"

#include <algorithm>
#include <numeric>

#include "chebmom/chebyshev.hpp"
#include "chebmom/cyclotomic.hpp"
#include "chebmom/representation.hpp"

namespace chebmom {

std::vector<unsigned> basis_degrees(unsigned n, const PointPair& pair, unsigned m_max) {
    std::vector<unsigned> degrees;
    for (unsigned m = 1; m <= m_max; ++m) {
        if (cheb_equal_at(pair, std::gcd(n, m)).value) {
            degrees.push_back(m);
        }
    }
    return degrees;
}

MembershipVerdict is_member(unsigned n, const RatPoly& q, const PointPair& pair,
                            unsigned witness_i_max) {
    MembershipVerdict verdict;
    verdict.member = true;
    const ChebExpansion expansion = ChebExpansion::of(antiderivative(q));
    for (const auto& [m, c] : expansion.terms()) {
        if (m == 0) {
            continue;  // the integration constant carries no moment
        }
        const unsigned d = std::gcd(n, m);
        const CertifiedBool eq = cheb_equal_at(pair, d);
        verdict.certified = verdict.certified && eq.certified;
        if (eq.value) {
            verdict.certificate.push_back({m, c, d});
        } else {
            verdict.member = false;
            verdict.violations.push_back(m);
        }
    }
    if (!verdict.member) {
        verdict.certificate.clear();
        if (auto i = first_nonzero_moment(n, q, pair, witness_i_max)) {
            verdict.witness = std::make_pair(*i, moment(n, q, pair, *i));
        }
    }
    return verdict;
}

std::optional<CompositionWitness> composition_condition(unsigned n, const RatPoly& Q,
                                                        const PointPair& pair,
                                                        std::vector<DivisorProbe>* transcript) {
    std::vector<unsigned> divs = divisors_of(n);
    std::sort(divs.rbegin(), divs.rend());
    for (unsigned w : divs) {
        if (w < 2) {
            continue;
        }
        DivisorProbe probe;
        probe.w = w;
        probe.endpoint_equal = cheb_equal_at(pair, w).value;
        std::optional<RatPoly> inner = try_decompose_through(Q, w, &probe.offending);
        probe.decomposable = inner.has_value();
        if (transcript) {
            transcript->push_back(probe);
        }
        if (probe.endpoint_equal && inner) {
            return CompositionWitness{w, chebyshev(n / w), std::move(*inner)};
        }
    }
    return std::nullopt;
}

std::optional<Counterexample> counterexample(unsigned n, const PointPair& pair) {
    std::vector<unsigned> degrees = basis_degrees(n, pair, n);
    std::erase_if(degrees, [](unsigned m) { return m < 2; });
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        for (std::size_t j = i + 1; j < degrees.size(); ++j) {
            const unsigned m1 = degrees[i];
            const unsigned m2 = degrees[j];
            if (std::gcd(m1, m2) != 1) {
                continue;
            }
            Counterexample out;
            out.m1 = m1;
            out.m2 = m2;
            out.q = derivative(chebyshev(m1)) + derivative(chebyshev(m2));
            out.member_proof = is_member(n, out.q, pair);
            // Coprimality blocks every divisor w >= 2, so the search comes
            // back empty; its transcript is the refutation evidence.
            if (composition_condition(n, antiderivative(out.q), pair, &out.transcript)) {
                throw std::logic_error("coprime basis degrees admitted a composition witness");
            }
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace chebmom
