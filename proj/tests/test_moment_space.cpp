#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "chebmom/chebyshev.hpp"
#include "chebmom/moment_space.hpp"
#include "test_support.hpp"

using namespace chebmom;

namespace {

const PointPair kSqrt3Pair{NodePair{6, 5, 1}};

RatPoly dT(unsigned k) {
    return derivative(chebyshev(k));
}

// Random rational combination of basis elements T_m'.
RatPoly random_member(std::mt19937_64& rng, const std::vector<unsigned>& degrees) {
    std::uniform_int_distribution<std::size_t> pick(0, degrees.size() - 1);
    std::uniform_int_distribution<int> count(1, 4);
    RatPoly q;
    for (int k = count(rng); k > 0; --k) {
        Rat c = testsup::random_rat(rng);
        if (c == 0) {
            c = 1;
        }
        q += c * dT(degrees[pick(rng)]);
    }
    return q;
}

}  // namespace

TEST_CASE("basis degrees: worked examples") {
    CHECK(basis_degrees(6, kSqrt3Pair, 6) == std::vector<unsigned>{2, 3, 4, 6});
    CHECK(basis_degrees(4, PointPair{NodePair{4, 0, 2}}, 8) == std::vector<unsigned>{4, 8});
    CHECK(basis_degrees(6, kSqrt3Pair, 0).empty());
}

TEST_CASE("membership: the T_6 counterexample is a certified member") {
    const MembershipVerdict v = is_member(6, dT(3) + dT(2), kSqrt3Pair);
    CHECK(v.member);
    CHECK(v.certified);
    REQUIRE(v.certificate.size() == 2);
    CHECK(v.certificate[0].m == 2);
    CHECK(v.certificate[0].c == 1);
    CHECK(v.certificate[0].d == 2);
    CHECK(v.certificate[1].m == 3);
    CHECK(v.certificate[1].c == 1);
    CHECK(v.certificate[1].d == 3);
    CHECK(v.violations.empty());
}

TEST_CASE("membership: T_5' is refuted with a moment witness") {
    const MembershipVerdict v = is_member(6, dT(5), kSqrt3Pair);
    CHECK_FALSE(v.member);
    CHECK(v.certified);
    CHECK(v.violations == std::vector<unsigned>{5});
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->first == 0);
    CHECK_FALSE(v.witness->second.is_zero());
}

TEST_CASE("membership: zero polynomial") {
    const MembershipVerdict v = is_member(6, RatPoly{}, kSqrt3Pair);
    CHECK(v.member);
    CHECK(v.certificate.empty());
    CHECK(v.certified);
}

TEST_CASE("certificate entries reassemble the primitive") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(trial % 7);
        const NodePair np = testsup::random_node_pair(rng, n);
        const auto degrees = basis_degrees(n, PointPair{np}, 3 * n);
        if (degrees.empty()) {
            continue;
        }
        const RatPoly q = random_member(rng, degrees);
        const MembershipVerdict v = is_member(n, q, PointPair{np});
        REQUIRE(v.member);
        const RatPoly primitive = antiderivative(q);
        RatPoly rebuilt = RatPoly::constant(ChebExpansion::of(primitive).coeff(0));
        for (const auto& entry : v.certificate) {
            CHECK(entry.d == std::gcd(n, entry.m));
            CHECK(cheb_equal_at(PointPair{np}, entry.d).value);
            rebuilt += entry.c * chebyshev(entry.m);
        }
        CHECK(rebuilt == primitive);
    }
}

TEST_CASE("composition condition: worked examples") {
    std::vector<DivisorProbe> transcript;
    const auto w2 = composition_condition(6, chebyshev(2), kSqrt3Pair, &transcript);
    REQUIRE(w2.has_value());
    CHECK(w2->w == 2);
    CHECK(w2->outer == chebyshev(3));
    CHECK(w2->inner_image == RatPoly::identity());
    // Largest-first search probed 6 and 3 before succeeding at 2.
    CHECK(transcript.size() == 3);
    CHECK(transcript[0].w == 6);
    CHECK(transcript[1].w == 3);

    const auto w3 = composition_condition(6, chebyshev(3), kSqrt3Pair);
    REQUIRE(w3.has_value());
    CHECK(w3->w == 3);
    CHECK(w3->outer == chebyshev(2));

    const auto whole = composition_condition(6, chebyshev(6), kSqrt3Pair);
    REQUIRE(whole.has_value());
    CHECK(whole->w == 6);
    CHECK(whole->outer == RatPoly::identity());

    std::vector<DivisorProbe> refutation;
    CHECK_FALSE(composition_condition(6, chebyshev(3) + chebyshev(2), kSqrt3Pair, &refutation));
    REQUIRE(refutation.size() == 3);
    for (const auto& probe : refutation) {
        CHECK(probe.endpoint_equal);  // w in {2, 3, 6} all pass the endpoint test here
        CHECK_FALSE(probe.decomposable);
        CHECK_FALSE(probe.offending.empty());
    }
}

TEST_CASE("composition witnesses always certify membership of the derivative") {
    std::mt19937_64 rng(61);
    for (unsigned w : {2u, 3u, 6u}) {
        for (int trial = 0; trial < 10; ++trial) {
            const RatPoly s = testsup::random_poly(rng, 4);
            const RatPoly big_q = compose(s, chebyshev(w));
            if (auto witness = composition_condition(6, big_q, kSqrt3Pair)) {
                CHECK(compose(witness->inner_image, chebyshev(witness->w)) == big_q);
                CHECK(compose(witness->outer, chebyshev(witness->w)) == chebyshev(6));
                CHECK(is_member(6, derivative(big_q), kSqrt3Pair).member);
            } else {
                CHECK(s.degree() < 1);  // only constants can dodge every divisor here
            }
        }
    }
}

TEST_CASE("counterexample generation: worked examples") {
    const auto found = counterexample(6, kSqrt3Pair);
    REQUIRE(found.has_value());
    CHECK(found->m1 == 2);
    CHECK(found->m2 == 3);
    CHECK(found->q == dT(3) + dT(2));
    CHECK(found->member_proof.member);
    CHECK(found->member_proof.certified);
    CHECK(found->transcript.size() == 3);
    for (const auto& probe : found->transcript) {
        CHECK_FALSE((probe.endpoint_equal && probe.decomposable));
    }

    CHECK_FALSE(counterexample(4, PointPair{NodePair{4, 0, 2}}).has_value());
    CHECK_FALSE(counterexample(5, PointPair{NodePair{5, 1, 3}}).has_value());
}

TEST_CASE("basis elements pass the exact moment oracle") {
    std::mt19937_64 rng(67);
    for (unsigned n = 2; n <= 6; ++n) {
        const NodePair np = testsup::random_node_pair(rng, n);
        for (unsigned m : basis_degrees(n, PointPair{np}, 3 * n)) {
            for (const auto& value : moment_sweep(n, dT(m), PointPair{np}, 8)) {
                CHECK(value.exact());
                CHECK(value.is_zero());
            }
        }
    }
}

TEST_CASE("verdicts agree with the exact moment oracle on random inputs") {
    std::mt19937_64 rng(71);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        const unsigned n = 2 + static_cast<unsigned>(trial % 7);
        const NodePair np = testsup::random_node_pair(rng, n);
        const PointPair pair{np};
        RatPoly q;
        if (trial % 2 == 0) {
            const auto degrees = basis_degrees(n, pair, 12);
            if (degrees.empty()) {
                continue;
            }
            q = random_member(rng, degrees);
        } else {
            q = testsup::random_poly(rng, 12);
        }
        const MembershipVerdict v = is_member(n, q, pair);
        if (v.member) {
            for (const auto& value : moment_sweep(n, q, pair, 24)) {
                CHECK(value.is_zero());
            }
        } else {
            const auto witness = first_nonzero_moment(n, q, pair, 24);
            REQUIRE_MESSAGE(witness.has_value(),
                            "no moment witness within the bound for a refuted q");
            CHECK(*witness <= 24);
        }
        ++checked;
    }
    CHECK(checked >= 30);
}
