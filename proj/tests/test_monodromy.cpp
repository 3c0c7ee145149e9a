#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "chebmom/chebyshev.hpp"
#include "chebmom/moment_space.hpp"
#include "chebmom/monodromy.hpp"
#include "test_support.hpp"

using namespace chebmom;

namespace {

const PointPair kSqrt3Pair{NodePair{6, 5, 1}};

std::complex<double> cheb_value(unsigned k, std::complex<double> z) {
    std::complex<double> prev = 1.0;
    if (k == 0) {
        return prev;
    }
    std::complex<double> cur = z;
    for (unsigned i = 2; i <= k; ++i) {
        const std::complex<double> next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace

TEST_CASE("permutations: worked examples") {
    const auto p6 = perms(6);
    CHECK(p6.around_infinity.images() == std::vector<unsigned>{1, 2, 3, 4, 5, 0});
    CHECK(p6.around_minus_one.images() == std::vector<unsigned>{5, 4, 3, 2, 1, 0});
    CHECK(p6.around_one.images() == std::vector<unsigned>{0, 5, 4, 3, 2, 1});
    CHECK(p6.around_minus_one.cycle_string() == "(0 5)(1 4)(2 3)");
    CHECK(p6.around_one.cycle_string() == "(1 5)(2 4)");

    const auto p2 = perms(2);
    CHECK(p2.around_infinity.images() == std::vector<unsigned>{1, 0});
    CHECK(p2.around_minus_one.images() == std::vector<unsigned>{1, 0});
    CHECK(p2.around_one.is_identity());

    const auto p1 = perms(1);
    CHECK(p1.around_infinity.is_identity());
    CHECK(p1.around_minus_one.is_identity());
    CHECK(p1.around_one.is_identity());
}

TEST_CASE("permutation plumbing") {
    const Permutation p({1, 2, 0});
    CHECK((p * p.inverse()).is_identity());
    CHECK(p.cycle_string() == "(0 1 2)");
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);
}

TEST_CASE("product relation and involution structure") {
    for (unsigned n = 1; n <= 50; ++n) {
        const auto p = perms(n);
        CHECK((p.around_infinity * p.around_minus_one * p.around_one).is_identity());
        CHECK((p.around_one * p.around_one).is_identity());
        CHECK((p.around_minus_one * p.around_minus_one).is_identity());

        unsigned fixed_one = 0;
        unsigned fixed_minus = 0;
        for (unsigned j = 0; j < n; ++j) {
            fixed_one += p.around_one(j) == j;
            fixed_minus += p.around_minus_one(j) == j;
        }
        CHECK(fixed_one == (n == 1 ? 1 : (n % 2 == 0 ? 2 : 1)));
        CHECK(fixed_minus == (n % 2 == 1 ? 1 : 0));
    }
}

TEST_CASE("the two rotations generate the dihedral group of order 2n") {
    for (unsigned n = 3; n <= 20; ++n) {
        const auto p = perms(n);
        std::set<std::vector<unsigned>> closure{Permutation::identity(n).images()};
        std::vector<Permutation> frontier{Permutation::identity(n)};
        while (!frontier.empty()) {
            std::vector<Permutation> next;
            for (const auto& g : frontier) {
                for (const auto& gen : {p.around_one, p.around_minus_one}) {
                    Permutation h = gen * g;
                    if (closure.insert(h.images()).second) {
                        next.push_back(std::move(h));
                    }
                }
            }
            frontier = std::move(next);
        }
        CHECK(closure.size() == 2 * n);
    }
}

TEST_CASE("branch evaluation: anchor value and inverse property") {
    CHECK(std::abs(branch_eval(6, 0, {0.5, 0.0}) -
                   std::complex<double>{std::cos(M_PI / 18.0), 0.0}) < 1e-15);

    // Branch 0 maps (-1,1) into (cos(pi/n), 1).
    for (double x : {-0.99, -0.5, 0.0, 0.5, 0.99}) {
        const auto v = branch_eval(6, 0, {x, 0.0});
        CHECK(v.imag() == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(v.real() > std::cos(M_PI / 6.0));
        CHECK(v.real() < 1.0);
    }

    std::mt19937_64 rng(97);
    std::uniform_real_distribution<double> coord(-2.0, 2.0);
    for (unsigned n = 1; n <= 8; ++n) {
        for (unsigned j = 0; j < n; ++j) {
            int done = 0;
            while (done < 100) {
                const std::complex<double> z{coord(rng), coord(rng)};
                if (std::abs(z - 1.0) < 1e-2 || std::abs(z + 1.0) < 1e-2) {
                    continue;
                }
                CHECK(std::abs(cheb_value(n, branch_eval(n, j, z)) - z) < 1e-10);
                ++done;
            }
        }
    }

    CHECK_THROWS_AS(branch_eval(6, 0, {1.0, 0.0}), BranchPointError);
    CHECK_THROWS_AS(branch_eval(6, 0, {-1.0, 0.0}), BranchPointError);
    CHECK_THROWS_AS(branch_eval(6, 6, {0.5, 0.0}), std::invalid_argument);
}

TEST_CASE("branch limits reach the nodes at the critical values") {
    for (unsigned n = 2; n <= 10; ++n) {
        for (unsigned j = 0; j < n; ++j) {
            const auto at_one = branch_limit(n, j, {1.0, 0.0});
            CHECK(std::abs(at_one.real() - std::cos(2.0 * M_PI * j / n)) < 1e-14);
            CHECK(std::abs(cheb_value(n, at_one) - 1.0) < 1e-12);

            const auto at_minus = branch_limit(n, j, {-1.0, 0.0});
            CHECK(std::abs(at_minus.real() - std::cos((2.0 * j + 1.0) * M_PI / n)) < 1e-14);
            CHECK(std::abs(cheb_value(n, at_minus) + 1.0) < 1e-12);
        }
    }
    // Worked value: branch 2 of the inverse of T_6 lands at cos(5 pi/6).
    CHECK(std::abs(branch_limit(6, 2, {-1.0, 0.0}).real() + std::sqrt(3.0) / 2.0) < 1e-15);
}

TEST_CASE("a clockwise turn at large |z| shifts every branch label by one") {
    for (unsigned n = 2; n <= 8; ++n) {
        const double radius = 6.0;
        const int steps = 360;
        std::vector<unsigned> landing(n);
        for (unsigned j = 0; j < n; ++j) {
            unsigned label = j;
            std::complex<double> value =
                branch_eval(n, j, radius * std::exp(std::complex<double>(0.0, 0.3)));
            for (int k = 1; k <= steps; ++k) {
                const std::complex<double> z =
                    radius * std::exp(std::complex<double>(0.0, 0.3 - 2.0 * M_PI * k / steps));
                double best = 1e300;
                for (unsigned jj = 0; jj < n; ++jj) {
                    const double dist = std::abs(branch_eval(n, jj, z) - value);
                    if (dist < best) {
                        best = dist;
                        label = jj;
                    }
                }
                value = branch_eval(n, label, z);
            }
            landing[j] = label;
        }
        // One full loop must act as a single cyclic shift, the same for all j.
        const unsigned delta = (landing[0] + n - 0) % n;
        CHECK((delta == 1 || delta == n - 1));
        for (unsigned j = 0; j < n; ++j) {
            CHECK(landing[j] == (j + delta) % n);
        }
    }
}

TEST_CASE("branch sets: worked examples") {
    const BranchSets classic = branch_sets(6, kSqrt3Pair);
    CHECK(classic.at_a == std::vector<unsigned>{2, 3});
    CHECK(classic.at_b == std::vector<unsigned>{0, 5});

    const BranchSets corner = branch_sets(4, PointPair{NodePair{4, 0, 2}});
    CHECK(corner.at_a == std::vector<unsigned>{0});
    CHECK(corner.at_b == std::vector<unsigned>{1, 3});

    // 1/2 and -1/2 are interior nodes of T_6, so the numerically matched sets
    // carry two branches each, mirroring the endpoint multiplicities.
    const BranchSets half = branch_sets(6, PointPair{RationalPair{Rat(1, 2), Rat(-1, 2)}});
    CHECK(half.at_a == std::vector<unsigned>{1, 5});
    CHECK(half.at_b == std::vector<unsigned>{2, 4});

    // Non-critical rational endpoints give singletons.
    const BranchSets wide = branch_sets(2, PointPair{RationalPair{Rat(2), Rat(-2)}});
    CHECK(wide.at_a.size() == 1);
    CHECK(wide.at_b.size() == 1);
    CHECK(wide.at_a != wide.at_b);

    // Generic shift pairs sit away from every node.
    const BranchSets shift = branch_sets(6, PointPair{ShiftPair{6, 1, false, {0.3, 0.4}, true}});
    CHECK(shift.at_a.size() == 1);
    CHECK(shift.at_b.size() == 1);
}

TEST_CASE("branch-sum residuals: members pass, T_5 fails") {
    const double member = check_condition5(6, chebyshev(3) + chebyshev(2), kSqrt3Pair, 20, 128);
    CHECK(member <= 1e-8);
    CHECK(member < 1e-15);

    const double violator = check_condition5(6, chebyshev(5), kSqrt3Pair, 20, 128);
    CHECK(violator > 1e-3);

    // Constant Q: both branch sums collapse to mult_a * mult_b * const.
    CHECK(check_condition5(6, RatPoly::constant(Rat(7)), kSqrt3Pair, 20, 128) == 0.0);
}

TEST_CASE("per-sample residuals are reported in order") {
    std::vector<double> residuals;
    const double max_residual =
        check_condition5(6, chebyshev(5), kSqrt3Pair, 12, 128, &residuals);
    CHECK(residuals.size() == 12);
    double best = 0.0;
    for (double r : residuals) {
        best = std::max(best, r);
    }
    CHECK(best == max_residual);
}

TEST_CASE("members satisfy the branch-sum identity across pairs and degrees") {
    std::mt19937_64 rng(101);
    for (unsigned n = 2; n <= 8; ++n) {
        const PointPair pair{testsup::random_node_pair(rng, n)};
        const auto degrees = basis_degrees(n, pair, 2 * n);
        if (degrees.empty()) {
            continue;
        }
        RatPoly q;
        for (unsigned m : degrees) {
            q += testsup::random_rat(rng) * derivative(chebyshev(m));
        }
        CHECK(check_condition5(n, antiderivative(q), pair, 20, 128) <= 1e-8);
    }

    // The same identity at a rational (hidden-node) pair.
    CHECK(check_condition5(6, chebyshev(2), PointPair{RationalPair{Rat(1, 2), Rat(-1, 2)}}, 20,
                           128) <= 1e-8);

    // And at a generic shift pair, where z0 is complex and the sampling
    // segment leaves the real line.
    const PointPair shift{ShiftPair{6, 3, false, {0.3, 0.4}, true}};
    CHECK(check_condition5(6, chebyshev(2), shift, 20, 128) <= 1e-8);
    CHECK(check_condition5(6, chebyshev(5), shift, 20, 128) > 1e-3);
}
