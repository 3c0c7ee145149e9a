#pragma once

#include <random>
#include <vector>

#include "chebmom/points.hpp"
#include "chebmom/rat_poly.hpp"

namespace testsup {

inline chebmom::Rat random_rat(std::mt19937_64& rng, long num_bound = 9, long den_bound = 9) {
    std::uniform_int_distribution<long> num(-num_bound, num_bound);
    std::uniform_int_distribution<long> den(1, den_bound);
    chebmom::Rat q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

inline chebmom::RatPoly random_poly(std::mt19937_64& rng, unsigned max_degree,
                                    long num_bound = 9, long den_bound = 9) {
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    const unsigned d = deg(rng);
    std::vector<chebmom::Rat> coeffs;
    coeffs.reserve(d + 1);
    for (unsigned i = 0; i <= d; ++i) {
        coeffs.push_back(random_rat(rng, num_bound, den_bound));
    }
    return chebmom::RatPoly(std::move(coeffs));
}

// Any valid (p, q) for this n: shared parity, p != +-q (mod 2n). Exists for
// every n >= 2 (e.g. p=0, q=2).
inline chebmom::NodePair random_node_pair(std::mt19937_64& rng, unsigned n) {
    std::uniform_int_distribution<long> draw(0, 2L * n - 1);
    for (;;) {
        const long p = draw(rng);
        const long q = draw(rng);
        if ((p - q) % 2 != 0) {
            continue;
        }
        const long diff = ((p - q) % (2L * n) + 2L * n) % (2L * n);
        const long sum = ((p + q) % (2L * n) + 2L * n) % (2L * n);
        if (diff == 0 || sum == 0) {
            continue;
        }
        return chebmom::NodePair{n, p, q};
    }
}

}  // namespace testsup
