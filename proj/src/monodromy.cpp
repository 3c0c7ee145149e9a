#include "chebmom/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "chebmom/bigfloat.hpp"

namespace chebmom {

namespace {

long pos_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

bool is_real_branch_point(std::complex<double> z) {
    return z.imag() == 0.0 && (z.real() == 1.0 || z.real() == -1.0);
}

}  // namespace

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (unsigned v : images_) {
        if (v >= images_.size() || seen[v]) {
            throw std::invalid_argument("permutation images must be a bijection on 0..n-1");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(unsigned size) {
    std::vector<unsigned> images(size);
    std::iota(images.begin(), images.end(), 0u);
    return Permutation(std::move(images));
}

bool Permutation::is_identity() const {
    for (unsigned j = 0; j < size(); ++j) {
        if (images_[j] != j) {
            return false;
        }
    }
    return true;
}

Permutation Permutation::inverse() const {
    std::vector<unsigned> inv(images_.size());
    for (unsigned j = 0; j < size(); ++j) {
        inv[images_[j]] = j;
    }
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& lhs, const Permutation& rhs) {
    if (lhs.size() != rhs.size()) {
        throw std::invalid_argument("permutation size mismatch");
    }
    std::vector<unsigned> images(lhs.size());
    for (unsigned j = 0; j < lhs.size(); ++j) {
        images[j] = lhs.images_[rhs.images_[j]];
    }
    return Permutation(std::move(images));
}

std::string Permutation::cycle_string() const {
    std::ostringstream out;
    std::vector<bool> seen(size(), false);
    bool any = false;
    for (unsigned start = 0; start < size(); ++start) {
        if (seen[start] || images_[start] == start) {
            continue;
        }
        any = true;
        out << '(';
        unsigned j = start;
        bool first = true;
        do {
            out << (first ? "" : " ") << j;
            seen[j] = true;
            j = images_[j];
            first = false;
        } while (j != start);
        out << ')';
    }
    return any ? out.str() : "id";
}

MonodromyPerms perms(unsigned n) {
    if (n == 0) {
        throw std::invalid_argument("perms needs n >= 1");
    }
    std::vector<unsigned> one(n), minus_one(n), infinity(n);
    for (unsigned j = 0; j < n; ++j) {
        one[j] = static_cast<unsigned>(pos_mod(static_cast<long>(n) - static_cast<long>(j), n));
        minus_one[j] = n - 1 - j;
        infinity[j] = (j + 1) % n;
    }
    return {Permutation(std::move(one)), Permutation(std::move(minus_one)),
            Permutation(std::move(infinity))};
}

std::complex<double> branch_eval(unsigned n, unsigned j, std::complex<double> z) {
    if (j >= n) {
        throw std::invalid_argument("branch label out of range");
    }
    if (is_real_branch_point(z)) {
        throw BranchPointError("z = +-1 is a branch point of the inverse of T_n");
    }
    return std::cos((std::acos(z) + 2.0 * M_PI * static_cast<double>(j)) / static_cast<double>(n));
}

std::complex<double> branch_limit(unsigned n, unsigned j, std::complex<double> z0) {
    if (j >= n) {
        throw std::invalid_argument("branch label out of range");
    }
    if (is_real_branch_point(z0)) {
        const double base = z0.real() == 1.0 ? 0.0 : M_PI;
        return {std::cos((base + 2.0 * M_PI * static_cast<double>(j)) / static_cast<double>(n)), 0.0};
    }
    return branch_eval(n, j, z0);
}

namespace {

// Exact labels for an endpoint cos(p pi / n): reflect the exponent into
// [0, n], then split by parity.
std::vector<unsigned> node_branch_labels(unsigned n, long p) {
    long pc = pos_mod(p, 2L * n);
    if (pc > static_cast<long>(n)) {
        pc = 2L * n - pc;
    }
    std::vector<unsigned> labels;
    if (pc % 2 == 0) {
        const unsigned j1 = static_cast<unsigned>(pc / 2);
        labels.push_back(j1 % n);
        labels.push_back((n - j1) % n);
    } else {
        const unsigned j1 = static_cast<unsigned>((pc - 1) / 2);
        labels.push_back(j1);
        labels.push_back(n - 1 - j1);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return labels;
}

std::vector<unsigned> matched_branch_labels(unsigned n, std::complex<double> z0,
                                            std::complex<double> endpoint) {
    constexpr double kMatchTol = 1e-7;
    std::vector<unsigned> labels;
    for (unsigned j = 0; j < n; ++j) {
        if (std::abs(branch_limit(n, j, z0) - endpoint) <= kMatchTol) {
            labels.push_back(j);
        }
    }
    return labels;
}

}  // namespace

BranchSets branch_sets(unsigned n, const PointPair& pair) {
    BranchSets sets;
    const EndpointData data = endpoint_data(pair, n);
    if (const auto* np = std::get_if<NodePair>(&pair)) {
        sets.at_a = node_branch_labels(n, np->p);
        sets.at_b = node_branch_labels(n, np->q);
    } else {
        auto [a, b] = point_values(pair, 64);
        sets.at_a = matched_branch_labels(n, data.z0, a.to_complex());
        sets.at_b = matched_branch_labels(n, data.z0, b.to_complex());
    }
    if (sets.at_a.size() != static_cast<std::size_t>(data.mult_a) ||
        sets.at_b.size() != static_cast<std::size_t>(data.mult_b)) {
        throw std::logic_error("branch set sizes disagree with endpoint multiplicities");
    }
    return sets;
}

namespace {

double check5_real_path(unsigned n, const RatPoly& Q, double z0, const BranchSets& sets,
                        int mult_a, int mult_b, unsigned samples, unsigned bits,
                        std::vector<double>* per_sample) {
    const BigFloat two_pi = BigFloat::pi(bits) * BigFloat::of(2L, bits);
    const BigFloat nn = BigFloat::of(static_cast<long>(n), bits);
    const BigFloat z0_big = BigFloat::of(z0, bits);
    double max_residual = 0.0;
    for (unsigned t = 1; t <= samples; ++t) {
        const BigFloat zt =
            z0_big * BigFloat::of(static_cast<long>(samples + 1 - t), bits) /
            BigFloat::of(static_cast<long>(samples + 1), bits);
        const BigFloat theta = acos(zt);
        auto branch_sum = [&](const std::vector<unsigned>& labels) {
            BigFloat sum(bits);
            for (unsigned j : labels) {
                const BigFloat x = cos((theta + two_pi * BigFloat::of(static_cast<long>(j), bits)) / nn);
                sum += eval_poly(Q, x);
            }
            return sum;
        };
        const BigFloat residual = abs(BigFloat::of(static_cast<long>(mult_b), bits) * branch_sum(sets.at_a) -
                                      BigFloat::of(static_cast<long>(mult_a), bits) * branch_sum(sets.at_b));
        if (per_sample) {
            per_sample->push_back(residual.to_double());
        }
        max_residual = std::max(max_residual, residual.to_double());
    }
    return max_residual;
}

double check5_complex_path(unsigned n, const RatPoly& Q, std::complex<double> z0,
                           const BranchSets& sets, int mult_a, int mult_b, unsigned samples,
                           std::vector<double>* per_sample) {
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(Q.coeffs().size());
    for (const auto& c : Q.coeffs()) {
        coeffs.emplace_back(c.get_d(), 0.0);
    }
    auto eval_q = [&](std::complex<double> x) {
        std::complex<double> acc = 0.0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
            acc = acc * x + *it;
        }
        return acc;
    };
    double max_residual = 0.0;
    for (unsigned t = 1; t <= samples; ++t) {
        const std::complex<double> zt =
            z0 * (static_cast<double>(samples + 1 - t) / static_cast<double>(samples + 1));
        std::complex<double> sum_a = 0.0, sum_b = 0.0;
        for (unsigned j : sets.at_a) {
            sum_a += eval_q(branch_eval(n, j, zt));
        }
        for (unsigned j : sets.at_b) {
            sum_b += eval_q(branch_eval(n, j, zt));
        }
        const double residual = std::abs(static_cast<double>(mult_b) * sum_a -
                                         static_cast<double>(mult_a) * sum_b);
        if (per_sample) {
            per_sample->push_back(residual);
        }
        max_residual = std::max(max_residual, residual);
    }
    return max_residual;
}

}  // namespace

double check_condition5(unsigned n, const RatPoly& Q, const PointPair& pair, unsigned samples,
                        unsigned precision_bits, std::vector<double>* per_sample) {
    if (samples == 0) {
        throw std::invalid_argument("check_condition5 needs at least one sample");
    }
    const EndpointData data = endpoint_data(pair, n);
    const BranchSets sets = branch_sets(n, pair);
    const std::complex<double> z0 = data.z0;
    if (z0.imag() == 0.0 && std::abs(z0.real()) <= 1.0) {
        return check5_real_path(n, Q, z0.real(), sets, data.mult_a, data.mult_b, samples,
                                precision_bits, per_sample);
    }
    return check5_complex_path(n, Q, z0, sets, data.mult_a, data.mult_b, samples, per_sample);
}

}  // namespace chebmom
