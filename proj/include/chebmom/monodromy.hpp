#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "chebmom/points.hpp"
#include "chebmom/rat_poly.hpp"

namespace chebmom {

class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<unsigned> images);

    static Permutation identity(unsigned size);

    unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
    unsigned operator()(unsigned j) const { return images_.at(j); }
    const std::vector<unsigned>& images() const noexcept { return images_; }

    bool is_identity() const;
    Permutation inverse() const;
    // (lhs * rhs)(j) = lhs(rhs(j)): rhs acts first.
    friend Permutation operator*(const Permutation& lhs, const Permutation& rhs);
    friend bool operator==(const Permutation&, const Permutation&) = default;

    std::string cycle_string() const;  // "(0 5)(1 4)(2 3)", "id" for identity

private:
    std::vector<unsigned> images_;
};

// Branch permutations of T_n around its critical values, in the numeration
// anchored by branch 0 mapping (-1,1) onto (cos(pi/n), 1):
//   around infinity: j -> j+1 (mod n)
//   around -1:       j -> n-1-j
//   around +1:       j -> n-j (mod n)
// They satisfy around_infinity * around_minus_one * around_one = id.
struct MonodromyPerms {
    Permutation around_one;
    Permutation around_minus_one;
    Permutation around_infinity;
};
MonodromyPerms perms(unsigned n);

struct BranchPointError : std::domain_error {
    using std::domain_error::domain_error;
};

// Branch j of the inverse of T_n: cos((Arccos z + 2 pi j) / n) with the
// principal Arccos on the cut plane. Throws BranchPointError at z = +-1.
std::complex<double> branch_eval(unsigned n, unsigned j, std::complex<double> z);

// The limit of branch j as z approaches z0; finite at the branch points,
// where it reaches the nodes cos(2 pi j / n) resp. cos((2j+1) pi / n).
std::complex<double> branch_limit(unsigned n, unsigned j, std::complex<double> z0);

// The branch labels whose limits at z0 = T_n(a) reach a (resp. b); set sizes
// equal the endpoint multiplicities. Exact label arithmetic for node pairs,
// numeric limit matching otherwise.
struct BranchSets {
    std::vector<unsigned> at_a;
    std::vector<unsigned> at_b;
};
BranchSets branch_sets(unsigned n, const PointPair& pair);

// Max over the sample points z_t = z0 * (1 - t/(samples+1)) of
//   | mult_b * sum_(j in at_a) Q(branch_j(z_t))
//     - mult_a * sum_(j in at_b) Q(branch_j(z_t)) |.
// Members of the moment space drive this to roundoff; a clear violation
// refutes membership, but the residual is a diagnostic, never the decision
// authority. Runs at precision_bits when the segment stays real inside
// (-1,1); falls back to double complex otherwise. per_sample, when given,
// receives the residual at every z_t in order.
double check_condition5(unsigned n, const RatPoly& Q, const PointPair& pair, unsigned samples,
                        unsigned precision_bits = 128, std::vector<double>* per_sample = nullptr);

}  // namespace chebmom
