#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "chebmom/points.hpp"
#include "chebmom/rat_poly.hpp"

namespace chebmom {

struct NotDecomposable : std::runtime_error {
    explicit NotDecomposable(std::vector<unsigned> degrees);
    std::vector<unsigned> offending;
};

struct NotAMember : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonExactPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// The A with A(T_d) = F, when it exists: F expanded in the T-basis factors
// through T_d iff d divides every nonzero non-constant degree, and then
// A picks up T_(m/d) term by term. Returns nullopt (with the blocking
// degrees, if requested) otherwise.
std::optional<RatPoly> try_decompose_through(const RatPoly& F, unsigned d,
                                             std::vector<unsigned>* offending = nullptr);

// Throwing form of the above.
RatPoly decompose_through(const RatPoly& F, unsigned d);

// The subset of {+1, -1} of signs mu with v^m = w^(mu m), for the Joukowski
// preimages v, w of the pair. Nonempty exactly when T_m(a) = T_m(b).
class MuSigns {
public:
    MuSigns() = default;
    MuSigns(bool plus, bool minus) : plus_(plus), minus_(minus) {}

    bool has_plus() const noexcept { return plus_; }
    bool has_minus() const noexcept { return minus_; }
    bool has(int mu) const noexcept { return mu >= 0 ? plus_ : minus_; }
    bool empty() const noexcept { return !plus_ && !minus_; }

    friend bool operator==(const MuSigns&, const MuSigns&) = default;

private:
    bool plus_ = false;
    bool minus_ = false;
};

// Requires an exact pair (NodePair, RationalPair, or generic ShiftPair);
// throws NonExactPair otherwise.
MuSigns mu_signs(const PointPair& pair, unsigned m);

// int q dz = A(T_d1) + B(T_d2) + constant with T_d1(a) = T_d1(b) and
// T_d2(a) = T_d2(b); when everything fits in one group, B = 0 and d2 = d1.
struct TwoTermRep {
    unsigned d1 = 0;
    RatPoly A;
    unsigned d2 = 0;
    RatPoly B;
    Rat constant;
};

// Splits the certificate degrees of int q dz into at most two groups by
// mu-sign, each collapsing onto T_gcd of its degrees. Throws NotAMember when
// q fails the membership criterion and NonExactPair for numeric pairs.
TwoTermRep two_term(unsigned n, const RatPoly& q, const PointPair& pair);

}  // namespace chebmom
