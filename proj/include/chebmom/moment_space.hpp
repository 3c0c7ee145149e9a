#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chebmom/moments.hpp"
#include "chebmom/points.hpp"
#include "chebmom/rat_poly.hpp"

namespace chebmom {

struct CertificateEntry {
    unsigned m = 0;  // expansion degree of int q dz
    Rat c;           // its coefficient
    unsigned d = 0;  // GCD(n, m); T_d(a) = T_d(b) holds for members
};

// Decision for q against V(T_n, a, b): a member comes with the expansion
// certificate, a non-member with the violating degrees and, when the bounded
// search finds one, a concrete nonzero moment.
struct MembershipVerdict {
    bool member = false;
    std::vector<CertificateEntry> certificate;            // member case
    std::vector<unsigned> violations;                     // non-member case
    std::optional<std::pair<unsigned, MomentValue>> witness;
    bool certified = true;
};

// All m in 1..m_max whose GCD test passes, i.e. the degrees m for which
// T_m' belongs to the space.
std::vector<unsigned> basis_degrees(unsigned n, const PointPair& pair, unsigned m_max);

// Expands int q dz in the T-basis, drops the constant term, and checks
// T_GCD(n,m)(a) = T_GCD(n,m)(b) for every remaining degree. The verdict is
// decided by that criterion alone; the moment witness is reported when the
// bounded search finds one but its absence never flips a refutation.
MembershipVerdict is_member(unsigned n, const RatPoly& q, const PointPair& pair,
                            unsigned witness_i_max = 24);

// P = T_(n/w) and Q~ with Q~(T_w) = Q for a divisor w of n passing the
// endpoint test.
struct CompositionWitness {
    unsigned w = 0;
    RatPoly outer;        // T_(n/w)
    RatPoly inner_image;  // Q~
};

struct DivisorProbe {
    unsigned w = 0;
    bool endpoint_equal = false;
    bool decomposable = false;
    std::vector<unsigned> offending;  // degrees blocking Q from factoring through T_w
};

// Searches the divisors of n (largest first, w >= 2) for one through which
// both T_n and Q factor while T_w(a) = T_w(b); w = 1 is excluded since a
// degree-one inner polynomial would force a = b.
std::optional<CompositionWitness> composition_condition(unsigned n, const RatPoly& Q,
                                                        const PointPair& pair,
                                                        std::vector<DivisorProbe>* transcript = nullptr);

// q = T_m1' + T_m2' for coprime basis degrees m1, m2 >= 2: a certified member
// whose primitive factors through no admissible T_w. The transcript is the
// exhaustive divisor search proving the latter.
struct Counterexample {
    RatPoly q;
    unsigned m1 = 0;
    unsigned m2 = 0;
    MembershipVerdict member_proof;
    std::vector<DivisorProbe> transcript;
};

std::optional<Counterexample> counterexample(unsigned n, const PointPair& pair);

}  // namespace chebmom
