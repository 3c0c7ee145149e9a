#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "chebmom/bigfloat.hpp"
#include "chebmom/rational.hpp"

namespace chebmom {

// a = cos(p pi / n), b = cos(q pi / n). Valid when p and q share parity
// (so T_n(a) = T_n(b)) and p != +-q (mod 2n) (so a != b).
struct NodePair {
    unsigned n = 0;
    long p = 0;
    long q = 0;
};

// a = (v + 1/v)/2, b = (w + 1/w)/2 with w = eps_n^k * v, or w = eps_n^k / v
// when inverted; T_n(a) = T_n(b) holds by construction. With generic set,
// the caller asserts v satisfies no relation v^(2d) = eps_n^(-kd)
// (v^(2d) = eps_n^(kd) in the inverted orientation) for any d | n;
// validation screens these numerically and rejects near-degenerate v.
struct ShiftPair {
    unsigned n = 0;
    long k = 0;
    bool inverted = false;
    std::complex<double> v;
    bool generic = true;
};

struct RationalPair {
    Rat a, b;
};

struct NumericPair {
    std::complex<double> a, b;
    double tol = 1e-9;
};

using PointPair = std::variant<NodePair, ShiftPair, RationalPair, NumericPair>;

// value decided exactly (certified) or numerically within tolerance.
struct CertifiedBool {
    bool value = false;
    bool certified = false;
};

struct InvalidPair : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Confirms every structural invariant of the pair for this n; throws
// InvalidPair with a reason (equal points, parity failure, T_n mismatch,
// non-generic parameter) otherwise.
void validate(const PointPair& pair, unsigned n);

// Decides T_d(a) == T_d(b). NodePair reduces to p*d == +-q*d (mod 2n),
// generic ShiftPair to k*d == 0 (mod n), RationalPair evaluates exactly,
// NumericPair compares within its tolerance.
CertifiedBool cheb_equal_at(const PointPair& pair, unsigned d);

// Numeric (a, b) at the requested precision.
std::pair<BigComplex, BigComplex> point_values(const PointPair& pair, unsigned precision_bits);

struct EndpointData {
    std::complex<double> z0;      // T_n(a) = T_n(b)
    std::optional<Rat> z0_exact;  // present for NodePair and RationalPair
    int mult_a = 1;               // multiplicity of a under T_n: 2 at an
    int mult_b = 1;               // interior node cos(j pi/n), else 1
};
EndpointData endpoint_data(const PointPair& pair, unsigned n);

// The n a NodePair or ShiftPair was built around, if any.
std::optional<unsigned> intrinsic_n(const PointPair& pair);

bool is_exact_pair(const PointPair& pair);  // NodePair, RationalPair, generic ShiftPair

std::string describe(const PointPair& pair);

}  // namespace chebmom
