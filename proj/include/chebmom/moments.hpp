#pragma once

#include <complex>
#include <optional>
#include <variant>
#include <vector>

#include "chebmom/cyclotomic.hpp"
#include "chebmom/points.hpp"
#include "chebmom/rat_poly.hpp"

namespace chebmom {

struct NumericMoment {
    BigComplex value;
    double error_bound = 0.0;
};

// One value of int_a^b T_n^i(z) q(z) dz: exact over Q (rational pairs),
// exact in Q(eps_2n) (node pairs), or numeric with a coarse forward error
// bound (everything else).
class MomentValue {
public:
    explicit MomentValue(Rat v) : v_(std::move(v)) {}
    explicit MomentValue(CycloNum v) : v_(std::move(v)) {}
    explicit MomentValue(NumericMoment v) : v_(std::move(v)) {}

    bool exact() const noexcept { return !std::holds_alternative<NumericMoment>(v_); }

    // Exact variants decide zero exactly; the numeric variant reports whether
    // the value is indistinguishable from zero at its error bound plus tol.
    bool is_zero(double tol = 0.0) const;

    // Exact variants: value != 0. Numeric: |value| clears error_bound + tol.
    bool provably_nonzero(double tol = 1e-9) const;

    std::complex<double> approx() const;

    const std::variant<Rat, CycloNum, NumericMoment>& raw() const noexcept { return v_; }

private:
    std::variant<Rat, CycloNum, NumericMoment> v_;
};

// R(b) - R(a) for R = antiderivative(T_n^i * q). Precondition: the pair has
// been validated against n.
MomentValue moment(unsigned n, const RatPoly& q, const PointPair& pair, unsigned i,
                   unsigned precision_bits = 128);

// Moments for i = 0..i_max; the powers T_n^i are built incrementally across
// the sweep.
std::vector<MomentValue> moment_sweep(unsigned n, const RatPoly& q, const PointPair& pair,
                                      unsigned i_max, unsigned precision_bits = 128);

// Smallest i <= i_max whose moment is nonzero (provably, for numeric pairs),
// or nullopt.
std::optional<unsigned> first_nonzero_moment(unsigned n, const RatPoly& q, const PointPair& pair,
                                             unsigned i_max, unsigned precision_bits = 128,
                                             double tol = 1e-9);

// Forced numeric evaluation regardless of the pair model; cross-checks the
// exact paths.
MomentValue moment_numeric(unsigned n, const RatPoly& q, const PointPair& pair, unsigned i,
                           unsigned precision_bits = 128);

}  // namespace chebmom
