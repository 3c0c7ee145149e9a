#include "chebmom/moments.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

#include "chebmom/chebyshev.hpp"

namespace chebmom {

namespace {

long pos_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

// (eps_2n^p + eps_2n^-p) / 2 in Q(eps_2n).
CycloNum node_value(unsigned n, long p) {
    const unsigned order = 2 * n;
    CycloNum u = CycloNum::root_power(order, pos_mod(p, order));
    u += CycloNum::root_power(order, pos_mod(-p, order));
    u *= Rat(1, 2);
    return u;
}

// Coarse forward bound for Horner at x: (sum |c_k|) * max(1,|a|,|b|)^deg,
// scaled by 2^-(bits - slack). Only ever used as a refutation threshold.
double horner_error_bound(const RatPoly& r, const BigComplex& a, const BigComplex& b,
                          unsigned bits) {
    if (r.is_zero()) {
        return 0.0;
    }
    const unsigned work = 64;
    BigFloat norm(work);
    for (const auto& c : r.coeffs()) {
        norm += abs(BigFloat::of(c, work));
    }
    BigFloat scale = abs(a);
    if (cmp(scale, abs(b)) < 0) {
        scale = abs(b);
    }
    if (cmp(scale, BigFloat::of(1L, work)) < 0) {
        scale = BigFloat::of(1L, work);
    }
    BigFloat growth = BigFloat::of(1L, work);
    for (int k = 0; k < r.degree(); ++k) {
        growth *= scale;
    }
    const double slack = 8.0 + std::log2(static_cast<double>(r.degree() + 2));
    return norm.to_double() * growth.to_double() * std::pow(2.0, slack - static_cast<double>(bits));
}

MomentValue evaluate_difference(const RatPoly& r, unsigned n, const PointPair& pair,
                                unsigned precision_bits) {
    if (const auto* rp = std::get_if<RationalPair>(&pair)) {
        return MomentValue(r(rp->b) - r(rp->a));
    }
    if (const auto* np = std::get_if<NodePair>(&pair)) {
        const CycloNum a = node_value(n, np->p);
        const CycloNum b = node_value(n, np->q);
        return MomentValue(eval_poly(r, b) - eval_poly(r, a));
    }
    auto [a, b] = point_values(pair, precision_bits);
    NumericMoment out{eval_poly(r, b) - eval_poly(r, a), horner_error_bound(r, a, b, precision_bits)};
    return MomentValue(std::move(out));
}

}  // namespace

bool MomentValue::is_zero(double tol) const {
    if (const auto* r = std::get_if<Rat>(&v_)) {
        return *r == 0;
    }
    if (const auto* c = std::get_if<CycloNum>(&v_)) {
        return c->is_zero();
    }
    const auto& nm = std::get<NumericMoment>(v_);
    return abs(nm.value).to_double() <= nm.error_bound + tol;
}

bool MomentValue::provably_nonzero(double tol) const {
    if (exact()) {
        return !is_zero();
    }
    const auto& nm = std::get<NumericMoment>(v_);
    return abs(nm.value).to_double() > nm.error_bound + tol;
}

std::complex<double> MomentValue::approx() const {
    if (const auto* r = std::get_if<Rat>(&v_)) {
        return {r->get_d(), 0.0};
    }
    if (const auto* c = std::get_if<CycloNum>(&v_)) {
        return embed(*c, 64).to_complex();
    }
    return std::get<NumericMoment>(v_).value.to_complex();
}

MomentValue moment(unsigned n, const RatPoly& q, const PointPair& pair, unsigned i,
                   unsigned precision_bits) {
    const RatPoly r = antiderivative(pow(chebyshev(n), i) * q);
    return evaluate_difference(r, n, pair, precision_bits);
}

std::vector<MomentValue> moment_sweep(unsigned n, const RatPoly& q, const PointPair& pair,
                                      unsigned i_max, unsigned precision_bits) {
    std::vector<MomentValue> out;
    out.reserve(i_max + 1);
    const RatPoly t = chebyshev(n);
    RatPoly power = RatPoly::constant(Rat(1));
    for (unsigned i = 0; i <= i_max; ++i) {
        out.push_back(evaluate_difference(antiderivative(power * q), n, pair, precision_bits));
        if (i < i_max) {
            power = power * t;
        }
    }
    return out;
}

std::optional<unsigned> first_nonzero_moment(unsigned n, const RatPoly& q, const PointPair& pair,
                                             unsigned i_max, unsigned precision_bits, double tol) {
    const RatPoly t = chebyshev(n);
    RatPoly power = RatPoly::constant(Rat(1));
    for (unsigned i = 0; i <= i_max; ++i) {
        MomentValue m = evaluate_difference(antiderivative(power * q), n, pair, precision_bits);
        if (m.provably_nonzero(tol)) {
            return i;
        }
        if (i < i_max) {
            power = power * t;
        }
    }
    return std::nullopt;
}

MomentValue moment_numeric(unsigned n, const RatPoly& q, const PointPair& pair, unsigned i,
                           unsigned precision_bits) {
    const RatPoly r = antiderivative(pow(chebyshev(n), i) * q);
    auto [a, b] = point_values(pair, precision_bits);
    NumericMoment out{eval_poly(r, b) - eval_poly(r, a), horner_error_bound(r, a, b, precision_bits)};
    return MomentValue(std::move(out));
}

}  // namespace chebmom
