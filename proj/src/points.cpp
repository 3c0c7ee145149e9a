#include "chebmom/points.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "chebmom/chebyshev.hpp"

namespace chebmom {

namespace {

long pos_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

bool congruent(long x, long y, long m) {
    return pos_mod(x - y, m) == 0;
}

// T_k(z) by the three-term recurrence; avoids the huge monomial coefficients.
std::complex<double> cheb_value(unsigned k, std::complex<double> z) {
    std::complex<double> prev = 1.0;
    if (k == 0) {
        return prev;
    }
    std::complex<double> cur = z;
    for (unsigned i = 2; i <= k; ++i) {
        std::complex<double> next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// U_{k}(z), same recurrence with U_0 = 1, U_1 = 2z.
std::complex<double> cheb_u_value(unsigned k, std::complex<double> z) {
    std::complex<double> prev = 1.0;
    if (k == 0) {
        return prev;
    }
    std::complex<double> cur = 2.0 * z;
    for (unsigned i = 2; i <= k; ++i) {
        std::complex<double> next = 2.0 * z * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::complex<double> unit_root_d(unsigned order, long k) {
    const double angle = 2.0 * M_PI * static_cast<double>(pos_mod(k, order)) / order;
    return {std::cos(angle), std::sin(angle)};
}

std::complex<double> joukowski(std::complex<double> v) {
    return 0.5 * (v + 1.0 / v);
}

std::complex<double> shift_partner(const ShiftPair& sp) {
    const std::complex<double> root = unit_root_d(sp.n, sp.k);
    return sp.inverted ? root / sp.v : root * sp.v;
}

void validate_node(const NodePair& np, unsigned n) {
    if (np.n != n) {
        throw InvalidPair("node pair was built for n=" + std::to_string(np.n) +
                          ", not n=" + std::to_string(n));
    }
    const long two_n = 2L * n;
    if (congruent(np.p, np.q, two_n) || congruent(np.p, -np.q, two_n)) {
        throw InvalidPair("equal points: p == +-q (mod 2n)");
    }
    if (pos_mod(np.p - np.q, 2) != 0) {
        throw InvalidPair("parity failure: T_n(a) = (-1)^p differs from T_n(b) = (-1)^q");
    }
}

void validate_shift(const ShiftPair& sp, unsigned n) {
    if (sp.n != n) {
        throw InvalidPair("shift pair was built for n=" + std::to_string(sp.n) +
                          ", not n=" + std::to_string(n));
    }
    if (sp.v == 0.0) {
        throw InvalidPair("shift parameter v must be nonzero");
    }
    if (pos_mod(sp.k, n) == 0) {
        throw InvalidPair(sp.inverted ? "equal points: k == 0 (mod n) gives w = 1/v"
                                      : "equal points: k == 0 (mod n) gives w = v");
    }
    const std::complex<double> a = joukowski(sp.v);
    const std::complex<double> b = joukowski(shift_partner(sp));
    const double scale = std::max({1.0, std::abs(a), std::abs(b)});
    if (std::abs(a - b) < 1e-9 * scale) {
        throw InvalidPair("equal points: v and w give the same endpoint");
    }
    if (sp.generic) {
        // Screen v^(2d) = eps_n^(-+kd) for every d | n at 1e-9.
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) {
                continue;
            }
            const std::complex<double> v2d = std::pow(sp.v, 2.0 * d);
            const long kd = sp.inverted ? sp.k * static_cast<long>(d) : -sp.k * static_cast<long>(d);
            if (std::abs(v2d - unit_root_d(n, kd)) < 1e-9) {
                throw InvalidPair("non-generic parameter: v^(2d) hits a root-of-unity relation at d=" +
                                  std::to_string(d));
            }
        }
    }
}

void validate_rational(const RationalPair& rp, unsigned n) {
    if (rp.a == rp.b) {
        throw InvalidPair("equal points: a == b");
    }
    const RatPoly t = chebyshev(n);
    if (t(rp.a) != t(rp.b)) {
        throw InvalidPair("T_n mismatch: T_n(a) != T_n(b) for the rational pair");
    }
}

void validate_numeric(const NumericPair& np, unsigned n) {
    if (!(np.tol > 0)) {
        throw InvalidPair("numeric pair needs a positive tolerance");
    }
    if (std::abs(np.a - np.b) <= np.tol) {
        throw InvalidPair("equal points: |a - b| <= tol");
    }
    if (std::abs(cheb_value(n, np.a) - cheb_value(n, np.b)) > np.tol) {
        throw InvalidPair("T_n mismatch: |T_n(a) - T_n(b)| > tol");
    }
}

}  // namespace

void validate(const PointPair& pair, unsigned n) {
    if (n == 0) {
        throw InvalidPair("n must be positive");
    }
    std::visit(
        [n](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NodePair>) {
                validate_node(p, n);
            } else if constexpr (std::is_same_v<T, ShiftPair>) {
                validate_shift(p, n);
            } else if constexpr (std::is_same_v<T, RationalPair>) {
                validate_rational(p, n);
            } else {
                validate_numeric(p, n);
            }
        },
        pair);
}

CertifiedBool cheb_equal_at(const PointPair& pair, unsigned d) {
    return std::visit(
        [d](const auto& p) -> CertifiedBool {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NodePair>) {
                const long two_n = 2L * p.n;
                const long pd = p.p * static_cast<long>(d);
                const long qd = p.q * static_cast<long>(d);
                return {congruent(pd, qd, two_n) || congruent(pd, -qd, two_n), true};
            } else if constexpr (std::is_same_v<T, ShiftPair>) {
                if (p.generic) {
                    // w^d lands on v^d (excluded by genericity) or v^-d; the
                    // surviving branch needs eps_n^(kd) = 1 in both orientations.
                    return {pos_mod(p.k * static_cast<long>(d), p.n) == 0, true};
                }
                const std::complex<double> a = joukowski(p.v);
                const std::complex<double> b = joukowski(shift_partner(p));
                return {std::abs(cheb_value(d, a) - cheb_value(d, b)) <= 1e-9, false};
            } else if constexpr (std::is_same_v<T, RationalPair>) {
                const RatPoly t = chebyshev(d);
                return {t(p.a) == t(p.b), true};
            } else {
                return {std::abs(cheb_value(d, p.a) - cheb_value(d, p.b)) <= p.tol, false};
            }
        },
        pair);
}

std::pair<BigComplex, BigComplex> point_values(const PointPair& pair, unsigned precision_bits) {
    return std::visit(
        [precision_bits](const auto& p) -> std::pair<BigComplex, BigComplex> {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NodePair>) {
                // cos(p pi / n), cos(q pi / n)
                const BigFloat pi = BigFloat::pi(precision_bits);
                const BigFloat n = BigFloat::of(static_cast<long>(p.n), precision_bits);
                BigComplex a(precision_bits);
                BigComplex b(precision_bits);
                a.re = cos(pi * BigFloat::of(p.p, precision_bits) / n);
                b.re = cos(pi * BigFloat::of(p.q, precision_bits) / n);
                return {a, b};
            } else if constexpr (std::is_same_v<T, ShiftPair>) {
                const BigComplex v = BigComplex::of(p.v, precision_bits);
                const BigComplex root = BigComplex::unit_root(p.n, p.k, precision_bits);
                const BigComplex w = p.inverted ? root / v : root * v;
                const BigComplex one = BigComplex::of(Rat(1), precision_bits);
                const BigComplex half = BigComplex::of(Rat(1, 2), precision_bits);
                return {half * (v + one / v), half * (w + one / w)};
            } else if constexpr (std::is_same_v<T, RationalPair>) {
                return {BigComplex::of(p.a, precision_bits), BigComplex::of(p.b, precision_bits)};
            } else {
                return {BigComplex::of(p.a, precision_bits), BigComplex::of(p.b, precision_bits)};
            }
        },
        pair);
}

EndpointData endpoint_data(const PointPair& pair, unsigned n) {
    return std::visit(
        [n](const auto& p) -> EndpointData {
            using T = std::decay_t<decltype(p)>;
            EndpointData out;
            if constexpr (std::is_same_v<T, NodePair>) {
                const bool even = pos_mod(p.p, 2) == 0;
                out.z0_exact = even ? Rat(1) : Rat(-1);
                out.z0 = {even ? 1.0 : -1.0, 0.0};
                const long pm = pos_mod(p.p, 2L * n);
                const long qm = pos_mod(p.q, 2L * n);
                out.mult_a = (pm != 0 && pm != static_cast<long>(n)) ? 2 : 1;
                out.mult_b = (qm != 0 && qm != static_cast<long>(n)) ? 2 : 1;
            } else if constexpr (std::is_same_v<T, RationalPair>) {
                const RatPoly t = chebyshev(n);
                Rat z0 = t(p.a);
                out.z0 = {z0.get_d(), 0.0};
                out.z0_exact = std::move(z0);
                const RatPoly dt = derivative(t);
                out.mult_a = dt(p.a) == 0 ? 2 : 1;
                out.mult_b = dt(p.b) == 0 ? 2 : 1;
            } else if constexpr (std::is_same_v<T, ShiftPair>) {
                const std::complex<double> a = joukowski(p.v);
                const std::complex<double> b = joukowski(shift_partner(p));
                out.z0 = cheb_value(n, a);
                if (p.generic) {
                    // Genericity excludes v^(2n) = 1, i.e. a (and w likewise b)
                    // can never sit on a critical point of T_n.
                    out.mult_a = out.mult_b = 1;
                } else {
                    out.mult_a = std::abs(cheb_u_value(n - 1, a)) <= 1e-9 ? 2 : 1;
                    out.mult_b = std::abs(cheb_u_value(n - 1, b)) <= 1e-9 ? 2 : 1;
                }
            } else {
                out.z0 = cheb_value(n, p.a);
                // T_n' = n U_{n-1}
                out.mult_a = std::abs(cheb_u_value(n - 1, p.a)) <= p.tol ? 2 : 1;
                out.mult_b = std::abs(cheb_u_value(n - 1, p.b)) <= p.tol ? 2 : 1;
            }
            return out;
        },
        pair);
}

std::optional<unsigned> intrinsic_n(const PointPair& pair) {
    if (const auto* np = std::get_if<NodePair>(&pair)) {
        return np->n;
    }
    if (const auto* sp = std::get_if<ShiftPair>(&pair)) {
        return sp->n;
    }
    return std::nullopt;
}

bool is_exact_pair(const PointPair& pair) {
    if (std::holds_alternative<NodePair>(pair) || std::holds_alternative<RationalPair>(pair)) {
        return true;
    }
    if (const auto* sp = std::get_if<ShiftPair>(&pair)) {
        return sp->generic;
    }
    return false;
}

std::string describe(const PointPair& pair) {
    std::ostringstream out;
    std::visit(
        [&out](const auto& p) {
            using T = std::decay_t<decltype(p)>;
            if constexpr (std::is_same_v<T, NodePair>) {
                out << "node(n=" << p.n << ", p=" << p.p << ", q=" << p.q << ")";
            } else if constexpr (std::is_same_v<T, ShiftPair>) {
                out << "shift(n=" << p.n << ", k=" << p.k << ", v=" << p.v.real() << (p.v.imag() < 0 ? "" : "+")
                    << p.v.imag() << "i" << (p.inverted ? ", inverted" : "") << ")";
            } else if constexpr (std::is_same_v<T, RationalPair>) {
                out << "rational(a=" << to_string(p.a) << ", b=" << to_string(p.b) << ")";
            } else {
                out << "numeric(a=" << p.a << ", b=" << p.b << ", tol=" << p.tol << ")";
            }
        },
        pair);
    return out.str();
}

}  // namespace chebmom
