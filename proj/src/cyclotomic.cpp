#include "chebmom/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace chebmom {

unsigned euler_phi(unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("euler_phi(0)");
    }
    unsigned result = m;
    unsigned rest = m;
    for (unsigned p = 2; p * p <= rest; ++p) {
        if (rest % p == 0) {
            result -= result / p;
            while (rest % p == 0) {
                rest /= p;
            }
        }
    }
    if (rest > 1) {
        result -= result / rest;
    }
    return result;
}

std::vector<unsigned> divisors_of(unsigned m) {
    if (m == 0) {
        throw std::invalid_argument("divisors_of(0)");
    }
    std::vector<unsigned> divs;
    for (unsigned d = 1; d * d <= m; ++d) {
        if (m % d == 0) {
            divs.push_back(d);
            if (d != m / d) {
                divs.push_back(m / d);
            }
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

namespace {

const IntPoly& cyclotomic_cached(unsigned order) {
    thread_local std::map<unsigned, IntPoly> cache;
    auto it = cache.find(order);
    if (it != cache.end()) {
        return it->second;
    }
    // z^order - 1 divided by Phi_d for every proper divisor d.
    std::vector<Int> raw(order + 1, Int(0));
    raw[0] = -1;
    raw[order] = 1;
    IntPoly result(std::move(raw));
    for (unsigned d : divisors_of(order)) {
        if (d == order) {
            continue;
        }
        auto [quot, rem] = divmod_monic(result, cyclotomic_cached(d));
        if (!rem.is_zero()) {
            throw std::logic_error("cyclotomic division left a remainder");
        }
        result = std::move(quot);
    }
    return cache.emplace(order, std::move(result)).first->second;
}

// Remainder of p mod Phi_order, padded to length phi(order).
std::vector<Rat> reduce_mod_phi(unsigned order, const RatPoly& p) {
    const RatPoly phi = cyclotomic_cached(order).to_rat();
    RatPoly rem = divmod_monic(p, phi).remainder;
    std::vector<Rat> coords(euler_phi(order), Rat(0));
    for (std::size_t i = 0; i < rem.coeffs().size(); ++i) {
        coords[i] = rem.coeffs()[i];
    }
    return coords;
}

void require_same_order(const CycloNum& a, const CycloNum& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("cyclotomic order mismatch: " + std::to_string(a.order()) +
                                    " vs " + std::to_string(b.order()) +
                                    " (lift to a common order first)");
    }
}

}  // namespace

IntPoly cyclotomic_poly(unsigned order) {
    if (order == 0) {
        throw std::invalid_argument("cyclotomic_poly(0)");
    }
    return cyclotomic_cached(order);
}

CycloNum::CycloNum(unsigned order) : order_(order), coords_(euler_phi(order), Rat(0)) {
    if (order == 0) {
        throw std::invalid_argument("CycloNum order must be positive");
    }
}

CycloNum CycloNum::from_rational(unsigned order, Rat value) {
    CycloNum x(order);
    x.coords_[0] = std::move(value);
    return x;
}

CycloNum CycloNum::root_power(unsigned order, long exponent) {
    long e = exponent % static_cast<long>(order);
    if (e < 0) {
        e += static_cast<long>(order);
    }
    CycloNum x(order);
    x.coords_ = reduce_mod_phi(order, RatPoly::monomial(Rat(1), static_cast<unsigned>(e)));
    return x;
}

CycloNum CycloNum::from_poly(unsigned order, const RatPoly& p) {
    CycloNum x(order);
    x.coords_ = reduce_mod_phi(order, p);
    return x;
}

bool CycloNum::is_zero() const noexcept {
    return std::all_of(coords_.begin(), coords_.end(), [](const Rat& c) { return c == 0; });
}

CycloNum& CycloNum::operator+=(const CycloNum& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] += rhs.coords_[i];
    }
    return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        coords_[i] -= rhs.coords_[i];
    }
    return *this;
}

CycloNum& CycloNum::operator*=(const Rat& s) {
    for (auto& c : coords_) {
        c *= s;
    }
    return *this;
}

CycloNum CycloNum::lift_to(unsigned new_order) const {
    if (new_order % order_ != 0) {
        throw std::invalid_argument("lift_to target must be a multiple of the current order");
    }
    if (new_order == order_) {
        return *this;
    }
    const unsigned stride = new_order / order_;
    RatPoly p;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] != 0) {
            p += RatPoly::monomial(coords_[i], static_cast<unsigned>(i) * stride);
        }
    }
    return from_poly(new_order, p);
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
    require_same_order(a, b);
    const auto& x = a.coords_;
    const auto& y = b.coords_;
    std::vector<Rat> conv(x.size() + y.size() - 1, Rat(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (y[j] != 0) {
                conv[i + j] += x[i] * y[j];
            }
        }
    }
    CycloNum out(a.order_);
    out.coords_ = reduce_mod_phi(a.order_, RatPoly(std::move(conv)));
    return out;
}

CycloNum operator+(CycloNum a, const CycloNum& b) {
    a += b;
    return a;
}

CycloNum operator-(CycloNum a, const CycloNum& b) {
    a -= b;
    return a;
}

CycloNum operator*(const Rat& s, CycloNum x) {
    x *= s;
    return x;
}

std::pair<CycloNum, CycloNum> to_common_order(const CycloNum& a, const CycloNum& b) {
    const unsigned l = std::lcm(a.order(), b.order());
    return {a.lift_to(l), b.lift_to(l)};
}

CycloNum eval_poly(const RatPoly& p, const CycloNum& x) {
    CycloNum acc(x.order());
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x;
        acc += CycloNum::from_rational(x.order(), *it);
    }
    return acc;
}

BigComplex embed(const CycloNum& x, unsigned precision_bits) {
    BigComplex acc(precision_bits);
    const BigFloat two_pi = BigFloat::pi(precision_bits) * BigFloat::of(2L, precision_bits);
    const BigFloat order = BigFloat::of(static_cast<long>(x.order()), precision_bits);
    for (std::size_t i = 0; i < x.coords().size(); ++i) {
        if (x.coords()[i] == 0) {
            continue;
        }
        BigFloat angle = two_pi * BigFloat::of(static_cast<long>(i), precision_bits) / order;
        BigFloat c = BigFloat::of(x.coords()[i], precision_bits);
        acc.re += c * cos(angle);
        acc.im += c * sin(angle);
    }
    return acc;
}

bool root_power_sum_zero(unsigned order, const std::vector<std::pair<int, long>>& terms) {
    CycloNum acc(order);
    for (const auto& [sign, exponent] : terms) {
        CycloNum term = CycloNum::root_power(order, exponent);
        if (sign >= 0) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    return acc.is_zero();
}

IntPoly section_f_poly(unsigned n, unsigned d, unsigned j1, unsigned j2) {
    if (d == 0 || n % d != 0) {
        throw std::invalid_argument("section_f_poly requires d >= 1 and d | n");
    }
    if (j1 > n / 2 || j2 > n / 2) {
        throw std::invalid_argument("section_f_poly requires 0 <= j1, j2 <= n/2");
    }
    IntPoly f;
    f += IntPoly::monomial(Int(1), j1 * d);
    f += IntPoly::monomial(Int(1), (n - j1) * d);
    f -= IntPoly::monomial(Int(1), j2 * d);
    f -= IntPoly::monomial(Int(1), (n - j2) * d);
    return f;
}

bool divides_cyclotomic(const IntPoly& f, unsigned order) {
    return divmod_monic(f, cyclotomic_poly(order)).remainder.is_zero();
}

}  // namespace chebmom
