#include "chebmom/bigfloat.hpp"

#include <algorithm>
#include <utility>

namespace chebmom {

namespace {

mpfr_prec_t clamp_bits(unsigned bits) {
    return std::max<mpfr_prec_t>(MPFR_PREC_MIN, std::min<mpfr_prec_t>(bits, 1u << 20));
}

mpfr_prec_t wider(const BigFloat& a, const BigFloat& b) {
    return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

}  // namespace

BigFloat::BigFloat(unsigned bits) {
    mpfr_init2(v_, clamp_bits(bits));
    mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(const BigFloat& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_swap(v_, other.v_);
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigFloat::~BigFloat() {
    mpfr_clear(v_);
}

BigFloat BigFloat::of(double x, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_d(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(long x, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_si(r.v_, x, MPFR_RNDN);
    return r;
}

BigFloat BigFloat::of(const Rat& x, unsigned bits) {
    BigFloat r(bits);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigFloat BigFloat::pi(unsigned bits) {
    BigFloat r(bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

unsigned BigFloat::precision_bits() const {
    return static_cast<unsigned>(mpfr_get_prec(v_));
}

double BigFloat::to_double() const {
    return mpfr_get_d(v_, MPFR_RNDN);
}

int BigFloat::sign() const {
    return mpfr_sgn(v_);
}

bool BigFloat::is_zero() const {
    return mpfr_zero_p(v_) != 0;
}

BigFloat BigFloat::operator-() const {
    BigFloat r(precision_bits());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& rhs) {
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& rhs) {
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& rhs) {
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& rhs) {
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(static_cast<unsigned>(wider(a, b)));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(static_cast<unsigned>(wider(a, b)));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(static_cast<unsigned>(wider(a, b)));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    BigFloat r(static_cast<unsigned>(wider(a, b)));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
}

BigFloat abs(const BigFloat& x) {
    BigFloat r(x.precision_bits());
    mpfr_abs(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat cos(const BigFloat& x) {
    BigFloat r(x.precision_bits());
    mpfr_cos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat sin(const BigFloat& x) {
    BigFloat r(x.precision_bits());
    mpfr_sin(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat acos(const BigFloat& x) {
    BigFloat r(x.precision_bits());
    mpfr_acos(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat sqrt(const BigFloat& x) {
    BigFloat r(x.precision_bits());
    mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
    return r;
}

BigFloat hypot(const BigFloat& x, const BigFloat& y) {
    BigFloat r(static_cast<unsigned>(wider(x, y)));
    mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
    return r;
}

int cmp(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_);
}

BigComplex BigComplex::of(std::complex<double> z, unsigned bits) {
    return {BigFloat::of(z.real(), bits), BigFloat::of(z.imag(), bits)};
}

BigComplex BigComplex::of(const Rat& x, unsigned bits) {
    return {BigFloat::of(x, bits), BigFloat(bits)};
}

BigComplex BigComplex::unit_root(unsigned order, long k, unsigned bits) {
    // angle = 2 pi k / order
    BigFloat angle = BigFloat::pi(bits) * BigFloat::of(2 * k, bits) / BigFloat::of(static_cast<long>(order), bits);
    return {cos(angle), sin(angle)};
}

std::complex<double> BigComplex::to_complex() const {
    return {re.to_double(), im.to_double()};
}

BigComplex& BigComplex::operator+=(const BigComplex& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
}

BigComplex& BigComplex::operator-=(const BigComplex& rhs) {
    re -= rhs.re;
    im -= rhs.im;
    return *this;
}

BigComplex operator+(BigComplex a, const BigComplex& b) {
    a += b;
    return a;
}

BigComplex operator-(BigComplex a, const BigComplex& b) {
    a -= b;
    return a;
}

BigComplex operator*(const BigComplex& a, const BigComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

BigComplex operator/(const BigComplex& a, const BigComplex& b) {
    BigFloat den = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
}

BigFloat abs(const BigComplex& z) {
    return hypot(z.re, z.im);
}

BigComplex eval_poly(const RatPoly& p, const BigComplex& x) {
    const unsigned bits = x.precision_bits();
    BigComplex acc(bits);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x;
        acc.re += BigFloat::of(*it, bits);
    }
    return acc;
}

BigFloat eval_poly(const RatPoly& p, const BigFloat& x) {
    const unsigned bits = x.precision_bits();
    BigFloat acc(bits);
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * x + BigFloat::of(*it, bits);
    }
    return acc;
}

}  // namespace chebmom
