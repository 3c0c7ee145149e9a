#pragma once

#include <mpfr.h>

#include <complex>
#include <string>

#include "chebmom/rat_poly.hpp"
#include "chebmom/rational.hpp"

namespace chebmom {

// Arbitrary-precision real, a thin RAII wrapper around mpfr_t. Every value
// carries its own precision; binary operations allocate the result at the
// wider operand's precision.
class BigFloat {
public:
    explicit BigFloat(unsigned bits = 64);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat of(double x, unsigned bits);
    static BigFloat of(long x, unsigned bits);
    static BigFloat of(const Rat& x, unsigned bits);
    static BigFloat pi(unsigned bits);

    unsigned precision_bits() const;
    double to_double() const;
    int sign() const;
    bool is_zero() const;

    BigFloat operator-() const;
    BigFloat& operator+=(const BigFloat& rhs);
    BigFloat& operator-=(const BigFloat& rhs);
    BigFloat& operator*=(const BigFloat& rhs);
    BigFloat& operator/=(const BigFloat& rhs);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);

    friend BigFloat abs(const BigFloat& x);
    friend BigFloat cos(const BigFloat& x);
    friend BigFloat sin(const BigFloat& x);
    friend BigFloat acos(const BigFloat& x);
    friend BigFloat sqrt(const BigFloat& x);
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y);

    friend int cmp(const BigFloat& a, const BigFloat& b);
    friend bool operator<(const BigFloat& a, const BigFloat& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return cmp(a, b) >= 0; }
    friend bool operator==(const BigFloat& a, const BigFloat& b) { return cmp(a, b) == 0; }

    mpfr_srcptr raw() const { return v_; }
    mpfr_ptr raw() { return v_; }

private:
    mpfr_t v_;
};

struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(unsigned bits = 64) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    static BigComplex of(std::complex<double> z, unsigned bits);
    static BigComplex of(const Rat& x, unsigned bits);
    // exp(2 pi i k / order)
    static BigComplex unit_root(unsigned order, long k, unsigned bits);

    std::complex<double> to_complex() const;
    unsigned precision_bits() const { return re.precision_bits(); }

    BigComplex& operator+=(const BigComplex& rhs);
    BigComplex& operator-=(const BigComplex& rhs);

    friend BigComplex operator+(BigComplex a, const BigComplex& b);
    friend BigComplex operator-(BigComplex a, const BigComplex& b);
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b);
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b);
    friend BigFloat abs(const BigComplex& z);
};

// Horner evaluation at the precision of x.
BigComplex eval_poly(const RatPoly& p, const BigComplex& x);
BigFloat eval_poly(const RatPoly& p, const BigFloat& x);

}  // namespace chebmom
