#pragma once

#include <mpfr.h>

#include <stdexcept>
#include <string>

#include "mfheight/rat.hpp"

namespace mfh {

// Working precision for BigFloat values, in bits of mantissa. The artifact-wide
// default is 192 bits; anything below 128 is rejected (all shipped tolerances
// assume >= 40 decimal digits of headroom).
long default_precision();
void set_default_precision(long bits);

// High-precision real number over MPFR. Immutable-by-convention value type; the
// precision of a result is the precision of its left operand.
class BigFloat {
public:
    BigFloat() : BigFloat(default_precision()) {}
    explicit BigFloat(long prec_bits) {
        mpfr_init2(f_, check_prec(prec_bits));
        mpfr_set_zero(f_, 1);
    }
    BigFloat(double v, long prec_bits) {
        mpfr_init2(f_, check_prec(prec_bits));
        mpfr_set_d(f_, v, MPFR_RNDN);
    }
    BigFloat(const Rat& v, long prec_bits) {
        mpfr_init2(f_, check_prec(prec_bits));
        mpfr_set_q(f_, v.raw(), MPFR_RNDN);
    }
    static BigFloat from_double(double v) { return BigFloat(v, default_precision()); }
    static BigFloat from_rat(const Rat& v) { return BigFloat(v, default_precision()); }
    static BigFloat from_long(long v) { return BigFloat(Rat(v), default_precision()); }

    BigFloat(const BigFloat& o) {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_set(f_, o.f_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(f_, mpfr_get_prec(o.f_));
        mpfr_swap(f_, o.f_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(f_, mpfr_get_prec(o.f_));
            mpfr_set(f_, o.f_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(f_, o.f_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(f_); }

    mpfr_srcptr raw() const { return f_; }
    long precision() const { return mpfr_get_prec(f_); }

#define MFH_BF_BINOP(op, fn)                                            \
    friend BigFloat operator op(const BigFloat& a, const BigFloat& b) { \
        BigFloat r(a.precision());                                      \
        fn(r.f_, a.f_, b.f_, MPFR_RNDN);                                \
        return r;                                                       \
    }
    MFH_BF_BINOP(+, mpfr_add)
    MFH_BF_BINOP(-, mpfr_sub)
    MFH_BF_BINOP(*, mpfr_mul)
    MFH_BF_BINOP(/, mpfr_div)
#undef MFH_BF_BINOP

    friend BigFloat operator-(const BigFloat& a) {
        BigFloat r(a.precision());
        mpfr_neg(r.f_, a.f_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& o) { mpfr_add(f_, f_, o.f_, MPFR_RNDN); return *this; }
    BigFloat& operator-=(const BigFloat& o) { mpfr_sub(f_, f_, o.f_, MPFR_RNDN); return *this; }
    BigFloat& operator*=(const BigFloat& o) { mpfr_mul(f_, f_, o.f_, MPFR_RNDN); return *this; }
    BigFloat& operator/=(const BigFloat& o) { mpfr_div(f_, f_, o.f_, MPFR_RNDN); return *this; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) < 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) > 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) <= 0; }
    friend bool operator>=(const BigFloat& a, const BigFloat& b) { return mpfr_cmp(a.f_, b.f_) >= 0; }

    int sign() const { return mpfr_sgn(f_); }
    bool is_zero() const { return mpfr_zero_p(f_) != 0; }
    bool is_finite() const { return mpfr_number_p(f_) != 0; }

    // Comparisons of computed quantities always go through a tolerance.
    bool close_to(const BigFloat& o, const BigFloat& tol) const {
        return ((*this - o).abs() <= tol);
    }

    BigFloat abs() const { BigFloat r(precision()); mpfr_abs(r.f_, f_, MPFR_RNDN); return r; }

#define MFH_BF_UNARY(name, fn)                  \
    BigFloat name() const {                     \
        BigFloat r(precision());                \
        fn(r.f_, f_, MPFR_RNDN);                \
        return r;                               \
    }
    MFH_BF_UNARY(exp, mpfr_exp)
    MFH_BF_UNARY(log, mpfr_log)
    MFH_BF_UNARY(sqrt, mpfr_sqrt)
    MFH_BF_UNARY(sin, mpfr_sin)
    MFH_BF_UNARY(cos, mpfr_cos)
    MFH_BF_UNARY(sinh, mpfr_sinh)
    MFH_BF_UNARY(cosh, mpfr_cosh)
    MFH_BF_UNARY(gamma, mpfr_gamma)
#undef MFH_BF_UNARY

    BigFloat pow(const BigFloat& e) const {
        BigFloat r(precision());
        mpfr_pow(r.f_, f_, e.raw(), MPFR_RNDN);
        return r;
    }
    BigFloat pow_si(long e) const {
        BigFloat r(precision());
        mpfr_pow_si(r.f_, f_, e, MPFR_RNDN);
        return r;
    }

    static BigFloat pi(long prec_bits = 0) {
        BigFloat r(prec_bits > 0 ? prec_bits : default_precision());
        mpfr_const_pi(r.f_, MPFR_RNDN);
        return r;
    }
    static BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(y.precision());
        mpfr_atan2(r.f_, y.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    // Upper incomplete Gamma(a, x) = int_x^inf e^-t t^(a-1) dt.
    static BigFloat gamma_inc(const BigFloat& a, const BigFloat& x) {
        BigFloat r(a.precision());
        mpfr_gamma_inc(r.f_, a.raw(), x.raw(), MPFR_RNDN);
        return r;
    }
    // 2^e at the working precision; handy for tolerance plumbing.
    static BigFloat pow2(long e, long prec_bits = 0) {
        BigFloat r(prec_bits > 0 ? prec_bits : default_precision());
        mpfr_set_ui_2exp(r.f_, 1, e, MPFR_RNDN);
        return r;
    }

    double to_double() const { return mpfr_get_d(f_, MPFR_RNDN); }
    std::string str(int digits = 40) const;

private:
    static long check_prec(long bits) {
        if (bits < 2) throw std::invalid_argument("BigFloat: precision too small");
        return bits;
    }
    mpfr_t f_;
};

// Complex value as a real/imaginary BigFloat pair.
struct BigComplex {
    BigFloat re, im;

    BigComplex() = default;
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    static BigComplex from_real(const BigFloat& r) { return {r, BigFloat(r.precision())}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        BigFloat d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend BigComplex operator-(const BigComplex& a) { return {-a.re, -a.im}; }
    BigComplex conj() const { return {re, -im}; }
    BigFloat abs() const { return (re * re + im * im).sqrt(); }

    // e(x) = exp(2 pi i x).
    static BigComplex e_of(const BigFloat& x) {
        BigFloat t = BigFloat(Rat(2), x.precision()) * BigFloat::pi(x.precision()) * x;
        return {t.cos(), t.sin()};
    }
};

}  // namespace mfh
