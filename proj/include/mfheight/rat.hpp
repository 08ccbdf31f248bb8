#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>

namespace mfh {

// Arbitrary-precision integer, thin RAII wrapper over mpz_t.
class Int {
public:
    Int() { mpz_init(z_); }
    Int(long v) { mpz_init_set_si(z_, v); }
    explicit Int(const std::string& s) {
        if (mpz_init_set_str(z_, s.c_str(), 10) != 0) {
            mpz_clear(z_);
            throw std::invalid_argument("Int: bad integer literal '" + s + "'");
        }
    }
    Int(const Int& o) { mpz_init_set(z_, o.z_); }
    Int(Int&& o) noexcept {
        mpz_init(z_);
        mpz_swap(z_, o.z_);
    }
    Int& operator=(const Int& o) {
        if (this != &o) mpz_set(z_, o.z_);
        return *this;
    }
    Int& operator=(Int&& o) noexcept {
        mpz_swap(z_, o.z_);
        return *this;
    }
    ~Int() { mpz_clear(z_); }

    mpz_srcptr raw() const { return z_; }
    mpz_ptr raw() { return z_; }

    friend Int operator+(const Int& a, const Int& b) { Int r; mpz_add(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a, const Int& b) { Int r; mpz_sub(r.z_, a.z_, b.z_); return r; }
    friend Int operator*(const Int& a, const Int& b) { Int r; mpz_mul(r.z_, a.z_, b.z_); return r; }
    friend Int operator-(const Int& a) { Int r; mpz_neg(r.z_, a.z_); return r; }
    Int& operator+=(const Int& o) { mpz_add(z_, z_, o.z_); return *this; }
    Int& operator-=(const Int& o) { mpz_sub(z_, z_, o.z_); return *this; }
    Int& operator*=(const Int& o) { mpz_mul(z_, z_, o.z_); return *this; }

    // Truncated division / remainder (sign of remainder follows the dividend).
    friend Int operator/(const Int& a, const Int& b) {
        if (mpz_sgn(b.z_) == 0) throw std::domain_error("Int: division by zero");
        Int r; mpz_tdiv_q(r.z_, a.z_, b.z_); return r;
    }
    friend Int operator%(const Int& a, const Int& b) {
        if (mpz_sgn(b.z_) == 0) throw std::domain_error("Int: division by zero");
        Int r; mpz_tdiv_r(r.z_, a.z_, b.z_); return r;
    }

    friend bool operator==(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) == 0; }
    friend bool operator!=(const Int& a, const Int& b) { return !(a == b); }
    friend bool operator<(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) < 0; }
    friend bool operator<=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
    friend bool operator>(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) > 0; }
    friend bool operator>=(const Int& a, const Int& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

    int sign() const { return mpz_sgn(z_); }
    bool is_zero() const { return mpz_sgn(z_) == 0; }
    bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
    long to_long() const {
        if (!fits_long()) throw std::overflow_error("Int: does not fit in long");
        return mpz_get_si(z_);
    }
    double to_double() const { return mpz_get_d(z_); }

    Int abs() const { Int r; mpz_abs(r.z_, z_); return r; }

    static Int gcd(const Int& a, const Int& b) { Int r; mpz_gcd(r.z_, a.z_, b.z_); return r; }
    static Int lcm(const Int& a, const Int& b) { Int r; mpz_lcm(r.z_, a.z_, b.z_); return r; }
    static Int from_u64(unsigned long long v) {
        Int r;
        mpz_set_ui(r.z_, static_cast<unsigned long>(v));
        return r;
    }

    static Int pow(const Int& base, unsigned long e) { Int r; mpz_pow_ui(r.z_, base.z_, e); return r; }
    static Int factorial(unsigned long n) { Int r; mpz_fac_ui(r.z_, n); return r; }
    static Int binomial(const Int& n, unsigned long k) {
        Int r; mpz_bin_ui(r.z_, n.z_, k); return r;
    }

    // Kronecker symbol (a|b), fully extended.
    static int kronecker(const Int& a, const Int& b) { return mpz_kronecker(a.z_, b.z_); }

    bool is_perfect_square() const { return mpz_perfect_square_p(z_) != 0; }
    Int isqrt() const {
        if (sign() < 0) throw std::domain_error("Int: isqrt of negative");
        Int r; mpz_sqrt(r.z_, z_); return r;
    }
    bool divisible_by(const Int& d) const { return mpz_divisible_p(z_, d.z_) != 0; }
    Int divexact(const Int& d) const { Int r; mpz_divexact(r.z_, z_, d.z_); return r; }

    std::string str() const {
        char* s = mpz_get_str(nullptr, 10, z_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

private:
    mpz_t z_;
};

std::ostream& operator<<(std::ostream& os, const Int& x);

// Exact rational; always stored canonically (gcd 1, positive denominator).
class Rat {
public:
    Rat() { mpq_init(q_); }
    Rat(long v) { mpq_init(q_); mpq_set_si(q_, v, 1); }
    Rat(long num, long den) {
        if (den == 0) throw std::domain_error("Rat: zero denominator");
        if (den < 0) {  // mpq_set_si takes an unsigned denominator
            num = -num;
            den = -den;
        }
        mpq_init(q_);
        mpq_set_si(q_, num, static_cast<unsigned long>(den));
        mpq_canonicalize(q_);
    }
    Rat(const Int& num, const Int& den) {
        if (den.is_zero()) throw std::domain_error("Rat: zero denominator");
        mpq_init(q_);
        mpz_set(mpq_numref(q_), num.raw());
        mpz_set(mpq_denref(q_), den.raw());
        mpq_canonicalize(q_);
    }
    explicit Rat(const Int& v) {
        mpq_init(q_);
        mpz_set(mpq_numref(q_), v.raw());
    }
    // Parses "p", "-p/q" or a plain decimal literal like "1.25".
    explicit Rat(const std::string& s) {
        mpq_init(q_);
        auto dot = s.find('.');
        if (dot == std::string::npos) {
            if (mpq_set_str(q_, s.c_str(), 10) != 0) {
                mpq_clear(q_);
                throw std::invalid_argument("Rat: bad rational literal '" + s + "'");
            }
            if (mpz_sgn(mpq_denref(q_)) == 0) {
                mpq_clear(q_);
                throw std::domain_error("Rat: zero denominator in '" + s + "'");
            }
            mpq_canonicalize(q_);
        } else {
            std::string digits = s.substr(0, dot) + s.substr(dot + 1);
            size_t frac_digits = s.size() - dot - 1;
            std::string den = "1" + std::string(frac_digits, '0');
            std::string lit = digits + "/" + den;
            if (mpq_set_str(q_, lit.c_str(), 10) != 0) {
                mpq_clear(q_);
                throw std::invalid_argument("Rat: bad decimal literal '" + s + "'");
            }
            mpq_canonicalize(q_);
        }
    }
    Rat(const Rat& o) { mpq_init(q_); mpq_set(q_, o.q_); }
    Rat(Rat&& o) noexcept { mpq_init(q_); mpq_swap(q_, o.q_); }
    Rat& operator=(const Rat& o) {
        if (this != &o) mpq_set(q_, o.q_);
        return *this;
    }
    Rat& operator=(Rat&& o) noexcept {
        mpq_swap(q_, o.q_);
        return *this;
    }
    ~Rat() { mpq_clear(q_); }

    mpq_srcptr raw() const { return q_; }

    Int num() const { Int r; mpz_set(r.raw(), mpq_numref(q_)); return r; }
    Int den() const { Int r; mpz_set(r.raw(), mpq_denref(q_)); return r; }

    friend Rat operator+(const Rat& a, const Rat& b) { Rat r; mpq_add(r.q_, a.q_, b.q_); return r; }
    friend Rat operator-(const Rat& a, const Rat& b) { Rat r; mpq_sub(r.q_, a.q_, b.q_); return r; }
    friend Rat operator*(const Rat& a, const Rat& b) { Rat r; mpq_mul(r.q_, a.q_, b.q_); return r; }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        Rat r; mpq_div(r.q_, a.q_, b.q_); return r;
    }
    friend Rat operator-(const Rat& a) { Rat r; mpq_neg(r.q_, a.q_); return r; }
    Rat& operator+=(const Rat& o) { mpq_add(q_, q_, o.q_); return *this; }
    Rat& operator-=(const Rat& o) { mpq_sub(q_, q_, o.q_); return *this; }
    Rat& operator*=(const Rat& o) { mpq_mul(q_, q_, o.q_); return *this; }
    Rat& operator/=(const Rat& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return mpq_equal(a.q_, b.q_) != 0; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

    int sign() const { return mpq_sgn(q_); }
    bool is_zero() const { return mpq_sgn(q_) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(q_), 1) == 0; }
    Rat abs() const { Rat r; mpq_abs(r.q_, q_); return r; }

    Int floor() const {
        Int r;
        mpz_fdiv_q(r.raw(), mpq_numref(q_), mpq_denref(q_));
        return r;
    }
    // Representative of *this mod 1 in [0, 1).
    Rat mod1() const { return *this - Rat(floor()); }

    Rat pow(long e) const {
        if (e == 0) return Rat(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rat: 0^negative");
            return Rat(0);
        }
        Rat base = e < 0 ? Rat(1) / *this : *this;
        unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
        Rat r;
        mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
        mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
        return r;
    }

    double to_double() const { return mpq_get_d(q_); }

    std::string str() const {
        if (is_integer()) return num().str();
        return num().str() + "/" + den().str();
    }

    static Rat binomial(const Rat& top, unsigned long k);  // falling factorial / k!

private:
    mpq_t q_;
};

inline Rat Rat::binomial(const Rat& top, unsigned long k) {
    Rat r(1);
    Rat t = top;
    for (unsigned long i = 0; i < k; ++i) {
        r *= t;
        t -= Rat(1);
    }
    Int kf = Int::factorial(k);
    return r / Rat(kf);
}

std::ostream& operator<<(std::ostream& os, const Rat& x);

}  // namespace mfh
