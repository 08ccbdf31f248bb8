#pragma once

#include <vector>

#include "mfheight/bigfloat.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// Polynomial with exact rational coefficients, ascending degree. The zero
// polynomial is the empty vector.
class RatPoly {
public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
    static RatPoly constant(const Rat& v) { return RatPoly(std::vector<Rat>{v}); }
    static RatPoly x() { return RatPoly({Rat(0), Rat(1)}); }

    const std::vector<Rat>& coeffs() const { return c_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
    Rat coeff(size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
    bool is_zero() const { return c_.empty(); }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
    friend RatPoly operator*(const Rat& s, const RatPoly& a);
    friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const RatPoly& a, const RatPoly& b) { return !(a == b); }

    RatPoly derivative() const;
    RatPoly pow(unsigned long e) const;
    RatPoly truncated(size_t max_degree) const;  // drop terms above max_degree
    Rat eval(const Rat& x) const;
    // p(-x)
    RatPoly reflected() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<Rat> c_;
};

// Legendre polynomial P_n via the Rodrigues formula
// P_n(x) = (1 / 2^n n!) d^n/dx^n (x^2-1)^n.
RatPoly legendre_rodrigues(long n);

// The same polynomial via the combinatorial sum
// beta_n(x) = sum_{s<=n/2} n! / (2^(2s) (n-2s)! (s!)^2) x^(n-2s) (x^2-1)^s.
RatPoly legendre_beta(long n);

// binom(top, s) for half-integer top: falling factorial over s!.
Rat half_binom(const Rat& top, long s);

// Truncation of sum P_n(x) t^n minus the binomial-series expansion of
// (1 - 2xt + t^2)^(-1/2), both cut at t-degree `order`, evaluated at (x, t).
// Exactly zero whenever the generating function identity holds.
Rat legendre_genfun_check(const Rat& x, const Rat& t, long order);

// Upper incomplete Gamma(a, x), x > 0.
BigFloat inc_gamma(const BigFloat& a, const BigFloat& x);

// Script-M Whittaker function  M_{s,k}(v) = v^(-k/2) M_{-k/2, s-1/2}(v),
// evaluated through the Kummer series of M(s + k/2, 2s, v) with an explicit
// geometric tail bound. Rejects 2s in {0,-1,-2,...}.
BigFloat whittaker_M_script(const BigFloat& s, const Rat& k, const BigFloat& v);

// Residual of the j = 1 raising identity on the Poincare seed:
//   (1/(4 pi m)) R_{k-2} [ M_{s,k-2}(4 pi m v) e(-m u) ]  -  M_{s,k}(4 pi m v) e(-m u),
// with the v-derivative inside R taken by central finite differences plus one
// Richardson step. Small (< 1e-8) exactly when s = s0 + 1, s0 = 1 - k/2.
BigFloat raising_seed_check(const Rat& m, const BigFloat& s, const Rat& k,
                            const BigFloat& v, const BigFloat& u);

// The two seed factors separately, for the bookkeeping tests: value of
// M_{s,k}(4 pi m v) e(-m u) at the given point.
BigComplex poincare_seed(const Rat& m, const BigFloat& s, const Rat& k,
                         const BigFloat& v, const BigFloat& u);

}  // namespace mfh
