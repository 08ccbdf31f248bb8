#include "mfheight/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace mfh {

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return RatPoly(std::move(r));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + Rat(-1) * b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return RatPoly();
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return RatPoly(std::move(r));
}

RatPoly operator*(const Rat& s, const RatPoly& a) {
    std::vector<Rat> r = a.c_;
    for (Rat& c : r) c *= s;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    std::vector<Rat> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rat(static_cast<long>(i)) * c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::pow(unsigned long e) const {
    RatPoly r = RatPoly::constant(Rat(1));
    RatPoly base = *this;
    while (e > 0) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

RatPoly RatPoly::truncated(size_t max_degree) const {
    std::vector<Rat> r = c_;
    if (r.size() > max_degree + 1) r.resize(max_degree + 1);
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

RatPoly RatPoly::reflected() const {
    std::vector<Rat> r = c_;
    for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return RatPoly(std::move(r));
}

RatPoly legendre_rodrigues(long n) {
    if (n < 0) throw std::domain_error("legendre_rodrigues: n must be nonnegative");
    RatPoly p = RatPoly({Rat(-1), Rat(0), Rat(1)}).pow(static_cast<unsigned long>(n));
    for (long i = 0; i < n; ++i) p = p.derivative();
    Rat scale = Rat(Int(1), Int::pow(Int(2), n) * Int::factorial(n));
    return scale * p;
}

RatPoly legendre_beta(long n) {
    if (n < 0) throw std::domain_error("legendre_beta: n must be nonnegative");
    RatPoly xsq_m1({Rat(-1), Rat(0), Rat(1)});
    RatPoly acc;
    for (long s = 0; 2 * s <= n; ++s) {
        Rat c(Int::factorial(n),
              Int::pow(Int(2), 2 * s) * Int::factorial(n - 2 * s) *
                  Int::factorial(s) * Int::factorial(s));
        RatPoly xpow(std::vector<Rat>(n - 2 * s + 1, Rat(0)));
        std::vector<Rat> xc(n - 2 * s + 1, Rat(0));
        xc[n - 2 * s] = c;
        acc = acc + RatPoly(std::move(xc)) * xsq_m1.pow(static_cast<unsigned long>(s));
    }
    return acc;
}

Rat half_binom(const Rat& top, long s) {
    if (s < 0) throw std::domain_error("half_binom: s must be nonnegative");
    if (top.den() > Int(2)) throw std::domain_error("half_binom: top must be a half-integer");
    return Rat::binomial(top, static_cast<unsigned long>(s));
}

Rat legendre_genfun_check(const Rat& x, const Rat& t, long order) {
    if (order < 0) throw std::domain_error("legendre_genfun_check: negative order");
    Rat radicand = Rat(1) - Rat(2) * x * t + t * t;
    if (radicand.sign() <= 0)
        throw std::domain_error("legendre_genfun_check: singular radicand");

    // Left: sum_{n<=order} P_n(x) t^n as a polynomial in t.
    std::vector<Rat> lhs(order + 1, Rat(0));
    for (long n = 0; n <= order; ++n) lhs[n] = legendre_rodrigues(n).eval(x);

    // Right: (1-u)^(-1/2) with u = 2xt - t^2, expanded by the binomial series
    // and truncated at t-degree `order`. Term s contributes t-degrees s..2s,
    // so s <= order suffices.
    RatPoly u({Rat(0), Rat(2) * x, Rat(-1)});
    RatPoly rhs;
    RatPoly upow = RatPoly::constant(Rat(1));
    for (long s = 0; s <= order; ++s) {
        Rat c = half_binom(Rat(-1, 2), s) * Rat(-1).pow(s);
        rhs = rhs + c * upow;
        upow = (upow * u).truncated(static_cast<size_t>(order));
    }

    Rat residual(0);
    Rat tpow(1);
    for (long n = 0; n <= order; ++n) {
        residual += (lhs[n] - rhs.coeff(static_cast<size_t>(n))) * tpow;
        tpow *= t;
    }
    return residual;
}

BigFloat inc_gamma(const BigFloat& a, const BigFloat& x) {
    if (x.sign() <= 0)
        throw std::domain_error("inc_gamma: requires x > 0");
    return BigFloat::gamma_inc(a, x);
}

BigFloat whittaker_M_script(const BigFloat& s, const Rat& k, const BigFloat& v) {
    if (v.sign() <= 0) throw std::domain_error("whittaker_M_script: requires v > 0");
    long prec = s.precision();
    // b = 2s at a nonpositive integer is a pole of the Kummer series.
    BigFloat b = BigFloat(Rat(2), prec) * s;
    double b_d = b.to_double();
    if (b_d < 0.5) {
        double nearest = std::floor(b_d + 0.5);
        if (nearest <= 0 && (b - BigFloat(nearest, prec)).abs() < BigFloat(1e-30, prec))
            throw std::domain_error("whittaker_M_script: 2s at a nonpositive integer pole");
    }
    BigFloat a = s + BigFloat(k, prec) / BigFloat(Rat(2), prec);

    // M(a,b,v) = sum t_n, t_0 = 1, t_{n+1} = t_n * (a+n) v / ((b+n)(n+1)).
    // Once |a+n| v / (|b+n| (n+1)) <= 1/2 the tail is bounded by |t_n|, since
    // the remaining terms are dominated by a geometric series of ratio 1/2.
    BigFloat term(Rat(1), prec), acc(Rat(1), prec);
    BigFloat eps = BigFloat::pow2(-(prec - 8), prec);
    BigFloat half(Rat(1, 2), prec);
    for (long n = 0; n < 100000; ++n) {
        BigFloat nf(Rat(n), prec);
        BigFloat ratio = (a + nf) * v / ((b + nf) * (nf + BigFloat(Rat(1), prec)));
        term *= ratio;
        acc += term;
        if (ratio.abs() <= half && term.abs() <= eps * acc.abs()) break;
        if (n == 99999)
            throw std::runtime_error("whittaker_M_script: series did not settle");
    }

    // v^(s-k/2) e^(-v/2) M(a, b, v)
    BigFloat expo = s - BigFloat(k, prec) / BigFloat(Rat(2), prec);
    BigFloat prefactor = v.log() * expo;
    prefactor = prefactor.exp() * (-(v / BigFloat(Rat(2), prec))).exp();
    return prefactor * acc;
}

BigComplex poincare_seed(const Rat& m, const BigFloat& s, const Rat& k,
                         const BigFloat& v, const BigFloat& u) {
    long prec = s.precision();
    BigFloat four_pi_m = BigFloat(Rat(4), prec) * BigFloat::pi(prec) * BigFloat(m, prec);
    BigFloat w = whittaker_M_script(s, k, four_pi_m * v);
    BigComplex phase = BigComplex::e_of(-(BigFloat(m, prec) * u));
    return {w * phase.re, w * phase.im};
}

BigFloat raising_seed_check(const Rat& m, const BigFloat& s, const Rat& k,
                            const BigFloat& v, const BigFloat& u) {
    if (m.sign() <= 0) throw std::domain_error("raising_seed_check: m must be positive");
    long prec = s.precision();
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat four_pi_m = BigFloat(Rat(4), prec) * pi * BigFloat(m, prec);
    Rat k_in = k - Rat(2);

    auto W = [&](const BigFloat& vv) { return whittaker_M_script(s, k_in, four_pi_m * vv); };

    // dW/dv by central differences with one Richardson step, 1e-20 relative
    // step at the 192-bit working precision.
    BigFloat h = v * BigFloat(1e-20, prec);
    auto central = [&](const BigFloat& step) {
        return (W(v + step) - W(v - step)) / (BigFloat(Rat(2), prec) * step);
    };
    BigFloat d1 = central(h);
    BigFloat d2 = central(h / BigFloat(Rat(2), prec));
    BigFloat dW = (BigFloat(Rat(4), prec) * d2 - d1) / BigFloat(Rat(3), prec);

    // R_{k-2} [W(v) e(-mu)] = (2 pi m W + W' + (k-2) W / v) e(-mu); the phase
    // is common to both sides, so the residual is real.
    BigFloat w0 = W(v);
    BigFloat lhs = BigFloat(Rat(2), prec) * pi * BigFloat(m, prec) * w0 + dW +
                   BigFloat(k_in, prec) * w0 / v;
    lhs = lhs / four_pi_m;
    BigFloat rhs = whittaker_M_script(s, k, four_pi_m * v);
    return (lhs - rhs).abs();
}

}  // namespace mfh
