#include "mfheight/harmonic.hpp"

#include <stdexcept>

#include "mfheight/specfun.hpp"
#include "mfheight/surd.hpp"

namespace mfh {

void HarmonicFormModel::validate() const {
    if (sigma_over_pi != 2 && sigma_over_pi != 4)
        throw std::domain_error("HarmonicFormModel: sigma must be 2 pi or 4 pi");
    for (const auto& [k, c] : nonholo.terms())
        if (k.first.sign() >= 0)
            throw std::domain_error("HarmonicFormModel: f- supported on n < 0 only");
    // finite principal part == holo truncation covers n <= 0
    if (holo.truncation().sign() <= 0)
        throw std::domain_error("HarmonicFormModel: principal part not fully known");
}

VVQExpansion principal_part(const HarmonicFormModel& f) {
    f.validate();
    return f.holo.nonpositive_part();
}

XiImage xi_apply(const HarmonicFormModel& f) {
    f.validate();
    if (f.sigma_over_pi != 4)
        throw std::domain_error(
            "xi_apply: with the 2 pi argument scale the image is not a q-series; "
            "use the 4 pi scale");
    XiImage out;
    out.weight = Rat(2) - f.weight;
    out.dual = !f.dual;
    // K(k, n) = -(4 n)^(1-k) pi^(1-k): for half-integer k the rational part
    // is a surd and the pi power is odd/2.
    Rat one_minus_k = Rat(1) - f.weight;
    Rat doubled = Rat(2) * one_minus_k;
    if (!doubled.is_integer())
        throw std::domain_error("xi_apply: weight must be half-integral");
    out.pi_pow2 = static_cast<int>(doubled.num().to_long());

    out.series = VVQExpansion(f.nonholo.ncomp(), -f.nonholo.min_exponent() + Rat(1));
    for (const auto& [key, c] : f.nonholo.terms()) {
        Rat n = -key.first;  // output exponent, positive
        // (4n)^(1-k) as an exact surd: integer part times a square root when
        // 1-k is a half-integer.
        long p = out.pi_pow2;  // = 2(1-k)
        SurdVal scale = half_integer_power(Rat(4) * n, p >= 0 ? p : -p);
        if (p < 0) scale = SurdVal(Rat(1)) / scale;
        Coef conj_c = c;
        if (c.is_cyclo()) conj_c = Coef(c.cyclo().conj());
        else if (!c.is_exact()) conj_c = Coef(c.to_complex().conj());
        out.series.add_term(n, key.second, Coef(-Rat(1)) * Coef(scale) * conj_c);
    }
    return out;
}

BigComplex xi_fd_single_term(const Rat& k, const Rat& n, int sigma_over_pi,
                             const BigFloat& u, const BigFloat& v) {
    if (n.sign() >= 0) throw std::domain_error("xi_fd_single_term: needs n < 0");
    long prec = u.precision();
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat sigma = BigFloat(Rat(sigma_over_pi), prec) * pi;
    BigFloat absn = BigFloat(n.abs(), prec);
    BigFloat a = BigFloat(Rat(1) - k, prec);

    // f(u, v) = Gamma(1-k, sigma |n| v) e(n (u + iv))
    auto f = [&](const BigFloat& uu, const BigFloat& vv) -> BigComplex {
        BigFloat g = inc_gamma(a, sigma * absn * vv);
        BigComplex ph = BigComplex::e_of(BigFloat(n, prec) * uu);
        BigFloat radial = (BigFloat(Rat(-2), prec) * pi * BigFloat(n, prec) * vv).exp();
        return {g * ph.re * radial, g * ph.im * radial};
    };

    // d/dtau-bar = (d/du + i d/dv)/2, central differences + Richardson
    BigFloat h = BigFloat(1e-20, prec) * v;
    auto central = [&](bool in_u, const BigFloat& step) {
        BigComplex plus = in_u ? f(u + step, v) : f(u, v + step);
        BigComplex minus = in_u ? f(u - step, v) : f(u, v - step);
        BigFloat twoh = BigFloat(Rat(2), prec) * step;
        return BigComplex{(plus.re - minus.re) / twoh, (plus.im - minus.im) / twoh};
    };
    auto richardson = [&](bool in_u) {
        BigComplex d1 = central(in_u, h);
        BigComplex d2 = central(in_u, h / BigFloat(Rat(2), prec));
        BigFloat four(Rat(4), prec), three(Rat(3), prec);
        return BigComplex{(four * d2.re - d1.re) / three, (four * d2.im - d1.im) / three};
    };
    BigComplex fu = richardson(true), fv = richardson(false);
    BigComplex dbar{(fu.re - fv.im) / BigFloat(Rat(2), prec),
                    (fu.im + fv.re) / BigFloat(Rat(2), prec)};

    // xi(f) = 2 i v^k conj(dbar f)
    BigComplex conj_dbar = dbar.conj();
    BigFloat vk = v.pow(BigFloat(k, prec));
    BigComplex two_i_vk{BigFloat(prec), BigFloat(Rat(2), prec) * vk};
    return two_i_vk * conj_dbar;
}

}  // namespace mfh
