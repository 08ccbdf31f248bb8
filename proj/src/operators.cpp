#include "mfheight/operators.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

#include "mfheight/specfun.hpp"

namespace mfh {

VVQExpansion rankin_cohen(const VVQExpansion& f, const Rat& k,
                          const VVQExpansion& g, const Rat& l, long j) {
    if (j < 0) throw std::domain_error("rankin_cohen: j must be nonnegative");

    // Binomials with half-integer tops via the falling-factorial definition.
    std::vector<Rat> bf(j + 1), bg(j + 1);
    for (long s = 0; s <= j; ++s) {
        bf[s] = half_binom(k + Rat(j - 1), s);
        bg[s] = half_binom(l + Rat(j - 1), s);
    }

    // Completeness: a product term at exponent e needs every split
    // e = e1 + e2 with e1, e2 stored; complete below
    // min(f.trunc + g.min, g.trunc + f.min).
    Rat trunc = std::min(f.truncation() + g.min_exponent(),
                         g.truncation() + f.min_exponent());
    VVQExpansion out(f.ncomp() * g.ncomp(), trunc);

    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            Rat e = kf.first + kg.first;
            if (!(e < trunc)) continue;
            Rat weight_sum(0);
            for (long s = 0; s <= j; ++s) {
                Rat term = bf[s] * bg[j - s] * kf.first.pow(j - s) * kg.first.pow(s);
                if (s % 2 == 1) term = -term;
                weight_sum += term;
            }
            if (weight_sum.is_zero()) continue;
            long comp = kf.second * g.ncomp() + kg.second;
            out.add_term(e, comp, cf * cg * Coef(weight_sum));
        }
    }
    return out;
}

Coef serre_pairing(const VVQExpansion& f, const VVQExpansion& g) {
    if (f.ncomp() != g.ncomp())
        throw std::invalid_argument("serre_pairing: component count mismatch");
    // reach: g must be complete up to the deepest pole of f
    Rat reach(0);
    for (const auto& [k, c] : f.terms())
        if (k.first.sign() <= 0) reach = std::max(reach, -k.first);
    if (!(reach < g.truncation()))
        throw std::out_of_range("serre_pairing: g truncated at " + g.truncation().str() +
                                ", needs coefficients through " + reach.str());
    Coef acc = Rat(0);
    for (const auto& [k, c] : f.terms()) {
        if (k.first.sign() > 0) continue;
        acc += c * g.at(-k.first, k.second);
    }
    return acc;
}

namespace {

Cyclo rat_phase(const Rat& x) {  // e(x) for rational x
    Rat r = x.mod1();
    return Cyclo::root_of_unity(r.num().to_long(), r.den().to_long());
}

}  // namespace

VVQExpansion slash_action(const VVQExpansion& form, const Rat& weight,
                          SlashGenerator gen, bool dual, const DiscriminantForm& df) {
    if (form.ncomp() != df.size())
        throw std::domain_error("slash_action: expansion does not live on Z/2NZ");
    VVQExpansion out(form.ncomp(), form.truncation());

    switch (gen) {
        case SlashGenerator::T: {
            // (f|T)_mu(tau) = rho(T)^-1-phase * f_mu(tau + 1):
            // coefficient (n, mu) picks up e(n -+ q(mu)).
            for (const auto& [k, c] : form.terms()) {
                Rat q = df.q_value(k.second);
                Rat phase = dual ? k.first + q : k.first - q;
                out.add_term(k.first, k.second, c * Coef(rat_phase(phase)));
            }
            return out;
        }
        case SlashGenerator::Z: {
            // (f|Z)_mu = i^(-2k) e(-+1/4) f_{-mu} with i^(-2k) = e(-k/2):
            // total phase e(-(2k+1)/4) primal, e((1-2k)/4) dual.
            Rat ph = dual ? (Rat(1) - Rat(2) * weight) / Rat(4)
                          : -(Rat(2) * weight + Rat(1)) / Rat(4);
            Coef phase{rat_phase(ph)};
            for (const auto& [k, c] : form.terms())
                out.add_term(k.first, df.negate(k.second), c * phase);
            return out;
        }
        case SlashGenerator::S:
            throw std::domain_error(
                "slash_action: S mixes components beyond any truncated grid; "
                "evaluate numerically with eval_slash_s");
    }
    throw std::logic_error("slash_action: unreachable");
}

std::vector<BigComplex> eval_expansion(const VVQExpansion& form, const BigFloat& u,
                                       const BigFloat& v) {
    long prec = u.precision();
    std::vector<BigComplex> out(form.ncomp(), BigComplex{BigFloat(prec), BigFloat(prec)});
    for (const auto& [k, c] : form.terms()) {
        BigFloat n(k.first, prec);
        // e(n tau) = e(nu) * exp(-2 pi n v)
        BigComplex ph = BigComplex::e_of(n * u);
        BigFloat radial =
            (BigFloat(Rat(-2), prec) * BigFloat::pi(prec) * n * v).exp();
        BigComplex val = c.to_complex(prec) * ph;
        out[k.second].re += val.re * radial;
        out[k.second].im += val.im * radial;
    }
    return out;
}

std::vector<BigComplex> eval_slash_s(const VVQExpansion& form, const Rat& weight,
                                     bool dual, const DiscriminantForm& df,
                                     const BigFloat& u, const BigFloat& v) {
    if (form.ncomp() != df.size())
        throw std::domain_error("eval_slash_s: expansion does not live on Z/2NZ");
    long prec = u.precision();

    // S tau = -1/tau
    BigFloat den = u * u + v * v;
    BigFloat su = -u / den, sv = v / den;
    std::vector<BigComplex> fs = eval_expansion(form, su, sv);

    // phi(tau)^-2k = tau^-k, principal branch (tau in the upper half plane).
    BigFloat modlog = den.log() / BigFloat(Rat(2), prec);
    BigFloat arg = BigFloat::atan2(v, u);
    BigFloat kf(weight, prec);
    BigFloat mag = (-(kf * modlog)).exp();
    BigComplex rot{(kf * arg).cos(), -(kf * arg).sin()};
    BigComplex autom{mag * rot.re, mag * rot.im};

    // rho(S)^-1 = rho(S)^* (unitary): entries conj(S[b][a]).
    WeilMatrices wm(df, dual);
    std::vector<BigComplex> out(form.ncomp(), BigComplex{BigFloat(prec), BigFloat(prec)});
    for (long a = 0; a < form.ncomp(); ++a) {
        BigComplex acc{BigFloat(prec), BigFloat(prec)};
        for (long b = 0; b < form.ncomp(); ++b) {
            BigComplex m = wm.s_entry(b, a).to_complex(prec).conj();
            acc = acc + m * fs[b];
        }
        out[a] = autom * acc;
    }
    return out;
}

Coef RaisingTable::at(const Rat& n, long comp, long m) const {
    auto it = entries.find({n, comp, m});
    return it == entries.end() ? Coef(Rat(0)) : it->second;
}

std::vector<BigComplex> RaisingTable::eval(const BigFloat& u, const BigFloat& v) const {
    long prec = u.precision();
    BigFloat pi = BigFloat::pi(prec);
    std::vector<BigComplex> out(ncomp, BigComplex{BigFloat(prec), BigFloat(prec)});
    for (const auto& [key, c] : entries) {
        const auto& [n, comp, m] = key;
        BigFloat nn(n, prec);
        BigComplex ph = BigComplex::e_of(nn * u);
        BigFloat radial = (BigFloat(Rat(-2), prec) * pi * nn * v).exp();
        BigFloat scale = pi.pow_si(j - m) * v.pow_si(-m);
        BigComplex val = c.to_complex(prec) * ph;
        out[comp].re += val.re * radial * scale;
        out[comp].im += val.im * radial * scale;
    }
    return out;
}

RaisingTable raising_coeffs(const VVQExpansion& f, const Rat& k, long j) {
    if (j < 0) throw std::domain_error("raising_coeffs: j must be nonnegative");
    RaisingTable t;
    t.input_weight = k;
    t.j = j;
    t.ncomp = f.ncomp();
    for (const auto& [key, c] : f.terms()) {
        const Rat& n = key.first;
        for (long m = 0; m <= j; ++m) {
            // (-4 n)^(j-m) binom(j,m) prod_{s=1..m} (k + j - s), rational part
            // of c(n, mu, m); pi^(j-m) is carried by the column.
            Rat factor = (Rat(-4) * n).pow(j - m) * Rat(Int::binomial(Int(j), m));
            for (long s = 1; s <= m; ++s) factor *= k + Rat(j - s);
            if (factor.is_zero()) continue;
            t.entries[{n, key.second, m}] = c * Coef(factor);
        }
    }
    return t;
}

namespace {

using EvalFn = std::function<std::vector<BigComplex>(const BigFloat&, const BigFloat&)>;

std::vector<BigComplex> apply_R_fd(const EvalFn& fn, const Rat& k, const BigFloat& u,
                                   const BigFloat& v, const BigFloat& h) {
    long prec = u.precision();
    auto central = [&](bool in_u, const BigFloat& step) {
        std::vector<BigComplex> plus = in_u ? fn(u + step, v) : fn(u, v + step);
        std::vector<BigComplex> minus = in_u ? fn(u - step, v) : fn(u, v - step);
        std::vector<BigComplex> d(plus.size(), BigComplex{BigFloat(prec), BigFloat(prec)});
        BigFloat twoh = BigFloat(Rat(2), prec) * step;
        for (size_t i = 0; i < plus.size(); ++i)
            d[i] = {(plus[i].re - minus[i].re) / twoh, (plus[i].im - minus[i].im) / twoh};
        return d;
    };
    auto richardson = [&](bool in_u) {
        std::vector<BigComplex> d1 = central(in_u, h);
        std::vector<BigComplex> d2 = central(in_u, h / BigFloat(Rat(2), prec));
        std::vector<BigComplex> d(d1.size(), BigComplex{BigFloat(prec), BigFloat(prec)});
        BigFloat four(Rat(4), prec), three(Rat(3), prec);
        for (size_t i = 0; i < d1.size(); ++i)
            d[i] = {(four * d2[i].re - d1[i].re) / three,
                    (four * d2[i].im - d1[i].im) / three};
        return d;
    };

    std::vector<BigComplex> du = richardson(true);
    std::vector<BigComplex> dv = richardson(false);
    std::vector<BigComplex> f0 = fn(u, v);

    // R_k = 2i d/dtau + k/v, d/dtau = (d/du - i d/dv)/2:
    // R_k f = i f_u + f_v + k f / v.
    std::vector<BigComplex> out(f0.size(), BigComplex{BigFloat(prec), BigFloat(prec)});
    BigFloat kf(k, prec);
    for (size_t i = 0; i < f0.size(); ++i) {
        BigComplex i_du{-du[i].im, du[i].re};
        out[i] = {i_du.re + dv[i].re + kf * f0[i].re / v,
                  i_du.im + dv[i].im + kf * f0[i].im / v};
    }
    return out;
}

}  // namespace

std::vector<BigComplex> raising_fd_oracle(const VVQExpansion& f, const Rat& k, long j,
                                          const BigFloat& u, const BigFloat& v) {
    long prec = u.precision();
    BigFloat h = BigFloat(1e-12, prec) * (v > BigFloat(Rat(1), prec) ? v : BigFloat(Rat(1), prec));
    EvalFn fn = [&f](const BigFloat& uu, const BigFloat& vv) {
        return eval_expansion(f, uu, vv);
    };
    Rat weight = k;
    for (long step = 0; step < j; ++step) {
        EvalFn prev = fn;
        Rat w = weight;
        fn = [prev, w, h](const BigFloat& uu, const BigFloat& vv) {
            return apply_R_fd(prev, w, uu, vv, h);
        };
        weight += Rat(2);
    }
    return fn(u, v);
}

}  // namespace mfh
