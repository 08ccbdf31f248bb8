#include "mfheight/lfunc.hpp"

#include <cmath>
#include <stdexcept>

namespace mfh {

LSeries LSeries::from_cusp_form(const CuspFormExpansion& f) {
    LSeries ls;
    ls.level = f.level;
    Rat two_kappa = f.weight;
    if (!two_kappa.is_integer() || two_kappa.num().to_long() % 2 != 0)
        throw std::domain_error("LSeries: weight must be an even integer");
    ls.kappa = two_kappa.num().to_long() / 2;
    ls.a.assign(f.n_max + 1, Rat(0));
    for (const auto& [n, v] : f.a) ls.a[n] = v;
    return ls;
}

long LSeries::deligne_warning(double slack) const {
    for (long n = 1; n <= n_max(); ++n) {
        if (a[n].is_zero()) continue;
        long d = 0;
        for (long t = 1; t * t <= n; ++t)
            if (n % t == 0) d += (t * t == n) ? 1 : 2;
        double bound = d * std::pow(static_cast<double>(n), kappa - 0.5) * (1.0 + slack);
        if (std::abs(a[n].to_double()) > bound) return n;
    }
    return 0;
}

namespace {

// upper cutoff X with e^-X X^(sigma) below the working tolerance
double tail_cutoff(double sigma, double log_tol) {
    double x = std::max(8.0, -log_tol);
    for (int it = 0; it < 60; ++it) x = -log_tol + std::max(sigma, 0.0) * std::log(x + 2.0) + 2.0;
    return x;
}

}  // namespace

BigFloat lambda_one_sided(const LSeries& ls, const BigFloat& s, const BigFloat& cutoff) {
    long prec = s.precision();
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat sqrtN = BigFloat(Rat(ls.level), prec).sqrt();
    BigFloat two_pi = BigFloat(Rat(2), prec) * pi;

    // tail control: terms carry Gamma(s, 2 pi n A / sqrt N) ~ e^-x x^(s-1);
    // stop once x passes the cutoff for ~prec bits, error if the supply ends
    double log_tol = -0.9 * static_cast<double>(prec) * std::log(2.0);
    double sd = s.to_double();
    double x_need = tail_cutoff(sd - 1.0 + 2.0, log_tol);
    double per_n = 2.0 * M_PI * cutoff.to_double() / std::sqrt(static_cast<double>(ls.level));
    long need = static_cast<long>(x_need / per_n) + 1;
    if (need > ls.n_max())
        throw std::out_of_range("lambda_one_sided: needs coefficients through n_max = " +
                                std::to_string(need) + ", have " + std::to_string(ls.n_max()));

    BigFloat acc(prec);
    for (long n = 1; n <= std::min(need, ls.n_max()); ++n) {
        if (ls.a[n].is_zero()) continue;
        BigFloat nn(Rat(n), prec);
        BigFloat x = two_pi * nn * cutoff / sqrtN;
        BigFloat scale = (sqrtN / (two_pi * nn)).pow(s);
        acc += BigFloat(ls.a[n], prec) * scale * BigFloat::gamma_inc(s, x);
    }
    return acc;
}

BigFloat lambda_value(const LSeries& ls, const BigFloat& s, const BigFloat& cutoff_scale) {
    bool all_zero = true;
    for (long n = 1; n <= ls.n_max() && all_zero; ++n) all_zero = ls.a[n].is_zero();
    if (all_zero) return BigFloat(s.precision());
    if (ls.sign != 1 && ls.sign != -1)
        throw std::domain_error("lambda_value: functional-equation sign unknown (run sign_detect)");
    long prec = s.precision();
    BigFloat two_kappa(Rat(2 * ls.kappa), prec);
    BigFloat one(Rat(1), prec);
    BigFloat head = lambda_one_sided(ls, s, cutoff_scale);
    BigFloat tail = lambda_one_sided(ls, two_kappa - s, one / cutoff_scale);
    return ls.sign == 1 ? head + tail : head - tail;
}

SignDetection sign_detect(const LSeries& ls) {
    long prec = default_precision();
    BigFloat a1(Rat(11, 10), prec), a2(Rat(10, 11), prec);
    double res[2] = {0.0, 0.0};
    for (int idx = 0; idx < 2; ++idx) {
        int eps = idx == 0 ? 1 : -1;
        LSeries probe = ls;
        probe.sign = eps;
        double worst = 0.0;
        for (int ti = 0; ti <= 4; ++ti) {
            BigFloat t = BigFloat(Rat(ti, 4), prec) * BigFloat(Rat(ls.kappa), prec) /
                         BigFloat(Rat(2), prec);
            BigFloat s = BigFloat(Rat(ls.kappa), prec) + t;
            BigFloat v1 = lambda_value(probe, s, a1);
            BigFloat v2 = lambda_value(probe, s, a2);
            double diff = (v1 - v2).abs().to_double();
            double scale = std::max(1e-30, std::max(v1.abs().to_double(), v2.abs().to_double()));
            worst = std::max(worst, diff / scale);
        }
        res[idx] = worst;
    }
    SignDetection out;
    const double threshold = 1e-12;
    if (res[0] < threshold && res[0] < res[1] * 1e-6) {
        out.sign = 1;
        out.residual = res[0];
        out.other = res[1];
    } else if (res[1] < threshold && res[1] < res[0] * 1e-6) {
        out.sign = -1;
        out.residual = res[1];
        out.other = res[0];
    } else {
        out.sign = 0;
        out.residual = std::min(res[0], res[1]);
        out.other = std::max(res[0], res[1]);
    }
    return out;
}

namespace {

// d/ds of the one-sided smoothed sum, termwise; dGamma/ds by central
// differences (1e-8 relative) with one Richardson step.
BigFloat lambda_one_sided_ds(const LSeries& ls, const BigFloat& s, const BigFloat& cutoff) {
    long prec = s.precision();
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat sqrtN = BigFloat(Rat(ls.level), prec).sqrt();
    BigFloat two_pi = BigFloat(Rat(2), prec) * pi;

    double log_tol = -0.9 * static_cast<double>(prec) * std::log(2.0);
    double x_need = tail_cutoff(s.to_double() + 2.0, log_tol);
    double per_n = 2.0 * M_PI * cutoff.to_double() / std::sqrt(static_cast<double>(ls.level));
    long need = static_cast<long>(x_need / per_n) + 1;
    if (need > ls.n_max())
        throw std::out_of_range("lambda derivative: needs coefficients through n_max = " +
                                std::to_string(need));

    BigFloat h = s.abs() * BigFloat(1e-8, prec);
    if (h.is_zero()) h = BigFloat(1e-8, prec);
    BigFloat acc(prec);
    for (long n = 1; n <= std::min(need, ls.n_max()); ++n) {
        if (ls.a[n].is_zero()) continue;
        BigFloat nn(Rat(n), prec);
        BigFloat x = two_pi * nn * cutoff / sqrtN;
        BigFloat base = sqrtN / (two_pi * nn);
        BigFloat scale = base.pow(s);
        // d/ds [ base^s Gamma(s,x) ] = base^s (log(base) Gamma(s,x) + dGamma/ds)
        auto dgamma = [&](const BigFloat& step) {
            return (BigFloat::gamma_inc(s + step, x) - BigFloat::gamma_inc(s - step, x)) /
                   (BigFloat(Rat(2), prec) * step);
        };
        BigFloat d1 = dgamma(h), d2 = dgamma(h / BigFloat(Rat(2), prec));
        BigFloat dg = (BigFloat(Rat(4), prec) * d2 - d1) / BigFloat(Rat(3), prec);
        acc += BigFloat(ls.a[n], prec) * scale *
               (base.log() * BigFloat::gamma_inc(s, x) + dg);
    }
    return acc;
}

}  // namespace

CentralDerivative l_derivative_central(const LSeries& ls, const Rat& cutoff_scale) {
    if (ls.sign != 1 && ls.sign != -1)
        throw std::domain_error("l_derivative_central: sign unknown (run sign_detect)");
    long prec = default_precision();
    BigFloat cutoff(cutoff_scale, prec);
    BigFloat s0(Rat(ls.kappa), prec);
    BigFloat two_kappa(Rat(2 * ls.kappa), prec);
    BigFloat eps(Rat(ls.sign), prec);

    CentralDerivative out;
    out.central_derivative_of_odd_form = ls.sign == -1;
    out.lambda_center = lambda_value(ls, s0, cutoff);

    // Lambda'(kappa) = d/ds [head(s) + eps tail(2k - s)] = head'(kappa) - eps tail'(kappa)
    BigFloat dhead = lambda_one_sided_ds(ls, s0, cutoff);
    BigFloat dtail = lambda_one_sided_ds(ls, two_kappa - s0, BigFloat(Rat(1), prec) / cutoff);
    BigFloat lambda_prime = dhead - eps * dtail;

    // chain factor at s = kappa: Lambda = N^(s/2) (2pi)^-s Gamma(s) L
    const BigFloat pi = BigFloat::pi(prec);
    BigFloat gamma_factor = BigFloat(Rat(ls.level), prec).pow(s0 / BigFloat(Rat(2), prec)) *
                            (BigFloat(Rat(2), prec) * pi).pow(-s0) * s0.gamma();
    out.l_center = out.lambda_center / gamma_factor;
    out.l_prime = lambda_prime / gamma_factor;
    return out;
}

std::vector<Rat> delta_tau_coefficients(long n_max) {
    if (n_max < 1) throw std::domain_error("delta_tau_coefficients: n_max must be >= 1");
    // eta^3 = sum_{k>=0} (-1)^k (2k+1) q^(k(k+1)/2); Delta = q (eta^3)^8.
    long len = n_max;  // coefficients of q^0..q^(n_max-1) of (eta^3)^8
    std::vector<__int128> eta3(len, 0);
    for (long k = 0;; ++k) {
        long e = k * (k + 1) / 2;
        if (e >= len) break;
        eta3[e] = (k % 2 == 0 ? 1 : -1) * static_cast<__int128>(2 * k + 1);
    }
    auto square = [len](const std::vector<__int128>& p) {
        std::vector<__int128> r(len, 0);
        for (long i = 0; i < len; ++i) {
            if (p[i] == 0) continue;
            for (long j = 0; j + i < len; ++j) {
                if (p[j] == 0) continue;
                r[i + j] += p[i] * p[j];
            }
        }
        return r;
    };
    std::vector<__int128> e6 = square(eta3);   // eta^6
    std::vector<__int128> e12 = square(e6);    // eta^12
    std::vector<__int128> e24 = square(e12);   // eta^24
    std::vector<Rat> tau(n_max + 1, Rat(0));
    Int two64 = Int::pow(Int(2), 64);
    for (long n = 1; n <= n_max; ++n) {
        __int128 v = e24[n - 1];
        bool neg = v < 0;
        unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : v;
        Int big = Int::from_u64(static_cast<unsigned long long>(u >> 64)) * two64 +
                  Int::from_u64(static_cast<unsigned long long>(u));
        tau[n] = Rat(neg ? -big : big);
    }
    return tau;
}

std::vector<Rat> curve37_coefficients(long n_max) {
    if (n_max < 1) throw std::domain_error("curve37_coefficients: n_max must be >= 1");
    std::vector<Rat> a(n_max + 1, Rat(0));
    a[1] = Rat(1);
    // smallest-prime-factor sieve
    std::vector<long> spf(n_max + 1, 0);
    for (long p = 2; p <= n_max; ++p)
        if (spf[p] == 0)
            for (long q = p; q <= n_max; q += p)
                if (spf[q] == 0) spf[q] = p;

    for (long p = 2; p <= n_max; ++p) {
        if (spf[p] != p) continue;  // composite
        long ap;
        if (p == 37) {
            ap = 1;  // U_p eigenvalue at the conductor
        } else {
            // #E(F_p) for y^2 + y = x^3 - x
            long count = 1;  // point at infinity
            for (long x = 0; x < p; ++x) {
                long rhs = (((x * x % p) * x % p - x) % p + p) % p;
                for (long y = 0; y < p; ++y)
                    if ((y * y + y) % p == rhs) ++count;
            }
            ap = p + 1 - count;
        }
        // a_{p^k} = a_p a_{p^{k-1}} - p a_{p^{k-2}} away from the conductor;
        // a_{37^k} = a_37^k
        for (long pk = p; pk <= n_max; pk = (pk > n_max / p ? n_max + 1 : pk * p)) {
            if (pk == p)
                a[pk] = Rat(ap);
            else if (p == 37)
                a[pk] = a[pk / p] * Rat(ap);
            else
                a[pk] = a[pk / p] * Rat(ap) - Rat(p) * a[pk / p / p];
        }
    }
    // multiplicativity across coprime prime powers
    for (long n = 2; n <= n_max; ++n) {
        long p = spf[n];
        long pk = 1, m = n;
        while (m % p == 0) {
            m /= p;
            pk *= p;
        }
        if (m > 1) a[n] = a[pk] * a[m];
    }
    return a;
}

}  // namespace mfh
