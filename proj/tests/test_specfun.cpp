#include <doctest.h>

#include "mfheight/prng.hpp"
#include "mfheight/specfun.hpp"

using namespace mfh;

namespace {

// Independent oracle: symbolic differentiation of (x^2-1)^n, coefficientwise,
// without going through RatPoly::derivative on the full product form.
RatPoly rodrigues_oracle(long n) {
    // (x^2-1)^n by explicit binomial expansion
    std::vector<Rat> p(2 * n + 1, Rat(0));
    for (long k = 0; k <= n; ++k) {
        Rat c = Rat(Int::binomial(Int(n), k)) * Rat(-1).pow(n - k);
        p[2 * k] = c;
    }
    // n-fold derivative, done coefficient-by-coefficient
    for (long d = 0; d < n; ++d) {
        std::vector<Rat> q(p.size() > 1 ? p.size() - 1 : 0, Rat(0));
        for (size_t i = 1; i < p.size(); ++i) q[i - 1] = Rat(static_cast<long>(i)) * p[i];
        p = std::move(q);
    }
    Rat scale(Int(1), Int::pow(Int(2), n) * Int::factorial(n));
    for (Rat& c : p) c *= scale;
    return RatPoly(p);
}

}  // namespace

TEST_CASE("legendre_rodrigues small cases") {
    CHECK(legendre_rodrigues(0) == RatPoly::constant(Rat(1)));
    CHECK(legendre_rodrigues(1) == RatPoly::x());
    // n = 4: (35x^4 - 30x^2 + 3)/8, frozen from the symbolic oracle
    CHECK(legendre_rodrigues(4) == rodrigues_oracle(4));
    CHECK(legendre_rodrigues(4) ==
          RatPoly({Rat(3, 8), Rat(0), Rat(-30, 8), Rat(0), Rat(35, 8)}));
    // degree and parity
    for (long n = 0; n <= 12; ++n) {
        RatPoly p = legendre_rodrigues(n);
        CHECK(p.degree() == n);
        RatPoly q = p.reflected();
        if (n % 2 == 0)
            CHECK(q == p);
        else
            CHECK(q == Rat(-1) * p);
    }
}

TEST_CASE("legendre_beta equals rodrigues (the Lemma), n <= 30") {
    CHECK(legendre_beta(0) == RatPoly::constant(Rat(1)));
    CHECK(legendre_beta(2) == RatPoly({Rat(-1, 2), Rat(0), Rat(3, 2)}));
    for (long n = 0; n <= 30; ++n) CHECK(legendre_beta(n) == legendre_rodrigues(n));
}

TEST_CASE("odd beta polynomials are odd functions") {
    for (long j = 0; j <= 10; ++j) {
        RatPoly b = legendre_beta(2 * j + 1);
        CHECK(b.reflected() == Rat(-1) * b);
    }
}

TEST_CASE("half-integer binomial sum form of beta_{2j+1}") {
    // beta_{2j+1}(x) = sum_s binom(j+1/2, s) binom(j, s) x^(2j+1-2s) (x^2-1)^s
    for (long j = 0; j <= 6; ++j) {
        RatPoly xsq_m1({Rat(-1), Rat(0), Rat(1)});
        RatPoly acc;
        for (long s = 0; s <= j; ++s) {
            Rat c = half_binom(Rat(2 * j + 1, 2), s) * Rat(Int::binomial(Int(j), s));
            std::vector<Rat> xc(2 * j + 2 - 2 * s, Rat(0));
            xc[2 * j + 1 - 2 * s] = c;
            acc = acc + RatPoly(std::move(xc)) * xsq_m1.pow(static_cast<unsigned long>(s));
        }
        CHECK(acc == legendre_beta(2 * j + 1));
    }
}

TEST_CASE("half_binom examples") {
    CHECK(half_binom(Rat(5, 2), 0) == Rat(1));
    CHECK(half_binom(Rat(17), 0) == Rat(1));
    CHECK(half_binom(Rat(1, 2), 1) == Rat(1, 2));
    CHECK(half_binom(Rat(3, 2), 2) == Rat(3, 8));
    CHECK_THROWS_AS(half_binom(Rat(1, 2), -1), std::domain_error);
    CHECK_THROWS_AS(half_binom(Rat(1, 3), 1), std::domain_error);
}

TEST_CASE("legendre generating function residual") {
    // x = 0: only even n survive
    CHECK(legendre_genfun_check(Rat(0), Rat(1, 5), 4) == Rat(0));
    // x = 1: geometric series, P_n(1) = 1
    CHECK(legendre_genfun_check(Rat(1), Rat(1, 3), 8) == Rat(0));
    for (long n = 0; n <= 8; ++n) CHECK(legendre_rodrigues(n).eval(Rat(1)) == Rat(1));
    // spec point
    CHECK(legendre_genfun_check(Rat(1, 2), Rat(1, 3), 12) == Rat(0));
    // 50 random rational points, order 20
    SplitMix64 rng(314159);
    int done = 0;
    while (done < 50) {
        Rat x = rng.small_rat(5, 6);
        Rat t = rng.small_rat(3, 7);
        Rat radicand = Rat(1) - Rat(2) * x * t + t * t;
        if (radicand.sign() <= 0) continue;
        CHECK(legendre_genfun_check(x, t, 20) == Rat(0));
        ++done;
    }
    CHECK_THROWS_AS(legendre_genfun_check(Rat(1), Rat(1), 4), std::domain_error);
}

TEST_CASE("inc_gamma closed forms and recurrence") {
    long prec = 192;
    BigFloat tol(1e-25, prec);

    // Gamma(1, x) = e^-x
    BigFloat x(Rat(2), prec);
    CHECK((inc_gamma(BigFloat(Rat(1), prec), x) - (-x).exp()).abs() < tol);

    // Gamma(3, 1) = (x^2 + 2x + 2) e^-x at x = 1  (integration by parts)
    BigFloat one(Rat(1), prec);
    BigFloat expect = BigFloat(Rat(5), prec) * (-one).exp();
    CHECK((inc_gamma(BigFloat(Rat(3), prec), one) - expect).abs() < tol);

    // recurrence Gamma(a+1,x) = a Gamma(a,x) + x^a e^-x on a grid
    for (double ad : {0.5, 1.3, 2.25, -0.75}) {
        for (double xd : {0.4, 1.3, 3.7}) {
            BigFloat a(ad, prec), xx(xd, prec);
            BigFloat lhs = inc_gamma(a + one, xx);
            BigFloat rhs = a * inc_gamma(a, xx) + xx.pow(a) * (-xx).exp();
            CHECK((lhs - rhs).abs() < tol);
        }
    }

    CHECK_THROWS_AS(inc_gamma(BigFloat(Rat(1), prec), BigFloat(Rat(0), prec)),
                    std::domain_error);
    CHECK_THROWS_AS(inc_gamma(BigFloat(Rat(1), prec), BigFloat(Rat(-1), prec)),
                    std::domain_error);
}

TEST_CASE("whittaker script-M sanity") {
    long prec = 192;

    // k = 0: M_{s,0}(v) = v^s e^{-v/2} M(s, 2s, v); at s = 1 this is
    // 2 sinh(v/2) * v / v ... verify against the elementary identity
    // M(1, 2, v) = (e^v - 1)/v, so script-M = e^{-v/2}(e^v - 1) = 2 sinh(v/2).
    for (double vd : {0.3, 1.0, 2.5}) {
        BigFloat v(vd, prec);
        BigFloat got = whittaker_M_script(BigFloat(Rat(1), prec), Rat(0), v);
        BigFloat expect = BigFloat(Rat(2), prec) * (v / BigFloat(Rat(2), prec)).sinh();
        CHECK((got - expect).abs() < BigFloat(1e-40, prec));
    }

    // quadrature-free oracle for the leading power: as v -> 0+,
    // script-M ~ v^(s - k/2)
    {
        BigFloat s(Rat(5, 4), prec);
        Rat k(-1, 2);
        BigFloat v1(1e-8, prec), v2(5e-9, prec);
        BigFloat r = whittaker_M_script(s, k, v1) / whittaker_M_script(s, k, v2);
        BigFloat expect = (v1 / v2).pow(s - BigFloat(k, prec) / BigFloat(Rat(2), prec));
        CHECK((r / expect - BigFloat(Rat(1), prec)).abs() < BigFloat(1e-7, prec));
    }

    // self-consistency across precisions (different truncation depths)
    {
        BigFloat a192 = whittaker_M_script(BigFloat(Rat(5, 4), 192), Rat(-1, 2), BigFloat(Rat(2), 192));
        BigFloat a320 = whittaker_M_script(BigFloat(Rat(5, 4), 320), Rat(-1, 2), BigFloat(Rat(2), 320));
        CHECK((a192 - BigFloat(a320.to_double(), 192)).abs() < BigFloat(1e-14, 192));
        CHECK((a192 - a320).abs() < BigFloat(1e-20, 192));
    }

    CHECK_THROWS_AS(whittaker_M_script(BigFloat(Rat(0), prec), Rat(0), BigFloat(Rat(1), prec)),
                    std::domain_error);
    CHECK_THROWS_AS(whittaker_M_script(BigFloat(Rat(1), prec), Rat(0), BigFloat(Rat(-1), prec)),
                    std::domain_error);
}

TEST_CASE("raising seed identity at s = s0 + 1") {
    long prec = 192;
    BigFloat tol(1e-8, prec);
    struct Pt { Rat m; Rat k; double v; double u; };
    // s = s0 + 1 = 2 - k/2 at each point
    for (const Pt& p : {Pt{Rat(1), Rat(1, 2), 0.8, 0.3},
                        Pt{Rat(2), Rat(-1, 2), 1.3, 0.7},
                        Pt{Rat(3), Rat(3, 2), 0.5, 0.1}}) {
        BigFloat s = BigFloat(Rat(2), prec) - BigFloat(p.k, prec) / BigFloat(Rat(2), prec);
        BigFloat res = raising_seed_check(p.m, s, p.k, BigFloat(p.v, prec), BigFloat(p.u, prec));
        CHECK(res < tol);
    }

    // off the spectral point the identity genuinely fails
    {
        BigFloat s(Rat(3), prec);
        BigFloat res = raising_seed_check(Rat(1), s, Rat(1, 2), BigFloat(0.8, prec), BigFloat(0.3, prec));
        CHECK(res > BigFloat(1e-3, prec));
    }

    // u-shift invariance for integral m
    {
        Rat k(1, 2);
        BigFloat s = BigFloat(Rat(2), prec) - BigFloat(k, prec) / BigFloat(Rat(2), prec);
        BigFloat r1 = raising_seed_check(Rat(2), s, k, BigFloat(0.9, prec), BigFloat(0.25, prec));
        BigFloat r2 = raising_seed_check(Rat(2), s, k, BigFloat(0.9, prec), BigFloat(1.25, prec));
        CHECK((r1 - r2).abs() < BigFloat(1e-30, prec));
    }

    // seed value depends on (4 pi m v, u) only: u = 0, m::v swap
    {
        Rat k(1, 2);
        BigFloat s(Rat(7, 4), prec);
        BigComplex a = poincare_seed(Rat(1), s, k, BigFloat(1.2, prec), BigFloat(Rat(0), prec));
        BigComplex b = poincare_seed(Rat(2), s, k, BigFloat(0.6, prec), BigFloat(Rat(0), prec));
        CHECK((a.re - b.re).abs() < BigFloat(1e-40, prec));
        CHECK((a.im - b.im).abs() < BigFloat(1e-40, prec));
    }
}
