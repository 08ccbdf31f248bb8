#include "mfheight/selftest.hpp"

#include <functional>
#include <sstream>

#include "mfheight/harmonic.hpp"
#include "mfheight/heegner.hpp"
#include "mfheight/intersect.hpp"
#include "mfheight/lfunc.hpp"
#include "mfheight/operators.hpp"
#include "mfheight/prng.hpp"
#include "mfheight/specfun.hpp"
#include "mfheight/weilrep.hpp"

namespace mfh {

namespace {

struct Runner {
    bool quick;
    std::vector<SelfTestResult> results;

    void check(const std::string& name, const std::function<void()>& body) {
        SelfTestResult r;
        r.name = name;
        try {
            body();
            r.pass = true;
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(r);
    }
};

void expect(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

}  // namespace

std::vector<SelfTestResult> run_selftests(bool quick) {
    Runner run{quick, {}};

    run.check("config.precision-floor", [] {
        bool rejected = false;
        try {
            set_default_precision(64);
        } catch (const std::invalid_argument&) {
            rejected = true;
        }
        expect(rejected, "precision below 128 bits must be rejected");
        expect(default_precision() >= 128, "default precision must stay >= 128");
    });

    run.check("weilrep.relations", [&] {
        long nmax = quick ? 4 : 10;
        for (long N = 1; N <= nmax; ++N) {
            RelationReport rep = check_relations(WeilMatrices(DiscriminantForm(N)));
            expect(rep.all_pass, "level " + std::to_string(N) + ": " + rep.summary());
        }
    });

    run.check("weilrep.mutation-detected", [] {
        WeilMatrices wm(DiscriminantForm(3));
        wm.corrupt_s_phase(1, 2);
        RelationReport rep = check_relations(wm);
        expect(!rep.all_pass, "corrupted S matrix must fail the relation checks");
    });

    run.check("specfun.legendre-identity", [&] {
        long nmax = quick ? 10 : 30;
        for (long n = 0; n <= nmax; ++n)
            expect(legendre_rodrigues(n) == legendre_beta(n),
                   "P_n != beta_n at n = " + std::to_string(n));
        expect(legendre_genfun_check(Rat(1, 2), Rat(1, 3), 12) == Rat(0),
               "generating function residual nonzero");
    });

    run.check("specfun.inc-gamma-recurrence", [] {
        long prec = default_precision();
        BigFloat tol(1e-25, prec), one(Rat(1), prec);
        BigFloat a(0.5, prec), x(1.3, prec);
        BigFloat lhs = inc_gamma(a + one, x);
        BigFloat rhs = a * inc_gamma(a, x) + x.pow(a) * (-x).exp();
        expect((lhs - rhs).abs() < tol, "incomplete Gamma recurrence residual too large");
    });

    run.check("specfun.raising-seed", [] {
        long prec = default_precision();
        Rat k(1, 2);
        BigFloat s = BigFloat(Rat(2), prec) - BigFloat(k, prec) / BigFloat(Rat(2), prec);
        BigFloat res = raising_seed_check(Rat(1), s, k, BigFloat(0.8, prec), BigFloat(0.3, prec));
        expect(res < BigFloat(1e-8, prec), "seed raising identity residual too large");
    });

    run.check("heegner.classes-vs-rawbox", [&] {
        std::vector<std::tuple<long, Rat, long>> cases = {
            {1, Rat(1), 0}, {1, Rat(23, 4), 1}, {2, Rat(1), 0}, {3, Rat(23, 12), 1}};
        if (!quick) {
            cases.push_back({5, Rat(1), 0});
            cases.push_back({6, Rat(23, 24), 1});
        }
        for (const auto& [N, m, mu] : cases) {
            HeegnerDivisor a = enumerate_heegner(N, m, mu, HeegnerMode::Classes);
            HeegnerDivisor b = enumerate_heegner(N, m, mu, HeegnerMode::RawBox);
            expect(a.class_count() == b.class_count(),
                   "class count mismatch at N=" + std::to_string(N));
        }
        expect(class_number(-3).h == 1 && class_number(-3).w == 6, "h(-3)");
        expect(class_number(-4).h == 1 && class_number(-4).w == 4, "h(-4)");
        expect(class_number(-23).h == 3 && class_number(-23).w == 2, "h(-23)");
    });

    run.check("intersect.ct-identity", [&] {
        long seeds = quick ? 2 : 5;
        SplitLattices sl(2, -15, 1);
        Rat m1(7, 8);
        long mu1 = 1;
        for (long kappa : {2L, 3L, 4L}) {
            for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(seeds); ++seed) {
                KappaProvider prov = KappaProvider::synthetic(sl, seed, Rat(3));
                Coef direct = ct_direct(sl, kappa, poincare_principal_part(2, kappa, m1, mu1),
                                        prov, Rat(2));
                Coef closed = ct_closed_form(sl, kappa, m1, mu1, prov);
                Coef d = direct - closed;
                expect(d.is_exact() && d.is_zero(),
                       "ct_direct != ct_closed at kappa=" + std::to_string(kappa));
            }
        }
    });

    run.check("intersect.global-cancellation", [] {
        SplitLattices sl(1, -3, 1);
        KappaProvider prov = KappaProvider::synthetic(sl, 7, Rat(3));
        VVQExpansion pp = poincare_principal_part(1, 1, Rat(1), 0);
        GlobalHeight g1 = global_height(sl, 1, pp, prov, false);
        SurdVal expected = SurdVal::with_radicand(Rat(0), Rat(2), Rat(1));
        expect(g1.lprime_coefficient.value == expected && g1.lprime_coefficient.pi_pow2 == -2,
               "kappa=1 coefficient must be 2 sqrt(N)/pi");
        GlobalHeight g0 = global_height(sl, 1, pp, prov, true);
        expect(g0.is_zero(), "weakly holomorphic input must give a vanishing pairing");
    });

    run.check("vvforms.xi-constant", [] {
        long prec = default_precision();
        // single nonholomorphic term, k = -1/2, n = -1, sigma = 4 pi
        Rat k(-1, 2), n(-1);
        BigFloat u(0.3, prec), v(0.7, prec);
        BigComplex got = xi_fd_single_term(k, n, 4, u, v);
        // expected: -(4 pi)^(3/2) q^1 at tau
        BigFloat pi = BigFloat::pi(prec);
        BigFloat K = -(BigFloat(Rat(4), prec) * pi).pow(BigFloat(Rat(3, 2), prec));
        BigComplex q1 = BigComplex::e_of(u);
        BigFloat radial = (BigFloat(Rat(-2), prec) * pi * v).exp();
        BigComplex expected{K * q1.re * radial, K * q1.im * radial};
        expect((got - expected).abs() < BigFloat(1e-10, prec),
               "xi constant disagrees with the FD oracle");
    });

    run.check("operators.raising-fd", [] {
        long prec = 320;
        VVQExpansion f(1, Rat(4));
        f.add_term(Rat(1), 0, Coef(Rat(2)));
        f.add_term(Rat(3), 0, Coef(Rat(-1, 3)));
        Rat k(3, 2);
        RaisingTable table = raising_coeffs(f, k, 1);
        BigFloat u(0.21, prec), v(1.1, prec);
        auto sym = table.eval(u, v);
        auto fd = raising_fd_oracle(f, k, 1, u, v);
        BigFloat diff = (sym[0] - fd[0]).abs();
        BigFloat scale = fd[0].abs() + BigFloat(Rat(1), prec);
        expect(diff / scale < BigFloat(1e-8, prec), "raising table disagrees with FD oracle");
    });

    run.check("lfunc.delta-even-sign", [&] {
        LSeries delta;
        delta.level = 1;
        delta.kappa = 6;
        delta.a = delta_tau_coefficients(quick ? 300 : 600);
        SignDetection sd = sign_detect(delta);
        expect(sd.sign == 1, "Delta must detect sign +1");
    });

    return run.results;
}

}  // namespace mfh
