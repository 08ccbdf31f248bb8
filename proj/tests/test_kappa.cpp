#include <doctest.h>

#include <cstdio>
#include <sstream>
#include <fstream>

#include "mfheight/kappa.hpp"
#include "mfheight/operators.hpp"
#include "mfheight/weilrep.hpp"

using namespace mfh;

TEST_CASE("split lattice construction, N = 1, D0 = -4, r0 = 0") {
    SplitLattices sl = build_split(1, -4, 0);
    CHECK(sl.t() == 2);          // gcd(0, 2) = 2
    CHECK(sl.p_norm() == 1);     // N |D0| / t^2 = 4/4, P generated by w itself
    CHECK(sl.p_disc() == 2);
    CHECK(sl.n_disc() == 4);
    CHECK(sl.m0() == Rat(1));
    // Gram from Q = N det: Q(e1) = -N
    CHECK(sl.gram()[0][0] == -2);
    CHECK(sl.gram()[0][1] == 0);
    CHECK(sl.gram()[1][1] == -2);
}

TEST_CASE("split lattice definiteness and index bookkeeping") {
    struct Case { long N, D0, r0; };
    for (const Case& c : {Case{1, -3, 1}, Case{2, -7, 1}, Case{2, -15, 1},
                          Case{3, -11, 1}, Case{3, -23, 5}, Case{5, -4, 4},
                          Case{1, -4, 2}}) {
        SplitLattices sl = build_split(c.N, c.D0, c.r0);
        long det = sl.gram()[0][0] * sl.gram()[1][1] - sl.gram()[0][1] * sl.gram()[1][0];
        CHECK(sl.gram()[0][0] < 0);
        CHECK(det == -c.D0);
        // |N'#/N'| |P#/P| = 2N [L : N'+P]^2 with index |D0|/t
        long idx = (-c.D0) / sl.t();
        CHECK((-c.D0) * sl.p_disc() == 2 * c.N * idx * idx);
        CHECK(sl.fiber_size() == idx);
    }
    CHECK_THROWS_AS(build_split(1, -12, 0), std::domain_error);  // not fundamental
    CHECK_THROWS_AS(build_split(1, -3, 0), std::domain_error);   // congruence fails
}

TEST_CASE("nu indexing is a bijection compatible with negation and q") {
    SplitLattices sl = build_split(2, -15, 1);
    long disc = sl.n_disc();
    std::vector<int> seen(disc, 0);
    for (long p = 0; p < disc; ++p)
        for (long q = 0; q < disc; ++q) seen[sl.nu_index(p, q)] = 1;
    for (long i = 0; i < disc; ++i) CHECK(seen[i] == 1);
    for (long i = 0; i < disc; ++i) {
        CHECK(sl.nu_negate(sl.nu_negate(i)) == i);
        CHECK(sl.nu_q_mod1_by_index(sl.nu_negate(i)) == sl.nu_q_mod1_by_index(i));
    }
    // nu = 0 is the trivial coset
    CHECK(sl.nu_index(0, 0) == 0);
    CHECK(sl.nu_q_mod1_by_index(0) == Rat(0));
}

TEST_CASE("fiber over mu matches the closed-form coset map") {
    SplitLattices sl = build_split(3, -11, 1);
    long r1 = 2;
    auto fiber = sl.fiber_over(r1);
    CHECK(static_cast<long>(fiber.size()) == sl.fiber_size());
    // every n in the congruence class must land on a fiber pair
    for (long n = sl.r0() * r1 - 20 * 6; n <= sl.r0() * r1 + 20 * 6; n += 6) {
        long nu = sl.nu_index_for_n(n, r1);
        long pc = sl.p_coset_for_n(n, r1);
        bool found = false;
        for (const auto& fp : fiber)
            if (fp.nu_coset == nu && fp.p_coset == pc) found = true;
        // p-coset and nu-coset must be paired consistently mod the fiber period
        long k = (n - sl.r0() * r1) / (2 * 3);
        long kmod = ((k % sl.fiber_size()) + sl.fiber_size()) % sl.fiber_size();
        CHECK(fiber[kmod].nu_coset == nu);
        (void)found;
    }
}

TEST_CASE("theta expansions of the rank-1 lattice") {
    SplitLattices sl = build_split(1, -4, 0);
    ThetaP th = theta_P_expansions(sl, Rat(1), Rat(9));

    // constant term of the unary theta is 1 (the zero vector)
    CHECK((th.unary.at(Rat(0), 0) - Coef(Rat(1))).is_zero());
    // Millson constant term vanishes by odd symmetry
    CHECK(th.millson.at(Rat(0), 0).is_zero());

    // exponent spacing: Q(k lambda0) = k^2 Q0; first nonzero exponent on the
    // trivial coset is Q0 = 1 with unary coefficient 2 (k = +-1)
    CHECK((th.unary.at(Rat(1), 0) - Coef(Rat(2))).is_zero());
    CHECK((th.unary.at(Rat(4), 0) - Coef(Rat(2))).is_zero());
    CHECK(th.unary.at(Rat(2), 0).is_zero());

    // Millson: p(y lambda0) = -(2N/t) y sqrt(m0); y and -y cancel whenever
    // they share a coset (trivial coset, and the 2-torsion coset y = 1/2 + Z)
    CHECK(th.millson.at(Rat(1), 0).is_zero());
    CHECK(th.millson.at(Rat(1, 4), 1).is_zero());

    // unary even / millson odd under coset negation
    long two_q0 = sl.p_disc();
    for (const auto& [key, c] : th.millson.terms()) {
        long neg = (two_q0 - key.second) % two_q0;
        Coef d = th.millson.at(key.first, neg) + c;
        CHECK(d.is_zero());
    }
    for (const auto& [key, c] : th.unary.terms()) {
        long neg = (two_q0 - key.second) % two_q0;
        Coef d = th.unary.at(key.first, neg) - c;
        CHECK(d.is_zero());
    }
}

TEST_CASE("millson theta carries the -sqrt(m0) scale") {
    SplitLattices sl = build_split(1, -3, 1);  // t = 1, lambda0 = 2N w0, m0 = 3/4
    ThetaP th = theta_P_expansions(sl, Rat(3, 4), Rat(13));
    // Q0 = N|D0|/t^2 = 3; coset 1 holds y = 1/6 + Z, first vector y = 1/6 at
    // exponent 3/36 = 1/12 with p = -(2)(1/6) sqrt(3/4) = -(1/3) sqrt(3/4)
    Coef c = th.millson.at(Rat(1, 12), 1);
    SurdVal expect = SurdVal::with_radicand(Rat(0), Rat(-1, 3), Rat(3, 4));
    CHECK((c - Coef(expect)).is_zero());
}

TEST_CASE("theta series transform under S with the rank-1 Weil matrices") {
    // Numeric check of theta |_{1/2, rho_P} S = theta and the Millson
    // analogue at weight 3/2: ties the lattice data to the metaplectic
    // matrices. The P-form matrices are the dual-flag level-Q0 matrices.
    SplitLattices sl = build_split(1, -4, 0);
    ThetaP th = theta_P_expansions(sl, Rat(1), Rat(40));
    DiscriminantForm dfp(sl.p_norm());  // Z/2Q0 with the dual q-values

    long prec = 192;
    BigFloat u(Rat(1, 7), prec), v(Rat(1), prec);
    BigFloat tol(1e-25, prec);

    auto direct_u = eval_expansion(th.unary, u, v);
    auto slashed_u = eval_slash_s(th.unary, Rat(1, 2), true, dfp, u, v);
    for (long i = 0; i < th.unary.ncomp(); ++i)
        CHECK((direct_u[i] - slashed_u[i]).abs() < tol);

    auto direct_m = eval_expansion(th.millson, u, v);
    auto slashed_m = eval_slash_s(th.millson, Rat(3, 2), true, dfp, u, v);
    for (long i = 0; i < th.millson.ncomp(); ++i)
        CHECK((direct_m[i] - slashed_m[i]).abs() < tol);
}

TEST_CASE("kappa providers: invariants, determinism, round trip") {
    SplitLattices sl = build_split(2, -7, 1);

    KappaProvider zero = KappaProvider::zero(sl);
    CHECK(zero.value(Rat(3, 8), 1).is_zero());
    CHECK(zero.value(Rat(-1), 0).is_zero());

    KappaProvider s1 = KappaProvider::synthetic(sl, 1, Rat(3));
    KappaProvider s1b = KappaProvider::synthetic(sl, 1, Rat(3));
    CHECK(s1.table().size() == s1b.table().size());
    {
        auto it1 = s1.table().begin();
        auto it2 = s1b.table().begin();
        for (; it1 != s1.table().end(); ++it1, ++it2) {
            CHECK(it1->first == it2->first);
            CHECK((it1->second - it2->second).is_zero());
        }
    }

    // structural vanishing
    CHECK(s1.value(Rat(-2), 0).is_zero());
    for (long nu = 1; nu < sl.n_disc(); ++nu) CHECK(s1.value(Rat(0), nu).is_zero());
    // symmetry kappa(n, -nu) = kappa(n, nu)
    for (const auto& [key, c] : s1.table()) {
        Coef d = s1.value(key.first, sl.nu_negate(key.second)) - c;
        CHECK(d.is_zero());
    }
    // out-of-support queries error
    CHECK_THROWS_AS(s1.value(Rat(5), 0), std::out_of_range);

    // file round trip
    std::string path = "kappa_test_table.txt";
    s1.save(path);
    KappaProvider loaded = KappaProvider::load(path);
    CHECK(loaded.level() == 2);
    CHECK(loaded.D0() == -7);
    CHECK(loaded.table().size() == s1.table().size());
    for (const auto& [key, c] : s1.table()) {
        Coef d = loaded.value(key.first, key.second) - c;
        CHECK(d.is_zero());
    }
    std::remove(path.c_str());
}

TEST_CASE("kappa file validation catches bad rows") {
    SplitLattices sl = build_split(1, -3, 1);
    auto write_and_load = [](const std::string& content) {
        std::string path = "kappa_bad_table.txt";
        std::ofstream out(path);
        out << content;
        out.close();
        try {
            KappaProvider::load(path);
            std::remove(path.c_str());
            return std::string("loaded");
        } catch (const std::exception& e) {
            std::remove(path.c_str());
            return std::string(e.what());
        }
    };
    // negative exponent
    CHECK(write_and_load("kappa-table v1 N=1 D0=-3 r0=1\n-1/1 0 2\n").find("n<0") !=
          std::string::npos);
    // off-grid exponents rejected with the row number
    CHECK(write_and_load("kappa-table v1 N=1 D0=-3 r0=1\n0/1 1 0\n") != "loaded");
    CHECK(write_and_load("kappa-table v1 N=1 D0=-3 r0=1\n1/2 0 1\n").find("grid") !=
          std::string::npos);
    // asymmetric table: craft on-grid rows with unequal values at +-nu
    {
        long nu = 1;
        long neg = sl.nu_negate(nu);
        REQUIRE(neg != nu);
        Rat q = sl.nu_q_mod1_by_index(nu);
        std::ostringstream content;
        content << "kappa-table v1 N=1 D0=-3 r0=1\n"
                << q.num().str() << "/" << q.den().str() << " " << nu << " 5\n"
                << q.num().str() << "/" << q.den().str() << " " << neg << " 7\n";
        CHECK(write_and_load(content.str()).find("kappa(n, -nu)") != std::string::npos);
    }
    // decimal literals load but poison exactness
    std::string path = "kappa_decimal.txt";
    {
        std::ofstream out(path);
        out << "kappa-table v1 N=1 D0=-3 r0=1\n0/1 0 1.5\n";
    }
    KappaProvider dec = KappaProvider::load(path);
    CHECK_FALSE(dec.all_exact());
    std::remove(path.c_str());
}

TEST_CASE("eisenstein assembly") {
    SplitLattices sl = build_split(1, -3, 1);
    KappaProvider prov = KappaProvider::synthetic(sl, 9, Rat(3));
    VVQExpansion e = eisenstein_expansion(sl, prov, Rat(3));
    CHECK(e.ncomp() == 3);
    for (const auto& [key, c] : e.terms()) {
        CHECK(key.first.sign() >= 0);
        // on-grid exponents only
        CHECK((key.first - sl.nu_q_mod1_by_index(key.second)).mod1().is_zero());
    }
    // zero provider gives the empty series
    CHECK(eisenstein_expansion(sl, KappaProvider::zero(sl), Rat(3)).empty());
}
