#include <doctest.h>

#include "mfheight/operators.hpp"
#include "mfheight/weilrep.hpp"

using namespace mfh;

TEST_CASE("discriminant form q-values") {
    DiscriminantForm d1(1);
    CHECK(d1.q_value(0) == Rat(0));
    CHECK(d1.q_value(1) == Rat(3, 4));  // -1/4 mod 1

    DiscriminantForm d3(3);
    CHECK(d3.q_value(3) == Rat(1, 4));  // -9/12 mod 1

    // invariants: periodicity, evenness, polarization
    for (long N : {1L, 2L, 5L, 7L}) {
        DiscriminantForm df(N);
        for (long r = 0; r < df.size(); ++r)
            for (long rp = 0; rp < df.size(); ++rp) {
                Rat lhs = df.bilinear(r, rp);
                Rat rhs = (df.q_value(r + rp) - df.q_value(r) - df.q_value(rp)).mod1();
                CHECK(lhs == rhs);
            }
    }
    CHECK_THROWS_AS(DiscriminantForm(0), std::domain_error);
}

TEST_CASE("weil T and S entries at N = 1") {
    DiscriminantForm df(1);
    WeilMatrices wm(df);
    // T = diag(1, e(3/4)) = diag(1, -i)
    CHECK(wm.t_entry(0, 0) == Cyclo::one());
    CHECK(wm.t_entry(1, 1) == Cyclo::root_of_unity(3, 4));
    CHECK(wm.t_entry(0, 1).is_zero());

    // S = e(1/8)/sqrt(2) * [[1,1],[1,-1]]
    Cyclo scale = Rat(1, 2) * (Cyclo::root_of_unity(1, 8) * Cyclo::sqrt_int(2));
    CHECK(wm.s_entry(0, 0) == scale);
    CHECK(wm.s_entry(0, 1) == scale);
    CHECK(wm.s_entry(1, 0) == scale);
    CHECK(wm.s_entry(1, 1) == -scale);
}

TEST_CASE("rho(S) e_0 has equal components") {
    // bilinear(0, r') = 0, so the first S column is constant
    for (long N : {2L, 3L, 6L}) {
        WeilMatrices wm((DiscriminantForm(N)));
        for (long r = 1; r < 2 * N; ++r) CHECK(wm.s_entry(r, 0) == wm.s_entry(0, 0));
    }
}

TEST_CASE("relations hold exactly for small levels") {
    for (long N = 1; N <= 8; ++N) {
        RelationReport rep = check_relations(WeilMatrices(DiscriminantForm(N)));
        CHECK_MESSAGE(rep.all_pass, "N=", N, ": ", rep.summary());
        RelationReport repd = check_relations(WeilMatrices(DiscriminantForm(N), true));
        CHECK_MESSAGE(repd.all_pass, "dual N=", N, ": ", repd.summary());
    }
}

TEST_CASE("corrupted S phase is detected") {
    WeilMatrices wm((DiscriminantForm(2)));
    wm.corrupt_s_phase(1, 3);
    CHECK_FALSE(check_relations(wm).all_pass);
}

TEST_CASE("slash T leaves grid-consistent forms invariant") {
    long N = 2;
    DiscriminantForm df(N);
    for (bool dual : {false, true}) {
        VVQExpansion f(2 * N, Rat(5));
        for (long r = 0; r < 2 * N; ++r) {
            Rat q = df.q_value(r);
            Rat e = dual ? (-q).mod1() : q;  // exponent on the right grid
            f.add_term(e, r, Coef(Rat(r + 1)));
            f.add_term(e + Rat(2), r, Coef(Rat(1, 3)));
        }
        VVQExpansion ft = slash_action(f, Rat(1, 2), SlashGenerator::T, dual, df);
        for (const auto& [k, c] : f.terms()) {
            Coef d = ft.at(k.first, k.second) - c;
            CHECK(d.is_zero());
        }
    }
}

TEST_CASE("slash T twists off-grid forms by the expected phase") {
    long N = 1;
    DiscriminantForm df(N);
    VVQExpansion f(2, Rat(2));
    f.add_term(Rat(1, 3), 1, Coef(Rat(1)));  // off the q(1) = 3/4 grid
    VVQExpansion ft = slash_action(f, Rat(1, 2), SlashGenerator::T, false, df);
    // phase e(1/3 - 3/4) = e(-5/12)
    Coef expect = Coef(Cyclo::root_of_unity(-5, 12));
    CHECK((ft.at(Rat(1, 3), 1) - expect).is_zero());
}

TEST_CASE("slash Z swaps components and squares to the metaplectic center") {
    long N = 3;
    DiscriminantForm df(N);
    VVQExpansion f(2 * N, Rat(4));
    f.add_term(Rat(1, 2), 1, Coef(Rat(2)));
    f.add_term(Rat(3, 2), 4, Coef(Rat(-7)));

    for (bool dual : {false, true}) {
        for (Rat k : {Rat(1, 2), Rat(3, 2), Rat(-1, 2), Rat(-5, 2)}) {
            VVQExpansion fz = slash_action(f, k, SlashGenerator::Z, dual, df);
            // component swap happened
            CHECK_FALSE(fz.at(Rat(1, 2), df.negate(1)).is_zero());
            // Z^2 = (Id, -1) acts trivially at half-integral weight
            VVQExpansion fzz = slash_action(fz, k, SlashGenerator::Z, dual, df);
            for (const auto& [key, c] : f.terms()) {
                Coef d = fzz.at(key.first, key.second) - c;
                CHECK(d.is_zero());
            }
        }
    }
}

TEST_CASE("slash of the zero form is zero; S is rejected on expansions") {
    DiscriminantForm df(2);
    VVQExpansion zero(4, Rat(3));
    CHECK(slash_action(zero, Rat(1, 2), SlashGenerator::T, false, df).empty());
    CHECK(slash_action(zero, Rat(1, 2), SlashGenerator::Z, true, df).empty());
    CHECK_THROWS_AS(slash_action(zero, Rat(1, 2), SlashGenerator::S, false, df),
                    std::domain_error);
    VVQExpansion bad(3, Rat(1));
    CHECK_THROWS_AS(slash_action(bad, Rat(1, 2), SlashGenerator::T, false, df),
                    std::domain_error);
}
