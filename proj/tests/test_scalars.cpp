#include <doctest.h>

#include "mfheight/bigfloat.hpp"
#include "mfheight/coef.hpp"
#include "mfheight/cyclo.hpp"
#include "mfheight/prng.hpp"
#include "mfheight/rat.hpp"
#include "mfheight/surd.hpp"

using namespace mfh;

TEST_CASE("Rat canonical form and arithmetic") {
    Rat a(6, 4);
    CHECK(a.num() == Int(3));
    CHECK(a.den() == Int(2));
    CHECK(Rat(-3, -6) == Rat(1, 2));
    CHECK((Rat(1, 3) + Rat(1, 6)) == Rat(1, 2));
    CHECK(Rat("7/3") * Rat(3, 7) == Rat(1));
    CHECK(Rat("1.25") == Rat(5, 4));
    CHECK(Rat(-7, 3).mod1() == Rat(2, 3));
    CHECK(Rat(5, 2).pow(-2) == Rat(4, 25));
    CHECK_THROWS_AS(Rat(1, 0), std::domain_error);
}

TEST_CASE("cyclo_root_of_unity basics") {
    CHECK(Cyclo::root_of_unity(0, 1) == Cyclo::one());
    CHECK(Cyclo::root_of_unity(1, 2) == -Cyclo::one());
    // (1,8)^8 -> 1 by repeated multiplication
    Cyclo z = Cyclo::root_of_unity(1, 8);
    Cyclo acc = Cyclo::one();
    for (int i = 0; i < 8; ++i) acc *= z;
    CHECK(acc == Cyclo::one());
    // periodicity in k
    CHECK(Cyclo::root_of_unity(11, 8) == Cyclo::root_of_unity(3, 8));
    CHECK_THROWS_AS(Cyclo::root_of_unity(1, 0), std::domain_error);
}

TEST_CASE("cyclo_to_bigfloat") {
    long prec = 192;
    BigFloat tol(1e-30, prec);

    BigComplex i4 = Cyclo::root_of_unity(1, 4).to_complex(prec);
    CHECK(i4.re.abs() < tol);
    CHECK((i4.im - BigFloat(Rat(1), prec)).abs() < tol);

    BigComplex e3 = Cyclo::root_of_unity(1, 3).to_complex(prec);
    CHECK((e3.re + BigFloat(Rat(1, 2), prec)).abs() < tol);
    BigFloat half_sqrt3 = BigFloat(Rat(3), prec).sqrt() / BigFloat(Rat(2), prec);
    CHECK((e3.im - half_sqrt3).abs() < tol);

    BigComplex z = (Cyclo::one() + Cyclo::root_of_unity(1, 2)).to_complex(prec);
    CHECK(z.re.abs() < tol);
    CHECK(z.im.abs() < tol);
}

TEST_CASE("cyclo ring law e(a/M) e(b/M) = e((a+b)/M), random M <= 96") {
    SplitMix64 rng(0x5ca1ab1e);
    for (int iter = 0; iter < 400; ++iter) {
        long M = rng.range(1, 96);
        long a = rng.range(-200, 200), b = rng.range(-200, 200);
        CHECK(Cyclo::root_of_unity(a, M) * Cyclo::root_of_unity(b, M) ==
              Cyclo::root_of_unity(a + b, M));
    }
}

TEST_CASE("cyclo commutative ring axioms on random elements") {
    SplitMix64 rng(42);
    auto random_cyclo = [&rng]() {
        long M = rng.range(1, 24);
        Cyclo c;
        int terms = static_cast<int>(rng.range(1, 4));
        for (int t = 0; t < terms; ++t)
            c += rng.small_rat() * Cyclo::root_of_unity(rng.range(0, M - 1), M);
        return c;
    };
    for (int iter = 0; iter < 60; ++iter) {
        Cyclo x = random_cyclo(), y = random_cyclo(), z = random_cyclo();
        CHECK(x * y == y * x);
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
    }
}

TEST_CASE("cyclo zero test agrees with 192-bit evaluation at 1e-25") {
    // Primary zero test reduces mod Phi_M; the cross-check evaluates
    // numerically. The two must agree on random elements, including planted
    // nontrivial representations of zero (full prime orbits sum to zero).
    SplitMix64 rng(7);
    long prec = 192;
    BigFloat tol(1e-25, prec);
    int zeros = 0, nonzeros = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        long M = rng.range(2, 30);
        Cyclo c;
        for (int t = 0; t < 3; ++t)
            c += rng.small_rat(4, 3) * Cyclo::root_of_unity(rng.range(0, M - 1), M);
        if (iter % 4 == 0) {
            long p = 0;
            for (long q : {2, 3, 5, 7, 11, 13})
                if (M % q == 0) { p = q; break; }
            if (p > 0) {
                Rat s = rng.small_rat(4, 3);
                long shift = rng.range(0, M - 1);
                for (long k = 0; k < p; ++k)
                    c += s * Cyclo::root_of_unity(k * (M / p) + shift, M);
            }
        }
        bool exact_zero = c.is_zero();
        bool numeric_zero = c.to_complex(prec).abs() < tol;
        CHECK(exact_zero == numeric_zero);
        (exact_zero ? zeros : nonzeros)++;
    }
    CHECK(nonzeros > 0);
}

TEST_CASE("planted zero representations are detected exactly") {
    for (long p : {2L, 3L, 5L, 7L}) {
        for (long cof : {1L, 2L, 6L}) {
            long M = p * cof;
            Cyclo c;
            for (long k = 0; k < p; ++k) c += Cyclo::root_of_unity(k * cof + 3, M);
            CHECK(c.is_zero());
        }
    }
}

TEST_CASE("gauss-sum square roots square back to n") {
    for (long n = 1; n <= 60; ++n) {
        Cyclo s = Cyclo::sqrt_int(n);
        CHECK(s * s == Rat(n) * Cyclo::one());
        // positive real branch
        CHECK(s.to_complex().re.sign() > 0);
        CHECK(s.to_complex().im.abs() < BigFloat(1e-40, 192));
    }
}

TEST_CASE("surd_mul examples") {
    SurdVal s3 = SurdVal::sqrt_of(Rat(3));
    CHECK(s3 * s3 == SurdVal(Rat(3)));

    SurdVal x = SurdVal::with_radicand(Rat(2, 5), Rat(7), Rat(11));
    CHECK(SurdVal(Rat(1)) * x == x);

    SurdVal a = SurdVal::with_radicand(Rat(2), Rat(1), Rat(5));
    SurdVal b = SurdVal::with_radicand(Rat(2), Rat(-1), Rat(5));
    CHECK(a * b == SurdVal(Rat(-1)));

    SurdVal c = SurdVal::with_radicand(Rat(0), Rat(1), Rat(8));  // 2 sqrt 2
    CHECK(c.kernel() == Int(2));
    CHECK(c.coeff() == Rat(2));

    CHECK(SurdVal::sqrt_of(Rat(9, 4)) == SurdVal(Rat(3, 2)));

    CHECK_THROWS_AS(SurdVal::sqrt_of(Rat(2)) + SurdVal::sqrt_of(Rat(3)), std::domain_error);
}

TEST_CASE("surd ring axioms on random triples with shared radicand") {
    SplitMix64 rng(99);
    for (int iter = 0; iter < 200; ++iter) {
        Rat d = Rat(rng.range(2, 40));
        auto mk = [&]() { return SurdVal::with_radicand(rng.small_rat(), rng.small_rat(), d); };
        SurdVal x = mk(), y = mk(), z = mk();
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x * y == y * x);
    }
}

TEST_CASE("cross-kernel surd products recanonicalize") {
    // sqrt(6) * sqrt(24) = 12 exactly
    CHECK(SurdVal::sqrt_of(Rat(6)) * SurdVal::sqrt_of(Rat(24)) == SurdVal(Rat(12)));
    // sqrt(2) * sqrt(3) = sqrt(6)
    SurdVal v = SurdVal::sqrt_of(Rat(2)) * SurdVal::sqrt_of(Rat(3));
    CHECK(v == SurdVal::sqrt_of(Rat(6)));
    // sqrt(3/4) = sqrt(3)/2
    SurdVal w = SurdVal::sqrt_of(Rat(3, 4));
    CHECK(w.coeff() == Rat(1, 2));
    CHECK(w.kernel() == Int(3));
}

TEST_CASE("half_integer_power multiplicities") {
    CHECK(half_integer_power(Rat(2), 0) == SurdVal(Rat(1)));
    CHECK(half_integer_power(Rat(2), 2) == SurdVal(Rat(2)));
    SurdVal v = half_integer_power(Rat(2), 3);  // 2 sqrt 2
    CHECK(v.coeff() == Rat(2));
    CHECK(v.kernel() == Int(2));
}

TEST_CASE("BigFloat default precision and configuration guard") {
    CHECK(default_precision() >= 192);
    CHECK_THROWS_AS(set_default_precision(64), std::invalid_argument);
    BigFloat x(Rat(1, 3), 192);
    CHECK(x.precision() == 192);
}

TEST_CASE("Coef promotion lattice") {
    Coef r = Rat(1, 2);
    Coef s = SurdVal::sqrt_of(Rat(5));
    Coef c = Cyclo::root_of_unity(1, 3);
    CHECK((r + r).is_rat());
    CHECK((r * s).is_surd());
    CHECK((r * c).is_cyclo());
    CHECK((s * s).is_rat());
    CHECK((s * s) == Coef(Rat(5)));
    Coef mixed = s * c;
    CHECK(!mixed.is_exact());
    Coef minus_one = Cyclo::root_of_unity(1, 2);
    CHECK(minus_one.is_rat());
    CHECK((s * minus_one).is_surd());
}
