#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mfheight/coef.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// Integral binary quadratic form A x^2 + B xy + C y^2. Heegner vectors
// w = (a, b, c) of the trace-zero lattice correspond to (A, B, C) = (N c, b, a)
// with discriminant B^2 - 4AC = b^2 - 4Nac = -4Nm.
struct QFormRep {
    long A = 0, B = 0, C = 0;

    long disc() const { return B * B - 4 * A * C; }
    bool positive_definite() const { return A > 0 && disc() < 0; }
    friend bool operator==(const QFormRep& x, const QFormRep& y) {
        return x.A == y.A && x.B == y.B && x.C == y.C;
    }
    friend bool operator<(const QFormRep& x, const QFormRep& y) {
        return std::tie(x.A, x.B, x.C) < std::tie(y.A, y.B, y.C);
    }
    std::string str() const;
};

// 2x2 integer matrix in SL2(Z), acting on forms by substitution.
struct Mat22 {
    long p = 1, q = 0, r = 0, s = 1;

    long det() const { return p * s - q * r; }
    friend Mat22 operator*(const Mat22& x, const Mat22& y) {
        return {x.p * y.p + x.q * y.r, x.p * y.q + x.q * y.s,
                x.r * y.p + x.s * y.r, x.r * y.q + x.s * y.s};
    }
    Mat22 inverse() const {  // det must be 1
        return {s, -q, -r, p};
    }
    bool in_gamma0(long N) const { return r % N == 0; }
    friend bool operator==(const Mat22& x, const Mat22& y) {
        return x.p == y.p && x.q == y.q && x.r == y.r && x.s == y.s;
    }
};

// F o gamma: F(px + qy, rx + sy).
QFormRep form_apply(const QFormRep& f, const Mat22& g);

// Classical reduction of a positive definite form; returns the reduced form
// and gamma with F o gamma = F_red.
std::pair<QFormRep, Mat22> reduce_form(const QFormRep& f);

// Proper automorphs of a positive definite form (the stabilizer in SL2(Z)):
// {+-I} generically, order 4 for the square class, order 6 for D = -3 type.
std::vector<Mat22> proper_automorphs(const QFormRep& f);

// Whether F o gamma = G for some gamma in Gamma_0(N); exact, via reduction
// with transform tracking and the finite automorph list.
bool gamma0_equivalent(const QFormRep& f, const QFormRep& g, long N);

// Right cosets g Gamma_0(N) of SL2(Z), labeled by the first column of g in
// P^1(Z/N): canonical label and one SL2(Z) representative per coset.
long p1_label(long N, long a, long c);
std::vector<std::pair<long, Mat22>> p1_coset_reps(long N);

// h(D) (primitive reduced form count) together with the unit count w
// (4 at D = -4, 6 at D = -3, else 2).
struct ClassNumber {
    long h = 0;
    long w = 2;
};
ClassNumber class_number(long D);

// All reduced positive definite forms of discriminant D, primitive or not.
std::vector<QFormRep> reduced_forms(long D, bool primitive_only);

bool is_fundamental_discriminant(long D);

// deg Z(U) = 4 h(D0) / w(D0) for fundamental D0 < 0.
Rat degree_ZU(long D0);

// CM point of a Heegner vector: z = B/(2A) + sqrt(|D|)/(2A) i for the form
// (A, B, C) = (Nc, b, a), kept exact as x = B/2A and y = y_coeff sqrt(|D|).
struct CMPoint {
    QFormRep form;
    Rat x;        // B / 2A
    Rat y_coeff;  // 1 / 2A, so y^2 = y_coeff^2 |D|
    long weight = 1;  // half the order of the stabilizer in Gamma_0(N)
};

struct HeegnerDivisor {
    long N = 1;
    Rat m;
    long mu = 0;
    long D = 0;  // -4Nm
    std::vector<CMPoint> points;

    long class_count() const { return static_cast<long>(points.size()); }
};

enum class HeegnerMode { Classes, RawBox };

// Z(m, mu) on X_0(N): Gamma_0(N)-classes of positive definite forms
// (Nc, b, a) with b = lift(mu) mod 2N and discriminant -4Nm.
//   Classes: one representative per class, found by scanning the congruence
//     and deduplicating by SL2(Z)-reduced form (one class per reduced form).
//   RawBox: brute force over an explicit (a, b, c) box partitioned into
//     Gamma_0(N)-orbits by the exact pairwise test; the oracle the Classes
//     mode is certified against.
HeegnerDivisor enumerate_heegner(long N, const Rat& m, long mu, HeegnerMode mode,
                                 long box = 0);

// Formal Heegner cycle: (m, mu) -> multiplicity in Q adjoined square roots.
struct HeegnerCycle {
    std::map<std::pair<Rat, long>, Coef> terms;

    bool empty() const { return terms.empty(); }
    void add(const Rat& m, long mu, const Coef& mult) {
        auto [it, inserted] = terms.emplace(std::make_pair(m, mu), mult);
        if (!inserted) {
            it->second += mult;
            if (it->second.is_exact() && it->second.is_zero()) terms.erase(it);
        }
    }
};

// Z_kappa(f)-style combinatorics: multiplicity c+(-m, mu) m^((kappa-1)/2).
// Input terms are (m, mu) -> coefficient with m > 0.
HeegnerCycle build_cycle(const std::map<std::pair<Rat, long>, Coef>& divisor_terms,
                         long kappa);

}  // namespace mfh
