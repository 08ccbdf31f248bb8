#pragma once

#include <optional>
#include <string>

#include "mfheight/kappa.hpp"
#include "mfheight/vvq.hpp"

namespace mfh {

// rational * sqrt(kernel) * pi^(pi_pow2 / 2): the shape of every symbolic
// constant in the height assembly.
struct SymbolicConst {
    SurdVal value;
    int pi_pow2 = 0;

    bool is_zero() const { return value.is_zero(); }
    std::string str() const;
    BigFloat to_bigfloat(long prec_bits = 0) const;
    friend bool operator==(const SymbolicConst& a, const SymbolicConst& b) {
        if (a.value.is_zero() && b.value.is_zero()) return true;
        return a.value == b.value && a.pi_pow2 == b.pi_pow2;
    }
};

// <Z_kappa(m1, mu1), Z_kappa(U)>_fin: the finite-intersection sum
//   (-1)^(kappa-1) (m0 m1)^((kappa-1)/2) (deg Z(U)/2)
//     * sum_{n = r1 r0 (2N), n^2 <= D0 D1} kappa(...) P_{kappa-1}(n / sqrt(D0 D1)),
// with D1 = -4N m1. Requires gcd(D0, 2N D1) = 1. Exact for kappa odd; a
// single-kernel surd for kappa even. The n = 0 term is included whenever the
// congruence admits it.
Coef finite_intersection(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                         const KappaProvider& provider);

// Closed form of CT_f for the Poincare-type input f_{m1,mu1}:
//   (-1)^(kappa-1) 2 m1^((kappa-1)/2) * (the same n-sum).
Coef ct_closed_form(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                    const KappaProvider& provider);

// CT_f computed from first principles: restrict f+ to P + N', build
// [Theta~_P, E_N']_j (kappa even) or [Theta_P, E_N']_j (kappa odd) through
// rankin_cohen, and take the constant term of the pairing. `pp` holds the
// principal part of f on the 2N components of L#/L (dual grid, exponents
// -m = -q(mu) mod 1).
Coef ct_direct(const SplitLattices& sl, long kappa, const VVQExpansion& pp,
               const KappaProvider& provider, const Rat& bound);

// Principal part of the symmetrized Poincare model f_{m1, mu1}:
// c+(-m1, mu1) = 1 and c+(-m1, -mu1) = (-1)^(kappa-1) (the component symmetry
// forced by invariance under Z at weight 3/2 - kappa, dual representation).
VVQExpansion poincare_principal_part(long N, long kappa, const Rat& m1, long mu1);

// The archimedean decomposition: CT-coefficient (-1)^kappa m0^((kappa-1)/2)
// deg(Z(U))/2 and the L'-coefficient 2 Gamma(kappa-1/2) sqrt(N) /
// ((4pi)^(kappa-1) pi^(3/2)), the half-integral Gamma expanded exactly.
struct ArchimedeanPart {
    Coef ct_coefficient;
    SymbolicConst lprime_coefficient;
};

ArchimedeanPart archimedean_part(long N, long kappa, const Rat& m0);

// Exact global assembly. The finite part enters as
// (-1)^(kappa-1) (m0^((kappa-1)/2) deg Z(U)/2) CT_f, the archimedean part
// contributes the opposite CT term plus the L' term, and the cancellation is
// asserted exactly; the result is the bare L' coefficient (provider
// independent) against the symbolic slot L'(Sh_{m0,mu0}(xi f), kappa).
// Weakly holomorphic input (xi f = 0) empties the slot: the pairing is 0.
struct GlobalHeight {
    SymbolicConst lprime_coefficient;
    Coef ct_value;          // CT_f, provider dependent, reported for reference
    bool weakly_holomorphic = false;
    bool is_zero() const { return weakly_holomorphic; }
};

GlobalHeight global_height(const SplitLattices& sl, long kappa, const VVQExpansion& pp,
                           const KappaProvider& provider, bool weakly_holomorphic);

// finite_intersection / ct_closed_form = m0^((kappa-1)/2) deg(Z(U)) / 4,
// asserted exactly; exposed for the report and the identity tests.
bool finite_ct_ratio_holds(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                           const KappaProvider& provider);

}  // namespace mfh
