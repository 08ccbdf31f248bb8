#pragma once

#include "mfheight/operators.hpp"
#include "mfheight/vvq.hpp"

namespace mfh {

// Harmonic weak Maass form data: f = f+ + f-, where f+ is a q-expansion with
// finite principal part and f- is supported on n < 0 with the incomplete
// Gamma profile Gamma(1-k, sigma |n| v). The argument scale sigma is carried
// explicitly as sigma = (sigma_over_pi) * pi with sigma_over_pi in {2, 4};
// only 4 produces a q-series under xi (see xi_apply).
struct HarmonicFormModel {
    Rat weight;        // k
    bool dual = true;  // representation flag: true = conjugate representation
    int sigma_over_pi = 4;
    VVQExpansion holo;     // c+(n, mu)
    VVQExpansion nonholo;  // c-(n, mu), n < 0 only

    void validate() const;
};

// The n <= 0 terms of f+.
VVQExpansion principal_part(const HarmonicFormModel& f);

// Image of f under xi_k = 2i v^k conj(d/dtau-bar): a cusp-type expansion of
// weight 2-k with the representation flag flipped. Termwise,
//   xi_k [ c Gamma(1-k, 4 pi |n| v) e(n tau) e_mu ] = -(4 pi |n|)^(1-k) conj(c) q^|n| e_mu,
// so the output coefficient at (n, mu), n > 0, is
//   -(4 n)^(1-k) * conj(c-(-n, mu))   times the uniform power pi^(1-k).
// The constant was pinned by the finite-difference oracle in the test suite
// before anything downstream consumed it. sigma = 2 pi does not yield a
// q-series (the image keeps a residual v-profile) and is rejected.
struct XiImage {
    Rat weight;  // 2 - k
    bool dual;   // flipped flag
    int pi_pow2; // power of pi carried by every coefficient, doubled (2(1-k))
    VVQExpansion series;
};

XiImage xi_apply(const HarmonicFormModel& f);

// Numeric xi at a point, by finite differences on the single nonholomorphic
// term profile; this is the oracle that fixes the constant above.
BigComplex xi_fd_single_term(const Rat& k, const Rat& n, int sigma_over_pi,
                             const BigFloat& u, const BigFloat& v);

}  // namespace mfh
