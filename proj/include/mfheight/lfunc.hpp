#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfheight/bigfloat.hpp"
#include "mfheight/rat.hpp"
#include "mfheight/shimura.hpp"

namespace mfh {

// Degree-2 L-series of a weight-2kappa cusp form on Gamma_0(N), purely
// coefficient driven. Completion Lambda(s) = N^(s/2) (2pi)^-s Gamma(s) L(s);
// when the sign eps is known, Lambda(s) = eps Lambda(2kappa - s).
struct LSeries {
    long level = 1;
    long kappa = 1;  // weight is 2 kappa
    int sign = 0;    // +1, -1, 0 = unknown
    std::vector<Rat> a;  // a[0] unused; a[n] for 1 <= n <= n_max

    long n_max() const { return static_cast<long>(a.size()) - 1; }
    static LSeries from_cusp_form(const CuspFormExpansion& f);

    // Deligne-style sanity bound |a_n| <= d(n) n^(kappa - 1/2) (1 + slack),
    // used only as a data-quality warning; returns offending n or 0.
    long deligne_warning(double slack = 0.5) const;
};

// Lambda(s) by the smoothed approximate functional equation with split point
// scale A (cutoff_scale):
//   Lambda(s) = sum_n a_n (sqrt N/2 pi n)^s Gamma(s, 2 pi n A/sqrt N)
//             + eps sum_n a_n (sqrt N/2 pi n)^(2k-s) Gamma(2k-s, 2 pi n/(A sqrt N)).
// Needs the sign; errors when the coefficient supply cannot push the
// incomplete-Gamma tail below the target tolerance (the message carries the
// required n_max).
BigFloat lambda_value(const LSeries& ls, const BigFloat& s, const BigFloat& cutoff_scale);

// One-sided smoothed sum (no sign needed); the building block of both the
// value and the sign scan.
BigFloat lambda_one_sided(const LSeries& ls, const BigFloat& s, const BigFloat& cutoff);

struct SignDetection {
    int sign = 0;          // 0 = unknown
    double residual = 0;   // best cutoff-consistency residual
    double other = 0;      // residual of the rejected sign
};

// Picks eps by cutoff-independence of the two-sided AFE on a t-grid around
// the center; both candidates failing the threshold leaves the sign unknown.
SignDetection sign_detect(const LSeries& ls);

struct CentralDerivative {
    BigFloat lambda_center;      // Lambda(kappa)
    BigFloat l_center;           // L(kappa)
    BigFloat l_prime;            // L'(kappa) via the chain factor
    bool central_derivative_of_odd_form = false;  // eps == -1 path
};

// L'(kappa) = Lambda'(kappa) (2pi)^kappa / (N^(kappa/2) Gamma(kappa)),
// Lambda' by termwise s-differentiation of the smoothed sum (dGamma/ds by
// central differences with one Richardson step). Exact chain rule when
// Lambda(kappa) = 0; flagged otherwise. cutoff_scale varies the AFE split
// point for the two-cutoff agreement checks.
CentralDerivative l_derivative_central(const LSeries& ls, const Rat& cutoff_scale = Rat(1));

// Coefficients of Delta = q prod (1-q^n)^24 through n_max, exact, via
// squaring the eta^3 pentagonal series. Internal weight-12 level-1 fixture.
std::vector<Rat> delta_tau_coefficients(long n_max);

// a_p by point counting on y^2 + y = x^3 - x over F_p, extended by the Hecke
// recursion: the conductor-37 weight-2 fixture with eps = -1 (detected, not
// asserted).
std::vector<Rat> curve37_coefficients(long n_max);

}  // namespace mfh
