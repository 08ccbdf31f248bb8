#pragma once

#include <map>

#include "mfheight/heegner.hpp"
#include "mfheight/vvq.hpp"

namespace mfh {

// Scalar cusp-form expansion on Gamma_0(N): a_n for n >= 1 (a_0 absent by
// construction). This is what the L-machinery consumes and the Shimura lift
// produces.
struct CuspFormExpansion {
    Rat weight;
    long level = 1;
    long n_max = 0;
    std::map<long, Rat> a;

    Rat coeff(long n) const {
        auto it = a.find(n);
        return it == a.end() ? Rat(0) : it->second;
    }
    void set(long n, const Rat& v) {
        if (n < 1) throw std::domain_error("CuspFormExpansion: cusp forms have no a_0");
        if (!v.is_zero()) a[n] = v;
        if (n > n_max) n_max = n;
    }
};

// Sh_{m0,mu0}(g)_n = sum_{d | n} d^(kappa-1) (D0/d) b(m0 n^2/d^2, (n/d) mu0),
// Kronecker symbol convention throughout. g is a vector-valued table on
// Z/2NZ with exponents on the dual-of-dual grid m = q(mu) mod 1. Missing
// coefficients below g's truncation are zero; reaching past the truncation
// raises with the list of missing indices.
CuspFormExpansion shimura_lift(const VVQExpansion& g, long N, long kappa, const Rat& m0,
                               long mu0, long D0, long n_max);

// Phi^(kappa) expansion: C_kappa pi^kappa i sum_{n>=1} sum_{d|n} d^-kappa
// c+(n^2/d^2, n/d) q^n with C_kappa = (-2)^kappa/(kappa-1)!. The rational
// parts are exact; pi^kappa i is a symbolic prefactor common to all
// coefficients.
struct PhiKappaExpansion {
    long kappa = 1;
    Rat c_kappa;               // (-2)^kappa / (kappa-1)!
    std::map<long, Rat> q_coeffs;  // n -> rational part (prefactor excluded)
    // full coefficient of q^n is  c_kappa * q_coeffs[n] * pi^kappa * i

    Rat coeff_rational(long n) const {
        auto it = q_coeffs.find(n);
        return it == q_coeffs.end() ? Rat(0) : it->second;
    }
};

PhiKappaExpansion phi_kappa_expansion(const VVQExpansion& cplus, long N, long kappa,
                                      long bound);

// res(Phi^(kappa)) = |4N|^((kappa-1)/2) sum c+(-m, mu) m^((kappa-1)/2) Z(m, mu),
// assembled as a formal Heegner cycle with exact surd multiplicities.
HeegnerCycle residue_divisor_assemble(const VVQExpansion& principal_part, long N,
                                      long kappa);

}  // namespace mfh
