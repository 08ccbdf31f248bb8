#include "mfheight/shimura.hpp"

#include <sstream>
#include <stdexcept>

#include "mfheight/surd.hpp"

namespace mfh {

CuspFormExpansion shimura_lift(const VVQExpansion& g, long N, long kappa, const Rat& m0,
                               long mu0, long D0, long n_max) {
    if (kappa < 1) throw std::domain_error("shimura_lift: kappa must be >= 1");
    if (m0.sign() <= 0) throw std::domain_error("shimura_lift: m0 must be positive");
    if (Rat(-4 * N) * m0 != Rat(D0))
        throw std::invalid_argument("shimura_lift: needs D0 = -4 N m0");
    if (!is_fundamental_discriminant(D0))
        throw std::domain_error("shimura_lift: D0 must be fundamental");
    if (g.ncomp() != 2 * N)
        throw std::invalid_argument("shimura_lift: input must live on Z/2NZ");

    // collect unreachable indices first so the error can list them
    std::ostringstream missing;
    bool any_missing = false;
    for (long n = 1; n <= n_max; ++n)
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            long q = n / d;
            Rat expo = m0 * Rat(q * q);
            if (!g.known(expo)) {
                missing << " (" << expo.str() << ", " << (q * mu0) % (2 * N) << ")";
                any_missing = true;
            }
        }
    if (any_missing)
        throw std::out_of_range("shimura_lift: input truncation misses indices:" +
                                missing.str());

    CuspFormExpansion out;
    out.weight = Rat(2 * kappa);
    out.level = N;
    out.n_max = n_max;
    for (long n = 1; n <= n_max; ++n) {
        Rat acc(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            int chi = Int::kronecker(Int(D0), Int(d));
            if (chi == 0) continue;
            long q = n / d;
            Rat expo = m0 * Rat(q * q);
            long comp = ((q * mu0) % (2 * N) + 2 * N) % (2 * N);
            Coef b = g.at(expo, comp);
            if (b.is_zero()) continue;
            if (!b.is_rat())
                throw std::invalid_argument("shimura_lift: coefficients must be rational");
            acc += Rat(Int::pow(Int(d), kappa - 1)) * Rat(chi) * b.rat();
        }
        if (!acc.is_zero()) out.set(n, acc);
    }
    return out;
}

PhiKappaExpansion phi_kappa_expansion(const VVQExpansion& cplus, long N, long kappa,
                                      long bound) {
    if (kappa < 1) throw std::domain_error("phi_kappa_expansion: kappa must be >= 1");
    if (cplus.ncomp() != 2 * N)
        throw std::invalid_argument("phi_kappa_expansion: input must live on Z/2NZ");
    PhiKappaExpansion out;
    out.kappa = kappa;
    out.c_kappa = Rat(-2).pow(kappa) / Rat(Int::factorial(kappa - 1));
    for (long n = 1; n <= bound; ++n) {
        Rat acc(0);
        for (long d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            long q = n / d;
            Rat expo(q * q);
            long comp = (q % (2 * N) + 2 * N) % (2 * N);
            if (!cplus.known(expo))
                throw std::out_of_range("phi_kappa_expansion: c+ table misses exponent " +
                                        expo.str());
            Coef c = cplus.at(expo, comp);
            if (c.is_zero()) continue;
            if (!c.is_rat())
                throw std::invalid_argument("phi_kappa_expansion: coefficients must be rational");
            acc += Rat(1, 1) / Rat(Int::pow(Int(d), kappa)) * c.rat();
        }
        if (!acc.is_zero()) out.q_coeffs[n] = acc;
    }
    return out;
}

HeegnerCycle residue_divisor_assemble(const VVQExpansion& principal_part, long N,
                                      long kappa) {
    if (kappa < 1) throw std::domain_error("residue_divisor_assemble: kappa must be >= 1");
    HeegnerCycle cyc;
    SurdVal lead = half_integer_power(Rat(4 * N), kappa - 1);  // |4N|^((kappa-1)/2)
    for (const auto& [key, c] : principal_part.terms()) {
        if (key.first.sign() > 0)
            throw std::invalid_argument("residue_divisor_assemble: input must be a principal part");
        if (key.first.is_zero()) continue;  // m > 0 only
        Rat m = -key.first;
        SurdVal mult = half_integer_power(m, kappa - 1);
        cyc.add(m, key.second, c * Coef(lead) * Coef(mult));
    }
    return cyc;
}

}  // namespace mfh
