#include "mfheight/intersect.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mfheight/heegner.hpp"
#include "mfheight/operators.hpp"
#include "mfheight/specfun.hpp"

namespace mfh {

std::string SymbolicConst::str() const {
    std::ostringstream os;
    os << value.str();
    if (pi_pow2 != 0) {
        os << " * pi^";
        if (pi_pow2 % 2 == 0)
            os << (pi_pow2 / 2);
        else
            os << "(" << pi_pow2 << "/2)";
    }
    return os.str();
}

BigFloat SymbolicConst::to_bigfloat(long prec_bits) const {
    long prec = prec_bits > 0 ? prec_bits : default_precision();
    BigFloat pi = BigFloat::pi(prec);
    return value.to_bigfloat(prec) * pi.pow(BigFloat(Rat(pi_pow2, 2), prec));
}

namespace {

void check_preconditions(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                         long& D1, long& r1) {
    if (kappa < 1) throw std::domain_error("kappa must be >= 1");
    if (m1.sign() <= 0) throw std::domain_error("m1 must be positive");
    long N = sl.level();
    Rat fourNm = Rat(4 * N) * m1;
    if (!fourNm.is_integer())
        throw std::domain_error("4 N m1 must be an integer discriminant");
    D1 = -fourNm.num().to_long();
    r1 = ((mu1 % (2 * N)) + 2 * N) % (2 * N);
    if (((r1 * r1 - D1) % (4 * N)) != 0)
        throw std::domain_error("m1 incompatible with mu1 (needs m1 = q(mu1) mod 1)");
    long g = std::gcd(std::abs(sl.D0()), std::abs(2 * N * D1));
    if (g != 1) {
        std::ostringstream os;
        os << "precondition (D0, 2N D1) = 1 fails: gcd(" << sl.D0() << ", " << (2 * N)
           << "*" << D1 << ") = " << g;
        throw std::domain_error(os.str());
    }
}

// The common n-sum: sum over n = r0 r1 (mod 2N), n^2 <= D0 D1, of
// kappa((D0 D1 - n^2)/(4N|D0|), nu(n)) * P_{kappa-1}(n / sqrt(D0 D1)).
// P evaluated exactly in Q(sqrt(D0 D1)); for kappa even the sum is a pure
// multiple of sqrt(D0 D1) (odd polynomial), for kappa odd it is rational.
Coef congruence_sum(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                    const KappaProvider& provider) {
    long D1 = 0, r1 = 0;
    check_preconditions(sl, kappa, m1, mu1, D1, r1);
    long N = sl.level();
    long DD = sl.D0() * D1;  // positive
    long r0 = sl.r0();

    RatPoly P = legendre_rodrigues(kappa - 1);
    SurdVal x = SurdVal::with_radicand(Rat(0), Rat(1, DD), Rat(DD));  // n=1 slot: sqrt(DD)/DD

    Coef acc = Rat(0);
    long nmax = static_cast<long>(std::sqrt(static_cast<double>(DD)));
    while ((nmax + 1) * (nmax + 1) <= DD) ++nmax;
    while (nmax * nmax > DD) --nmax;
    long start = ((r0 * r1) % (2 * N) + 2 * N) % (2 * N);
    for (long n = start - 2 * N * ((nmax + start) / (2 * N)); n <= nmax; n += 2 * N) {
        if (n * n > DD) continue;
        Rat n2 = Rat(DD - n * n, 4 * N * (-sl.D0()));
        Coef kv = provider.value(n2, sl.nu_index_for_n(n, r1));
        if (kv.is_zero()) continue;
        // P_{kappa-1}(n x) with x = sqrt(DD)/DD, Horner in the surd ring
        SurdVal arg = SurdVal(Rat(n)) * x;
        SurdVal pval(Rat(0));
        for (long i = P.degree(); i >= 0; --i) pval = pval * arg + SurdVal(P.coeff(i));
        acc += kv * Coef(pval);
    }
    return acc;
}

Coef sign_factor(long kappa) { return Coef(Rat(kappa % 2 == 1 ? 1 : -1)); }  // (-1)^(kappa-1)

}  // namespace

Coef finite_intersection(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                         const KappaProvider& provider) {
    Coef sum = congruence_sum(sl, kappa, m1, mu1, provider);
    SurdVal mm = half_integer_power(sl.m0() * m1, kappa - 1);  // (m0 m1)^((kappa-1)/2)
    Rat half_deg = degree_ZU(sl.D0()) / Rat(2);
    return sign_factor(kappa) * Coef(mm) * Coef(half_deg) * sum;
}

Coef ct_closed_form(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                    const KappaProvider& provider) {
    Coef sum = congruence_sum(sl, kappa, m1, mu1, provider);
    SurdVal m1pow = half_integer_power(m1, kappa - 1);
    return sign_factor(kappa) * Coef(Rat(2)) * Coef(m1pow) * sum;
}

VVQExpansion poincare_principal_part(long N, long kappa, const Rat& m1, long mu1) {
    if (m1.sign() <= 0) throw std::domain_error("poincare_principal_part: m1 must be positive");
    long twoN = 2 * N;
    long r1 = ((mu1 % twoN) + twoN) % twoN;
    long r1n = ((-r1) % twoN + twoN) % twoN;
    VVQExpansion pp(twoN, Rat(1, 1000000));
    Rat mirror(kappa % 2 == 1 ? 1 : -1);  // (-1)^(kappa-1)
    if (r1n == r1) {
        // self-paired component: the seed and its mirror coincide, so the
        // coefficient is 1 + (-1)^(kappa-1): 2 for kappa odd, 0 for kappa even
        Rat c = Rat(1) + mirror;
        if (!c.is_zero()) pp.add_term(-m1, r1, Coef(c));
    } else {
        pp.add_term(-m1, r1, Coef(Rat(1)));
        pp.add_term(-m1, r1n, Coef(mirror));
    }
    return pp;
}

Coef ct_direct(const SplitLattices& sl, long kappa, const VVQExpansion& pp,
               const KappaProvider& provider, const Rat& bound) {
    if (kappa < 1) throw std::domain_error("ct_direct: kappa must be >= 1");
    long N = sl.level();
    if (pp.ncomp() != 2 * N)
        throw std::invalid_argument("ct_direct: principal part must live on Z/2NZ");
    Rat reach(0);
    for (const auto& [key, c] : pp.terms()) {
        if (key.first.sign() > 0)
            throw std::invalid_argument("ct_direct: input must be a principal part (n <= 0)");
        reach = std::max(reach, -key.first);
    }
    if (bound < reach)
        throw std::out_of_range("ct_direct: bound " + bound.str() +
                                " does not cover the principal part reach " + reach.str());

    long j = kappa >= 2 ? (kappa - 2) / 2 : 0;
    bool even = kappa % 2 == 0;
    if (!even) j = (kappa - 1) / 2;

    ThetaP theta = theta_P_expansions(sl, sl.m0(), bound);
    VVQExpansion eis = eisenstein_expansion(sl, provider, bound);
    const VVQExpansion& theta_side = even ? theta.millson : theta.unary;
    Rat theta_weight = even ? Rat(3, 2) : Rat(1, 2);
    VVQExpansion bracket = rankin_cohen(theta_side, theta_weight, eis, Rat(1), j);

    // restriction of f+ to P + N': every lift of mu contributes the same
    // coefficient on its (P-coset, N'-coset) pair
    long disc = sl.n_disc();
    VVQExpansion restricted(sl.p_disc() * disc, pp.truncation());
    for (const auto& [key, c] : pp.terms()) {
        for (const auto& fp : sl.fiber_over(key.second)) {
            long comp = fp.p_coset * disc + fp.nu_coset;
            restricted.add_term(key.first, comp, c);
        }
    }
    return serre_pairing(restricted, bracket);
}

ArchimedeanPart archimedean_part(long N, long kappa, const Rat& m0) {
    if (kappa < 1) throw std::domain_error("archimedean_part: kappa must be >= 1");
    if (m0.sign() <= 0) throw std::domain_error("archimedean_part: m0 must be positive");
    long D0 = -(Rat(4 * N) * m0).num().to_long();
    if (!(Rat(4 * N) * m0).is_integer())
        throw std::domain_error("archimedean_part: 4 N m0 must be integral");

    ArchimedeanPart out;
    SurdVal m0pow = half_integer_power(m0, kappa - 1);
    Rat half_deg = degree_ZU(D0) / Rat(2);
    Rat sign(kappa % 2 == 0 ? 1 : -1);  // (-1)^kappa
    out.ct_coefficient = Coef(Rat(sign)) * Coef(m0pow) * Coef(half_deg);

    // 2 Gamma(kappa - 1/2) sqrt(N) / ((4 pi)^(kappa-1) pi^(3/2)) with
    // Gamma(kappa - 1/2) = (2 kappa - 2)! / (4^(kappa-1) (kappa-1)!) sqrt(pi):
    // rational = 2 (2 kappa - 2)! / (16^(kappa-1) (kappa-1)!), pi power -kappa.
    Rat rational = Rat(2) * Rat(Int::factorial(2 * kappa - 2)) /
                   (Rat(Int::pow(Int(16), kappa - 1)) * Rat(Int::factorial(kappa - 1)));
    out.lprime_coefficient.value = SurdVal::with_radicand(Rat(0), rational, Rat(N));
    out.lprime_coefficient.pi_pow2 = static_cast<int>(-2 * kappa);
    return out;
}

GlobalHeight global_height(const SplitLattices& sl, long kappa, const VVQExpansion& pp,
                           const KappaProvider& provider, bool weakly_holomorphic) {
    // termwise coprimality over the principal part support
    for (const auto& [key, c] : pp.terms()) {
        if (key.first.sign() > 0) continue;
        if (key.first.is_zero()) continue;
        Rat m = -key.first;
        long D1 = 0, r1 = 0;
        check_preconditions(sl, kappa, m, key.second, D1, r1);
    }

    Rat reach(0);
    for (const auto& [key, c] : pp.terms()) reach = std::max(reach, -key.first);
    Rat bound = reach + Rat(1);

    Coef ct = ct_direct(sl, kappa, pp, provider, bound);

    // finite part per the global assembly:
    //   (-1)^(kappa-1) (m0^((kappa-1)/2) deg/2) CT_f,
    // archimedean CT term:
    //   (-1)^kappa (m0^((kappa-1)/2) deg/2) CT_f.
    ArchimedeanPart arch = archimedean_part(sl.level(), kappa, sl.m0());
    Coef finite_via_ct = Coef(Rat(-1)) * arch.ct_coefficient * ct;
    Coef residual = finite_via_ct + arch.ct_coefficient * ct;
    if (!residual.is_exact() || !residual.is_zero())
        throw std::logic_error("global_height: CT terms failed to cancel exactly");

    GlobalHeight gh;
    gh.ct_value = ct;
    gh.weakly_holomorphic = weakly_holomorphic;
    if (weakly_holomorphic) {
        // xi f = 0: the L' slot is empty and the pairing vanishes.
        gh.lprime_coefficient.value = SurdVal(Rat(0));
        gh.lprime_coefficient.pi_pow2 = 0;
    } else {
        gh.lprime_coefficient = arch.lprime_coefficient;
    }
    return gh;
}

bool finite_ct_ratio_holds(const SplitLattices& sl, long kappa, const Rat& m1, long mu1,
                           const KappaProvider& provider) {
    Coef fin = finite_intersection(sl, kappa, m1, mu1, provider);
    Coef ct = ct_closed_form(sl, kappa, m1, mu1, provider);
    SurdVal m0pow = half_integer_power(sl.m0(), kappa - 1);
    Coef ratio = Coef(m0pow) * Coef(degree_ZU(sl.D0()) / Rat(4));
    Coef diff = fin - ct * ratio;
    return diff.is_exact() && diff.is_zero();
}

}  // namespace mfh
