#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "mfheight/bigfloat.hpp"
#include "mfheight/vvq.hpp"
#include "mfheight/weilrep.hpp"

namespace mfh {

// j-th Rankin-Cohen bracket of two expansions, on the tensor component set
// (component index = cf * g.ncomp + cg; scalar series are the 1x1 case):
//   [f,g]_j = sum_s (-1)^s binom(k+j-1, s) binom(l+j-1, j-s) f^(j-s) g^(s),
// with the (2 pi i)^-s normalization, so n-th coefficients just pick up n^s.
// Exact in the coefficient ring; output weight is k + l + 2j.
VVQExpansion rankin_cohen(const VVQExpansion& f, const Rat& k,
                          const VVQExpansion& g, const Rat& l, long j);

// Serre-duality pairing {f, g}: constant term of <f, g> with the
// unconjugated componentwise product, i.e. sum over e <= 0 and components of
// f[e,c] * g[-e,c]. Errors if g's truncation does not reach the principal
// part of f.
Coef serre_pairing(const VVQExpansion& f, const VVQExpansion& g);

enum class SlashGenerator { T, Z, S };

// f |_{k,rho} gamma for gamma in {T, Z}, exact on expansions. The S action
// mixes components through the full matrix and is not representable on a
// truncated q-grid; requesting it throws (use eval_slash_s at a point).
VVQExpansion slash_action(const VVQExpansion& form, const Rat& weight,
                          SlashGenerator gen, bool dual, const DiscriminantForm& df);

// Pointwise numeric evaluation of the expansion and of f|_{k,rho} S at tau.
std::vector<BigComplex> eval_expansion(const VVQExpansion& form, const BigFloat& u,
                                       const BigFloat& v);
std::vector<BigComplex> eval_slash_s(const VVQExpansion& form, const Rat& weight,
                                     bool dual, const DiscriminantForm& df,
                                     const BigFloat& u, const BigFloat& v);

// Almost-holomorphic coefficient table of R^j applied to a weakly holomorphic
// expansion of weight k: R^j f = sum_{m<=j} c(n, mu, m) q^n v^-m, with
//   c(n, mu, m) = (-4 pi n)^(j-m) binom(j,m) prod_{s=1..m} (k + j - s) c(n, mu).
// Entries store the rational factor; the power pi^(j-m) is implicit per
// column and supplied when evaluating numerically.
struct RaisingTable {
    Rat input_weight;
    long j = 0;
    long ncomp = 1;
    // (exponent, component, column m) -> coefficient (times pi^(j-m))
    std::map<std::tuple<Rat, long, long>, Coef> entries;

    Coef at(const Rat& n, long comp, long m) const;
    // numeric value of the almost-holomorphic form at tau = u + iv
    std::vector<BigComplex> eval(const BigFloat& u, const BigFloat& v) const;
};

RaisingTable raising_coeffs(const VVQExpansion& f, const Rat& k, long j);

// R_k f at tau for a truncated expansion treated as a black box, the partial
// derivatives taken by central finite differences with one Richardson step.
// Iterated j times this is the oracle the raising table is checked against.
std::vector<BigComplex> raising_fd_oracle(const VVQExpansion& f, const Rat& k, long j,
                                          const BigFloat& u, const BigFloat& v);

}  // namespace mfh
