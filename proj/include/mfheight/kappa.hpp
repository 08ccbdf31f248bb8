#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mfheight/coef.hpp"
#include "mfheight/vvq.hpp"

namespace mfh {

// Orthogonal splitting attached to (N, D0, r0), D0 = -4N m0 fundamental with
// D0 = r0^2 mod 4N:
//   N' = Z e1 + Z e2, e1 = [[1,0],[-r0,-1]], e2 = [[0,1/N],[(r0^2-D0)/4N,0]],
//   P  = Z lambda0,   lambda0 = (2N/t) w0, t = gcd(r0, 2N),
// where w0 is the norm-m0 vector spanning the positive line (the a = 1
// solution of w0 perp e1, e2). Q = N det throughout; N' is negative definite
// of rank 2 with |N'#/N'| = |D0|, P is positive definite of rank 1 with
// Q(lambda0) = N|D0|/t^2.
class SplitLattices {
public:
    SplitLattices(long N, long D0, long r0);

    long level() const { return N_; }
    long D0() const { return D0_; }
    long r0() const { return r0_; }
    long t() const { return t_; }
    Rat m0() const { return Rat(-D0_, 4 * N_); }

    // Gram matrix of N' (bilinear form values, integer entries).
    const std::array<std::array<long, 2>, 2>& gram() const { return gram_; }
    long n_disc() const { return -D0_; }  // |N'# / N'|

    long p_norm() const { return Q0_; }        // Q(lambda0)
    long p_disc() const { return 2 * Q0_; }    // |P# / P|

    // --- N' coset bookkeeping ------------------------------------------
    // A dual vector nu in N'# is addressed by its integer pairing vector
    // (p, q) = ((nu, e1), (nu, e2)); the class mod N' is canonicalized
    // through the Smith normal form of the Gram matrix.
    long nu_index(long p, long q) const;
    // Q(nu) mod 1 for the class of (p, q), in [0, 1).
    Rat nu_q_mod1(long p, long q) const;
    // per-index versions (any representative of the class)
    Rat nu_q_mod1_by_index(long idx) const;
    // index of -nu
    long nu_negate(long idx) const;

    // --- fiber of L#/(P + N') over mu in L#/L --------------------------
    // Lift xi_k = mu_{r1} + [[0,0],[k,0]], k = 0..|D0|/t - 1; returns the
    // (P-coset index, N'-coset index) pair of the k-th lift.
    struct FiberPair {
        long p_coset;
        long nu_coset;
        long k;
    };
    std::vector<FiberPair> fiber_over(long r1) const;
    long fiber_size() const { return (-D0_) / t_; }

    // N'-coset consumed by the closed-form n-sum: the class of
    // proj_N(mu_{r1} + [[0,0],[k,0]]) with k = (n - r0 r1)/2N.
    long nu_index_for_n(long n, long r1) const;
    // P-coset index and exponent of the lattice vector matching n.
    long p_coset_for_n(long n, long r1) const;

private:
    long N_, D0_, r0_, t_;
    long Q0_;
    std::array<std::array<long, 2>, 2> gram_;
    // SNF data: U * G * V = diag(d1, d2); classes of Z^2/(G Z^2) are indexed
    // by (U p) mod (d1, d2).
    std::array<std::array<long, 2>, 2> snf_u_;
    long d1_, d2_;
    std::vector<std::pair<long, long>> nu_reps_;  // pairing-vector rep per index
};

SplitLattices build_split(long N, long D0, long r0);

// q-expansions of the rank-1 lattice P up to the exponent bound:
//   unary:   sum_lambda e(Q(lambda)) e_delta            (weight 1/2 analog)
//   millson: sum_lambda p_{z_U+}(lambda) e(Q(lambda)) e_delta, with
//            p_{z_U+}(y lambda0) = -(2N/t) sqrt(m0) * y  (weight 3/2 analog)
struct ThetaP {
    VVQExpansion unary;
    VVQExpansion millson;
};

ThetaP theta_P_expansions(const SplitLattices& sl, const Rat& m0, const Rat& bound);

// Pluggable source for the Eisenstein coefficients kappa(n, nu). Values come
// from a file, a seeded synthetic table, or the zero provider; the two
// structural vanishing rules (n < 0, and n = 0 with nu != 0) are enforced
// here and never hit the table.
class KappaProvider {
public:
    enum class Kind { Zero, Synthetic, File };

    static KappaProvider zero(const SplitLattices& sl);
    static KappaProvider synthetic(const SplitLattices& sl, std::uint64_t seed,
                                   const Rat& support_bound);
    static KappaProvider load(const std::string& path);

    void save(const std::string& path) const;

    Kind kind() const { return kind_; }
    long level() const { return N_; }
    long D0() const { return D0_; }
    long r0() const { return r0_; }
    const Rat& support_bound() const { return bound_; }
    std::uint64_t seed() const { return seed_; }
    bool all_exact() const { return all_exact_; }

    // kappa(n, nu_index); throws when (n, nu) is admissible, inside no
    // structural-vanishing rule, and not in the table.
    Coef value(const Rat& n, long nu_index) const;

    const std::map<std::pair<Rat, long>, Coef>& table() const { return table_; }

private:
    KappaProvider() = default;

    Kind kind_ = Kind::Zero;
    long N_ = 1, D0_ = -4, r0_ = 0;
    Rat bound_;
    std::uint64_t seed_ = 0;
    bool all_exact_ = true;
    std::map<std::pair<Rat, long>, Coef> table_;
};

// E_N' as a q-expansion on the nu-index components, assembled from the
// provider through the exponent bound.
VVQExpansion eisenstein_expansion(const SplitLattices& sl, const KappaProvider& provider,
                                  const Rat& bound);

}  // namespace mfh
