#pragma once

#include <string>
#include <vector>

#include "mfheight/cyclo.hpp"
#include "mfheight/rat.hpp"

namespace mfh {

// The discriminant form Z/2NZ of the lattice of trace-zero integer matrices
// with Q(w) = N det w: Q(mu_r) = -r^2/4N mod 1 and (mu_r, mu_r') = -rr'/2N
// mod 1, signature (1,2).
class DiscriminantForm {
public:
    explicit DiscriminantForm(long N);

    long level() const { return N_; }
    long size() const { return 2 * N_; }

    long reduce(long r) const {  // canonical residue in [0, 2N)
        long m = r % size();
        return m < 0 ? m + size() : m;
    }
    long negate(long r) const { return reduce(-r); }

    // Q(mu_r) mod 1, in [0, 1).
    Rat q_value(long r) const { return (Rat(-r * r, 4 * N_)).mod1(); }
    // (mu_r, mu_r') mod 1, in [0, 1).
    Rat bilinear(long r, long rp) const { return (Rat(-r * rp, 2 * N_)).mod1(); }

    // admissibility of an exponent for component r: m = q(r) mod 1
    bool on_grid(const Rat& m, long r, bool dual) const {
        Rat q = q_value(r);
        return (dual ? (m + q) : (m - q)).mod1().is_zero();
    }

private:
    long N_;
};

// Exact Weil representation matrices of the metaplectic generators on
// C[Z/2NZ]. rho(T) is diagonal with entries e(q(r)); rho(S) is the scalar
// e(1/8)/sqrt(2N) times the phase matrix e(r r'/2N). The scalar is stored as
// an exact cyclotomic number (sqrt(2N) enters through Gauss sums), so every
// relation check below is an identity in Q(zeta_lcm(8,4N)).
class WeilMatrices {
public:
    explicit WeilMatrices(const DiscriminantForm& df, bool dual = false);

    const DiscriminantForm& form() const { return df_; }
    bool dual() const { return dual_; }
    long cyclo_order() const { return M_; }

    // Full matrix entries (scalar included).
    Cyclo t_entry(long r, long rp) const;
    Cyclo s_entry(long r, long rp) const;
    const Cyclo& s_scalar() const { return s_scalar_; }

    // rho(Z) e_mu = e((q-p)/4) e_{-mu} with (p,q) = (1,2).
    Cyclo z_entry(long r, long rp) const;

    // Test hook: flips the sign of one S phase, used by the mutation test.
    void corrupt_s_phase(long r, long rp);

    friend struct WeilRelationChecker;

private:
    DiscriminantForm df_;
    bool dual_;
    long M_;                                  // lcm(8, 4N)
    std::vector<long> t_phase_;               // e(t_phase[r]/M) on the diagonal
    std::vector<std::vector<long>> s_phase_;  // e(s_phase[r][r']/M)
    std::vector<std::vector<Rat>> s_sign_;    // +-1, identity except under corruption
    Cyclo s_scalar_;                          // e(+-1/8) * sqrt(2N)/(2N)
};

struct RelationReport {
    bool all_pass = true;
    std::vector<std::string> failures;

    void fail(const std::string& what) {
        all_pass = false;
        failures.push_back(what);
    }
    std::string summary() const;
};

// Verifies, exactly in the cyclotomic ring:
//   rho(S)^2 = rho(Z),   (rho(S) rho(T))^3 = rho(S)^2,   rho(S)^4 = -Id,
//   rho(T)^d = Id for d = lcm of the q(r) denominators,
//   unitarity  rho(S) rho(S)^* = Id,
// and that the dual matrices are entrywise conjugates.
RelationReport check_relations(const WeilMatrices& wm);

}  // namespace mfh
