#include "mfheight/weilrep.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace mfh {

DiscriminantForm::DiscriminantForm(long N) : N_(N) {
    if (N < 1) throw std::domain_error("DiscriminantForm: level must be positive");
    for (long r = 0; r < size(); ++r) {
        if (q_value(r) != q_value(r + size()))
            throw std::logic_error("DiscriminantForm: q not periodic");
        if (q_value(r) != q_value(negate(r)))
            throw std::logic_error("DiscriminantForm: q not even");
    }
}

WeilMatrices::WeilMatrices(const DiscriminantForm& df, bool dual)
    : df_(df), dual_(dual), M_(std::lcm(8L, 4 * df.level())) {
    long n = df_.size();
    t_phase_.resize(n);
    s_phase_.assign(n, std::vector<long>(n, 0));
    s_sign_.assign(n, std::vector<Rat>(n, Rat(1)));

    long sgn = dual_ ? -1 : 1;
    for (long r = 0; r < n; ++r) {
        // e(q(r)) = e(-r^2 / 4N): exponent -r^2 * (M/4N) mod M
        long e = ((-(r * r) % (4 * df_.level())) * (M_ / (4 * df_.level()))) % M_;
        t_phase_[r] = ((sgn * e) % M_ + M_) % M_;
        for (long rp = 0; rp < n; ++rp) {
            // e(-(mu_r, mu_r')) = e(r r' / 2N)
            long f = ((r * rp) % (2 * df_.level())) * (M_ / (2 * df_.level())) % M_;
            s_phase_[r][rp] = ((sgn * f) % M_ + M_) % M_;
        }
    }

    // e(-(p-q)/8) = e(1/8) for signature (1,2); conjugated in the dual.
    Cyclo eighth = Cyclo::root_of_unity(sgn * 1, 8);
    Cyclo sqrt2N = Cyclo::sqrt_int(2 * df_.level());
    s_scalar_ = Rat(1, 2 * df_.level()) * (eighth * sqrt2N);
}

Cyclo WeilMatrices::t_entry(long r, long rp) const {
    if (df_.reduce(r) != df_.reduce(rp)) return Cyclo::zero();
    return Cyclo::root_of_unity(t_phase_[df_.reduce(r)], M_);
}

Cyclo WeilMatrices::s_entry(long r, long rp) const {
    long a = df_.reduce(r), b = df_.reduce(rp);
    return s_scalar_ * (s_sign_[a][b] * Cyclo::root_of_unity(s_phase_[a][b], M_));
}

Cyclo WeilMatrices::z_entry(long r, long rp) const {
    if (df_.reduce(r) != df_.negate(rp)) return Cyclo::zero();
    return Cyclo::root_of_unity(dual_ ? -1 : 1, 4);
}

void WeilMatrices::corrupt_s_phase(long r, long rp) {
    s_sign_[df_.reduce(r)][df_.reduce(rp)] = -s_sign_[df_.reduce(r)][df_.reduce(rp)];
}

std::string RelationReport::summary() const {
    if (all_pass) return "all relations hold";
    std::ostringstream os;
    os << failures.size() << " relation failure(s): ";
    for (size_t i = 0; i < failures.size(); ++i) {
        if (i) os << "; ";
        os << failures[i];
    }
    return os.str();
}

struct WeilRelationChecker {
    const WeilMatrices& wm;
    long n;

    explicit WeilRelationChecker(const WeilMatrices& w) : wm(w), n(w.df_.size()) {}

    void run(RelationReport& rep) const {
        const Cyclo s2_scalar = wm.s_scalar_ * wm.s_scalar_;

        // Working with the scalar factored out keeps intermediate entries at
        // O(2N) cyclotomic terms.
        std::vector<std::vector<Cyclo>> s2(n, std::vector<Cyclo>(n));
        for (long a = 0; a < n; ++a)
            for (long b = 0; b < n; ++b) {
                Cyclo acc;
                for (long k = 0; k < n; ++k)
                    acc += wm.s_sign_[a][k] * wm.s_sign_[k][b] *
                           Cyclo::root_of_unity(wm.s_phase_[a][k] + wm.s_phase_[k][b], wm.M_);
                s2[a][b] = s2_scalar * acc;
            }

        // R1: rho(S)^2 = rho(Z), rho(Z) e_mu = e((q-p)/4) e_{-mu}.
        bool r1_ok = true;
        for (long a = 0; a < n && r1_ok; ++a)
            for (long b = 0; b < n; ++b)
                if (!(s2[a][b] == wm.z_entry(a, b))) {
                    std::ostringstream os;
                    os << "rho(S)^2 != rho(Z) at (" << a << "," << b << ")";
                    rep.fail(os.str());
                    r1_ok = false;
                    break;
                }

        // R2: (rho(S) rho(T))^3 = rho(S)^2, via Q = S-phases * T-diagonal.
        {
            std::vector<std::vector<long>> q(n, std::vector<long>(n));
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b)
                    q[a][b] = (wm.s_phase_[a][b] + wm.t_phase_[b]) % wm.M_;
            std::vector<std::vector<Cyclo>> q2(n, std::vector<Cyclo>(n));
            for (long a = 0; a < n; ++a)
                for (long b = 0; b < n; ++b) {
                    Cyclo acc;
                    for (long k = 0; k < n; ++k)
                        acc += wm.s_sign_[a][k] * wm.s_sign_[k][b] *
                               Cyclo::root_of_unity(q[a][k] + q[k][b], wm.M_);
                    q2[a][b] = acc;
                }
            Cyclo s3_scalar = s2_scalar * wm.s_scalar_;
            bool ok = true;
            for (long a = 0; a < n && ok; ++a)
                for (long b = 0; b < n; ++b) {
                    Cyclo lhs;
                    for (long k = 0; k < n; ++k)
                        lhs += q2[a][k] *
                               (wm.s_sign_[k][b] * Cyclo::root_of_unity(q[k][b], wm.M_));
                    lhs = s3_scalar * lhs;
                    if (!(lhs == s2[a][b])) {
                        std::ostringstream os;
                        os << "(rho(S)rho(T))^3 != rho(S)^2 at (" << a << "," << b << ")";
                        rep.fail(os.str());
                        ok = false;
                        break;
                    }
                }
        }

        // R3: rho(S)^4 = -Id, computed as (rho(S)^2)^2.
        {
            bool ok = true;
            for (long a = 0; a < n && ok; ++a)
                for (long b = 0; b < n; ++b) {
                    Cyclo acc;
                    for (long k = 0; k < n; ++k) acc += s2[a][k] * s2[k][b];
                    Cyclo expect = a == b ? -Cyclo::one() : Cyclo::zero();
                    if (!(acc == expect)) {
                        std::ostringstream os;
                        os << "rho(S)^4 != -Id at (" << a << "," << b << ")";
                        rep.fail(os.str());
                        ok = false;
                        break;
                    }
                }
        }

        // R4: rho(T)^d = Id, d = lcm of the q(r) denominators.
        {
            Int d(1);
            for (long r = 0; r < n; ++r) d = Int::lcm(d, wm.df_.q_value(r).den());
            long dl = d.to_long();
            for (long r = 0; r < n; ++r)
                if ((wm.t_phase_[r] * dl) % wm.M_ != 0) {
                    rep.fail("rho(T)^lcm(denominators) != Id at r=" + std::to_string(r));
                    break;
                }
        }

        // R5: unitarity, rho(S) rho(S)^* = Id.
        {
            Cyclo ss_scalar = wm.s_scalar_ * wm.s_scalar_.conj();
            bool ok = true;
            for (long a = 0; a < n && ok; ++a)
                for (long b = 0; b < n; ++b) {
                    Cyclo acc;
                    for (long k = 0; k < n; ++k)
                        acc += wm.s_sign_[a][k] * wm.s_sign_[b][k] *
                               Cyclo::root_of_unity(wm.s_phase_[a][k] - wm.s_phase_[b][k],
                                                    wm.M_);
                    acc = ss_scalar * acc;
                    Cyclo expect = a == b ? Cyclo::one() : Cyclo::zero();
                    if (!(acc == expect)) {
                        std::ostringstream os;
                        os << "rho(S) not unitary at (" << a << "," << b << ")";
                        rep.fail(os.str());
                        ok = false;
                        break;
                    }
                }
        }

        // Dual matrices are entrywise conjugates of the primal ones.
        {
            WeilMatrices other(wm.df_, !wm.dual_);
            long a = n > 1 ? 1 : 0;
            bool ok = other.s_entry(a, 0) == wm.s_entry(a, 0).conj() &&
                      other.t_entry(a, a) == wm.t_entry(a, a).conj();
            if (!ok) rep.fail("dual matrices are not entrywise conjugates");
        }
    }
};

RelationReport check_relations(const WeilMatrices& wm) {
    RelationReport rep;
    WeilRelationChecker(wm).run(rep);
    return rep;
}

}  // namespace mfh
