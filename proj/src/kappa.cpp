#include "mfheight/kappa.hpp"

#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mfheight/heegner.hpp"
#include "mfheight/prng.hpp"
#include "mfheight/surd.hpp"

namespace mfh {

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Smith normal form of a 2x2 integer matrix: returns U (unimodular row
// transform) and positive diagonal (d1 | d2) with U G V = diag(d1, d2).
void snf2(std::array<std::array<long, 2>, 2> g, std::array<std::array<long, 2>, 2>& u,
          long& d1, long& d2) {
    u = {{{1, 0}, {0, 1}}};
    auto row_sub = [&](int dst, int src, long q) {
        for (int j = 0; j < 2; ++j) g[dst][j] -= q * g[src][j];
        for (int j = 0; j < 2; ++j) u[dst][j] -= q * u[src][j];
    };
    auto row_swap = [&]() {
        std::swap(g[0], g[1]);
        std::swap(u[0], u[1]);
    };
    auto col_sub = [&](int dst, int src, long q) {
        for (int i = 0; i < 2; ++i) g[i][dst] -= q * g[i][src];
    };

    for (int guard = 0; guard < 200; ++guard) {
        if (g[1][0] != 0) {
            if (g[0][0] == 0 || std::abs(g[1][0]) < std::abs(g[0][0])) row_swap();
            if (g[1][0] != 0) row_sub(1, 0, g[1][0] / g[0][0]);
            continue;
        }
        if (g[0][1] != 0) {
            if (g[0][0] == 0 || std::abs(g[0][1]) < std::abs(g[0][0])) {
                for (int i = 0; i < 2; ++i) std::swap(g[i][0], g[i][1]);
                continue;
            }
            col_sub(1, 0, g[0][1] / g[0][0]);
            continue;
        }
        // diagonal; enforce divisibility d1 | d2
        if (g[0][0] != 0 && g[1][1] % g[0][0] != 0) {
            col_sub(0, 1, -1);  // mix column 1 into column 0
            continue;
        }
        break;
    }
    if (g[1][0] != 0 || g[0][1] != 0) throw std::logic_error("snf2: did not converge");
    if (g[0][0] < 0) {
        g[0][0] = -g[0][0];
        for (int j = 0; j < 2; ++j) u[0][j] = -u[0][j];
    }
    if (g[1][1] < 0) {
        g[1][1] = -g[1][1];
        for (int j = 0; j < 2; ++j) u[1][j] = -u[1][j];
    }
    d1 = g[0][0];
    d2 = g[1][1];
    if (d1 == 0 || d2 == 0 || d2 % d1 != 0) throw std::logic_error("snf2: bad diagonal");
}

long mod_pos(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

SplitLattices::SplitLattices(long N, long D0, long r0) : N_(N), D0_(D0), r0_(r0) {
    if (N < 1) throw std::domain_error("SplitLattices: N must be positive");
    if (!is_fundamental_discriminant(D0))
        throw std::domain_error("SplitLattices: D0 must be a fundamental negative discriminant");
    if (((r0 * r0 - D0) % (4 * N)) != 0)
        throw std::domain_error("SplitLattices: requires D0 = r0^2 mod 4N");
    t_ = std::gcd(std::abs(r0), 2 * N);
    if (t_ == 0) t_ = 2 * N;

    // Gram of N' from Q = N det on the e1, e2 basis.
    long g22 = -(r0 * r0 - D0) / (2 * N);
    gram_ = {{{-2 * N, r0}, {r0, g22}}};
    long det = gram_[0][0] * gram_[1][1] - gram_[0][1] * gram_[1][0];
    if (det != -D0) throw std::logic_error("SplitLattices: Gram determinant mismatch");
    if (gram_[0][0] >= 0 || det <= 0)
        throw std::logic_error("SplitLattices: N' is not negative definite");

    // Q(lambda0) = N |D0| / t^2, integral because lambda0 lies in the even lattice.
    if ((N * (-D0)) % (t_ * t_) != 0)
        throw std::logic_error("SplitLattices: Q(lambda0) not integral");
    Q0_ = N * (-D0) / (t_ * t_);

    // index bookkeeping: |N'#/N'| * |P#/P| = 2N * (|D0|/t)^2
    long lhs = (-D0) * 2 * Q0_;
    long idx = (-D0) / t_;
    if (lhs != 2 * N * idx * idx)
        throw std::logic_error("SplitLattices: sublattice index bookkeeping failed");

    snf2(gram_, snf_u_, d1_, d2_);

    // one pairing-vector representative per coset (box [0, |D0|)^2 surjects
    // since |D0| Z^2 lies in G Z^2)
    long disc = -D0_;
    nu_reps_.assign(disc, {-1, -1});
    long remaining = disc;
    for (long p = 0; p < disc && remaining > 0; ++p)
        for (long q = 0; q < disc && remaining > 0; ++q) {
            long idx = nu_index(p, q);
            if (nu_reps_[idx].first < 0) {
                nu_reps_[idx] = {p, q};
                --remaining;
            }
        }
    if (remaining != 0) throw std::logic_error("SplitLattices: coset enumeration incomplete");
}

SplitLattices build_split(long N, long D0, long r0) { return SplitLattices(N, D0, r0); }

long SplitLattices::nu_index(long p, long q) const {
    long w1 = snf_u_[0][0] * p + snf_u_[0][1] * q;
    long w2 = snf_u_[1][0] * p + snf_u_[1][1] * q;
    return mod_pos(w1, d1_) + d1_ * mod_pos(w2, d2_);
}

Rat SplitLattices::nu_q_mod1(long p, long q) const {
    // Q(nu) = (p q) G^-1 (p q)^T / 2; G^-1 = adj(G)/det with det = -D0.
    long det = -D0_;
    long a = gram_[1][1], b = -gram_[0][1], c = -gram_[1][0], d = gram_[0][0];
    // (p q) adj(G) (p q)^T
    long quad = p * (a * p + b * q) + q * (c * p + d * q);
    return (Rat(quad, 2 * det)).mod1();
}

Rat SplitLattices::nu_q_mod1_by_index(long idx) const {
    if (idx < 0 || idx >= static_cast<long>(nu_reps_.size()))
        throw std::out_of_range("SplitLattices: nu index out of range");
    const auto& [p, q] = nu_reps_[idx];
    return nu_q_mod1(p, q);
}

long SplitLattices::nu_negate(long idx) const {
    if (idx < 0 || idx >= static_cast<long>(nu_reps_.size()))
        throw std::out_of_range("SplitLattices: nu index out of range");
    const auto& [p, q] = nu_reps_[idx];
    return nu_index(-p, -q);
}

std::vector<SplitLattices::FiberPair> SplitLattices::fiber_over(long r1) const {
    std::vector<FiberPair> out;
    long count = fiber_size();
    for (long k = 0; k < count; ++k) {
        long num = r0_ * r1 + 2 * N_ * k;
        if (num % t_ != 0) throw std::logic_error("SplitLattices: fiber numerator not divisible");
        FiberPair fp;
        fp.k = k;
        fp.p_coset = mod_pos(num / t_, 2 * Q0_);
        fp.nu_coset = nu_index(-r1, -k);
        out.push_back(fp);
    }
    return out;
}

long SplitLattices::nu_index_for_n(long n, long r1) const {
    long num = n - r0_ * r1;
    if (num % (2 * N_) != 0)
        throw std::domain_error("SplitLattices: n not in the congruence class r0 r1 mod 2N");
    return nu_index(-r1, -(num / (2 * N_)));
}

long SplitLattices::p_coset_for_n(long n, long r1) const {
    long num = n - r0_ * r1;
    if (num % (2 * N_) != 0)
        throw std::domain_error("SplitLattices: n not in the congruence class r0 r1 mod 2N");
    if (n % t_ != 0) throw std::logic_error("SplitLattices: n not divisible by t");
    return mod_pos(n / t_, 2 * Q0_);
}

ThetaP theta_P_expansions(const SplitLattices& sl, const Rat& m0, const Rat& bound) {
    if (bound.sign() <= 0) throw std::domain_error("theta_P_expansions: bound must be positive");
    if (m0 != sl.m0())
        throw std::invalid_argument("theta_P_expansions: m0 does not match the splitting");

    long two_q0 = sl.p_disc();
    Rat trunc = bound + Rat(1, 1000000);
    ThetaP th{VVQExpansion(two_q0, trunc), VVQExpansion(two_q0, trunc)};

    // p(y lambda0) = -(2N/t) y sqrt(m0)
    Rat pscale(-2 * sl.level(), sl.t());
    long q0 = sl.p_norm();
    // |y| <= sqrt(bound / Q0): walk integer shifts around each coset
    long ymax = static_cast<long>(std::sqrt(bound.to_double() / q0)) + 2;
    for (long i = 0; i < two_q0; ++i) {
        for (long shift = -ymax; shift <= ymax; ++shift) {
            Rat y = Rat(i, two_q0) + Rat(shift);
            Rat expo = y * y * Rat(q0);
            if (expo > bound) continue;
            th.unary.add_term(expo, i, Coef(Rat(1)));
            if (!y.is_zero()) {
                SurdVal mill = SurdVal::with_radicand(Rat(0), pscale * y, m0);
                th.millson.add_term(expo, i, Coef(mill));
            }
        }
    }
    return th;
}

KappaProvider KappaProvider::zero(const SplitLattices& sl) {
    KappaProvider p;
    p.kind_ = Kind::Zero;
    p.N_ = sl.level();
    p.D0_ = sl.D0();
    p.r0_ = sl.r0();
    p.bound_ = Rat(1000000000L);
    return p;
}

KappaProvider KappaProvider::synthetic(const SplitLattices& sl, std::uint64_t seed,
                                       const Rat& support_bound) {
    if (support_bound.sign() <= 0)
        throw std::domain_error("KappaProvider: synthetic support bound must be positive");
    KappaProvider p;
    p.kind_ = Kind::Synthetic;
    p.N_ = sl.level();
    p.D0_ = sl.D0();
    p.r0_ = sl.r0();
    p.bound_ = support_bound;
    p.seed_ = seed;
    SplitMix64 rng(seed);
    long disc = sl.n_disc();
    for (long nu = 0; nu < disc; ++nu) {
        // kappa(n, -nu) = kappa(n, nu) is structural for the Eisenstein
        // coefficients (weight-1 component symmetry); the synthetic table
        // keeps it so the CT identity stays a term-matching identity.
        long neg = sl.nu_negate(nu);
        Rat q = sl.nu_q_mod1_by_index(nu);
        for (Rat n = q; n <= support_bound; n += Rat(1)) {
            if (n.is_zero() && nu != 0) continue;  // structural vanishing
            Coef v;
            if (neg < nu) {
                v = p.table_.at(std::make_pair(n, neg));
            } else {
                Rat rv = rng.small_rat(9, 7);
                if (rv.is_zero()) rv = Rat(1, 3);
                v = Coef(rv);
            }
            p.table_.emplace(std::make_pair(n, nu), v);
        }
    }
    return p;
}

Coef KappaProvider::value(const Rat& n, long nu_index) const {
    if (n.sign() < 0) return Coef(Rat(0));
    if (n.is_zero() && nu_index != 0) return Coef(Rat(0));
    if (kind_ == Kind::Zero) return Coef(Rat(0));
    auto it = table_.find(std::make_pair(n, nu_index));
    if (it != table_.end()) return it->second;
    if (n > bound_)
        throw std::out_of_range("KappaProvider: kappa(" + n.str() + ", " +
                                std::to_string(nu_index) + ") beyond the table support " +
                                bound_.str());
    return Coef(Rat(0));
}

void KappaProvider::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw IoError("KappaProvider: cannot write " + path);
    out << "kappa-table v1 N=" << N_ << " D0=" << D0_ << " r0=" << r0_ << "\n";
    for (const auto& [key, c] : table_) {
        const auto& [n, nu] = key;
        out << n.num().str() << "/" << n.den().str() << " " << nu << " ";
        if (c.is_rat())
            out << c.rat().str();
        else
            out << c.to_complex().re.str(30);
        out << "\n";
    }
}

KappaProvider KappaProvider::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("KappaProvider: cannot open " + path);
    std::string header;
    if (!std::getline(in, header)) throw IoError("KappaProvider: empty file " + path);
    long N = 0, D0 = 0, r0 = 0;
    {
        std::istringstream hs(header);
        std::string tag, ver, kv;
        hs >> tag >> ver;
        if (tag != "kappa-table" || ver != "v1")
            throw IoError("KappaProvider: bad header '" + header + "'");
        while (hs >> kv) {
            auto eq = kv.find('=');
            if (eq == std::string::npos) throw IoError("KappaProvider: bad header field " + kv);
            std::string key = kv.substr(0, eq);
            long val = std::stol(kv.substr(eq + 1));
            if (key == "N") N = val;
            else if (key == "D0") D0 = val;
            else if (key == "r0") r0 = val;
            else throw IoError("KappaProvider: unknown header field " + key);
        }
    }
    SplitLattices sl(N, D0, r0);

    KappaProvider p;
    p.kind_ = Kind::File;
    p.N_ = N;
    p.D0_ = D0;
    p.r0_ = r0;
    p.bound_ = Rat(0);

    std::string line;
    long lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string nstr, vstr;
        long nu;
        if (!(ls >> nstr >> nu >> vstr))
            throw IoError("KappaProvider: malformed row at line " + std::to_string(lineno));
        Rat n(nstr);
        if (n.sign() < 0)
            throw IoError("KappaProvider: kappa(n<0) must vanish, violated at line " +
                          std::to_string(lineno));
        if (nu < 0 || nu >= sl.n_disc())
            throw IoError("KappaProvider: nu out of range at line " + std::to_string(lineno));
        Coef val;
        bool exact = vstr.find('.') == std::string::npos;
        if (exact) {
            val = Coef(Rat(vstr));
        } else {
            val = Coef(BigComplex::from_real(BigFloat(Rat(vstr), default_precision())));
            p.all_exact_ = false;
        }
        if (n.is_zero() && nu != 0 && !val.is_zero())
            throw IoError("KappaProvider: kappa(0, nu != 0) must vanish, violated at line " +
                          std::to_string(lineno));
        if (!(n - sl.nu_q_mod1_by_index(nu)).mod1().is_zero())
            throw IoError("KappaProvider: exponent off the admissible grid at line " +
                          std::to_string(lineno));
        p.table_[std::make_pair(n, nu)] = val;
        if (n > p.bound_) p.bound_ = n;
    }
    // kappa(n, -nu) = kappa(n, nu) is structural; reject tables without it.
    for (const auto& [key, val] : p.table_) {
        long neg = sl.nu_negate(key.second);
        auto it = p.table_.find(std::make_pair(key.first, neg));
        Coef other = it == p.table_.end() ? Coef(Rat(0)) : it->second;
        bool same;
        if (val.is_exact() && other.is_exact()) {
            Coef d = val - other;
            same = d.is_exact() && d.is_zero();
        } else {
            BigComplex d = val.to_complex() - other.to_complex();
            same = d.abs() < BigFloat(1e-20, default_precision());
        }
        if (!same)
            throw IoError("KappaProvider: table violates kappa(n, -nu) = kappa(n, nu) at n=" +
                          key.first.str() + " nu=" + std::to_string(key.second));
    }
    return p;
}

VVQExpansion eisenstein_expansion(const SplitLattices& sl, const KappaProvider& provider,
                                  const Rat& bound) {
    if (provider.level() != sl.level() || provider.D0() != sl.D0() ||
        provider.r0() != sl.r0())
        throw std::invalid_argument("eisenstein_expansion: provider built for another splitting");
    long disc = sl.n_disc();
    VVQExpansion e(disc, bound + Rat(1, 1000000));
    for (long nu = 0; nu < disc; ++nu) {
        Rat q = sl.nu_q_mod1_by_index(nu);
        for (Rat n = q; n <= bound; n += Rat(1)) {
            Coef v = provider.value(n, nu);
            if (!v.is_zero()) e.add_term(n, nu, v);
        }
    }
    return e;
}

}  // namespace mfh
