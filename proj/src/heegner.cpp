#include "mfheight/heegner.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <tuple>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "mfheight/surd.hpp"

namespace mfh {

std::string QFormRep::str() const {
    std::ostringstream os;
    os << "[" << A << ", " << B << ", " << C << "]";
    return os.str();
}

QFormRep form_apply(const QFormRep& f, const Mat22& g) {
    // F(px + qy, rx + sy)
    long A = f.A * g.p * g.p + f.B * g.p * g.r + f.C * g.r * g.r;
    long B = 2 * f.A * g.p * g.q + f.B * (g.p * g.s + g.q * g.r) + 2 * f.C * g.r * g.s;
    long C = f.A * g.q * g.q + f.B * g.q * g.s + f.C * g.s * g.s;
    return {A, B, C};
}

std::pair<QFormRep, Mat22> reduce_form(const QFormRep& f) {
    if (!f.positive_definite())
        throw std::domain_error("reduce_form: needs a positive definite form");
    QFormRep cur = f;
    Mat22 g;  // F o g = cur
    for (int guard = 0; guard < 10000; ++guard) {
        // normalize: B into (-A, A] via x -> x + t y
        if (cur.B > cur.A || cur.B <= -cur.A) {
            long t = -static_cast<long>(
                std::floor((static_cast<double>(cur.B) / (2.0 * cur.A)) + 0.5));
            // exact correction of the floating rounding
            while (cur.B + 2 * cur.A * t > cur.A) --t;
            while (cur.B + 2 * cur.A * t <= -cur.A) ++t;
            Mat22 shift{1, t, 0, 1};
            cur = form_apply(cur, shift);
            g = g * shift;
        }
        if (cur.A > cur.C) {
            Mat22 swap{0, -1, 1, 0};
            cur = form_apply(cur, swap);
            g = g * swap;
            continue;
        }
        // reduced up to the boundary convention: force B >= 0 when A == C or B == -A
        if ((cur.A == cur.C || cur.B == -cur.A) && cur.B < 0) {
            Mat22 swap{0, -1, 1, 0};
            if (cur.A == cur.C) {
                cur = form_apply(cur, swap);
                g = g * swap;
            } else {  // B == -A < 0: shift once
                Mat22 shift{1, 1, 0, 1};
                cur = form_apply(cur, shift);
                g = g * shift;
            }
            continue;
        }
        return {cur, g};
    }
    throw std::logic_error("reduce_form: did not terminate");
}

std::vector<Mat22> proper_automorphs(const QFormRep& f) {
    auto [red, g] = reduce_form(f);
    std::vector<Mat22> base{{1, 0, 0, 1}, {-1, 0, 0, -1}};
    // Extra automorphs exist exactly for the square and hexagonal classes.
    if (red.A == red.C && red.B == 0) {
        Mat22 s{0, -1, 1, 0};
        base.push_back(s);
        base.push_back(s * Mat22{-1, 0, 0, -1});
    } else if (red.A == red.B && red.B == red.C) {
        Mat22 r{0, -1, 1, 1};  // order 6
        Mat22 acc = r;
        for (int i = 1; i <= 4; ++i) {
            base.push_back(acc);
            acc = acc * r;
        }
    }
    // conjugate back: Aut(F) = g Aut(red) g^-1
    std::vector<Mat22> out;
    out.reserve(base.size());
    for (const Mat22& u : base) out.push_back(g * u * g.inverse());
    for (const Mat22& u : out)
        if (!(form_apply(f, u) == f)) throw std::logic_error("proper_automorphs: bad automorph");
    return out;
}

bool gamma0_equivalent(const QFormRep& f, const QFormRep& g, long N) {
    auto [rf, tf] = reduce_form(f);
    auto [rg, tg] = reduce_form(g);
    if (!(rf == rg)) return false;
    // every SL2 solution of F o x = G is tf * u * tg^-1, u an automorph of rf
    for (const Mat22& u : proper_automorphs(rf)) {
        Mat22 x = tf * u * tg.inverse();
        if (x.in_gamma0(N)) return true;
    }
    return false;
}

long p1_label(long N, long a, long c) {
    a = ((a % N) + N) % N;
    c = ((c % N) + N) % N;
    long best = N * N;
    for (long u = 1; u <= N; ++u) {
        if (std::gcd(u, N) != 1) continue;
        long aa = (a * u) % N, cc = (c * u) % N;
        best = std::min(best, aa * N + cc);
    }
    return best;
}

std::vector<std::pair<long, Mat22>> p1_coset_reps(long N) {
    if (N < 1) throw std::domain_error("p1_coset_reps: N must be positive");
    std::map<long, Mat22> reps;
    for (long a = 0; a < N; ++a)
        for (long c = 0; c < N; ++c) {
            if (std::gcd(std::gcd(a, c), N) != 1) continue;
            long label = p1_label(N, a, c);
            if (reps.count(label)) continue;
            bool found = false;
            for (long ka = 0; ka <= 8 && !found; ++ka)
                for (long kc = 0; kc <= 8 && !found; ++kc) {
                    long A = a + ka * N, C = c + kc * N;
                    if (A == 0 && C == 0) continue;
                    if (std::gcd(A, C) != 1) continue;
                    // extended gcd: A x + C y = 1, then det [[A, -y], [C, x]] = 1
                    long x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = A, r1 = C;
                    while (r1 != 0) {
                        long q = r0 / r1;
                        std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
                        std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
                        std::tie(y0, y1) = std::make_pair(y1, y0 - q * y1);
                    }
                    if (r0 != 1) {  // gcd(A, C) = -1 case handled by sign flip
                        x0 = -x0;
                        y0 = -y0;
                    }
                    Mat22 g{A, -y0, C, x0};
                    if (g.det() != 1) continue;
                    reps.emplace(label, g);
                    found = true;
                }
            if (!found) throw std::logic_error("p1_coset_reps: no coprime lift found");
        }
    return {reps.begin(), reps.end()};
}

std::vector<QFormRep> reduced_forms(long D, bool primitive_only) {
    if (D >= 0 || ((D % 4 != 0) && (((D % 4) + 4) % 4 != 1)))
        throw std::domain_error("reduced_forms: D must be negative, 0 or 1 mod 4");
    std::vector<QFormRep> out;
    for (long A = 1; A * A * 3 <= -D; ++A) {
        for (long B = -A + 1; B <= A; ++B) {
            long num = B * B - D;
            if (num % (4 * A) != 0) continue;
            long C = num / (4 * A);
            if (C < A) continue;
            if (A == C && B < 0) continue;
            if (primitive_only && std::gcd(std::gcd(A, std::abs(B)), C) != 1) continue;
            out.push_back({A, B, C});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ClassNumber class_number(long D) {
    if (D >= 0) throw std::domain_error("class_number: D must be negative");
    long r = ((D % 4) + 4) % 4;
    if (r != 0 && r != 1) throw std::domain_error("class_number: D must be 0 or 1 mod 4");
    ClassNumber cn;
    cn.h = static_cast<long>(reduced_forms(D, true).size());
    cn.w = D == -4 ? 4 : D == -3 ? 6 : 2;
    return cn;
}

bool is_fundamental_discriminant(long D) {
    if (D >= 0) return false;
    auto squarefree = [](long n) {
        for (long p = 2; p * p <= n; ++p)
            if (n % (p * p) == 0) return false;
        return true;
    };
    long r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(-D);
    if (r == 0) {
        long q = D / 4;
        long qr = ((q % 4) + 4) % 4;
        return (qr == 2 || qr == 3) && squarefree(-q);
    }
    return false;
}

Rat degree_ZU(long D0) {
    if (!is_fundamental_discriminant(D0))
        throw std::domain_error("degree_ZU: D0 must be a fundamental negative discriminant");
    ClassNumber cn = class_number(D0);
    return Rat(4 * cn.h, cn.w);
}

namespace {

CMPoint make_point(const QFormRep& f, long N) {
    CMPoint p;
    p.form = f;
    p.x = Rat(f.B, 2 * f.A);
    p.y_coeff = Rat(1, 2 * f.A);
    long stab = 0;
    for (const Mat22& u : proper_automorphs(f))
        if (u.in_gamma0(N)) ++stab;
    p.weight = stab / 2;
    return p;
}

void validate_m_mu(long N, const Rat& m, long mu, long& D, long& r) {
    if (m.sign() <= 0) throw std::domain_error("enumerate_heegner: m must be positive");
    Rat fourNm = Rat(4 * N) * m;
    if (!fourNm.is_integer())
        throw std::domain_error("enumerate_heegner: 4Nm must be integral");
    D = -fourNm.num().to_long();
    r = ((mu % (2 * N)) + 2 * N) % (2 * N);
    // m = q(mu) mod 1 <=> D = r^2 mod 4N
    if (((r * r - D) % (4 * N)) != 0)
        throw std::domain_error("enumerate_heegner: m incompatible with mu (needs m = q(mu) mod 1)");
}

}  // namespace

HeegnerDivisor enumerate_heegner(long N, const Rat& m, long mu, HeegnerMode mode, long box) {
    if (N < 1) throw std::domain_error("enumerate_heegner: N must be positive");
    long D = 0, r = 0;
    validate_m_mu(N, m, mu, D, r);

    HeegnerDivisor div;
    div.N = N;
    div.m = m;
    div.mu = r;
    div.D = D;

    // The T-translations x -> x + ty lie in Gamma_0(N) for every t, so any
    // form (Nc, b, a) is equivalent to one with b in (-Nc, Nc]; the scans
    // below only walk that window (c candidates per c).
    auto scan = [&](long c, auto&& visit) {
        long A = N * c;
        long klo = -((A + r) / (2 * N));
        for (long k = klo; r + 2 * N * k <= A; ++k) {
            long b = r + 2 * N * k;
            if (b <= -A) continue;
            long num = b * b - D;
            if (num % (4 * A) != 0) continue;
            long a = num / (4 * A);
            if (a <= 0) continue;
            visit(QFormRep{A, b, a});
        }
    };

    if (mode == HeegnerMode::Classes) {
        // Gamma_0(N)-classes within one SL2(Z)-class are double cosets
        // Aut(F_red) \ {admissible g} / Gamma_0(N). Right cosets g Gamma_0(N)
        // are labeled by the first column of g in P^1(Z/N); admissibility of
        // F_red o g (N | A, B = r mod 2N) only depends on the label, and
        // Aut(F_red) acts on labels linearly. One representative per orbit.
        auto cosets = p1_coset_reps(N);
        for (const QFormRep& red : reduced_forms(D, false)) {
            std::vector<Mat22> aut = proper_automorphs(red);
            // admissible labels with a concrete g each
            std::map<long, Mat22> admissible;  // label id -> coset rep
            for (const auto& [label, g] : cosets) {
                QFormRep f = form_apply(red, g);
                if (f.A % N != 0) continue;
                if (((f.B - r) % (2 * N)) != 0) continue;
                admissible.emplace(label, g);
            }
            std::set<long> done;
            for (const auto& [label, g] : admissible) {
                if (done.count(label)) continue;
                // orbit of this label under Aut(F_red)
                for (const Mat22& u : aut) {
                    Mat22 ug = u * g;
                    done.insert(p1_label(N, ug.p, ug.r));
                }
                div.points.push_back(make_point(form_apply(red, g), N));
            }
        }
        std::sort(div.points.begin(), div.points.end(),
                  [](const CMPoint& a, const CMPoint& b) { return a.form < b.form; });
        return div;
    }

    // RawBox: all candidate vectors (a, b, c) with c in [1, box] and b in the
    // translation window, partitioned into Gamma_0(N)-orbits by the exact
    // pairwise test. Candidates sharing an orbit share the SL2-reduced form,
    // so the partition only compares within reduction classes. The default
    // box tracks the size of the coset representatives so no orbit is missed.
    long isqrt_d = static_cast<long>(std::sqrt(static_cast<double>(-D))) + 2;
    long cbox = box > 0 ? box : std::max(16L, 2 * N * isqrt_d);
    std::map<QFormRep, std::vector<QFormRep>> by_reduced;
    for (long c = 1; c <= cbox; ++c)
        scan(c, [&](const QFormRep& f) { by_reduced[reduce_form(f).first].push_back(f); });
    for (auto& [red, group] : by_reduced) {
        std::vector<QFormRep> reps;
        for (const QFormRep& f : group) {
            bool matched = false;
            for (const QFormRep& rep : reps)
                if (gamma0_equivalent(f, rep, N)) {
                    matched = true;
                    break;
                }
            if (!matched) reps.push_back(f);
        }
        for (const QFormRep& rep : reps) div.points.push_back(make_point(rep, N));
    }
    std::sort(div.points.begin(), div.points.end(),
              [](const CMPoint& a, const CMPoint& b) { return a.form < b.form; });
    return div;
}

HeegnerCycle build_cycle(const std::map<std::pair<Rat, long>, Coef>& divisor_terms,
                         long kappa) {
    if (kappa < 1) throw std::domain_error("build_cycle: kappa must be >= 1");
    HeegnerCycle cyc;
    for (const auto& [key, c] : divisor_terms) {
        if (key.first.sign() <= 0)
            throw std::domain_error("build_cycle: indices m must be positive");
        SurdVal mult = half_integer_power(key.first, kappa - 1);
        cyc.add(key.first, key.second, c * Coef(mult));
    }
    return cyc;
}

}  // namespace mfh
