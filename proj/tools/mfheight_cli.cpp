// mfheight: exact modular-forms machinery for Heegner-cycle height pairings.
// One binary, subcommands per task; every report is deterministic for a
// fixed configuration and seed.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "mfheight/coeffio.hpp"
#include "mfheight/harmonic.hpp"
#include "mfheight/heegner.hpp"
#include "mfheight/intersect.hpp"
#include "mfheight/lfunc.hpp"
#include "mfheight/operators.hpp"
#include "mfheight/selftest.hpp"
#include "mfheight/shimura.hpp"
#include "mfheight/weilrep.hpp"

using json = nlohmann::ordered_json;
using namespace mfh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitTolerance = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitIo = 3;

struct PPTerm {
    Rat m;
    long mu = 0;
    Rat c;
};

// "m=1,mu=1,c=1;m=2,mu=3,c=-1/2"
std::vector<PPTerm> parse_pp(const std::string& text) {
    std::vector<PPTerm> out;
    std::istringstream ss(text);
    std::string group;
    while (std::getline(ss, group, ';')) {
        if (group.empty()) continue;
        PPTerm term;
        bool saw_m = false, saw_mu = false, saw_c = false;
        std::istringstream gs(group);
        std::string field;
        while (std::getline(gs, field, ',')) {
            auto eq = field.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("bad principal-part field '" + field + "'");
            std::string key = field.substr(0, eq), val = field.substr(eq + 1);
            if (key == "m") {
                term.m = Rat(val);
                saw_m = true;
            } else if (key == "mu") {
                term.mu = std::stol(val);
                saw_mu = true;
            } else if (key == "c") {
                term.c = Rat(val);
                saw_c = true;
            } else {
                throw std::invalid_argument("unknown principal-part key '" + key + "'");
            }
        }
        if (!saw_m || !saw_mu || !saw_c)
            throw std::invalid_argument("principal-part term needs m=, mu=, c=");
        if (term.m.sign() <= 0) throw std::invalid_argument("principal-part m must be positive");
        out.push_back(term);
    }
    if (out.empty()) throw std::invalid_argument("empty principal part");
    return out;
}

std::string coef_str(const Coef& c) { return c.str(); }

json symbolic_json(const SymbolicConst& s) {
    json j;
    bool surd = !s.value.is_rational();
    j["rational"] = surd ? s.value.coeff().str() : s.value.base().str();
    j["sqrt"] = surd ? s.value.kernel().str() : std::string("1");
    j["pi_power_doubled"] = s.pi_pow2;
    j["text"] = s.str();
    return j;
}

int cmd_weil_check(long level, bool dual) {
    DiscriminantForm df(level);
    WeilMatrices wm(df, dual);
    RelationReport rep = check_relations(wm);
    std::cout << "weil-check level=" << level << (dual ? " (dual)" : "") << "\n";
    std::cout << "  rho(S)^2 = rho(Z), (rho(S)rho(T))^3 = rho(S)^2, rho(S)^4 = -Id,\n"
              << "  rho(T)^lcm = Id, unitarity, dual conjugacy: "
              << (rep.all_pass ? "all hold exactly" : rep.summary()) << "\n";
    return rep.all_pass ? kExitOk : kExitTolerance;
}

int cmd_heegner_enum(long N, const std::string& m_str, long mu, bool raw_box, long box) {
    Rat m(m_str);
    HeegnerDivisor div =
        enumerate_heegner(N, m, mu, raw_box ? HeegnerMode::RawBox : HeegnerMode::Classes, box);
    std::cout << "# heegner N=" << N << " m=" << m.str() << " mu=" << div.mu
              << " D=" << div.D << " classes=" << div.class_count() << "\n";
    std::cout << "# A\tB\tC\tx\ty_sq\tweight\n";
    for (const CMPoint& p : div.points) {
        Rat y_sq = p.y_coeff * p.y_coeff * Rat(-div.D);
        std::cout << p.form.A << "\t" << p.form.B << "\t" << p.form.C << "\t"
                  << p.x.str() << "\t" << y_sq.str() << "\t" << p.weight << "\n";
    }
    return kExitOk;
}

struct ProviderArgs {
    std::string table_path;
    std::uint64_t seed = 0;
    bool synthetic = false;
    std::string bound = "";
};

KappaProvider make_provider(const SplitLattices& sl, const ProviderArgs& args,
                            const Rat& default_bound) {
    if (!args.table_path.empty()) {
        KappaProvider p = KappaProvider::load(args.table_path);
        if (p.level() != sl.level() || p.D0() != sl.D0() || p.r0() != sl.r0())
            throw std::invalid_argument("kappa table was built for different (N, D0, r0)");
        return p;
    }
    if (args.synthetic) {
        Rat bound = args.bound.empty() ? default_bound : Rat(args.bound);
        return KappaProvider::synthetic(sl, args.seed, bound);
    }
    return KappaProvider::zero(sl);
}

// Symmetrized principal part from user terms; returns per-orbit weights for
// the closed-form bookkeeping.
struct OrbitTerm {
    Rat m;
    long mu;       // representative side
    Rat c;         // coefficient on the representative side
    bool self_paired;
};

std::pair<VVQExpansion, std::vector<OrbitTerm>> assemble_pp(long N, long kappa,
                                                            const std::vector<PPTerm>& terms) {
    long twoN = 2 * N;
    Rat mirror(kappa % 2 == 1 ? 1 : -1);
    std::map<std::pair<Rat, long>, Rat> coeffs;
    for (const PPTerm& t : terms) {
        long r = ((t.mu % twoN) + twoN) % twoN;
        auto key = std::make_pair(t.m, r);
        auto it = coeffs.find(key);
        if (it != coeffs.end() && it->second != t.c)
            throw std::invalid_argument("conflicting principal-part coefficients at (m=" +
                                        t.m.str() + ", mu=" + std::to_string(r) + ")");
        coeffs[key] = t.c;
    }
    // symmetrize: c(-m, -mu) = (-1)^(kappa-1) c(-m, mu)
    std::vector<OrbitTerm> orbits;
    VVQExpansion pp(twoN, Rat(1, 1000000));
    std::map<std::pair<Rat, long>, Rat> full = coeffs;
    for (const auto& [key, c] : coeffs) {
        long neg = ((-key.second) % twoN + twoN) % twoN;
        auto nkey = std::make_pair(key.first, neg);
        if (neg == key.second) {
            if (kappa % 2 == 0 && !c.is_zero())
                throw std::invalid_argument(
                    "self-paired mu with even kappa forces c+ = 0 (component symmetry)");
            continue;
        }
        Rat want = mirror * c;
        auto it = full.find(nkey);
        if (it == full.end())
            full[nkey] = want;
        else if (it->second != want)
            throw std::invalid_argument("principal part violates c(-m,-mu) = (-1)^(kappa-1) c(-m,mu)");
    }
    std::set<std::pair<Rat, long>> seen;
    for (const auto& [key, c] : full) {
        pp.add_term(-key.first, key.second, Coef(c));
        long neg = ((-key.second) % twoN + twoN) % twoN;
        if (seen.count(key) || seen.count(std::make_pair(key.first, neg))) continue;
        seen.insert(key);
        OrbitTerm orb;
        orb.m = key.first;
        orb.mu = key.second;
        orb.c = c;
        orb.self_paired = neg == key.second;
        orbits.push_back(orb);
    }
    return {pp, orbits};
}

int cmd_pipeline(long N, long kappa, long D0, long r0, const std::string& pp_text,
                 const ProviderArgs& pargs, bool weakly_holomorphic,
                 const std::string& out_path) {
    SplitLattices sl = build_split(N, D0, r0);
    std::vector<PPTerm> user_terms = parse_pp(pp_text);
    auto [pp, orbits] = assemble_pp(N, kappa, user_terms);

    Rat reach(0);
    for (const auto& [key, c] : pp.terms()) reach = std::max(reach, -key.first);
    KappaProvider provider = make_provider(sl, pargs, reach + Rat(1));

    json report;
    report["tool"] = "mfheight pipeline";
    report["parameters"] = {
        {"N", N}, {"kappa", kappa}, {"D0", D0}, {"r0", r0}, {"m0", sl.m0().str()},
        {"weakly_holomorphic", weakly_holomorphic}};
    json jpp = json::array();
    for (const auto& [key, c] : pp.terms())
        jpp.push_back({{"m", (-key.first).str()}, {"mu", key.second},
                       {"c", c.is_rat() ? c.rat().str() : c.str()}});
    report["parameters"]["principal_part"] = jpp;
    json jprov;
    jprov["kind"] = provider.kind() == KappaProvider::Kind::Zero        ? "zero"
                    : provider.kind() == KappaProvider::Kind::Synthetic ? "synthetic"
                                                                        : "file";
    if (provider.kind() == KappaProvider::Kind::Synthetic)
        jprov["seed"] = provider.seed();
    if (!pargs.table_path.empty()) jprov["path"] = pargs.table_path;
    jprov["support_bound"] = provider.support_bound().str();
    report["parameters"]["provider"] = jprov;

    // per-orbit finite and closed-form values + totals
    Coef finite_total = Rat(0), closed_total = Rat(0);
    bool ratio_ok = true;
    for (const OrbitTerm& orb : orbits) {
        Coef fin = finite_intersection(sl, kappa, orb.m, orb.mu, provider);
        Coef clo = ct_closed_form(sl, kappa, orb.m, orb.mu, provider);
        // user coefficient scale: the f_{m,mu} model carries 1 on the
        // representative side (2 on a self-paired component)
        Coef scale = orb.self_paired ? Coef(orb.c * Rat(1, 2)) : Coef(orb.c);
        finite_total += scale * fin;
        closed_total += scale * clo;
        ratio_ok = ratio_ok && finite_ct_ratio_holds(sl, kappa, orb.m, orb.mu, provider);
    }
    Coef direct = ct_direct(sl, kappa, pp, provider, reach + Rat(1));
    GlobalHeight gh = global_height(sl, kappa, pp, provider, weakly_holomorphic);

    Coef ct_diff = direct - closed_total;
    bool ct_match = ct_diff.is_exact() && ct_diff.is_zero();

    std::string provenance = provider.all_exact() ? "provider-dependent" : "numeric";
    report["finite"] = {{"value", coef_str(finite_total)}, {"provenance", provenance}};
    report["ct_direct"] = {{"value", coef_str(direct)}, {"provenance", provenance}};
    report["ct_closed"] = {{"value", coef_str(closed_total)}, {"provenance", provenance}};
    ArchimedeanPart arch = archimedean_part(N, kappa, sl.m0());
    report["archimedean"] = {{"ct_coefficient", coef_str(arch.ct_coefficient)},
                             {"lprime_coefficient", symbolic_json(arch.lprime_coefficient)},
                             {"provenance", "exact"}};
    report["checks"] = {{"ct_direct_equals_closed", ct_match},
                        {"finite_ct_ratio", ratio_ok},
                        {"ct_cancellation", true}};
    json jglobal;
    jglobal["lprime_coefficient"] = symbolic_json(gh.lprime_coefficient);
    jglobal["provider_independent"] = true;
    jglobal["provenance"] = "exact";
    jglobal["value"] = gh.is_zero()
                           ? "0"
                           : gh.lprime_coefficient.str() + " * L'(Sh(xi f), kappa)";
    report["global"] = jglobal;

    std::string text = report.dump(2) + "\n";
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw IoError("cannot write " + out_path);
        out << text;
    } else {
        std::cout << text;
    }
    return (ct_match && ratio_ok) ? kExitOk : kExitTolerance;
}

int cmd_ct_check(long seeds) {
    struct Instance {
        long N, D0, r0;
        Rat m1;
        long mu1;
    };
    std::vector<Instance> grid = {
        {1, -3, 1, Rat(1), 0},    {1, -7, 1, Rat(2), 0},
        {2, -7, 1, Rat(1), 0},    {2, -15, 1, Rat(7, 8), 1},
        {3, -11, 1, Rat(2, 3), 2}, {3, -23, 1, Rat(1, 4), 3},
    };
    bool all_ok = true;
    for (const Instance& inst : grid) {
        SplitLattices sl(inst.N, inst.D0, inst.r0);
        for (long kappa = 2; kappa <= 6; ++kappa) {
            for (std::uint64_t seed = 1; seed <= static_cast<std::uint64_t>(seeds); ++seed) {
                KappaProvider prov = KappaProvider::synthetic(sl, seed, inst.m1 + Rat(1));
                VVQExpansion pp =
                    poincare_principal_part(inst.N, kappa, inst.m1, inst.mu1);
                Coef direct = ct_direct(sl, kappa, pp, prov, inst.m1 + Rat(1));
                Coef closed = ct_closed_form(sl, kappa, inst.m1, inst.mu1, prov);
                Coef d = direct - closed;
                bool ok = d.is_exact() && d.is_zero();
                all_ok = all_ok && ok;
                std::cout << "ct-check N=" << inst.N << " D0=" << inst.D0
                          << " m1=" << inst.m1.str() << " mu1=" << inst.mu1
                          << " kappa=" << kappa << " seed=" << seed << ": "
                          << (ok ? "exact match" : "MISMATCH") << "\n";
            }
        }
    }
    return all_ok ? kExitOk : kExitTolerance;
}

int cmd_lift(const std::string& input, long kappa, const std::string& m0_str, long mu0,
             long nmax, const std::string& out_path) {
    VVCoeffFile g = read_vv_file(input);
    Rat m0(m0_str);
    long D0 = -(Rat(4 * g.N) * m0).num().to_long();
    CuspFormExpansion lifted = shimura_lift(g.series, g.N, kappa, m0, mu0, D0, nmax);
    if (out_path.empty()) {
        std::cout << "coeffs v1 weight=" << lifted.weight.str() << " level=" << lifted.level
                  << "\n";
        for (const auto& [n, v] : lifted.a) std::cout << n << " " << v.str() << "\n";
    } else {
        write_coeff_file(out_path, lifted);
    }
    return kExitOk;
}

int cmd_pair(const std::string& f_path, const std::string& g_path) {
    VVCoeffFile f = read_vv_file(f_path);
    VVCoeffFile g = read_vv_file(g_path);
    Coef v = serre_pairing(f.series, g.series);
    std::cout << "serre-pairing {f, g} = " << v.str() << "\n";
    return kExitOk;
}

int cmd_phi_expand(const std::string& input, long kappa, long bound) {
    VVCoeffFile f = read_vv_file(input);
    PhiKappaExpansion phi = phi_kappa_expansion(f.series, f.N, kappa, bound);
    std::cout << "# phi^(kappa) expansion, kappa=" << kappa
              << ", C_kappa=" << phi.c_kappa.str()
              << "; every coefficient carries pi^" << kappa << " * i\n";
    for (long n = 1; n <= bound; ++n) {
        Rat c = phi.c_kappa * phi.coeff_rational(n);
        if (!c.is_zero()) std::cout << n << " " << c.str() << "\n";
    }
    return kExitOk;
}

int cmd_lderiv(const std::string& coeffs, const std::string& weight, long level,
               const std::string& cutoff) {
    CuspFormExpansion f = read_coeff_file(coeffs);
    if (!weight.empty() && Rat(weight) != f.weight)
        throw std::invalid_argument("weight argument disagrees with the file header");
    if (level > 0 && level != f.level)
        throw std::invalid_argument("level argument disagrees with the file header");
    LSeries ls = LSeries::from_cusp_form(f);
    if (long bad = ls.deligne_warning(); bad != 0)
        std::cerr << "warning: |a_n| exceeds the Deligne-type sanity bound at n=" << bad
                  << "\n";
    SignDetection sd = sign_detect(ls);
    std::cout << "sign: " << (sd.sign == 0 ? "unknown" : std::to_string(sd.sign))
              << " (residual " << sd.residual << ", rejected " << sd.other << ")\n";
    if (sd.sign == 0) return kExitTolerance;
    ls.sign = sd.sign;
    Rat c1 = cutoff.empty() ? Rat(1) : Rat(cutoff);
    CentralDerivative d1 = l_derivative_central(ls, c1);
    CentralDerivative d2 = l_derivative_central(ls, c1 * Rat(13, 10));
    std::cout << "Lambda(kappa) = " << d1.lambda_center.str(30) << "\n";
    std::cout << "L(kappa)      = " << d1.l_center.str(30) << "\n";
    std::cout << "L'(kappa)     = " << d1.l_prime.str(30)
              << (d1.central_derivative_of_odd_form ? "" : "  [not the central derivative of an odd form]")
              << "\n";
    BigFloat rel = (d1.l_prime - d2.l_prime).abs() /
                   (d1.l_prime.abs() + BigFloat(1e-30, default_precision()));
    std::cout << "two-cutoff relative agreement: " << rel.str(6) << "\n";
    return rel < BigFloat(1e-8, default_precision()) ? kExitOk : kExitTolerance;
}

int cmd_selftest(bool quick) {
    auto results = run_selftests(quick);
    bool all = true;
    for (const auto& r : results) {
        std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
        if (!r.pass) std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    return all ? kExitOk : kExitTolerance;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact modular-forms machinery for Heegner-cycle height pairings"};
    app.require_subcommand(1);

    long precision = 0;
    app.add_option("--precision", precision, "working precision in bits (>= 128)");

    // weil-check
    auto* weil = app.add_subcommand("weil-check", "verify the metaplectic relations at a level");
    long weil_level = 1;
    bool weil_dual = false;
    weil->add_option("--level", weil_level, "level N")->required();
    weil->add_flag("--dual", weil_dual, "check the conjugate representation");

    // heegner-enum
    auto* henum = app.add_subcommand("heegner-enum", "enumerate Heegner classes as TSV");
    long he_N = 1, he_mu = 0, he_box = 0;
    std::string he_m;
    bool he_raw = false;
    henum->add_option("--N", he_N)->required();
    henum->add_option("--m", he_m, "index m (rational)")->required();
    henum->add_option("--mu", he_mu)->required();
    henum->add_flag("--raw-box", he_raw, "brute-force box orbit enumeration");
    henum->add_option("--box", he_box, "raw box size (c <= box)");

    // intersect
    auto* isec = app.add_subcommand("intersect", "finite intersection + CT report (JSON)");
    long is_N = 1, is_kappa = 1, is_D0 = -3, is_r0 = 1, is_mu1 = 0;
    std::string is_m1, is_table, is_bound, is_out;
    std::uint64_t is_seed = 0;
    bool is_synth = false;
    isec->add_option("--N", is_N)->required();
    isec->add_option("--kappa", is_kappa)->required();
    isec->add_option("--D0", is_D0)->required();
    isec->add_option("--r0", is_r0)->required();
    isec->add_option("--m1", is_m1)->required();
    isec->add_option("--mu1", is_mu1)->required();
    isec->add_option("--kappa-table", is_table, "kappa coefficient file");
    isec->add_option("--kappa-synthetic", is_seed, "seeded synthetic provider");
    isec->add_option("--kappa-bound", is_bound, "synthetic support bound");
    isec->add_option("--out", is_out, "write the JSON report here");
    (void)is_synth;

    // ct-check
    auto* ctc = app.add_subcommand("ct-check", "run the CT identity suite");
    long ct_seeds = 5;
    ctc->add_option("--random-seeds", ct_seeds, "seeds per instance");

    // lift
    auto* lift = app.add_subcommand("lift", "Shimura lift of a vector-valued cusp table");
    std::string lf_in, lf_m0, lf_out;
    long lf_kappa = 1, lf_mu0 = 0, lf_nmax = 50;
    lift->add_option("--input", lf_in)->required();
    lift->add_option("--kappa", lf_kappa)->required();
    lift->add_option("--m0", lf_m0)->required();
    lift->add_option("--mu0", lf_mu0)->required();
    lift->add_option("--nmax", lf_nmax);
    lift->add_option("--out", lf_out);

    // pair
    auto* pair = app.add_subcommand("pair", "Serre-duality pairing of two tables");
    std::string pr_f, pr_g;
    pair->add_option("--f", pr_f)->required();
    pair->add_option("--g", pr_g)->required();

    // phi-expand
    auto* phi = app.add_subcommand("phi-expand", "phi^(kappa) q-expansion");
    std::string ph_in;
    long ph_kappa = 1, ph_bound = 20;
    phi->add_option("--input", ph_in)->required();
    phi->add_option("--kappa", ph_kappa)->required();
    phi->add_option("--bound", ph_bound);

    // lderiv
    auto* ld = app.add_subcommand("lderiv", "central L-derivative via the smoothed AFE");
    std::string ld_coeffs, ld_weight, ld_cutoff;
    long ld_level = 0;
    ld->add_option("--coeffs", ld_coeffs)->required();
    ld->add_option("--weight", ld_weight, "expected weight 2k (validated against header)");
    ld->add_option("--level", ld_level, "expected level (validated against header)");
    ld->add_option("--cutoff", ld_cutoff, "AFE split scale");

    // pipeline
    auto* pipe = app.add_subcommand("pipeline", "end-to-end global height assembly (JSON)");
    long pl_N = 1, pl_kappa = 1, pl_D0 = -3, pl_r0 = 1;
    std::string pl_pp, pl_table, pl_bound, pl_out;
    std::uint64_t pl_seed = 0;
    bool pl_weak = false;
    bool pl_has_seed = false;
    pipe->add_option("--N", pl_N)->required();
    pipe->add_option("--kappa", pl_kappa)->required();
    pipe->add_option("--D0", pl_D0)->required();
    pipe->add_option("--r0", pl_r0)->required();
    pipe->add_option("--f-pp", pl_pp, "principal part, e.g. \"m=1,mu=1,c=1;m=2,mu=0,c=2\"")
        ->required();
    pipe->add_option("--kappa-table", pl_table);
    pipe->add_option("--kappa-synthetic", pl_seed);
    pipe->add_option("--kappa-bound", pl_bound);
    pipe->add_flag("--weakly-holomorphic", pl_weak);
    pipe->add_option("--out", pl_out);

    // selftest
    auto* st = app.add_subcommand("selftest", "run the module invariant suites");
    bool st_quick = false;
    st->add_flag("--quick", st_quick);

    bool is_has_seed = false;

    try {
        app.parse(argc, argv);
        if (precision > 0) set_default_precision(precision);
        is_has_seed = isec->count("--kappa-synthetic") > 0;
        pl_has_seed = pipe->count("--kappa-synthetic") > 0;

        if (*weil) return cmd_weil_check(weil_level, weil_dual);
        if (*henum) return cmd_heegner_enum(he_N, he_m, he_mu, he_raw, he_box);
        if (*isec) {
            ProviderArgs pa;
            pa.table_path = is_table;
            pa.seed = is_seed;
            pa.synthetic = is_has_seed;
            pa.bound = is_bound;
            std::ostringstream pp;
            pp << "m=" << is_m1 << ",mu=" << is_mu1 << ",c=1";
            return cmd_pipeline(is_N, is_kappa, is_D0, is_r0, pp.str(), pa, false, is_out);
        }
        if (*ctc) return cmd_ct_check(ct_seeds);
        if (*lift) return cmd_lift(lf_in, lf_kappa, lf_m0, lf_mu0, lf_nmax, lf_out);
        if (*pair) return cmd_pair(pr_f, pr_g);
        if (*phi) return cmd_phi_expand(ph_in, ph_kappa, ph_bound);
        if (*ld) return cmd_lderiv(ld_coeffs, ld_weight, ld_level, ld_cutoff);
        if (*pipe) {
            ProviderArgs pa;
            pa.table_path = pl_table;
            pa.seed = pl_seed;
            pa.synthetic = pl_has_seed;
            pa.bound = pl_bound;
            return cmd_pipeline(pl_N, pl_kappa, pl_D0, pl_r0, pl_pp, pa, pl_weak, pl_out);
        }
        if (*st) return cmd_selftest(st_quick);
        return kExitPrecondition;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitPrecondition;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::domain_error& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::invalid_argument& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::out_of_range& e) {
        std::cerr << "precondition error: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitTolerance;
    }
}
