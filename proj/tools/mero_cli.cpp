#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mero/dmodule.hpp"
#include "mero/invariants.hpp"
#include "mero/multiplier.hpp"
#include "mero/parser.hpp"
#include "mero/resolution.hpp"

using json = nlohmann::ordered_json;
using namespace mero;

namespace {

constexpr int kSchemaVersion = 1;

struct CommonOpts {
    std::string format = "text";
    std::string out_path;
    std::string resolution_path;
    long blowup_cap = 64;
};

void emit(const CommonOpts& opts, const std::string& report) {
    if (!opts.out_path.empty()) {
        std::ofstream f(opts.out_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open output file " + opts.out_path);
        f << report;
    }
    std::cout << report;
}

ResolutionData obtain_resolution(const CommonOpts& opts, const std::string& germ_text) {
    if (!opts.resolution_path.empty()) {
        std::ifstream f(opts.resolution_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + opts.resolution_path);
        std::stringstream ss;
        ss << f.rdbuf();
        return resolution_from_json(ss.str());
    }
    return resolve_pair(parse_germ(germ_text), opts.blowup_cap);
}

std::string class_str(DivisorClass c) {
    switch (c) {
        case DivisorClass::Zero: return "zero";
        case DivisorClass::Pole: return "pole";
        default: return "dicritical";
    }
}

std::string resolve_text(const ResolutionData& res) {
    std::ostringstream o;
    o << "germ: " << res.germ.str() << "\n";
    o << "divisors: " << res.divisors.size() << "   blow-ups: " << res.blowups << "\n";
    auto row = [&](const std::string& name, auto value) {
        o << "  " << name;
        for (const auto& d : res.divisors) o << "\t" << value(d);
        o << "\n";
    };
    o << "  ";
    for (const auto& d : res.divisors) o << "\tE" << d.id;
    o << "\n";
    row("N_f", [](const DivisorData& d) { return std::to_string(d.Nf); });
    row("N_g", [](const DivisorData& d) { return std::to_string(d.Ng); });
    row("N_f/g", [](const DivisorData& d) { return std::to_string(d.Nfg()); });
    row("k", [](const DivisorData& d) { return std::to_string(d.k); });
    row("class", [](const DivisorData& d) { return class_str(d.cls()); });
    row("kind", [](const DivisorData& d) {
        return std::string(d.kind == DivisorKind::Exceptional
                               ? "exc"
                               : (d.kind == DivisorKind::StrictF ? "strict_f"
                                                                 : "strict_g"));
    });
    o << "edges:";
    for (const auto& [a, b] : res.edges) o << " E" << a << "-E" << b;
    o << "\n";
    return o.str();
}

json germ_json(const MeromorphicGerm& g) {
    return {{"f", g.f.str()}, {"g", g.g.str()}, {"vars", g.vars}};
}

json strip_json(const Strip& s) {
    json j;
    j["lo"] = s.lo ? json(rat_str(*s.lo)) : json(nullptr);
    j["hi"] = s.hi ? json(rat_str(*s.hi)) : json(nullptr);
    return j;
}

json rats_json(const std::vector<Rat>& v) {
    json a = json::array();
    for (const auto& r : v) a.push_back(rat_str(r));
    return a;
}

std::string strip_text(const Strip& s) {
    std::string lo = s.lo ? rat_str(*s.lo) : "-infinity";
    std::string hi = s.hi ? rat_str(*s.hi) : "+infinity";
    return "(" + lo + ", " + hi + ")";
}

json generators_json(const IdealBasis& J) {
    json a = json::array();
    if (J.staircase.dimension() == 0) return a;
    for (const auto& g : J.generators) a.push_back(g.str());
    return a;
}

std::string generators_text(const IdealBasis& J) {
    if (J.staircase.dimension() == 0) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < J.generators.size(); ++i) {
        if (i) s += ", ";
        s += J.generators[i].str();
    }
    return s + ")";
}

/// Largest candidate jumping number <= x (or < x when strict).
std::optional<Rat> candidate_at_or_below(const ResolutionData& res, const Rat& x,
                                         bool strict) {
    std::optional<Rat> best;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n <= 0) continue;
        Int l = floor_rat(x * Rat(n) - Rat(d.k + 1));
        Rat cand = make_rat(Int(d.k + 1) + l, Int(n));
        if (strict && cand == x) {
            l -= 1;
            cand = make_rat(Int(d.k + 1) + l, Int(n));
        }
        if (l < 0) continue;
        if (!best || cand > *best) best = cand;
    }
    return best;
}

/// Smallest candidate jumping number > x.
std::optional<Rat> candidate_above(const ResolutionData& res, const Rat& x) {
    std::optional<Rat> best;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n <= 0) continue;
        Int l = floor_rat(x * Rat(n) - Rat(d.k + 1)) + 1;
        if (l < 0) l = 0;
        Rat cand = make_rat(Int(d.k + 1) + l, Int(n));
        if (cand <= x) cand += make_rat(Int(1), Int(n));
        if (!best || cand < *best) best = cand;
    }
    return best;
}

/// Maximal constancy region [lo, hi) of the multiplier ideal around lambda:
/// walk the candidate lattice in both directions until the staircase changes.
std::pair<Rat, std::optional<Rat>> region_around(const ResolutionData& res,
                                                 const Rat& lambda,
                                                 const IdealBasis& J, int D) {
    std::optional<Rat> hi;
    Rat cur = lambda;
    for (int step = 0; step < 512; ++step) {
        auto next = candidate_above(res, cur);
        if (!next) break;
        IdealBasis Jn = multiplier_ideal(res, *next, D);
        if (!(Jn.staircase == J.staircase)) {
            hi = *next;
            break;
        }
        cur = *next;
    }
    Rat lo = 0;
    cur = lambda;
    bool strict = false;
    for (int step = 0; step < 512; ++step) {
        auto cand = candidate_at_or_below(res, cur, strict);
        if (!cand) break;
        // value of the ideal just below the candidate
        auto prev = candidate_at_or_below(res, *cand, true);
        Rat probe = prev ? Rat((*prev + *cand) / 2) : Rat(*cand / 2);
        IdealBasis Jb = multiplier_ideal(res, probe, D);
        if (!(Jb.staircase == J.staircase)) {
            lo = *cand;
            break;
        }
        cur = *cand;
        strict = true;
    }
    return {lo, hi};
}

int cmd_resolve(const CommonOpts& opts, const std::string& germ_text,
                const std::string& load_path) {
    ResolutionData res;
    if (!load_path.empty()) {
        std::ifstream f(load_path, std::ios::binary);
        if (!f) throw std::runtime_error("cannot open " + load_path);
        std::stringstream ss;
        ss << f.rdbuf();
        res = resolution_from_json(ss.str());
    } else {
        res = resolve_pair(parse_germ(germ_text), opts.blowup_cap);
    }
    emit(opts, opts.format == "json" ? resolution_to_json(res) : resolve_text(res));
    return 0;
}

int cmd_invariants(const CommonOpts& opts, const std::string& germ_text,
                   long L, long K) {
    ResolutionData res = obtain_resolution(opts, germ_text);
    bool f_const = true, g_const = true;
    for (const auto& d : res.divisors) {
        if (d.Nf > 0) f_const = false;
        if (d.Ng > 0) g_const = false;
    }
    std::optional<Rat> lf, lg;
    if (!f_const) lf = lct(res, true);
    if (!g_const) lg = lct(res, false);
    Strip strip = convergence_strip(res);
    CandidateRootSet roots = candidate_bs_roots(res, L);
    auto jns = candidate_jumping_numbers(res, Rat(4));
    std::optional<ZetaReport> zeta;
    if (!g_const) zeta = candidate_zeta_poles(res, K, L);

    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(res.germ);
        j["lct"] = {{"f", lf ? json(rat_str(*lf)) : json(nullptr)},
                    {"g", lg ? json(rat_str(*lg)) : json(nullptr)}};
        j["strip"] = strip_json(strip);
        json gens = json::array();
        for (const auto& g : roots.generators)
            gens.push_back({{"divisor", g.divisor_id},
                            {"base", rat_str(g.base)},
                            {"step", rat_str(g.step)}});
        j["bs_candidates"] = {{"ell_max", roots.ell_max},
                              {"generators", gens},
                              {"values", rats_json(roots.enumerated)}};
        if (zeta) {
            j["zeta_candidates"] = {{"alpha", rat_str(zeta->alpha)},
                                    {"lattice_depth", zeta->lattice_depth},
                                    {"ell_max", zeta->ell_max},
                                    {"left", rats_json(zeta->left)},
                                    {"right", rats_json(zeta->right)},
                                    {"note", "candidate supersets, not exact pole sets"}};
        } else {
            j["zeta_candidates"] = nullptr;
        }
        json jn = json::array();
        for (const auto& c : jns)
            jn.push_back({{"value", rat_str(c.value)}, {"divisors", c.divisors}});
        j["jn_candidates"] = jn;
        emit(opts, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream o;
    o << "germ: " << res.germ.str() << "\n";
    o << "lct_0(f) = " << (lf ? rat_str(*lf) : "undefined (constant)") << "\n";
    o << "lct_0(g) = " << (lg ? rat_str(*lg) : "undefined (constant)") << "\n";
    o << "convergence strip: " << strip_text(strip) << "\n";
    o << "candidate B-S roots (l <= " << L << "):";
    if (roots.enumerated.empty()) o << " none (no zero-class divisors)";
    for (const auto& r : roots.enumerated) o << " " << rat_str(r);
    o << "\n";
    if (zeta) {
        o << "candidate zeta poles (alpha = " << rat_str(zeta->alpha)
          << ", k <= " << K << "): left";
        for (const auto& r : zeta->left) o << " " << rat_str(r);
        o << " | right";
        for (const auto& r : zeta->right) o << " " << rat_str(r);
        o << "\n";
    }
    o << "candidate jumping numbers (<= 4):";
    for (const auto& c : jns) o << " " << rat_str(c.value);
    o << "\n";
    emit(opts, o.str());
    return 0;
}

int cmd_multiplier(const CommonOpts& opts, const std::string& germ_text,
                   const std::string& lambda_text, std::optional<int> D) {
    ResolutionData res = obtain_resolution(opts, germ_text);
    Rat lambda = parse_rat(lambda_text);
    IdealBasis J = multiplier_ideal(res, lambda, D);
    auto [lo, hi] = region_around(res, lambda, J,
                                  D ? *D : default_truncation(res, lambda));
    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(res.germ);
        j["lambda"] = rat_str(lambda);
        j["interval"] = {rat_str(lo), hi ? json(rat_str(*hi)) : json(nullptr)};
        j["generators"] = generators_json(J);
        j["truncation"] = J.truncation;
        j["stable"] = J.stable;
        emit(opts, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream o;
    o << "J((f/g)^lambda) for " << res.germ.str() << ", lambda = "
      << rat_str(lambda) << "\n";
    o << "constant on [" << rat_str(lo) << ", " << (hi ? rat_str(*hi) : "?")
      << ")\n";
    o << "generators: " << generators_text(J) << "   (truncation " << J.truncation
      << (J.stable ? "" : ", UNSTABLE") << ")\n";
    emit(opts, o.str());
    return 0;
}

int cmd_jumping(const CommonOpts& opts, const std::string& germ_text,
                const std::string& lambda_max_text, std::optional<int> D) {
    ResolutionData res = obtain_resolution(opts, germ_text);
    Rat lmax = parse_rat(lambda_max_text);
    auto jumps = jumping_numbers(res, lmax, D);
    int used_D = D ? *D : default_truncation(res, lmax);
    // constancy regions: (0, j1), [j1, j2), ..., [jn, lambda_max]
    struct Region {
        Rat lo;
        std::optional<Rat> hi;
        const IdealBasis* ideal;
        IdealBasis first;
    };
    std::vector<Region> regions;
    Rat first_probe = jumps.empty() ? Rat(lmax / 2) : Rat(jumps[0].lambda / 2);
    IdealBasis unit = multiplier_ideal(res, first_probe, used_D);
    regions.push_back({Rat(0), jumps.empty() ? std::optional<Rat>() : std::optional<Rat>(jumps[0].lambda), nullptr, unit});
    for (size_t i = 0; i < jumps.size(); ++i) {
        Region r;
        r.lo = jumps[i].lambda;
        if (i + 1 < jumps.size()) r.hi = jumps[i + 1].lambda;
        r.ideal = &jumps[i].ideal;
        regions.push_back(std::move(r));
    }
    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(res.germ);
        j["lambda_max"] = rat_str(lmax);
        j["truncation"] = used_D;
        json jn = json::array();
        for (const auto& jp : jumps) jn.push_back(rat_str(jp.lambda));
        j["jumping_numbers"] = jn;
        json regs = json::array();
        for (const auto& r : regions) {
            const IdealBasis& J = r.ideal ? *r.ideal : r.first;
            regs.push_back({{"lambda", rat_str(r.lo)},
                            {"interval", {rat_str(r.lo),
                                          r.hi ? json(rat_str(*r.hi)) : json(nullptr)}},
                            {"generators", generators_json(J)},
                            {"truncation", J.truncation},
                            {"stable", J.stable}});
        }
        j["regions"] = regs;
        emit(opts, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream o;
    o << "jumping numbers of " << res.germ.str() << " on (0, " << rat_str(lmax)
      << "], truncation " << used_D << ":\n";
    for (const auto& r : regions) {
        const IdealBasis& J = r.ideal ? *r.ideal : r.first;
        o << "  [" << rat_str(r.lo) << ", " << (r.hi ? rat_str(*r.hi) : "...")
          << ")  " << generators_text(J) << (J.stable ? "" : "  UNSTABLE") << "\n";
    }
    o << "jumping numbers:";
    for (const auto& jp : jumps) o << " " << rat_str(jp.lambda);
    o << "\n";
    emit(opts, o.str());
    return 0;
}

int cmd_bs_candidates(const CommonOpts& opts, const std::string& germ_text, long L) {
    ResolutionData res = obtain_resolution(opts, germ_text);
    CandidateRootSet roots = candidate_bs_roots(res, L);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(res.germ);
        j["ell_max"] = L;
        json gens = json::array();
        for (const auto& g : roots.generators)
            gens.push_back({{"divisor", g.divisor_id},
                            {"base", rat_str(g.base)},
                            {"step", rat_str(g.step)}});
        j["generators"] = gens;
        j["values"] = rats_json(roots.enumerated);
        if (roots.enumerated.empty())
            j["note"] = "no zero-class divisors: the candidate set is empty "
                        "(the Bernstein-Sato polynomial of 1/g is 1)";
        emit(opts, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream o;
    o << "candidate Bernstein-Sato roots of " << res.germ.str() << " (l <= " << L
      << "):\n";
    if (roots.enumerated.empty()) {
        o << "  empty: no zero-class divisors (the Bernstein-Sato polynomial of "
             "1/g is 1 and has no roots)\n";
    } else {
        for (const auto& g : roots.generators)
            o << "  E" << g.divisor_id << ": -(" << rat_str(g.base) << " + l*"
              << rat_str(g.step) << ")\n";
        o << "  values:";
        for (const auto& r : roots.enumerated) o << " " << rat_str(r);
        o << "\n";
    }
    emit(opts, o.str());
    return 0;
}

int cmd_zeta(const CommonOpts& opts, const std::string& germ_text, long K, long L) {
    ResolutionData res = obtain_resolution(opts, germ_text);
    ZetaReport z = candidate_zeta_poles(res, K, L);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(res.germ);
        j["alpha"] = rat_str(z.alpha);
        j["strip"] = strip_json(z.strip);
        j["lattice_depth"] = z.lattice_depth;
        j["ell_max"] = z.ell_max;
        j["left"] = rats_json(z.left);
        j["right"] = rats_json(z.right);
        j["note"] = "candidate supersets drawn from resolution data, not exact pole sets";
        emit(opts, j.dump(2) + "\n");
        return 0;
    }
    std::ostringstream o;
    o << "candidate zeta poles of " << res.germ.str() << "\n";
    o << "alpha = lct_0(g) = " << rat_str(z.alpha) << ", holomorphic on "
      << strip_text(z.strip) << "\n";
    o << "left (zeta - k*alpha):";
    for (const auto& r : z.left) o << " " << rat_str(r);
    o << "\nright (k*alpha - xi):";
    for (const auto& r : z.right) o << " " << rat_str(r);
    o << "\n(candidate supersets, not exact pole sets)\n";
    emit(opts, o.str());
    return 0;
}

int cmd_verify_feq(const CommonOpts& opts, const std::string& f_text,
                   const std::string& g_text, const std::string& op_text,
                   const std::string& b_text, const std::string& alpha_text,
                   const std::string& mode_text, bool check_neg_one) {
    std::string germ_text = "(" + f_text + ")/(" + g_text + ")";
    MeromorphicGerm germ = parse_germ(germ_text);
    OperatorExpr op = parse_operator(op_text, germ.vars);
    SPoly b = parse_spoly(b_text);
    Rat alpha = parse_rat(alpha_text);
    FunctionalEquationMode mode = mode_text == "quotient"
                                      ? FunctionalEquationMode::Quotient
                                      : FunctionalEquationMode::Numerator;
    VerifyResult r = verify_functional_equation(op, b, germ, alpha, mode);
    std::optional<NegOneReport> n1;
    if (check_neg_one && r.ok)
        n1 = neg_one_consequence(op, b, germ, alpha, mode);
    if (opts.format == "json") {
        json j;
        j["schema_version"] = kSchemaVersion;
        j["germ"] = germ_json(germ);
        j["alpha"] = rat_str(alpha);
        j["mode"] = mode_text;
        j["operator"] = op.str();
        j["b"] = b.str();
        j["verified"] = r.ok;
        j["witness"] = r.ok ? json(nullptr) : json(r.witness.str());
        if (n1)
            j["neg_one"] = {{"b_at_minus_one", rat_str(n1->b_at_minus_one)},
                            {"lhs_zero", n1->lhs_zero},
                            {"consistent", n1->consistent}};
        emit(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream o;
        o << "equation: (" << op.str() << ") "
          << (mode == FunctionalEquationMode::Quotient ? "(f/g)" : "f")
          << " F = (" << b.str() << ") F   in M^" << rat_str(alpha)
          << "_{f/g}[s], f = " << germ.f.str() << ", g = " << germ.g.str() << "\n";
        o << (r.ok ? "VERIFIED\n" : "FAILED, witness numerator: " + r.witness.str() + "\n");
        if (n1)
            o << "s = -1 specialization: b(-1) = " << rat_str(n1->b_at_minus_one)
              << ", left side " << (n1->lhs_zero ? "vanishes" : "nonzero")
              << ", divisibility " << (n1->consistent ? "consistent" : "INCONSISTENT")
              << "\n";
        emit(opts, o.str());
    }
    return r.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"singularity invariants of meromorphic plane-curve germs f/g"};
    app.require_subcommand(1);

    CommonOpts opts;
    std::string germ_text, load_path, lambda_text, lambda_max_text;
    std::string f_text, g_text = "1", op_text, b_text, alpha_text = "0",
                mode_text = "numerator";
    long L = 8, K = 8;
    int degree = -1;
    bool check_neg_one = false;

    auto add_common = [&](CLI::App* c, bool with_resolution = true) {
        c->add_option("--format", opts.format, "output format: text | json")
            ->check(CLI::IsMember({"text", "json"}));
        c->add_option("--out", opts.out_path, "also write the report to this file");
        c->add_option("--blowup-cap", opts.blowup_cap, "safety bound on blow-ups");
        if (with_resolution)
            c->add_option("--resolution", opts.resolution_path,
                          "reuse a resolution saved by 'resolve --format json --out'");
    };

    CLI::App* resolve = app.add_subcommand("resolve", "log resolution of f*g with dicritical separation");
    resolve->add_option("germ", germ_text, "germ, e.g. \"(y^3+x^5)/x\"");
    resolve->add_option("--load", load_path, "print a previously saved resolution");
    add_common(resolve, false);

    CLI::App* invariants = app.add_subcommand("invariants", "lct, strip, candidate roots/poles/jumping numbers");
    invariants->add_option("germ", germ_text)->required();
    invariants->add_option("--ell-max", L, "lattice depth l (default 8)");
    invariants->add_option("--lattice-depth", K, "zeta lattice depth k (default 8)");
    add_common(invariants);

    CLI::App* multiplier = app.add_subcommand("multiplier", "multiplier ideal J((f/g)^lambda)");
    multiplier->add_option("germ", germ_text)->required();
    multiplier->add_option("--lambda", lambda_text, "exponent, e.g. 8/12")->required();
    multiplier->add_option("--degree", degree, "truncation degree D");
    add_common(multiplier);

    CLI::App* jumping = app.add_subcommand("jumping", "jumping numbers and constancy regions");
    jumping->add_option("germ", germ_text)->required();
    jumping->add_option("--lambda-max", lambda_max_text, "right end of the scan")->required();
    jumping->add_option("--degree", degree, "truncation degree D");
    add_common(jumping);

    CLI::App* bs = app.add_subcommand("bs-candidates", "candidate Bernstein-Sato roots");
    bs->add_option("germ", germ_text)->required();
    bs->add_option("--ell-max", L, "lattice depth l (default 8)");
    add_common(bs);

    CLI::App* zeta = app.add_subcommand("zeta-candidates", "candidate poles of the local zeta function");
    zeta->add_option("germ", germ_text)->required();
    zeta->add_option("--ell-max", L);
    zeta->add_option("--lattice-depth", K);
    add_common(zeta);

    CLI::App* feq = app.add_subcommand("verify-feq", "verify a Bernstein-Sato functional equation");
    feq->add_option("--f", f_text, "numerator")->required();
    feq->add_option("--g", g_text, "denominator (default 1)");
    feq->add_option("--op", op_text, "operator delta(s), e.g. \"(1/4)*dx^2\"")->required();
    feq->add_option("--b", b_text, "polynomial b(s)")->required();
    feq->add_option("--alpha", alpha_text, "twist alpha (default 0)");
    feq->add_option("--mode", mode_text, "numerator | quotient")
        ->check(CLI::IsMember({"numerator", "quotient"}));
    feq->add_flag("--check-neg-one", check_neg_one, "also specialize at s = -1");
    add_common(feq, false);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<int> D;
        if (degree >= 0) D = degree;
        if (resolve->parsed()) {
            if (germ_text.empty() && load_path.empty())
                throw std::runtime_error("resolve: give a germ or --load PATH");
            return cmd_resolve(opts, germ_text, load_path);
        }
        if (invariants->parsed()) return cmd_invariants(opts, germ_text, L, K);
        if (multiplier->parsed()) return cmd_multiplier(opts, germ_text, lambda_text, D);
        if (jumping->parsed()) return cmd_jumping(opts, germ_text, lambda_max_text, D);
        if (bs->parsed()) return cmd_bs_candidates(opts, germ_text, L);
        if (zeta->parsed()) return cmd_zeta(opts, germ_text, K, L);
        if (feq->parsed())
            return cmd_verify_feq(opts, f_text, g_text, op_text, b_text,
                                  alpha_text, mode_text, check_neg_one);
    } catch (const ParseError& e) {
        std::cerr << "input error at byte " << e.offset() << ": " << e.what() << "\n";
        return 2;
    } catch (const ResolutionError& e) {
        std::cerr << "resolution error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
