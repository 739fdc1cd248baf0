#include "mero/invariants.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mero {

Rat lct(const ResolutionData& res, bool f_side) {
    std::optional<Rat> best;
    for (const auto& d : res.divisors) {
        long n = f_side ? d.Nf : d.Ng;
        if (n <= 0) continue;
        Rat v = make_rat(Int(d.k + 1), Int(n));
        if (!best || v < *best) best = v;
    }
    if (!best)
        throw std::domain_error("lct: side is constant (no divisors with N > 0)");
    return *best;
}

CandidateRootSet candidate_bs_roots(const ResolutionData& res, long ell_max) {
    CandidateRootSet out;
    out.ell_max = ell_max;
    std::set<Rat> values;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n <= 0) continue;
        CandidateGenerator g;
        g.divisor_id = d.id;
        g.base = make_rat(Int(d.k + 1), Int(n));
        g.step = make_rat(Int(1), Int(n));
        out.generators.push_back(g);
        for (long l = 0; l <= ell_max; ++l)
            values.insert(-make_rat(Int(d.k + 1 + l), Int(n)));
    }
    out.enumerated.assign(values.begin(), values.end());
    return out;
}

std::vector<JNCandidate> candidate_jumping_numbers(const ResolutionData& res,
                                                   const Rat& lambda_max) {
    std::map<Rat, std::set<int>> acc;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n <= 0) continue;
        for (long l = 0;; ++l) {
            Rat v = make_rat(Int(d.k + 1 + l), Int(n));
            if (v > lambda_max) break;
            acc[v].insert(d.id);
        }
    }
    std::vector<JNCandidate> out;
    for (auto& [v, ids] : acc)
        out.push_back({v, std::vector<int>(ids.begin(), ids.end())});
    return out;
}

Strip convergence_strip(const ResolutionData& res) {
    Strip s;
    bool f_const = std::all_of(res.divisors.begin(), res.divisors.end(),
                               [](const DivisorData& d) { return d.Nf == 0; });
    bool g_const = std::all_of(res.divisors.begin(), res.divisors.end(),
                               [](const DivisorData& d) { return d.Ng == 0; });
    if (!f_const) s.lo = -lct(res, true);
    if (!g_const) s.hi = lct(res, false);
    return s;
}

ZetaReport candidate_zeta_poles(const ResolutionData& res, long K, long L) {
    bool g_const = std::all_of(res.divisors.begin(), res.divisors.end(),
                               [](const DivisorData& d) { return d.Ng == 0; });
    if (g_const)
        throw std::domain_error(
            "candidate_zeta_poles: g is constant; use the classical candidate "
            "set for holomorphic germs instead");
    ZetaReport out;
    out.alpha = lct(res, false);
    out.strip = convergence_strip(res);
    out.lattice_depth = K;
    out.ell_max = L;
    std::set<Rat> left, right;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n > 0) {
            for (long l = 0; l <= L; ++l) {
                Rat zeta = -make_rat(Int(d.k + 1 + l), Int(n));
                for (long k = 0; k <= K; ++k) left.insert(zeta - Rat(k) * out.alpha);
            }
        } else if (n < 0) {
            for (long l = 0; l <= L; ++l) {
                Rat xi = -make_rat(Int(d.k + 1 + l), Int(-n));
                for (long k = 0; k <= K; ++k) right.insert(Rat(k) * out.alpha - xi);
            }
        }
    }
    out.left.assign(left.begin(), left.end());
    out.right.assign(right.begin(), right.end());
    return out;
}

}  // namespace mero
