#include "mero/multiplier.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <memory>
#include <stdexcept>

namespace mero {

namespace {

const std::vector<std::string> kXY = {"x", "y"};

long floor_long(const Rat& q) {
    Int f = floor_rat(q);
    return (long)f.get_si();
}

/// All monomials of total degree <= D, graded-lex descending.
std::vector<MPoly> monomial_basis(int D) {
    std::vector<MPoly> out;
    for (int d = D; d >= 0; --d)
        for (int a = d; a >= 0; --a)
            out.push_back(MPoly::monomial(kXY, {a, d - a}, Rat(1)));
    return out;
}

/// Remainder of multivariate division by a single divisor.
MPoly reduce_mod(MPoly p, const MPoly& q) {
    MPoly r(p.vars());
    const auto& qlead = *q.terms().begin();
    ExpVec d(p.nvars());
    while (!p.is_zero()) {
        const auto lead = *p.terms().begin();
        bool divisible = true;
        for (size_t i = 0; i < d.size(); ++i) {
            d[i] = lead.first[i] - qlead.first[i];
            if (d[i] < 0) { divisible = false; break; }
        }
        if (divisible) {
            p -= MPoly::monomial(p.vars(), d, lead.second / qlead.second) * q;
        } else {
            r.add_term(lead.first, lead.second);
            MPoly t = MPoly::monomial(p.vars(), lead.first, lead.second);
            p -= t;
        }
    }
    return r;
}

/// Restrict a basis to the kernel of a linear map given by images of the
/// basis elements (exact Gaussian elimination on the image side).
std::vector<MPoly> kernel_refine(const std::vector<MPoly>& basis,
                                 const std::vector<MPoly>& images) {
    assert(basis.size() == images.size());
    std::map<ExpVec, std::pair<MPoly, MPoly>, GrlexGreater> pivots;  // lead -> (image, combo)
    std::vector<MPoly> kernel;
    for (size_t i = 0; i < basis.size(); ++i) {
        MPoly img = images[i];
        MPoly combo = basis[i];
        while (!img.is_zero()) {
            auto lead = *img.terms().begin();
            auto it = pivots.find(lead.first);
            if (it == pivots.end()) break;
            Rat c = lead.second / it->second.first.terms().begin()->second;
            img -= it->second.first.scaled(c);
            combo -= it->second.second.scaled(c);
        }
        if (img.is_zero()) {
            kernel.push_back(std::move(combo));
        } else {
            ExpVec lead = img.terms().begin()->first;
            pivots.emplace(std::move(lead),
                           std::make_pair(std::move(img), std::move(combo)));
        }
    }
    return kernel;
}

struct ConstraintMap {
    // images of arbitrary polynomials under the divisor's linear condition
    std::function<MPoly(const MPoly&)> map;
};

/// Linear condition map for one divisor at one bound, with cached monomial
/// images: the condition "h satisfies the bound" is map(h) == 0.
ConstraintMap make_constraint_map(const ResolutionData& res, const Constraint& c) {
    const DivisorData& d = res.divisor(c.divisor_id);
    if (d.kind == DivisorKind::Exceptional) {
        auto X = d.chart.X, Y = d.chart.Y;
        long cap = c.bound;
        auto cache = std::make_shared<std::map<ExpVec, MPoly>>();
        return {[X, Y, cap, cache](const MPoly& p) {
            MPoly out(kXY);
            for (const auto& [e, coef] : p.terms()) {
                auto it = cache->find(e);
                if (it == cache->end()) {
                    MPoly m = MPoly::monomial(kXY, e, Rat(1));
                    it = cache->emplace(e, substitute_trunc(m, {X, Y}, 0, (int)cap)).first;
                }
                out += it->second.scaled(coef);
            }
            return out;
        }};
    }
    MPoly power = d.factor.pow((int)c.bound);
    auto cache = std::make_shared<std::map<ExpVec, MPoly>>();
    return {[power, cache](const MPoly& p) {
        MPoly out(kXY);
        for (const auto& [e, coef] : p.terms()) {
            auto it = cache->find(e);
            if (it == cache->end()) {
                MPoly m = MPoly::monomial(kXY, e, Rat(1));
                it = cache->emplace(e, reduce_mod(m, power)).first;
            }
            out += it->second.scaled(coef);
        }
        return out;
    }};
}

std::vector<MPoly> solve_constraints(const ResolutionData& res,
                                     const std::vector<Constraint>& cons, int D) {
    std::vector<MPoly> basis = monomial_basis(D);
    for (const auto& c : cons) {
        ConstraintMap cm = make_constraint_map(res, c);
        std::vector<MPoly> images;
        images.reserve(basis.size());
        for (const auto& b : basis) images.push_back(cm.map(b));
        basis = kernel_refine(basis, images);
        if (basis.empty()) break;
    }
    return basis;
}

bool is_corner(const ExpVec& lead,
               const std::map<ExpVec, MPoly, GrlexGreater>& rows) {
    for (const auto& [e, row] : rows) {
        if (e == lead) continue;
        bool divides = true;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > lead[i]) { divides = false; break; }
        if (divides) return false;
    }
    return true;
}

std::vector<MPoly> extract_generators(const PolyStaircase& st, int D) {
    std::vector<MPoly> corners;
    for (const auto& [lead, row] : st.rows())
        if (is_corner(lead, st.rows())) corners.push_back(row);
    // ascending degree, then ascending grlex, for a deterministic scan
    std::sort(corners.begin(), corners.end(), [](const MPoly& a, const MPoly& b) {
        return GrlexGreater{}(b.terms().begin()->first, a.terms().begin()->first);
    });
    bool dropped = true;
    while (dropped && corners.size() > 1) {
        dropped = false;
        for (size_t i = 0; i < corners.size(); ++i) {
            PolyStaircase span;
            for (size_t j = 0; j < corners.size(); ++j) {
                if (j == i) continue;
                int room = D - corners[j].total_degree();
                for (int dd = 0; dd <= room; ++dd)
                    for (int a = dd; a >= 0; --a)
                        span.insert(MPoly::monomial(kXY, {a, dd - a}, Rat(1)) * corners[j]);
            }
            if (span.contains(corners[i])) {
                corners.erase(corners.begin() + i);
                dropped = true;
                break;
            }
        }
    }
    return corners;
}

IdealBasis build_ideal(const ResolutionData& res,
                       const std::vector<Constraint>& cons, int D, bool check_stability);

IdealBasis build_ideal_once(const ResolutionData& res,
                            const std::vector<Constraint>& cons, int D) {
    IdealBasis out;
    out.truncation = D;
    for (const MPoly& v : solve_constraints(res, cons, D)) out.staircase.insert(v);
    out.generators = extract_generators(out.staircase, D);
    return out;
}

IdealBasis build_ideal(const ResolutionData& res,
                       const std::vector<Constraint>& cons, int D,
                       bool check_stability) {
    IdealBasis out = build_ideal_once(res, cons, D);
    if (check_stability) {
        IdealBasis wider = build_ideal_once(res, cons, D + 2);
        out.stable = out.staircase.truncated(D - 2) == wider.staircase.truncated(D - 2);
    }
    return out;
}

}  // namespace

// ---- PolyStaircase ----

MPoly PolyStaircase::reduce(MPoly v) const {
    MPoly out(v.vars());
    while (!v.is_zero()) {
        auto lead = *v.terms().begin();
        auto it = rows_.find(lead.first);
        if (it != rows_.end()) {
            v -= it->second.scaled(lead.second);
        } else {
            out.add_term(lead.first, lead.second);
            v -= MPoly::monomial(v.vars(), lead.first, lead.second);
        }
    }
    return out;
}

void PolyStaircase::insert(MPoly v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return;
    v = v.scaled(Rat(1) / v.terms().begin()->second);
    const ExpVec lead = v.terms().begin()->first;
    for (auto& [e, row] : rows_) {
        auto it = row.terms().find(lead);
        if (it != row.terms().end()) row -= v.scaled(it->second);
    }
    rows_.emplace(lead, std::move(v));
}

bool PolyStaircase::contains(const MPoly& v) const { return reduce(v).is_zero(); }

std::vector<MPoly> PolyStaircase::row_list() const {
    std::vector<MPoly> out;
    for (const auto& [e, row] : rows_) out.push_back(row);
    return out;
}

bool PolyStaircase::operator==(const PolyStaircase& o) const {
    return rows_ == o.rows_;
}

PolyStaircase PolyStaircase::truncated(int d) const {
    PolyStaircase out;
    for (const auto& [e, row] : rows_) {
        int deg = 0;
        for (int x : e) deg += x;
        if (deg <= d) out.rows_.emplace(e, row);
    }
    return out;
}

// ---- constraints ----

std::vector<Constraint> constraint_vector(const ResolutionData& res, const Rat& lambda) {
    if (lambda < 0) throw std::domain_error("constraint_vector: lambda < 0");
    std::vector<Constraint> out;
    for (const auto& d : res.divisors) {
        long n = d.Nfg();
        if (n <= 0) continue;  // bounds at pole/dicritical divisors are vacuous
        long c = floor_long(lambda * Rat(n)) - d.k;
        if (c > 0) out.push_back({d.id, c});
    }
    return out;
}

std::vector<Constraint> mixed_constraint_vector(const ResolutionData& res,
                                                const Rat& l1, const Rat& l2) {
    if (l1 < 0 || l2 < 0)
        throw std::domain_error("mixed_constraint_vector: negative exponent");
    std::vector<Constraint> out;
    for (const auto& d : res.divisors) {
        long c = floor_long(l1 * Rat(d.Nf) + l2 * Rat(d.Ng)) - d.k;
        if (c > 0) out.push_back({d.id, c});
    }
    return out;
}

// ---- truncation heuristic ----

int default_truncation(const ResolutionData& res, const Rat& lambda) {
    long best = 1;
    for (const auto& c : constraint_vector(res, lambda)) {
        const DivisorData& d = res.divisor(c.divisor_id);
        long need;
        if (d.kind == DivisorKind::Exceptional) {
            long ox = valuation(d.chart.X, 0);
            long oy = valuation(d.chart.Y, 0);
            long m = std::min(ox, oy);
            if (m <= 0) m = 1;
            need = (c.bound + m - 1) / m;
        } else {
            need = c.bound * std::max(1, d.factor.total_degree());
        }
        best = std::max(best, need);
    }
    long floor_bound = (long)(res.germ.f.total_degree() *
                              ceil_rat(lambda).get_si());
    return (int)std::max(best + 2, std::max(floor_bound, 1L));
}

// ---- ideals ----

IdealBasis multiplier_ideal(const ResolutionData& res, const Rat& lambda,
                            std::optional<int> truncation) {
    int D = truncation ? *truncation : default_truncation(res, lambda);
    return build_ideal(res, constraint_vector(res, lambda), D, true);
}

IdealBasis mixed_multiplier_ideal(const ResolutionData& res, const Rat& l1,
                                  const Rat& l2, std::optional<int> truncation) {
    int D = truncation ? *truncation
                       : std::max(default_truncation(res, l1),
                                  default_truncation(res, l2));
    return build_ideal(res, mixed_constraint_vector(res, l1, l2), D, true);
}

bool membership(const ResolutionData& res, const MPoly& h, const Rat& lambda) {
    if (h.is_zero()) return true;  // satisfies every bound
    for (const auto& c : constraint_vector(res, lambda))
        if (ord_along(res, c.divisor_id, h) < c.bound) return false;
    return true;
}

std::vector<JumpingPoint> jumping_numbers(const ResolutionData& res,
                                          const Rat& lambda_max,
                                          std::optional<int> truncation) {
    if (lambda_max <= 0) throw std::domain_error("jumping_numbers: lambda_max <= 0");
    int D = truncation ? *truncation : default_truncation(res, lambda_max);
    auto cands = candidate_jumping_numbers(res, lambda_max);
    std::vector<JumpingPoint> out;
    if (cands.empty()) return out;
    IdealBasis prev = build_ideal(res, constraint_vector(res, cands[0].value / 2), D, false);
    for (size_t i = 0; i < cands.size(); ++i) {
        const Rat& c = cands[i].value;
        IdealBasis cur = build_ideal(res, constraint_vector(res, c), D, true);
        // the ideal must be constant up to the next candidate
        Rat probe = i + 1 < cands.size() ? Rat((c + cands[i + 1].value) / 2)
                                         : Rat(c + make_rat(1, 2));
        if (probe <= lambda_max) {
            IdealBasis mid = build_ideal(res, constraint_vector(res, probe), D, false);
            if (!(mid.staircase == cur.staircase))
                throw std::logic_error(
                    "jumping_numbers: ideal not constant between candidates");
        }
        if (!(cur.staircase == prev.staircase)) out.push_back({c, cur});
        prev = std::move(cur);
    }
    return out;
}

PolyStaircase principal_span(const MPoly& p, int D) {
    PolyStaircase st;
    int room = D - p.total_degree();
    for (int d = 0; d <= room; ++d)
        for (int a = d; a >= 0; --a)
            st.insert(MPoly::monomial(kXY, {a, d - a}, Rat(1)) * p);
    return st;
}

bool check_integer_power(const ResolutionData& res, long n,
                         std::optional<int> truncation) {
    if (n < 1) throw std::domain_error("check_integer_power: n >= 1 required");
    int D = truncation ? *truncation : default_truncation(res, Rat((long)n));
    IdealBasis J = multiplier_ideal(res, Rat((long)n), D);
    PolyStaircase expect = principal_span(res.germ.f.pow((int)n), D);
    return J.staircase == expect;
}

bool check_skoda(const ResolutionData& res, const Rat& lambda, long ell,
                 std::optional<int> truncation) {
    if (lambda < 0 || ell < 1) throw std::domain_error("check_skoda: bad arguments");
    const MPoly& f = res.germ.f;
    const MPoly& g = res.germ.g;
    int D = truncation ? *truncation : default_truncation(res, lambda + Rat(ell));
    IdealBasis lhs = multiplier_ideal(res, lambda + Rat(ell), D);
    // right side: h in R with h g^ell in f^ell J((f/g)^lambda), degrees <= D
    int dg = std::max(0, g.total_degree());
    int df = std::max(0, f.total_degree());
    int Dg = D + (int)ell * dg;
    int inner = Dg - (int)ell * df;
    PolyStaircase W;
    if (inner >= 0) {
        IdealBasis J = multiplier_ideal(res, lambda, inner);
        MPoly fl = f.pow((int)ell);
        for (const MPoly& row : J.staircase.row_list()) {
            MPoly base = fl * row;
            int room = Dg - base.total_degree();
            for (int d = 0; d <= room; ++d)
                for (int a = d; a >= 0; --a)
                    W.insert(MPoly::monomial(kXY, {a, d - a}, Rat(1)) * base);
        }
    }
    MPoly gl = g.pow((int)ell);
    std::vector<MPoly> basis = monomial_basis(D);
    std::vector<MPoly> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(W.reduce(b * gl));
    std::vector<MPoly> rhs_basis = kernel_refine(basis, images);
    PolyStaircase rhs;
    for (MPoly& v : rhs_basis) rhs.insert(std::move(v));
    return lhs.staircase == rhs;
}

bool check_colon_relation(const ResolutionData& res, const Rat& lambda, long t,
                          std::optional<int> truncation) {
    if (lambda < 0 || Rat(t) < lambda)
        throw std::domain_error("check_colon_relation: need t >= lambda >= 0");
    const MPoly& g = res.germ.g;
    int D = truncation ? *truncation : default_truncation(res, Rat(t));
    IdealBasis lhs = multiplier_ideal(res, lambda, D);
    int dg = std::max(0, g.total_degree());
    int Dm = D + (int)t * dg;
    IdealBasis mixed = mixed_multiplier_ideal(res, lambda, Rat(t) - lambda, Dm);
    MPoly gt = g.pow((int)t);
    std::vector<MPoly> basis = monomial_basis(D);
    std::vector<MPoly> images;
    images.reserve(basis.size());
    for (const auto& b : basis) images.push_back(mixed.staircase.reduce(b * gt));
    std::vector<MPoly> colon_basis = kernel_refine(basis, images);
    PolyStaircase colon;
    for (MPoly& v : colon_basis) colon.insert(std::move(v));
    return colon == lhs.staircase;
}

CrosscheckReport jn_bs_crosscheck(const ResolutionData& res,
                                  std::optional<int> truncation) {
    CrosscheckReport out;
    bool g_const = std::all_of(res.divisors.begin(), res.divisors.end(),
                               [](const DivisorData& d) { return d.Ng == 0; });
    if (!g_const) out.window_lo = Rat(1) - lct(res, false);
    auto jns = jumping_numbers(res, Rat(1), truncation);
    for (const auto& jp : jns) {
        if (out.window_lo && !(jp.lambda > *out.window_lo)) continue;
        CrosscheckEntry e;
        e.lambda = jp.lambda;
        e.negated = -jp.lambda;
        for (const auto& d : res.divisors) {
            long n = d.Nfg();
            if (n <= 0) continue;
            Rat ell = jp.lambda * Rat(n) - Rat(d.k + 1);
            if (ell >= 0 && ell.get_den() == 1) e.witnesses.push_back(d.id);
        }
        e.in_candidates = !e.witnesses.empty();
        if (!e.in_candidates) out.all_ok = false;
        out.entries.push_back(std::move(e));
    }
    return out;
}

}  // namespace mero
