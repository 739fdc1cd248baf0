#include "mero/resolution.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace mero {

namespace {

const std::vector<std::string> kXY = {"x", "y"};

std::pair<MPoly, MPoly> elementary_images(const ElementaryMap& em) {
    MPoly x = MPoly::variable(kXY, 0);
    MPoly y = MPoly::variable(kXY, 1);
    if (em.chart == 1) return {x, x * (y + MPoly::constant(kXY, em.c))};
    return {x * y, y};
}

PointModel base_model() {
    PointModel m;
    m.X = MPoly::variable(kXY, 0);
    m.Y = MPoly::variable(kXY, 1);
    return m;
}

PointModel extend_model(const PointModel& m, const ElementaryMap& em,
                        int axis_x, int axis_y) {
    PointModel r;
    r.chain = m.chain;
    r.chain.push_back(em);
    auto [ix, iy] = elementary_images(em);
    r.X = substitute(m.X, {ix, iy});
    r.Y = substitute(m.Y, {ix, iy});
    r.axis_x_div = axis_x;
    r.axis_y_div = axis_y;
    return r;
}

Chart chart_of_model(const PointModel& m) {
    Chart c;
    c.chain = m.chain;
    c.X = m.X;
    c.Y = m.Y;
    return c;
}

/// Pullback of a downstairs polynomial with the exceptional axis powers
/// removed: the local equation of the strict transform (times a local unit).
MPoly strict_at(const MPoly& u, const PointModel& m) {
    MPoly p = substitute(u, {m.X, m.Y});
    if (m.axis_x_div > 0 && !p.is_zero()) p = strip_power(p, 0);
    if (m.axis_y_div > 0 && !p.is_zero()) p = strip_power(p, 1);
    return p;
}

bool vanishes_at_origin(const MPoly& p) { return p.constant_value() == 0; }

/// Dehomogenization of the tangent cone: sum of c*y^b over lowest-degree
/// terms c*x^a*y^b. Roots are the finite tangent directions.
MPoly cone_directions(const MPoly& strict) {
    MPoly cone = strict.lowest_form();
    MPoly phi(kXY);
    for (const auto& [e, c] : cone.terms()) {
        ExpVec d(2, 0);
        d[1] = e[1];
        phi.add_term(d, c);
    }
    return phi;
}

bool cone_is_squarefree(const MPoly& strict) {
    MPoly cone = strict.lowest_form();
    MPoly sf = squarefree_part(cone);
    return sf.total_degree() == cone.total_degree();
}

struct Component {
    bool f_side = true;
    MPoly u;  // squarefree, monic, vanishing at the origin
    int mult = 1;
};

/// Squarefree components of h through the origin, with rational lines of
/// the tangent cone split off as their own components. Factors that are
/// units at the origin carry no divisor and are dropped.
std::vector<Component> germ_components(const MPoly& h, bool f_side) {
    std::vector<Component> out;
    if (h.is_constant()) return out;
    for (auto& [u0, m] : squarefree_decomposition(h)) {
        std::vector<MPoly> queue = {u0};
        while (!queue.empty()) {
            MPoly u = queue.back();
            queue.pop_back();
            if (u.is_constant()) continue;
            if (!vanishes_at_origin(u)) continue;  // unit of the germ
            bool split = false;
            MPoly phi = cone_directions(u);
            int mu = u.min_total_degree();
            std::vector<MPoly> lines;
            if (phi.degree_in(1) < mu) lines.push_back(MPoly::variable(kXY, 0));
            if (!phi.is_constant()) {
                for (auto& [r, mult_r] : rational_roots(phi, 1).roots) {
                    // y - r*x
                    MPoly line = MPoly::variable(kXY, 1);
                    line -= MPoly::variable(kXY, 0).scaled(r);
                    lines.push_back(line);
                }
            }
            for (const auto& line : lines) {
                if (u == line) break;
                auto q = divide_exact(u, line);
                if (q) {
                    queue.push_back(line);
                    queue.push_back(*q);
                    split = true;
                    break;
                }
            }
            if (!split) out.push_back({f_side, u, m});
        }
    }
    std::sort(out.begin(), out.end(), [](const Component& a, const Component& b) {
        if (a.mult != b.mult) return a.mult < b.mult;
        return GrlexGreater{}(a.u.terms().begin()->first,
                              b.u.terms().begin()->first);
    });
    return out;
}

class Resolver {
public:
    Resolver(const MeromorphicGerm& germ, long cap) : germ_(germ), cap_(cap) {
        if (germ.vars != kXY)
            throw ResolutionError(ResolutionError::Kind::Domain,
                                  "resolution requires a plane-curve germ in x, y");
        if (germ.is_constant())
            throw ResolutionError(ResolutionError::Kind::Domain,
                                  "constant germ has no resolution data");
        auto fc = germ_components(germ.f, true);
        auto gc = germ_components(germ.g, false);
        comps_ = fc;
        comps_.insert(comps_.end(), gc.begin(), gc.end());
        if (comps_.empty())
            throw ResolutionError(ResolutionError::Kind::Domain,
                                  "germ is a unit at the origin; nothing to resolve");
    }

    ResolutionData run() {
        examine(base_model());
        return materialize();
    }

private:
    struct Pending {
        size_t comp = 0;
        bool has_model = false;
        PointModel model;
        int axis_div = 0;  // exceptional divisor the branch meets (0 = none)
        int orbit = 1;
    };

    void examine(const PointModel& m) {
        std::vector<size_t> through;
        std::vector<MPoly> stricts(comps_.size());
        for (size_t i = 0; i < comps_.size(); ++i) {
            stricts[i] = strict_at(comps_[i].u, m);
            if (vanishes_at_origin(stricts[i])) through.push_back(i);
        }
        int naxes = (m.axis_x_div > 0) + (m.axis_y_div > 0);
        if (through.empty()) {
            if (naxes == 2) {
                add_meeting(m.axis_x_div, m.axis_y_div, m);
            }
            return;
        }
        bool blow = false;
        if (naxes == 2) {
            blow = true;
        } else if (naxes == 1) {
            if (through.size() > 1) {
                blow = true;
            } else {
                const MPoly& s = stricts[through[0]];
                if (s.min_total_degree() > 1) {
                    blow = true;
                } else {
                    // intersection multiplicity with the axis
                    size_t axis_var = m.axis_x_div > 0 ? 0 : 1;
                    MPoly r = coeff_of_power(s, axis_var, 0);
                    if (valuation(r, axis_var == 0 ? 1 : 0) > 1) blow = true;
                }
            }
        } else {
            // base point
            if (through.size() > 2) {
                blow = true;
            } else if (through.size() == 2) {
                const MPoly& s1 = stricts[through[0]];
                const MPoly& s2 = stricts[through[1]];
                if (s1.min_total_degree() != 1 || s2.min_total_degree() != 1) {
                    blow = true;
                } else {
                    MPoly l1 = s1.lowest_form(), l2 = s2.lowest_form();
                    Rat a1 = coeff_of(l1, 1, 0), b1 = coeff_of(l1, 0, 1);
                    Rat a2 = coeff_of(l2, 1, 0), b2 = coeff_of(l2, 0, 1);
                    if (a1 * b2 - a2 * b1 == 0) blow = true;
                }
            } else {
                int mu = stricts[through[0]].min_total_degree();
                if (mu == 1) {
                    // smooth branch, nothing to do
                } else if (mu == 2 && cone_is_squarefree(stricts[through[0]])) {
                    // ordinary node: two smooth transversal branches
                } else {
                    blow = true;
                }
            }
        }
        if (!blow) {
            emit_final(m, through, stricts, naxes);
            return;
        }
        blow_up(m, through, stricts);
    }

    static Rat coeff_of(const MPoly& p, int ex, int ey) {
        ExpVec e = {ex, ey};
        auto it = p.terms().find(e);
        return it == p.terms().end() ? Rat(0) : it->second;
    }

    void emit_final(const PointModel& m, const std::vector<size_t>& through,
                    const std::vector<MPoly>& stricts, int naxes) {
        if (naxes == 1) {
            Pending p;
            p.comp = through[0];
            p.has_model = true;
            p.model = m;
            p.axis_div = m.axis_x_div > 0 ? m.axis_x_div : m.axis_y_div;
            pendings_.push_back(std::move(p));
            return;
        }
        // base point
        if (through.size() == 2) {
            Pending p1{through[0], true, m, 0, 1};
            Pending p2{through[1], true, m, 0, 1};
            pendings_.push_back(p1);
            size_t i1 = pendings_.size() - 1;
            pendings_.push_back(p2);
            base_pair_ = {i1, pendings_.size() - 1, m};
            return;
        }
        int orbit = stricts[through[0]].min_total_degree() == 2 ? 2 : 1;
        Pending p{through[0], true, m, 0, orbit};
        pendings_.push_back(std::move(p));
    }

    void blow_up(const PointModel& m, const std::vector<size_t>& through,
                 const std::vector<MPoly>& stricts) {
        if (++count_ > cap_)
            throw ResolutionError(ResolutionError::Kind::IterationCap,
                                  "blow-up cap " + std::to_string(cap_) +
                                      " exceeded (raise --blowup-cap)");
        int id = (int)divisors_.size() + 1;
        DivisorData d;
        d.id = id;
        d.kind = DivisorKind::Exceptional;
        HistoryEntry h;
        h.id = id;
        for (int axis : {m.axis_x_div, m.axis_y_div}) {
            if (axis <= 0) continue;
            d.Nf += divisors_[axis - 1].Nf;
            d.Ng += divisors_[axis - 1].Ng;
            d.k += divisors_[axis - 1].k;
            h.parents.push_back(axis);
        }
        for (size_t i : through) {
            long mu = stricts[i].min_total_degree();
            if (comps_[i].f_side) {
                d.Nf += (long)comps_[i].mult * mu;
                h.strict_f = true;
            } else {
                d.Ng += (long)comps_[i].mult * mu;
                h.strict_g = true;
            }
        }
        d.k += 1;
        d.chart = chart_of_model(extend_model(m, {1, Rat(0)}, id, 0));
        divisors_.push_back(d);
        history_.push_back(std::move(h));

        // enumerate the interesting points of the new exceptional line
        std::set<Rat> finite;
        bool want_inf = m.axis_x_div > 0;
        if (m.axis_y_div > 0) finite.insert(Rat(0));
        std::vector<MPoly> residuals(comps_.size(), MPoly::constant(kXY, 1));
        for (size_t i : through) {
            const MPoly& s = stricts[i];
            int mu = s.min_total_degree();
            MPoly phi = cone_directions(s);
            if (phi.degree_in(1) < mu) want_inf = true;
            if (!phi.is_constant()) {
                auto rr = rational_roots(phi, 1);
                for (auto& [r, mult_r] : rr.roots) finite.insert(r);
                residuals[i] = rr.residual;
            }
        }
        for (size_t i : through) {
            if (residuals[i].degree_in(1) < 1) continue;
            MPoly dres = residuals[i].derivative(1);
            if (!dres.is_zero() && !gcd(residuals[i], dres).is_constant())
                throw ResolutionError(
                    ResolutionError::Kind::UnsupportedExtension,
                    "blow-up center with irrational coordinates needed on E" +
                        std::to_string(id) + " (multiple direction of " +
                        residuals[i].str() + ")");
            for (size_t j : through) {
                if (j <= i || residuals[j].degree_in(1) < 1) continue;
                if (!gcd(residuals[i], residuals[j]).is_constant())
                    throw ResolutionError(
                        ResolutionError::Kind::UnsupportedExtension,
                        "components meet at an irrational point of E" +
                            std::to_string(id) + " (common factor of " +
                            residuals[i].str() + " and " + residuals[j].str() + ")");
            }
            Pending p;
            p.comp = i;
            p.has_model = false;
            p.axis_div = id;
            p.orbit = residuals[i].degree_in(1);
            pendings_.push_back(std::move(p));
        }
        for (const Rat& c : finite) {
            int ay = (c == 0) ? m.axis_y_div : 0;
            examine(extend_model(m, {1, c}, id, ay));
        }
        if (want_inf) examine(extend_model(m, {2, Rat(0)}, m.axis_x_div, id));
    }

    void add_meeting(int a, int b, const PointModel& m) {
        edge_divs_.push_back({std::min(a, b), std::max(a, b)});
        edge_models_.push_back(m);
    }

    ResolutionData materialize() {
        ResolutionData out;
        out.germ = germ_;
        out.divisors = divisors_;
        out.history = history_;
        out.blowups = count_;
        out.blowup_cap = cap_;
        // strict-transform records: f components first, then g
        std::vector<size_t> order(pendings_.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
            return comps_[pendings_[a].comp].f_side >
                   comps_[pendings_[b].comp].f_side;
        });
        std::vector<int> record_id(pendings_.size(), 0);
        for (size_t idx : order) {
            const Pending& p = pendings_[idx];
            DivisorData d;
            d.id = (int)out.divisors.size() + 1;
            d.kind = comps_[p.comp].f_side ? DivisorKind::StrictF
                                           : DivisorKind::StrictG;
            d.Nf = comps_[p.comp].f_side ? comps_[p.comp].mult : 0;
            d.Ng = comps_[p.comp].f_side ? 0 : comps_[p.comp].mult;
            d.k = 0;
            d.factor = comps_[p.comp].u;
            d.orbit = p.orbit;
            out.divisors.push_back(d);
            record_id[idx] = d.id;
            if (p.axis_div > 0) {
                out.edges.push_back({std::min(d.id, p.axis_div),
                                     std::max(d.id, p.axis_div)});
                PointModel pm = p.model;
                pm.known = p.has_model;
                out.meetings.push_back(pm);
            }
        }
        if (base_pair_) {
            auto& [i1, i2, m] = *base_pair_;
            int a = record_id[i1], b = record_id[i2];
            out.edges.push_back({std::min(a, b), std::max(a, b)});
            out.meetings.push_back(m);
        }
        for (size_t i = 0; i < edge_divs_.size(); ++i) {
            out.edges.push_back(edge_divs_[i]);
            out.meetings.push_back(edge_models_[i]);
        }
        return out;
    }

    MeromorphicGerm germ_;
    std::vector<Component> comps_;
    std::vector<DivisorData> divisors_;
    std::vector<HistoryEntry> history_;
    std::vector<Pending> pendings_;
    std::optional<std::tuple<size_t, size_t, PointModel>> base_pair_;
    std::vector<std::pair<int, int>> edge_divs_;
    std::vector<PointModel> edge_models_;
    long cap_ = 64;
    long count_ = 0;
};

void sort_res_edges(ResolutionData& res) {
    std::vector<size_t> order(res.edges.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return res.edges[a] < res.edges[b]; });
    std::vector<std::pair<int, int>> edges;
    std::vector<PointModel> meetings;
    for (size_t i : order) {
        edges.push_back(res.edges[i]);
        if (i < res.meetings.size()) meetings.push_back(res.meetings[i]);
    }
    res.edges = std::move(edges);
    res.meetings = std::move(meetings);
}

}  // namespace

ResolutionData resolve_snc(const MeromorphicGerm& germ, long blowup_cap) {
    Resolver r(germ, blowup_cap);
    ResolutionData res = r.run();
    sort_res_edges(res);
    return res;
}

ResolutionData separate_dicritical(ResolutionData res) {
    auto mixed = [&]() -> std::optional<size_t> {
        for (size_t i = 0; i < res.edges.size(); ++i) {
            long na = res.divisor(res.edges[i].first).Nfg();
            long nb = res.divisor(res.edges[i].second).Nfg();
            if ((na > 0 && nb < 0) || (na < 0 && nb > 0)) return i;
        }
        return std::nullopt;
    };
    while (auto idx = mixed()) {
        size_t i = *idx;
        if (i >= res.meetings.size() || !res.meetings[i].known)
            throw ResolutionError(
                ResolutionError::Kind::UnsupportedExtension,
                "separation blow-up needs an intersection point that is not "
                "rational or not available on this resolution");
        if (++res.blowups > res.blowup_cap)
            throw ResolutionError(ResolutionError::Kind::IterationCap,
                                  "blow-up cap exceeded during dicritical separation");
        PointModel center = res.meetings[i];
        auto [ia, ib] = res.edges[i];
        res.edges.erase(res.edges.begin() + i);
        res.meetings.erase(res.meetings.begin() + i);

        DivisorData d;
        d.id = (int)res.divisors.size() + 1;
        d.kind = DivisorKind::Exceptional;
        const DivisorData& da = res.divisor(ia);
        const DivisorData& db = res.divisor(ib);
        d.Nf = da.Nf + db.Nf;
        d.Ng = da.Ng + db.Ng;
        d.k = da.k + db.k + 1;
        d.chart = chart_of_model(extend_model(center, {1, Rat(0)}, d.id, 0));
        HistoryEntry h;
        h.id = d.id;
        h.parents = {ia, ib};
        h.strict_f = da.kind == DivisorKind::StrictF || db.kind == DivisorKind::StrictF;
        h.strict_g = da.kind == DivisorKind::StrictG || db.kind == DivisorKind::StrictG;
        res.divisors.push_back(d);
        res.history.push_back(h);

        for (int side : {ia, ib}) {
            const DivisorData& ds = res.divisor(side);
            PointModel pm;
            if (ds.kind == DivisorKind::Exceptional) {
                if (center.axis_x_div == side)
                    pm = extend_model(center, {2, Rat(0)}, side, d.id);
                else
                    pm = extend_model(center, {1, Rat(0)}, d.id, side);
            } else {
                MPoly w = strict_at(ds.factor, center);
                MPoly low = w.lowest_form();
                Rat ax = 0, by = 0;
                {
                    ExpVec ex = {1, 0}, ey = {0, 1};
                    auto it = low.terms().find(ex);
                    if (it != low.terms().end()) ax = it->second;
                    it = low.terms().find(ey);
                    if (it != low.terms().end()) by = it->second;
                }
                if (by == 0) {
                    pm = extend_model(center, {2, Rat(0)}, center.axis_x_div, d.id);
                } else {
                    Rat c0 = -ax / by;
                    int ay = (c0 == 0) ? center.axis_y_div : 0;
                    pm = extend_model(center, {1, c0}, d.id, ay);
                }
            }
            res.edges.push_back({std::min(side, d.id), std::max(side, d.id)});
            res.meetings.push_back(pm);
        }
        sort_res_edges(res);
    }
    sort_res_edges(res);
    return res;
}

ResolutionData resolve_pair(const MeromorphicGerm& germ, long blowup_cap) {
    return separate_dicritical(resolve_snc(germ, blowup_cap));
}

long ord_along(const ResolutionData& res, int divisor_id, const MPoly& h) {
    if (h.is_zero())
        throw std::domain_error("ord_along: zero polynomial (order is infinite)");
    const DivisorData& d = res.divisor(divisor_id);
    if (d.kind == DivisorKind::Exceptional) {
        MPoly p = substitute(h, {d.chart.X, d.chart.Y});
        return valuation(p, 0);
    }
    return divide_out(h, d.factor).second;
}

Classification classify(const ResolutionData& res) {
    Classification c;
    for (const auto& d : res.divisors) {
        switch (d.cls()) {
            case DivisorClass::Zero: c.zero.push_back(d.id); break;
            case DivisorClass::Pole: c.pole.push_back(d.id); break;
            case DivisorClass::Dicritical: c.dicritical.push_back(d.id); break;
        }
    }
    return c;
}

MPoly chart_jacobian(const Chart& chart) {
    return chart.X.derivative(0) * chart.Y.derivative(1) -
           chart.X.derivative(1) * chart.Y.derivative(0);
}

// ---- JSON ----

namespace {

using json = nlohmann::ordered_json;

const char* kind_name(DivisorKind k) {
    switch (k) {
        case DivisorKind::Exceptional: return "exceptional";
        case DivisorKind::StrictF: return "strict_f";
        default: return "strict_g";
    }
}

const char* class_name(DivisorClass c) {
    switch (c) {
        case DivisorClass::Zero: return "zero";
        case DivisorClass::Pole: return "pole";
        default: return "dicritical";
    }
}

}  // namespace

std::string resolution_to_json(const ResolutionData& res, int indent) {
    json j;
    j["schema_version"] = 1;
    j["germ"] = {{"f", res.germ.f.str()}, {"g", res.germ.g.str()},
                 {"vars", res.germ.vars}};
    j["divisors"] = json::array();
    for (const auto& d : res.divisors) {
        json jd;
        jd["id"] = d.id;
        jd["kind"] = kind_name(d.kind);
        jd["Nf"] = d.Nf;
        jd["Ng"] = d.Ng;
        jd["Nfg"] = d.Nfg();
        jd["k"] = d.k;
        jd["class"] = class_name(d.cls());
        if (d.kind == DivisorKind::Exceptional) {
            json chain = json::array();
            for (const auto& em : d.chart.chain)
                chain.push_back({em.chart, rat_str(em.c)});
            jd["chart"] = chain;
        } else {
            jd["factor"] = d.factor.str();
            jd["orbit"] = d.orbit;
        }
        j["divisors"].push_back(jd);
    }
    j["edges"] = json::array();
    for (const auto& [a, b] : res.edges) j["edges"].push_back({a, b});
    j["history"] = json::array();
    for (const auto& h : res.history) {
        j["history"].push_back({{"id", h.id},
                                {"parents", h.parents},
                                {"strict_f", h.strict_f},
                                {"strict_g", h.strict_g}});
    }
    j["blowups"] = res.blowups;
    j["blowup_cap"] = res.blowup_cap;
    return j.dump(indent) + "\n";
}

ResolutionData resolution_from_json(const std::string& text) {
    json j = json::parse(text);
    if (!j.contains("schema_version") || j["schema_version"].get<int>() != 1)
        throw std::runtime_error("resolution_from_json: unsupported schema version");
    ResolutionData res;
    std::vector<std::string> vars = j["germ"]["vars"].get<std::vector<std::string>>();
    res.germ.vars = vars;
    res.germ.f = parse_poly(j["germ"]["f"].get<std::string>(), vars);
    res.germ.g = parse_poly(j["germ"]["g"].get<std::string>(), vars);
    for (const auto& jd : j["divisors"]) {
        DivisorData d;
        d.id = jd["id"].get<int>();
        std::string kind = jd["kind"].get<std::string>();
        d.kind = kind == "exceptional"
                     ? DivisorKind::Exceptional
                     : (kind == "strict_f" ? DivisorKind::StrictF
                                           : DivisorKind::StrictG);
        d.Nf = jd["Nf"].get<long>();
        d.Ng = jd["Ng"].get<long>();
        d.k = jd["k"].get<long>();
        if (d.kind == DivisorKind::Exceptional) {
            PointModel m = base_model();
            for (const auto& je : jd["chart"]) {
                ElementaryMap em;
                em.chart = je[0].get<int>();
                em.c = parse_rat(je[1].get<std::string>());
                m = extend_model(m, em, 0, 0);
            }
            d.chart = chart_of_model(m);
        } else {
            d.factor = parse_poly(jd["factor"].get<std::string>(), kXY);
            d.orbit = jd["orbit"].get<int>();
        }
        res.divisors.push_back(std::move(d));
    }
    for (const auto& je : j["edges"])
        res.edges.push_back({je[0].get<int>(), je[1].get<int>()});
    res.meetings.assign(res.edges.size(), PointModel{});
    for (auto& m : res.meetings) m.known = false;
    for (const auto& jh : j["history"]) {
        HistoryEntry h;
        h.id = jh["id"].get<int>();
        h.parents = jh["parents"].get<std::vector<int>>();
        h.strict_f = jh["strict_f"].get<bool>();
        h.strict_g = jh["strict_g"].get<bool>();
        res.history.push_back(std::move(h));
    }
    res.blowups = j["blowups"].get<long>();
    res.blowup_cap = j["blowup_cap"].get<long>();
    return res;
}

}  // namespace mero
