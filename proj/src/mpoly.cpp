#include "mero/mpoly.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace mero {

MPoly MPoly::constant(std::vector<std::string> vars, const Rat& c) {
    MPoly p(std::move(vars));
    if (c != 0) p.terms_[ExpVec(p.vars_.size(), 0)] = c;
    return p;
}

MPoly MPoly::variable(std::vector<std::string> vars, size_t index) {
    MPoly p(std::move(vars));
    ExpVec e(p.vars_.size(), 0);
    e.at(index) = 1;
    p.terms_[e] = 1;
    return p;
}

MPoly MPoly::monomial(std::vector<std::string> vars, ExpVec exps, const Rat& c) {
    MPoly p(std::move(vars));
    if (c != 0) {
        assert(exps.size() == p.vars_.size());
        p.terms_[std::move(exps)] = c;
    }
    return p;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const ExpVec& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

bool MPoly::is_one() const { return is_constant() && constant_value() == 1; }

Rat MPoly::constant_value() const {
    ExpVec zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rat(0) : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // leading term of grlex-descending map has maximal total degree
    const ExpVec& e = terms_.begin()->first;
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int MPoly::min_total_degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& e = terms_.rbegin()->first;
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int MPoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

void MPoly::add_term(const ExpVec& e, const Rat& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    r += o;
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    r -= o;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    assert(vars_ == o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    assert(vars_ == o.vars_);
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MPoly MPoly::operator*(const MPoly& o) const {
    assert(vars_ == o.vars_);
    MPoly r(vars_);
    ExpVec e(vars_.size());
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rat& c) const {
    MPoly r(vars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

MPoly MPoly::pow(int n) const {
    assert(n >= 0);
    MPoly r = MPoly::constant(vars_, 1);
    MPoly base = *this;
    while (n) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n) base = base * base;
    }
    return r;
}

MPoly MPoly::derivative(size_t var) const {
    MPoly r(vars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        ExpVec d = e;
        d[var] -= 1;
        r.add_term(d, c * e[var]);
    }
    return r;
}

MPoly MPoly::lowest_form() const {
    MPoly r(vars_);
    int m = min_total_degree();
    if (m < 0) return r;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int x : e) d += x;
        if (d == m) r.terms_[e] = c;
    }
    return r;
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rat a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool any_var = false;
        std::ostringstream mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (any_var) mono << "*";
            mono << vars_[i];
            if (e[i] > 1) mono << "^" << e[i];
            any_var = true;
        }
        if (!any_var) {
            if (a.get_den() == 1) out << a.get_num().get_str();
            else out << "(" << rat_str(a) << ")";
        } else {
            if (a != 1) {
                if (a.get_den() == 1) out << a.get_num().get_str() << "*";
                else out << "(" << rat_str(a) << ")*";
            }
            out << mono.str();
        }
    }
    return out.str();
}

// ---- substitution ----

MPoly substitute(const MPoly& p, const std::vector<MPoly>& images) {
    if (images.size() != p.nvars())
        throw std::invalid_argument("substitute: image count mismatch");
    std::vector<std::string> tvars =
        images.empty() ? p.vars() : images[0].vars();
    // power cache per variable
    std::vector<std::vector<MPoly>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(MPoly::constant(tvars, 1));
    auto power = [&](size_t i, int k) -> const MPoly& {
        while ((int)powers[i].size() <= k)
            powers[i].push_back(powers[i].back() * images[i]);
        return powers[i][k];
    };
    MPoly r(tvars);
    for (const auto& [e, c] : p.terms()) {
        MPoly t = MPoly::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * power(i, e[i]);
        r += t;
    }
    return r;
}

MPoly mul_trunc(const MPoly& a, const MPoly& b, size_t trunc_var, int cap) {
    assert(a.vars() == b.vars());
    MPoly r(a.vars());
    ExpVec e(a.vars().size());
    for (const auto& [ea, ca] : a.terms()) {
        if (ea[trunc_var] >= cap) continue;
        for (const auto& [eb, cb] : b.terms()) {
            if (ea[trunc_var] + eb[trunc_var] >= cap) continue;
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

MPoly substitute_trunc(const MPoly& p, const std::vector<MPoly>& images,
                       size_t trunc_var, int cap) {
    if (images.size() != p.nvars())
        throw std::invalid_argument("substitute_trunc: image count mismatch");
    std::vector<std::string> tvars =
        images.empty() ? p.vars() : images[0].vars();
    std::vector<std::vector<MPoly>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i)
        powers[i].push_back(MPoly::constant(tvars, 1));
    auto power = [&](size_t i, int k) -> const MPoly& {
        while ((int)powers[i].size() <= k)
            powers[i].push_back(
                mul_trunc(powers[i].back(), images[i], trunc_var, cap));
        return powers[i][k];
    };
    MPoly r(tvars);
    for (const auto& [e, c] : p.terms()) {
        MPoly t = MPoly::constant(tvars, c);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = mul_trunc(t, power(i, e[i]), trunc_var, cap);
        r += t;
    }
    return r;
}

// ---- valuations and division ----

int valuation(const MPoly& p, size_t var) {
    if (p.is_zero())
        throw std::domain_error("valuation: zero polynomial (valuation is infinite)");
    int v = -1;
    for (const auto& [e, c] : p.terms()) {
        v = (v < 0) ? e[var] : std::min(v, e[var]);
        if (v == 0) break;
    }
    return v;
}

MPoly strip_power(const MPoly& p, size_t var, int* val_out) {
    int v = valuation(p, var);
    if (val_out) *val_out = v;
    if (v == 0) return p;
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        ExpVec d = e;
        d[var] -= v;
        r.add_term(d, c);
    }
    return r;
}

std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q) {
    if (q.is_zero()) throw std::domain_error("divide_exact: division by zero");
    if (p.is_zero()) return MPoly(p.vars());
    assert(p.vars() == q.vars());
    const auto& qlead = *q.terms().begin();
    MPoly rem = p;
    MPoly quot(p.vars());
    ExpVec d(p.nvars());
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().begin();
        bool divisible = true;
        for (size_t i = 0; i < d.size(); ++i) {
            d[i] = rlead.first[i] - qlead.first[i];
            if (d[i] < 0) { divisible = false; break; }
        }
        if (!divisible) return std::nullopt;
        Rat c = rlead.second / qlead.second;
        MPoly t = MPoly::monomial(p.vars(), d, c);
        quot += t;
        rem -= t * q;
    }
    return quot;
}

std::pair<MPoly, int> divide_out(const MPoly& p, const MPoly& q) {
    if (p.is_zero() || q.is_zero())
        throw std::domain_error("divide_out: zero argument");
    if (q.is_constant()) return {p.scaled(1), 0};
    MPoly cur = p;
    int e = 0;
    while (true) {
        auto quot = divide_exact(cur, q);
        if (!quot) break;
        cur = *quot;
        ++e;
    }
    return {cur, e};
}

// ---- gcd ----

namespace {

Rat leading_coeff(const MPoly& p) { return p.terms().begin()->second; }

MPoly make_monic(const MPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(Rat(1) / leading_coeff(p));
}

// p as polynomial in `var` with MPoly coefficients (var-degree removed).
std::vector<MPoly> coeffs_in(const MPoly& p, size_t var) {
    std::vector<MPoly> cs(p.degree_in(var) + 1, MPoly(p.vars()));
    for (const auto& [e, c] : p.terms()) {
        ExpVec d = e;
        int k = d[var];
        d[var] = 0;
        cs[k].add_term(d, c);
    }
    return cs;
}

MPoly from_coeffs(const std::vector<MPoly>& cs, size_t var,
                  const std::vector<std::string>& vars) {
    MPoly r(vars);
    for (size_t k = 0; k < cs.size(); ++k) {
        for (const auto& [e, c] : cs[k].terms()) {
            ExpVec d = e;
            d[var] += (int)k;
            r.add_term(d, c);
        }
    }
    return r;
}

// pseudo-remainder of a by b in variable var (deg_var a >= deg_var b > 0)
MPoly pseudo_rem(MPoly a, const MPoly& b, size_t var) {
    int db = b.degree_in(var);
    auto bc = coeffs_in(b, var);
    const MPoly& blead = bc[db];
    while (!a.is_zero()) {
        int da = a.degree_in(var);
        if (da < db) break;
        auto ac = coeffs_in(a, var);
        MPoly alead = ac[da];
        // a <- blead * a - alead * v^(da-db) * b
        MPoly shift_b(a.vars());
        for (const auto& [e, c] : b.terms()) {
            ExpVec d = e;
            d[var] += da - db;
            shift_b.add_term(d, c);
        }
        a = a * blead - shift_b * alead;
    }
    return a;
}

MPoly content_in(const MPoly& p, size_t var);

MPoly gcd_impl(MPoly p, MPoly q) {
    if (p.is_zero()) return make_monic(q);
    if (q.is_zero()) return make_monic(p);
    if (p.is_constant() || q.is_constant())
        return MPoly::constant(p.vars(), 1);
    // main variable: first one occurring in either
    size_t var = 0;
    bool found = false;
    for (size_t i = 0; i < p.nvars() && !found; ++i)
        if (p.degree_in(i) > 0 || q.degree_in(i) > 0) { var = i; found = true; }
    MPoly cp = content_in(p, var);
    MPoly cq = content_in(q, var);
    MPoly pp = *divide_exact(p, cp);
    MPoly qq = *divide_exact(q, cq);
    MPoly cont_gcd = gcd_impl(cp, cq);
    // primitive PRS on pp, qq in var
    if (pp.degree_in(var) < qq.degree_in(var)) std::swap(pp, qq);
    while (!qq.is_zero() && qq.degree_in(var) > 0) {
        MPoly r = pseudo_rem(pp, qq, var);
        if (!r.is_zero()) r = *divide_exact(r, content_in(r, var));
        pp = qq;
        qq = r;
    }
    MPoly prim = qq.is_zero() ? pp : MPoly::constant(p.vars(), 1);
    return make_monic(cont_gcd * prim);
}

MPoly content_in(const MPoly& p, size_t var) {
    auto cs = coeffs_in(p, var);
    MPoly g(p.vars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_impl(g, c);
        if (g.is_one()) break;
    }
    return g.is_zero() ? MPoly::constant(p.vars(), 1) : g;
}

}  // namespace

MPoly gcd(const MPoly& p, const MPoly& q) {
    if (p.is_zero() && q.is_zero())
        throw std::domain_error("gcd: both arguments zero");
    assert(p.vars() == q.vars() || p.is_zero() || q.is_zero());
    return gcd_impl(p, q);
}

MPoly squarefree_part(const MPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (p.is_constant()) return MPoly::constant(p.vars(), 1);
    MPoly g(p.vars());
    for (size_t i = 0; i < p.nvars(); ++i) {
        MPoly d = p.derivative(i);
        if (d.is_zero()) continue;
        g = g.is_zero() ? gcd(p, d) : gcd(g, d);
        if (g.is_one()) break;
    }
    if (g.is_zero() || g.is_constant()) return make_monic(p);
    return make_monic(*divide_exact(p, g));
}

std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p) {
    if (p.is_zero()) throw std::domain_error("squarefree_decomposition: zero");
    std::vector<std::pair<MPoly, int>> out;
    if (p.is_constant()) return out;
    MPoly s = squarefree_part(p);
    // p / s = c * prod u_i^{m_i - 1}; recurse
    auto sub = squarefree_decomposition(*divide_exact(p, s));
    MPoly once = s;
    for (auto& [u, m] : sub) {
        out.emplace_back(u, m + 1);
        once = *divide_exact(once, u);
    }
    if (!once.is_constant()) out.emplace_back(make_monic(once), 1);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return GrlexGreater{}(b.first.terms().begin()->first,
                              a.first.terms().begin()->first);
    });
    return out;
}

// ---- rational roots ----

namespace {

Int pollard_rho(const Int& n) {
    // n composite, odd, not a prime power guard needed; Brent's variant
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, d = 1;
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            Int diff = x > y ? Int(x - y) : Int(y - x);
            if (diff == 0) break;  // cycle without factor; retry with new c
            mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        }
        if (d != 1 && d != n) return d;
    }
}

void factor_into(const Int& n_in, std::map<Int, int>& out) {
    Int n = n_in;
    if (n <= 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        out[n] += 1;
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(Int(n / d), out);
}

std::vector<Int> divisors_of(const Int& n_in) {
    Int n = abs(n_in);
    std::map<Int, int> factors;
    Int d = 2;
    Int cur = n;
    while (d * d <= cur && d < 100000) {
        while (cur % d == 0) {
            cur /= d;
            factors[d] += 1;
        }
        d += (d == 2) ? 1 : 2;
    }
    factor_into(cur, factors);
    std::vector<Int> divs = {Int(1)};
    for (const auto& [p, m] : factors) {
        size_t base = divs.size();
        Int pk = 1;
        for (int k = 1; k <= m; ++k) {
            pk *= p;
            for (size_t j = 0; j < base; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

}  // namespace

RationalRoots rational_roots(const MPoly& u, size_t var) {
    if (u.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    for (size_t i = 0; i < u.nvars(); ++i)
        if (i != var && u.degree_in(i) > 0)
            throw std::invalid_argument("rational_roots: polynomial is not univariate");
    RationalRoots out;
    // integer coefficient vector, lowest power first
    int deg = u.degree_in(var);
    std::vector<Rat> cs(deg + 1, Rat(0));
    for (const auto& [e, c] : u.terms()) cs[e[var]] = c;
    Int den_lcm = 1;
    for (const auto& c : cs) {
        Int l;
        mpz_lcm(l.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
        den_lcm = l;
    }
    std::vector<Int> ic(deg + 1);
    for (int i = 0; i <= deg; ++i) {
        Rat scaled = cs[i] * den_lcm;
        ic[i] = scaled.get_num();
    }
    // root at zero
    int val = 0;
    while (val <= deg && ic[val] == 0) ++val;
    if (val > 0) {
        out.roots.emplace_back(Rat(0), val);
        ic.erase(ic.begin(), ic.begin() + val);
        deg -= val;
    }
    auto eval_int = [&](const std::vector<Int>& co, const Rat& r) {
        // co(p/q) * q^deg, exact integer
        Int p = r.get_num(), q = r.get_den();
        Int acc = 0, qpow = 1;
        std::vector<Int> ppow(co.size());
        Int pp = 1;
        for (size_t i = 0; i < co.size(); ++i) {
            ppow[i] = pp;
            pp *= p;
        }
        for (size_t i = co.size(); i-- > 0;) {
            acc += co[i] * ppow[i] * qpow;
            qpow *= q;
        }
        return acc;
    };
    auto deflate = [&](std::vector<Int>& co, const Rat& r) {
        // synthetic division by (t - r), then clear denominators
        int n = (int)co.size() - 1;
        std::vector<Rat> rq(n);
        Rat acc = Rat(co[n]);
        for (int i = n - 1; i >= 0; --i) {
            rq[i] = acc;
            acc = Rat(co[i]) + acc * r;
        }
        Int lcm = 1;
        for (auto& c : rq) {
            Int l;
            mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
            lcm = l;
        }
        co.resize(n);
        for (int i = 0; i < n; ++i) co[i] = Rat(rq[i] * lcm).get_num();
    };
    if (deg > 0) {
        std::vector<Int> tails = divisors_of(ic[0]);
        std::vector<Int> heads = divisors_of(ic[deg]);
        std::vector<Rat> candidates;
        for (const Int& p : tails)
            for (const Int& q : heads) {
                Rat r = make_rat(p, q);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()),
                         candidates.end());
        for (const Rat& r : candidates) {
            if ((int)ic.size() - 1 <= 0) break;
            if (ic[0] == 0) continue;  // kept zero-free above
            int mult = 0;
            while ((int)ic.size() - 1 > 0 && eval_int(ic, r) == 0) {
                deflate(ic, r);
                ++mult;
            }
            if (mult > 0) out.roots.emplace_back(r, mult);
        }
    }
    std::sort(out.roots.begin(), out.roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    out.residual_degree = (int)ic.size() - 1;
    MPoly res(u.vars());
    for (size_t i = 0; i < ic.size(); ++i) {
        if (ic[i] == 0) continue;
        ExpVec e(u.nvars(), 0);
        e[var] = (int)i;
        res.add_term(e, Rat(ic[i]));
    }
    out.residual = res.is_zero() ? MPoly::constant(u.vars(), 1) : make_monic(res);
    return out;
}

Rat eval(const MPoly& p, const std::vector<Rat>& point) {
    if (point.size() != p.nvars())
        throw std::invalid_argument("eval: point dimension mismatch");
    Rat acc = 0;
    for (const auto& [e, c] : p.terms()) {
        Rat t = c;
        for (size_t i = 0; i < e.size(); ++i)
            for (int k = 0; k < e[i]; ++k) t *= point[i];
        acc += t;
    }
    return acc;
}

MPoly coeff_of_power(const MPoly& p, size_t var, int k) {
    MPoly r(p.vars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] != k) continue;
        ExpVec d = e;
        d[var] = 0;
        r.add_term(d, c);
    }
    return r;
}

MPoly lift(const MPoly& p, const std::vector<std::string>& new_vars) {
    std::vector<int> where(p.nvars(), -1);
    for (size_t i = 0; i < p.nvars(); ++i) {
        for (size_t j = 0; j < new_vars.size(); ++j)
            if (new_vars[j] == p.vars()[i]) { where[i] = (int)j; break; }
        if (where[i] < 0 && p.degree_in(i) > 0)
            throw std::invalid_argument("lift: variable " + p.vars()[i] +
                                        " missing from target list");
    }
    MPoly r{std::vector<std::string>(new_vars)};
    for (const auto& [e, c] : p.terms()) {
        ExpVec d(new_vars.size(), 0);
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) d[where[i]] = e[i];
        r.add_term(d, c);
    }
    return r;
}

}  // namespace mero
