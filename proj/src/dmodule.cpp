#include "mero/dmodule.hpp"

#include <sstream>
#include <stdexcept>

namespace mero {

namespace {

MPoly s_var(const GermCtx& ctx) {
    return MPoly::variable(ctx->svars, ctx->s_index);
}

/// Substitute s -> s + delta, leaving the germ variables alone.
MPoly shift_s(const GermCtx& ctx, const MPoly& p, long delta) {
    std::vector<MPoly> images;
    for (size_t i = 0; i < ctx->svars.size(); ++i)
        images.push_back(MPoly::variable(ctx->svars, i));
    images[ctx->s_index] += MPoly::constant(ctx->svars, Rat(delta));
    return substitute(p, images);
}

void canonicalize(TwistedElement& e) {
    if (e.h.is_zero()) {
        e.a = e.b = 0;
        return;
    }
    const GermCtx& ctx = e.ctx;
    if (ctx->f_constant) {
        Rat c = ctx->f.constant_value();
        for (; e.a != 0; e.a > 0 ? --e.a : ++e.a)
            e.h = e.h.scaled(e.a > 0 ? Rat(1) / c : c);
    } else {
        while (e.a > 0) {
            auto q = divide_exact(e.h, ctx->fS);
            if (!q) break;
            e.h = *q;
            --e.a;
        }
    }
    if (ctx->g_constant) {
        Rat c = ctx->g.constant_value();
        for (; e.b != 0; e.b > 0 ? --e.b : ++e.b)
            e.h = e.h.scaled(e.b > 0 ? Rat(1) / c : c);
    } else {
        while (e.b > 0) {
            auto q = divide_exact(e.h, ctx->gS);
            if (!q) break;
            e.h = *q;
            --e.b;
        }
    }
}

void require_compatible(const TwistedElement& e1, const TwistedElement& e2) {
    if (e1.ctx->f != e2.ctx->f || e1.ctx->g != e2.ctx->g || e1.alpha != e2.alpha)
        throw std::invalid_argument(
            "twisted elements live in different modules (germ or alpha differ)");
}

}  // namespace

GermCtx make_context(const MeromorphicGerm& germ) {
    auto ctx = std::make_shared<GermContext>();
    ctx->vars = germ.vars;
    ctx->svars = germ.vars;
    ctx->svars.push_back("s");
    ctx->s_index = germ.vars.size();
    ctx->f = germ.f;
    ctx->g = germ.g;
    ctx->fS = lift(germ.f, ctx->svars);
    ctx->gS = lift(germ.g, ctx->svars);
    ctx->f_constant = germ.f.is_constant();
    ctx->g_constant = germ.g.is_constant();
    return ctx;
}

TwistedElement make_element(GermCtx ctx, const Rat& alpha, MPoly h, long a, long b) {
    if (a < 0 || b < 0)
        throw std::invalid_argument("make_element: negative denominator exponent");
    TwistedElement e{std::move(ctx), alpha, std::move(h), a, b};
    canonicalize(e);
    return e;
}

bool equal_elements(const TwistedElement& e1, const TwistedElement& e2) {
    return difference_witness(e1, e2).is_zero();
}

MPoly difference_witness(const TwistedElement& e1, const TwistedElement& e2) {
    require_compatible(e1, e2);
    const GermCtx& ctx = e1.ctx;
    long A = std::max(e1.a, e2.a), B = std::max(e1.b, e2.b);
    MPoly lhs = e1.h * ctx->fS.pow((int)(A - e1.a)) * ctx->gS.pow((int)(B - e1.b));
    MPoly rhs = e2.h * ctx->fS.pow((int)(A - e2.a)) * ctx->gS.pow((int)(B - e2.b));
    return lhs - rhs;
}

TwistedElement add_elements(const TwistedElement& e1, const TwistedElement& e2) {
    require_compatible(e1, e2);
    const GermCtx& ctx = e1.ctx;
    long A = std::max(e1.a, e2.a), B = std::max(e1.b, e2.b);
    MPoly h = e1.h * ctx->fS.pow((int)(A - e1.a)) * ctx->gS.pow((int)(B - e1.b)) +
              e2.h * ctx->fS.pow((int)(A - e2.a)) * ctx->gS.pow((int)(B - e2.b));
    return make_element(ctx, e1.alpha, std::move(h), A, B);
}

TwistedElement apply_derivation(size_t var, const TwistedElement& e) {
    const GermCtx& ctx = e.ctx;
    if (var >= ctx->vars.size())
        throw std::invalid_argument("apply_derivation: variable index out of range");
    const MPoly& f = ctx->fS;
    const MPoly& g = ctx->gS;
    MPoly dh = e.h.derivative(var);
    MPoly df = f.derivative(var);
    MPoly dg = g.derivative(var);
    MPoly s = s_var(ctx);
    MPoly s_alpha = s + MPoly::constant(ctx->svars, e.alpha);
    MPoly num = dh * f * g;
    if (e.a != 0) num -= (e.h * df * g).scaled(Rat(e.a));
    if (e.b != 0) num -= (e.h * f * dg).scaled(Rat(e.b));
    num += s * df * e.h * g;
    num -= s_alpha * e.h * dg * f;
    return make_element(ctx, e.alpha, std::move(num), e.a + 1, e.b + 1);
}

TwistedElement apply_operator(const OperatorExpr& op, const TwistedElement& e) {
    const GermCtx& ctx = e.ctx;
    if (op.vars != ctx->vars)
        throw std::invalid_argument("apply_operator: operator/germ variable mismatch");
    TwistedElement acc = make_element(ctx, e.alpha, MPoly(ctx->svars), 0, 0);
    for (const auto& term : op.terms) {
        TwistedElement cur = e;
        for (size_t i = 0; i < term.dexp.size(); ++i)
            for (int k = 0; k < term.dexp[i]; ++k) cur = apply_derivation(i, cur);
        cur.h = cur.h * term.coef;
        canonicalize(cur);
        acc = add_elements(acc, cur);
    }
    return acc;
}

TwistedElement act_t(const TwistedElement& e) {
    MPoly h = shift_s(e.ctx, e.h, +1) * e.ctx->fS;
    return make_element(e.ctx, e.alpha, std::move(h), e.a, e.b);
}

TwistedElement act_dt(const TwistedElement& e) {
    MPoly h = -(s_var(e.ctx) * shift_s(e.ctx, e.h, -1));
    return make_element(e.ctx, e.alpha, std::move(h), e.a + 1, e.b);
}

TwistedElement shift(const TwistedElement& e, long m) {
    TwistedElement r = e;
    r.h = shift_s(e.ctx, e.h, -m);
    r.a = e.a + m;
    r.b = e.b - m;
    if (r.a < 0) {
        r.h = r.h * e.ctx->fS.pow((int)(-r.a));
        r.a = 0;
    }
    if (r.b < 0) {
        r.h = r.h * e.ctx->gS.pow((int)(-r.b));
        r.b = 0;
    }
    canonicalize(r);
    return r;
}

SpecializedElement specialize(const TwistedElement& e, const Rat& s0) {
    const GermCtx& ctx = e.ctx;
    std::vector<MPoly> images;
    for (size_t i = 0; i < ctx->vars.size(); ++i)
        images.push_back(MPoly::variable(ctx->svars, i));
    images.push_back(MPoly::constant(ctx->svars, s0));
    MPoly sub = substitute(e.h, images);
    // drop the (now unused) s variable
    MPoly u{std::vector<std::string>(ctx->vars)};
    for (const auto& [exp, c] : sub.terms()) {
        ExpVec d(exp.begin(), exp.end() - 1);
        u.add_term(d, c);
    }
    return SpecializedElement{std::move(u), e.a, e.b, e.alpha};
}

VerifyResult verify_functional_equation(const OperatorExpr& delta, const SPoly& b,
                                        const MeromorphicGerm& germ,
                                        const Rat& alpha,
                                        FunctionalEquationMode mode) {
    GermCtx ctx = make_context(germ);
    long bexp = mode == FunctionalEquationMode::Quotient ? 1 : 0;
    TwistedElement lhs0 = make_element(ctx, alpha, ctx->fS, 0, bexp);
    TwistedElement lhs = apply_operator(delta, lhs0);
    TwistedElement rhs =
        make_element(ctx, alpha, b.to_mpoly(ctx->svars, ctx->s_index), 0, 0);
    VerifyResult r;
    r.witness = difference_witness(lhs, rhs);
    r.ok = r.witness.is_zero();
    return r;
}

NegOneReport neg_one_consequence(const OperatorExpr& delta, const SPoly& b,
                                 const MeromorphicGerm& germ, const Rat& alpha,
                                 FunctionalEquationMode mode) {
    GermCtx ctx = make_context(germ);
    long bexp = mode == FunctionalEquationMode::Quotient ? 1 : 0;
    TwistedElement lhs = apply_operator(
        delta, make_element(ctx, alpha, ctx->fS, 0, bexp));
    SpecializedElement ls = specialize(lhs, Rat(-1));
    NegOneReport rep;
    rep.b_at_minus_one = b.eval(Rat(-1));
    rep.lhs_zero = ls.u.is_zero();
    // cross-multiplied form of  u * g / f^(a+1) g^b  =  b(-1) * g / f
    MPoly left = ls.u * germ.f;
    MPoly right = germ.f.pow((int)ls.a + 1) * germ.g.pow((int)ls.b)
                      .scaled(rep.b_at_minus_one);
    rep.consistent = (left - right).is_zero();
    return rep;
}

MeromorphicGerm monomial_germ(const std::vector<int>& num_exps,
                              const std::vector<int>& den_exps) {
    size_t n = num_exps.size() + den_exps.size();
    if (n == 0) throw std::invalid_argument("monomial_germ: no variables");
    std::vector<std::string> vars;
    for (size_t i = 1; i <= n; ++i) vars.push_back("x" + std::to_string(i));
    ExpVec fe(n, 0), ge(n, 0);
    for (size_t i = 0; i < num_exps.size(); ++i) {
        if (num_exps[i] < 1) throw std::invalid_argument("monomial_germ: exponents must be positive");
        fe[i] = num_exps[i];
    }
    for (size_t i = 0; i < den_exps.size(); ++i) {
        if (den_exps[i] < 1) throw std::invalid_argument("monomial_germ: exponents must be positive");
        ge[num_exps.size() + i] = den_exps[i];
    }
    MeromorphicGerm germ;
    germ.vars = vars;
    germ.f = MPoly::monomial(vars, fe, Rat(1));
    germ.g = MPoly::monomial(vars, ge, Rat(1));
    return germ;
}

SPoly monomial_bs(const std::vector<int>& num_exps) {
    SPoly b = SPoly::constant(Rat(1));
    for (int m : num_exps) {
        for (int j = 1; j <= m; ++j) b = b * SPoly::linear(make_rat(j, m));
    }
    return b;
}

namespace {

/// Exponents of the (monomial) numerator and denominator per germ variable.
std::pair<std::vector<int>, std::vector<int>> monomial_exponents(
    const MeromorphicGerm& germ) {
    if (germ.f.terms().size() != 1 || germ.g.terms().size() != 1)
        throw std::invalid_argument("germ is not monomial");
    ExpVec fe = germ.f.terms().begin()->first;
    ExpVec ge = germ.g.terms().begin()->first;
    for (size_t i = 0; i < fe.size(); ++i)
        if (fe[i] > 0 && ge[i] > 0)
            throw std::invalid_argument(
                "monomial germ must have disjoint numerator and denominator variables");
    return {std::vector<int>(fe.begin(), fe.end()),
            std::vector<int>(ge.begin(), ge.end())};
}

}  // namespace

SPoly monomial_bs(const MeromorphicGerm& germ) {
    auto [fe, ge] = monomial_exponents(germ);
    std::vector<int> nums;
    for (int m : fe)
        if (m > 0) nums.push_back(m);
    return monomial_bs(nums);
}

OperatorExpr monomial_bs_operator(const MeromorphicGerm& germ) {
    auto [fe, ge] = monomial_exponents(germ);
    OperatorExpr op;
    op.vars = germ.vars;
    std::vector<std::string> svars = germ.vars;
    svars.push_back("s");
    Rat coef = 1;
    std::vector<int> dexp(germ.vars.size(), 0);
    for (size_t i = 0; i < fe.size(); ++i) {
        if (fe[i] <= 0) continue;
        dexp[i] = fe[i];
        Rat mi((long)fe[i]);
        for (int j = 0; j < fe[i]; ++j) coef /= mi;
    }
    op.terms.push_back({MPoly::constant(svars, coef), dexp});
    return op;
}

std::string TwistedElement::str() const {
    std::ostringstream out;
    out << "(" << h.str() << ")";
    if (a > 0 || b > 0) {
        out << "/(";
        bool any = false;
        if (a > 0) {
            out << "(" << ctx->f.str() << ")";
            if (a > 1) out << "^" << a;
            any = true;
        }
        if (b > 0) {
            if (any) out << "*";
            out << "(" << ctx->g.str() << ")";
            if (b > 1) out << "^" << b;
        }
        out << ")";
    }
    out << " * (" << ctx->f.str() << ")^s";
    if (!ctx->g.is_one())
        out << "/(" << ctx->g.str() << ")^(s+" << rat_str(alpha) << ")";
    return out.str();
}

}  // namespace mero
