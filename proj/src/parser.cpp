#include "mero/parser.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <sstream>

namespace mero {

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace((unsigned char)c)) { ++i; continue; }
        if (std::isdigit((unsigned char)c)) {
            size_t j = i;
            while (j < s.size() && std::isdigit((unsigned char)s[j])) ++j;
            out.push_back({Tok::Int, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (std::isalpha((unsigned char)c) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum((unsigned char)s[j]) || s[j] == '_'))
                ++j;
            out.push_back({Tok::Ident, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        Tok k;
        switch (c) {
            case '+': k = Tok::Plus; break;
            case '-': k = Tok::Minus; break;
            case '*': k = Tok::Star; break;
            case '^': k = Tok::Caret; break;
            case '/': k = Tok::Slash; break;
            case '(': k = Tok::LParen; break;
            case ')': k = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        out.push_back({k, std::string(1, c), i});
        ++i;
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

// Values during parsing: either a plain polynomial or an operator sum.
// Operators are only enabled in operator mode.
struct OpValue {
    std::vector<OperatorExpr::Term> terms;  // empty = zero operator
};

class Parser {
public:
    Parser(std::vector<Token> toks, std::vector<std::string> coef_vars,
           std::vector<std::string> dnames, bool operator_mode)
        : toks_(std::move(toks)),
          vars_(std::move(coef_vars)),
          dnames_(std::move(dnames)),
          op_mode_(operator_mode) {}

    OpValue parse_expr() {
        if (++depth_ > 128)
            throw ParseError("expression nested too deeply", peek().pos);
        struct Guard {
            int& d;
            ~Guard() { --d; }
        } guard{depth_};
        OpValue acc;
        bool negate = false;
        if (peek().kind == Tok::Plus) next();
        else if (peek().kind == Tok::Minus) { next(); negate = true; }
        acc = parse_term();
        if (negate) acc = scale(acc, Rat(-1));
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            bool minus = next().kind == Tok::Minus;
            OpValue t = parse_term();
            if (minus) t = scale(t, Rat(-1));
            append(acc, t);
        }
        return acc;
    }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw ParseError("unexpected trailing input", peek().pos);
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token next() { return toks_[pos_++]; }

    OpValue parse_term() {
        OpValue acc = parse_factor();
        while (peek().kind == Tok::Star) {
            next();
            OpValue f = parse_factor();
            acc = multiply(acc, f, peek().pos);
        }
        return acc;
    }

    OpValue parse_factor() {
        size_t at = peek().pos;
        OpValue base = parse_primary();
        if (peek().kind == Tok::Caret) {
            next();
            bool neg = false;
            if (peek().kind == Tok::Minus) { next(); neg = true; }
            if (peek().kind != Tok::Int)
                throw ParseError("exponent must be an integer", peek().pos);
            Token t = next();
            if (neg) throw ParseError("negative exponents are not supported", t.pos);
            long e = std::stol(t.text);
            if (e > 256) throw ParseError("exponent too large", t.pos);
            OpValue acc = from_rat(Rat(1));
            for (long k = 0; k < e; ++k) acc = multiply(acc, base, at);
            return acc;
        }
        return base;
    }

    OpValue parse_primary() {
        const Token& t = peek();
        switch (t.kind) {
            case Tok::Int: {
                Token a = next();
                Rat v(a.text);
                if (peek().kind == Tok::Slash) {
                    next();
                    if (peek().kind != Tok::Int)
                        throw ParseError("expected integer denominator", peek().pos);
                    Token b = next();
                    Rat d(b.text);
                    if (d == 0) throw ParseError("zero denominator in literal", b.pos);
                    v /= d;
                }
                return from_rat(v);
            }
            case Tok::Ident: {
                Token a = next();
                // derivative symbol?
                for (size_t i = 0; i < dnames_.size(); ++i) {
                    if (dnames_[i] == a.text) {
                        if (!op_mode_)
                            throw ParseError("derivative symbol '" + a.text +
                                                 "' not allowed here",
                                             a.pos);
                        OpValue v;
                        OperatorExpr::Term term;
                        term.coef = MPoly::constant(vars_, 1);
                        term.dexp.assign(dnames_.size(), 0);
                        term.dexp[i] = 1;
                        v.terms.push_back(std::move(term));
                        return v;
                    }
                }
                for (size_t i = 0; i < vars_.size(); ++i)
                    if (vars_[i] == a.text)
                        return from_poly(MPoly::variable(vars_, i));
                if (a.text.size() >= 2 && a.text[0] == 'd' && op_mode_)
                    throw ParseError("derivative symbol '" + a.text +
                                         "' does not match a declared variable",
                                     a.pos);
                throw ParseError("unknown identifier '" + a.text + "'", a.pos);
            }
            case Tok::LParen: {
                next();
                OpValue v = parse_expr();
                if (peek().kind != Tok::RParen)
                    throw ParseError("expected ')'", peek().pos);
                next();
                return v;
            }
            default:
                throw ParseError("expected a number, variable or '('", t.pos);
        }
    }

    OpValue from_rat(const Rat& c) { return from_poly(MPoly::constant(vars_, c)); }

    OpValue from_poly(MPoly p) {
        OpValue v;
        if (p.is_zero()) return v;
        OperatorExpr::Term t;
        t.coef = std::move(p);
        t.dexp.assign(dnames_.size(), 0);
        v.terms.push_back(std::move(t));
        return v;
    }

    static bool has_derivs(const OperatorExpr::Term& t) {
        return std::any_of(t.dexp.begin(), t.dexp.end(), [](int e) { return e > 0; });
    }

    bool coef_is_central(const MPoly& c) const {
        // constants and polynomials in s alone commute with every derivative
        for (const auto& [e, k] : c.terms())
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0 && vars_[i] != "s") return false;
        return true;
    }

    OpValue multiply(const OpValue& a, const OpValue& b, size_t at) {
        OpValue r;
        for (const auto& ta : a.terms) {
            for (const auto& tb : b.terms) {
                if (has_derivs(ta) && !coef_is_central(tb.coef))
                    throw ParseError(
                        "operators must be written with coefficients to the left "
                        "of derivative symbols",
                        at);
                OperatorExpr::Term t;
                t.coef = ta.coef * tb.coef;
                t.dexp.resize(ta.dexp.size());
                for (size_t i = 0; i < t.dexp.size(); ++i)
                    t.dexp[i] = ta.dexp[i] + tb.dexp[i];
                if (!t.coef.is_zero()) r.terms.push_back(std::move(t));
            }
        }
        return normalize(r);
    }

    OpValue scale(const OpValue& a, const Rat& c) {
        OpValue r;
        for (const auto& t : a.terms) {
            OperatorExpr::Term u{t.coef.scaled(c), t.dexp};
            if (!u.coef.is_zero()) r.terms.push_back(std::move(u));
        }
        return r;
    }

    void append(OpValue& acc, const OpValue& more) {
        for (const auto& t : more.terms) acc.terms.push_back(t);
        acc = normalize(acc);
    }

    OpValue normalize(const OpValue& v) {
        // merge terms with equal derivative multi-index
        OpValue r;
        for (const auto& t : v.terms) {
            bool merged = false;
            for (auto& u : r.terms) {
                if (u.dexp == t.dexp) {
                    u.coef += t.coef;
                    merged = true;
                    break;
                }
            }
            if (!merged) r.terms.push_back(t);
        }
        r.terms.erase(std::remove_if(r.terms.begin(), r.terms.end(),
                                     [](const OperatorExpr::Term& t) {
                                         return t.coef.is_zero();
                                     }),
                      r.terms.end());
        std::sort(r.terms.begin(), r.terms.end(),
                  [](const OperatorExpr::Term& a, const OperatorExpr::Term& b) {
                      return a.dexp > b.dexp;
                  });
        return r;
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
    int depth_ = 0;
    std::vector<std::string> vars_;
    std::vector<std::string> dnames_;
    bool op_mode_;
};

// Collect variable names from identifier tokens and decide the naming mode:
// plain x, y or indexed x1...xn. Unknown identifiers are reported later by
// the parser together with their position.
std::vector<std::string> infer_vars(const std::vector<Token>& toks) {
    std::set<std::string> names;
    for (const auto& t : toks)
        if (t.kind == Tok::Ident) names.insert(t.text);
    std::set<std::string> plain, indexed;
    for (const auto& base : names) {
        if (base == "x" || base == "y") {
            plain.insert(base);
        } else if (base.size() >= 2 && base[0] == 'x' &&
                   std::all_of(base.begin() + 1, base.end(), [](char c) {
                       return std::isdigit((unsigned char)c);
                   })) {
            indexed.insert(base);
        }
    }
    if (!plain.empty() && !indexed.empty())
        throw ParseError("cannot mix x,y with indexed variables x1...xn", 0);
    if (!indexed.empty()) {
        std::vector<std::string> vars(indexed.begin(), indexed.end());
        std::sort(vars.begin(), vars.end(), [](const std::string& a, const std::string& b) {
            return std::stol(a.substr(1)) < std::stol(b.substr(1));
        });
        return vars;
    }
    return {"x", "y"};
}

MPoly opvalue_to_poly(const OpValue& v, const std::vector<std::string>& vars) {
    MPoly p(vars);
    for (const auto& t : v.terms) p += t.coef;
    return p;
}

MPoly parse_poly_tokens(std::vector<Token> toks,
                        const std::vector<std::string>& vars) {
    Parser parser(std::move(toks), vars, {}, false);
    OpValue v = parser.parse_expr();
    parser.expect_end();
    return opvalue_to_poly(v, vars);
}

}  // namespace

MeromorphicGerm parse_germ(const std::string& text) {
    auto toks = tokenize(text);
    // split at the single top-level '/'
    int depth = 0;
    std::optional<size_t> split;
    for (size_t i = 0; i + 1 < toks.size(); ++i) {
        if (toks[i].kind == Tok::LParen) ++depth;
        else if (toks[i].kind == Tok::RParen) --depth;
        else if (toks[i].kind == Tok::Slash && depth == 0) {
            if (split)
                throw ParseError("more than one top-level '/' in germ", toks[i].pos);
            split = i;
        }
    }
    std::vector<std::string> vars = infer_vars(toks);
    std::vector<Token> num_toks, den_toks;
    if (split) {
        num_toks.assign(toks.begin(), toks.begin() + *split);
        num_toks.push_back({Tok::End, "", toks[*split].pos});
        den_toks.assign(toks.begin() + *split + 1, toks.end());
        if (den_toks.size() <= 1)
            throw ParseError("missing denominator after '/'", toks[*split].pos);
    } else {
        num_toks = toks;
    }
    MPoly f = parse_poly_tokens(num_toks, vars);
    MPoly g = split ? parse_poly_tokens(den_toks, vars)
                    : MPoly::constant(vars, 1);
    if (f.is_zero()) throw ParseError("zero numerator", 0);
    if (g.is_zero()) throw ParseError("zero denominator", split ? toks[*split].pos : 0);
    MPoly d = gcd(f, g);
    if (!d.is_constant()) {
        f = *divide_exact(f, d);
        g = *divide_exact(g, d);
    }
    // common unit normalization: make g monic
    Rat lc = g.terms().begin()->second;
    f = f.scaled(Rat(1) / lc);
    g = g.scaled(Rat(1) / lc);
    return MeromorphicGerm{std::move(vars), std::move(f), std::move(g)};
}

OperatorExpr parse_operator(const std::string& text,
                            const std::vector<std::string>& vars) {
    auto toks = tokenize(text);
    std::vector<std::string> coef_vars = vars;
    coef_vars.push_back("s");
    std::vector<std::string> dnames;
    for (const auto& v : vars) dnames.push_back("d" + (v == "x" || v == "y" ? v : v.substr(1)));
    // for indexed vars x3 the derivative symbol is d3
    Parser parser(toks, coef_vars, dnames, true);
    OpValue v = parser.parse_expr();
    parser.expect_end();
    OperatorExpr op;
    op.vars = vars;
    op.terms = std::move(v.terms);
    return op;
}

MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars) {
    return parse_poly_tokens(tokenize(text), vars);
}

SPoly parse_spoly(const std::string& text) {
    std::vector<std::string> vars = {"s"};
    MPoly p = parse_poly_tokens(tokenize(text), vars);
    return SPoly::from_mpoly(p, 0);
}

std::string MeromorphicGerm::str() const {
    if (g.is_one()) return f.str();
    std::string fs = f.terms().size() > 1 ? "(" + f.str() + ")" : f.str();
    std::string gs = g.terms().size() > 1 ? "(" + g.str() + ")" : g.str();
    return fs + "/" + gs;
}

std::string OperatorExpr::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream dm;
        bool any = false;
        for (size_t i = 0; i < t.dexp.size(); ++i) {
            if (t.dexp[i] == 0) continue;
            if (any) dm << "*";
            dm << "d" << (vars[i] == "x" || vars[i] == "y" ? vars[i] : vars[i].substr(1));
            if (t.dexp[i] > 1) dm << "^" << t.dexp[i];
            any = true;
        }
        if (!any) {
            out << (t.coef.terms().size() > 1 ? "(" + t.coef.str() + ")" : t.coef.str());
        } else if (t.coef.is_one()) {
            out << dm.str();
        } else {
            out << (t.coef.terms().size() > 1 ? "(" + t.coef.str() + ")" : t.coef.str())
                << "*" << dm.str();
        }
    }
    return out.str();
}

}  // namespace mero
