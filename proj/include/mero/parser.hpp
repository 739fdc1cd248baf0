#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "mero/mpoly.hpp"
#include "mero/spoly.hpp"

namespace mero {

/// Syntax or semantic error in textual input, with the byte offset of the
/// offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, size_t offset)
        : std::runtime_error(std::move(msg)), offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

/// A reduced meromorphic germ f/g at the origin: f, g nonzero with no
/// common non-unit factor, g normalized monic.
struct MeromorphicGerm {
    std::vector<std::string> vars;
    MPoly f, g;

    bool is_constant() const { return f.is_constant() && g.is_constant(); }
    std::string str() const;
};

/// A differential operator in D[s], kept in normal order: polynomial
/// coefficients (in the germ variables and s) to the left of the
/// derivative monomials.
struct OperatorExpr {
    std::vector<std::string> vars;  // germ variables; coefficients also use "s"
    struct Term {
        MPoly coef;              // over vars + {"s"}
        std::vector<int> dexp;   // derivative multi-index over vars
    };
    std::vector<Term> terms;

    std::string str() const;
};

/// Grammar: integer and parenthesized rational literals, variables x, y
/// (or x1...xn), + - * ^, parentheses, and a single top-level "/" splitting
/// numerator from denominator (denominator defaults to 1).
MeromorphicGerm parse_germ(const std::string& text);

/// Same expression grammar plus tokens dx, dy (or d1...dn) and s; derivative
/// symbols must be written to the right of the coefficient within each term.
OperatorExpr parse_operator(const std::string& text,
                            const std::vector<std::string>& vars);

/// Polynomial over an explicit variable list (no germ split).
MPoly parse_poly(const std::string& text, const std::vector<std::string>& vars);

/// Univariate polynomial in s, e.g. "s^2 + (3/2)*s + 1".
SPoly parse_spoly(const std::string& text);

}  // namespace mero
