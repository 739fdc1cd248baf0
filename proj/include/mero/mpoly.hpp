#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mero/rat.hpp"

namespace mero {

using ExpVec = std::vector<int>;

/// Graded-lexicographic order, descending, so that map::begin() is the
/// leading term. Ties in total degree break lexicographically on the first
/// variable.
struct GrlexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        int da = 0, db = 0;
        for (int e : a) da += e;
        for (int e : b) db += e;
        if (da != db) return da > db;
        for (size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] > b[i];
        return false;
    }
};

/// Sparse multivariate polynomial over Q. Invariant: no zero coefficients
/// stored; every exponent vector has length vars.size().
class MPoly {
public:
    using TermMap = std::map<ExpVec, Rat, GrlexGreater>;

    MPoly() = default;
    explicit MPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static MPoly constant(std::vector<std::string> vars, const Rat& c);
    static MPoly variable(std::vector<std::string> vars, size_t index);
    static MPoly monomial(std::vector<std::string> vars, ExpVec exps, const Rat& c);

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t nvars() const { return vars_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    Rat constant_value() const;  // constant term coefficient (0 if absent)

    /// Max total degree, -1 for the zero polynomial.
    int total_degree() const;
    /// Min total degree over terms = multiplicity at the origin; -1 for 0.
    int min_total_degree() const;
    int degree_in(size_t var) const;

    void add_term(const ExpVec& e, const Rat& c);

    MPoly operator-() const;
    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly scaled(const Rat& c) const;
    MPoly pow(int n) const;
    bool operator==(const MPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }
    bool operator!=(const MPoly& o) const { return !(*this == o); }

    MPoly derivative(size_t var) const;

    /// Homogeneous part of lowest total degree (the tangent cone at 0).
    MPoly lowest_form() const;

    std::string str() const;

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

// ---- algebra operations ----

/// Exact composition: every variable of p gets an image (all images over a
/// common variable list, which becomes the result's list).
MPoly substitute(const MPoly& p, const std::vector<MPoly>& images);

/// Same, but every product is truncated to exponents < cap in trunc_var
/// (of the image variable list). Terms at or above the cap are dropped.
MPoly substitute_trunc(const MPoly& p, const std::vector<MPoly>& images,
                       size_t trunc_var, int cap);

MPoly mul_trunc(const MPoly& a, const MPoly& b, size_t trunc_var, int cap);

/// Largest k with v^k | p. Throws on p = 0 (valuation is +infinity there).
int valuation(const MPoly& p, size_t var);

/// Quotient p / v^k where k = valuation(p, var).
MPoly strip_power(const MPoly& p, size_t var, int* val_out = nullptr);

/// Exact division; empty when q does not divide p.
std::optional<MPoly> divide_exact(const MPoly& p, const MPoly& q);

/// Maximal e with q^e | p, together with the cofactor p / q^e.
std::pair<MPoly, int> divide_out(const MPoly& p, const MPoly& q);

/// Monic (leading coefficient 1) gcd.
MPoly gcd(const MPoly& p, const MPoly& q);

MPoly squarefree_part(const MPoly& p);

/// Squarefree decomposition p = c * prod u_i^{m_i} with the u_i squarefree,
/// pairwise coprime, monic. Sorted by multiplicity then leading monomial.
std::vector<std::pair<MPoly, int>> squarefree_decomposition(const MPoly& p);

/// All rational roots with multiplicities of a univariate polynomial
/// (nonzero), plus the degree of the rootless residual factor.
struct RationalRoots {
    std::vector<std::pair<Rat, int>> roots;  // sorted ascending
    int residual_degree = 0;
    MPoly residual;  // monic rootless cofactor (constant 1 when fully split)
};
RationalRoots rational_roots(const MPoly& u, size_t var);

/// Evaluate at a rational point (one value per variable).
Rat eval(const MPoly& p, const std::vector<Rat>& point);

/// Coefficient of var^k, as a polynomial over the same variable list
/// (var-degree zero).
MPoly coeff_of_power(const MPoly& p, size_t var, int k);

/// Lift p to a larger variable list; old variables must map injectively.
MPoly lift(const MPoly& p, const std::vector<std::string>& new_vars);

}  // namespace mero
