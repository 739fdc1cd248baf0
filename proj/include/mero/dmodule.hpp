#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mero/mpoly.hpp"
#include "mero/parser.hpp"
#include "mero/spoly.hpp"

namespace mero {

/// Shared immutable data for elements of the twisted module M^alpha_{f/g}[s]:
/// the germ and its lifts to the coefficient ring Q[vars, s].
struct GermContext {
    std::vector<std::string> vars;   // germ variables
    std::vector<std::string> svars;  // vars + {"s"}
    size_t s_index = 0;
    MPoly f, g;    // over vars
    MPoly fS, gS;  // over svars
    bool f_constant = false, g_constant = false;
};
using GermCtx = std::shared_ptr<const GermContext>;

GermCtx make_context(const MeromorphicGerm& germ);

/// h(s) / (f^a g^b) * f^s/g^(s+alpha). Canonical form cancels powers of f
/// and g dividing h against the denominator exponents; equality is decided
/// by cross-multiplication.
struct TwistedElement {
    GermCtx ctx;
    Rat alpha;
    MPoly h;  // over ctx->svars
    long a = 0;
    long b = 0;

    bool is_zero() const { return h.is_zero(); }
    std::string str() const;
};

TwistedElement make_element(GermCtx ctx, const Rat& alpha, MPoly h, long a = 0,
                            long b = 0);

bool equal_elements(const TwistedElement& e1, const TwistedElement& e2);
/// Numerator of the cross-multiplied difference e1 - e2 (zero iff equal).
MPoly difference_witness(const TwistedElement& e1, const TwistedElement& e2);
TwistedElement add_elements(const TwistedElement& e1, const TwistedElement& e2);

/// The module action of the partial derivative in the given germ variable.
TwistedElement apply_derivation(size_t var, const TwistedElement& e);
TwistedElement apply_operator(const OperatorExpr& op, const TwistedElement& e);

/// t: multiply by f and shift s -> s+1. dt: divide by f, shift s -> s-1 and
/// scale by -s, so that [dt, t] = 1 and -dt t acts as multiplication by s.
TwistedElement act_t(const TwistedElement& e);
TwistedElement act_dt(const TwistedElement& e);

/// The module isomorphism p(s) -> p(s-m) with f-exponent raised and
/// g-exponent lowered by m.
TwistedElement shift(const TwistedElement& e, long m);

/// Substitution s -> s0; the g^(-alpha) tag stays formal.
struct SpecializedElement {
    MPoly u;  // over germ vars
    long a = 0;
    long b = 0;
    Rat alpha;
};
SpecializedElement specialize(const TwistedElement& e, const Rat& s0);

enum class FunctionalEquationMode { Numerator, Quotient };

struct VerifyResult {
    bool ok = false;
    MPoly witness;  // zero iff ok
};

/// Checks delta(s) f F = b(s) F (numerator mode) or delta(s) (f/g) F = b(s) F
/// (quotient mode) exactly in M^alpha_{f/g}[s].
VerifyResult verify_functional_equation(const OperatorExpr& delta, const SPoly& b,
                                        const MeromorphicGerm& germ,
                                        const Rat& alpha,
                                        FunctionalEquationMode mode);

/// Specialization of a verified equation at s = -1: the divisibility shape
/// f * u = b(-1) * g^theta. lhs_zero reports whether the specialized left
/// side vanishes (forced when b(-1) = 0).
struct NegOneReport {
    Rat b_at_minus_one;
    bool lhs_zero = false;
    bool consistent = false;
};
NegOneReport neg_one_consequence(const OperatorExpr& delta, const SPoly& b,
                                 const MeromorphicGerm& germ, const Rat& alpha,
                                 FunctionalEquationMode mode);

/// Monomial germ x1^m1...xk^mk / x_{k+1}^... over variables x1..xn.
MeromorphicGerm monomial_germ(const std::vector<int>& num_exps,
                              const std::vector<int>& den_exps);

/// b(s) = prod_{i<=k} prod_{j<=m_i} (s + j/m_i); depends only on the
/// numerator exponents.
SPoly monomial_bs(const std::vector<int>& num_exps);
SPoly monomial_bs(const MeromorphicGerm& germ);

/// delta = prod m_i^{-m_i} d_i^{m_i} over the numerator variables; satisfies
/// the numerator functional equation with monomial_bs for every alpha.
OperatorExpr monomial_bs_operator(const MeromorphicGerm& germ);

}  // namespace mero
