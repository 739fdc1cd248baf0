#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mero/invariants.hpp"
#include "mero/mpoly.hpp"
#include "mero/rat.hpp"
#include "mero/resolution.hpp"

namespace mero {

/// Reduced row basis of a subspace of polynomials of bounded degree, under
/// graded-lexicographic order. Rows are monic with pairwise distinct leading
/// monomials and fully reduced against each other, so two staircases are
/// equal iff they describe the same subspace.
class PolyStaircase {
public:
    void insert(MPoly v);
    MPoly reduce(MPoly v) const;
    bool contains(const MPoly& v) const;
    size_t dimension() const { return rows_.size(); }
    const std::map<ExpVec, MPoly, GrlexGreater>& rows() const { return rows_; }
    std::vector<MPoly> row_list() const;
    bool operator==(const PolyStaircase& o) const;
    /// Rows whose leading monomial has total degree <= d.
    PolyStaircase truncated(int d) const;

private:
    std::map<ExpVec, MPoly, GrlexGreater> rows_;  // leading exponent -> row
};

/// Per-divisor lower bound [lambda N_{f/g,i}] - k_i, kept only when positive.
struct Constraint {
    int divisor_id = 0;
    long bound = 0;
};

std::vector<Constraint> constraint_vector(const ResolutionData& res, const Rat& lambda);
/// Mixed bounds [l1 N_f + l2 N_g] - k over all divisors.
std::vector<Constraint> mixed_constraint_vector(const ResolutionData& res,
                                                const Rat& l1, const Rat& l2);

struct IdealBasis {
    int truncation = 0;
    PolyStaircase staircase;
    std::vector<MPoly> generators;  // corner candidates, redundancy removed
    bool minimal_up_to_truncation = true;
    /// False when the degree-(D-2) staircase differs between truncations
    /// D and D+2 (StabilityWarning).
    bool stable = true;
};

/// Degree heuristic: 2 + max_i ceil(c_i / min positive coordinate order),
/// at least deg(f) * ceil(lambda).
int default_truncation(const ResolutionData& res, const Rat& lambda);

IdealBasis multiplier_ideal(const ResolutionData& res, const Rat& lambda,
                            std::optional<int> truncation = std::nullopt);
IdealBasis mixed_multiplier_ideal(const ResolutionData& res, const Rat& l1,
                                  const Rat& l2,
                                  std::optional<int> truncation = std::nullopt);

/// Untruncated valuative membership test (direct ord_along oracle; does not
/// touch the linear algebra).
bool membership(const ResolutionData& res, const MPoly& h, const Rat& lambda);

struct JumpingPoint {
    Rat lambda;
    IdealBasis ideal;
};
std::vector<JumpingPoint> jumping_numbers(const ResolutionData& res,
                                          const Rat& lambda_max,
                                          std::optional<int> truncation = std::nullopt);

/// J((f/g)^n) = (f^n), at the given truncation.
bool check_integer_power(const ResolutionData& res, long n,
                         std::optional<int> truncation = std::nullopt);

/// J((f/g)^(lambda+ell)) = (f^ell/g^ell J((f/g)^lambda)) cap R, at truncation.
bool check_skoda(const ResolutionData& res, const Rat& lambda, long ell,
                 std::optional<int> truncation = std::nullopt);

/// J(f^lambda g^(t-lambda)) : g^t = J((f/g)^lambda), at truncation.
bool check_colon_relation(const ResolutionData& res, const Rat& lambda, long t,
                          std::optional<int> truncation = std::nullopt);

struct CrosscheckEntry {
    Rat lambda;
    Rat negated;
    bool in_candidates = false;
    std::vector<int> witnesses;  // divisors whose candidate set contains it
};
struct CrosscheckReport {
    /// 1 - lct(g); absent for g = 1, where the window is all of (0, 1].
    std::optional<Rat> window_lo;
    std::vector<CrosscheckEntry> entries;
    bool all_ok = true;
};
/// Jumping numbers in (1 - lct(g), 1] negated against the candidate
/// Bernstein-Sato root set.
CrosscheckReport jn_bs_crosscheck(const ResolutionData& res,
                                  std::optional<int> truncation = std::nullopt);

/// Span of { m * p : deg(m * p) <= D } as a staircase (for (f^n) comparisons).
PolyStaircase principal_span(const MPoly& p, int D);

}  // namespace mero
