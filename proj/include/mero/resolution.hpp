#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mero/mpoly.hpp"
#include "mero/parser.hpp"
#include "mero/rat.hpp"

namespace mero {

class ResolutionError : public std::runtime_error {
public:
    enum class Kind { UnsupportedExtension, IterationCap, Domain };
    ResolutionError(Kind kind, std::string msg)
        : std::runtime_error(std::move(msg)), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// One blow-up step. chart 1 is (x,y) -> (x, x*(y+c)) and covers the finite
/// directions of the new exceptional line; chart 2 is (x,y) -> (x*y, y) and
/// covers the vertical direction. Centers always sit at the local origin,
/// so the rational translation c records where on the previous line the
/// center was.
struct ElementaryMap {
    int chart = 1;
    Rat c = 0;
};

/// A local coordinate patch: the chain of elementary maps from the base
/// coordinates, plus the composed substitution (pullback of the base
/// coordinates as polynomials in the local ones).
struct Chart {
    std::vector<ElementaryMap> chain;
    MPoly X, Y;
};

enum class DivisorKind { Exceptional, StrictF, StrictG };
enum class DivisorClass { Zero, Pole, Dicritical };  // I_0, I_inf, I_d

struct DivisorData {
    int id = 0;  // 1-based
    DivisorKind kind = DivisorKind::Exceptional;
    long Nf = 0;  // multiplicity of the f-pullback along this divisor
    long Ng = 0;
    long k = 0;   // relative canonical (Jacobian) multiplicity
    long Nfg() const { return Nf - Ng; }
    DivisorClass cls() const {
        long d = Nfg();
        return d > 0 ? DivisorClass::Zero
                     : (d < 0 ? DivisorClass::Pole : DivisorClass::Dicritical);
    }
    /// Exceptional divisors: preferred chart with the divisor at {x = 0}.
    Chart chart;
    /// Strict transforms: the squarefree factor downstairs this branch
    /// belongs to, and how many conjugate branch points the record stands for.
    MPoly factor;
    int orbit = 1;
};

struct HistoryEntry {
    int id = 0;                 // divisor created by this blow-up
    std::vector<int> parents;   // divisors through the center
    bool strict_f = false;      // strict transform of f passed through it
    bool strict_g = false;
};

/// A point of the current model with up to two divisors as coordinate axes.
struct PointModel {
    std::vector<ElementaryMap> chain;
    MPoly X, Y;
    int axis_x_div = 0;  // divisor id cut out by x here (0 = none)
    int axis_y_div = 0;
    /// False when the point has irrational coordinates (only its existence
    /// is known) or when the model was lost in a JSON round-trip.
    bool known = true;
};

struct ResolutionData {
    MeromorphicGerm germ;
    std::vector<DivisorData> divisors;
    std::vector<std::pair<int, int>> edges;  // dual graph, pairs with a < b
    std::vector<HistoryEntry> history;
    long blowups = 0;
    long blowup_cap = 64;

    /// Intersection point models per edge, in matching order. Present on
    /// freshly computed resolutions; empty after JSON round-trips (queries
    /// still work, further separation does not).
    std::vector<PointModel> meetings;

    const DivisorData& divisor(int id) const { return divisors.at(id - 1); }
};

/// Log resolution of the curve f*g = 0 by iterated point blow-ups over Q.
/// The total transform is simple normal crossing; no dicritical separation.
ResolutionData resolve_snc(const MeromorphicGerm& germ, long blowup_cap = 64);

/// Extra blow-ups until no zero-class divisor meets a pole-class divisor.
ResolutionData separate_dicritical(ResolutionData res);

/// Full pipeline: SNC resolution of f*g followed by dicritical separation.
ResolutionData resolve_pair(const MeromorphicGerm& germ, long blowup_cap = 64);

/// Order of vanishing of the pullback of h along a divisor. Exact; h != 0.
long ord_along(const ResolutionData& res, int divisor_id, const MPoly& h);

struct Classification {
    std::vector<int> zero, pole, dicritical;
};
Classification classify(const ResolutionData& res);

/// Jacobian determinant of a chart map (for consistency checks: its
/// x-valuation in a divisor's preferred chart equals k).
MPoly chart_jacobian(const Chart& chart);

// JSON persistence (stable field order, exact integers, rationals as "p/q").
std::string resolution_to_json(const ResolutionData& res, int indent = 2);
ResolutionData resolution_from_json(const std::string& text);

}  // namespace mero
