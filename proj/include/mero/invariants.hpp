#pragma once

#include <optional>
#include <vector>

#include "mero/rat.hpp"
#include "mero/resolution.hpp"

namespace mero {

/// Log-canonical threshold of one side of the germ, read off the resolution
/// as min (k_i + 1) / N_i over divisors with N_i > 0.
Rat lct(const ResolutionData& res, bool f_side);

struct CandidateGenerator {
    int divisor_id = 0;
    Rat base;  // (k_i + 1) / N_{f/g,i}
    Rat step;  // 1 / N_{f/g,i}
};

/// Candidate roots of the Bernstein-Sato polynomial: the negated lattice
/// -(k_i + 1 + l) / N_{f/g,i} over zero-class divisors, l = 0..L.
struct CandidateRootSet {
    std::vector<CandidateGenerator> generators;
    std::vector<Rat> enumerated;  // negative rationals, ascending
    long ell_max = 0;
};
CandidateRootSet candidate_bs_roots(const ResolutionData& res, long ell_max);

struct JNCandidate {
    Rat value;
    std::vector<int> divisors;  // contributing divisor ids
};
/// Candidate jumping numbers (k_i + 1 + l) / N_{f/g,i} up to lambda_max,
/// deduplicated and sorted, tagged with the contributing divisors.
std::vector<JNCandidate> candidate_jumping_numbers(const ResolutionData& res,
                                                   const Rat& lambda_max);

/// Open interval (-lct(f), lct(g)); an absent endpoint means infinite.
struct Strip {
    std::optional<Rat> lo, hi;
};
Strip convergence_strip(const ResolutionData& res);

/// Candidate pole lattice of the local zeta function. The left set is
/// {zeta - k*alpha}, the right set {k*alpha - xi}, with zeta (resp. xi)
/// running over candidate Bernstein-Sato roots of f/g (resp. g/f) and
/// alpha = lct(g). Candidate supersets, not exact pole sets.
struct ZetaReport {
    Rat alpha;
    Strip strip;
    std::vector<Rat> left;   // ascending
    std::vector<Rat> right;  // ascending
    long lattice_depth = 0;  // K
    long ell_max = 0;        // L
};
ZetaReport candidate_zeta_poles(const ResolutionData& res, long K, long L);

}  // namespace mero
