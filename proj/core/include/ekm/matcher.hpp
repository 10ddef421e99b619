#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ekm/geom.hpp"
#include "ekm/weight.hpp"

namespace ekm {

enum class WeightMode { mst, path };

// Partition of the point indices into k-sets.
struct Matching {
    int k = 0;
    std::vector<std::vector<int>> blocks;
};

// Exact MST cost over the complete Euclidean graph on the points. Edge
// comparisons use integer squared distances, so the tree itself is exact.
WeightExpr mst_weight(std::span<const Pt> pts);

// Minimum Hamiltonian path cost, brute force over permutations (|pts| <= 10).
WeightExpr path_weight(std::span<const Pt> pts);

WeightExpr block_weight(std::span<const Pt> pts, const std::vector<int>& block, WeightMode mode);
WeightExpr matching_weight(std::span<const Pt> pts, const Matching& m, WeightMode mode);

// Candidate blocks for a tight cover. unit_scale is the grid unit in point
// coordinates (1 for grid instances, 10^t in path-variant instances).
//
// mst mode with bound == k-1 units: exactly the unit-connected k-subsets.
// path mode: k-subsets admitting a Hamiltonian path of weight <= bound over
// edges no longer than bound - (k-2) units (anything longer cannot appear in
// a tight path).
std::vector<std::vector<int>> candidate_sets(std::span<const Pt> pts, int k,
                                             Rat per_block_bound, WeightMode mode,
                                             int64_t unit_scale = 1);

struct DecideOptions {
    std::chrono::milliseconds budget{std::chrono::milliseconds::max()};
    int64_t unit_scale = 1;
};

struct DecideResult {
    enum class Status { found, infeasible, budget_exceeded };
    Status status = Status::infeasible;
    std::optional<Matching> matching;
};

// Decision solver: find a partition of total weight <= w, or report none.
// Tight thresholds (w == (k-1) * n/k units in mst mode, + slack in path mode)
// use exact cover over candidate_sets with fail-first point selection and
// unit propagation; other thresholds branch and bound over all k-subsets.
DecideResult exact_decide(std::span<const Pt> pts, int k, Rat w, WeightMode mode,
                          const DecideOptions& opts = {});

// Global optimum by exhaustive partition enumeration (test oracle).
Matching exact_solve_bruteforce(std::span<const Pt> pts, int k, WeightMode mode = WeightMode::mst);

// Seeded greedy construction + 2-swap local search. Deterministic per seed.
Matching greedy_local_search(std::span<const Pt> pts, int k, uint64_t seed);

// Exact-cover engine over candidate blocks, exposed for the gadget certifier.
struct CoverResult {
    bool found = false;
    bool timed_out = false;
    std::vector<int> chosen;  // candidate indices of the first cover
};
CoverResult cover_first(int n, const std::vector<std::vector<int>>& cands,
                        std::chrono::milliseconds budget = std::chrono::milliseconds::max());

// Number of exact covers (capped), optionally returning the first witness.
long long cover_count(int n, const std::vector<std::vector<int>>& cands, long long cap,
                      std::vector<std::vector<int>>* first_witness = nullptr);

enum class Verdict { leq, gt, undecidable_at_precision };

struct VerifyReport {
    Verdict verdict = Verdict::undecidable_at_precision;
    WeightExpr total;
    bool valid_partition = false;
    std::string error;
};

// Recompute the matching weight with certified arithmetic and compare to w.
VerifyReport verify_matching(std::span<const Pt> pts, const Matching& m, Rat w,
                             WeightMode mode, int max_digits = 200);

}  // namespace ekm
