#pragma once

#include <cstdint>
#include <optional>

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

inline constexpr uint64_t kDefaultSearchBudget = 50'000'000;  // search-tree nodes

enum class SearchStatus { found, none, budget_exceeded };

struct PmSearchResult {
    SearchStatus status = SearchStatus::none;
    std::optional<Matching> matching;  // present iff status == found
    uint64_t nodes = 0;
};

// Exhaustive backtracking for a perfect matching; branches on an uncovered
// vertex of minimum remaining degree (lowest id on ties), candidate edges in
// lexicographic order. A greedy independent set in the remaining codegree
// graph is used as a sound infeasibility cut: if no edge contains two
// vertices of I and |I| > uncovered/k, no perfect matching can exist.
// Requires k | n. Budget exhaustion is reported, never silently "none".
PmSearchResult find_perfect_matching(const Hypergraph& H,
                                     uint64_t budget = kDefaultSearchBudget);

struct MaxMatchingResult {
    SearchStatus status = SearchStatus::found;  // found = proved optimal
    int size = 0;                               // lower bound when budget hit
    uint64_t nodes = 0;
};

// Exact maximum matching size via branch-and-bound: greedy matching as the
// incumbent, covered-vertex count (plus an independent-set refinement) as the
// upper bound.
MaxMatchingResult max_matching_size(const Hypergraph& H,
                                    uint64_t budget = kDefaultSearchBudget);

// Exact maximum matching of a graph (k = 2) via memoized search over vertex
// masks. Adequate for the small auxiliary graphs this project needs; requires
// n <= 64. Covers at least min(n, 2*delta(G)) vertices.
Matching graph_max_matching(const Hypergraph& G);

}  // namespace hypermatch
