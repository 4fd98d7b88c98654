#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hypermatch/vertex_set.hpp"

namespace hypermatch {

using Edge = std::vector<uint16_t>;  // vertex ids, kept sorted ascending

inline constexpr int64_t kMaxEdges = 5'000'000;

// Immutable k-uniform hypergraph on vertices 0..n-1. Edges are stored in
// canonical (lexicographic) order; all operations are const and safe to call
// concurrently.
class Hypergraph {
public:
    Hypergraph(int k, int n, std::vector<Edge> edges);

    int k() const { return k_; }
    int n() const { return n_; }
    int num_edges() const { return static_cast<int>(masks_.size() / stride_); }
    int stride() const { return stride_; }

    std::span<const uint16_t> edge(int i) const {
        return {verts_.data() + static_cast<size_t>(i) * k_, static_cast<size_t>(k_)};
    }
    Edge edge_copy(int i) const {
        auto e = edge(i);
        return Edge(e.begin(), e.end());
    }
    const uint64_t* edge_mask(int i) const { return masks_.data() + static_cast<size_t>(i) * stride_; }
    VertexSet edge_set(int i) const;
    const uint64_t* all_masks() const { return masks_.data(); }
    VertexSet vertices() const { return n_ == 0 ? VertexSet{} : VertexSet::full(n_); }

    bool contains_edge(std::span<const uint16_t> sorted_edge) const {
        return edge_index(sorted_edge) >= 0;
    }
    int edge_index(std::span<const uint16_t> sorted_edge) const;  // -1 when absent

    // Number of edges containing S. Throws when S has a member >= n.
    int64_t degree(const VertexSet& S) const;
    int vertex_degree(int v) const { return static_cast<int>(inc_idx_[v].size()); }

    // Minimum of degree over all (k-1)-subsets of V. Requires n >= k.
    int64_t min_codegree() const;

    struct PosCodegree {
        int64_t value = 0;
        std::optional<VertexSet> witness;  // an argmin (k-1)-set, absent when edgeless
    };
    // Minimum of degree over (k-1)-subsets with positive degree. Requires n >= k.
    PosCodegree min_positive_codegree() const;

    VertexSet isolated_vertices() const;

    // #edges with at least two vertices in S (S is clipped to V).
    int64_t edges_with_two_in(const VertexSet& S) const;

    // {x not in S : degree(S + x) >= 1}. Requires |S| <= k-1 and degree(S) >= 1.
    VertexSet extend_candidates(const VertexSet& S) const;

    // Every non-isolated v has deg(v) >= C(delta_plus + k - 2, k - 1).
    bool degree_lower_bound_check() const;

    const std::vector<int32_t>& incident_edges(int v) const { return inc_idx_[v]; }
    const uint64_t* incident_masks(int v) const { return inc_masks_[v].data(); }

    bool operator==(const Hypergraph& o) const {
        return k_ == o.k_ && n_ == o.n_ && verts_ == o.verts_;
    }

private:
    void check_subset_of_v(const VertexSet& S) const;

    int k_ = 0, n_ = 0, stride_ = 1;
    std::vector<uint16_t> verts_;  // m*k, canonical order
    std::vector<uint64_t> masks_;  // m*stride
    std::vector<std::vector<int32_t>> inc_idx_;
    std::vector<std::vector<uint64_t>> inc_masks_;  // packed copies per vertex
};

struct Matching {
    std::vector<Edge> edges;

    int size() const { return static_cast<int>(edges.size()); }
    VertexSet covered() const {
        VertexSet s;
        for (const auto& e : edges)
            for (uint16_t v : e) s.set(v);
        return s;
    }
};

// True iff every edge of M is an edge of H, edges are pairwise disjoint, and
// (when require_perfect) they cover V(H).
bool validate_matching(const Hypergraph& H, const Matching& M, bool require_perfect);

// C(a, r) clamped to cap (used for bound checks against counts far below cap).
int64_t binomial_capped(int64_t a, int64_t r, int64_t cap = int64_t{1} << 62);

// H restricted to `keep`, relabeled to 0..|keep|-1; to_parent maps back.
struct InducedSubgraph {
    Hypergraph sub;
    std::vector<int> to_parent;
};
InducedSubgraph induced_subhypergraph(const Hypergraph& H, const VertexSet& keep);

// Calls f(combo) for every r-subset of {0..n-1}, ascending lexicographic.
// f returns false to stop early.
template <class F>
void for_each_combination(int n, int r, F&& f) {
    if (r < 0 || r > n) return;
    std::vector<int> c(r);
    for (int i = 0; i < r; ++i) c[i] = i;
    while (true) {
        if (!f(static_cast<const std::vector<int>&>(c))) return;
        int i = r - 1;
        while (i >= 0 && c[i] == n - r + i) --i;
        if (i < 0) return;
        ++c[i];
        for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
    }
}

}  // namespace hypermatch
