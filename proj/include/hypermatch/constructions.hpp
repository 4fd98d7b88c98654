#pragma once

#include "hypermatch/hypergraph.hpp"

namespace hypermatch {

struct PartitionSpec {
    std::vector<VertexSet> parts;  // pairwise disjoint, union = V(H)
};

// The space-barrier construction: A = {0..n/k} (so |A| = n/k + 1), B the
// rest, edges all k-sets with at most one vertex in A. It has
// delta_plus = (k-1)n/k - (k-1), no isolated vertices, and no perfect
// matching. Requires k >= 3, k | n, n >= 2k.
Hypergraph extremal_construction(int k, int n);

// The A-block of extremal_construction(k, n): vertices 0..n/k.
VertexSet extremal_a_block(int k, int n);

// All C(n, k) edges.
Hypergraph complete_hypergraph(int k, int n);

// Every k-set included independently with probability p (seeded, reproducible).
Hypergraph random_binomial(int k, int n, double p, uint64_t seed);

// extremal_construction with eps-noise: every k-set's membership is flipped
// independently with probability eps.
Hypergraph planted_extremal_noise(int k, int n, double eps, uint64_t seed);

// Subhypergraph on the same vertex set keeping only edges with exactly one
// vertex in each part. Requires exactly k parts partitioning V(H).
Hypergraph kpartite_restrict(const Hypergraph& H, const PartitionSpec& spec);

}  // namespace hypermatch
