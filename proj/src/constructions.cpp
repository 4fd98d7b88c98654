#include "hypermatch/constructions.hpp"

#include <stdexcept>

#include "hypermatch/rng.hpp"

namespace hypermatch {

namespace {

Edge to_edge(const std::vector<int>& c) { return Edge(c.begin(), c.end()); }

void check_complete_size(int k, int n) {
    if (n < k) throw std::invalid_argument("need n >= k");
    if (binomial_capped(n, k, kMaxEdges + 1) > kMaxEdges)
        throw std::invalid_argument("C(n,k) exceeds edge cap");
}

}  // namespace

VertexSet extremal_a_block(int k, int n) {
    VertexSet a;
    for (int v = 0; v <= n / k; ++v) a.set(v);
    return a;
}

Hypergraph extremal_construction(int k, int n) {
    if (k < 3) throw std::invalid_argument("extremal construction needs k >= 3");
    if (n % k != 0) throw std::invalid_argument("extremal construction needs k | n");
    if (n < 2 * k) throw std::invalid_argument("extremal construction needs n >= 2k");
    check_complete_size(k, n);
    const int a_hi = n / k;  // A = {0..a_hi}, B = {a_hi+1..n-1}
    std::vector<Edge> edges;
    // all-B edges
    const int b_size = n - a_hi - 1;
    for_each_combination(b_size, k, [&](const std::vector<int>& c) {
        Edge e;
        for (int x : c) e.push_back(static_cast<uint16_t>(x + a_hi + 1));
        edges.push_back(std::move(e));
        return true;
    });
    // one-A edges
    for (int a = 0; a <= a_hi; ++a) {
        for_each_combination(b_size, k - 1, [&](const std::vector<int>& c) {
            Edge e{static_cast<uint16_t>(a)};
            for (int x : c) e.push_back(static_cast<uint16_t>(x + a_hi + 1));
            edges.push_back(std::move(e));
            return true;
        });
    }
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph complete_hypergraph(int k, int n) {
    check_complete_size(k, n);
    std::vector<Edge> edges;
    for_each_combination(n, k, [&](const std::vector<int>& c) {
        edges.push_back(to_edge(c));
        return true;
    });
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph random_binomial(int k, int n, double p, uint64_t seed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
    check_complete_size(k, n);
    Rng rng(seed);
    std::vector<Edge> edges;
    for_each_combination(n, k, [&](const std::vector<int>& c) {
        if (rng.u01() < p) edges.push_back(to_edge(c));
        return true;
    });
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph planted_extremal_noise(int k, int n, double eps, uint64_t seed) {
    if (eps < 0.0 || eps > 1.0) throw std::invalid_argument("eps outside [0,1]");
    if (k < 3 || n % k != 0 || n < 2 * k)
        throw std::invalid_argument("planted model needs k >= 3, k | n, n >= 2k");
    check_complete_size(k, n);
    VertexSet a = extremal_a_block(k, n);
    Rng rng(seed);
    std::vector<Edge> edges;
    for_each_combination(n, k, [&](const std::vector<int>& c) {
        int in_a = 0;
        for (int v : c) in_a += a.test(v);
        bool member = in_a <= 1;
        if (rng.u01() < eps) member = !member;
        if (member) edges.push_back(to_edge(c));
        return true;
    });
    return Hypergraph(k, n, std::move(edges));
}

Hypergraph kpartite_restrict(const Hypergraph& H, const PartitionSpec& spec) {
    if (static_cast<int>(spec.parts.size()) != H.k())
        throw std::invalid_argument("partition must have exactly k parts");
    VertexSet seen;
    for (const auto& p : spec.parts) {
        if (seen.intersects(p)) throw std::invalid_argument("parts overlap");
        seen |= p;
    }
    if (seen != H.vertices())
        throw std::invalid_argument("parts must cover V(H)");

    std::vector<Edge> kept;
    for (int i = 0; i < H.num_edges(); ++i) {
        VertexSet es = H.edge_set(i);
        bool transversal = true;
        for (const auto& p : spec.parts)
            if ((es & p).count() != 1) {
                transversal = false;
                break;
            }
        if (transversal) kept.push_back(H.edge_copy(i));
    }
    return Hypergraph(H.k(), H.n(), std::move(kept));
}

}  // namespace hypermatch
