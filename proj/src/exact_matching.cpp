#include "hypermatch/exact_matching.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace hypermatch {

namespace {

inline bool mask_disjoint(const uint64_t* a, const uint64_t* b, int stride) {
    uint64_t acc = 0;
    for (int w = 0; w < stride; ++w) acc |= a[w] & b[w];
    return acc == 0;
}

struct NodeScratch {
    std::vector<int32_t> rem_deg;
    std::vector<VertexSet> adj;  // remaining codegree adjacency
    VertexSet usable;            // uncovered vertices with a remaining edge
};

// Greedy independent set among `candidates` under adj; vertices tried in
// ascending (adjacency-degree, id) order.
int greedy_independent_set(const std::vector<VertexSet>& adj, const VertexSet& candidates) {
    std::vector<std::pair<int, int>> order;  // (degree, vertex)
    candidates.for_each([&](int v) {
        order.emplace_back((adj[v] & candidates).count(), v);
    });
    std::sort(order.begin(), order.end());
    VertexSet blocked;
    int size = 0;
    for (auto [d, v] : order) {
        if (blocked.test(v)) continue;
        ++size;
        blocked |= adj[v];
    }
    return size;
}

struct PmSearcher {
    const Hypergraph& H;
    int n, k, stride;
    uint64_t budget, nodes = 0;
    bool budget_hit = false;
    std::array<uint64_t, kMaxWords> covered{};
    std::vector<int32_t> chosen;
    NodeScratch scratch;

    explicit PmSearcher(const Hypergraph& h, uint64_t b)
        : H(h), n(h.n()), k(h.k()), stride(h.stride()), budget(b) {
        scratch.rem_deg.resize(n);
        scratch.adj.resize(n);
    }

    // Analyzes alive edges; returns false when the node is infeasible.
    bool analyze(const std::vector<int32_t>& alive, int uncovered_count) {
        std::fill(scratch.rem_deg.begin(), scratch.rem_deg.end(), 0);
        for (int v = 0; v < n; ++v) scratch.adj[v] = VertexSet{};
        scratch.usable = VertexSet{};
        for (int32_t ei : alive) {
            auto e = H.edge(ei);
            for (int a = 0; a < k; ++a) {
                ++scratch.rem_deg[e[a]];
                scratch.usable.set(e[a]);
                for (int b = a + 1; b < k; ++b) {
                    scratch.adj[e[a]].set(e[b]);
                    scratch.adj[e[b]].set(e[a]);
                }
            }
        }
        // every uncovered vertex needs a remaining edge
        if (scratch.usable.count() != uncovered_count) return false;
        // space-barrier cut: an independent set larger than uncovered/k is
        // a witness that no perfect matching of the residue exists
        if (greedy_independent_set(scratch.adj, scratch.usable) * k > uncovered_count)
            return false;
        return true;
    }

    bool solve(const std::vector<int32_t>& alive, int uncovered_count) {
        if (++nodes > budget) {
            budget_hit = true;
            return false;
        }
        if (uncovered_count == 0) return true;
        if (!analyze(alive, uncovered_count)) return false;

        int branch_v = -1, best_deg = INT32_MAX;
        scratch.usable.for_each([&](int v) {
            if (scratch.rem_deg[v] < best_deg) {
                best_deg = scratch.rem_deg[v];
                branch_v = v;
            }
        });

        std::vector<int32_t> cand;
        cand.reserve(best_deg);
        for (int32_t ei : H.incident_edges(branch_v))
            if (mask_disjoint(H.edge_mask(ei), covered.data(), stride)) cand.push_back(ei);

        for (int32_t ei : cand) {
            const uint64_t* em = H.edge_mask(ei);
            for (int w = 0; w < stride; ++w) covered[w] |= em[w];
            chosen.push_back(ei);
            std::vector<int32_t> next;
            next.reserve(alive.size());
            for (int32_t ej : alive)
                if (mask_disjoint(H.edge_mask(ej), em, stride)) next.push_back(ej);
            if (solve(next, uncovered_count - k)) return true;
            chosen.pop_back();
            for (int w = 0; w < stride; ++w) covered[w] &= ~em[w];
            if (budget_hit) return false;
        }
        return false;
    }
};

}  // namespace

PmSearchResult find_perfect_matching(const Hypergraph& H, uint64_t budget) {
    if (H.n() % H.k() != 0)
        throw std::invalid_argument("perfect matching needs k | n");
    PmSearchResult out;
    PmSearcher s(H, budget);
    std::vector<int32_t> alive(H.num_edges());
    for (int i = 0; i < H.num_edges(); ++i) alive[i] = i;
    bool ok = s.solve(alive, H.n());
    out.nodes = s.nodes;
    if (ok) {
        Matching m;
        for (int32_t ei : s.chosen) m.edges.push_back(H.edge_copy(ei));
        out.matching = std::move(m);
        out.status = SearchStatus::found;
    } else {
        out.status = s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::none;
    }
    return out;
}

namespace {

struct MaxSearcher {
    const Hypergraph& H;
    int n, k, stride;
    uint64_t budget, nodes = 0;
    bool budget_hit = false;
    int best = 0;
    std::array<uint64_t, kMaxWords> covered{};
    NodeScratch scratch;

    MaxSearcher(const Hypergraph& h, uint64_t b)
        : H(h), n(h.n()), k(h.k()), stride(h.stride()), budget(b) {
        scratch.rem_deg.resize(n);
        scratch.adj.resize(n);
    }

    void run(const std::vector<int32_t>& alive, int cur) {
        if (++nodes > budget) {
            budget_hit = true;
            return;
        }
        best = std::max(best, cur);
        if (alive.empty()) return;

        std::fill(scratch.rem_deg.begin(), scratch.rem_deg.end(), 0);
        for (int v = 0; v < n; ++v) scratch.adj[v] = VertexSet{};
        scratch.usable = VertexSet{};
        for (int32_t ei : alive) {
            auto e = H.edge(ei);
            for (int a = 0; a < k; ++a) {
                ++scratch.rem_deg[e[a]];
                scratch.usable.set(e[a]);
                for (int b = a + 1; b < k; ++b) {
                    scratch.adj[e[a]].set(e[b]);
                    scratch.adj[e[b]].set(e[a]);
                }
            }
        }
        const int usable = scratch.usable.count();
        const int is_size = greedy_independent_set(scratch.adj, scratch.usable);
        int ub = cur + std::min(usable / k, (usable - is_size) / (k - 1));
        if (ub <= best) return;

        int branch_v = -1, best_deg = INT32_MAX;
        scratch.usable.for_each([&](int v) {
            if (scratch.rem_deg[v] < best_deg) {
                best_deg = scratch.rem_deg[v];
                branch_v = v;
            }
        });

        // take each edge through branch_v
        for (int32_t ei : alive) {
            auto e = H.edge(ei);
            if (std::find(e.begin(), e.end(), branch_v) == e.end()) continue;
            const uint64_t* em = H.edge_mask(ei);
            std::vector<int32_t> next;
            next.reserve(alive.size());
            for (int32_t ej : alive)
                if (mask_disjoint(H.edge_mask(ej), em, stride)) next.push_back(ej);
            run(next, cur + 1);
            if (budget_hit) return;
        }
        // or leave branch_v unmatched
        std::vector<int32_t> next;
        next.reserve(alive.size());
        for (int32_t ej : alive) {
            auto e = H.edge(ej);
            if (std::find(e.begin(), e.end(), branch_v) == e.end()) next.push_back(ej);
        }
        run(next, cur);
    }
};

}  // namespace

MaxMatchingResult max_matching_size(const Hypergraph& H, uint64_t budget) {
    MaxMatchingResult out;
    MaxSearcher s(H, budget);
    // greedy first-fit incumbent
    {
        std::array<uint64_t, kMaxWords> cov{};
        int size = 0;
        for (int i = 0; i < H.num_edges(); ++i) {
            if (mask_disjoint(H.edge_mask(i), cov.data(), H.stride())) {
                for (int w = 0; w < H.stride(); ++w) cov[w] |= H.edge_mask(i)[w];
                ++size;
            }
        }
        s.best = size;
    }
    std::vector<int32_t> alive(H.num_edges());
    for (int i = 0; i < H.num_edges(); ++i) alive[i] = i;
    s.run(alive, 0);
    out.size = s.best;
    out.nodes = s.nodes;
    out.status = s.budget_hit ? SearchStatus::budget_exceeded : SearchStatus::found;
    return out;
}

namespace {

struct GraphMatcher {
    std::vector<uint64_t> adj;
    std::unordered_map<uint64_t, int> memo;

    int solve(uint64_t mask) {
        if (mask == 0) return 0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        uint64_t rest = mask & (mask - 1);  // drop v
        int best = solve(rest);             // v unmatched
        uint64_t nbrs = adj[v] & rest;
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            best = std::max(best, 1 + solve(rest & ~(uint64_t{1} << u)));
        }
        memo.emplace(mask, best);
        return best;
    }
};

}  // namespace

Matching graph_max_matching(const Hypergraph& G) {
    if (G.k() != 2) throw std::invalid_argument("graph_max_matching requires k = 2");
    if (G.n() > 64)
        throw std::invalid_argument("graph_max_matching supports n <= 64");
    GraphMatcher gm;
    gm.adj.assign(std::max(G.n(), 1), 0);
    for (int i = 0; i < G.num_edges(); ++i) {
        auto e = G.edge(i);
        gm.adj[e[0]] |= uint64_t{1} << e[1];
        gm.adj[e[1]] |= uint64_t{1} << e[0];
    }
    uint64_t full = G.n() == 64 ? ~uint64_t{0} : (uint64_t{1} << G.n()) - 1;
    gm.solve(full);

    // reconstruct deterministically: prefer matching the lowest vertex with
    // its lowest eligible partner
    Matching out;
    uint64_t mask = full;
    while (mask) {
        int v = std::countr_zero(mask);
        uint64_t rest = mask & (mask - 1);
        int want = gm.solve(mask);
        if (gm.solve(rest) == want) {
            mask = rest;
            continue;
        }
        uint64_t nbrs = gm.adj[v] & rest;
        bool advanced = false;
        while (nbrs) {
            int u = std::countr_zero(nbrs);
            nbrs &= nbrs - 1;
            uint64_t next = rest & ~(uint64_t{1} << u);
            if (1 + gm.solve(next) == want) {
                out.edges.push_back({static_cast<uint16_t>(v), static_cast<uint16_t>(u)});
                mask = next;
                advanced = true;
                break;
            }
        }
        if (!advanced) mask = rest;  // unreachable, defensive
    }
    return out;
}

}  // namespace hypermatch
