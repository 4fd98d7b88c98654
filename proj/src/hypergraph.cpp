#include "hypermatch/hypergraph.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

#include "hypermatch/kernels.hpp"

namespace hypermatch {

Hypergraph::Hypergraph(int k, int n, std::vector<Edge> edges) : k_(k), n_(n) {
    if (k < 2) throw std::invalid_argument("uniformity k must be >= 2");
    if (n < 0 || n > kMaxVertices)
        throw std::invalid_argument("vertex count outside [0, " +
                                    std::to_string(kMaxVertices) + "]");
    if (static_cast<int64_t>(edges.size()) > kMaxEdges)
        throw std::invalid_argument("edge count exceeds cap");
    stride_ = words_for(std::max(n, 1));

    for (auto& e : edges) {
        if (static_cast<int>(e.size()) != k)
            throw std::invalid_argument("edge size differs from k");
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw std::invalid_argument("edge has repeated vertex");
        if (e.back() >= n) throw std::invalid_argument("edge vertex out of range");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");

    const size_t m = edges.size();
    verts_.reserve(m * k);
    masks_.assign(m * stride_, 0);
    inc_idx_.resize(n);
    inc_masks_.resize(n);
    for (size_t i = 0; i < m; ++i) {
        for (uint16_t v : edges[i]) {
            verts_.push_back(v);
            masks_[i * stride_ + (v >> 6)] |= uint64_t{1} << (v & 63);
            inc_idx_[v].push_back(static_cast<int32_t>(i));
        }
    }
    for (int v = 0; v < n; ++v) {
        inc_masks_[v].reserve(inc_idx_[v].size() * stride_);
        for (int32_t ei : inc_idx_[v])
            inc_masks_[v].insert(inc_masks_[v].end(), edge_mask(ei),
                                 edge_mask(ei) + stride_);
    }
}

VertexSet Hypergraph::edge_set(int i) const {
    VertexSet s;
    const uint64_t* m = edge_mask(i);
    for (int w = 0; w < stride_; ++w) s.words()[w] = m[w];
    return s;
}

int Hypergraph::edge_index(std::span<const uint16_t> sorted_edge) const {
    if (static_cast<int>(sorted_edge.size()) != k_) return -1;
    const int m = num_edges();
    int lo = 0, hi = m;
    auto cmp = [&](int i) {
        auto e = edge(i);
        return std::lexicographical_compare(e.begin(), e.end(), sorted_edge.begin(),
                                            sorted_edge.end());
    };
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (cmp(mid))
            lo = mid + 1;
        else
            hi = mid;
    }
    if (lo < m) {
        auto e = edge(lo);
        if (std::equal(e.begin(), e.end(), sorted_edge.begin(), sorted_edge.end()))
            return lo;
    }
    return -1;
}

void Hypergraph::check_subset_of_v(const VertexSet& S) const {
    if (!(n_ > 0 ? S.is_subset_of(VertexSet::full(n_)) : S.empty()))
        throw std::invalid_argument("vertex set member out of range");
}

int64_t Hypergraph::degree(const VertexSet& S) const {
    check_subset_of_v(S);
    const int sc = S.count();
    if (sc == 0) return num_edges();
    if (sc > k_) return 0;
    // scan the shortest incidence list among members of S
    int best = -1;
    size_t best_len = SIZE_MAX;
    S.for_each([&](int v) {
        if (inc_idx_[v].size() < best_len) {
            best_len = inc_idx_[v].size();
            best = v;
        }
    });
    if (best_len == 0) return 0;
    return static_cast<int64_t>(kernels::count_supersets(
        inc_masks_[best].data(), best_len, stride_, S.words()));
}

int64_t Hypergraph::min_codegree() const {
    if (n_ < k_) throw std::invalid_argument("min_codegree requires n >= k");
    int64_t best = -1;
    for_each_combination(n_, k_ - 1, [&](const std::vector<int>& c) {
        int64_t d = degree(VertexSet::of(c));
        if (best < 0 || d < best) best = d;
        return best != 0;
    });
    return best;
}

Hypergraph::PosCodegree Hypergraph::min_positive_codegree() const {
    if (n_ < k_) throw std::invalid_argument("min_positive_codegree requires n >= k");
    const int m = num_edges();
    if (m == 0) return {0, std::nullopt};
    // Subsets with positive degree live inside edges, so enumerate the
    // (k-1)-subsets of edges and dedupe.
    std::vector<std::array<uint16_t, 8>> cands;
    cands.reserve(static_cast<size_t>(m) * k_);
    for (int i = 0; i < m; ++i) {
        auto e = edge(i);
        for (int drop = 0; drop < k_; ++drop) {
            std::array<uint16_t, 8> key{};
            int pos = 0;
            for (int j = 0; j < k_; ++j)
                if (j != drop) key[pos++] = e[j];
            cands.push_back(key);
        }
    }
    std::sort(cands.begin(), cands.end());
    cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

    PosCodegree out;
    out.value = -1;
    for (const auto& key : cands) {
        VertexSet S;
        for (int j = 0; j < k_ - 1; ++j) S.set(key[j]);
        int64_t d = degree(S);
        if (out.value < 0 || d < out.value) {
            out.value = d;
            out.witness = S;
            if (d == 1) break;  // cannot go lower among positive degrees
        }
    }
    return out;
}

VertexSet Hypergraph::isolated_vertices() const {
    VertexSet s;
    for (int v = 0; v < n_; ++v)
        if (inc_idx_[v].empty()) s.set(v);
    return s;
}

int64_t Hypergraph::edges_with_two_in(const VertexSet& S) const {
    VertexSet clipped = n_ > 0 ? (S & VertexSet::full(n_)) : VertexSet{};
    return static_cast<int64_t>(kernels::count_intersect_ge2(
        masks_.data(), num_edges(), stride_, clipped.words()));
}

VertexSet Hypergraph::extend_candidates(const VertexSet& S) const {
    check_subset_of_v(S);
    if (S.count() > k_ - 1)
        throw std::invalid_argument("extend_candidates requires |S| <= k-1");
    if (degree(S) == 0)
        throw std::invalid_argument("extend_candidates requires degree(S) >= 1");
    VertexSet acc;
    if (S.empty()) {
        return isolated_vertices().complement(n_);
    }
    int best = -1;
    size_t best_len = SIZE_MAX;
    S.for_each([&](int v) {
        if (inc_idx_[v].size() < best_len) {
            best_len = inc_idx_[v].size();
            best = v;
        }
    });
    const uint64_t* sw = S.words();
    for (int32_t ei : inc_idx_[best]) {
        const uint64_t* em = edge_mask(ei);
        bool super = true;
        for (int w = 0; w < stride_; ++w) super &= (em[w] & sw[w]) == sw[w];
        if (super)
            for (int w = 0; w < stride_; ++w) acc.words()[w] |= em[w];
    }
    return acc - S;
}

bool Hypergraph::degree_lower_bound_check() const {
    if (num_edges() == 0) return true;
    const int64_t dplus = min_positive_codegree().value;
    const int64_t bound = binomial_capped(dplus + k_ - 2, k_ - 1);
    for (int v = 0; v < n_; ++v) {
        if (inc_idx_[v].empty()) continue;
        if (static_cast<int64_t>(inc_idx_[v].size()) < bound) return false;
    }
    return true;
}

bool validate_matching(const Hypergraph& H, const Matching& M, bool require_perfect) {
    VertexSet covered;
    for (const auto& e : M.edges) {
        Edge sorted = e;
        std::sort(sorted.begin(), sorted.end());
        if (!H.contains_edge(sorted)) return false;
        VertexSet es = VertexSet::of(std::vector<int>(sorted.begin(), sorted.end()));
        if (covered.intersects(es)) return false;
        covered |= es;
    }
    if (require_perfect && covered != H.vertices()) return false;
    return true;
}

InducedSubgraph induced_subhypergraph(const Hypergraph& H, const VertexSet& keep) {
    if (!(H.n() > 0 ? keep.is_subset_of(VertexSet::full(H.n())) : keep.empty()))
        throw std::invalid_argument("induced set member out of range");
    InducedSubgraph out{Hypergraph(H.k(), 0, {}), keep.to_vector()};
    std::vector<int> to_sub(H.n(), -1);
    for (size_t i = 0; i < out.to_parent.size(); ++i) to_sub[out.to_parent[i]] = static_cast<int>(i);
    std::vector<Edge> edges;
    const uint64_t* kw = keep.words();
    for (int i = 0; i < H.num_edges(); ++i) {
        const uint64_t* em = H.edge_mask(i);
        bool inside = true;
        for (int w = 0; w < H.stride(); ++w) inside &= (em[w] & ~kw[w]) == 0;
        if (!inside) continue;
        Edge e;
        for (uint16_t v : H.edge(i)) e.push_back(static_cast<uint16_t>(to_sub[v]));
        edges.push_back(std::move(e));
    }
    out.sub = Hypergraph(H.k(), static_cast<int>(out.to_parent.size()), std::move(edges));
    return out;
}

int64_t binomial_capped(int64_t a, int64_t r, int64_t cap) {
    if (r < 0 || a < 0 || r > a) return 0;
    r = std::min(r, a - r);
    int64_t b = 1;
    for (int64_t i = 1; i <= r; ++i) {
        // b * (a - r + i) stays an exact binomial at each step
        if (b > cap / (a - r + i)) return cap;
        b = b * (a - r + i) / i;
    }
    return std::min(b, cap);
}

}  // namespace hypermatch
