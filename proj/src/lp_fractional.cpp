#include "hypermatch/lp_fractional.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "hypermatch/simplex.hpp"

namespace hypermatch {

namespace {

constexpr int kDirectSolveEdgeLimit = 2000;  // above this, generate columns

template <class R>
LpProblem<R> vertex_equality_lp(const Hypergraph& H, const std::vector<int32_t>& cols) {
    LpProblem<R> p;
    p.num_vars = static_cast<int>(cols.size());
    p.rows.resize(H.n());
    p.rhs.assign(H.n(), R(1));
    p.is_eq.assign(H.n(), 1);
    for (int idx = 0; idx < p.num_vars; ++idx)
        for (uint16_t v : H.edge(cols[idx])) p.rows[v].emplace_back(idx, R(1));
    return p;
}

std::vector<int32_t> initial_columns(const Hypergraph& H) {
    const int m = H.num_edges();
    std::vector<int32_t> cols;
    if (m <= kDirectSolveEdgeLimit) {
        cols.resize(m);
        for (int i = 0; i < m; ++i) cols[i] = i;
        return cols;
    }
    // greedy first-fit matching plus an even sample across the edge order
    std::vector<char> taken(m, 0);
    {
        std::array<uint64_t, kMaxWords> cov{};
        for (int i = 0; i < m; ++i) {
            const uint64_t* em = H.edge_mask(i);
            uint64_t clash = 0;
            for (int w = 0; w < H.stride(); ++w) clash |= em[w] & cov[w];
            if (clash) continue;
            for (int w = 0; w < H.stride(); ++w) cov[w] |= em[w];
            taken[i] = 1;
        }
    }
    const int target = std::max(3 * H.n(), 64);
    const int step = std::max(1, m / target);
    for (int i = 0; i < m; i += step) taken[i] = 1;
    for (int i = 0; i < m; ++i)
        if (taken[i]) cols.push_back(i);
    return cols;
}

// Feasibility of {loads = 1} over a column subset with exact pricing of the
// remaining columns; returns either dense weights or a globally valid y.
template <class R>
std::variant<std::vector<R>, std::vector<R>> solve_pfm(const Hypergraph& H) {
    const int m = H.num_edges();
    std::vector<int32_t> active = initial_columns(H);
    std::vector<char> in_active(m, 0);
    for (int32_t c : active) in_active[c] = 1;

    while (true) {
        LpProblem<R> p = vertex_equality_lp<R>(H, active);
        LpSolution<R> sol = solve_lp(p);
        if (sol.status == LpStatus::optimal) {
            std::vector<R> w(m, R(0));
            for (size_t i = 0; i < active.size(); ++i) w[active[i]] = sol.x[i];
            return std::variant<std::vector<R>, std::vector<R>>(std::in_place_index<0>,
                                                                std::move(w));
        }
        // infeasible on the active columns: y certifies unless an inactive
        // edge violates y . e <= 0
        std::vector<R>& y = sol.row_duals;
        std::vector<std::pair<R, int32_t>> violated;
        for (int ei = 0; ei < m; ++ei) {
            if (in_active[ei]) continue;
            R s(0);
            for (uint16_t v : H.edge(ei)) s += y[v];
            if (s > R(0)) violated.emplace_back(s, ei);
        }
        if (violated.empty())
            return std::variant<std::vector<R>, std::vector<R>>(std::in_place_index<1>,
                                                                std::move(y));
        const size_t batch = std::max<size_t>(64, H.n());
        std::sort(violated.begin(), violated.end(),
                  [](const auto& a, const auto& b) {
                      return a.first > b.first ||
                             (a.first == b.first && a.second < b.second);
                  });
        for (size_t i = 0; i < violated.size() && i < batch; ++i) {
            active.push_back(violated[i].second);
            in_active[violated[i].second] = 1;
        }
        std::sort(active.begin(), active.end());
    }
}

template <class R>
struct MinmaxCore {
    std::vector<R> weights;  // dense over all edges
    R t{};
};

// Exact min-max pair load over perfect fractional matchings, with lazy pair
// rows and lazy columns. Requires feasibility (a PFM support as warm start).
template <class R>
MinmaxCore<R> solve_minmax(const Hypergraph& H, const std::vector<R>& warm) {
    const int m = H.num_edges();
    const int n = H.n();
    const int k = H.k();

    std::vector<int32_t> active = initial_columns(H);
    std::vector<char> in_active(m, 0);
    for (int32_t c : active) in_active[c] = 1;
    for (int ei = 0; ei < m; ++ei)
        if (!warm[ei].is_zero() && !in_active[ei]) {
            in_active[ei] = 1;
            active.push_back(ei);
        }
    std::sort(active.begin(), active.end());

    // pair bookkeeping: row index per active pair, -1 otherwise
    std::vector<int32_t> pair_row(static_cast<size_t>(n) * n, -1);
    std::vector<std::pair<int, int>> active_pairs;
    auto pair_id = [n](int u, int v) {
        return static_cast<size_t>(std::min(u, v)) * n + std::max(u, v);
    };
    // small instances: materialize every covered pair up front
    {
        std::vector<char> seen(static_cast<size_t>(n) * n, 0);
        std::vector<std::pair<int, int>> all;
        for (int ei = 0; ei < m; ++ei) {
            auto e = H.edge(ei);
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) {
                    size_t id = pair_id(e[a], e[b]);
                    if (!seen[id]) {
                        seen[id] = 1;
                        all.emplace_back(std::min<int>(e[a], e[b]),
                                         std::max<int>(e[a], e[b]));
                    }
                }
        }
        if (all.size() <= 300) {
            std::sort(all.begin(), all.end());
            active_pairs = std::move(all);
            for (size_t i = 0; i < active_pairs.size(); ++i)
                pair_row[pair_id(active_pairs[i].first, active_pairs[i].second)] =
                    static_cast<int32_t>(i);
        }
    }

    while (true) {
        // vars: one per active column, then t
        LpProblem<R> p;
        const int nc = static_cast<int>(active.size());
        p.num_vars = nc + 1;
        const int t_var = nc;
        const int np = static_cast<int>(active_pairs.size());
        p.rows.resize(n + np);
        p.rhs.assign(n + np, R(0));
        p.is_eq.assign(n + np, 0);
        for (int v = 0; v < n; ++v) {
            p.rhs[v] = R(1);
            p.is_eq[v] = 1;
        }
        for (int idx = 0; idx < nc; ++idx) {
            auto e = H.edge(active[idx]);
            for (int a = 0; a < k; ++a) {
                p.rows[e[a]].emplace_back(idx, R(1));
                for (int b = a + 1; b < k; ++b) {
                    int32_t pr = pair_row[pair_id(e[a], e[b])];
                    if (pr >= 0) p.rows[n + pr].emplace_back(idx, R(1));
                }
            }
        }
        for (int i = 0; i < np; ++i) p.rows[n + i].emplace_back(t_var, R(-1));
        p.objective.emplace_back(t_var, R(1));

        LpSolution<R> sol = solve_lp(p);
        if (sol.status != LpStatus::optimal)
            throw std::logic_error("minmax subproblem must be feasible and bounded");

        // separation: any pair load above t among edges with weight > 0
        std::vector<std::pair<R, std::pair<int, int>>> viol_rows;
        {
            std::vector<std::pair<size_t, R>> loads;  // sparse pair loads
            std::vector<int32_t> where(static_cast<size_t>(n) * n, -1);
            for (int idx = 0; idx < nc; ++idx) {
                if (sol.x[idx].is_zero()) continue;
                auto e = H.edge(active[idx]);
                for (int a = 0; a < k; ++a)
                    for (int b = a + 1; b < k; ++b) {
                        size_t id = pair_id(e[a], e[b]);
                        if (where[id] < 0) {
                            where[id] = static_cast<int32_t>(loads.size());
                            loads.emplace_back(id, R(0));
                        }
                        loads[where[id]].second += sol.x[idx];
                    }
            }
            for (auto& [id, load] : loads)
                if (load > sol.objective && pair_row[id] < 0)
                    viol_rows.emplace_back(load,
                                           std::make_pair(static_cast<int>(id / n),
                                                          static_cast<int>(id % n)));
        }
        // pricing: inactive columns with negative reduced cost
        std::vector<std::pair<R, int32_t>> viol_cols;
        for (int ei = 0; ei < m; ++ei) {
            if (in_active[ei]) continue;
            auto e = H.edge(ei);
            R rc(0);
            for (int a = 0; a < k; ++a) {
                rc -= sol.row_duals[e[a]];
                for (int b = a + 1; b < k; ++b) {
                    int32_t pr = pair_row[pair_id(e[a], e[b])];
                    if (pr >= 0) rc -= sol.row_duals[n + pr];
                }
            }
            if (rc < R(0)) viol_cols.emplace_back(rc, ei);
        }

        if (viol_rows.empty() && viol_cols.empty()) {
            MinmaxCore<R> out;
            out.weights.assign(m, R(0));
            for (int idx = 0; idx < nc; ++idx) out.weights[active[idx]] = sol.x[idx];
            out.t = sol.objective;
            return out;
        }

        std::sort(viol_rows.begin(), viol_rows.end(), [](const auto& a, const auto& b) {
            return a.first > b.first || (a.first == b.first && a.second < b.second);
        });
        const size_t row_batch = std::max<size_t>(32, n);
        for (size_t i = 0; i < viol_rows.size() && i < row_batch; ++i) {
            auto [u, v] = viol_rows[i].second;
            pair_row[pair_id(u, v)] = static_cast<int32_t>(active_pairs.size());
            active_pairs.emplace_back(u, v);
        }
        std::sort(viol_cols.begin(), viol_cols.end(), [](const auto& a, const auto& b) {
            return a.first < b.first || (a.first == b.first && a.second < b.second);
        });
        const size_t col_batch = std::max<size_t>(64, n);
        for (size_t i = 0; i < viol_cols.size() && i < col_batch; ++i) {
            active.push_back(viol_cols[i].second);
            in_active[viol_cols[i].second] = 1;
        }
        std::sort(active.begin(), active.end());
    }
}

std::vector<BigRat> to_bigrat(const std::vector<Rat64>& v) {
    std::vector<BigRat> out;
    out.reserve(v.size());
    for (const Rat64& r : v) out.push_back(r.to_bigrat());
    return out;
}
std::vector<BigRat> to_bigrat(std::vector<BigRat> v) { return v; }

}  // namespace

std::vector<BigRat> vertex_loads(const Hypergraph& H, const FractionalMatching& w) {
    std::vector<BigRat> loads(H.n(), BigRat(0));
    for (int ei = 0; ei < H.num_edges(); ++ei) {
        if (w.weights[ei].is_zero()) continue;
        for (uint16_t v : H.edge(ei)) loads[v] += w.weights[ei];
    }
    return loads;
}

bool is_valid_fractional(const Hypergraph& H, const FractionalMatching& w) {
    if (static_cast<int>(w.weights.size()) != H.num_edges()) return false;
    for (const BigRat& x : w.weights)
        if (x < 0) return false;
    for (const BigRat& l : vertex_loads(H, w))
        if (l > 1) return false;
    return true;
}

bool is_perfect_fractional(const Hypergraph& H, const FractionalMatching& w) {
    if (!is_valid_fractional(H, w)) return false;
    for (const BigRat& l : vertex_loads(H, w))
        if (l != 1) return false;
    return true;
}

BigRat max_pair_load(const Hypergraph& H, const FractionalMatching& w,
                     std::pair<int, int>* argmax) {
    const int n = H.n(), k = H.k();
    std::vector<std::pair<size_t, BigRat>> loads;
    std::vector<int32_t> where(static_cast<size_t>(n) * n, -1);
    for (int ei = 0; ei < H.num_edges(); ++ei) {
        if (w.weights[ei].is_zero()) continue;
        auto e = H.edge(ei);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                size_t id = static_cast<size_t>(e[a]) * n + e[b];
                if (where[id] < 0) {
                    where[id] = static_cast<int32_t>(loads.size());
                    loads.emplace_back(id, BigRat(0));
                }
                loads[where[id]].second += w.weights[ei];
            }
    }
    BigRat best(0);
    size_t best_id = 0;
    for (auto& [id, l] : loads)
        if (l > best) {
            best = l;
            best_id = id;
        }
    if (argmax) *argmax = {static_cast<int>(best_id / n), static_cast<int>(best_id % n)};
    return best;
}

bool verify_certificate(const Hypergraph& H, const FarkasCertificate& c) {
    if (static_cast<int>(c.y.size()) != H.n()) return false;
    BigRat total(0);
    for (const BigRat& v : c.y) total += v;
    if (!(total > 0)) return false;
    for (int ei = 0; ei < H.num_edges(); ++ei) {
        BigRat s(0);
        for (uint16_t v : H.edge(ei)) s += c.y[v];
        if (s > 0) return false;
    }
    return true;
}

PfmOutcome perfect_fractional_matching(const Hypergraph& H) {
    if (H.n() == 0) return FractionalMatching{};
    if (H.num_edges() == 0)
        return FarkasCertificate{std::vector<BigRat>(H.n(), BigRat(1))};

    auto finish = [&](auto&& var_result) -> PfmOutcome {
        if (var_result.index() == 0) {
            FractionalMatching w{to_bigrat(std::get<0>(var_result))};
            if (!is_perfect_fractional(H, w))
                throw std::logic_error("LP returned a non-perfect matching");
            return w;
        }
        FarkasCertificate c{to_bigrat(std::get<1>(var_result))};
        if (!verify_certificate(H, c))
            throw std::logic_error("LP returned an invalid certificate");
        return c;
    };
    try {
        return finish(solve_pfm<Rat64>(H));
    } catch (const RatOverflow&) {
        return finish(solve_pfm<BigRat>(H));
    }
}

MinmaxOutcome minmax_pair_fractional(const Hypergraph& H) {
    if (H.num_edges() == 0)
        return FarkasCertificate{std::vector<BigRat>(std::max(H.n(), 1), BigRat(1))};

    auto run = [&](auto tag) -> std::optional<MinmaxSolution> {
        using R = decltype(tag);
        auto pfm = solve_pfm<R>(H);
        if (pfm.index() == 1) return std::nullopt;  // caller re-derives certificate
        MinmaxCore<R> core = solve_minmax<R>(H, std::get<0>(pfm));
        MinmaxSolution out;
        out.w.weights = to_bigrat(core.weights);
        if constexpr (std::is_same_v<R, Rat64>)
            out.max_pair = core.t.to_bigrat();
        else
            out.max_pair = core.t;
        return out;
    };

    std::optional<MinmaxSolution> sol;
    try {
        sol = run(Rat64{});
    } catch (const RatOverflow&) {
        sol = run(BigRat{});
    }
    if (!sol) {
        auto pfm = perfect_fractional_matching(H);
        return std::get<FarkasCertificate>(pfm);
    }
    if (!is_perfect_fractional(H, sol->w) ||
        max_pair_load(H, sol->w) != sol->max_pair)
        throw std::logic_error("minmax solution failed exact validation");
    return *sol;
}

bool pair_capped_feasible(const Hypergraph& H, const BigRat& cap) {
    const int m = H.num_edges(), n = H.n(), k = H.k();
    if (m > 20000) throw std::invalid_argument("pair_capped_feasible is desk-scale");
    if (cap < 0) return false;
    if (m == 0) return n == 0;

    std::vector<std::pair<int, int>> pairs;
    std::vector<int32_t> pair_row(static_cast<size_t>(n) * n, -1);
    for (int ei = 0; ei < m; ++ei) {
        auto e = H.edge(ei);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b) {
                size_t id = static_cast<size_t>(e[a]) * n + e[b];
                if (pair_row[id] < 0) {
                    pair_row[id] = static_cast<int32_t>(pairs.size());
                    pairs.emplace_back(e[a], e[b]);
                }
            }
    }
    LpProblem<BigRat> p;
    p.num_vars = m;
    const int np = static_cast<int>(pairs.size());
    p.rows.resize(n + np);
    p.rhs.assign(n + np, cap);
    p.is_eq.assign(n + np, 0);
    for (int v = 0; v < n; ++v) {
        p.rhs[v] = 1;
        p.is_eq[v] = 1;
    }
    for (int ei = 0; ei < m; ++ei) {
        auto e = H.edge(ei);
        for (int a = 0; a < k; ++a) {
            p.rows[e[a]].emplace_back(ei, BigRat(1));
            for (int b = a + 1; b < k; ++b)
                p.rows[n + pair_row[static_cast<size_t>(e[a]) * n + e[b]]].emplace_back(
                    ei, BigRat(1));
        }
    }
    return solve_lp(p).status == LpStatus::optimal;
}

std::pair<VertexSet, int64_t> extremal_set_from_certificate(const Hypergraph& H,
                                                            const FarkasCertificate& c) {
    if (H.n() % H.k() != 0)
        throw std::invalid_argument("extremal_set_from_certificate needs k | n");
    if (static_cast<int>(c.y.size()) != H.n())
        throw std::invalid_argument("certificate dimension mismatch");
    std::vector<int> order(H.n());
    for (int v = 0; v < H.n(); ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return c.y[a] < c.y[b] || (c.y[a] == c.y[b] && a < b);
    });
    VertexSet S;
    for (int i = H.n() - H.n() / H.k(); i < H.n(); ++i) S.set(order[i]);
    return {S, H.edges_with_two_in(S)};
}

std::string serialize_fractional(const FractionalMatching& w) {
    nlohmann::json j;
    j["type"] = "fractional_matching";
    auto arr = nlohmann::json::array();
    for (size_t i = 0; i < w.weights.size(); ++i)
        if (!w.weights[i].is_zero())
            arr.push_back({static_cast<int64_t>(i), rat_to_string(w.weights[i])});
    j["weights"] = std::move(arr);
    return j.dump();
}

FractionalMatching parse_fractional(const std::string& s, int num_edges) {
    nlohmann::json j = nlohmann::json::parse(s);
    FractionalMatching w;
    w.weights.assign(num_edges, BigRat(0));
    for (const auto& item : j.at("weights")) {
        int64_t idx = item.at(0).get<int64_t>();
        if (idx < 0 || idx >= num_edges)
            throw std::invalid_argument("edge index out of range");
        w.weights[idx] = rat_from_string(item.at(1).get<std::string>());
    }
    return w;
}

std::string serialize_certificate(const FarkasCertificate& c) {
    nlohmann::json j;
    j["type"] = "farkas_certificate";
    auto arr = nlohmann::json::array();
    for (const BigRat& v : c.y) arr.push_back(rat_to_string(v));
    j["y"] = std::move(arr);
    return j.dump();
}

FarkasCertificate parse_certificate(const std::string& s) {
    nlohmann::json j = nlohmann::json::parse(s);
    FarkasCertificate c;
    for (const auto& item : j.at("y")) c.y.push_back(rat_from_string(item.get<std::string>()));
    return c;
}

}  // namespace hypermatch
