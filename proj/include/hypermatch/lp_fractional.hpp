#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "hypermatch/hypergraph.hpp"
#include "hypermatch/rational.hpp"

namespace hypermatch {

// Edge weights aligned with the host's canonical edge order, exact rationals.
struct FractionalMatching {
    std::vector<BigRat> weights;
};

// Vertex vector proving that no perfect fractional matching exists:
// sum(y) > 0 and sum_{v in e} y_v <= 0 for every edge.
struct FarkasCertificate {
    std::vector<BigRat> y;
};

std::vector<BigRat> vertex_loads(const Hypergraph& H, const FractionalMatching& w);
// weights >= 0 and every vertex load <= 1
bool is_valid_fractional(const Hypergraph& H, const FractionalMatching& w);
// every vertex load exactly 1
bool is_perfect_fractional(const Hypergraph& H, const FractionalMatching& w);
// max over pairs of the total weight of edges containing both
BigRat max_pair_load(const Hypergraph& H, const FractionalMatching& w,
                     std::pair<int, int>* argmax = nullptr);

bool verify_certificate(const Hypergraph& H, const FarkasCertificate& c);

using PfmOutcome = std::variant<FractionalMatching, FarkasCertificate>;

// Exactly one of: a perfect fractional matching (all loads = 1), or a valid
// Farkas certificate. Exact rational arithmetic throughout.
PfmOutcome perfect_fractional_matching(const Hypergraph& H);

struct MinmaxSolution {
    FractionalMatching w;
    BigRat max_pair;  // the LP-exact optimum M
};
using MinmaxOutcome = std::variant<MinmaxSolution, FarkasCertificate>;

// Perfect fractional matching minimizing the maximum pair load; passes the
// infeasibility certificate through when no perfect fractional matching exists.
MinmaxOutcome minmax_pair_fractional(const Hypergraph& H);

// Desk-scale feasibility probe: does a perfect fractional matching with every
// pair load <= cap exist? (The independent re-solve behind minmax optimality.)
bool pair_capped_feasible(const Hypergraph& H, const BigRat& cap);

// Sorts vertices by ascending y (ties by id) and takes the top n/k as S;
// returns S with edges_with_two_in(H, S). Requires k | n.
std::pair<VertexSet, int64_t> extremal_set_from_certificate(const Hypergraph& H,
                                                            const FarkasCertificate& c);

std::string serialize_fractional(const FractionalMatching& w);
FractionalMatching parse_fractional(const std::string& s, int num_edges);
std::string serialize_certificate(const FarkasCertificate& c);
FarkasCertificate parse_certificate(const std::string& s);

}  // namespace hypermatch
