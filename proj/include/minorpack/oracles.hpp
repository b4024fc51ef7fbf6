#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorpack/budget.hpp"
#include "minorpack/graph.hpp"

namespace minorpack {

// Witness that h is a minor of g: one branch set per h-vertex, pairwise
// disjoint, each inducing a connected subgraph, with a g-edge between the
// branch sets of every h-edge.
struct MinorModel {
    std::vector<VertexSet> branch_sets;  // indexed by h-vertex

    VertexSet vertex_union() const;
    int size() const { return static_cast<int>(vertex_union().size()); }
};

// Empty result means the model is valid; otherwise the first violated clause.
std::optional<std::string> validate_model(const Graph& g, const Graph& h,
                                          const MinorModel& m);

struct Bramble {
    std::vector<VertexSet> sets;
};

// Empty result means valid; otherwise describes the violating set or pair.
std::optional<std::string> validate_bramble(const Graph& g, const Bramble& b);

struct ModelSearchOptions {
    std::optional<int> size_cap;     // when set, result is size-minimal among found
    std::uint64_t budget = Budget::kDefaultNodes;
};

// Exhaustive branch-and-bound model search. Throws BudgetExceeded when the
// node allowance runs out, which is distinct from "no model".
std::optional<MinorModel> find_h_model(const Graph& g, const Graph& h,
                                       const ModelSearchOptions& opts = {});

bool has_h_minor(const Graph& g, const Graph& h,
                 std::uint64_t budget = Budget::kDefaultNodes);

struct PackingWitness {
    int count = 0;
    std::vector<MinorModel> models;
};

// Exact maximum number of pairwise disjoint h-models, with witnesses.
PackingWitness max_disjoint_models(const Graph& g, const Graph& h,
                                   std::uint64_t budget = Budget::kDefaultNodes);

struct HittingWitness {
    int count = 0;
    VertexSet hitting_set;
};

// Exact minimum vertex set meeting every h-model.
HittingWitness min_model_hitting_set(const Graph& g, const Graph& h,
                                     std::uint64_t budget = Budget::kDefaultNodes);

// Exact treewidth by dynamic programming over elimination prefixes; capped
// at 16 vertices.
int treewidth_exact(const Graph& g);

// Exact bramble order (minimum hitting set over the bramble sets). The
// bramble is validated first; invalid input throws std::invalid_argument.
int bramble_order_exact(const Graph& g, const Bramble& b,
                        std::uint64_t budget = Budget::kDefaultNodes);

// Decides whether g has a bramble of order >= t, exhaustively. Relies on the
// fact that a maximum-order bramble may be assembled from components of G-W
// over all candidate hitting sets W of size t-1.
bool bramble_of_order_exists(const Graph& g, int t,
                             std::uint64_t budget = Budget::kDefaultNodes);

struct EsResult {
    enum class Kind { Increasing, Decreasing, TooShort } kind;
    std::vector<int> subsequence;
};

// Constructive monotone subsequence: increasing of length p or decreasing of
// length q, preferring increasing when both exist. Guaranteed to succeed
// when the sequence has at least (p-1)(q-1)+1 entries.
EsResult erdos_szekeres(const std::vector<int>& seq, int p, int q);

// K_p model of size <= size_budget: exact search for p <= 5, greedy
// contraction heuristic above that (sound but incomplete).
std::optional<MinorModel> small_clique_model(const Graph& g, int p, int size_budget,
                                             std::uint64_t budget = Budget::kDefaultNodes);

// A simple cycle of length 0 mod m if one exists. A layered closed-walk scan
// filters impossible instances before the exhaustive search.
std::optional<Path> find_mod_m_cycle(const Graph& g, int m,
                                     std::uint64_t budget = Budget::kDefaultNodes);

Graph complete_graph(int n);

}  // namespace minorpack
