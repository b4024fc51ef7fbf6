#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace minorpack {

// Canonical vertex set: sorted, duplicate-free vector of dense vertex ids.
using VertexSet = std::vector<int>;

namespace vset {

VertexSet make(std::vector<int> v);
bool contains(const VertexSet& s, int v);
VertexSet unite(const VertexSet& a, const VertexSet& b);
VertexSet intersect(const VertexSet& a, const VertexSet& b);
VertexSet subtract(const VertexSet& a, const VertexSet& b);
bool disjoint(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

}  // namespace vset

// Undirected simple graph over dense vertex ids [0, n). Immutable after
// construction apart from the add_edge builder; loops are rejected and
// parallel edges collapse.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n) : adj_(n) {}
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    // All edges as (min, max) pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels) { labels_ = std::move(labels); }

    double average_degree() const;

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    std::vector<std::string> labels_;
    int edge_count_ = 0;
};

// Sequence of vertices with consecutive pairs adjacent in the host graph.
struct Path {
    std::vector<int> verts;

    int size() const { return static_cast<int>(verts.size()); }
    bool empty() const { return verts.empty(); }
};

// Connected acyclic subgraph, stored explicitly so single-vertex trees work.
struct Tree {
    VertexSet verts;
    std::vector<std::pair<int, int>> edges;  // (min, max), sorted

    static Tree singleton(int v) { return Tree{{v}, {}}; }
    static Tree from_path(const Path& p);

    int size() const { return static_cast<int>(verts.size()); }
    bool has_vertex(int v) const { return vset::contains(verts, v); }
    int degree_in_tree(int v) const;
};

struct Separation {
    VertexSet side_a;
    VertexSet side_b;

    int order() const { return static_cast<int>(vset::intersect(side_a, side_b).size()); }
};

bool path_valid(const Graph& g, const Path& p);
bool tree_valid(const Graph& g, const Tree& t);

// Connected components of g - forbidden, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden = {});

bool is_separation(const Graph& g, const Separation& s);

// Contracts each given set to a single vertex. Sets must be pairwise
// disjoint and connected; resulting loops and parallel edges are dropped.
// New ids are assigned in order of smallest original member, with a full
// old->new map returned alongside.
std::pair<Graph, std::vector<int>> contract_sets(const Graph& g,
                                                 const std::vector<VertexSet>& sets);

// Induced subgraph on keep (sorted); second result maps old id -> new id
// (-1 for dropped vertices).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep);

VertexSet all_vertices(const Graph& g);

// BFS shortest path between two vertices restricted to allowed vertices;
// empty result means unreachable.
std::vector<int> shortest_path_within(const Graph& g, int from, int to,
                                      const std::vector<char>& allowed);

}  // namespace minorpack
