#pragma once

#include <optional>
#include <string>
#include <vector>

#include "minorpack/bigint.hpp"
#include "minorpack/graph.hpp"
#include "minorpack/oracles.hpp"

namespace minorpack {

// a pairwise-disjoint horizontal paths and b pairwise-disjoint vertical
// trees; every path meets every tree in a non-empty subpath and every tree
// leaf lies on a horizontal path. b == 0 is allowed as a degenerate case
// (it shows up when trees get discarded around a section).
struct Orchard {
    std::vector<Path> hpaths;
    std::vector<Tree> vtrees;

    int num_paths() const { return static_cast<int>(hpaths.size()); }
    int num_trees() const { return static_cast<int>(vtrees.size()); }
    VertexSet vertices() const;
};

struct OrchardReport {
    bool ok = true;
    std::string clause;     // first violated clause, empty when ok
    std::string message;
    VertexSet witnesses;
};

OrchardReport validate_orchard(const Graph& g, const Orchard& o);

struct Section {
    enum class Kind { Horizontal, Vertical } kind;
    std::vector<int> verts;  // in traversal order; always a path
    // provenance: which intersection / gap / tree piece this is
    int path_index = -1;
    int tree_index = -1;
    int component_index = -1;
    bool branch_vertex = false;  // vertical single-vertex section at a tree branch
};

// Complete section decomposition; sections partition the orchard's vertices.
std::vector<Section> sections(const Graph& g, const Orchard& o);

struct MyriapodLeg {
    int attach;  // spine vertex the leg hangs from
    Path path;
};

struct Myriapod {
    Path spine;
    std::vector<MyriapodLeg> legs;
    int pair_i = -1, pair_j = -1;  // ordered path pair that produced it

    VertexSet vertices() const;
};

std::optional<std::string> validate_myriapod(const Graph& g, const Myriapod& m);

// At most a^2 myriapods, spines horizontal paths, legs inside vertical
// trees, jointly containing every section.
std::vector<Myriapod> myriapod_cover(const Graph& g, const Orchard& o);

// Trees-per-path order: tree indices by first encounter along path p.
std::vector<int> tree_order_along_path(const Orchard& o, int path_index);

bool is_tame(const Graph& g, const Orchard& o);

// Minimum tree count that guarantees a tame a x b suborchard: b^(2^(a-1)).
BigInt f_tame(int a, int b);

// Extracts a tame suborchard with b_target trees (all horizontal paths
// kept). Requires at least f_tame(a, b_target) trees.
Orchard tame_suborchard(const Graph& g, const Orchard& o, int b_target);

// The bramble {T u P} over all tree/path pairs.
Bramble orchard_bramble(const Graph& g, const Orchard& o);

// Helpers used all over the tests and the engine.
Orchard orchard_from_path(const Path& p);                   // 1 x |p| with singleton trees
std::pair<Graph, Orchard> grid_with_orchard(int rows, int cols);

std::string orchard_to_json(const Orchard& o);
Orchard orchard_from_json(const std::string& text);

}  // namespace minorpack
