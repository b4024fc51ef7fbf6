#include "minorpack/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace minorpack {

namespace vset {

VertexSet make(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

bool contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet unite(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet intersect(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet subtract(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool disjoint(const VertexSet& a, const VertexSet& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (*ia == *ib) return false;
        if (*ia < *ib) ++ia; else ++ib;
    }
    return true;
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace vset

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : adj_(n) {
    for (auto [u, v] : edges) add_edge(u, v);
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge rejected");
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
        throw std::invalid_argument("edge endpoint out of range");
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return;  // parallel edge, drop
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++edge_count_;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& au = adj_[u];
    return std::binary_search(au.begin(), au.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

double Graph::average_degree() const {
    if (vertex_count() == 0) return 0.0;
    return 2.0 * edge_count_ / vertex_count();
}

Tree Tree::from_path(const Path& p) {
    Tree t;
    t.verts = vset::make(p.verts);
    for (size_t i = 0; i + 1 < p.verts.size(); ++i) {
        int u = p.verts[i], v = p.verts[i + 1];
        t.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(t.edges.begin(), t.edges.end());
    return t;
}

int Tree::degree_in_tree(int v) const {
    int d = 0;
    for (auto [a, b] : edges)
        if (a == v || b == v) ++d;
    return d;
}

bool path_valid(const Graph& g, const Path& p) {
    if (p.verts.empty()) return false;
    VertexSet seen = vset::make(p.verts);
    if (seen.size() != p.verts.size()) return false;  // repeated vertex
    for (int v : p.verts)
        if (v < 0 || v >= g.vertex_count()) return false;
    for (size_t i = 0; i + 1 < p.verts.size(); ++i)
        if (!g.has_edge(p.verts[i], p.verts[i + 1])) return false;
    return true;
}

bool tree_valid(const Graph& g, const Tree& t) {
    if (t.verts.empty()) return false;
    for (int v : t.verts)
        if (v < 0 || v >= g.vertex_count()) return false;
    if (t.edges.size() + 1 != t.verts.size()) return false;
    // Every edge must exist in the host and stay within the vertex set;
    // acyclicity + the edge count then gives connectivity via union-find.
    std::vector<int> parent(t.verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto index_of = [&](int v) {
        auto it = std::lower_bound(t.verts.begin(), t.verts.end(), v);
        if (it == t.verts.end() || *it != v) return -1;
        return static_cast<int>(it - t.verts.begin());
    };
    for (auto [u, v] : t.edges) {
        if (!g.has_edge(u, v)) return false;
        int iu = index_of(u), iv = index_of(v);
        if (iu < 0 || iv < 0) return false;
        int ru = find(iu), rv = find(iv);
        if (ru == rv) return false;  // cycle
        parent[ru] = rv;
    }
    return true;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& forbidden) {
    const int n = g.vertex_count();
    std::vector<char> blocked(n, 0), seen(n, 0);
    for (int v : forbidden)
        if (v >= 0 && v < n) blocked[v] = 1;
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (blocked[s] || seen[s]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (!blocked[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    // BFS start order already ascends from the smallest unseen vertex, so
    // the list is ordered by smallest member.
    return out;
}

bool is_separation(const Graph& g, const Separation& s) {
    VertexSet uni = vset::unite(s.side_a, s.side_b);
    if (static_cast<int>(uni.size()) != g.vertex_count()) return false;
    for (int v : uni)
        if (v < 0 || v >= g.vertex_count()) return false;
    VertexSet only_a = vset::subtract(s.side_a, s.side_b);
    VertexSet only_b = vset::subtract(s.side_b, s.side_a);
    for (int u : only_a)
        for (int v : g.neighbors(u))
            if (vset::contains(only_b, v)) return false;
    return true;
}

std::pair<Graph, std::vector<int>> contract_sets(const Graph& g,
                                                 const std::vector<VertexSet>& sets) {
    const int n = g.vertex_count();
    std::vector<int> owner(n, -1);
    for (size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) throw std::invalid_argument("empty contraction set");
        for (int v : sets[i]) {
            if (v < 0 || v >= n) throw std::invalid_argument("contraction vertex out of range");
            if (owner[v] != -1) throw std::invalid_argument("overlapping contraction sets");
            owner[v] = static_cast<int>(i);
        }
        // connectivity check inside g
        std::vector<char> allowed(n, 0);
        for (int v : sets[i]) allowed[v] = 1;
        std::queue<int> q;
        q.push(sets[i][0]);
        std::vector<char> seen(n, 0);
        seen[sets[i][0]] = 1;
        size_t cnt = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            ++cnt;
            for (int w : g.neighbors(u))
                if (allowed[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push(w);
                }
        }
        if (cnt != sets[i].size()) throw std::invalid_argument("disconnected contraction set");
    }

    // New ids ordered by smallest original member.
    std::vector<std::pair<int, int>> order;  // (smallest member, -1-set_index) or (v, v)
    for (size_t i = 0; i < sets.size(); ++i) order.emplace_back(sets[i][0], -1 - static_cast<int>(i));
    for (int v = 0; v < n; ++v)
        if (owner[v] == -1) order.emplace_back(v, v);
    std::sort(order.begin(), order.end());

    std::vector<int> map_old_new(n, -1);
    int next = 0;
    for (auto [key, tag] : order) {
        if (tag < 0) {
            int si = -1 - tag;
            for (int v : sets[si]) map_old_new[v] = next;
        } else {
            map_old_new[tag] = next;
        }
        ++next;
    }

    Graph h(next);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (u >= v) continue;
            int a = map_old_new[u], b = map_old_new[v];
            if (a != b) h.add_edge(a, b);
        }
    return {std::move(h), std::move(map_old_new)};
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& keep) {
    std::vector<int> map_old_new(g.vertex_count(), -1);
    for (size_t i = 0; i < keep.size(); ++i) map_old_new[keep[i]] = static_cast<int>(i);
    Graph h(static_cast<int>(keep.size()));
    for (int u : keep)
        for (int v : g.neighbors(u))
            if (u < v && map_old_new[v] != -1) h.add_edge(map_old_new[u], map_old_new[v]);
    return {std::move(h), std::move(map_old_new)};
}

VertexSet all_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

std::vector<int> shortest_path_within(const Graph& g, int from, int to,
                                      const std::vector<char>& allowed) {
    if (!allowed[from] || !allowed[to]) return {};
    std::vector<int> prev(g.vertex_count(), -2);
    std::queue<int> q;
    q.push(from);
    prev[from] = -1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        if (u == to) break;
        for (int w : g.neighbors(u))
            if (allowed[w] && prev[w] == -2) {
                prev[w] = u;
                q.push(w);
            }
    }
    if (prev[to] == -2) return {};
    std::vector<int> path;
    for (int v = to; v != -1; v = prev[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace minorpack
