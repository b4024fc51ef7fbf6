#include "minorpack/orchard.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

#include "json.hpp"

namespace minorpack {

VertexSet Orchard::vertices() const {
    VertexSet out;
    for (const auto& p : hpaths) out = vset::unite(out, vset::make(p.verts));
    for (const auto& t : vtrees) out = vset::unite(out, t.verts);
    return out;
}

namespace {

OrchardReport fail(std::string clause, std::string message, VertexSet witnesses = {}) {
    return OrchardReport{false, std::move(clause), std::move(message), std::move(witnesses)};
}

// Intersection of a path and a tree as a subgraph: common vertices plus
// common edges; connectivity checked by union-find.
struct PathTreeMeet {
    VertexSet verts;
    bool connected;
};

PathTreeMeet meet(const Path& p, const Tree& t) {
    PathTreeMeet out;
    out.verts = vset::intersect(vset::make(p.verts), t.verts);
    if (out.verts.empty()) {
        out.connected = false;
        return out;
    }
    std::map<int, int> idx;
    for (size_t i = 0; i < out.verts.size(); ++i) idx[out.verts[i]] = static_cast<int>(i);
    std::vector<int> parent(out.verts.size());
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (size_t i = 0; i + 1 < p.verts.size(); ++i) {
        int u = p.verts[i], v = p.verts[i + 1];
        auto iu = idx.find(u), iv = idx.find(v);
        if (iu == idx.end() || iv == idx.end()) continue;
        std::pair<int, int> e{std::min(u, v), std::max(u, v)};
        if (!std::binary_search(t.edges.begin(), t.edges.end(), e)) continue;
        parent[find(iu->second)] = find(iv->second);
    }
    int root = find(0);
    out.connected = true;
    for (size_t i = 1; i < out.verts.size(); ++i)
        if (find(static_cast<int>(i)) != root) out.connected = false;
    return out;
}

}  // namespace

OrchardReport validate_orchard(const Graph& g, const Orchard& o) {
    if (o.hpaths.empty()) return fail("paths", "orchard needs at least one horizontal path");
    for (int i = 0; i < o.num_paths(); ++i)
        if (!path_valid(g, o.hpaths[i]))
            return fail("path-valid", "horizontal path " + std::to_string(i) + " invalid");
    for (int j = 0; j < o.num_trees(); ++j)
        if (!tree_valid(g, o.vtrees[j]))
            return fail("tree-valid", "vertical tree " + std::to_string(j) + " invalid");
    for (int i = 0; i < o.num_paths(); ++i)
        for (int k = i + 1; k < o.num_paths(); ++k) {
            auto shared = vset::intersect(vset::make(o.hpaths[i].verts),
                                          vset::make(o.hpaths[k].verts));
            if (!shared.empty())
                return fail("paths-disjoint",
                            "paths " + std::to_string(i) + "," + std::to_string(k) + " share vertices",
                            shared);
        }
    for (int j = 0; j < o.num_trees(); ++j)
        for (int k = j + 1; k < o.num_trees(); ++k) {
            auto shared = vset::intersect(o.vtrees[j].verts, o.vtrees[k].verts);
            if (!shared.empty())
                return fail("trees-disjoint",
                            "trees " + std::to_string(j) + "," + std::to_string(k) + " share vertices",
                            shared);
        }
    for (int i = 0; i < o.num_paths(); ++i)
        for (int j = 0; j < o.num_trees(); ++j) {
            auto m = meet(o.hpaths[i], o.vtrees[j]);
            if (m.verts.empty())
                return fail("intersection",
                            "path " + std::to_string(i) + " misses tree " + std::to_string(j));
            if (!m.connected)
                return fail("intersection",
                            "path " + std::to_string(i) + " meets tree " + std::to_string(j) +
                                " disconnectedly",
                            m.verts);
        }
    VertexSet on_paths;
    for (const auto& p : o.hpaths) on_paths = vset::unite(on_paths, vset::make(p.verts));
    for (int j = 0; j < o.num_trees(); ++j) {
        const Tree& t = o.vtrees[j];
        for (int v : t.verts)
            if (t.degree_in_tree(v) == 1 && !vset::contains(on_paths, v))
                return fail("leaves-on-paths",
                            "leaf " + std::to_string(v) + " of tree " + std::to_string(j) +
                                " off every horizontal path",
                            {v});
    }
    return OrchardReport{};
}

std::vector<Section> sections(const Graph& g, const Orchard& o) {
    auto rep = validate_orchard(g, o);
    if (!rep.ok) throw std::invalid_argument("invalid orchard: " + rep.message);

    std::map<int, int> tree_of;  // vertex -> tree index
    for (int j = 0; j < o.num_trees(); ++j)
        for (int v : o.vtrees[j].verts) tree_of[v] = j;
    VertexSet on_paths;
    for (const auto& p : o.hpaths) on_paths = vset::unite(on_paths, vset::make(p.verts));

    std::vector<Section> out;
    // Horizontal: maximal same-tree runs are the path/tree intersections,
    // maximal tree-free runs the gaps.
    for (int i = 0; i < o.num_paths(); ++i) {
        const auto& pv = o.hpaths[i].verts;
        int gap_count = 0;
        size_t k = 0;
        while (k < pv.size()) {
            auto it = tree_of.find(pv[k]);
            int tag = it == tree_of.end() ? -1 : it->second;
            size_t e = k;
            while (e + 1 < pv.size()) {
                auto jt = tree_of.find(pv[e + 1]);
                int tag2 = jt == tree_of.end() ? -1 : jt->second;
                if (tag2 != tag) break;
                ++e;
            }
            Section s;
            s.kind = Section::Kind::Horizontal;
            s.verts.assign(pv.begin() + k, pv.begin() + e + 1);
            s.path_index = i;
            if (tag >= 0)
                s.tree_index = tag;
            else
                s.component_index = gap_count++;
            out.push_back(std::move(s));
            k = e + 1;
        }
    }
    // Vertical: branch vertices off the paths, then path components of the
    // remainder of each tree.
    for (int j = 0; j < o.num_trees(); ++j) {
        const Tree& t = o.vtrees[j];
        VertexSet branch;
        for (int v : t.verts)
            if (!vset::contains(on_paths, v) && t.degree_in_tree(v) >= 3) branch.push_back(v);
        for (int v : branch) {
            Section s;
            s.kind = Section::Kind::Vertical;
            s.verts = {v};
            s.tree_index = j;
            s.branch_vertex = true;
            out.push_back(std::move(s));
        }
        // remaining off-path, non-branch vertices form disjoint paths in t
        VertexSet rest;
        for (int v : t.verts)
            if (!vset::contains(on_paths, v) && !vset::contains(branch, v)) rest.push_back(v);
        if (rest.empty()) continue;
        std::map<int, std::vector<int>> adj;
        for (auto [u, v] : t.edges)
            if (vset::contains(rest, u) && vset::contains(rest, v)) {
                adj[u].push_back(v);
                adj[v].push_back(u);
            }
        VertexSet seen;
        int comp_count = 0;
        for (int v : rest) {
            if (vset::contains(seen, v)) continue;
            // collect the component, then walk it as a path from an endpoint
            VertexSet comp;
            std::queue<int> q;
            q.push(v);
            comp.push_back(v);
            seen = vset::unite(seen, {v});
            while (!q.empty()) {
                int u = q.front();
                q.pop();
                for (int w : adj[u])
                    if (!vset::contains(seen, w)) {
                        seen = vset::unite(seen, {w});
                        comp.push_back(w);
                        q.push(w);
                    }
            }
            comp = vset::make(std::move(comp));
            int start = comp[0];
            for (int u : comp)
                if (adj[u].size() <= 1) {
                    start = u;
                    break;
                }
            std::vector<int> walk{start};
            int prev = -1, cur = start;
            while (static_cast<int>(walk.size()) < static_cast<int>(comp.size())) {
                int next = -1;
                for (int w : adj[cur])
                    if (w != prev) {
                        next = w;
                        break;
                    }
                prev = cur;
                cur = next;
                walk.push_back(cur);
            }
            Section s;
            s.kind = Section::Kind::Vertical;
            s.verts = std::move(walk);
            s.tree_index = j;
            s.component_index = comp_count++;
            out.push_back(std::move(s));
        }
    }
    return out;
}

VertexSet Myriapod::vertices() const {
    VertexSet out = vset::make(spine.verts);
    for (const auto& l : legs) out = vset::unite(out, vset::make(l.path.verts));
    return out;
}

std::optional<std::string> validate_myriapod(const Graph& g, const Myriapod& m) {
    if (!path_valid(g, m.spine)) return "spine is not a path";
    std::map<int, int> deg;
    for (int v : m.spine.verts) deg[v] = 0;
    auto bump = [&](int u, int v) {
        ++deg[u];
        ++deg[v];
    };
    for (size_t i = 0; i + 1 < m.spine.verts.size(); ++i)
        bump(m.spine.verts[i], m.spine.verts[i + 1]);
    VertexSet spine_set = vset::make(m.spine.verts);
    for (const auto& leg : m.legs) {
        if (leg.path.empty()) return "empty leg";
        if (!path_valid(g, leg.path)) return "leg is not a path";
        if (!vset::contains(spine_set, leg.attach)) return "leg attach off spine";
        if (!g.has_edge(leg.attach, leg.path.verts.front())) return "leg not adjacent to attach";
        for (int v : leg.path.verts) {
            if (vset::contains(spine_set, v)) return "leg re-enters spine";
            deg[v] = 0;
        }
        bump(leg.attach, leg.path.verts.front());
        for (size_t i = 0; i + 1 < leg.path.verts.size(); ++i)
            bump(leg.path.verts[i], leg.path.verts[i + 1]);
    }
    for (auto [v, d] : deg) {
        if (d > 3) return "vertex " + std::to_string(v) + " has degree " + std::to_string(d);
        if (d == 3 && !vset::contains(spine_set, v))
            return "degree-3 vertex " + std::to_string(v) + " off spine";
    }
    // legs pairwise disjoint
    VertexSet seen;
    for (const auto& leg : m.legs) {
        for (int v : leg.path.verts) {
            if (vset::contains(seen, v)) return "legs overlap at " + std::to_string(v);
            seen.push_back(v);
            std::sort(seen.begin(), seen.end());
        }
    }
    return std::nullopt;
}

std::vector<Myriapod> myriapod_cover(const Graph& g, const Orchard& o) {
    auto rep = validate_orchard(g, o);
    if (!rep.ok) throw std::invalid_argument("invalid orchard: " + rep.message);
    std::vector<Myriapod> out;
    const int a = o.num_paths();
    if (a == 1) {
        Myriapod m;
        m.spine = o.hpaths[0];
        m.pair_i = 0;
        m.pair_j = 0;
        out.push_back(std::move(m));
        return out;
    }
    for (int i = 0; i < a; ++i) {
        std::vector<char> on_pi(g.vertex_count(), 0);
        for (int v : o.hpaths[i].verts) on_pi[v] = 1;
        for (int j = 0; j < a; ++j) {
            if (i == j) continue;
            Myriapod m;
            m.spine = o.hpaths[i];
            m.pair_i = i;
            m.pair_j = j;
            std::vector<char> on_pj(g.vertex_count(), 0);
            for (int v : o.hpaths[j].verts) on_pj[v] = 1;
            for (const Tree& t : o.vtrees) {
                // unique tree path from t's subpath on P_i to its subpath on
                // P_j, interior clear of both
                std::map<int, std::vector<int>> adj;
                for (auto [u, v] : t.edges) {
                    adj[u].push_back(v);
                    adj[v].push_back(u);
                }
                std::map<int, int> prev;
                std::queue<int> q;
                for (int v : t.verts)
                    if (on_pi[v]) {
                        prev[v] = -1;
                        q.push(v);
                    }
                int hit = -1;
                while (!q.empty() && hit < 0) {
                    int u = q.front();
                    q.pop();
                    if (on_pj[u]) {
                        hit = u;
                        break;
                    }
                    for (int w : adj[u])
                        if (!prev.count(w)) {
                            prev[w] = u;
                            q.push(w);
                        }
                }
                if (hit < 0) throw std::logic_error("tree misses a horizontal path");
                std::vector<int> connector;
                for (int v = hit; v != -1; v = prev[v]) connector.push_back(v);
                std::reverse(connector.begin(), connector.end());
                // connector[0] on P_i; the rest is the leg
                if (connector.size() >= 2) {
                    MyriapodLeg leg;
                    leg.attach = connector[0];
                    leg.path.verts.assign(connector.begin() + 1, connector.end());
                    m.legs.push_back(std::move(leg));
                }
            }
            out.push_back(std::move(m));
        }
    }
    return out;
}

std::vector<int> tree_order_along_path(const Orchard& o, int path_index) {
    std::map<int, int> tree_of;
    for (int j = 0; j < o.num_trees(); ++j)
        for (int v : o.vtrees[j].verts) tree_of[v] = j;
    std::vector<int> order;
    std::vector<char> emitted(o.num_trees(), 0);
    for (int v : o.hpaths[path_index].verts) {
        auto it = tree_of.find(v);
        if (it == tree_of.end()) continue;
        if (!emitted[it->second]) {
            emitted[it->second] = 1;
            order.push_back(it->second);
        }
    }
    return order;
}

bool is_tame(const Graph& g, const Orchard& o) {
    auto rep = validate_orchard(g, o);
    if (!rep.ok) return false;
    if (o.num_trees() <= 1 || o.num_paths() == 1) return true;
    auto ref = tree_order_along_path(o, 0);
    auto rev = ref;
    std::reverse(rev.begin(), rev.end());
    for (int i = 1; i < o.num_paths(); ++i) {
        auto ord = tree_order_along_path(o, i);
        if (ord != ref && ord != rev) return false;
    }
    return true;
}

BigInt f_tame(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("f_tame needs a,b >= 1");
    if (a > 40) throw std::invalid_argument("f_tame exponent overflow guard");
    return big_pow(BigInt(b), 1ULL << (a - 1));
}

namespace {

// Iteratively delete tree leaves that lie on none of the kept paths.
Tree prune_tree_to_paths(const Tree& t, const VertexSet& kept_path_verts) {
    Tree cur = t;
    for (;;) {
        bool changed = false;
        for (int v : cur.verts) {
            int d = cur.degree_in_tree(v);
            bool on_path = vset::contains(kept_path_verts, v);
            if ((d == 1 || (d == 0 && cur.verts.size() > 1)) && !on_path) {
                Tree next;
                next.verts = vset::subtract(cur.verts, {v});
                for (auto e : cur.edges)
                    if (e.first != v && e.second != v) next.edges.push_back(e);
                cur = std::move(next);
                changed = true;
                break;
            }
        }
        if (!changed) return cur;
    }
}

// Recursive tame selection; returns indices into o.vtrees. `o` must be valid
// for its own path set.
std::vector<int> tame_select(const Graph& g, const Orchard& o, int b_target) {
    const int a = o.num_paths();
    if (a == 1) {
        auto order = tree_order_along_path(o, 0);
        if (static_cast<int>(order.size()) < b_target)
            throw std::invalid_argument("too few trees for tame extraction");
        order.resize(b_target);
        std::sort(order.begin(), order.end());
        return order;
    }
    // Drop the last path, prune trees onto the remaining ones.
    Orchard reduced;
    reduced.hpaths.assign(o.hpaths.begin(), o.hpaths.end() - 1);
    VertexSet kept;
    for (const auto& p : reduced.hpaths) kept = vset::unite(kept, vset::make(p.verts));
    for (const auto& t : o.vtrees) reduced.vtrees.push_back(prune_tree_to_paths(t, kept));

    long long inner_target = static_cast<long long>(b_target) * b_target;
    if (inner_target > reduced.num_trees())
        throw std::invalid_argument("too few trees for tame extraction");
    std::vector<int> inner = tame_select(g, reduced, static_cast<int>(inner_target));

    // Rank the chosen trees by their order along the first path, then apply
    // the monotone-subsequence step along the dropped path.
    Orchard inner_orch;
    inner_orch.hpaths = reduced.hpaths;
    for (int idx : inner) inner_orch.vtrees.push_back(o.vtrees[idx]);
    auto p1_order = tree_order_along_path(inner_orch, 0);  // positions into `inner`
    std::vector<int> rank_of(inner.size());                // local tree -> rank along P1
    for (size_t r = 0; r < p1_order.size(); ++r) rank_of[p1_order[r]] = static_cast<int>(r);

    Orchard last_orch;
    last_orch.hpaths = {o.hpaths.back()};
    for (int idx : inner) last_orch.vtrees.push_back(o.vtrees[idx]);
    auto last_order = tree_order_along_path(last_orch, 0);
    if (last_order.size() != inner.size())
        throw std::logic_error("tree missing along final path");
    std::vector<int> seq;
    for (int local : last_order) seq.push_back(rank_of[local]);

    auto es = erdos_szekeres(seq, b_target, b_target);
    if (es.kind == EsResult::Kind::TooShort)
        throw std::logic_error("monotone subsequence missing despite size bound");
    std::vector<int> chosen;
    // map ranks back to original indices via p1_order
    for (int r : es.subsequence) chosen.push_back(inner[p1_order[r]]);
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

}  // namespace

Orchard tame_suborchard(const Graph& g, const Orchard& o, int b_target) {
    auto rep = validate_orchard(g, o);
    if (!rep.ok) throw std::invalid_argument("invalid orchard: " + rep.message);
    if (b_target < 1) throw std::invalid_argument("b_target must be >= 1");
    BigInt need = f_tame(o.num_paths(), b_target);
    if (BigInt(o.num_trees()) < need)
        throw std::invalid_argument("too few trees: need " + to_string(need));
    auto idx = tame_select(g, o, b_target);
    Orchard out;
    out.hpaths = o.hpaths;
    for (int i : idx) out.vtrees.push_back(o.vtrees[i]);
    if (!is_tame(g, out)) throw std::logic_error("tame extraction produced wild orchard");
    return out;
}

Bramble orchard_bramble(const Graph& g, const Orchard& o) {
    auto rep = validate_orchard(g, o);
    if (!rep.ok) throw std::invalid_argument("invalid orchard: " + rep.message);
    Bramble b;
    for (const auto& t : o.vtrees)
        for (const auto& p : o.hpaths)
            b.sets.push_back(vset::unite(t.verts, vset::make(p.verts)));
    return b;
}

Orchard orchard_from_path(const Path& p) {
    Orchard o;
    o.hpaths = {p};
    for (int v : p.verts) o.vtrees.push_back(Tree::singleton(v));
    return o;
}

std::pair<Graph, Orchard> grid_with_orchard(int rows, int cols) {
    Graph g(rows * cols);
    auto id = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
        }
    Orchard o;
    for (int r = 0; r < rows; ++r) {
        Path p;
        for (int c = 0; c < cols; ++c) p.verts.push_back(id(r, c));
        o.hpaths.push_back(std::move(p));
    }
    for (int c = 0; c < cols; ++c) {
        Path col;
        for (int r = 0; r < rows; ++r) col.verts.push_back(id(r, c));
        o.vtrees.push_back(Tree::from_path(col));
    }
    return {std::move(g), std::move(o)};
}

std::string orchard_to_json(const Orchard& o) {
    nlohmann::json j;
    j["paths"] = nlohmann::json::array();
    for (const auto& p : o.hpaths) j["paths"].push_back(p.verts);
    j["trees"] = nlohmann::json::array();
    for (const auto& t : o.vtrees) {
        nlohmann::json jt;
        jt["vertices"] = t.verts;
        jt["edges"] = nlohmann::json::array();
        for (auto [u, v] : t.edges) jt["edges"].push_back({u, v});
        j["trees"].push_back(std::move(jt));
    }
    return j.dump(2);
}

Orchard orchard_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    Orchard o;
    for (const auto& jp : j.at("paths")) {
        Path p;
        for (const auto& v : jp) p.verts.push_back(v.get<int>());
        o.hpaths.push_back(std::move(p));
    }
    for (const auto& jt : j.at("trees")) {
        Tree t;
        for (const auto& v : jt.at("vertices")) t.verts.push_back(v.get<int>());
        t.verts = vset::make(std::move(t.verts));
        for (const auto& e : jt.at("edges")) {
            int u = e.at(0).get<int>(), v = e.at(1).get<int>();
            t.edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        std::sort(t.edges.begin(), t.edges.end());
        o.vtrees.push_back(std::move(t));
    }
    return o;
}

}  // namespace minorpack
