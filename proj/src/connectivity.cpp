#include "minorpack/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace minorpack {

std::vector<std::pair<int, int>> max_bipartite_matching(
    int n_left, int n_right, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<int>> adj(n_left);
    for (auto [l, r] : edges) {
        if (l < 0 || l >= n_left || r < 0 || r >= n_right)
            throw std::invalid_argument("matching edge out of range");
        adj[l].push_back(r);
    }
    for (auto& a : adj) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
    }
    std::vector<int> match_r(n_right, -1), match_l(n_left, -1);
    std::vector<char> used(n_right, 0);
    // Kuhn's augmenting search; left vertices tried in index order keeps the
    // result deterministic.
    std::function<bool(int)> try_kuhn = [&](int l) -> bool {
        for (int r : adj[l]) {
            if (used[r]) continue;
            used[r] = 1;
            if (match_r[r] == -1 || try_kuhn(match_r[r])) {
                match_r[r] = l;
                match_l[l] = r;
                return true;
            }
        }
        return false;
    };
    for (int l = 0; l < n_left; ++l) {
        std::fill(used.begin(), used.end(), 0);
        try_kuhn(l);
    }
    std::vector<std::pair<int, int>> out;
    for (int l = 0; l < n_left; ++l)
        if (match_l[l] != -1) out.emplace_back(l, match_l[l]);
    return out;
}

namespace {

// Split digraph for unit vertex capacities: node v becomes v_in = 2v and
// v_out = 2v+1 joined by a capacity-1 arc. Edge, source, and sink arcs get
// capacity n+1 so the min cut consists of vertex arcs only.
struct SplitFlow {
    int n;
    std::vector<std::vector<int>> arcs;  // arc ids per node
    std::vector<int> head, cap, init;
    int source, sink;

    explicit SplitFlow(const Graph& g) : n(g.vertex_count()) {
        arcs.resize(2 * n + 2);
        source = 2 * n;
        sink = 2 * n + 1;
        for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
        const int big = n + 1;
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, big);
            add_arc(2 * v + 1, 2 * u, big);
        }
    }

    int add_arc(int from, int to, int c) {
        int id = static_cast<int>(head.size());
        arcs[from].push_back(id);
        head.push_back(to);
        cap.push_back(c);
        init.push_back(c);
        arcs[to].push_back(id + 1);
        head.push_back(from);
        cap.push_back(0);
        init.push_back(0);
        return id;
    }

    int flow_on(int arc) const { return init[arc] - cap[arc]; }

    bool augment() {
        std::vector<int> via(arcs.size(), -1);
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (u == sink) break;
            for (int a : arcs[u]) {
                if (cap[a] <= 0) continue;
                int w = head[a];
                if (seen[w]) continue;
                seen[w] = 1;
                via[w] = a;
                q.push(w);
            }
        }
        if (!seen[sink]) return false;
        for (int v = sink; v != source;) {
            int a = via[v];
            cap[a] -= 1;
            cap[a ^ 1] += 1;
            v = head[a ^ 1];
        }
        return true;
    }

    std::vector<char> residual_reachable() const {
        std::vector<char> seen(arcs.size(), 0);
        std::queue<int> q;
        q.push(source);
        seen[source] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int a : arcs[u])
                if (cap[a] > 0 && !seen[head[a]]) {
                    seen[head[a]] = 1;
                    q.push(head[a]);
                }
        }
        return seen;
    }
};

}  // namespace

MengerResult menger(const Graph& g, const VertexSet& sources, const VertexSet& sinks) {
    for (int v : sources)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("source out of range");
    for (int v : sinks)
        if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("sink out of range");

    SplitFlow f(g);
    const int big = g.vertex_count() + 1;
    std::vector<int> src_arc(g.vertex_count(), -1), sink_arc(g.vertex_count(), -1);
    for (int s : sources) src_arc[s] = f.add_arc(f.source, 2 * s, big);
    for (int t : sinks) sink_arc[t] = f.add_arc(2 * t + 1, f.sink, big);

    int flow = 0;
    while (f.augment()) ++flow;

    // Peel flow into paths. Each vertex arc carries at most one unit, so the
    // walks below are vertex-disjoint; leftover circulation (if any) is never
    // entered from a source arc.
    MengerResult res;
    std::vector<int> remaining(f.head.size());
    for (size_t a = 0; a < f.head.size(); ++a)
        remaining[a] = (a & 1) ? 0 : f.flow_on(static_cast<int>(a));
    for (int s : sources) {
        while (src_arc[s] != -1 && remaining[src_arc[s]] > 0) {
            remaining[src_arc[s]] -= 1;
            Path p;
            int v = s;
            for (;;) {
                remaining[2 * v] -= 1;  // vertex arc id == 2*v by construction order
                p.verts.push_back(v);
                if (sink_arc[v] != -1 && remaining[sink_arc[v]] > 0) {
                    remaining[sink_arc[v]] -= 1;
                    break;
                }
                int next = -1;
                for (int a : f.arcs[2 * v + 1]) {
                    if (a & 1) continue;
                    if (remaining[a] <= 0) continue;
                    int w = f.head[a];
                    if (w == f.sink || (w & 1)) continue;
                    remaining[a] -= 1;
                    next = w / 2;
                    break;
                }
                if (next == -1) throw std::logic_error("flow decomposition failed");
                v = next;
            }
            res.paths.push_back(std::move(p));
        }
    }

    // Min vertex cut: v whose in-copy is residual-reachable but out-copy is not.
    auto seen = f.residual_reachable();
    for (int v = 0; v < g.vertex_count(); ++v)
        if (seen[2 * v] && !seen[2 * v + 1]) res.separator.push_back(v);

    if (static_cast<int>(res.separator.size()) != flow ||
        static_cast<int>(res.paths.size()) != flow)
        throw std::logic_error("menger bookkeeping mismatch");
    return res;
}

}  // namespace minorpack
