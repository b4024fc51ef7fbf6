#include "minorpack/oracles.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <unordered_set>

namespace minorpack {

VertexSet MinorModel::vertex_union() const {
    VertexSet out;
    for (const auto& s : branch_sets) out = vset::unite(out, s);
    return out;
}

std::optional<std::string> validate_model(const Graph& g, const Graph& h,
                                          const MinorModel& m) {
    if (static_cast<int>(m.branch_sets.size()) != h.vertex_count())
        return "branch set count differs from |V(H)|";
    for (int x = 0; x < h.vertex_count(); ++x) {
        const auto& s = m.branch_sets[x];
        if (s.empty()) return "empty branch set for h-vertex " + std::to_string(x);
        for (int v : s)
            if (v < 0 || v >= g.vertex_count()) return "branch set vertex out of range";
        if (components(induced_subgraph(g, s).first).size() != 1)
            return "branch set of h-vertex " + std::to_string(x) + " not connected";
    }
    for (int x = 0; x < h.vertex_count(); ++x)
        for (int y = x + 1; y < h.vertex_count(); ++y)
            if (!vset::disjoint(m.branch_sets[x], m.branch_sets[y]))
                return "branch sets " + std::to_string(x) + "," + std::to_string(y) + " overlap";
    for (auto [x, y] : h.edges()) {
        bool linked = false;
        for (int u : m.branch_sets[x]) {
            for (int v : g.neighbors(u))
                if (vset::contains(m.branch_sets[y], v)) {
                    linked = true;
                    break;
                }
            if (linked) break;
        }
        if (!linked)
            return "no edge between branch sets of h-edge " + std::to_string(x) + "-" +
                   std::to_string(y);
    }
    return std::nullopt;
}

std::optional<std::string> validate_bramble(const Graph& g, const Bramble& b) {
    if (b.sets.empty()) return "bramble has no sets";
    for (size_t i = 0; i < b.sets.size(); ++i) {
        if (b.sets[i].empty()) return "bramble set " + std::to_string(i) + " empty";
        for (int v : b.sets[i])
            if (v < 0 || v >= g.vertex_count()) return "bramble vertex out of range";
        if (components(induced_subgraph(g, b.sets[i]).first).size() != 1)
            return "bramble set " + std::to_string(i) + " not connected";
    }
    auto touches = [&](const VertexSet& a, const VertexSet& c) {
        if (!vset::disjoint(a, c)) return true;
        for (int u : a)
            for (int v : g.neighbors(u))
                if (vset::contains(c, v)) return true;
        return false;
    };
    for (size_t i = 0; i < b.sets.size(); ++i)
        for (size_t j = i + 1; j < b.sets.size(); ++j)
            if (!touches(b.sets[i], b.sets[j]))
                return "sets " + std::to_string(i) + " and " + std::to_string(j) +
                       " do not touch";
    return std::nullopt;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// ---------------------------------------------------------------------------
// Triangle fast path: K_3-models are exactly cycles, so minimum-size models
// are shortest cycles and hitting sets are feedback vertex sets.
// ---------------------------------------------------------------------------

namespace {

bool is_triangle_pattern(const Graph& h) {
    return h.vertex_count() == 3 && h.edge_count() == 3;
}

// Exact shortest cycle among `alive` vertices; BFS per root, candidate per
// non-tree edge, common-prefix trimmed. Deterministic.
std::optional<std::vector<int>> shortest_cycle(const Graph& g, const std::vector<char>& alive) {
    const int n = g.vertex_count();
    std::optional<std::vector<int>> best;
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        if (!alive[root]) continue;
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        q.push(root);
        dist[root] = 0;
        parent[root] = -1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (alive[w] && dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                }
        }
        for (auto [u, w] : g.edges()) {
            if (!alive[u] || !alive[w] || dist[u] < 0 || dist[w] < 0) continue;
            if (parent[u] == w || parent[w] == u) continue;  // tree edge
            if (best && dist[u] + dist[w] + 1 >= static_cast<int>(best->size())) continue;
            // Trim the common prefix of the two tree paths.
            std::vector<int> pu, pw;
            for (int x = u; x != -1; x = parent[x]) pu.push_back(x);
            for (int x = w; x != -1; x = parent[x]) pw.push_back(x);
            std::reverse(pu.begin(), pu.end());
            std::reverse(pw.begin(), pw.end());
            size_t k = 0;
            while (k + 1 < pu.size() && k + 1 < pw.size() && pu[k + 1] == pw[k + 1]) ++k;
            std::vector<int> cyc(pu.begin() + k, pu.end());
            for (size_t i = pw.size(); i-- > k + 1;) cyc.push_back(pw[i]);
            if (cyc.size() < 3) continue;  // parallel bookkeeping artifact; cannot happen
            if (!best || cyc.size() < best->size()) best = std::move(cyc);
        }
    }
    return best;
}

MinorModel triangle_model_from_cycle(const std::vector<int>& cyc) {
    MinorModel m;
    m.branch_sets.resize(3);
    size_t a = cyc.size() / 3, b = (2 * cyc.size()) / 3;
    for (size_t i = 0; i < cyc.size(); ++i)
        m.branch_sets[i < a ? 0 : (i < b ? 1 : 2)].push_back(cyc[i]);
    for (auto& s : m.branch_sets) s = vset::make(std::move(s));
    return m;
}

std::vector<char> alive_mask(int n, const VertexSet& removed) {
    std::vector<char> alive(n, 1);
    for (int v : removed) alive[v] = 0;
    return alive;
}

}  // namespace

// ---------------------------------------------------------------------------
// Generic model search (exhaustive branch and bound)
// ---------------------------------------------------------------------------

namespace {

struct ModelSearch {
    const Graph& g;
    const Graph& h;
    Budget budget;
    std::optional<int> size_cap;
    bool minimize;

    int n, t;
    std::vector<int> horder;      // h-vertices, most constrained first
    std::vector<int> owner;       // g-vertex -> position in horder, or -1
    std::vector<VertexSet> sets;  // by horder position
    int assigned_total = 0;

    std::optional<MinorModel> best;
    int best_size = 0;

    ModelSearch(const Graph& g_, const Graph& h_, const ModelSearchOptions& opts)
        : g(g_), h(h_), budget(opts.budget), size_cap(opts.size_cap),
          minimize(opts.size_cap.has_value()), n(g_.vertex_count()),
          t(h_.vertex_count()) {
        horder.resize(t);
        std::iota(horder.begin(), horder.end(), 0);
        std::stable_sort(horder.begin(), horder.end(),
                         [&](int a, int b) { return h.degree(a) > h.degree(b); });
        owner.assign(n, -1);
        sets.resize(t);
    }

    int allowance(int pos) const {
        int cap = size_cap ? *size_cap : n;
        if (best && minimize) cap = std::min(cap, best_size - 1);
        return cap - assigned_total - (t - pos - 1);
    }

    bool linked_to(const VertexSet& s, int earlier_pos) const {
        for (int u : s)
            for (int v : g.neighbors(u))
                if (owner[v] == earlier_pos) return true;
        return false;
    }

    bool constraints_ok(int pos) const {
        int x = horder[pos];
        for (int k = 0; k < pos; ++k) {
            if (!h.has_edge(x, horder[k])) continue;
            if (!linked_to(sets[pos], k)) return false;
        }
        return true;
    }

    void record() {
        MinorModel m;
        m.branch_sets.resize(t);
        for (int k = 0; k < t; ++k) m.branch_sets[horder[k]] = sets[k];
        best = std::move(m);
        best_size = assigned_total;
    }

    // Enumerate connected supersets of sets[pos]; vertices in `banned` were
    // already tried as non-members along this branch, which makes every
    // connected set appear exactly once.
    bool grow(int pos, std::vector<char>& banned) {
        budget.tick();
        if (constraints_ok(pos)) {
            if (place_next(pos + 1)) return true;
        }
        if (static_cast<int>(sets[pos].size()) >= allowance(pos)) return false;
        VertexSet cands;
        for (int u : sets[pos])
            for (int v : g.neighbors(u))
                if (owner[v] == -1 && !banned[v]) cands.push_back(v);
        cands = vset::make(std::move(cands));
        std::vector<int> local_ban;
        for (int v : cands) {
            owner[v] = pos;
            sets[pos].insert(std::lower_bound(sets[pos].begin(), sets[pos].end(), v), v);
            ++assigned_total;
            bool done = grow(pos, banned);
            --assigned_total;
            sets[pos].erase(std::find(sets[pos].begin(), sets[pos].end(), v));
            owner[v] = -1;
            if (done) return true;
            banned[v] = 1;
            local_ban.push_back(v);
        }
        for (int v : local_ban) banned[v] = 0;
        return false;
    }

    bool place_next(int pos) {
        if (pos == t) {
            record();
            return !minimize;  // keep searching for smaller when minimizing
        }
        if (allowance(pos) < 1) return false;
        for (int seed = 0; seed < n; ++seed) {
            if (owner[seed] != -1) continue;
            budget.tick();
            owner[seed] = pos;
            sets[pos] = {seed};
            ++assigned_total;
            std::vector<char> banned(n, 0);
            // Smaller unowned seeds were already tried for this set.
            for (int v = 0; v < seed; ++v)
                if (owner[v] == -1) banned[v] = 1;
            bool done = grow(pos, banned);
            --assigned_total;
            sets[pos].clear();
            owner[seed] = -1;
            if (done) return true;
        }
        return false;
    }

    std::optional<MinorModel> run() {
        if (t == 0) return MinorModel{};
        if (n < t) return std::nullopt;
        place_next(0);
        return best;
    }
};

}  // namespace

std::optional<MinorModel> find_h_model(const Graph& g, const Graph& h,
                                       const ModelSearchOptions& opts) {
    if (is_triangle_pattern(h)) {
        auto cyc = shortest_cycle(g, std::vector<char>(g.vertex_count(), 1));
        if (!cyc) return std::nullopt;
        if (opts.size_cap && static_cast<int>(cyc->size()) > *opts.size_cap)
            return std::nullopt;
        return triangle_model_from_cycle(*cyc);
    }
    ModelSearch s(g, h, opts);
    auto res = s.run();
    if (res) {
        auto err = validate_model(g, h, *res);
        if (err) throw std::logic_error("model search produced invalid model: " + *err);
        if (opts.size_cap && res->size() > *opts.size_cap) return std::nullopt;
    }
    return res;
}

bool has_h_minor(const Graph& g, const Graph& h, std::uint64_t budget) {
    if (is_triangle_pattern(h)) {
        // cycle existence: more edges than a forest allows
        int c = static_cast<int>(components(g).size());
        return g.edge_count() > g.vertex_count() - c;
    }
    ModelSearchOptions opts;
    opts.budget = budget;
    return find_h_model(g, h, opts).has_value();
}

// ---------------------------------------------------------------------------
// Exact packing number
// ---------------------------------------------------------------------------

namespace {

// Monotone minor tables over vertex subsets (n <= 16): is_model flags masks
// whose induced graph has an h-minor, is_minimal the inclusion-minimal ones.
struct MaskTables {
    std::vector<char> is_model;
    std::vector<char> is_minimal;

    MaskTables(const Graph& g, const Graph& h, Budget& budget) {
        const int n = g.vertex_count();
        const std::uint32_t full = 1u << n;
        is_model.assign(full, 0);
        is_minimal.assign(full, 0);
        const bool tri = is_triangle_pattern(h);
        for (std::uint32_t mask = 1; mask < full; ++mask) {
            budget.tick();
            bool sub = false;
            for (std::uint32_t rest = mask; rest && !sub;) {
                int v = __builtin_ctz(rest);
                rest &= rest - 1;
                sub |= is_model[mask & ~(1u << v)] != 0;
            }
            if (sub) {
                is_model[mask] = 1;
                continue;
            }
            VertexSet keep;
            for (int v = 0; v < n; ++v)
                if (mask & (1u << v)) keep.push_back(v);
            if (static_cast<int>(keep.size()) < h.vertex_count()) continue;
            auto sg = induced_subgraph(g, keep).first;
            bool model;
            if (tri) {
                int c = static_cast<int>(components(sg).size());
                model = sg.edge_count() > sg.vertex_count() - c;
            } else {
                ModelSearchOptions opts;
                opts.budget = budget.remaining();
                model = find_h_model(sg, h, opts).has_value();
            }
            if (model) {
                is_model[mask] = 1;
                is_minimal[mask] = 1;  // no proper subset was a model set
            }
        }
    }
};

}  // namespace

PackingWitness max_disjoint_models(const Graph& g, const Graph& h, std::uint64_t budget_nodes) {
    const int n = g.vertex_count();
    if (n > 16) throw BudgetExceeded();
    if (h.vertex_count() == 0) throw std::invalid_argument("empty pattern graph");
    Budget budget(budget_nodes);
    MaskTables tab(g, h, budget);

    std::vector<std::vector<std::uint32_t>> by_low(std::max(n, 1));
    const std::uint32_t full_count = 1u << n;
    for (std::uint32_t mask = 1; mask < full_count; ++mask)
        if (tab.is_minimal[mask]) by_low[__builtin_ctz(mask)].push_back(mask);

    std::vector<int> nu(full_count, -1);
    std::vector<std::uint32_t> choice(full_count, 0);
    nu[0] = 0;
    std::function<int(std::uint32_t)> solve = [&](std::uint32_t mask) -> int {
        if (nu[mask] >= 0) return nu[mask];
        budget.tick();
        int low = __builtin_ctz(mask);
        int best = solve(mask & ~(1u << low));
        std::uint32_t best_choice = 0;
        for (std::uint32_t s : by_low[low]) {
            if ((s & mask) != s) continue;
            int cand = 1 + solve(mask & ~s);
            if (cand > best) {
                best = cand;
                best_choice = s;
            }
        }
        nu[mask] = best;
        choice[mask] = best_choice;
        return best;
    };
    const std::uint32_t full = full_count - 1;
    PackingWitness out;
    out.count = n == 0 ? 0 : solve(full);

    std::uint32_t mask = full;
    while (mask && nu[mask] > 0) {
        std::uint32_t s = choice[mask];
        if (s == 0) {
            mask &= ~(1u << __builtin_ctz(mask));
            continue;
        }
        VertexSet keep;
        for (int v = 0; v < n; ++v)
            if (s & (1u << v)) keep.push_back(v);
        auto [sg, map_old_new] = induced_subgraph(g, keep);
        ModelSearchOptions opts;
        opts.budget = budget.remaining();
        auto local = find_h_model(sg, h, opts);
        if (!local) throw std::logic_error("minimal model set lost its model");
        MinorModel lifted;
        lifted.branch_sets.resize(h.vertex_count());
        for (int x = 0; x < h.vertex_count(); ++x)
            for (int v : local->branch_sets[x]) lifted.branch_sets[x].push_back(keep[v]);
        for (auto& bs : lifted.branch_sets) bs = vset::make(std::move(bs));
        out.models.push_back(std::move(lifted));
        mask &= ~s;
    }
    if (static_cast<int>(out.models.size()) != out.count)
        throw std::logic_error("packing witness reconstruction mismatch");
    return out;
}

// ---------------------------------------------------------------------------
// Exact hitting set
// ---------------------------------------------------------------------------

namespace {

struct HittingSearch {
    const Graph& g;
    const Graph& h;
    Budget budget;
    bool tri;
    int best;
    VertexSet best_set;
    std::unordered_set<std::uint64_t> visited;

    HittingSearch(const Graph& g_, const Graph& h_, std::uint64_t nodes)
        : g(g_), h(h_), budget(nodes), tri(is_triangle_pattern(h_)),
          best(g_.vertex_count() + 1) {}

    // Minimum-size model avoiding `removed`, or nothing.
    std::optional<MinorModel> model_avoiding(const VertexSet& removed) {
        if (tri) {
            auto cyc = shortest_cycle(g, alive_mask(g.vertex_count(), removed));
            if (!cyc) return std::nullopt;
            return triangle_model_from_cycle(*cyc);
        }
        VertexSet keep = vset::subtract(all_vertices(g), removed);
        auto [sg, map_old_new] = induced_subgraph(g, keep);
        ModelSearchOptions opts;
        opts.budget = budget.remaining();
        opts.size_cap = sg.vertex_count();
        auto local = find_h_model(sg, h, opts);
        if (!local) return std::nullopt;
        MinorModel lifted;
        lifted.branch_sets.resize(h.vertex_count());
        for (int x = 0; x < h.vertex_count(); ++x)
            for (int v : local->branch_sets[x]) lifted.branch_sets[x].push_back(keep[v]);
        for (auto& bs : lifted.branch_sets) bs = vset::make(std::move(bs));
        return lifted;
    }

    int disjoint_lower_bound(VertexSet removed) {
        int cnt = 0;
        for (;;) {
            auto m = model_avoiding(removed);
            if (!m) break;
            ++cnt;
            removed = vset::unite(removed, m->vertex_union());
        }
        return cnt;
    }

    void rec(const VertexSet& chosen, std::uint64_t mask) {
        if (static_cast<int>(chosen.size()) >= best) return;
        if (g.vertex_count() <= 64 && !visited.insert(mask).second) return;
        budget.tick();
        auto m = model_avoiding(chosen);
        if (!m) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
            return;
        }
        if (static_cast<int>(chosen.size()) + disjoint_lower_bound(chosen) >= best) return;
        for (int v : m->vertex_union())
            rec(vset::unite(chosen, {v}), mask | (1ULL << (v & 63)));
    }
};

}  // namespace

HittingWitness min_model_hitting_set(const Graph& g, const Graph& h,
                                     std::uint64_t budget_nodes) {
    HittingSearch s(g, h, budget_nodes);
    s.rec({}, 0);
    return HittingWitness{s.best, s.best_set};
}

// ---------------------------------------------------------------------------
// Treewidth
// ---------------------------------------------------------------------------

int treewidth_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 16) throw BudgetExceeded();
    if (n == 0) return -1;
    const std::uint32_t full = 1u << n;
    // q(S, v): vertices outside S and v reachable from v through S.
    auto q_value = [&](std::uint32_t s, int v) {
        std::uint32_t seen = 1u << v;
        std::uint32_t frontier = 1u << v;
        std::uint32_t reach_out = 0;
        while (frontier) {
            int u = __builtin_ctz(frontier);
            frontier &= frontier - 1;
            for (int w : g.neighbors(u)) {
                std::uint32_t bit = 1u << w;
                if (seen & bit) continue;
                seen |= bit;
                if (s & bit)
                    frontier |= bit;
                else
                    reach_out |= bit;
            }
        }
        return __builtin_popcount(reach_out);
    };
    std::vector<std::int8_t> dp(full, 0);
    for (std::uint32_t s = 1; s < full; ++s) {
        int bestv = n;
        for (std::uint32_t rest = s; rest;) {
            int v = __builtin_ctz(rest);
            rest &= rest - 1;
            std::uint32_t prev = s & ~(1u << v);
            int cand = std::max<int>(dp[prev], q_value(prev, v));
            bestv = std::min(bestv, cand);
        }
        dp[s] = static_cast<std::int8_t>(bestv);
    }
    return dp[full - 1];
}

// ---------------------------------------------------------------------------
// Bramble order
// ---------------------------------------------------------------------------

int bramble_order_exact(const Graph& g, const Bramble& b, std::uint64_t budget_nodes) {
    if (auto err = validate_bramble(g, b))
        throw std::invalid_argument("invalid bramble: " + *err);
    Budget budget(budget_nodes);
    int best = g.vertex_count() + 1;
    std::function<void(VertexSet)> rec = [&](VertexSet chosen) {
        budget.tick();
        if (static_cast<int>(chosen.size()) >= best) return;
        const VertexSet* unhit = nullptr;
        for (const auto& s : b.sets)
            if (vset::disjoint(s, chosen))
                if (!unhit || s.size() < unhit->size()) unhit = &s;
        if (!unhit) {
            best = static_cast<int>(chosen.size());
            return;
        }
        for (int v : *unhit) rec(vset::unite(chosen, {v}));
    };
    rec({});
    return best;
}

bool bramble_of_order_exists(const Graph& g, int t, std::uint64_t budget_nodes) {
    const int n = g.vertex_count();
    if (t <= 0) return n > 0;
    if (t > n) return false;  // V(G) hits everything
    if (t == 1) return true;
    Budget budget(budget_nodes);

    // A bramble of order >= t exists iff for every candidate hitting set W of
    // size t-1 some component of G-W can be chosen, all choices pairwise
    // touching. Components are the inclusion-maximal candidates, so this
    // search is exhaustive.
    std::vector<VertexSet> ws;
    VertexSet cur;
    std::function<void(int)> gen = [&](int from) {
        if (static_cast<int>(cur.size()) == t - 1) {
            ws.push_back(cur);
            return;
        }
        for (int v = from; v < n; ++v) {
            cur.push_back(v);
            gen(v + 1);
            cur.pop_back();
        }
    };
    gen(0);

    std::vector<std::vector<VertexSet>> options(ws.size());
    for (size_t i = 0; i < ws.size(); ++i) {
        options[i] = components(g, ws[i]);
        if (options[i].empty()) return false;
    }
    std::vector<int> order(ws.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return options[a].size() < options[b].size(); });

    auto touches = [&](const VertexSet& a, const VertexSet& c) {
        if (!vset::disjoint(a, c)) return true;
        for (int u : a)
            for (int v : g.neighbors(u))
                if (vset::contains(c, v)) return true;
        return false;
    };

    std::vector<VertexSet> chosen;
    std::function<bool(size_t)> solve = [&](size_t idx) -> bool {
        budget.tick();
        if (idx == order.size()) return true;
        const auto& w = ws[order[idx]];
        for (const auto& c : chosen)
            if (vset::disjoint(c, w)) return solve(idx + 1);  // already satisfied
        for (const auto& comp : options[order[idx]]) {
            bool ok = true;
            for (const auto& c : chosen)
                if (!touches(comp, c)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(comp);
            if (solve(idx + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return solve(0);
}

// ---------------------------------------------------------------------------
// Erdos-Szekeres
// ---------------------------------------------------------------------------

namespace {

// Longest monotone subsequence, earliest-predecessor reconstruction.
std::vector<int> longest_monotone(const std::vector<int>& seq, bool increasing) {
    const int n = static_cast<int>(seq.size());
    std::vector<int> len(n, 1), prev(n, -1);
    auto better = [&](int a, int b) { return increasing ? a < b : a > b; };
    int best_end = -1, best_len = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j)
            if (better(seq[j], seq[i]) && len[j] + 1 > len[i]) {
                len[i] = len[j] + 1;
                prev[i] = j;
            }
        if (len[i] > best_len) {
            best_len = len[i];
            best_end = i;
        }
    }
    std::vector<int> out;
    for (int i = best_end; i != -1; i = prev[i]) out.push_back(seq[i]);
    std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace

EsResult erdos_szekeres(const std::vector<int>& seq, int p, int q) {
    if (p < 1 || q < 1) throw std::invalid_argument("p, q must be positive");
    {
        std::vector<int> sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("sequence entries must be distinct");
    }
    auto inc = longest_monotone(seq, true);
    if (static_cast<int>(inc.size()) >= p) {
        inc.resize(p);
        return {EsResult::Kind::Increasing, std::move(inc)};
    }
    auto dec = longest_monotone(seq, false);
    if (static_cast<int>(dec.size()) >= q) {
        dec.resize(q);
        return {EsResult::Kind::Decreasing, std::move(dec)};
    }
    return {EsResult::Kind::TooShort, {}};
}

// ---------------------------------------------------------------------------
// Small clique models
// ---------------------------------------------------------------------------

std::optional<MinorModel> small_clique_model(const Graph& g, int p, int size_budget,
                                             std::uint64_t budget_nodes) {
    if (p <= 5) {
        ModelSearchOptions opts;
        opts.size_cap = size_budget;
        opts.budget = budget_nodes;
        return find_h_model(g, complete_graph(p), opts);
    }
    // Greedy density contraction: merge the edge with most common neighbors,
    // checking for a p-clique of bags each round. Sound (candidates are
    // re-validated), incomplete.
    Budget budget(budget_nodes);
    std::vector<VertexSet> bags(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) bags[v] = {v};
    Graph cur = g;
    for (;;) {
        budget.tick();
        std::function<bool(int, std::vector<int>&)> clique = [&](int from,
                                                                 std::vector<int>& acc) {
            if (static_cast<int>(acc.size()) == p) return true;
            for (int v = from; v < cur.vertex_count(); ++v) {
                bool ok = true;
                for (int u : acc)
                    if (!cur.has_edge(u, v)) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                acc.push_back(v);
                if (clique(v + 1, acc)) return true;
                acc.pop_back();
            }
            return false;
        };
        std::vector<int> acc;
        if (clique(0, acc)) {
            MinorModel m;
            int total = 0;
            for (int v : acc) {
                m.branch_sets.push_back(bags[v]);
                total += static_cast<int>(bags[v].size());
            }
            if (total <= size_budget && !validate_model(g, complete_graph(p), m)) return m;
        }
        int bu = -1, bv = -1, score = -1;
        for (auto [u, v] : cur.edges()) {
            int common = 0;
            for (int w : cur.neighbors(u))
                if (cur.has_edge(v, w)) ++common;
            if (common > score) {
                score = common;
                bu = u;
                bv = v;
            }
        }
        if (bu < 0) return std::nullopt;
        auto [next, map_old_new] = contract_sets(cur, {{bu, bv}});
        std::vector<VertexSet> nbags(next.vertex_count());
        for (int v = 0; v < cur.vertex_count(); ++v)
            nbags[map_old_new[v]] = vset::unite(nbags[map_old_new[v]], bags[v]);
        bags = std::move(nbags);
        cur = std::move(next);
        if (cur.vertex_count() < p) return std::nullopt;
    }
}

// ---------------------------------------------------------------------------
// Cycles of length 0 mod m
// ---------------------------------------------------------------------------

namespace {

// Layered closed-walk scan; failing it soundly rules out any such cycle.
bool closed_walk_possible(const Graph& g, int m) {
    const int n = g.vertex_count();
    for (int s = 0; s < n; ++s) {
        std::vector<char> seen(static_cast<size_t>(n) * m, 0);
        std::queue<std::pair<int, int>> q;
        for (int w : g.neighbors(s)) {
            int r = 1 % m;
            if (!seen[static_cast<size_t>(w) * m + r]) {
                seen[static_cast<size_t>(w) * m + r] = 1;
                q.emplace(w, r);
            }
        }
        while (!q.empty()) {
            auto [v, r] = q.front();
            q.pop();
            int nr = (r + 1) % m;
            for (int w : g.neighbors(v)) {
                if (w == s) {
                    if (nr == 0 && r + 1 >= 2) return true;
                    continue;
                }
                if (!seen[static_cast<size_t>(w) * m + nr]) {
                    seen[static_cast<size_t>(w) * m + nr] = 1;
                    q.emplace(w, nr);
                }
            }
        }
    }
    return false;
}

}  // namespace

std::optional<Path> find_mod_m_cycle(const Graph& g, int m, std::uint64_t budget_nodes) {
    if (m < 1) throw std::invalid_argument("m must be >= 1");
    const int n = g.vertex_count();
    if (!closed_walk_possible(g, m)) return std::nullopt;
    Budget budget(budget_nodes);
    // Exhaustive simple-cycle search rooted at the cycle's smallest vertex.
    std::vector<int> stack;
    std::vector<char> on_stack(n, 0);
    std::optional<Path> found;
    std::function<bool(int, int)> dfs = [&](int root, int v) -> bool {
        budget.tick();
        for (int w : g.neighbors(v)) {
            if (w == root && stack.size() >= 3 && stack.size() % m == 0) {
                found = Path{stack};
                return true;
            }
            if (w <= root || on_stack[w]) continue;
            stack.push_back(w);
            on_stack[w] = 1;
            if (dfs(root, w)) return true;
            on_stack[w] = 0;
            stack.pop_back();
        }
        return false;
    };
    for (int root = 0; root < n && !found; ++root) {
        stack = {root};
        std::fill(on_stack.begin(), on_stack.end(), 0);
        on_stack[root] = 1;
        dfs(root, root);
    }
    return found;
}

}  // namespace minorpack
