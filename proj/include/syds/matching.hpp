#pragma once

// Exact matching on general (non-bipartite) graphs:
//   - maximum-cardinality matching via blossom contraction,
//   - maximum-weight matching via the O(n^3) primal-dual blossom method
//     over integer weights (weights are doubled internally so every dual
//     stays integral and no slack division truncates).
//
// Both entry points then refine the optimum to the canonical representative:
// edges are considered in sorted order and greedily forced whenever an
// optimal matching containing the forced set still exists. max_weight_matching
// additionally prefers fewer edges among equal-weight matchings, realized by
// scoring each edge as weight*(n+1) - 1.

#include <cstdint>
#include <deque>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syds/core.hpp"

namespace syds {

struct WeightedEdge {
    int u, v;
    long long w;
};

struct WeightedGraph {
    int n = 0;
    std::vector<WeightedEdge> edges;

    WeightedGraph() = default;
    WeightedGraph(int n_, std::vector<WeightedEdge> edges_) : n(n_), edges(std::move(edges_)) {
        for (auto& e : edges) {
            if (e.u == e.v) throw std::invalid_argument("weighted graph: self-loop");
            if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
                throw std::invalid_argument("weighted graph: endpoint out of range");
            if (e.w < 1) throw std::invalid_argument("weighted graph: weights must be positive integers");
            if (e.u > e.v) std::swap(e.u, e.v);
        }
        std::sort(edges.begin(), edges.end(),
                  [](const WeightedEdge& a, const WeightedEdge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v)
                throw std::invalid_argument("weighted graph: duplicate edge");
    }
};

/// A set of vertex-disjoint edges, canonically sorted.
struct Matching {
    std::vector<std::pair<int, int>> edges;
    long long total_weight = 0;

    int cardinality() const { return static_cast<int>(edges.size()); }

    std::vector<int> covered_vertices() const {
        std::vector<int> out;
        out.reserve(edges.size() * 2);
        for (const auto& [u, v] : edges) {
            out.push_back(u);
            out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool covers(int v) const {
        for (const auto& [a, b] : edges)
            if (a == v || b == v) return true;
        return false;
    }
};

inline bool is_perfect(const Matching& m, int n) { return 2 * m.cardinality() == n; }

namespace detail {

// Maximum-cardinality matching on an adjacency-list graph, vertices 0..n-1.
class CardinalityBlossom {
public:
    CardinalityBlossom(int n, const std::vector<std::pair<int, int>>& edges)
        : n_(n), adj_(static_cast<std::size_t>(n)), match_(static_cast<std::size_t>(n), -1),
          parent_(static_cast<std::size_t>(n)), base_(static_cast<std::size_t>(n)),
          in_queue_(static_cast<std::size_t>(n)), in_blossom_(static_cast<std::size_t>(n)) {
        for (auto [u, v] : edges) {
            adj_[static_cast<std::size_t>(u)].push_back(v);
            adj_[static_cast<std::size_t>(v)].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::vector<std::pair<int, int>> solve() {
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] == -1) {
                int leaf = find_augmenting_path(v);
                if (leaf != -1) augment_along(leaf);
            }
        std::vector<std::pair<int, int>> out;
        for (int v = 0; v < n_; ++v)
            if (match_[static_cast<std::size_t>(v)] > v) out.emplace_back(v, match_[static_cast<std::size_t>(v)]);
        return out;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> seen(static_cast<std::size_t>(n_), false);
        for (int x = a;;) {
            x = base_[static_cast<std::size_t>(x)];
            seen[static_cast<std::size_t>(x)] = true;
            if (match_[static_cast<std::size_t>(x)] == -1) break;
            x = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
        }
        for (int x = b;;) {
            x = base_[static_cast<std::size_t>(x)];
            if (seen[static_cast<std::size_t>(x)]) return x;
            x = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[static_cast<std::size_t>(v)] != b) {
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = true;
            in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])])] = true;
            parent_[static_cast<std::size_t>(v)] = child;
            child = match_[static_cast<std::size_t>(v)];
            v = parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
        }
    }

    int find_augmenting_path(int root) {
        std::fill(in_queue_.begin(), in_queue_.end(), false);
        std::fill(parent_.begin(), parent_.end(), -1);
        for (int i = 0; i < n_; ++i) base_[static_cast<std::size_t>(i)] = i;
        std::queue<int> q;
        q.push(root);
        in_queue_[static_cast<std::size_t>(root)] = true;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : adj_[static_cast<std::size_t>(v)]) {
                if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
                    match_[static_cast<std::size_t>(v)] == to)
                    continue;
                if (to == root ||
                    (match_[static_cast<std::size_t>(to)] != -1 &&
                     parent_[static_cast<std::size_t>(match_[static_cast<std::size_t>(to)])] != -1)) {
                    int cur_base = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), false);
                    mark_path(v, cur_base, to);
                    mark_path(to, cur_base, v);
                    for (int i = 0; i < n_; ++i)
                        if (in_blossom_[static_cast<std::size_t>(base_[static_cast<std::size_t>(i)])]) {
                            base_[static_cast<std::size_t>(i)] = cur_base;
                            if (!in_queue_[static_cast<std::size_t>(i)]) {
                                in_queue_[static_cast<std::size_t>(i)] = true;
                                q.push(i);
                            }
                        }
                } else if (parent_[static_cast<std::size_t>(to)] == -1) {
                    parent_[static_cast<std::size_t>(to)] = v;
                    if (match_[static_cast<std::size_t>(to)] == -1) return to;
                    int m = match_[static_cast<std::size_t>(to)];
                    if (!in_queue_[static_cast<std::size_t>(m)]) {
                        in_queue_[static_cast<std::size_t>(m)] = true;
                        q.push(m);
                    }
                }
            }
        }
        return -1;
    }

    void augment_along(int v) {
        while (v != -1) {
            int pv = parent_[static_cast<std::size_t>(v)];
            int ppv = match_[static_cast<std::size_t>(pv)];
            match_[static_cast<std::size_t>(v)] = pv;
            match_[static_cast<std::size_t>(pv)] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
    std::vector<bool> in_queue_;
    std::vector<bool> in_blossom_;
};

// Maximum-weight matching (not necessarily perfect), 1-indexed internally.
// Primal-dual with blossom contraction; integer duals throughout.
class WeightedBlossom {
    struct E {
        int u = 0, v = 0;
        long long w = 0;  // doubled weight; 0 marks "no edge"
    };

public:
    WeightedBlossom(int n, const std::vector<WeightedEdge>& edges) : n_(n), cap_(2 * n + 2) {
        g_.assign(static_cast<std::size_t>(cap_), std::vector<E>(static_cast<std::size_t>(cap_)));
        for (int u = 1; u <= 2 * n_; ++u)
            for (int v = 1; v <= 2 * n_; ++v) g_at(u, v) = E{u, v, 0};
        for (const auto& e : edges) {
            int u = e.u + 1, v = e.v + 1;
            g_at(u, v).w = g_at(v, u).w = 2 * e.w;
        }
        match_.assign(static_cast<std::size_t>(cap_), 0);
        slack_.assign(static_cast<std::size_t>(cap_), 0);
        st_.assign(static_cast<std::size_t>(cap_), 0);
        pa_.assign(static_cast<std::size_t>(cap_), 0);
        s_.assign(static_cast<std::size_t>(cap_), -1);
        vis_.assign(static_cast<std::size_t>(cap_), 0);
        lab_.assign(static_cast<std::size_t>(cap_), 0);
        flower_.assign(static_cast<std::size_t>(cap_), {});
        flower_from_.assign(static_cast<std::size_t>(cap_), std::vector<int>(static_cast<std::size_t>(n_ + 1), 0));
    }

    /// Returns matched pairs (0-indexed) of a maximum-weight matching.
    std::vector<std::pair<int, int>> solve() {
        n_x_ = n_;
        for (int u = 0; u <= n_; ++u) {
            st_[static_cast<std::size_t>(u)] = u;
            flower_[static_cast<std::size_t>(u)].clear();
        }
        long long w_max = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = (u == v ? u : 0);
                w_max = std::max(w_max, g_at(u, v).w);
            }
        for (int u = 1; u <= n_; ++u) lab_[static_cast<std::size_t>(u)] = w_max / 2;
        while (grow()) {
        }
        std::vector<std::pair<int, int>> out;
        for (int u = 1; u <= n_; ++u)
            if (match_[static_cast<std::size_t>(u)] && match_[static_cast<std::size_t>(u)] < u)
                out.emplace_back(match_[static_cast<std::size_t>(u)] - 1, u - 1);
        return out;
    }

private:
    E& g_at(int u, int v) { return g_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]; }
    long long e_delta(const E& e) {
        return lab_[static_cast<std::size_t>(e.u)] + lab_[static_cast<std::size_t>(e.v)] - g_at(e.u, e.v).w;
    }

    void update_slack(int u, int x) {
        if (!slack_[static_cast<std::size_t>(x)] || e_delta(g_at(u, x)) < e_delta(g_at(slack_[static_cast<std::size_t>(x)], x)))
            slack_[static_cast<std::size_t>(x)] = u;
    }

    void set_slack(int x) {
        slack_[static_cast<std::size_t>(x)] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_at(u, x).w > 0 && st_[static_cast<std::size_t>(u)] != x && s_[static_cast<std::size_t>(st_[static_cast<std::size_t>(u)])] == 0)
                update_slack(u, x);
    }

    void q_push(int x) {
        if (x <= n_) {
            q_.push_back(x);
        } else {
            for (int child : flower_[static_cast<std::size_t>(x)]) q_push(child);
        }
    }

    void set_st(int x, int b) {
        st_[static_cast<std::size_t>(x)] = b;
        if (x > n_)
            for (int child : flower_[static_cast<std::size_t>(x)]) set_st(child, b);
    }

    int get_pr(int b, int xr) {
        auto& f = flower_[static_cast<std::size_t>(b)];
        int pr = static_cast<int>(std::find(f.begin(), f.end(), xr) - f.begin());
        if (pr % 2 == 1) {
            std::reverse(f.begin() + 1, f.end());
            return static_cast<int>(f.size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[static_cast<std::size_t>(u)] = g_at(u, v).v;
        if (u <= n_) return;
        E e = g_at(u, v);
        int xr = flower_from_[static_cast<std::size_t>(u)][static_cast<std::size_t>(e.u)];
        int pr = get_pr(u, xr);
        auto& f = flower_[static_cast<std::size_t>(u)];
        for (int i = 0; i < pr; ++i) set_match(f[static_cast<std::size_t>(i)], f[static_cast<std::size_t>(i ^ 1)]);
        set_match(xr, v);
        std::rotate(f.begin(), f.begin() + pr, f.end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(xnv)])]);
            u = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(xnv)])];
            v = xnv;
        }
    }

    int get_lca(int u, int v) {
        ++vis_time_;
        while (u || v) {
            if (u) {
                if (vis_[static_cast<std::size_t>(u)] == vis_time_) return u;
                vis_[static_cast<std::size_t>(u)] = vis_time_;
                u = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(u)])];
                if (u) u = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(u)])];
            }
            std::swap(u, v);
        }
        return 0;
    }

    void add_blossom(int u, int lca, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[static_cast<std::size_t>(b)]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[static_cast<std::size_t>(b)] = 0;
        s_[static_cast<std::size_t>(b)] = 0;
        match_[static_cast<std::size_t>(b)] = match_[static_cast<std::size_t>(lca)];
        auto& f = flower_[static_cast<std::size_t>(b)];
        f.clear();
        f.push_back(lca);
        for (int x = u, y; x != lca; x = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(y)])]) {
            f.push_back(x);
            f.push_back(y = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])]);
            q_push(y);
        }
        std::reverse(f.begin() + 1, f.end());
        for (int x = v, y; x != lca; x = st_[static_cast<std::size_t>(pa_[static_cast<std::size_t>(y)])]) {
            f.push_back(x);
            f.push_back(y = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(x)])]);
            q_push(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_at(b, x).w = g_at(x, b).w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = 0;
        for (int child : f) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_at(b, x).w == 0 || e_delta(g_at(child, x)) < e_delta(g_at(b, x))) {
                    g_at(b, x) = g_at(child, x);
                    g_at(x, b) = g_at(x, child);
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[static_cast<std::size_t>(child)][static_cast<std::size_t>(x)])
                    flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(x)] = child;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {
        auto& f = flower_[static_cast<std::size_t>(b)];
        for (int child : f) set_st(child, child);
        int xr = flower_from_[static_cast<std::size_t>(b)][static_cast<std::size_t>(g_at(b, pa_[static_cast<std::size_t>(b)]).u)];
        int pr = get_pr(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = f[static_cast<std::size_t>(i)];
            int xns = f[static_cast<std::size_t>(i + 1)];
            pa_[static_cast<std::size_t>(xs)] = g_at(xns, xs).u;
            s_[static_cast<std::size_t>(xs)] = 1;
            s_[static_cast<std::size_t>(xns)] = 0;
            slack_[static_cast<std::size_t>(xs)] = 0;
            set_slack(xns);
            q_push(xns);
        }
        s_[static_cast<std::size_t>(xr)] = 1;
        pa_[static_cast<std::size_t>(xr)] = pa_[static_cast<std::size_t>(b)];
        for (std::size_t i = static_cast<std::size_t>(pr) + 1; i < f.size(); ++i) {
            int xs = f[i];
            s_[static_cast<std::size_t>(xs)] = -1;
            set_slack(xs);
        }
        st_[static_cast<std::size_t>(b)] = 0;
    }

    bool on_found_edge(const E& e) {
        int u = st_[static_cast<std::size_t>(e.u)];
        int v = st_[static_cast<std::size_t>(e.v)];
        if (s_[static_cast<std::size_t>(v)] == -1) {
            pa_[static_cast<std::size_t>(v)] = e.u;
            s_[static_cast<std::size_t>(v)] = 1;
            int nu = st_[static_cast<std::size_t>(match_[static_cast<std::size_t>(v)])];
            slack_[static_cast<std::size_t>(v)] = slack_[static_cast<std::size_t>(nu)] = 0;
            s_[static_cast<std::size_t>(nu)] = 0;
            q_push(nu);
        } else if (s_[static_cast<std::size_t>(v)] == 0) {
            int lca = get_lca(u, v);
            if (!lca) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, lca, v);
        }
        return false;
    }

    bool grow() {
        std::fill(s_.begin() + 1, s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin() + 1, slack_.begin() + n_x_ + 1, 0);
        q_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[static_cast<std::size_t>(x)] == x && !match_[static_cast<std::size_t>(x)]) {
                pa_[static_cast<std::size_t>(x)] = 0;
                s_[static_cast<std::size_t>(x)] = 0;
                q_push(x);
            }
        if (q_.empty()) return false;
        for (;;) {
            while (!q_.empty()) {
                int u = q_.front();
                q_.pop_front();
                if (s_[static_cast<std::size_t>(st_[static_cast<std::size_t>(u)])] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_at(u, v).w > 0 && st_[static_cast<std::size_t>(u)] != st_[static_cast<std::size_t>(v)]) {
                        if (e_delta(g_at(u, v)) == 0) {
                            if (on_found_edge(g_at(u, v))) return true;
                        } else {
                            update_slack(u, st_[static_cast<std::size_t>(v)]);
                        }
                    }
            }
            const long long inf = (1LL << 62);
            long long d = inf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b && s_[static_cast<std::size_t>(b)] == 1)
                    d = std::min(d, lab_[static_cast<std::size_t>(b)] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[static_cast<std::size_t>(x)] == x && slack_[static_cast<std::size_t>(x)]) {
                    if (s_[static_cast<std::size_t>(x)] == -1)
                        d = std::min(d, e_delta(g_at(slack_[static_cast<std::size_t>(x)], x)));
                    else if (s_[static_cast<std::size_t>(x)] == 0)
                        d = std::min(d, e_delta(g_at(slack_[static_cast<std::size_t>(x)], x)) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                int top = st_[static_cast<std::size_t>(u)];
                if (s_[static_cast<std::size_t>(top)] == 0) {
                    if (lab_[static_cast<std::size_t>(u)] <= d) return false;
                    lab_[static_cast<std::size_t>(u)] -= d;
                } else if (s_[static_cast<std::size_t>(top)] == 1) {
                    lab_[static_cast<std::size_t>(u)] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b) {
                    if (s_[static_cast<std::size_t>(b)] == 0)
                        lab_[static_cast<std::size_t>(b)] += 2 * d;
                    else if (s_[static_cast<std::size_t>(b)] == 1)
                        lab_[static_cast<std::size_t>(b)] -= 2 * d;
                }
            for (int x = 1; x <= n_x_; ++x)
                if (st_[static_cast<std::size_t>(x)] == x && slack_[static_cast<std::size_t>(x)] &&
                    st_[static_cast<std::size_t>(slack_[static_cast<std::size_t>(x)])] != x &&
                    e_delta(g_at(slack_[static_cast<std::size_t>(x)], x)) == 0)
                    if (on_found_edge(g_at(slack_[static_cast<std::size_t>(x)], x))) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[static_cast<std::size_t>(b)] == b && s_[static_cast<std::size_t>(b)] == 1 &&
                    lab_[static_cast<std::size_t>(b)] == 0)
                    expand_blossom(b);
        }
    }

    int n_, n_x_ = 0, cap_;
    int vis_time_ = 0;
    std::vector<std::vector<E>> g_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<long long> lab_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> q_;
};

inline long long weighted_optimum(int n, const std::vector<WeightedEdge>& edges, std::vector<std::pair<int, int>>* out) {
    WeightedBlossom solver(n, edges);
    auto pairs = solver.solve();
    long long total = 0;
    for (auto [u, v] : pairs)
        for (const auto& e : edges)
            if (e.u == std::min(u, v) && e.v == std::max(u, v)) total += e.w;
    if (out) *out = std::move(pairs);
    return total;
}

// Greedy canonical refinement: force edges in sorted order whenever the
// optimum is preserved. `solve_rest` returns the optimum value over the
// subgraph avoiding the given vertices.
template <typename SolveRest, typename EdgeValue>
std::vector<std::pair<int, int>> lexicographic_optimal(int n, const std::vector<std::pair<int, int>>& sorted_edges,
                                                       long long optimum, SolveRest solve_rest, EdgeValue value_of) {
    std::vector<bool> removed(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> forced;
    long long forced_value = 0;
    for (const auto& [u, v] : sorted_edges) {
        if (forced_value == optimum) break;
        if (removed[static_cast<std::size_t>(u)] || removed[static_cast<std::size_t>(v)]) continue;
        auto with_edge = removed;
        with_edge[static_cast<std::size_t>(u)] = with_edge[static_cast<std::size_t>(v)] = true;
        long long candidate = forced_value + value_of(u, v) + solve_rest(with_edge);
        if (candidate == optimum) {
            forced.emplace_back(u, v);
            forced_value += value_of(u, v);
            removed = std::move(with_edge);
        }
    }
    return forced;
}

}  // namespace detail

/// Maximum-cardinality matching; among all maximum matchings, returns the one
/// that greedily contains the earliest edges in canonical (sorted) order.
inline Matching max_cardinality_matching(const Graph& graph) {
    if (graph.is_directed()) throw std::invalid_argument("max_cardinality_matching: graph must be undirected");
    const int n = graph.vertex_count();
    const auto& edges = graph.edges();

    auto solve_filtered = [&](const std::vector<bool>& removed) -> long long {
        std::vector<std::pair<int, int>> kept;
        for (const auto& [u, v] : edges)
            if (!removed[static_cast<std::size_t>(u)] && !removed[static_cast<std::size_t>(v)]) kept.emplace_back(u, v);
        detail::CardinalityBlossom solver(n, kept);
        return static_cast<long long>(solver.solve().size());
    };

    long long best = solve_filtered(std::vector<bool>(static_cast<std::size_t>(n), false));
    Matching m;
    m.edges = detail::lexicographic_optimal(n, edges, best, solve_filtered, [](int, int) { return 1LL; });
    m.total_weight = static_cast<long long>(m.edges.size());
    return m;
}

/// Maximum-weight matching over positive integer weights. Among matchings of
/// maximum total weight, returns one of minimum cardinality; remaining ties
/// resolve toward the earliest edges in canonical order.
inline Matching max_weight_matching(const WeightedGraph& graph) {
    const int n = graph.n;
    // weight*(n+1) - 1 ranks by weight first, then by fewer edges
    auto scored = [&](long long w) { return w * (n + 1) - 1; };
    std::vector<WeightedEdge> scored_edges = graph.edges;
    for (auto& e : scored_edges) e.w = scored(e.w);

    auto solve_filtered = [&](const std::vector<bool>& removed) -> long long {
        std::vector<WeightedEdge> kept;
        for (const auto& e : scored_edges)
            if (!removed[static_cast<std::size_t>(e.u)] && !removed[static_cast<std::size_t>(e.v)]) kept.push_back(e);
        return detail::weighted_optimum(n, kept, nullptr);
    };

    long long best = solve_filtered(std::vector<bool>(static_cast<std::size_t>(n), false));
    std::vector<std::pair<int, int>> canon;
    canon.reserve(graph.edges.size());
    for (const auto& e : graph.edges) canon.emplace_back(e.u, e.v);

    auto value_of = [&](int u, int v) -> long long {
        for (const auto& e : scored_edges)
            if (e.u == u && e.v == v) return e.w;
        return 0;
    };

    Matching m;
    m.edges = detail::lexicographic_optimal(n, canon, best, solve_filtered, value_of);
    m.total_weight = 0;
    for (const auto& [u, v] : m.edges)
        for (const auto& e : graph.edges)
            if (e.u == u && e.v == v) m.total_weight += e.w;
    return m;
}

}  // namespace syds
