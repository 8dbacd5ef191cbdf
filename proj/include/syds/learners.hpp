#pragma once

// Consistent learners over threshold systems:
//   - learn_matching:          perfect-matching graphs, via the threshold-
//                              compatibility graph and a perfect matching in it
//   - learn_directed_bounded:  directed graphs with in-degree at most Delta,
//                              via per-vertex candidate in-neighborhoods
//   - learn_known_graph:       thresholds only, the graph is given
//   - learn_partial:           observed graph plus at most k missing edges,
//                              at most one per vertex, via max-weight matching
//   - brute_force_consistent:  exhaustive oracle over a hypothesis class
//
// Every learner either returns a hypothesis that is verified consistent with
// the observations before returning, or a refusal carrying a machine-readable
// reason. A refusal is an answer ("no consistent system under my class"), not
// an error.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "syds/core.hpp"
#include "syds/matching.hpp"
#include "syds/observations.hpp"

namespace syds {

enum class RefusalReason {
    contradictory_observations,
    odd_vertex_count,
    no_perfect_matching,
    no_bounded_in_neighborhood,
    threshold_infeasible,
    vertex_needs_two_edges,
    matching_insufficient,
    no_consistent_hypothesis,
};

inline const char* to_string(RefusalReason r) {
    switch (r) {
        case RefusalReason::contradictory_observations: return "contradictory observations";
        case RefusalReason::odd_vertex_count: return "odd vertex count admits no perfect matching";
        case RefusalReason::no_perfect_matching: return "no perfect matching in compatibility graph";
        case RefusalReason::no_bounded_in_neighborhood: return "a vertex has no consistent in-neighborhood within the degree bound";
        case RefusalReason::threshold_infeasible: return "no threshold fits the observations at some vertex";
        case RefusalReason::vertex_needs_two_edges: return "a vertex requires at least two additional incident edges";
        case RefusalReason::matching_insufficient: return "no matching covers every constrained vertex within the edge budget";
        case RefusalReason::no_consistent_hypothesis: return "exhaustive search found no consistent system in the class";
    }
    return "unknown";
}

struct Refusal {
    RefusalReason reason;
    std::string detail;
};

struct LearnOutcome {
    std::optional<ThresholdSystem> system;
    std::optional<Refusal> refusal;

    bool learned() const { return system.has_value(); }

    static LearnOutcome success(ThresholdSystem s) {
        LearnOutcome out;
        out.system = std::move(s);
        return out;
    }
    static LearnOutcome refuse(RefusalReason reason, std::string detail = {}) {
        LearnOutcome out;
        out.refusal = Refusal{reason, std::move(detail)};
        return out;
    }
};

/// Observed graph plus a budget of missing edges. The efficient partial
/// learner requires at most one missing edge per vertex (cap = 1).
struct PartialInstance {
    Graph g_obs;
    int k = 0;
    int per_vertex_missing_cap = 1;

    PartialInstance(Graph g, int k_, int cap = 1) : g_obs(std::move(g)), k(k_), per_vertex_missing_cap(cap) {
        if (k < 0) throw std::invalid_argument("missing-edge budget must be non-negative");
        if (per_vertex_missing_cap == 1 && k > g_obs.vertex_count() / 2)
            throw std::invalid_argument("with one missing edge per vertex, k cannot exceed n/2");
    }
};

namespace detail {

inline void require_width(const TrainingSet& obs, int n, const char* who) {
    if (obs.n != n) throw std::invalid_argument(std::string(who) + ": observation width does not match vertex count");
}

inline ThresholdSystem checked(ThresholdSystem s, const TrainingSet& obs, const char* who) {
    if (!is_consistent(s, obs))
        throw std::logic_error(std::string(who) + ": internal error, produced hypothesis is not consistent");
    return s;
}

/// Threshold choice shared by every learner: the lowest observed firing
/// score, clamped to the canonical never-fires value when nothing fires.
inline int pick_threshold(const TrainingSet& obs, int v, const std::vector<int>& closed_nb) {
    return std::min(h_value(obs, v, closed_nb), static_cast<int>(closed_nb.size()) + 1);
}

inline std::vector<int> with_vertex(std::vector<int> set, int v) {
    set.push_back(v);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

}  // namespace detail

/// True iff some pair of threshold functions over exactly {u, v} fits every
/// observation at both u and v: equal-or-lower pair scores never produce
/// higher successor states. A violation at u is precisely a firing score of u
/// that does not exceed a non-firing one, so the check reduces to l < h over
/// the pair at both endpoints (linear in the observation count).
inline bool threshold_compatible(const TrainingSet& obs, int u, int v) {
    if (u == v) throw std::invalid_argument("threshold_compatible: vertices must be distinct");
    if (u < 0 || u >= obs.n || v < 0 || v >= obs.n)
        throw std::invalid_argument("threshold_compatible: vertex id out of range");
    const std::vector<int> pair_set = {std::min(u, v), std::max(u, v)};
    return l_value(obs, u, pair_set) < h_value(obs, u, pair_set) &&
           l_value(obs, v, pair_set) < h_value(obs, v, pair_set);
}

/// Undirected graph on n vertices joining every threshold-compatible pair.
inline Graph compatibility_graph(int n, const TrainingSet& obs) {
    detail::require_width(obs, n, "compatibility_graph");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (threshold_compatible(obs, u, v)) edges.emplace_back(u, v);
    return Graph::undirected(n, std::move(edges));
}

/// Consistent learner for systems whose graph is a perfect matching.
inline LearnOutcome learn_matching(int n, const TrainingSet& obs) {
    detail::require_width(obs, n, "learn_matching");
    if (!observations_deterministic(obs))
        return LearnOutcome::refuse(RefusalReason::contradictory_observations);
    if (n % 2 != 0) return LearnOutcome::refuse(RefusalReason::odd_vertex_count);

    Graph compat = compatibility_graph(n, obs);
    Matching m = max_cardinality_matching(compat);
    if (!is_perfect(m, n)) return LearnOutcome::refuse(RefusalReason::no_perfect_matching);

    Graph g = Graph::undirected(n, m.edges);
    std::vector<int> taus(static_cast<std::size_t>(n));
    for (const auto& [u, v] : m.edges) {
        const std::vector<int> pair_set = {u, v};
        taus[static_cast<std::size_t>(u)] = detail::pick_threshold(obs, u, pair_set);
        taus[static_cast<std::size_t>(v)] = detail::pick_threshold(obs, v, pair_set);
    }
    return LearnOutcome::success(detail::checked(ThresholdSystem(std::move(g), std::move(taus)), obs, "learn_matching"));
}

/// True iff a threshold over {v} ∪ Y can reproduce v's successor states:
/// whenever v's next state goes from 0 to 1 across two observations, the
/// score must strictly increase.
inline bool threshold_consistent_via(const TrainingSet& obs, int v, const std::vector<int>& y) {
    for (int u : y)
        if (u == v) throw std::invalid_argument("threshold_consistent_via: Y must not contain v");
    const auto closed = detail::with_vertex(y, v);
    const int q = obs.size();
    std::vector<int> scores(static_cast<std::size_t>(q));
    for (int i = 0; i < q; ++i) scores[static_cast<std::size_t>(i)] = score(obs.pairs[static_cast<std::size_t>(i)].first, closed);
    for (int i = 0; i < q; ++i)
        for (int j = 0; j < q; ++j) {
            if (obs.pairs[static_cast<std::size_t>(i)].second.get(v) < obs.pairs[static_cast<std::size_t>(j)].second.get(v) &&
                scores[static_cast<std::size_t>(i)] >= scores[static_cast<std::size_t>(j)])
                return false;
        }
    return true;
}

namespace detail {

/// Candidate subsets of {0..n-1}\{v} of size up to max_size, smallest first,
/// lexicographic within a size; visit returns true to stop.
template <typename Visit>
bool for_each_candidate_set(int n, int v, int max_size, Visit visit) {
    std::vector<int> others;
    for (int u = 0; u < n; ++u)
        if (u != v) others.push_back(u);
    std::vector<int> pick;
    for (int size = 0; size <= std::min<int>(max_size, static_cast<int>(others.size())); ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        for (;;) {
            pick.clear();
            for (int i : idx) pick.push_back(others[static_cast<std::size_t>(i)]);
            if (visit(pick)) return true;
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == static_cast<int>(others.size()) - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return false;
}

}  // namespace detail

/// Consistent learner for directed systems with in-degree bounded by delta.
/// Vertices are independent; candidate in-neighborhoods are scanned smallest
/// first, lexicographic within a size, so the output is canonical. Safe to
/// parallelize across vertices; results are merged in vertex order.
inline LearnOutcome learn_directed_bounded(int n, const TrainingSet& obs, int delta, int threads = 1) {
    detail::require_width(obs, n, "learn_directed_bounded");
    if (delta < 0) throw std::invalid_argument("learn_directed_bounded: delta must be non-negative");
    if (!observations_deterministic(obs))
        return LearnOutcome::refuse(RefusalReason::contradictory_observations);

    struct PerVertex {
        bool found = false;
        std::vector<int> in_nb;
        int tau = 0;
    };
    std::vector<PerVertex> results(static_cast<std::size_t>(n));

    auto solve_vertex = [&](int v) {
        detail::for_each_candidate_set(n, v, delta, [&](const std::vector<int>& y) {
            if (!threshold_consistent_via(obs, v, y)) return false;
            auto& r = results[static_cast<std::size_t>(v)];
            r.found = true;
            r.in_nb = y;
            r.tau = detail::pick_threshold(obs, v, detail::with_vertex(y, v));
            return true;
        });
    };

    if (threads <= 1) {
        for (int v = 0; v < n; ++v) solve_vertex(v);
    } else {
        std::vector<std::thread> pool;
        int chunk = (n + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            int lo = t * chunk, hi = std::min(n, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (int v = lo; v < hi; ++v) solve_vertex(v);
            });
        }
        for (auto& th : pool) th.join();
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<int> taus(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        const auto& r = results[static_cast<std::size_t>(v)];
        if (!r.found)
            return LearnOutcome::refuse(RefusalReason::no_bounded_in_neighborhood, "vertex " + std::to_string(v));
        for (int u : r.in_nb) edges.emplace_back(u, v);
        taus[static_cast<std::size_t>(v)] = r.tau;
    }
    return LearnOutcome::success(detail::checked(
        ThresholdSystem(Graph::directed(n, std::move(edges)), std::move(taus)), obs, "learn_directed_bounded"));
}

/// Consistent learner when the graph is known: per vertex the threshold must
/// exceed the highest non-firing score and not exceed the lowest firing one.
inline LearnOutcome learn_known_graph(const Graph& g, const TrainingSet& obs) {
    detail::require_width(obs, g.vertex_count(), "learn_known_graph");
    if (!observations_deterministic(obs))
        return LearnOutcome::refuse(RefusalReason::contradictory_observations);
    const int n = g.vertex_count();
    std::vector<int> taus(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto nb = g.closed_neighborhood(v);
        if (l_value(obs, v, nb) >= h_value(obs, v, nb))
            return LearnOutcome::refuse(RefusalReason::threshold_infeasible, "vertex " + std::to_string(v));
        taus[static_cast<std::size_t>(v)] = detail::pick_threshold(obs, v, nb);
    }
    return LearnOutcome::success(detail::checked(ThresholdSystem(g, std::move(taus)), obs, "learn_known_graph"));
}

/// The matching instance behind the partial learner's second step: which
/// vertices are pinned (l = h, need exactly one more edge), which are blocked
/// (l > h, need at least two), and the weighted graph over viable candidate
/// edges. Edge weights are t = |pinned| for one pinned endpoint and 2t+1 for
/// two, so matching weight encodes coverage first and edge count second.
struct PartialMatchingInstance {
    std::vector<int> pinned;   // l == h
    std::vector<int> blocked;  // l > h
    long long t = 0;
    WeightedGraph candidates;
};

inline PartialMatchingInstance build_partial_matching_instance(const Graph& g_obs, const TrainingSet& obs) {
    if (g_obs.is_directed())
        throw std::invalid_argument("build_partial_matching_instance: observed graph must be undirected");
    const int n = g_obs.vertex_count();
    detail::require_width(obs, n, "build_partial_matching_instance");

    PartialMatchingInstance inst;
    std::vector<bool> is_pinned(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) {
        auto nb = g_obs.closed_neighborhood(v);
        int low = l_value(obs, v, nb);
        int high = h_value(obs, v, nb);
        if (low > high) inst.blocked.push_back(v);
        if (low == high) {
            inst.pinned.push_back(v);
            is_pinned[static_cast<std::size_t>(v)] = true;
        }
    }
    inst.t = static_cast<long long>(inst.pinned.size());
    if (!inst.blocked.empty() || inst.t == 0) {
        inst.candidates = WeightedGraph(n, {});
        return inst;
    }

    auto slack_with = [&](int a, int b) {
        // l < h at a after adding edge (a, b)
        auto nb = detail::with_vertex(g_obs.closed_neighborhood(a), b);
        return l_value(obs, a, nb) < h_value(obs, a, nb);
    };
    std::vector<WeightedEdge> viable;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g_obs.has_edge(u, v)) continue;
            bool u_pinned = is_pinned[static_cast<std::size_t>(u)];
            bool v_pinned = is_pinned[static_cast<std::size_t>(v)];
            if (!u_pinned && !v_pinned) continue;
            if (!slack_with(u, v) || !slack_with(v, u)) continue;
            viable.push_back({u, v, (u_pinned && v_pinned) ? 2 * inst.t + 1 : inst.t});
        }
    inst.candidates = WeightedGraph(n, std::move(viable));
    return inst;
}

/// Consistent learner for a partially observed graph missing at most k edges,
/// at most one per vertex. Pinned vertices must each gain an edge; a maximum
/// weight matching over the viable candidates covers as many of them as
/// possible with the fewest edges, and the learner refuses when that is not
/// all of them or the budget is exceeded.
inline LearnOutcome learn_partial(const PartialInstance& instance, const TrainingSet& obs) {
    if (instance.per_vertex_missing_cap != 1)
        throw unsupported_instance(
            "learn_partial handles one missing edge per vertex; use brute_force_consistent for general budgets");
    const Graph& g_obs = instance.g_obs;
    if (g_obs.is_directed()) throw std::invalid_argument("learn_partial: observed graph must be undirected");
    const int n = g_obs.vertex_count();
    detail::require_width(obs, n, "learn_partial");
    if (!observations_deterministic(obs))
        return LearnOutcome::refuse(RefusalReason::contradictory_observations);

    auto inst = build_partial_matching_instance(g_obs, obs);
    if (!inst.blocked.empty())
        return LearnOutcome::refuse(RefusalReason::vertex_needs_two_edges,
                                    "vertex " + std::to_string(inst.blocked.front()));

    Matching m;
    if (inst.t > 0) {
        m = max_weight_matching(inst.candidates);
        for (int v : inst.pinned)
            if (!m.covers(v))
                return LearnOutcome::refuse(RefusalReason::matching_insufficient,
                                            "vertex " + std::to_string(v) + " uncovered");
        if (m.cardinality() > instance.k)
            return LearnOutcome::refuse(RefusalReason::matching_insufficient,
                                        "needs " + std::to_string(m.cardinality()) + " edges, budget " +
                                            std::to_string(instance.k));
    }

    Graph g_full = g_obs.with_edges(m.edges);
    std::vector<int> taus(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        taus[static_cast<std::size_t>(v)] = detail::pick_threshold(obs, v, g_full.closed_neighborhood(v));
    return LearnOutcome::success(
        detail::checked(ThresholdSystem(std::move(g_full), std::move(taus)), obs, "learn_partial"));
}

// ---------------------------------------------------------------------------
// Exhaustive oracle
// ---------------------------------------------------------------------------

enum class HypothesisClass {
    undirected_threshold,
    matching_threshold,
    directed_bounded,
    supergraph_of,
};

struct BruteForceOptions {
    int delta = 0;                  // directed_bounded
    std::optional<Graph> g_obs;     // supergraph_of
    int k = 0;                      // supergraph_of
    int enumeration_limit = 8;      // undirected classes
};

namespace detail {

// Bit-level view of the observations for fast exhaustive checks (n <= 30).
struct BitObs {
    int n = 0;
    std::vector<std::uint32_t> pred;
    std::vector<std::uint32_t> succ;

    explicit BitObs(const TrainingSet& obs) : n(obs.n) {
        for (const auto& [p, s] : obs.pairs) {
            std::uint32_t pm = 0, sm = 0;
            for (int v = 0; v < n; ++v) {
                if (p.get(v)) pm |= (1u << v);
                if (s.get(v)) sm |= (1u << v);
            }
            pred.push_back(pm);
            succ.push_back(sm);
        }
    }

    /// Direct check: does any integer threshold reproduce v's successor bit on
    /// every pair, with the given closed-neighborhood mask?
    bool exists_tau(int v, std::uint32_t closed_mask) const {
        int max_tau = __builtin_popcount(closed_mask) + 1;
        for (int tau = 0; tau <= max_tau; ++tau) {
            bool ok = true;
            for (std::size_t i = 0; i < pred.size() && ok; ++i) {
                bool fires = __builtin_popcount(pred[i] & closed_mask) >= tau;
                ok = fires == ((succ[i] >> v) & 1u);
            }
            if (ok) return true;
        }
        return false;
    }

    /// Lowest firing score, clamped to the canonical never-fires value.
    int pick_tau(int v, std::uint32_t closed_mask) const {
        int h = INT32_MAX;
        for (std::size_t i = 0; i < pred.size(); ++i)
            if ((succ[i] >> v) & 1u) h = std::min(h, __builtin_popcount(pred[i] & closed_mask));
        return std::min(h, __builtin_popcount(closed_mask) + 1);
    }
};

struct ConsistencyTable {
    int n;
    std::vector<std::vector<char>> ok;  // ok[v][open_mask]

    ConsistencyTable(const BitObs& bits) : n(bits.n), ok(static_cast<std::size_t>(bits.n)) {
        for (int v = 0; v < n; ++v) {
            auto& row = ok[static_cast<std::size_t>(v)];
            row.assign(static_cast<std::size_t>(1) << n, 0);
            for (std::uint32_t open = 0; open < (1u << n); ++open) {
                if (open & (1u << v)) continue;
                row[open] = bits.exists_tau(v, open | (1u << v)) ? 1 : 0;
            }
        }
    }
};

inline LearnOutcome assemble_from_masks(int n, bool directed, const std::vector<std::pair<int, int>>& edges,
                                        const BitObs& bits, const std::vector<std::uint32_t>& closed_masks,
                                        const TrainingSet& obs) {
    std::vector<int> taus(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) taus[static_cast<std::size_t>(v)] = bits.pick_tau(v, closed_masks[static_cast<std::size_t>(v)]);
    return LearnOutcome::success(
        checked(ThresholdSystem(Graph(n, directed, edges), std::move(taus)), obs, "brute_force_consistent"));
}

}  // namespace detail

/// Exhaustive search for a consistent system in the given class; exact, so a
/// refusal means no consistent system exists in the class. Graphs are visited
/// in canonical order and the first consistent system is returned.
inline LearnOutcome brute_force_consistent(int n, const TrainingSet& obs, HypothesisClass cls,
                                           const BruteForceOptions& opt = {}) {
    detail::require_width(obs, n, "brute_force_consistent");
    if (n < 1) throw std::invalid_argument("brute_force_consistent: n must be at least 1");
    if (n > 30) throw unsupported_instance("brute_force_consistent: n exceeds the bitmask width");

    const bool undirected_class = cls != HypothesisClass::directed_bounded;
    if (undirected_class && n > opt.enumeration_limit)
        throw unsupported_instance("brute_force_consistent: n exceeds the enumeration limit of " +
                                   std::to_string(opt.enumeration_limit));

    detail::BitObs bits(obs);

    switch (cls) {
        case HypothesisClass::undirected_threshold: {
            detail::ConsistencyTable table(bits);
            std::vector<std::pair<int, int>> pairs;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
            const int m = static_cast<int>(pairs.size());
            std::vector<std::uint32_t> open(static_cast<std::size_t>(n), 0);
            std::vector<std::pair<int, int>> chosen;
            LearnOutcome found = LearnOutcome::refuse(RefusalReason::no_consistent_hypothesis);
            bool done = false;

            // ascending edge-mask order: highest-indexed pair is the most
            // significant bit, absent branch first
            auto rec = [&](auto&& self, int idx) -> void {
                if (done) return;
                if (idx < 0) {
                    for (int v = 0; v < n; ++v)
                        if (!table.ok[static_cast<std::size_t>(v)][open[static_cast<std::size_t>(v)]]) return;
                    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
                    for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)] | (1u << v);
                    found = detail::assemble_from_masks(n, false, chosen, bits, closed, obs);
                    done = true;
                    return;
                }
                self(self, idx - 1);
                if (done) return;
                auto [u, v] = pairs[static_cast<std::size_t>(idx)];
                open[static_cast<std::size_t>(u)] |= (1u << v);
                open[static_cast<std::size_t>(v)] |= (1u << u);
                chosen.emplace_back(u, v);
                self(self, idx - 1);
                chosen.pop_back();
                open[static_cast<std::size_t>(u)] &= ~(1u << v);
                open[static_cast<std::size_t>(v)] &= ~(1u << u);
            };
            rec(rec, m - 1);
            return found;
        }

        case HypothesisClass::matching_threshold: {
            if (n % 2 != 0) return LearnOutcome::refuse(RefusalReason::no_consistent_hypothesis, "odd vertex count");
            std::vector<int> partner(static_cast<std::size_t>(n), -1);
            std::vector<std::pair<int, int>> chosen;
            LearnOutcome found = LearnOutcome::refuse(RefusalReason::no_consistent_hypothesis);
            bool done = false;
            auto rec = [&](auto&& self) -> void {
                if (done) return;
                int v = 0;
                while (v < n && partner[static_cast<std::size_t>(v)] != -1) ++v;
                if (v == n) {
                    for (int x = 0; x < n; ++x) {
                        std::uint32_t closed = (1u << x) | (1u << partner[static_cast<std::size_t>(x)]);
                        if (!bits.exists_tau(x, closed)) return;
                    }
                    std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
                    for (int x = 0; x < n; ++x) closed[static_cast<std::size_t>(x)] = (1u << x) | (1u << partner[static_cast<std::size_t>(x)]);
                    found = detail::assemble_from_masks(n, false, chosen, bits, closed, obs);
                    done = true;
                    return;
                }
                for (int u = v + 1; u < n && !done; ++u) {
                    if (partner[static_cast<std::size_t>(u)] != -1) continue;
                    partner[static_cast<std::size_t>(v)] = u;
                    partner[static_cast<std::size_t>(u)] = v;
                    chosen.emplace_back(v, u);
                    self(self);
                    chosen.pop_back();
                    partner[static_cast<std::size_t>(v)] = -1;
                    partner[static_cast<std::size_t>(u)] = -1;
                }
            };
            rec(rec);
            return found;
        }

        case HypothesisClass::directed_bounded: {
            double candidates_per_vertex = 0;
            double binom = 1;
            for (int s = 0; s <= std::min(opt.delta, n - 1); ++s) {
                if (s > 0) binom = binom * (n - s) / s;
                candidates_per_vertex += binom;
            }
            if (candidates_per_vertex * n > 1e7)
                throw unsupported_instance("brute_force_consistent: directed candidate space too large");

            std::vector<std::pair<int, int>> edges;
            std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                bool ok = detail::for_each_candidate_set(n, v, opt.delta, [&](const std::vector<int>& y) {
                    std::uint32_t mask = 1u << v;
                    for (int u : y) mask |= (1u << u);
                    if (!bits.exists_tau(v, mask)) return false;
                    for (int u : y) edges.emplace_back(u, v);
                    closed[static_cast<std::size_t>(v)] = mask;
                    return true;
                });
                if (!ok)
                    return LearnOutcome::refuse(RefusalReason::no_consistent_hypothesis,
                                                "vertex " + std::to_string(v) + " admits no in-neighborhood");
            }
            return detail::assemble_from_masks(n, true, edges, bits, closed, obs);
        }

        case HypothesisClass::supergraph_of: {
            if (!opt.g_obs) throw std::invalid_argument("brute_force_consistent: supergraph class needs g_obs");
            const Graph& base = *opt.g_obs;
            if (base.vertex_count() != n) throw std::invalid_argument("brute_force_consistent: g_obs size mismatch");
            if (base.is_directed()) throw std::invalid_argument("brute_force_consistent: g_obs must be undirected");

            std::vector<std::uint32_t> base_open(static_cast<std::size_t>(n), 0);
            for (auto [u, v] : base.edges()) {
                base_open[static_cast<std::size_t>(u)] |= (1u << v);
                base_open[static_cast<std::size_t>(v)] |= (1u << u);
            }
            std::vector<std::pair<int, int>> non_edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (!base.has_edge(u, v)) non_edges.emplace_back(u, v);

            LearnOutcome found = LearnOutcome::refuse(RefusalReason::no_consistent_hypothesis);
            bool done = false;
            std::vector<std::uint32_t> open = base_open;
            std::vector<std::pair<int, int>> added;

            auto leaf = [&]() {
                for (int v = 0; v < n; ++v)
                    if (!bits.exists_tau(v, open[static_cast<std::size_t>(v)] | (1u << v))) return;
                std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
                for (int v = 0; v < n; ++v) closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)] | (1u << v);
                auto all_edges = base.edges();
                all_edges.insert(all_edges.end(), added.begin(), added.end());
                found = detail::assemble_from_masks(n, false, all_edges, bits, closed, obs);
                done = true;
            };
            // subsets of missing edges by size, then lexicographic
            auto rec = [&](auto&& self, std::size_t start, int remaining) -> void {
                if (done) return;
                if (remaining == 0) {
                    leaf();
                    return;
                }
                for (std::size_t i = start; i < non_edges.size() && !done; ++i) {
                    auto [u, v] = non_edges[i];
                    open[static_cast<std::size_t>(u)] |= (1u << v);
                    open[static_cast<std::size_t>(v)] |= (1u << u);
                    added.push_back(non_edges[i]);
                    self(self, i + 1, remaining - 1);
                    added.pop_back();
                    open[static_cast<std::size_t>(u)] &= ~(1u << v);
                    open[static_cast<std::size_t>(v)] &= ~(1u << u);
                }
            };
            for (int d = 0; d <= opt.k && !done; ++d) rec(rec, 0, d);
            return found;
        }
    }
    throw std::logic_error("unknown hypothesis class");
}

}  // namespace syds
