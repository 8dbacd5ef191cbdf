#pragma once

// True-error computation against a ground-truth system, Monte-Carlo
// estimation, epsilon-delta experiment harnesses, and the reduction from
// consistency checking to PAC learning (uniform distribution over the
// observed predecessors, epsilon = 1/(2q), delta = 0.1).

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "syds/core.hpp"
#include "syds/learners.hpp"
#include "syds/observations.hpp"
#include "syds/rng.hpp"
#include "syds/theory.hpp"

namespace syds {

/// Exact probability that the two systems disagree on the successor of a
/// configuration drawn from dist. Supported exactly: empirical distributions
/// (rational mass) and uniform with n <= 20 (full enumeration).
inline double true_error_exact(const ThresholdSystem& s, const ThresholdSystem& s_star,
                               const ConfigDistribution& dist) {
    if (s.vertex_count() != s_star.vertex_count())
        throw std::invalid_argument("true_error_exact: systems must share a vertex set");
    const int n = s.vertex_count();
    if (dist.dimension() != n) throw std::invalid_argument("true_error_exact: distribution dimension mismatch");

    if (dist.kind() == ConfigDistribution::Kind::empirical) {
        std::uint64_t bad = 0;
        for (const auto& [c, w] : dist.support())
            if (successor(s, c) != successor(s_star, c)) bad += w;
        return static_cast<double>(bad) / static_cast<double>(dist.total_count());
    }
    if (dist.kind() == ConfigDistribution::Kind::uniform) {
        if (n > 20)
            throw unsupported_instance("true_error_exact: uniform enumeration capped at n = 20; use true_error_mc");
        std::uint64_t bad = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
            Configuration c = Configuration::zeros(n);
            for (int v = 0; v < n; ++v) c.set(v, (mask >> v) & 1ULL);
            if (successor(s, c) != successor(s_star, c)) ++bad;
        }
        return static_cast<double>(bad) / static_cast<double>(1ULL << n);
    }
    throw unsupported_instance("true_error_exact: distribution not exactly integrable; use true_error_mc");
}

struct ErrorEstimate {
    double value = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
};

/// Unbiased Monte-Carlo estimate of the true error with its binomial
/// standard error; reproducible under the seed.
inline ErrorEstimate true_error_mc(const ThresholdSystem& s, const ThresholdSystem& s_star,
                                   const ConfigDistribution& dist, std::uint64_t samples, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("true_error_mc: need at least one sample");
    if (s.vertex_count() != s_star.vertex_count())
        throw std::invalid_argument("true_error_mc: systems must share a vertex set");
    SplitMix64 rng(seed);
    std::uint64_t bad = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        Configuration c = dist.sample(rng);
        if (successor(s, c) != successor(s_star, c)) ++bad;
    }
    ErrorEstimate est;
    est.samples = samples;
    est.value = static_cast<double>(bad) / static_cast<double>(samples);
    est.standard_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(samples));
    return est;
}

enum class LearnerKind { matching, directed_bounded, known_graph };

struct PacExperimentConfig {
    LearnerKind learner = LearnerKind::matching;
    int n = 8;
    double epsilon = 0.1;
    double delta = 0.1;
    int trials = 100;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> q_override;  // default: ceil of the log-cardinality bound
    int directed_delta = 2;                   // only for the directed learner
    int threads = 1;
};

struct PacReport {
    std::uint64_t q = 0;
    double epsilon = 0.0;
    double delta = 0.0;
    std::vector<double> per_trial_error;
    int refusals = 0;
    double exceed_fraction = 0.0;
    double wall_seconds = 0.0;
};

namespace detail {

inline ThresholdSystem random_ground_truth(LearnerKind kind, int n, int delta, SplitMix64& rng) {
    switch (kind) {
        case LearnerKind::matching: {
            if (n % 2 != 0) throw std::invalid_argument("matching ground truth needs an even vertex count");
            std::vector<int> verts(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
            for (int i = n - 1; i > 0; --i)
                std::swap(verts[static_cast<std::size_t>(i)], verts[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
            std::vector<std::pair<int, int>> edges;
            for (int i = 0; i + 1 < n; i += 2)
                edges.emplace_back(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(i + 1)]);
            std::vector<int> taus;
            for (int v = 0; v < n; ++v) taus.push_back(static_cast<int>(rng.next_below(4)));
            return ThresholdSystem(Graph::undirected(n, std::move(edges)), std::move(taus));
        }
        case LearnerKind::directed_bounded: {
            std::vector<std::pair<int, int>> edges;
            for (int v = 0; v < n; ++v) {
                int indeg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(delta + 1)));
                std::vector<int> others;
                for (int u = 0; u < n; ++u)
                    if (u != v) others.push_back(u);
                for (int i = 0; i < indeg; ++i) {
                    std::size_t pick = rng.next_below(others.size());
                    edges.emplace_back(others[pick], v);
                    others.erase(others.begin() + static_cast<std::ptrdiff_t>(pick));
                }
            }
            Graph g = Graph::directed(n, std::move(edges));
            std::vector<int> taus;
            for (int v = 0; v < n; ++v)
                taus.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.closed_degree(v) + 2))));
            return ThresholdSystem(std::move(g), std::move(taus));
        }
        case LearnerKind::known_graph: {
            std::vector<std::pair<int, int>> edges;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.next_bit()) edges.emplace_back(u, v);
            Graph g = Graph::undirected(n, std::move(edges));
            std::vector<int> taus;
            for (int v = 0; v < n; ++v)
                taus.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.closed_degree(v) + 2))));
            return ThresholdSystem(std::move(g), std::move(taus));
        }
    }
    throw std::logic_error("unknown learner kind");
}

inline LearnOutcome run_learner(LearnerKind kind, const ThresholdSystem& truth, const TrainingSet& obs, int delta) {
    switch (kind) {
        case LearnerKind::matching: return learn_matching(obs.n, obs);
        case LearnerKind::directed_bounded: return learn_directed_bounded(obs.n, obs, delta);
        case LearnerKind::known_graph: return learn_known_graph(truth.graph, obs);
    }
    throw std::logic_error("unknown learner kind");
}

}  // namespace detail

/// Draws a fresh training set per trial, runs the configured learner, and
/// measures the exact true error of each hypothesis under the uniform
/// distribution. Trials derive their seeds as seed + index, so serial and
/// parallel runs produce identical reports.
inline PacReport run_pac_experiment(const PacExperimentConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("pac experiment: need at least one trial");
    if (!(config.epsilon > 0.0 && config.epsilon < 1.0) || !(config.delta > 0.0 && config.delta < 1.0))
        throw std::invalid_argument("pac experiment: epsilon and delta must lie in (0,1)");
    if (config.n > 20)
        throw unsupported_instance("pac experiment computes exact errors; n capped at 20");

    BoundQuery bq;
    bq.n = config.n;
    bq.epsilon = config.epsilon;
    bq.delta = config.delta;
    const std::uint64_t q =
        config.q_override ? *config.q_override : static_cast<std::uint64_t>(std::ceil(sample_complexity_upper(bq)));

    auto started = std::chrono::steady_clock::now();
    PacReport report;
    report.q = q;
    report.epsilon = config.epsilon;
    report.delta = config.delta;
    report.per_trial_error.assign(static_cast<std::size_t>(config.trials), 0.0);
    std::vector<char> refused(static_cast<std::size_t>(config.trials), 0);

    auto dist = ConfigDistribution::uniform(config.n);
    auto run_trial = [&](int t) {
        SplitMix64 rng(config.seed + static_cast<std::uint64_t>(t));
        auto truth = detail::random_ground_truth(config.learner, config.n, config.directed_delta, rng);
        auto obs = sample_training_set(truth, dist, static_cast<int>(q), rng.next());
        auto outcome = detail::run_learner(config.learner, truth, obs, config.directed_delta);
        if (!outcome.learned()) {
            refused[static_cast<std::size_t>(t)] = 1;
            report.per_trial_error[static_cast<std::size_t>(t)] = 1.0;
            return;
        }
        report.per_trial_error[static_cast<std::size_t>(t)] = true_error_exact(*outcome.system, truth, dist);
    };

    if (config.threads <= 1) {
        for (int t = 0; t < config.trials; ++t) run_trial(t);
    } else {
        std::vector<std::thread> pool;
        int chunk = (config.trials + config.threads - 1) / config.threads;
        for (int w = 0; w < config.threads; ++w) {
            int lo = w * chunk, hi = std::min(config.trials, lo + chunk);
            if (lo >= hi) break;
            pool.emplace_back([&, lo, hi] {
                for (int t = lo; t < hi; ++t) run_trial(t);
            });
        }
        for (auto& th : pool) th.join();
    }

    int exceed = 0;
    for (int t = 0; t < config.trials; ++t) {
        report.refusals += refused[static_cast<std::size_t>(t)];
        if (report.per_trial_error[static_cast<std::size_t>(t)] > config.epsilon) ++exceed;
    }
    report.exceed_fraction = static_cast<double>(exceed) / static_cast<double>(config.trials);
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    return report;
}

using LearnerFn = std::function<LearnOutcome(int n, const TrainingSet&)>;

struct ConsistencyViaPacResult {
    bool protocol_answer = false;  // the reduction run on fresh resamples
    bool direct_answer = false;    // the learner run on the observations themselves
    double epsilon = 0.0;
    int repeats_used = 0;
};

/// Decides consistency through the PAC reduction: build the uniform empirical
/// distribution over the observed predecessors, set epsilon = 1/(2q) and
/// delta = 0.1, draw a fresh labeled sample of size q, run the learner, and
/// answer yes iff its hypothesis reproduces every original observation.
/// Repeats amplify one-sidedly: any yes is final, and a contradictory set is
/// a no without running the learner. The direct answer (learner applied to
/// the observations themselves) is reported alongside.
inline ConsistencyViaPacResult consistency_via_pac(const TrainingSet& obs, const LearnerFn& learner, int repeats,
                                                   std::uint64_t seed) {
    if (repeats < 1) throw std::invalid_argument("consistency_via_pac: need at least one repeat");
    ConsistencyViaPacResult result;
    if (obs.size() == 0) {
        result.protocol_answer = result.direct_answer = true;
        result.epsilon = 0.5;
        return result;
    }
    if (!observations_deterministic(obs)) return result;  // no on both routes

    const int q = obs.size();
    result.epsilon = 1.0 / (2.0 * q);

    // every draw from the support is labeled with its observed successor
    std::map<Configuration, Configuration> labels;
    for (const auto& [pred, succ] : obs.pairs) labels.emplace(pred, succ);
    auto dist = ConfigDistribution::empirical_over_predecessors(obs);

    {
        auto direct = learner(obs.n, obs);
        result.direct_answer = direct.learned() && is_consistent(*direct.system, obs);
    }

    for (int r = 0; r < repeats; ++r) {
        result.repeats_used = r + 1;
        SplitMix64 rng(seed + static_cast<std::uint64_t>(r));
        TrainingSet fresh(obs.n);
        for (int i = 0; i < q; ++i) {
            Configuration pred = dist.sample(rng);
            fresh.add(pred, labels.at(pred));
        }
        auto outcome = learner(obs.n, fresh);
        if (outcome.learned() && is_consistent(*outcome.system, obs)) {
            result.protocol_answer = true;
            break;
        }
    }
    return result;
}

}  // namespace syds
