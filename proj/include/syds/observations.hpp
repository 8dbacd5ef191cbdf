#pragma once

// Training sets of (configuration, successor) pairs: sampling from a
// distribution, per-vertex partitioning, consistency checks, and the
// per-vertex low/high score statistics every learner is built on.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "syds/core.hpp"
#include "syds/rng.hpp"

namespace syds {

/// Ordered list of observed transitions (predecessor, successor). Order is
/// preserved so sampled sets replay bit-identically.
struct TrainingSet {
    int n = 0;
    std::vector<std::pair<Configuration, Configuration>> pairs;

    TrainingSet() = default;
    explicit TrainingSet(int n_) : n(n_) {}
    TrainingSet(int n_, std::vector<std::pair<Configuration, Configuration>> p) : n(n_), pairs(std::move(p)) {
        for (const auto& [c, cp] : pairs)
            if (c.size() != n || cp.size() != n)
                throw std::invalid_argument("training pair length does not match vertex count");
    }

    int size() const { return static_cast<int>(pairs.size()); }
    void add(Configuration pred, Configuration succ) {
        if (pred.size() != n || succ.size() != n)
            throw std::invalid_argument("training pair length does not match vertex count");
        pairs.emplace_back(std::move(pred), std::move(succ));
    }
};

/// A samplable distribution over configurations: uniform over {0,1}^n,
/// product of per-vertex Bernoullis, or an empirical distribution over a
/// finite support with rational weights (stored as integer counts over a
/// common total, which keeps exact-error arithmetic exact).
class ConfigDistribution {
public:
    enum class Kind { uniform, bernoulli_product, empirical };

    static ConfigDistribution uniform(int n) {
        ConfigDistribution d;
        d.kind_ = Kind::uniform;
        d.n_ = n;
        d.validate();
        return d;
    }

    static ConfigDistribution bernoulli_product(std::vector<double> p) {
        ConfigDistribution d;
        d.kind_ = Kind::bernoulli_product;
        d.n_ = static_cast<int>(p.size());
        d.p_ = std::move(p);
        d.validate();
        return d;
    }

    static ConfigDistribution empirical(std::vector<std::pair<Configuration, std::uint64_t>> support) {
        ConfigDistribution d;
        d.kind_ = Kind::empirical;
        d.support_ = std::move(support);
        d.n_ = d.support_.empty() ? 0 : d.support_.front().first.size();
        for (const auto& [c, w] : d.support_) d.total_ += w;
        d.validate();
        return d;
    }

    /// Uniform distribution over the predecessors of a training set, with
    /// duplicate predecessors collapsed into one support point of summed mass.
    static ConfigDistribution empirical_over_predecessors(const TrainingSet& obs) {
        std::map<Configuration, std::uint64_t> counts;
        for (const auto& [pred, succ] : obs.pairs) counts[pred] += 1;
        std::vector<std::pair<Configuration, std::uint64_t>> support(counts.begin(), counts.end());
        return empirical(std::move(support));
    }

    Kind kind() const { return kind_; }
    int dimension() const { return n_; }
    const std::vector<double>& bernoulli_p() const { return p_; }
    const std::vector<std::pair<Configuration, std::uint64_t>>& support() const { return support_; }
    std::uint64_t total_count() const { return total_; }

    Configuration sample(SplitMix64& rng) const {
        switch (kind_) {
            case Kind::uniform: {
                Configuration c = Configuration::zeros(n_);
                for (int v = 0; v < n_; ++v) c.set(v, rng.next_bit());
                return c;
            }
            case Kind::bernoulli_product: {
                Configuration c = Configuration::zeros(n_);
                for (int v = 0; v < n_; ++v) c.set(v, rng.next_double() < p_[static_cast<std::size_t>(v)]);
                return c;
            }
            case Kind::empirical: {
                std::uint64_t r = rng.next_below(total_);
                for (const auto& [c, w] : support_) {
                    if (r < w) return c;
                    r -= w;
                }
                return support_.back().first;  // unreachable for well-formed totals
            }
        }
        throw std::logic_error("unknown distribution kind");
    }

    void validate() const {
        if (n_ < 1) throw std::invalid_argument("distribution dimension must be at least 1");
        if (kind_ == Kind::bernoulli_product) {
            for (double p : p_)
                if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("bernoulli probability outside [0,1]");
        }
        if (kind_ == Kind::empirical) {
            if (support_.empty()) throw std::invalid_argument("empirical distribution needs a nonempty support");
            if (total_ == 0) throw std::invalid_argument("empirical distribution has zero total mass");
            for (const auto& [c, w] : support_) {
                if (c.size() != n_) throw std::invalid_argument("empirical support configuration length mismatch");
                if (w == 0) throw std::invalid_argument("empirical support weight must be positive");
            }
        }
    }

private:
    Kind kind_ = Kind::uniform;
    int n_ = 0;
    std::vector<double> p_;
    std::vector<std::pair<Configuration, std::uint64_t>> support_;
    std::uint64_t total_ = 0;
};

/// Draw q i.i.d. predecessors from dist and label each with its successor
/// under the system. Same seed, same output.
inline TrainingSet sample_training_set(const ThresholdSystem& system, const ConfigDistribution& dist, int q,
                                       std::uint64_t seed) {
    if (q < 1) throw std::invalid_argument("sample_training_set: q must be at least 1");
    if (dist.dimension() != system.vertex_count())
        throw std::invalid_argument("sample_training_set: distribution dimension does not match system");
    dist.validate();
    SplitMix64 rng(seed);
    TrainingSet obs(system.vertex_count());
    for (int i = 0; i < q; ++i) {
        Configuration pred = dist.sample(rng);
        obs.add(pred, successor(system, pred));
    }
    return obs;
}

/// Split obs by the successor state of vertex v; both halves keep the
/// original order.
inline std::pair<TrainingSet, TrainingSet> partition_by_target(const TrainingSet& obs, int v) {
    if (v < 0 || v >= obs.n) throw std::invalid_argument("partition_by_target: vertex id out of range");
    TrainingSet zeros(obs.n), ones(obs.n);
    for (const auto& [pred, succ] : obs.pairs)
        (succ.get(v) ? ones : zeros).pairs.emplace_back(pred, succ);
    return {std::move(zeros), std::move(ones)};
}

/// True iff the system reproduces the successor of every observed pair.
inline bool is_consistent(const ThresholdSystem& system, const TrainingSet& obs) {
    if (obs.n != system.vertex_count())
        throw std::invalid_argument("is_consistent: observation width does not match system");
    for (const auto& [pred, succ] : obs.pairs)
        if (successor(system, pred) != succ) return false;
    return true;
}

/// True iff no predecessor appears with two different successors. A false
/// answer rules out any deterministic system.
inline bool observations_deterministic(const TrainingSet& obs) {
    std::map<Configuration, const Configuration*> seen;
    for (const auto& [pred, succ] : obs.pairs) {
        auto [it, inserted] = seen.emplace(pred, &succ);
        if (!inserted && !(*it->second == succ)) return false;
    }
    return true;
}

/// Highest score of Y over the pairs where v's successor state is 0, or -1
/// if there are none. A consistent threshold for v over Y must exceed this.
inline int l_value(const TrainingSet& obs, int v, const std::vector<int>& y) {
    if (v < 0 || v >= obs.n) throw std::invalid_argument("l_value: vertex id out of range");
    int best = -1;
    bool any = false;
    for (const auto& [pred, succ] : obs.pairs) {
        if (succ.get(v)) continue;
        any = true;
        best = std::max(best, score(pred, y));
    }
    return any ? best : -1;
}

/// Lowest score of Y over the pairs where v's successor state is 1, or n+1
/// if there are none (unconstrained above).
inline int h_value(const TrainingSet& obs, int v, const std::vector<int>& y) {
    if (v < 0 || v >= obs.n) throw std::invalid_argument("h_value: vertex id out of range");
    int best = obs.n + 1;
    bool any = false;
    for (const auto& [pred, succ] : obs.pairs) {
        if (!succ.get(v)) continue;
        int s = score(pred, y);
        best = any ? std::min(best, s) : s;
        any = true;
    }
    return any ? best : obs.n + 1;
}

}  // namespace syds
