#pragma once

// Core types for synchronous threshold dynamical systems: graphs
// (undirected or directed), binary configurations, and per-vertex
// integer thresholds, plus the exact one-step update rule.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace syds {

/// Thrown when an instance is structurally valid but outside the sizes or
/// parameter ranges an operation supports (e.g. enumeration limits).
struct unsupported_instance : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A binary state vector of length n; entry v is the state of vertex v.
class Configuration {
public:
    Configuration() = default;
    explicit Configuration(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto b : bits_)
            if (b > 1) throw std::invalid_argument("configuration entries must be 0 or 1");
    }

    static Configuration zeros(int n) { return Configuration(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 0)); }
    static Configuration ones(int n) { return Configuration(std::vector<std::uint8_t>(static_cast<std::size_t>(n), 1)); }

    /// Parse a bitstring such as "0110"; vertex 0 is the leftmost character.
    static Configuration from_string(const std::string& s) {
        std::vector<std::uint8_t> bits;
        bits.reserve(s.size());
        for (char c : s) {
            if (c != '0' && c != '1') throw std::invalid_argument("bitstring may contain only '0' and '1'");
            bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
        return Configuration(std::move(bits));
    }

    std::string to_string() const {
        std::string s(bits_.size(), '0');
        for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
        return s;
    }

    int size() const { return static_cast<int>(bits_.size()); }
    bool get(int v) const {
        if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
        return bits_[static_cast<std::size_t>(v)] != 0;
    }
    void set(int v, bool b) {
        if (v < 0 || v >= size()) throw std::invalid_argument("vertex id out of range");
        bits_[static_cast<std::size_t>(v)] = b ? 1 : 0;
    }

    const std::vector<std::uint8_t>& bits() const { return bits_; }

    friend bool operator==(const Configuration& a, const Configuration& b) { return a.bits_ == b.bits_; }
    friend bool operator!=(const Configuration& a, const Configuration& b) { return !(a == b); }
    friend bool operator<(const Configuration& a, const Configuration& b) { return a.bits_ < b.bits_; }

private:
    std::vector<std::uint8_t> bits_;
};

/// Graph on vertices 0..n-1. Undirected edges are stored canonically
/// (smaller endpoint first); directed edges are (source, target) pairs and
/// contribute the source to the target's in-neighborhood. The constructor
/// canonicalizes and deduplicates but does not reject malformed edges;
/// validation is a separate, reporting step (see validate_system).
class Graph {
public:
    Graph() = default;
    Graph(int n, bool directed, std::vector<std::pair<int, int>> edges)
        : n_(n), directed_(directed), edges_(std::move(edges)) {
        canonicalize();
        build_adjacency();
    }

    static Graph undirected(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, false, std::move(edges)); }
    static Graph directed(int n, std::vector<std::pair<int, int>> edges) { return Graph(n, true, std::move(edges)); }
    static Graph edgeless(int n, bool directed = false) { return Graph(n, directed, {}); }

    int vertex_count() const { return n_; }
    bool is_directed() const { return directed_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const {
        std::pair<int, int> e = directed_ ? std::make_pair(u, v) : std::make_pair(std::min(u, v), std::max(u, v));
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// In-neighbors for directed graphs, neighbors for undirected; sorted,
    /// not including v itself.
    const std::vector<int>& in_neighbors(int v) const {
        if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
        return in_adj_[static_cast<std::size_t>(v)];
    }

    /// Closed in-neighborhood: v together with its (in-)neighbors, sorted.
    std::vector<int> closed_neighborhood(int v) const {
        const auto& nb = in_neighbors(v);
        std::vector<int> out;
        out.reserve(nb.size() + 1);
        bool placed = false;
        for (int u : nb) {
            if (!placed && v < u) { out.push_back(v); placed = true; }
            out.push_back(u);
        }
        if (!placed) out.push_back(v);
        return out;
    }

    int closed_degree(int v) const { return static_cast<int>(in_neighbors(v).size()) + 1; }

    /// New graph with extra edges added (same directedness).
    Graph with_edges(const std::vector<std::pair<int, int>>& extra) const {
        auto all = edges_;
        all.insert(all.end(), extra.begin(), extra.end());
        return Graph(n_, directed_, std::move(all));
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.directed_ == b.directed_ && a.edges_ == b.edges_;
    }

private:
    void canonicalize() {
        if (!directed_) {
            for (auto& [u, v] : edges_)
                if (u > v) std::swap(u, v);
        }
        std::sort(edges_.begin(), edges_.end());
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    }

    void build_adjacency() {
        in_adj_.assign(static_cast<std::size_t>(std::max(n_, 0)), {});
        for (const auto& [u, v] : edges_) {
            if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) continue;  // flagged by validation
            in_adj_[static_cast<std::size_t>(v)].push_back(u);
            if (!directed_) in_adj_[static_cast<std::size_t>(u)].push_back(v);
        }
        for (auto& a : in_adj_) std::sort(a.begin(), a.end());
    }

    int n_ = 0;
    bool directed_ = false;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> in_adj_;
};

/// A graph plus one integer threshold per vertex. Vertex v's next state is 1
/// iff the number of state-1 vertices in its closed in-neighborhood is at
/// least thresholds[v]. The canonical threshold range is [0, closed_degree+1];
/// closed_degree+1 can never be reached by a score, so it encodes "never fires".
struct ThresholdSystem {
    Graph graph;
    std::vector<int> thresholds;

    ThresholdSystem() = default;
    ThresholdSystem(Graph g, std::vector<int> taus) : graph(std::move(g)), thresholds(std::move(taus)) {}

    int vertex_count() const { return graph.vertex_count(); }

    /// Copy with every threshold clamped into the canonical range; this never
    /// changes the successor of any configuration.
    ThresholdSystem canonicalized() const {
        ThresholdSystem out = *this;
        for (int v = 0; v < vertex_count() && v < static_cast<int>(out.thresholds.size()); ++v) {
            int hi = graph.closed_degree(v) + 1;
            out.thresholds[static_cast<std::size_t>(v)] =
                std::clamp(out.thresholds[static_cast<std::size_t>(v)], 0, hi);
        }
        return out;
    }

    friend bool operator==(const ThresholdSystem& a, const ThresholdSystem& b) {
        return a.graph == b.graph && a.thresholds == b.thresholds;
    }
};

/// Number of vertices of the given set that are in state 1 under config.
inline int score(const Configuration& config, const std::vector<int>& vertex_set) {
    int count = 0;
    for (int v : vertex_set) {
        if (v < 0 || v >= config.size()) throw std::invalid_argument("score: vertex id out of range");
        count += config.get(v) ? 1 : 0;
    }
    return count;
}

/// One synchronous step of the system. Deterministic: equal inputs give
/// equal outputs.
inline Configuration successor(const ThresholdSystem& system, const Configuration& config) {
    const int n = system.vertex_count();
    if (config.size() != n) throw std::invalid_argument("successor: configuration length does not match vertex count");
    if (static_cast<int>(system.thresholds.size()) != n)
        throw std::invalid_argument("successor: thresholds length does not match vertex count");
    Configuration next = Configuration::zeros(n);
    for (int v = 0; v < n; ++v) {
        int s = config.get(v) ? 1 : 0;
        for (int u : system.graph.in_neighbors(v)) s += config.get(u) ? 1 : 0;
        next.set(v, s >= system.thresholds[static_cast<std::size_t>(v)]);
    }
    return next;
}

/// Configurations visited in `steps` synchronous updates; element 0 is the
/// start, so the result has steps+1 entries.
inline std::vector<Configuration> trajectory(const ThresholdSystem& system, const Configuration& config, int steps) {
    if (steps < 0) throw std::invalid_argument("trajectory: steps must be non-negative");
    std::vector<Configuration> out;
    out.reserve(static_cast<std::size_t>(steps) + 1);
    out.push_back(config);
    for (int i = 0; i < steps; ++i) out.push_back(successor(system, out.back()));
    return out;
}

/// All invariant violations of the system as human-readable strings; empty
/// means the system is well formed. Violations are data, not errors.
inline std::vector<std::string> validate_system(const ThresholdSystem& system) {
    std::vector<std::string> issues;
    const int n = system.graph.vertex_count();
    if (n < 1) issues.push_back("vertex count must be at least 1");
    for (const auto& [u, v] : system.graph.edges()) {
        if (u == v) issues.push_back("self-loop at vertex " + std::to_string(u));
        if (u < 0 || u >= n) issues.push_back("edge endpoint out of range: " + std::to_string(u));
        if (v < 0 || v >= n) issues.push_back("edge endpoint out of range: " + std::to_string(v));
    }
    if (static_cast<int>(system.thresholds.size()) != n) {
        issues.push_back("thresholds length " + std::to_string(system.thresholds.size()) +
                         " does not match vertex count " + std::to_string(n));
        return issues;
    }
    for (int v = 0; v < n; ++v) {
        int tau = system.thresholds[static_cast<std::size_t>(v)];
        if (tau < 0) {
            issues.push_back("threshold below 0 at vertex " + std::to_string(v));
        } else if (n >= 1 && tau > system.graph.closed_degree(v) + 1) {
            issues.push_back("threshold above canonical range at vertex " + std::to_string(v) +
                             " (max " + std::to_string(system.graph.closed_degree(v) + 1) + ")");
        }
    }
    return issues;
}

}  // namespace syds
