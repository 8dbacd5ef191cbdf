#pragma once

// Executable sample-complexity bounds and the quadratic shattering
// construction behind the Natarajan-dimension lower bound.
//
// Logarithms are natural throughout; switching to another base only rescales
// the caller-supplied constants c and c1, which default to 1 and are never
// hard-coded.

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <vector>

#include "syds/core.hpp"

namespace syds {

struct BoundQuery {
    int n = 1;
    double epsilon = 0.1;
    double delta = 0.1;
    double d_avg = 0.0;  // average degree of the observed graph
    long long k = 0;     // missing-edge budget
    long long m = 0;     // total edge budget
    double c = 1.0;
    double c1 = 1.0;

    void validate() const {
        if (n < 1) throw std::invalid_argument("bound query: n must be at least 1");
        if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("bound query: epsilon must lie in (0,1)");
        if (!(delta > 0.0 && delta < 1.0)) throw std::invalid_argument("bound query: delta must lie in (0,1)");
        if (k < 0 || m < 0) throw std::invalid_argument("bound query: k and m must be non-negative");
        if (d_avg < 0.0) throw std::invalid_argument("bound query: d_avg must be non-negative");
    }
};

/// (1/eps) * (n^2 + n ln n + ln(1/delta)) — the log-cardinality bound for
/// the full unknown-graph hypothesis class, in its printed form.
inline double sample_complexity_upper(const BoundQuery& q) {
    q.validate();
    double n = q.n;
    return (1.0 / q.epsilon) * (n * n + n * std::log(n) + std::log(1.0 / q.delta));
}

/// Sharper variant counting hypotheses exactly: ln|H| = C(n,2) ln 2 + n ln n.
inline double sample_complexity_upper_tight(const BoundQuery& q) {
    q.validate();
    double n = q.n;
    return (1.0 / q.epsilon) * (n * (n - 1) / 2.0 * std::log(2.0) + n * std::log(n) + std::log(1.0 / q.delta));
}

/// (1/eps) * (n ln(d_avg+3) + c k ln(n^2/k) + ln(1/delta)) for a partially
/// observed graph with at most k missing edges. k = 0 keeps only the
/// known-graph term (the k-term vanishes in the limit).
inline double sample_complexity_partial(const BoundQuery& q) {
    q.validate();
    double n = q.n;
    if (q.k > static_cast<long long>(q.n) * q.n) throw std::invalid_argument("bound query: k cannot exceed n^2");
    if (q.c <= 0.0) throw std::invalid_argument("bound query: c must be positive");
    double base = n * std::log(q.d_avg + 3.0) + std::log(1.0 / q.delta);
    if (q.k == 0) return (1.0 / q.epsilon) * base;
    double kd = static_cast<double>(q.k);
    return (1.0 / q.epsilon) * (base + q.c * kd * std::log(n * n / kd));
}

/// (1/eps) * (c m ln(n^2/m) + ln(1/delta)) when only an edge budget m is
/// known; the observed graph is taken to be edgeless.
inline double sample_complexity_m_edges(const BoundQuery& q) {
    q.validate();
    double n = q.n;
    if (q.m < 1 || q.m > static_cast<long long>(q.n) * q.n)
        throw std::invalid_argument("bound query: m must lie in [1, n^2]");
    if (q.c <= 0.0) throw std::invalid_argument("bound query: c must be positive");
    double md = static_cast<double>(q.m);
    return (1.0 / q.epsilon) * (q.c * md * std::log(n * n / md) + std::log(1.0 / q.delta));
}

/// floor(n^2/4): the size of the shatterable set constructed below.
inline long long ndim_lower_bound(int n) {
    if (n < 2) throw std::invalid_argument("ndim_lower_bound: n must be at least 2 (two-sided partition)");
    return static_cast<long long>(n) * n / 4;
}

/// c1 * (1/eps) * (n^2/4 + ln(1/delta)): the sample-complexity lower bound
/// implied by the shattering construction.
inline double ndim_sample_lower_bound(const BoundQuery& q) {
    q.validate();
    if (q.c1 <= 0.0) throw std::invalid_argument("bound query: c1 must be positive");
    double n = q.n;
    return q.c1 * (1.0 / q.epsilon) * (n * n / 4.0 + std::log(1.0 / q.delta));
}

/// The shattering construction: vertices split into halves Y and Z, the
/// shattered set R holds every configuration with exactly one state-1 vertex
/// in each half, g1 keeps the Y half, and g2 clears everything.
struct ShatterInstance {
    int n = 0;
    std::vector<int> y_side;  // first floor(n/2) vertices
    std::vector<int> z_side;  // the rest
    std::vector<Configuration> r;
    std::vector<Configuration> g1_of_r;
    std::vector<Configuration> g2_of_r;
};

inline ShatterInstance build_shatter_instance(int n) {
    if (n < 2) throw std::invalid_argument("build_shatter_instance: n must be at least 2");
    ShatterInstance inst;
    inst.n = n;
    for (int v = 0; v < n / 2; ++v) inst.y_side.push_back(v);
    for (int v = n / 2; v < n; ++v) inst.z_side.push_back(v);
    for (int y : inst.y_side)
        for (int z : inst.z_side) {
            Configuration c = Configuration::zeros(n);
            c.set(y, true);
            c.set(z, true);
            inst.r.push_back(c);
            Configuration g1 = Configuration::zeros(n);
            g1.set(y, true);
            inst.g1_of_r.push_back(g1);
            inst.g2_of_r.push_back(Configuration::zeros(n));
        }
    return inst;
}

/// The witness system for a subset R' of R (given by indices into inst.r):
/// a bipartite graph joining exactly the 1-pairs of R', with threshold 2 on
/// the Y side and 3 on the Z side (clamped into the canonical range where a
/// Z vertex is isolated). Realizes g1 on R' and g2 on R \ R'.
inline ThresholdSystem shatter_witness(const ShatterInstance& inst, const std::vector<std::size_t>& r_prime) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t idx : r_prime) {
        if (idx >= inst.r.size()) throw std::invalid_argument("shatter_witness: index outside R");
        int y = -1, z = -1;
        for (int v : inst.y_side)
            if (inst.r[idx].get(v)) y = v;
        for (int v : inst.z_side)
            if (inst.r[idx].get(v)) z = v;
        edges.emplace_back(y, z);
    }
    Graph g = Graph::undirected(inst.n, std::move(edges));
    std::vector<int> taus(static_cast<std::size_t>(inst.n));
    for (int v : inst.y_side) taus[static_cast<std::size_t>(v)] = 2;
    for (int v : inst.z_side) taus[static_cast<std::size_t>(v)] = 3;
    ThresholdSystem s(std::move(g), std::move(taus));
    return s.canonicalized();
}

/// Checks the two shattering requirements by exhaustive simulation: g1 and g2
/// disagree on all of R, and for every subset R' the witness system maps R'
/// through g1 and the rest through g2. Exponential in |R| = floor(n^2/4).
inline bool verify_shattering(int n, int threads = 1) {
    if (n < 2) throw std::invalid_argument("verify_shattering: n must be at least 2");
    auto inst = build_shatter_instance(n);
    const std::size_t r_size = inst.r.size();
    if (r_size > 24) throw unsupported_instance("verify_shattering: 2^|R| subsets is too many to enumerate");

    for (std::size_t i = 0; i < r_size; ++i)
        if (inst.g1_of_r[i] == inst.g2_of_r[i]) return false;

    const std::uint64_t subsets = 1ULL << r_size;
    auto check_range = [&](std::uint64_t lo, std::uint64_t hi) -> bool {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::vector<std::size_t> r_prime;
            for (std::size_t i = 0; i < r_size; ++i)
                if ((mask >> i) & 1ULL) r_prime.push_back(i);
            ThresholdSystem witness = shatter_witness(inst, r_prime);
            for (std::size_t i = 0; i < r_size; ++i) {
                const Configuration& want = ((mask >> i) & 1ULL) ? inst.g1_of_r[i] : inst.g2_of_r[i];
                if (successor(witness, inst.r[i]) != want) return false;
            }
        }
        return true;
    };

    if (threads <= 1) return check_range(0, subsets);

    std::vector<char> ok(static_cast<std::size_t>(threads), 1);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (subsets + static_cast<std::uint64_t>(threads) - 1) / static_cast<std::uint64_t>(threads);
    for (int t = 0; t < threads; ++t) {
        std::uint64_t lo = static_cast<std::uint64_t>(t) * chunk;
        std::uint64_t hi = std::min(subsets, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&, t, lo, hi] { ok[static_cast<std::size_t>(t)] = check_range(lo, hi) ? 1 : 0; });
    }
    for (auto& th : pool) th.join();
    for (char c : ok)
        if (!c) return false;
    return true;
}

}  // namespace syds
