// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. The CLI binary path is taken from argv[1] (used by the
// determinism criterion).
//
//   1. matching learner decision == exhaustive matching oracle
//   2. bounded-in-degree directed learner == exhaustive directed oracle
//   3. partial-graph learner: recovery, refusals, matching-weight identity
//   4. epsilon-delta experiment for the matching class at the printed bound
//   5. shattering construction verified by full subset enumeration
//   6. 3SAT reduction: satisfiability == consistency at desk scale
//   7. bound arithmetic: pinned values, degenerate identities, monotonicity
//   8. CLI byte-determinism across reruns and thread counts

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "../helpers/oracles.hpp"
#include "syds/evaluation.hpp"
#include "syds/hardness.hpp"
#include "syds/io.hpp"
#include "syds/learners.hpp"
#include "syds/theory.hpp"

using namespace syds;

namespace {

int g_failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    if (!pass) ++g_failures;
}

TrainingSet truth_table(const ThresholdSystem& s) {
    const int n = s.vertex_count();
    TrainingSet obs(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        Configuration c = Configuration::zeros(n);
        for (int v = 0; v < n; ++v) c.set(v, (mask >> v) & 1u);
        obs.add(c, successor(s, c));
    }
    return obs;
}

ThresholdSystem random_matching_system(int n, SplitMix64& rng) {
    std::vector<int> verts(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) verts[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(verts[static_cast<std::size_t>(i)], verts[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; i += 2)
        edges.emplace_back(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(i + 1)]);
    Graph g = Graph::undirected(n, std::move(edges));
    std::vector<int> taus;
    for (int v = 0; v < n; ++v) taus.push_back(static_cast<int>(rng.next_below(4)));
    return ThresholdSystem(std::move(g), std::move(taus));
}

ThresholdSystem random_directed_system(int n, int delta, SplitMix64& rng) {
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

TrainingSet corrupted(TrainingSet obs, SplitMix64& rng) {
    for (auto& [pred, succ] : obs.pairs)
        if (rng.next_below(3) == 0) {
            int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(obs.n)));
            succ.set(v, !succ.get(v));
        }
    return obs;
}

// criterion 1 -----------------------------------------------------------

void criterion_1() {
    SplitMix64 rng(101101);
    int cases = 0, agreements = 0, sound = 0, yeses = 0;
    for (int rep = 0; rep < 180; ++rep)
        for (int n : {4, 6, 8}) {
            int q = 1 + static_cast<int>(rng.next_below(12));
            TrainingSet obs(n);
            std::uint64_t mode = rng.next_below(4);
            if (mode <= 1) {
                obs = sample_training_set(random_matching_system(n, rng), ConfigDistribution::uniform(n), q, rng.next());
                if (mode == 1) obs = corrupted(std::move(obs), rng);
            } else {
                for (int i = 0; i < q; ++i)
                    obs.add(oracle::random_configuration(n, rng), oracle::random_configuration(n, rng));
            }
            auto fast = learn_matching(n, obs);
            auto brute = brute_force_consistent(n, obs, HypothesisClass::matching_threshold);
            ++cases;
            if (fast.learned() == brute.learned()) ++agreements;
            if (fast.learned()) {
                ++yeses;
                if (is_consistent(*fast.system, obs)) ++sound;
            }
        }
    std::ostringstream note;
    note << "matching learner vs exhaustive oracle: " << agreements << "/" << cases << " decisions agree, "
         << sound << "/" << yeses << " hypotheses consistent";
    report(1, agreements == cases && sound == yeses, note.str());
}

// criterion 2 -----------------------------------------------------------

void criterion_2() {
    SplitMix64 rng(202202);
    int cases = 0, agreements = 0, sound = 0, yeses = 0;
    for (int rep = 0; rep < 36; ++rep)
        for (int n : {4, 5, 6})
            for (int delta : {0, 1, 2}) {
                int q = 1 + static_cast<int>(rng.next_below(12));
                TrainingSet obs(n);
                std::uint64_t mode = rng.next_below(4);
                if (mode <= 1) {
                    obs = sample_training_set(random_directed_system(n, delta, rng), ConfigDistribution::uniform(n),
                                              q, rng.next());
                    if (mode == 1) obs = corrupted(std::move(obs), rng);
                } else {
                    for (int i = 0; i < q; ++i)
                        obs.add(oracle::random_configuration(n, rng), oracle::random_configuration(n, rng));
                }
                BruteForceOptions opt;
                opt.delta = delta;
                auto fast = learn_directed_bounded(n, obs, delta);
                auto brute = brute_force_consistent(n, obs, HypothesisClass::directed_bounded, opt);
                ++cases;
                if (fast.learned() == brute.learned()) ++agreements;
                if (fast.learned()) {
                    ++yeses;
                    if (is_consistent(*fast.system, obs)) ++sound;
                }
            }
    std::ostringstream note;
    note << "directed learner vs exhaustive oracle: " << agreements << "/" << cases << " decisions agree, "
         << sound << "/" << yeses << " hypotheses consistent";
    report(2, agreements == cases && sound == yeses, note.str());
}

// criterion 3 -----------------------------------------------------------

void criterion_3() {
    SplitMix64 rng(303303);
    int cases = 0, recovered = 0;
    int identity_graphs = 0;
    bool identity_ok = true;

    for (int rep = 0; rep < 200; ++rep) {
        int n = 4 + static_cast<int>(rng.next_below(5));  // 4..8
        auto g_obs = oracle::random_undirected_graph(n, rng.next(), 35);
        std::vector<std::pair<int, int>> missing;
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (!g_obs.has_edge(u, v) && !used[static_cast<std::size_t>(u)] &&
                    !used[static_cast<std::size_t>(v)] && rng.next_below(4) == 0) {
                    missing.emplace_back(u, v);
                    used[static_cast<std::size_t>(u)] = used[static_cast<std::size_t>(v)] = true;
                }
        if (static_cast<int>(missing.size()) > n / 2) missing.resize(static_cast<std::size_t>(n / 2));
        int k = static_cast<int>(missing.size());
        Graph truth_graph = g_obs.with_edges(missing);
        ThresholdSystem truth(truth_graph, oracle::random_thresholds(truth_graph, rng));
        auto obs = truth_table(truth);

        ++cases;
        auto out = learn_partial(PartialInstance(g_obs, k), obs);
        if (out.learned() && is_consistent(*out.system, obs)) ++recovered;

        // the matching-weight identity over every matching of the candidate graph
        auto inst = build_partial_matching_instance(g_obs, obs);
        if (inst.blocked.empty() && inst.t >= 1) {
            ++identity_graphs;
            std::vector<std::pair<int, int>> plain;
            for (const auto& e : inst.candidates.edges) plain.emplace_back(e.u, e.v);
            std::vector<bool> is_pinned(static_cast<std::size_t>(n), false);
            for (int v : inst.pinned) is_pinned[static_cast<std::size_t>(v)] = true;
            oracle::for_each_matching(n, plain, [&](const std::vector<std::pair<int, int>>& m) {
                long long e1 = 0, e2 = 0, covered = 0, weight = 0;
                for (const auto& [u, v] : m) {
                    bool up = is_pinned[static_cast<std::size_t>(u)], vp = is_pinned[static_cast<std::size_t>(v)];
                    covered += (up ? 1 : 0) + (vp ? 1 : 0);
                    if (up && vp) ++e2;
                    else ++e1;
                    for (const auto& e : inst.candidates.edges)
                        if (e.u == u && e.v == v) weight += e.w;
                }
                if (covered != e1 + 2 * e2) identity_ok = false;
                if (weight != inst.t * e1 + (2 * inst.t + 1) * e2) identity_ok = false;
                if (covered != weight / inst.t) identity_ok = false;  // mu = floor(W/t)
            });
        }
    }

    // instances engineered so one vertex lost two incident edges
    int blocked_cases = 0, blocked_refused = 0;
    for (int rep = 0; rep < 60; ++rep) {
        int n = 4 + static_cast<int>(rng.next_below(5));
        auto base = oracle::random_undirected_graph(n, rng.next(), 50);
        int v = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        auto nb = base.in_neighbors(v);
        if (nb.size() < 2) continue;
        std::vector<std::pair<int, int>> kept;
        int dropped = 0;
        for (auto [a, b] : base.edges()) {
            bool incident = (a == v || b == v);
            if (incident && dropped < 2) {
                ++dropped;
                continue;
            }
            kept.emplace_back(a, b);
        }
        Graph g_obs(n, false, kept);
        auto taus = oracle::random_thresholds(base, rng);
        taus[static_cast<std::size_t>(v)] = 2;  // both lost edges matter to v
        ThresholdSystem truth(base, taus);
        auto obs = truth_table(truth);
        auto inst = build_partial_matching_instance(g_obs, obs);
        if (inst.blocked.empty()) continue;  // the dropped edges did not bind
        ++blocked_cases;
        auto out = learn_partial(PartialInstance(g_obs, n / 2), obs);
        if (!out.learned() && out.refusal->reason == RefusalReason::vertex_needs_two_edges) ++blocked_refused;
    }

    std::ostringstream note;
    note << "partial learner: " << recovered << "/" << cases << " truth tables recovered, " << blocked_refused
         << "/" << blocked_cases << " two-edge-deficient instances refused, weight identity "
         << (identity_ok ? "holds" : "violated") << " on " << identity_graphs << " candidate graphs";
    report(3, recovered == cases && blocked_cases >= 25 && blocked_refused == blocked_cases && identity_ok,
           note.str());
}

// criterion 4 -----------------------------------------------------------

void criterion_4() {
    PacExperimentConfig config;
    config.learner = LearnerKind::matching;
    config.n = 8;
    config.epsilon = 0.1;
    config.delta = 0.1;
    config.trials = 200;
    config.seed = 404404;
    auto rep = run_pac_experiment(config);
    double tolerance = config.delta + 3.0 * std::sqrt(config.delta * (1.0 - config.delta) / config.trials);
    std::ostringstream note;
    note << "matching class, n=8, q=" << rep.q << ": exceed fraction " << rep.exceed_fraction << " <= " << tolerance
         << ", refusals " << rep.refusals;
    report(4, rep.exceed_fraction <= tolerance && rep.refusals == 0, note.str());
}

// criterion 5 -----------------------------------------------------------

void criterion_5() {
    bool ok = true;
    std::ostringstream note;
    note << "shattering verified for n in {2,3,4,5,6}";
    for (int n = 2; n <= 6; ++n) {
        if (!verify_shattering(n)) ok = false;
        if (static_cast<long long>(build_shatter_instance(n).r.size()) != ndim_lower_bound(n)) ok = false;
    }
    for (int n = 2; n <= 12; ++n)
        if (static_cast<long long>(build_shatter_instance(n).r.size()) != ndim_lower_bound(n)) ok = false;
    if (std::getenv("ACCEPTANCE_EXTENDED")) {
        bool big = verify_shattering(8, 2);
        note << ", extended n=8 " << (big ? "verified" : "FAILED");
        if (!big) ok = false;
    }
    report(5, ok, note.str());
}

// criterion 6 -----------------------------------------------------------

std::vector<std::vector<int>> clause_pool(int nv) {
    std::vector<int> lits;
    for (int v = 1; v <= nv; ++v) {
        lits.push_back(v);
        lits.push_back(-v);
    }
    std::vector<std::vector<int>> pool;
    const int count = static_cast<int>(lits.size());
    for (int i = 0; i < count; ++i) {
        pool.push_back({lits[static_cast<std::size_t>(i)]});
        for (int j = i + 1; j < count; ++j) {
            if (lits[static_cast<std::size_t>(i)] == -lits[static_cast<std::size_t>(j)]) continue;
            pool.push_back({lits[static_cast<std::size_t>(i)], lits[static_cast<std::size_t>(j)]});
            for (int k = j + 1; k < count; ++k) {
                if (lits[static_cast<std::size_t>(i)] == -lits[static_cast<std::size_t>(k)] ||
                    lits[static_cast<std::size_t>(j)] == -lits[static_cast<std::size_t>(k)])
                    continue;
                pool.push_back({lits[static_cast<std::size_t>(i)], lits[static_cast<std::size_t>(j)],
                                lits[static_cast<std::size_t>(k)]});
            }
        }
    }
    return pool;
}

bool sizes_hold(const CnfFormula& f) {
    auto und = reduce_3sat_undirected(f);
    if (und.vertex_count != 2 * f.num_vars + 2) return false;
    if (und.observations.size() != f.num_vars + f.clause_count() + 2) return false;
    auto tree = reduce_3sat_tree(f);
    if (tree.vertex_count != 4 * f.num_vars + 3) return false;
    if (tree.observations.size() != 4 * f.num_vars + f.clause_count() + 3) return false;
    return true;
}

bool forward_witness_holds(const CnfFormula& f) {
    auto red = reduce_3sat_undirected(f);
    for (std::uint32_t mask = 0; mask < (1u << f.num_vars); ++mask) {
        std::vector<bool> a(static_cast<std::size_t>(f.num_vars));
        for (int i = 0; i < f.num_vars; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
        if (!f.satisfied_by(a)) continue;
        auto w = witness_from_assignment(f, a, ReductionVariant::undirected);
        if (!is_consistent(w, red.observations)) return false;
    }
    return true;
}

void criterion_6() {
    int biconditional_cases = 0, biconditional_ok = 0;
    bool sizes_ok = true;
    // exhaustive over every 1- and 2-variable formula
    for (int nv = 1; nv <= 2; ++nv) {
        auto pool = clause_pool(nv);
        const int p = static_cast<int>(pool.size());
        for (std::uint32_t mask = 1; mask < (1u << p); ++mask) {
            std::vector<std::vector<int>> clauses;
            for (int i = 0; i < p; ++i)
                if ((mask >> i) & 1u) clauses.push_back(pool[static_cast<std::size_t>(i)]);
            CnfFormula f(nv, std::move(clauses));
            if (!sizes_hold(f)) sizes_ok = false;
            auto red = reduce_3sat_undirected(f);
            auto out = brute_force_consistent(red.vertex_count, red.observations,
                                              HypothesisClass::undirected_threshold);
            bool sat = f.satisfiable();
            ++biconditional_cases;
            if (out.learned() == sat) ++biconditional_ok;
            if (out.learned()) {
                auto a = assignment_from_system(f, *out.system, ReductionVariant::undirected);
                if (!f.satisfied_by(a)) --biconditional_ok;
            }
        }
    }

    // forward witness at 4 variables: every 1- and 2-clause formula plus a
    // seeded sample of wider ones (the full <=6-clause space has ~8e7
    // members, far beyond a test budget)
    int witness_cases = 0, witness_ok = 0;
    {
        auto pool = clause_pool(4);
        const std::size_t p = pool.size();
        for (std::size_t i = 0; i < p; ++i) {
            CnfFormula f(4, {pool[i]});
            ++witness_cases;
            if (sizes_hold(f) && forward_witness_holds(f)) ++witness_ok;
        }
        for (std::size_t i = 0; i < p; ++i)
            for (std::size_t j = i + 1; j < p; ++j) {
                CnfFormula f(4, {pool[i], pool[j]});
                ++witness_cases;
                if (sizes_hold(f) && forward_witness_holds(f)) ++witness_ok;
            }
        SplitMix64 rng(606606);
        for (int rep = 0; rep < 2000; ++rep) {
            int m = 3 + static_cast<int>(rng.next_below(4));  // 3..6 clauses
            std::vector<std::vector<int>> clauses;
            std::vector<std::size_t> seen;
            while (static_cast<int>(clauses.size()) < m) {
                std::size_t pick = rng.next_below(p);
                if (std::find(seen.begin(), seen.end(), pick) != seen.end()) continue;
                seen.push_back(pick);
                clauses.push_back(pool[pick]);
            }
            CnfFormula f(4, std::move(clauses));
            ++witness_cases;
            if (sizes_hold(f) && forward_witness_holds(f)) ++witness_ok;
        }
    }

    std::ostringstream note;
    note << "undirected reduction: " << biconditional_ok << "/" << biconditional_cases
         << " satisfiability biconditionals, " << witness_ok << "/" << witness_cases
         << " forward witness checks, size invariants " << (sizes_ok ? "hold" : "violated");
    report(6, biconditional_ok == biconditional_cases && witness_ok == witness_cases && sizes_ok, note.str());
}

// criterion 7 -----------------------------------------------------------

void criterion_7() {
    bool ok = true;
    std::ostringstream note;

    BoundQuery q;
    q.n = 10;
    q.epsilon = 0.1;
    q.delta = 0.1;
    double eq1 = sample_complexity_upper(q);
    if (std::abs(eq1 - 1253.28) > 0.01) ok = false;
    note << "eq1(10,0.1,0.1)=" << eq1;

    // k -> 0 identity, bitwise
    BoundQuery pk;
    pk.n = 12;
    pk.epsilon = 0.2;
    pk.delta = 0.05;
    pk.d_avg = 3.5;
    pk.k = 0;
    double known_only = (1.0 / pk.epsilon) * (12.0 * std::log(3.5 + 3.0) + std::log(1.0 / pk.delta));
    if (sample_complexity_partial(pk) != known_only) ok = false;

    // m = n^2 identity, bitwise
    BoundQuery pm;
    pm.n = 6;
    pm.epsilon = 0.3;
    pm.delta = 0.2;
    pm.m = 36;
    if (sample_complexity_m_edges(pm) != (1.0 / pm.epsilon) * std::log(1.0 / pm.delta)) ok = false;

    // monotonicity grid; k and m stay below n^2/e where the printed
    // k*log(n^2/k) term is increasing
    SplitMix64 rng(707707);
    int points = 0;
    while (points < 1000) {
        BoundQuery base;
        base.n = 2 + static_cast<int>(rng.next_below(30));
        base.epsilon = 0.05 + 0.9 * rng.next_double();
        base.delta = 0.05 + 0.9 * rng.next_double();
        base.d_avg = 5.0 * rng.next_double();
        long long cap = static_cast<long long>(static_cast<double>(base.n) * base.n / std::exp(1.0));
        if (cap < 2) continue;
        base.k = 1 + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(cap - 1)));
        base.m = base.k;

        auto seps = base;
        seps.epsilon /= 2.0;
        auto sdel = base;
        sdel.delta /= 2.0;
        auto bn = base;
        bn.n += 1;
        auto bk = base;
        bk.k = std::min(cap, base.k + 1);
        auto bm = base;
        bm.m = std::min(cap, base.m + 1);
        auto bd = base;
        bd.d_avg += 1.0;

        if (!(sample_complexity_upper(seps) > sample_complexity_upper(base))) ok = false;
        if (!(sample_complexity_upper(sdel) > sample_complexity_upper(base))) ok = false;
        if (!(sample_complexity_upper(bn) >= sample_complexity_upper(base))) ok = false;
        if (!(sample_complexity_partial(seps) > sample_complexity_partial(base))) ok = false;
        if (!(sample_complexity_partial(sdel) > sample_complexity_partial(base))) ok = false;
        if (!(sample_complexity_partial(bn) >= sample_complexity_partial(base))) ok = false;
        if (!(sample_complexity_partial(bk) >= sample_complexity_partial(base))) ok = false;
        if (!(sample_complexity_partial(bd) >= sample_complexity_partial(base))) ok = false;
        if (!(sample_complexity_m_edges(seps) > sample_complexity_m_edges(base))) ok = false;
        if (!(sample_complexity_m_edges(sdel) > sample_complexity_m_edges(base))) ok = false;
        if (!(sample_complexity_m_edges(bm) >= sample_complexity_m_edges(base))) ok = false;
        if (!(ndim_sample_lower_bound(seps) > ndim_sample_lower_bound(base))) ok = false;
        if (!(ndim_sample_lower_bound(sdel) > ndim_sample_lower_bound(base))) ok = false;
        if (!(ndim_sample_lower_bound(bn) >= ndim_sample_lower_bound(base))) ok = false;
        ++points;
    }
    note << ", degenerate identities exact, monotonicity over " << points << " grid points";
    report(7, ok, note.str());
}

// criterion 8 -----------------------------------------------------------

struct RunResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult run_cli(const std::string& cli, const std::string& dir, const std::string& args) {
    std::string out_path = dir + "/stdout.txt";
    std::string cmd = cli + " " + args + " > " + out_path + " 2> " + dir + "/stderr.txt";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.output = slurp(out_path);
    return r;
}

void criterion_8(const std::string& cli) {
    char tmpl[] = "/tmp/syds_acceptance_XXXXXX";
    char* dir_c = mkdtemp(tmpl);
    if (!dir_c) {
        report(8, false, "could not create a scratch directory");
        return;
    }
    std::string dir(dir_c);
    bool ok = true;
    std::vector<std::string> notes;

    // identical command line twice: byte-identical stdout and artifacts
    auto same_twice = [&](const std::string& args, const std::vector<std::string>& artifacts,
                          const std::string& label) {
        auto a = run_cli(cli, dir, args);
        std::vector<std::string> first;
        for (const auto& f : artifacts) first.push_back(slurp(dir + "/" + f));
        auto b = run_cli(cli, dir, args);
        bool same = a.exit_code == b.exit_code && a.output == b.output;
        for (std::size_t i = 0; i < artifacts.size(); ++i)
            if (slurp(dir + "/" + artifacts[i]) != first[i]) same = false;
        if (!same) {
            ok = false;
            notes.push_back(label + " not reproducible");
        }
        return a;
    };
    // two different command lines (thread counts): identical artifacts
    auto same_pair = [&](const std::string& args_a, const std::string& args_b,
                         const std::vector<std::string>& artifacts, const std::string& label) {
        auto a = run_cli(cli, dir, args_a);
        std::vector<std::string> first;
        for (const auto& f : artifacts) first.push_back(slurp(dir + "/" + f));
        auto b = run_cli(cli, dir, args_b);
        bool same = a.exit_code == b.exit_code;
        for (std::size_t i = 0; i < artifacts.size(); ++i)
            if (slurp(dir + "/" + artifacts[i]) != first[i]) same = false;
        if (!same) {
            ok = false;
            notes.push_back(label + " differs across thread counts");
        }
    };

    same_twice("gen-system --family matching --n 8 --seed 11 --out " + dir + "/m.txt", {"m.txt"}, "gen-system matching");
    same_twice("gen-system --family gnp --n 7 --seed 12 --edge-prob 0.4 --out " + dir + "/g.txt", {"g.txt"},
               "gen-system gnp");
    same_twice("gen-system --family directed --n 6 --seed 13 --delta 2 --out " + dir + "/d.txt", {"d.txt"},
               "gen-system directed");
    same_twice("sample --system " + dir + "/m.txt --dist uniform --q 40 --seed 21 --out " + dir + "/obs_m.txt",
               {"obs_m.txt"}, "sample uniform");
    same_twice("sample --system " + dir + "/d.txt --dist bernoulli --p 0.3 --q 25 --seed 22 --out " + dir +
                   "/obs_d.txt",
               {"obs_d.txt"}, "sample bernoulli");
    same_twice("step --system " + dir + "/m.txt --config 10110100 --steps 4", {}, "step");
    same_twice("learn --obs " + dir + "/obs_m.txt --class matching --out " + dir + "/learned_m.txt",
               {"learned_m.txt"}, "learn matching");
    same_twice("check --system " + dir + "/learned_m.txt --obs " + dir + "/obs_m.txt", {}, "check");
    same_twice("learn --obs " + dir + "/obs_d.txt --class directed --delta 2 --out " + dir + "/learned_d.txt",
               {"learned_d.txt"}, "learn directed");
    same_pair("learn --obs " + dir + "/obs_d.txt --class directed --delta 2 --threads 1 --out " + dir + "/ld1.txt",
              "learn --obs " + dir + "/obs_d.txt --class directed --delta 2 --threads 3 --out " + dir + "/ld1.txt",
              {"ld1.txt"}, "learn directed artifact");
    same_twice("learn --obs " + dir + "/obs_m.txt --class known --graph " + dir + "/m.txt --out " + dir +
                   "/learned_k.txt",
               {"learned_k.txt"}, "learn known");

    {
        std::ofstream cnf(dir + "/f.cnf");
        cnf << "c determinism probe\np cnf 3 2\n1 -2 3 0\n-1 2 0\n";
    }
    same_twice("reduce-3sat --cnf " + dir + "/f.cnf --variant undirected --out " + dir + "/red_u.txt", {"red_u.txt"},
               "reduce-3sat undirected");
    same_twice("reduce-3sat --cnf " + dir + "/f.cnf --variant tree --out " + dir + "/red_t.txt", {"red_t.txt"},
               "reduce-3sat tree");
    same_twice("bounds --n 10 --eps 0.1 --delta 0.1 --davg 2 --k 3 --m 5", {}, "bounds");
    same_twice("shatter --n 5 --verify", {}, "shatter");
    same_pair("shatter --n 5 --verify --threads 1", "shatter --n 5 --verify --threads 2", {}, "shatter artifact");
    same_twice("eval-error --system " + dir + "/learned_m.txt --truth " + dir + "/m.txt", {}, "eval-error exact");
    same_twice("eval-error --system " + dir + "/learned_m.txt --truth " + dir + "/m.txt --mc --samples 4000 --seed 31",
               {}, "eval-error mc");
    same_twice("pac-experiment --learner matching --n 6 --eps 0.2 --delta 0.2 --trials 12 --seed 41 --table " + dir +
                   "/table.tsv",
               {"table.tsv"}, "pac-experiment");
    same_pair("pac-experiment --learner matching --n 6 --eps 0.2 --delta 0.2 --trials 12 --seed 41 --threads 1 "
              "--table " + dir + "/t1.tsv",
              "pac-experiment --learner matching --n 6 --eps 0.2 --delta 0.2 --trials 12 --seed 41 --threads 3 "
              "--table " + dir + "/t1.tsv",
              {"t1.tsv"}, "pac-experiment table");

    // cross-command invariant: learn, then check its own output
    auto check = run_cli(cli, dir, "check --system " + dir + "/learned_m.txt --obs " + dir + "/obs_m.txt");
    if (check.exit_code != 0) {
        ok = false;
        notes.push_back("learn-then-check failed");
    }
    // round trip: generated artifacts re-parse to equal values
    try {
        auto sys = system_from_text(slurp(dir + "/m.txt"));
        if (to_text(sys) != slurp(dir + "/m.txt")) {
            ok = false;
            notes.push_back("system file round trip changed bytes");
        }
        auto obs = observations_from_text(slurp(dir + "/obs_m.txt"));
        if (to_text(obs) != slurp(dir + "/obs_m.txt")) {
            ok = false;
            notes.push_back("observation file round trip changed bytes");
        }
    } catch (const std::exception& e) {
        ok = false;
        notes.push_back(std::string("round trip parse error: ") + e.what());
    }

    std::ostringstream note;
    note << "CLI reruns and thread counts byte-identical";
    for (const auto& n : notes) note << "; " << n;
    report(8, ok, note.str());
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "./tools/syds";
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8(cli);
    if (g_failures == 0) {
        std::printf("all acceptance criteria passed\n");
        return 0;
    }
    std::printf("%d acceptance criteria failed\n", g_failures);
    return 1;
}
