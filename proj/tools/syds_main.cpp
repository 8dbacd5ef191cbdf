// Command-line front end. Subcommands cover generation, simulation,
// sampling, learning, consistency checking, CNF reductions, bounds,
// shattering checks, error evaluation, and PAC experiments.
//
// Exit codes: 0 success, 2 for honest "no" answers (refusals, inconsistent
// check), 1 for errors. Stochastic commands require --seed and all stdout is
// byte-deterministic for a fixed command line; timing goes to stderr.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "syds/evaluation.hpp"
#include "syds/hardness.hpp"
#include "syds/io.hpp"
#include "syds/learners.hpp"
#include "syds/theory.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNo = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", x);
    return buf;
}

// every run echoes its resolved configuration first
void echo_config(const std::string& subcommand, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::cout << "# " << subcommand;
    for (const auto& [k, v] : kv) std::cout << ' ' << k << '=' << v;
    std::cout << '\n';
}

syds::ConfigDistribution empirical_from_file(const std::string& path) {
    std::vector<std::pair<syds::Configuration, std::uint64_t>> support;
    std::istringstream in(read_file(path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string bits;
        if (!(ls >> bits)) continue;
        if (bits[0] == '#') continue;
        std::uint64_t count = 1;
        ls >> count;
        if (count == 0) throw syds::parse_error(line_no, "support weight must be positive");
        support.emplace_back(syds::Configuration::from_string(bits), count);
    }
    return syds::ConfigDistribution::empirical(std::move(support));
}

struct GenSystemArgs {
    std::string family;
    int n = 0;
    std::uint64_t seed = 0;
    double edge_prob = 0.5;
    int delta = 2;
    std::string out;
};

int run_gen_system(const GenSystemArgs& a) {
    echo_config("gen-system", {{"family", a.family},
                               {"n", std::to_string(a.n)},
                               {"seed", std::to_string(a.seed)},
                               {"edge-prob", fmt(a.edge_prob)},
                               {"delta", std::to_string(a.delta)},
                               {"out", a.out}});
    syds::SplitMix64 rng(a.seed);
    syds::Graph g = syds::Graph::edgeless(a.n);
    if (a.family == "matching") {
        if (a.n % 2 != 0) throw std::invalid_argument("matching family needs an even vertex count");
        std::vector<int> verts(static_cast<std::size_t>(a.n));
        for (int i = 0; i < a.n; ++i) verts[static_cast<std::size_t>(i)] = i;
        for (int i = a.n - 1; i > 0; --i)
            std::swap(verts[static_cast<std::size_t>(i)], verts[rng.next_below(static_cast<std::uint64_t>(i + 1))]);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i + 1 < a.n; i += 2)
            edges.emplace_back(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(i + 1)]);
        g = syds::Graph::undirected(a.n, std::move(edges));
    } else if (a.family == "gnp") {
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < a.n; ++u)
            for (int v = u + 1; v < a.n; ++v)
                if (rng.next_double() < a.edge_prob) edges.emplace_back(u, v);
        g = syds::Graph::undirected(a.n, std::move(edges));
    } else if (a.family == "directed") {
        std::vector<std::pair<int, int>> edges;
        for (int v = 0; v < a.n; ++v) {
            int indeg = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(a.delta + 1)));
            std::vector<int> others;
            for (int u = 0; u < a.n; ++u)
                if (u != v) others.push_back(u);
            for (int i = 0; i < indeg && !others.empty(); ++i) {
                std::size_t pick = rng.next_below(others.size());
                edges.emplace_back(others[pick], v);
                others.erase(others.begin() + static_cast<std::ptrdiff_t>(pick));
            }
        }
        g = syds::Graph::directed(a.n, std::move(edges));
    } else {
        throw std::invalid_argument("unknown family: " + a.family);
    }
    std::vector<int> taus;
    for (int v = 0; v < a.n; ++v)
        taus.push_back(static_cast<int>(rng.next_below(static_cast<std::uint64_t>(g.closed_degree(v) + 2))));
    syds::ThresholdSystem system(std::move(g), std::move(taus));
    auto issues = syds::validate_system(system);
    if (!issues.empty()) throw std::logic_error("generated system failed validation: " + issues.front());
    write_file(a.out, syds::to_text(system));
    std::cout << "written=" << a.out << '\n';
    return kExitOk;
}

struct StepArgs {
    std::string system_path;
    std::string config_bits;
    int steps = 1;
};

int run_step(const StepArgs& a) {
    echo_config("step", {{"system", a.system_path}, {"config", a.config_bits}, {"steps", std::to_string(a.steps)}});
    auto system = syds::system_from_text(read_file(a.system_path));
    auto issues = syds::validate_system(system);
    if (!issues.empty()) throw std::invalid_argument("invalid system: " + issues.front());
    auto start = syds::Configuration::from_string(a.config_bits);
    for (const auto& c : syds::trajectory(system, start, a.steps)) std::cout << c.to_string() << '\n';
    return kExitOk;
}

struct SampleArgs {
    std::string system_path;
    std::string dist = "uniform";
    std::vector<double> p;
    std::string support_path;
    int q = 1;
    std::uint64_t seed = 0;
    std::string out;
};

int run_sample(const SampleArgs& a) {
    echo_config("sample", {{"system", a.system_path},
                           {"dist", a.dist},
                           {"q", std::to_string(a.q)},
                           {"seed", std::to_string(a.seed)},
                           {"out", a.out}});
    auto system = syds::system_from_text(read_file(a.system_path));
    auto issues = syds::validate_system(system);
    if (!issues.empty()) throw std::invalid_argument("invalid system: " + issues.front());
    const int n = system.vertex_count();
    syds::ConfigDistribution dist = syds::ConfigDistribution::uniform(n);
    if (a.dist == "uniform") {
    } else if (a.dist == "bernoulli") {
        std::vector<double> p = a.p;
        if (p.size() == 1) p.assign(static_cast<std::size_t>(n), p[0]);
        if (static_cast<int>(p.size()) != n)
            throw std::invalid_argument("--p needs one value or one per vertex");
        dist = syds::ConfigDistribution::bernoulli_product(std::move(p));
    } else if (a.dist == "empirical") {
        dist = empirical_from_file(a.support_path);
        if (dist.dimension() != n) throw std::invalid_argument("support width does not match the system");
    } else {
        throw std::invalid_argument("unknown distribution: " + a.dist);
    }
    auto obs = syds::sample_training_set(system, dist, a.q, a.seed);
    write_file(a.out, syds::to_text(obs));
    std::cout << "written=" << a.out << '\n';
    return kExitOk;
}

struct LearnArgs {
    std::string obs_path;
    std::string cls;
    int delta = 0;
    std::string gobs_path;
    int k = 0;
    std::string graph_path;
    std::string brute_class;
    int threads = 1;
    std::string out;
};

int run_learn(const LearnArgs& a) {
    echo_config("learn", {{"obs", a.obs_path},
                          {"class", a.cls},
                          {"delta", std::to_string(a.delta)},
                          {"k", std::to_string(a.k)},
                          {"threads", std::to_string(a.threads)},
                          {"out", a.out}});
    auto obs = syds::observations_from_text(read_file(a.obs_path));
    syds::LearnOutcome outcome;
    if (a.cls == "matching") {
        outcome = syds::learn_matching(obs.n, obs);
    } else if (a.cls == "directed") {
        outcome = syds::learn_directed_bounded(obs.n, obs, a.delta, a.threads);
    } else if (a.cls == "known") {
        if (a.graph_path.empty()) throw std::invalid_argument("--class known requires --graph");
        auto carrier = syds::system_from_text(read_file(a.graph_path));
        outcome = syds::learn_known_graph(carrier.graph, obs);
    } else if (a.cls == "partial") {
        if (a.gobs_path.empty()) throw std::invalid_argument("--class partial requires --gobs");
        auto carrier = syds::system_from_text(read_file(a.gobs_path));
        outcome = syds::learn_partial(syds::PartialInstance(carrier.graph, a.k), obs);
    } else if (a.cls == "brute") {
        syds::BruteForceOptions opt;
        opt.delta = a.delta;
        opt.k = a.k;
        syds::HypothesisClass cls;
        if (a.brute_class == "undirected") {
            cls = syds::HypothesisClass::undirected_threshold;
        } else if (a.brute_class == "matching") {
            cls = syds::HypothesisClass::matching_threshold;
        } else if (a.brute_class == "directed") {
            cls = syds::HypothesisClass::directed_bounded;
        } else if (a.brute_class == "supergraph") {
            if (a.gobs_path.empty()) throw std::invalid_argument("--brute-class supergraph requires --gobs");
            opt.g_obs = syds::system_from_text(read_file(a.gobs_path)).graph;
            cls = syds::HypothesisClass::supergraph_of;
        } else {
            throw std::invalid_argument("unknown brute-force class: " + a.brute_class);
        }
        outcome = syds::brute_force_consistent(obs.n, obs, cls, opt);
    } else {
        throw std::invalid_argument("unknown learner class: " + a.cls);
    }

    if (!outcome.learned()) {
        std::cout << "learned=false\n";
        std::cout << "refused reason=\"" << syds::to_string(outcome.refusal->reason) << '"';
        if (!outcome.refusal->detail.empty()) std::cout << " detail=\"" << outcome.refusal->detail << '"';
        std::cout << '\n';
        return kExitNo;
    }
    write_file(a.out, syds::to_text(*outcome.system));
    std::cout << "learned=true\n";
    std::cout << "written=" << a.out << '\n';
    return kExitOk;
}

int run_check(const std::string& system_path, const std::string& obs_path) {
    echo_config("check", {{"system", system_path}, {"obs", obs_path}});
    auto system = syds::system_from_text(read_file(system_path));
    auto obs = syds::observations_from_text(read_file(obs_path));
    bool ok = syds::is_consistent(system, obs);
    std::cout << "consistent=" << (ok ? "true" : "false") << '\n';
    return ok ? kExitOk : kExitNo;
}

struct ReduceArgs {
    std::string cnf_path;
    std::string variant = "undirected";
    std::string out;
};

int run_reduce(const ReduceArgs& a) {
    echo_config("reduce-3sat", {{"cnf", a.cnf_path}, {"variant", a.variant}, {"out", a.out}});
    auto formula = syds::parse_dimacs(read_file(a.cnf_path));
    syds::ReductionOutput red;
    if (a.variant == "undirected") {
        red = syds::reduce_3sat_undirected(formula);
    } else if (a.variant == "tree") {
        red = syds::reduce_3sat_tree(formula);
    } else {
        throw std::invalid_argument("unknown variant: " + a.variant);
    }
    write_file(a.out, syds::to_text(red.observations) + red.roles_comment_block());
    std::cout << "vertices=" << red.vertex_count << '\n';
    std::cout << "transitions=" << red.observations.size() << '\n';
    std::cout << "written=" << a.out << '\n';
    return kExitOk;
}

struct BoundsArgs {
    int n = 1;
    double eps = 0.1;
    double delta = 0.1;
    double davg = -1.0;
    long long k = -1;
    long long m = -1;
    double c = 1.0;
    double c1 = 1.0;
};

int run_bounds(const BoundsArgs& a) {
    echo_config("bounds", {{"n", std::to_string(a.n)},
                           {"eps", fmt(a.eps)},
                           {"delta", fmt(a.delta)},
                           {"c", fmt(a.c)},
                           {"c1", fmt(a.c1)}});
    syds::BoundQuery q;
    q.n = a.n;
    q.epsilon = a.eps;
    q.delta = a.delta;
    q.c = a.c;
    q.c1 = a.c1;
    std::cout << "eq1=" << fmt(syds::sample_complexity_upper(q)) << '\n';
    std::cout << "eq1_tight=" << fmt(syds::sample_complexity_upper_tight(q)) << '\n';
    if (a.davg >= 0.0 && a.k >= 0) {
        q.d_avg = a.davg;
        q.k = a.k;
        std::cout << "partial=" << fmt(syds::sample_complexity_partial(q)) << '\n';
    }
    if (a.m >= 1) {
        q.m = a.m;
        std::cout << "m_edges=" << fmt(syds::sample_complexity_m_edges(q)) << '\n';
    }
    if (a.n >= 2) {
        std::cout << "ndim_lower=" << syds::ndim_lower_bound(a.n) << '\n';
        std::cout << "ndim_sample_lower=" << fmt(syds::ndim_sample_lower_bound(q)) << '\n';
    }
    return kExitOk;
}

struct ShatterArgs {
    int n = 2;
    bool verify = false;
    int threads = 1;
};

int run_shatter(const ShatterArgs& a) {
    echo_config("shatter", {{"n", std::to_string(a.n)},
                            {"verify", a.verify ? "true" : "false"},
                            {"threads", std::to_string(a.threads)}});
    auto inst = syds::build_shatter_instance(a.n);
    std::cout << "r_size=" << inst.r.size() << '\n';
    std::cout << "ndim_lower=" << syds::ndim_lower_bound(a.n) << '\n';
    if (a.verify) {
        bool ok = syds::verify_shattering(a.n, a.threads);
        std::cout << "verified=" << (ok ? "true" : "false") << '\n';
        return ok ? kExitOk : kExitNo;
    }
    return kExitOk;
}

struct EvalErrorArgs {
    std::string system_path;
    std::string truth_path;
    std::string dist = "uniform";
    std::string support_path;
    bool mc = false;
    std::uint64_t samples = 10000;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

int run_eval_error(const EvalErrorArgs& a) {
    echo_config("eval-error", {{"system", a.system_path},
                               {"truth", a.truth_path},
                               {"dist", a.dist},
                               {"mc", a.mc ? "true" : "false"}});
    auto system = syds::system_from_text(read_file(a.system_path));
    auto truth = syds::system_from_text(read_file(a.truth_path));
    syds::ConfigDistribution dist = syds::ConfigDistribution::uniform(system.vertex_count());
    if (a.dist == "empirical") {
        dist = empirical_from_file(a.support_path);
    } else if (a.dist != "uniform") {
        throw std::invalid_argument("eval-error supports uniform or empirical distributions");
    }
    if (a.mc) {
        if (!a.seed_given) throw std::invalid_argument("--mc requires --seed");
        auto est = syds::true_error_mc(system, truth, dist, a.samples, a.seed);
        std::cout << "error=" << fmt(est.value) << '\n';
        std::cout << "stderr=" << fmt(est.standard_error) << '\n';
        std::cout << "samples=" << est.samples << '\n';
    } else {
        std::cout << "error=" << fmt(syds::true_error_exact(system, truth, dist)) << '\n';
    }
    return kExitOk;
}

struct PacArgs {
    std::string learner = "matching";
    int n = 8;
    double eps = 0.1;
    double delta = 0.1;
    int trials = 100;
    std::uint64_t seed = 0;
    long long q = -1;
    int delta_bound = 2;
    int threads = 1;
    std::string table_path;
};

int run_pac(const PacArgs& a) {
    echo_config("pac-experiment", {{"learner", a.learner},
                                   {"n", std::to_string(a.n)},
                                   {"eps", fmt(a.eps)},
                                   {"delta", fmt(a.delta)},
                                   {"trials", std::to_string(a.trials)},
                                   {"seed", std::to_string(a.seed)},
                                   {"threads", std::to_string(a.threads)}});
    syds::PacExperimentConfig config;
    if (a.learner == "matching") {
        config.learner = syds::LearnerKind::matching;
    } else if (a.learner == "directed") {
        config.learner = syds::LearnerKind::directed_bounded;
    } else if (a.learner == "known") {
        config.learner = syds::LearnerKind::known_graph;
    } else {
        throw std::invalid_argument("unknown learner: " + a.learner);
    }
    config.n = a.n;
    config.epsilon = a.eps;
    config.delta = a.delta;
    config.trials = a.trials;
    config.seed = a.seed;
    config.directed_delta = a.delta_bound;
    config.threads = a.threads;
    if (a.q >= 1) config.q_override = static_cast<std::uint64_t>(a.q);

    auto report = syds::run_pac_experiment(config);
    std::cout << "q=" << report.q << '\n';
    std::cout << "trials=" << a.trials << '\n';
    std::cout << "refusals=" << report.refusals << '\n';
    std::cout << "exceed_fraction=" << fmt(report.exceed_fraction) << '\n';
    double worst = 0.0, sum = 0.0;
    for (double e : report.per_trial_error) {
        worst = std::max(worst, e);
        sum += e;
    }
    std::cout << "mean_error=" << fmt(sum / report.per_trial_error.size()) << '\n';
    std::cout << "max_error=" << fmt(worst) << '\n';
    // timing is not part of the deterministic report
    std::cerr << "wall_seconds=" << fmt(report.wall_seconds) << '\n';
    if (!a.table_path.empty()) {
        std::ostringstream table;
        table << "trial\terror\n";
        for (std::size_t t = 0; t < report.per_trial_error.size(); ++t)
            table << t << '\t' << fmt(report.per_trial_error[t]) << '\n';
        write_file(a.table_path, table.str());
        std::cout << "table=" << a.table_path << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"threshold dynamical systems: simulate, learn, reduce, bound"};
    app.require_subcommand(1);

    GenSystemArgs gen;
    auto* cmd_gen = app.add_subcommand("gen-system", "generate a random system file");
    cmd_gen->add_option("--family", gen.family, "matching | gnp | directed")->required();
    cmd_gen->add_option("--n", gen.n, "vertex count")->required()->check(CLI::PositiveNumber);
    cmd_gen->add_option("--seed", gen.seed, "generator seed")->required();
    cmd_gen->add_option("--edge-prob", gen.edge_prob, "edge probability for gnp");
    cmd_gen->add_option("--delta", gen.delta, "max in-degree for directed");
    cmd_gen->add_option("--out", gen.out, "output system file")->required();

    StepArgs step;
    auto* cmd_step = app.add_subcommand("step", "print a trajectory");
    cmd_step->add_option("--system", step.system_path)->required();
    cmd_step->add_option("--config", step.config_bits, "start configuration bitstring")->required();
    cmd_step->add_option("--steps", step.steps)->check(CLI::NonNegativeNumber);

    SampleArgs sample;
    auto* cmd_sample = app.add_subcommand("sample", "sample a training set from a system");
    cmd_sample->add_option("--system", sample.system_path)->required();
    cmd_sample->add_option("--dist", sample.dist, "uniform | bernoulli | empirical");
    cmd_sample->add_option("--p", sample.p, "bernoulli probabilities (one or per vertex)");
    cmd_sample->add_option("--support", sample.support_path, "empirical support file");
    cmd_sample->add_option("--q", sample.q, "number of pairs")->required()->check(CLI::PositiveNumber);
    cmd_sample->add_option("--seed", sample.seed)->required();
    cmd_sample->add_option("--out", sample.out)->required();

    LearnArgs learn;
    auto* cmd_learn = app.add_subcommand("learn", "run a consistent learner");
    cmd_learn->add_option("--obs", learn.obs_path)->required();
    cmd_learn->add_option("--class", learn.cls, "matching | directed | partial | known | brute")->required();
    cmd_learn->add_option("--delta", learn.delta, "in-degree bound (directed)");
    cmd_learn->add_option("--gobs", learn.gobs_path, "observed-graph system file (partial/supergraph)");
    cmd_learn->add_option("--k", learn.k, "missing-edge budget (partial/supergraph)");
    cmd_learn->add_option("--graph", learn.graph_path, "known-graph system file");
    cmd_learn->add_option("--brute-class", learn.brute_class, "undirected | matching | directed | supergraph");
    cmd_learn->add_option("--threads", learn.threads)->check(CLI::PositiveNumber);
    cmd_learn->add_option("--out", learn.out)->required();

    std::string check_system, check_obs;
    auto* cmd_check = app.add_subcommand("check", "verify a system against observations");
    cmd_check->add_option("--system", check_system)->required();
    cmd_check->add_option("--obs", check_obs)->required();

    ReduceArgs reduce;
    auto* cmd_reduce = app.add_subcommand("reduce-3sat", "build a consistency instance from a CNF formula");
    cmd_reduce->add_option("--cnf", reduce.cnf_path)->required();
    cmd_reduce->add_option("--variant", reduce.variant, "undirected | tree");
    cmd_reduce->add_option("--out", reduce.out)->required();

    BoundsArgs bounds;
    auto* cmd_bounds = app.add_subcommand("bounds", "evaluate sample-complexity bounds");
    cmd_bounds->add_option("--n", bounds.n)->required()->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--eps", bounds.eps)->required();
    cmd_bounds->add_option("--delta", bounds.delta)->required();
    cmd_bounds->add_option("--davg", bounds.davg, "average degree of the observed graph");
    cmd_bounds->add_option("--k", bounds.k, "missing-edge budget");
    cmd_bounds->add_option("--m", bounds.m, "edge budget");
    cmd_bounds->add_option("--c", bounds.c, "constant for the partial/m-edge bounds");
    cmd_bounds->add_option("--c1", bounds.c1, "constant for the dimension lower bound");

    ShatterArgs shatter;
    auto* cmd_shatter = app.add_subcommand("shatter", "build/verify the shattering construction");
    cmd_shatter->add_option("--n", shatter.n)->required()->check(CLI::PositiveNumber);
    cmd_shatter->add_flag("--verify", shatter.verify, "simulate every subset");
    cmd_shatter->add_option("--threads", shatter.threads)->check(CLI::PositiveNumber);

    EvalErrorArgs eval;
    auto* cmd_eval = app.add_subcommand("eval-error", "true error of a hypothesis against a ground truth");
    cmd_eval->add_option("--system", eval.system_path)->required();
    cmd_eval->add_option("--truth", eval.truth_path)->required();
    cmd_eval->add_option("--dist", eval.dist, "uniform | empirical");
    cmd_eval->add_option("--support", eval.support_path);
    cmd_eval->add_flag("--mc", eval.mc, "Monte-Carlo estimate instead of exact");
    cmd_eval->add_option("--samples", eval.samples);
    auto* seed_opt = cmd_eval->add_option("--seed", eval.seed);

    PacArgs pac;
    auto* cmd_pac = app.add_subcommand("pac-experiment", "epsilon-delta experiment over repeated trials");
    cmd_pac->add_option("--learner", pac.learner, "matching | directed | known");
    cmd_pac->add_option("--n", pac.n)->required()->check(CLI::PositiveNumber);
    cmd_pac->add_option("--eps", pac.eps)->required();
    cmd_pac->add_option("--delta", pac.delta)->required();
    cmd_pac->add_option("--trials", pac.trials)->required()->check(CLI::PositiveNumber);
    cmd_pac->add_option("--seed", pac.seed)->required();
    cmd_pac->add_option("--q", pac.q, "sample size (default: ceil of the log-cardinality bound)");
    cmd_pac->add_option("--delta-bound", pac.delta_bound, "in-degree bound for the directed learner");
    cmd_pac->add_option("--threads", pac.threads)->check(CLI::PositiveNumber);
    cmd_pac->add_option("--table", pac.table_path, "write the per-trial error table here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (cmd_gen->parsed()) return run_gen_system(gen);
        if (cmd_step->parsed()) return run_step(step);
        if (cmd_sample->parsed()) return run_sample(sample);
        if (cmd_learn->parsed()) return run_learn(learn);
        if (cmd_check->parsed()) return run_check(check_system, check_obs);
        if (cmd_reduce->parsed()) return run_reduce(reduce);
        if (cmd_bounds->parsed()) return run_bounds(bounds);
        if (cmd_shatter->parsed()) return run_shatter(shatter);
        if (cmd_eval->parsed()) {
            eval.seed_given = seed_opt->count() > 0;
            return run_eval_error(eval);
        }
        if (cmd_pac->parsed()) return run_pac(pac);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
