#pragma once

// 3SAT-to-consistency reduction instances and their witness maps.
//
// Two reduction shapes are produced from a CNF formula:
//   - undirected: 2n+2 vertices (a pair per variable plus two anchors) and
//     n+m+2 transitions;
//   - tree: 4n+3 vertices (a quadruple per variable plus three anchors) and
//     4n+m+3 transitions, all fixed points except the first.
//
// witness_from_assignment builds the candidate system an assignment induces;
// assignment_from_system reads an assignment back off a system's edges.
// Consistency of a witness is always checked by simulation, never assumed.

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "syds/core.hpp"
#include "syds/io.hpp"
#include "syds/observations.hpp"

namespace syds {

/// CNF formula: literals are nonzero ints, positive for a variable, negative
/// for its negation. Tautological clauses (x and not-x together) are rejected.
struct CnfFormula {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;

    CnfFormula() = default;
    CnfFormula(int vars, std::vector<std::vector<int>> cls) : num_vars(vars), clauses(std::move(cls)) {
        validate();
    }

    void validate() const {
        if (num_vars < 1) throw std::invalid_argument("formula must have at least one variable");
        for (const auto& clause : clauses) {
            if (clause.empty()) throw std::invalid_argument("empty clause");
            for (int lit : clause) {
                if (lit == 0 || std::abs(lit) > num_vars)
                    throw std::invalid_argument("literal out of range");
                for (int other : clause)
                    if (other == -lit) throw std::invalid_argument("tautological clause");
            }
        }
    }

    int clause_count() const { return static_cast<int>(clauses.size()); }

    bool satisfied_by(const std::vector<bool>& assignment) const {
        if (static_cast<int>(assignment.size()) != num_vars)
            throw std::invalid_argument("assignment must cover every variable");
        for (const auto& clause : clauses) {
            bool sat = false;
            for (int lit : clause)
                if (assignment[static_cast<std::size_t>(std::abs(lit) - 1)] == (lit > 0)) sat = true;
            if (!sat) return false;
        }
        return true;
    }

    bool satisfiable() const {
        if (num_vars > 20) throw unsupported_instance("truth-table satisfiability capped at 20 variables");
        for (std::uint32_t mask = 0; mask < (1u << num_vars); ++mask) {
            std::vector<bool> a(static_cast<std::size_t>(num_vars));
            for (int i = 0; i < num_vars; ++i) a[static_cast<std::size_t>(i)] = (mask >> i) & 1u;
            if (satisfied_by(a)) return true;
        }
        return false;
    }
};

/// DIMACS CNF: 'c' comments, a 'p cnf <vars> <clauses>' header, then
/// 0-terminated clauses. Counts must match the header exactly.
inline CnfFormula parse_dimacs(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int declared_vars = -1, declared_clauses = -1;
    std::vector<std::vector<int>> clauses;
    std::vector<int> current;

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "c") continue;
        if (tok == "p") {
            std::string kind;
            if (declared_vars != -1) throw parse_error(line_no, "duplicate header");
            if (!(ls >> kind >> declared_vars >> declared_clauses) || kind != "cnf")
                throw parse_error(line_no, "expected 'p cnf <vars> <clauses>'");
            if (declared_vars < 1 || declared_clauses < 0)
                throw parse_error(line_no, "header counts must be positive");
            continue;
        }
        if (declared_vars == -1) throw parse_error(line_no, "clause before 'p cnf' header");
        ls.clear();
        ls.str(line);
        int lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.empty()) throw parse_error(line_no, "empty clause");
                clauses.push_back(current);
                current.clear();
            } else {
                if (std::abs(lit) > declared_vars) throw parse_error(line_no, "literal out of range");
                for (int other : current)
                    if (other == -lit) throw parse_error(line_no, "tautological clause");
                if (std::find(current.begin(), current.end(), lit) == current.end()) current.push_back(lit);
            }
        }
        if (ls.fail() && !ls.eof()) throw parse_error(line_no, "expected an integer literal");
    }
    if (declared_vars == -1) throw parse_error(line_no, "missing 'p cnf' header");
    if (!current.empty()) throw parse_error(line_no, "clause not terminated by 0");
    if (static_cast<int>(clauses.size()) != declared_clauses)
        throw parse_error(line_no, "clause count does not match header: declared " +
                                       std::to_string(declared_clauses) + ", found " + std::to_string(clauses.size()));
    return CnfFormula(declared_vars, std::move(clauses));
}

enum class ReductionVariant { undirected, tree };

/// The consistency instance a formula reduces to: a vertex set with role
/// labels and the observation set over it.
struct ReductionOutput {
    ReductionVariant variant = ReductionVariant::undirected;
    int vertex_count = 0;
    std::vector<std::string> roles;  // per-vertex label
    TrainingSet observations;

    std::string roles_comment_block() const {
        std::ostringstream out;
        for (int v = 0; v < vertex_count; ++v) out << "# role " << v << ' ' << roles[static_cast<std::size_t>(v)] << '\n';
        return out.str();
    }
};

namespace detail {

inline Configuration config_with_ones(int n, const std::vector<int>& ones) {
    Configuration c = Configuration::zeros(n);
    for (int v : ones) c.set(v, true);
    return c;
}

}  // namespace detail

// Vertex numbering, undirected variant: y_i = 2i, its negation 2i+1,
// anchor z = 2n, anchor z' = 2n+1.
inline int undirected_pos_vertex(int var_index) { return 2 * var_index; }
inline int undirected_neg_vertex(int var_index) { return 2 * var_index + 1; }
inline int undirected_z(int num_vars) { return 2 * num_vars; }
inline int undirected_zp(int num_vars) { return 2 * num_vars + 1; }

inline int undirected_literal_vertex(int lit) {
    int i = std::abs(lit) - 1;
    return lit > 0 ? undirected_pos_vertex(i) : undirected_neg_vertex(i);
}

/// Reduction to the undirected class: 2n+2 vertices, n+m+2 transitions.
inline ReductionOutput reduce_3sat_undirected(const CnfFormula& f) {
    f.validate();
    if (f.clause_count() < 1) throw std::invalid_argument("reduction needs at least one clause");
    for (const auto& clause : f.clauses)
        if (clause.size() > 3) throw std::invalid_argument("clause width above 3");

    const int n = f.num_vars;
    const int vertices = 2 * n + 2;
    const int z = undirected_z(n), zp = undirected_zp(n);

    ReductionOutput out;
    out.variant = ReductionVariant::undirected;
    out.vertex_count = vertices;
    out.roles.resize(static_cast<std::size_t>(vertices));
    for (int i = 0; i < n; ++i) {
        out.roles[static_cast<std::size_t>(undirected_pos_vertex(i))] = "y" + std::to_string(i + 1);
        out.roles[static_cast<std::size_t>(undirected_neg_vertex(i))] = "ybar" + std::to_string(i + 1);
    }
    out.roles[static_cast<std::size_t>(z)] = "z";
    out.roles[static_cast<std::size_t>(zp)] = "zp";

    TrainingSet obs(vertices);
    // anchor transitions: z alone dies; z with z' keeps z
    obs.add(detail::config_with_ones(vertices, {z}), Configuration::zeros(vertices));
    obs.add(detail::config_with_ones(vertices, {z, zp}), detail::config_with_ones(vertices, {z}));
    // one transition per variable: the literal pair alone dies
    for (int i = 0; i < n; ++i)
        obs.add(detail::config_with_ones(vertices, {undirected_pos_vertex(i), undirected_neg_vertex(i)}),
                Configuration::zeros(vertices));
    // one transition per clause: z plus the clause's literal vertices keep z
    for (const auto& clause : f.clauses) {
        std::vector<int> ones = {z};
        for (int lit : clause) ones.push_back(undirected_literal_vertex(lit));
        obs.add(detail::config_with_ones(vertices, ones), detail::config_with_ones(vertices, {z}));
    }
    out.observations = std::move(obs);
    return out;
}

// Vertex numbering, tree variant: per variable i the block 4i..4i+3 holds
// y_i, its negation, w_i, w_i'; anchors z = 4n, z' = 4n+1, z'' = 4n+2.
inline int tree_pos_vertex(int var_index) { return 4 * var_index; }
inline int tree_neg_vertex(int var_index) { return 4 * var_index + 1; }
inline int tree_w_vertex(int var_index) { return 4 * var_index + 2; }
inline int tree_wp_vertex(int var_index) { return 4 * var_index + 3; }
inline int tree_z(int num_vars) { return 4 * num_vars; }
inline int tree_zp(int num_vars) { return 4 * num_vars + 1; }
inline int tree_zpp(int num_vars) { return 4 * num_vars + 2; }

inline int tree_literal_vertex(int lit) {
    int i = std::abs(lit) - 1;
    return lit > 0 ? tree_pos_vertex(i) : tree_neg_vertex(i);
}

/// Reduction to the all-thresholds-2 tree class: 4n+3 vertices, 4n+m+3
/// transitions, every transition after the first a fixed point.
inline ReductionOutput reduce_3sat_tree(const CnfFormula& f) {
    f.validate();
    if (f.clause_count() < 1) throw std::invalid_argument("reduction needs at least one clause");
    for (const auto& clause : f.clauses)
        if (clause.size() > 3) throw std::invalid_argument("clause width above 3");

    const int n = f.num_vars;
    const int vertices = 4 * n + 3;
    const int z = tree_z(n), zp = tree_zp(n), zpp = tree_zpp(n);

    ReductionOutput out;
    out.variant = ReductionVariant::tree;
    out.vertex_count = vertices;
    out.roles.resize(static_cast<std::size_t>(vertices));
    for (int i = 0; i < n; ++i) {
        out.roles[static_cast<std::size_t>(tree_pos_vertex(i))] = "y" + std::to_string(i + 1);
        out.roles[static_cast<std::size_t>(tree_neg_vertex(i))] = "ybar" + std::to_string(i + 1);
        out.roles[static_cast<std::size_t>(tree_w_vertex(i))] = "w" + std::to_string(i + 1);
        out.roles[static_cast<std::size_t>(tree_wp_vertex(i))] = "wp" + std::to_string(i + 1);
    }
    out.roles[static_cast<std::size_t>(z)] = "z";
    out.roles[static_cast<std::size_t>(zp)] = "zp";
    out.roles[static_cast<std::size_t>(zpp)] = "zpp";

    auto fixed_point = [&](TrainingSet& obs, const std::vector<int>& ones) {
        auto c = detail::config_with_ones(vertices, ones);
        obs.add(c, c);
    };

    TrainingSet obs(vertices);
    // the only non-fixed-point transition: z alone dies
    obs.add(detail::config_with_ones(vertices, {z}), Configuration::zeros(vertices));
    fixed_point(obs, {z, zp});
    fixed_point(obs, {zp, zpp});
    for (int i = 0; i < n; ++i) {
        fixed_point(obs, {tree_w_vertex(i), tree_wp_vertex(i)});
        fixed_point(obs, {tree_w_vertex(i), tree_wp_vertex(i), zp, zpp});
    }
    for (int i = 0; i < n; ++i) {
        fixed_point(obs, {tree_w_vertex(i), tree_pos_vertex(i), tree_neg_vertex(i)});
        fixed_point(obs, {tree_w_vertex(i), tree_pos_vertex(i), tree_neg_vertex(i), z});
    }
    for (const auto& clause : f.clauses) {
        std::vector<int> ones = {z};
        for (int lit : clause) {
            ones.push_back(tree_literal_vertex(lit));
            int w = tree_w_vertex(std::abs(lit) - 1);
            if (std::find(ones.begin(), ones.end(), w) == ones.end()) ones.push_back(w);
        }
        fixed_point(obs, ones);
    }
    out.observations = std::move(obs);
    return out;
}

/// The system induced by an assignment. Undirected variant: the satisfied
/// literal vertex of each variable is joined to the anchor z, z is joined to
/// z', the anchor fires at 2, and every other vertex never fires. Tree
/// variant: every threshold is 2 and each variable block hangs off w_i, with
/// the satisfied literal vertex joined to z.
inline ThresholdSystem witness_from_assignment(const CnfFormula& f, const std::vector<bool>& assignment,
                                               ReductionVariant variant) {
    if (static_cast<int>(assignment.size()) != f.num_vars)
        throw std::invalid_argument("assignment must cover every variable");
    const int n = f.num_vars;

    if (variant == ReductionVariant::undirected) {
        const int vertices = 2 * n + 2;
        const int z = undirected_z(n), zp = undirected_zp(n);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < n; ++i)
            edges.emplace_back(z, assignment[static_cast<std::size_t>(i)] ? undirected_pos_vertex(i)
                                                                          : undirected_neg_vertex(i));
        edges.emplace_back(z, zp);
        Graph g = Graph::undirected(vertices, std::move(edges));
        std::vector<int> taus(static_cast<std::size_t>(vertices));
        for (int v = 0; v < vertices; ++v) taus[static_cast<std::size_t>(v)] = g.closed_degree(v) + 1;  // never fires
        taus[static_cast<std::size_t>(z)] = 2;
        return ThresholdSystem(std::move(g), std::move(taus));
    }

    const int vertices = 4 * n + 3;
    const int z = tree_z(n), zp = tree_zp(n), zpp = tree_zpp(n);
    std::vector<std::pair<int, int>> edges;
    edges.emplace_back(z, zp);
    edges.emplace_back(zp, zpp);
    for (int i = 0; i < n; ++i) {
        edges.emplace_back(tree_w_vertex(i), tree_wp_vertex(i));
        edges.emplace_back(tree_w_vertex(i), tree_pos_vertex(i));
        edges.emplace_back(tree_w_vertex(i), tree_neg_vertex(i));
        edges.emplace_back(assignment[static_cast<std::size_t>(i)] ? tree_pos_vertex(i) : tree_neg_vertex(i), z);
    }
    Graph g = Graph::undirected(vertices, std::move(edges));
    std::vector<int> taus(static_cast<std::size_t>(vertices), 2);
    return ThresholdSystem(std::move(g), std::move(taus));
}

/// Reads the assignment off a candidate system: variable i is true iff the
/// system joins z to the positive literal vertex of i.
inline std::vector<bool> assignment_from_system(const CnfFormula& f, const ThresholdSystem& s,
                                                ReductionVariant variant) {
    const int n = f.num_vars;
    const int expected = variant == ReductionVariant::undirected ? 2 * n + 2 : 4 * n + 3;
    if (s.vertex_count() != expected)
        throw std::invalid_argument("system vertex count does not match the reduction");
    const int z = variant == ReductionVariant::undirected ? undirected_z(n) : tree_z(n);
    std::vector<bool> assignment(static_cast<std::size_t>(n), false);
    for (int i = 0; i < n; ++i) {
        int y = variant == ReductionVariant::undirected ? undirected_pos_vertex(i) : tree_pos_vertex(i);
        assignment[static_cast<std::size_t>(i)] = s.graph.has_edge(z, y);
    }
    return assignment;
}

}  // namespace syds
