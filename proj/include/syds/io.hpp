#pragma once

// Text formats.
//
// System file:        syds <n> <undirected|directed>
//                     e <u> <v>          one line per edge
//                     t <v> <tau>        one line per vertex, all required
// Observation file:   obs <n> <q>
//                     <pred-bits> <succ-bits>   exactly q lines
//
// Lines starting with '#' are comments and are ignored by both parsers;
// writers may append comment blocks (e.g. vertex role annotations).

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "syds/core.hpp"
#include "syds/observations.hpp"

namespace syds {

struct parse_error : std::runtime_error {
    parse_error(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_number(line) {}
    int line_number;
};

namespace detail {

struct LineReader {
    explicit LineReader(const std::string& text) : in(text) {}

    /// Next non-empty, non-comment line; nullopt at end of input.
    std::optional<std::string> next() {
        std::string line;
        while (std::getline(in, line)) {
            ++number;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            std::size_t start = line.find_first_not_of(" \t");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            return line;
        }
        return std::nullopt;
    }

    std::istringstream in;
    int number = 0;
};

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

inline int parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw parse_error(line, "expected an integer, got '" + tok + "'");
    }
}

}  // namespace detail

inline std::string to_text(const ThresholdSystem& system) {
    std::ostringstream out;
    out << "syds " << system.graph.vertex_count() << ' '
        << (system.graph.is_directed() ? "directed" : "undirected") << '\n';
    for (const auto& [u, v] : system.graph.edges()) out << "e " << u << ' ' << v << '\n';
    for (int v = 0; v < system.graph.vertex_count(); ++v)
        out << "t " << v << ' ' << system.thresholds[static_cast<std::size_t>(v)] << '\n';
    return out.str();
}

inline ThresholdSystem system_from_text(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header) throw parse_error(reader.number, "empty system file");
    auto head = detail::tokens(*header);
    if (head.size() != 3 || head[0] != "syds")
        throw parse_error(reader.number, "expected header 'syds <n> <undirected|directed>'");
    int n = detail::parse_int(head[1], reader.number);
    bool directed;
    if (head[2] == "undirected") directed = false;
    else if (head[2] == "directed") directed = true;
    else throw parse_error(reader.number, "directedness must be 'undirected' or 'directed'");
    if (n < 1) throw parse_error(reader.number, "vertex count must be at least 1");

    std::vector<std::pair<int, int>> edges;
    std::vector<std::optional<int>> taus(static_cast<std::size_t>(n));
    while (auto line = reader.next()) {
        auto toks = detail::tokens(*line);
        if (toks[0] == "e") {
            if (toks.size() != 3) throw parse_error(reader.number, "edge line must be 'e <u> <v>'");
            int u = detail::parse_int(toks[1], reader.number);
            int v = detail::parse_int(toks[2], reader.number);
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw parse_error(reader.number, "edge endpoint out of range");
            if (u == v) throw parse_error(reader.number, "self-loop not permitted");
            edges.emplace_back(u, v);
        } else if (toks[0] == "t") {
            if (toks.size() != 3) throw parse_error(reader.number, "threshold line must be 't <v> <tau>'");
            int v = detail::parse_int(toks[1], reader.number);
            int tau = detail::parse_int(toks[2], reader.number);
            if (v < 0 || v >= n) throw parse_error(reader.number, "threshold vertex out of range");
            if (taus[static_cast<std::size_t>(v)])
                throw parse_error(reader.number, "duplicate threshold for vertex " + std::to_string(v));
            taus[static_cast<std::size_t>(v)] = tau;
        } else {
            throw parse_error(reader.number, "unknown directive '" + toks[0] + "'");
        }
    }
    std::vector<int> thresholds;
    thresholds.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        if (!taus[static_cast<std::size_t>(v)])
            throw parse_error(reader.number, "missing threshold for vertex " + std::to_string(v));
        thresholds.push_back(*taus[static_cast<std::size_t>(v)]);
    }
    return ThresholdSystem(Graph(n, directed, std::move(edges)), std::move(thresholds));
}

inline std::string to_text(const TrainingSet& obs) {
    std::ostringstream out;
    out << "obs " << obs.n << ' ' << obs.size() << '\n';
    for (const auto& [pred, succ] : obs.pairs) out << pred.to_string() << ' ' << succ.to_string() << '\n';
    return out.str();
}

inline TrainingSet observations_from_text(const std::string& text) {
    detail::LineReader reader(text);
    auto header = reader.next();
    if (!header) throw parse_error(reader.number, "empty observation file");
    auto head = detail::tokens(*header);
    if (head.size() != 3 || head[0] != "obs")
        throw parse_error(reader.number, "expected header 'obs <n> <q>'");
    int n = detail::parse_int(head[1], reader.number);
    int q = detail::parse_int(head[2], reader.number);
    if (n < 1) throw parse_error(reader.number, "vertex count must be at least 1");
    if (q < 0) throw parse_error(reader.number, "pair count must be non-negative");

    TrainingSet obs(n);
    for (int i = 0; i < q; ++i) {
        auto line = reader.next();
        if (!line) throw parse_error(reader.number, "expected " + std::to_string(q) + " pairs, found " + std::to_string(i));
        auto toks = detail::tokens(*line);
        if (toks.size() != 2) throw parse_error(reader.number, "pair line must be '<pred> <succ>'");
        Configuration pred, succ;
        try {
            pred = Configuration::from_string(toks[0]);
            succ = Configuration::from_string(toks[1]);
        } catch (const std::invalid_argument& e) {
            throw parse_error(reader.number, e.what());
        }
        if (pred.size() != n || succ.size() != n)
            throw parse_error(reader.number, "bitstring length does not match vertex count");
        obs.add(std::move(pred), std::move(succ));
    }
    if (reader.next()) throw parse_error(reader.number, "trailing content after " + std::to_string(q) + " pairs");
    return obs;
}

}  // namespace syds
