#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <istream>
#include <set>

#include "json.hpp"
#include "pinnacle/counting.hpp"
#include "pinnacle/oracle.hpp"
#include "pinnacle/poset.hpp"

namespace pinnacle {

/// Malformed input; `line` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
public:
    ParseError(int line, const std::string& what)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    [[nodiscard]] int line() const { return line_; }

private:
    int line_;
};

namespace detail {

inline std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

/// Exactly `count` non-negative integers on the line.
inline std::vector<long long> read_ints(const std::string& line, std::size_t count, int lineno) {
    std::istringstream in(line);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 0) throw ParseError(lineno, "expected a non-negative integer, got '" + tok + "'");
        out.push_back(v);
    }
    if (out.size() != count)
        throw ParseError(lineno, "expected " + std::to_string(count) + " integers, got " + std::to_string(out.size()));
    return out;
}

}  // namespace detail

/// Header "n m", then m lines "u v" with 1-based vertices. Blank lines and
/// lines starting with '#' are skipped.
inline Graph parse_graph(std::istream& in) {
    std::string raw;
    int lineno = 0;
    std::optional<std::pair<int, std::size_t>> header;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = detail::trim(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto v = detail::read_ints(line, 2, lineno);
        if (!header) {
            if (v[0] > 1'000'000) throw ParseError(lineno, "vertex count too large");
            header.emplace(static_cast<int>(v[0]), static_cast<std::size_t>(v[1]));
            continue;
        }
        const int n = header->first;
        if (edges.size() == header->second) throw ParseError(lineno, "more edges than the header declares");
        if (v[0] < 1 || v[0] > n || v[1] < 1 || v[1] > n)
            throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
        if (v[0] == v[1]) throw ParseError(lineno, "self-loop at vertex " + std::to_string(v[0]));
        Edge e(static_cast<Vertex>(v[0] - 1), static_cast<Vertex>(v[1] - 1));
        if (!seen.insert(e).second)
            throw ParseError(lineno, "duplicate edge " + std::to_string(v[0]) + " " + std::to_string(v[1]));
        edges.push_back(e);
    }
    if (!header) throw ParseError(lineno, "missing \"n m\" header");
    if (edges.size() != header->second)
        throw ParseError(lineno, "header declares " + std::to_string(header->second) + " edges, found " +
                                     std::to_string(edges.size()));
    return Graph(header->first, edges);
}

inline Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return parse_graph(in);
}

inline std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

/// "5,2,3" or "{5,2,3}" as integers in the given order.
inline std::vector<int> parse_int_list(const std::string& text) {
    std::string s = detail::trim(text);
    if (!s.empty() && s.front() == '{' && s.back() == '}') s = s.substr(1, s.size() - 2);
    std::vector<int> out;
    if (detail::trim(s).empty()) return out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        tok = detail::trim(tok);
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (tok.empty() || used != tok.size()) throw ParseError(0, "bad list entry '" + tok + "'");
        out.push_back(v);
    }
    return out;
}

inline Labeling parse_labeling(const std::string& text) { return Labeling(parse_int_list(text)); }

/// Accepts any order; the result is sorted.
inline PinnacleSet parse_pinnacle_set(const std::string& text) {
    auto v = parse_int_list(text);
    std::sort(v.begin(), v.end());
    return PinnacleSet(std::move(v));
}

inline std::string join_labels(std::span<const int> xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? "," : "") + std::to_string(xs[i]);
    return out;
}

/// Hasse diagram, one arc per cover, lower set -> upper set.
inline std::string emit_hasse_dot(const DominancePoset& P) {
    std::ostringstream out;
    out << "digraph pinnacle_poset {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < P.elements.size(); ++i)
        out << "  n" << i << " [label=\"" << P.elements[i].to_string() << "\"];\n";
    for (auto [lo, up] : P.covers) out << "  n" << lo << " -> n" << up << ";\n";
    out << "}\n";
    return out.str();
}

inline std::string table_csv(const CountTable& t) {
    std::ostringstream out;
    std::size_t width = t.rows.empty() ? 0 : t.rows.back().size();
    out << "n";
    for (std::size_t k = 1; k <= width; ++k) out << ",k=" << k;
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << t.first + static_cast<int>(i);
        for (std::size_t k = 0; k < width; ++k) {
            out << ',';
            if (k < t.rows[i].size()) out << t.rows[i][k];
        }
        out << '\n';
    }
    return out.str();
}

inline std::string table_text(const CountTable& t) {
    std::size_t width = t.rows.empty() ? 0 : t.rows.back().size();
    std::size_t cell = 3;
    for (const auto& row : t.rows)
        for (const auto& x : row) cell = std::max(cell, x.str().size());
    std::ostringstream out;
    out << std::setw(4) << "n\\k";
    for (std::size_t k = 1; k <= width; ++k) out << ' ' << std::setw(static_cast<int>(cell)) << k;
    out << '\n';
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out << std::setw(4) << t.first + static_cast<int>(i);
        for (const auto& x : t.rows[i]) out << ' ' << std::setw(static_cast<int>(cell)) << x.str();
        out << '\n';
    }
    return out.str();
}

/// Brute-force guard default: PINNACLE_MAX_N when set to a positive integer.
inline int default_max_n() {
    if (const char* env = std::getenv("PINNACLE_MAX_N")) {
        try {
            std::size_t used = 0;
            const int v = std::stoi(env, &used);
            if (used == std::string(env).size() && v > 0) return v;
        } catch (const std::exception&) {
        }
        throw ParseError(0, std::string("PINNACLE_MAX_N must be a positive integer, got '") + env + "'");
    }
    return kDefaultMaxN;
}

/// One CLI run. nlohmann::json objects keep keys sorted, so output is stable.
struct RunReport {
    std::string command;
    nlohmann::json inputs = nlohmann::json::object();
    nlohmann::json result = nlohmann::json::object();
    double elapsed_ms = 0.0;

    [[nodiscard]] nlohmann::json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"result", result}, {"elapsed_ms", elapsed_ms}};
    }

    /// "key: value" lines with keys padded to a common width; nested objects indent.
    [[nodiscard]] std::string to_text() const {
        std::ostringstream out;
        out << "command: " << command << '\n';
        write_block(out, "inputs", inputs, 0);
        write_block(out, "result", result, 0);
        return out.str();
    }

private:
    static std::string scalar(const nlohmann::json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + scalar(v[i]);
            return s;
        }
        return v.dump();
    }
    static void write_block(std::ostringstream& out, const std::string& name, const nlohmann::json& obj, int depth) {
        const std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        out << pad << name << ":\n";
        std::size_t w = 0;
        for (auto it = obj.begin(); it != obj.end(); ++it) w = std::max(w, it.key().size());
        for (auto it = obj.begin(); it != obj.end(); ++it) {
            if (it->is_object()) {
                write_block(out, it.key(), *it, depth + 1);
                continue;
            }
            if (it->is_array() && !it->empty() && ((*it)[0].is_array() || (*it)[0].is_object())) {
                out << pad << "  " << it.key() << ":\n";
                for (const auto& row : *it) out << pad << "    " << (row.is_object() ? row.dump() : scalar(row)) << '\n';
                continue;
            }
            out << pad << "  " << std::left << std::setw(static_cast<int>(w)) << it.key() << std::right << "  "
                << scalar(*it) << '\n';
        }
    }
};

}  // namespace pinnacle
