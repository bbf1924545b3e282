#pragma once

// Text formats.
//
// Graph file (1-based, '#' starts a comment):
//     p <n> <m>
//     e <u> <v>        (m lines)
//
// Colouring file:
//     meta <key>=<value> ...
//     v <id> <colour>
//     E <u> <v> <colour>
//     w <id> <weighted degree>      (optional, informational)
//
// Writers emit a canonical form; parse(write(x)) == x and write(parse(s)) == s
// for canonical s.

#include "colouring.hpp"
#include "distinguisher.hpp"
#include "graph.hpp"
#include "ordering.hpp"
#include "verifier.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace distsum {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline std::vector<std::string> tokens(const std::string& line) {
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;) out.push_back(t);
    return out;
}

inline std::int64_t parse_int(const std::string& s, std::size_t line) {
    std::size_t used = 0;
    long long value = 0;
    try {
        value = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
    if (used != s.size()) throw ParseError(line, "expected an integer, got '" + s + "'");
    return value;
}

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(0, "cannot open " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace detail

inline Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0, header_line = 0;
    std::int64_t n = -1, m = -1;
    std::vector<std::pair<std::int64_t, std::int64_t>> edges;
    std::vector<std::size_t> edge_lines;
    while (std::getline(in, raw)) {
        ++line_no;
        auto tok = detail::tokens(detail::strip_comment(raw));
        if (tok.empty()) continue;
        if (tok[0] == "p") {
            if (n >= 0) throw ParseError(line_no, "repeated header");
            if (tok.size() != 3) throw ParseError(line_no, "header must be 'p <n> <m>'");
            n = detail::parse_int(tok[1], line_no);
            m = detail::parse_int(tok[2], line_no);
            if (n < 0 || m < 0) throw ParseError(line_no, "negative count in header");
            header_line = line_no;
        } else if (tok[0] == "e") {
            if (n < 0) throw ParseError(line_no, "edge before header");
            if (tok.size() != 3) throw ParseError(line_no, "edge must be 'e <u> <v>'");
            edges.emplace_back(detail::parse_int(tok[1], line_no), detail::parse_int(tok[2], line_no));
            edge_lines.push_back(line_no);
        } else {
            throw ParseError(line_no, "unknown record '" + tok[0] + "'");
        }
    }
    if (n < 0) throw ParseError(line_no, "missing 'p <n> <m>' header");
    if (static_cast<std::int64_t>(edges.size()) != m)
        throw ParseError(header_line, "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(edges.size()));
    try {
        return build_graph(static_cast<std::size_t>(n), edges);
    } catch (const GraphError& err) {
        throw ParseError(edge_lines[err.edge_index()], err.what());
    }
}

inline Graph parse_graph(const std::string& path) { return parse_graph_text(detail::read_file(path)); }

inline std::string write_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
    return out.str();
}

struct ColouringDocument {
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<Colour> vertex;                                 ///< by vertex id
    std::vector<std::tuple<std::int64_t, std::int64_t, Colour>> edges;  ///< 1-based endpoints
    std::vector<Colour> weights;                                ///< empty or one per vertex

    friend bool operator==(const ColouringDocument&, const ColouringDocument&) = default;
};

inline ColouringDocument make_document(const Graph& g, const TotalColouring& c,
                                       std::vector<std::pair<std::string, std::string>> meta) {
    ColouringDocument doc;
    doc.meta = std::move(meta);
    doc.vertex = c.vertex;
    for (EdgeId e = 0; e < g.size(); ++e) doc.edges.emplace_back(g.edge(e).u + 1, g.edge(e).v + 1, c.edge[e]);
    doc.weights = weighted_degrees(g, c);
    return doc;
}

inline std::string write_colouring(const ColouringDocument& doc) {
    std::ostringstream out;
    out << "meta";
    for (const auto& [k, v] : doc.meta) out << ' ' << k << '=' << v;
    out << '\n';
    for (std::size_t v = 0; v < doc.vertex.size(); ++v) out << "v " << v + 1 << ' ' << doc.vertex[v] << '\n';
    for (const auto& [a, b, c] : doc.edges) out << "E " << a << ' ' << b << ' ' << c << '\n';
    for (std::size_t v = 0; v < doc.weights.size(); ++v) out << "w " << v + 1 << ' ' << doc.weights[v] << '\n';
    return out.str();
}

inline ColouringDocument parse_colouring_text(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    ColouringDocument doc;
    bool have_meta = false;
    auto expect_next = [&](std::vector<Colour>& list, const std::vector<std::string>& tok, const char* what) {
        if (tok.size() != 3) throw ParseError(line_no, std::string(what) + " record must have 2 fields");
        const auto id = detail::parse_int(tok[1], line_no);
        if (id != static_cast<std::int64_t>(list.size()) + 1)
            throw ParseError(line_no, std::string(what) + " records must be listed in id order");
        list.push_back(detail::parse_int(tok[2], line_no));
    };
    while (std::getline(in, raw)) {
        ++line_no;
        auto tok = detail::tokens(detail::strip_comment(raw));
        if (tok.empty()) continue;
        if (tok[0] == "meta") {
            if (have_meta) throw ParseError(line_no, "repeated meta line");
            have_meta = true;
            for (std::size_t i = 1; i < tok.size(); ++i) {
                auto eq = tok[i].find('=');
                if (eq == std::string::npos) throw ParseError(line_no, "meta entries must be key=value");
                doc.meta.emplace_back(tok[i].substr(0, eq), tok[i].substr(eq + 1));
            }
        } else if (tok[0] == "v") {
            expect_next(doc.vertex, tok, "v");
        } else if (tok[0] == "w") {
            expect_next(doc.weights, tok, "w");
        } else if (tok[0] == "E") {
            if (tok.size() != 4) throw ParseError(line_no, "E record must be 'E <u> <v> <colour>'");
            doc.edges.emplace_back(detail::parse_int(tok[1], line_no), detail::parse_int(tok[2], line_no),
                                   detail::parse_int(tok[3], line_no));
        } else {
            throw ParseError(line_no, "unknown record '" + tok[0] + "'");
        }
    }
    if (!have_meta) throw ParseError(0, "colouring file has no meta line");
    return doc;
}

inline ColouringDocument parse_colouring(const std::string& path) {
    return parse_colouring_text(detail::read_file(path));
}

/// Binds a parsed document to a graph. Missing elements raise IncompleteColouring.
inline TotalColouring to_colouring(const Graph& g, const ColouringDocument& doc) {
    if (doc.vertex.size() != g.order())
        throw IncompleteColouring("colouring lists " + std::to_string(doc.vertex.size()) + " vertices, graph has " +
                                  std::to_string(g.order()));
    TotalColouring c;
    c.vertex = doc.vertex;
    c.edge.assign(g.size(), 0);
    std::vector<bool> seen(g.size(), false);
    for (const auto& [a, b, colour] : doc.edges) {
        if (a < 1 || b < 1 || static_cast<std::size_t>(a) > g.order() || static_cast<std::size_t>(b) > g.order())
            throw ParseError(0, "colouring names an edge outside the graph");
        const auto e = g.find_edge(static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1));
        if (e < 0) throw ParseError(0, "colouring names a non-edge " + std::to_string(a) + "-" + std::to_string(b));
        if (seen[static_cast<std::size_t>(e)]) throw ParseError(0, "edge coloured twice");
        seen[static_cast<std::size_t>(e)] = true;
        c.edge[static_cast<std::size_t>(e)] = colour;
    }
    for (EdgeId e = 0; e < g.size(); ++e)
        if (!seen[e])
            throw IncompleteColouring("edge " + std::to_string(g.edge(e).u + 1) + "-" +
                                      std::to_string(g.edge(e).v + 1) + " has no colour");
    return c;
}

/// Header values of a `color` run.
inline std::vector<std::pair<std::string, std::string>> run_meta(const Graph& g, const RunResult& res) {
    return {
        {"n", std::to_string(g.order())},
        {"m", std::to_string(g.size())},
        {"delta", std::to_string(g.max_degree())},
        {"r", std::to_string(res.trace.r)},
        {"k", to_string(res.params.k)},
        {"K", to_string(res.params.K)},
        {"palette_max", to_string(res.params.palette_max)},
        {"fallbacks", std::to_string(res.trace.fallback_count)},
    };
}

inline std::string write_certificate(const Graph& g, const OrderingCertificate& cert) {
    std::ostringstream out;
    auto status = [](std::optional<bool> b) { return !b ? "na" : (*b ? "pass" : "fail"); };
    out << "certificate n=" << g.order() << " delta=" << g.max_degree() << " r=" << cert.r << " seed=" << cert.seed
        << " tau=" << detail::format_double(cert.tau) << " rounds=" << cert.resample_rounds
        << " valid=" << (cert.valid ? 1 : 0) << " checked=" << cert.checks.size()
        << " failed=" << cert.failed_checks() << '\n';
    for (Vertex v = 0; v < cert.x.size(); ++v) out << "x " << v + 1 << ' ' << detail::format_double(cert.x[v]) << '\n';
    out << "ordering";
    for (Vertex v : cert.ordering) out << ' ' << v + 1;
    out << "\nI";
    for (Vertex v = 0; v < cert.in_I.size(); ++v)
        if (cert.in_I[v]) out << ' ' << v + 1;
    out << "\nR";
    for (Vertex v = 0; v < cert.in_I.size(); ++v)
        if (!cert.in_I[v]) out << ' ' << v + 1;
    out << '\n';
    for (const auto& c : cert.checks)
        out << "check " << c.v + 1 << " set=" << (c.in_I ? 'I' : 'R') << " i=" << status(c.cond_i)
            << " ii=" << status(c.cond_ii) << " iii=" << status(c.cond_iii) << '\n';
    return out.str();
}

inline std::string write_trace(const Graph& g, const RunTrace& trace) {
    std::ostringstream out;
    out << "trace r=" << trace.r << " param_r=" << trace.param_r << " param_delta=" << trace.param_delta
        << " steps=" << trace.steps.size() << " fallbacks=" << trace.fallback_count << '\n';
    for (Vertex v = 0; v < trace.base.vertex.size(); ++v) out << "base v " << v + 1 << ' ' << trace.base.vertex[v] << '\n';
    for (EdgeId e = 0; e < trace.base.edge.size(); ++e)
        out << "base E " << g.edge(e).u + 1 << ' ' << g.edge(e).v + 1 << ' ' << trace.base.edge[e] << '\n';
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        out << "step " << i + 1 << " v=" << s.v + 1 << " cprime=" << s.base_colour << " colour=" << s.colour
            << " target=" << s.target << " admissible=" << s.admissible << " lattice=" << s.lattice
            << " backward_r=" << s.backward_r << " lift=" << s.lift << " fallback=" << (s.fallback ? 1 : 0) << '\n';
        for (const auto& d : s.edge_deltas)
            out << "  edge " << g.edge(d.edge).u + 1 << ' ' << g.edge(d.edge).v + 1 << ' ' << d.delta << '\n';
        for (const auto& d : s.compensations) out << "  comp " << d.vertex + 1 << ' ' << d.delta << '\n';
    }
    return out.str();
}

inline std::string describe(const Graph& g, const Violation& v) {
    std::ostringstream out;
    out << to_string(v.kind);
    switch (v.kind) {
        case ViolationKind::AdjacentEdges:
            out << " edges " << g.edge(v.a).u + 1 << '-' << g.edge(v.a).v + 1 << " and " << g.edge(v.b).u + 1 << '-'
                << g.edge(v.b).v + 1;
            break;
        case ViolationKind::EdgeEndpoint:
            out << " edge " << g.edge(v.a).u + 1 << '-' << g.edge(v.a).v + 1 << " at vertex " << v.b + 1;
            break;
        case ViolationKind::ColourBound:
            break;
        default:
            out << ' ' << v.a + 1 << ' ' << v.b + 1;
    }
    return out.str();
}

}  // namespace distsum
