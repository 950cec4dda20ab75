#ifndef HOLES_IO_HPP
#define HOLES_IO_HPP

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "holes/graph.hpp"

namespace holes {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// graph6: 6-bit groups, offset 63, upper-triangle column order.
inline std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw ParseError("graph6: graph too large");
    }
    int bit = 5;
    int cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (g.has_edge(u, v)) cur |= 1 << bit;
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

inline Graph from_graph6(const std::string& line) {
    std::size_t pos = 0;
    if (line.rfind(">>graph6<<", 0) == 0) pos = 10;
    if (pos >= line.size()) throw ParseError("graph6: empty");
    long long n;
    if (line[pos] == 126) {
        if (line.size() < pos + 4) throw ParseError("graph6: truncated header");
        if (line[pos + 1] == 126) throw ParseError("graph6: graph too large");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | (line[pos + i] - 63);
        pos += 4;
    } else {
        n = line[pos] - 63;
        pos += 1;
    }
    if (n < 0 || n > 100000) throw ParseError("graph6: bad vertex count");
    Graph g(static_cast<int>(n));
    long long need = n * (n - 1) / 2;
    int bit = 5;
    int cur = 0;
    long long idx = 0;
    for (int v = 1; v < n && idx < need; ++v)
        for (int u = 0; u < v; ++u, ++idx) {
            if (bit == 5) {
                if (pos >= line.size()) throw ParseError("graph6: truncated body");
                cur = line[pos++] - 63;
                if (cur < 0 || cur > 63) throw ParseError("graph6: bad character");
            }
            if ((cur >> bit) & 1) g.add_edge(u, v);
            if (--bit < 0) bit = 5;
        }
    return g;
}

// Edge list: first line "n m", then m lines "u v", 0-based ids.
inline std::string to_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.n() << ' ' << g.edge_count() << '\n';
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) os << u << ' ' << v << '\n';
    return os.str();
}

inline Graph from_edge_list(std::istream& in) {
    int n;
    long long m;
    if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: bad header");
    Graph g(n);
    for (long long i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) throw ParseError("edge list: truncated");
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw ParseError("edge list: bad edge");
        g.add_edge(u, v);
    }
    return g;
}

inline Graph from_edge_list(const std::string& text) {
    std::istringstream is(text);
    return from_edge_list(is);
}

inline std::string to_dot(const Graph& g, const std::string& name = "g") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < g.n(); ++v) {
        os << "  " << v;
        if (g.has_labels()) os << " [label=\"" << g.label(v) << "\"]";
        os << ";\n";
    }
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.has_edge(u, v)) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace holes

#endif
