#ifndef HOLES_HYPERGRAPH_HPP
#define HOLES_HYPERGRAPH_HPP

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "holes/graph.hpp"
#include "holes/io.hpp"

namespace holes {

enum class EdgeSide { None, A, APrime };

// Hypergraph on ground set 0..n-1. Hyperedges are nonempty vertex subsets;
// duplicates allowed (distinct hyperedges on the same vertex set). Edges may
// carry a side tag used by the even-template hyper-cycle machinery.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;   // each sorted, nonempty
    std::vector<EdgeSide> sides;           // empty or parallel to edges

    void add_edge(std::vector<int> e, EdgeSide side = EdgeSide::None) {
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        edges.push_back(std::move(e));
        if (side != EdgeSide::None || !sides.empty()) {
            sides.resize(edges.size() - 1, EdgeSide::None);
            sides.push_back(side);
        }
    }

    bool valid() const {
        for (const auto& e : edges) {
            if (e.empty()) return false;
            for (int v : e)
                if (v < 0 || v >= n) return false;
        }
        return sides.empty() || sides.size() == edges.size();
    }
};

namespace detail {
inline bool subset(const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}
inline bool disjoint(const std::vector<int>& a, const std::vector<int>& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return false;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return true;
}
} // namespace detail

// Laminar: any two hyperedges are nested or disjoint.
inline bool is_laminar(const Hypergraph& h) {
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j) {
            const auto& x = h.edges[i];
            const auto& y = h.edges[j];
            if (!detail::subset(x, y) && !detail::subset(y, x) && !detail::disjoint(x, y))
                return false;
        }
    return true;
}

// One graph vertex per hyperedge occurrence; adjacency iff intersecting.
inline Graph line_graph(const Hypergraph& h) {
    Graph g(static_cast<int>(h.edges.size()));
    for (std::size_t i = 0; i < h.edges.size(); ++i)
        for (std::size_t j = i + 1; j < h.edges.size(); ++j)
            if (!detail::disjoint(h.edges[i], h.edges[j]))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

// Text format: "n e", then e lines "size v1 ... vsize [side]", side in {A, A'}.
inline std::string to_text(const Hypergraph& h) {
    std::ostringstream os;
    os << h.n << ' ' << h.edges.size() << '\n';
    for (std::size_t i = 0; i < h.edges.size(); ++i) {
        os << h.edges[i].size();
        for (int v : h.edges[i]) os << ' ' << v;
        if (!h.sides.empty() && h.sides[i] != EdgeSide::None)
            os << ' ' << (h.sides[i] == EdgeSide::A ? "A" : "A'");
        os << '\n';
    }
    return os.str();
}

inline Hypergraph hypergraph_from_text(std::istream& in) {
    Hypergraph h;
    int e;
    if (!(in >> h.n >> e) || h.n < 0 || e < 0) throw ParseError("hypergraph: bad header");
    for (int i = 0; i < e; ++i) {
        int sz;
        if (!(in >> sz) || sz <= 0) throw ParseError("hypergraph: bad edge size");
        std::vector<int> edge(static_cast<std::size_t>(sz));
        for (int& v : edge)
            if (!(in >> v) || v < 0 || v >= h.n) throw ParseError("hypergraph: bad vertex");
        EdgeSide side = EdgeSide::None;
        if (in.peek() == ' ') {
            while (in.peek() == ' ') in.get();
            if (in.peek() != '\n' && in.peek() != EOF) {
                std::string tok;
                in >> tok;
                if (tok == "A") side = EdgeSide::A;
                else if (tok == "A'") side = EdgeSide::APrime;
                else throw ParseError("hypergraph: bad side tag");
            }
        }
        h.add_edge(std::move(edge), side);
    }
    return h;
}

inline Hypergraph hypergraph_from_text(const std::string& text) {
    std::istringstream is(text);
    return hypergraph_from_text(is);
}

} // namespace holes

#endif
