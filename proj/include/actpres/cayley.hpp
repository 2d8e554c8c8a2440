#pragma once

#include <actpres/graph.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace actpres {

/// Cayley diagram of the subgroup generated by S: an edge x -> x s labelled
/// s for every element x and every s in S.
struct CayleyDiagram {
    std::vector<ElementId> vertices; // element indices, BFS order from the identity
    struct Edge {
        ElementId from, to;
        std::size_t label;
    };
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    std::vector<bool> involution; // per label
    bool generates = true;        // S generates the whole group
};

inline CayleyDiagram cayley_diagram(const FiniteGroupTable& G, const std::vector<ElementId>& S,
                                    const std::vector<std::string>& names) {
    if (S.size() != names.size()) throw InputError("cayley_diagram: one name per generator needed");
    CayleyDiagram d;
    d.labels = names;
    for (ElementId s : S) d.involution.push_back(s != 0 && G.mul(s, s) == 0);
    std::vector<bool> seen(G.order(), false);
    d.vertices.push_back(0);
    seen[0] = true;
    for (std::size_t i = 0; i < d.vertices.size(); ++i)
        for (ElementId s : S) {
            ElementId y = G.mul(d.vertices[i], s);
            if (!seen[y]) {
                seen[y] = true;
                d.vertices.push_back(y);
            }
        }
    d.generates = d.vertices.size() == G.order();
    std::vector<ElementId> sorted = d.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (ElementId x : sorted)
        for (std::size_t j = 0; j < S.size(); ++j) {
            ElementId y = G.mul(x, S[j]);
            // an involution gives each undirected edge twice; keep one
            if (d.involution[j] && y < x) continue;
            d.edges.push_back({x, y, j});
        }
    return d;
}

/// DOT digraph; involutive labels are drawn with dir=none.
inline std::string cayley_to_dot(const CayleyDiagram& d, const std::string& name = "cayley") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    std::vector<ElementId> sorted = d.vertices;
    std::sort(sorted.begin(), sorted.end());
    for (ElementId x : sorted) os << "  " << x << ";\n";
    for (const auto& e : d.edges) {
        os << "  " << e.from << " -> " << e.to << " [label=\"" << d.labels[e.label] << "\"";
        if (d.involution[e.label]) os << ", dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

/// Underlying simple undirected graph, vertices renumbered by element index.
inline Graph cayley_underlying_graph(const CayleyDiagram& d) {
    std::vector<ElementId> sorted = d.vertices;
    std::sort(sorted.begin(), sorted.end());
    auto pos = [&](ElementId x) {
        return static_cast<Vertex>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    };
    std::set<std::pair<Vertex, Vertex>> es;
    for (const auto& e : d.edges) {
        if (e.from == e.to) continue;
        Vertex a = pos(e.from), b = pos(e.to);
        es.insert({std::min(a, b), std::max(a, b)});
    }
    return Graph(sorted.size(), {es.begin(), es.end()});
}

/// Undirected DOT for a plain graph.
inline std::string graph_to_dot(const Graph& g, const std::string& name = "X") {
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << ";\n";
    for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace actpres
