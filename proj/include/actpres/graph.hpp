#pragma once

#include <actpres/group_table.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace actpres {

using Vertex = std::uint32_t;

/// Finite simple graph. Edges are kept as sorted pairs (u < v).
class Graph {
public:
    Graph() = default;

    Graph(std::size_t vertex_count, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(vertex_count) {
        adj_.resize(n_);
        std::set<std::pair<Vertex, Vertex>> seen;
        for (auto [u, v] : edges) {
            if (u >= n_ || v >= n_) throw InputError("edge endpoint out of range");
            if (u == v) throw InputError("loop at vertex " + std::to_string(u) + " (graph must be simple)");
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second)
                throw InputError("multiple edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        edges_.assign(seen.begin(), seen.end());
        for (auto [u, v] : edges_) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        for (auto& a : adj_) std::sort(a.begin(), a.end());
    }

    std::size_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
    std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

    bool adjacent(Vertex u, Vertex v) const {
        if (u >= n_ || v >= n_) return false;
        auto& a = adj_[u];
        return std::binary_search(a.begin(), a.end(), v);
    }

    bool connected() const {
        if (n_ == 0) return true;
        std::vector<bool> seen(n_, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        std::size_t count = 1;
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : adj_[x])
                if (!seen[y]) {
                    seen[y] = true;
                    ++count;
                    stack.push_back(y);
                }
        }
        return count == n_;
    }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;
    std::vector<std::vector<Vertex>> adj_;
};

struct OrientedEdge {
    Vertex origin = 0;
    Vertex target = 0;

    OrientedEdge reversed() const { return {target, origin}; }
    friend auto operator<=>(const OrientedEdge&, const OrientedEdge&) = default;
    std::string str() const { return std::to_string(origin) + "," + std::to_string(target); }
};

/// A graph together with a finite group acting on it from the left. The
/// group is carried by `group` (any faithful permutation representation);
/// `vertex_action[g]` is how element g moves the vertices. For a faithful
/// vertex action the two coincide.
struct ActionedGraph {
    Graph graph;
    FiniteGroupTable group;
    std::vector<Perm> vertex_action;
    std::vector<std::string> generator_labels;

    Vertex act(ElementId g, Vertex x) const { return vertex_action[g](x); }
    OrientedEdge act(ElementId g, OrientedEdge e) const { return {act(g, e.origin), act(g, e.target)}; }

    std::optional<std::size_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generator_labels.size(); ++i)
            if (generator_labels[i] == name) return i;
        return std::nullopt;
    }
};

/// Builds the group from `carrier_gens` and the vertex action from
/// `vertex_gens` (same length). Fails if the vertex images do not define a
/// homomorphism of the carrier group. Pass empty `vertex_gens` when the
/// carrier is the vertex action itself.
inline ActionedGraph make_actioned_graph(Graph graph, const std::vector<Perm>& carrier_gens,
                                         std::vector<Perm> vertex_gens, std::vector<std::string> labels,
                                         std::size_t limit = 100000) {
    if (carrier_gens.empty()) throw InputError("action needs at least one generator");
    if (vertex_gens.empty()) vertex_gens = carrier_gens;
    if (vertex_gens.size() != carrier_gens.size()) throw InputError("vertex images missing for some generator");
    if (labels.size() != carrier_gens.size()) throw InputError("generator label count mismatch");
    for (auto& p : vertex_gens)
        if (p.degree() != graph.vertex_count())
            throw InputError("vertex permutation degree " + std::to_string(p.degree()) + " != vertex count " +
                             std::to_string(graph.vertex_count()));

    ActionedGraph ag;
    ag.graph = std::move(graph);
    ag.group = generate_closure(carrier_gens, limit);
    ag.generator_labels = std::move(labels);
    const auto& G = ag.group;
    ag.vertex_action.resize(G.order());
    ag.vertex_action[0] = Perm::identity(ag.graph.vertex_count());
    for (ElementId x = 1; x < G.order(); ++x) {
        auto [parent, gen] = *G.bfs_parent(x);
        ag.vertex_action[x] = ag.vertex_action[parent] * vertex_gens[gen];
    }
    for (ElementId x = 0; x < G.order(); ++x)
        for (std::size_t j = 0; j < carrier_gens.size(); ++j) {
            ElementId y = G.mul(x, G.generators()[j]);
            if (ag.vertex_action[y] != ag.vertex_action[x] * vertex_gens[j])
                throw InputError("vertex images do not define an action of the generated group");
        }
    return ag;
}

struct ActionReport {
    bool ok = true;
    bool connected = true;
    std::optional<ElementId> element;
    std::optional<std::pair<Vertex, Vertex>> edge;
    std::string message;
};

/// Checks that every element maps edges to edges; with `require_connected`
/// also that the graph is connected. Reports the first violation found,
/// scanning elements then edges in index order.
inline ActionReport validate_action(const ActionedGraph& ag, bool require_connected = false) {
    ActionReport r;
    if (ag.vertex_action.size() != ag.group.order()) {
        r.ok = false;
        r.message = "vertex action size does not match group order";
        return r;
    }
    for (ElementId g = 0; g < ag.group.order(); ++g) {
        if (ag.vertex_action[g].degree() != ag.graph.vertex_count()) {
            r.ok = false;
            r.element = g;
            r.message = "vertex permutation has wrong degree";
            return r;
        }
        for (auto [u, v] : ag.graph.edges())
            if (!ag.graph.adjacent(ag.act(g, u), ag.act(g, v))) {
                r.ok = false;
                r.element = g;
                r.edge = {u, v};
                r.message = "element " + std::to_string(g) + " maps edge {" + std::to_string(u) + "," +
                            std::to_string(v) + "} to a non-edge";
                return r;
            }
    }
    r.connected = ag.graph.connected();
    if (require_connected && !r.connected) {
        r.ok = false;
        r.message = "graph is not connected";
    }
    return r;
}

/// Vertex orbits, each sorted, listed by least vertex.
inline std::vector<std::vector<Vertex>> vertex_orbits(const ActionedGraph& ag) {
    const std::size_t n = ag.graph.vertex_count();
    std::vector<bool> seen(n, false);
    std::vector<std::vector<Vertex>> out;
    for (Vertex v = 0; v < n; ++v) {
        if (seen[v]) continue;
        std::set<Vertex> orb;
        for (ElementId g = 0; g < ag.group.order(); ++g) orb.insert(ag.act(g, v));
        for (Vertex w : orb) seen[w] = true;
        out.emplace_back(orb.begin(), orb.end());
    }
    return out;
}

inline ElementSet stabilizer(const ActionedGraph& ag, Vertex v) {
    ElementSet s;
    for (ElementId g = 0; g < ag.group.order(); ++g)
        if (ag.act(g, v) == v) s.push_back(g);
    return s;
}

/// G_e = G_o(e) intersected with G_t(e).
inline ElementSet edge_stabilizer(const ActionedGraph& ag, OrientedEdge e) {
    if (!ag.graph.adjacent(e.origin, e.target)) throw InputError("edge_stabilizer: (" + e.str() + ") is not an edge");
    ElementSet s;
    for (ElementId g = 0; g < ag.group.order(); ++g)
        if (ag.act(g, e.origin) == e.origin && ag.act(g, e.target) == e.target) s.push_back(g);
    return s;
}

/// Least-index element swapping the endpoints of e.
inline std::optional<ElementId> find_inversion(const ActionedGraph& ag, OrientedEdge e) {
    for (ElementId g = 0; g < ag.group.order(); ++g)
        if (ag.act(g, e.origin) == e.target && ag.act(g, e.target) == e.origin) return g;
    return std::nullopt;
}

} // namespace actpres
