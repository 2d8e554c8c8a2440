#pragma once

#include <actpres/graph.hpp>

#include <vector>

namespace fixtures {

using namespace actpres;

inline Graph complete_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i) e.push_back({i, static_cast<Vertex>((i + 1) % n)});
    return Graph(n, e);
}

inline Perm rotation(std::size_t n) {
    std::vector<Point> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>((i + 1) % n);
    return Perm::from_images(img);
}

inline ActionedGraph symmetric_on_complete(std::size_t n) {
    std::vector<Perm> gens;
    for (Point i = 0; i + 1 < n; ++i) gens.push_back(Perm::from_cycles(n, {{i, i + 1}}));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i + 1 < n; ++i) labels.push_back("t" + std::to_string(i));
    return make_actioned_graph(complete_graph(n), gens, {}, labels);
}

// Z/n acting on the n-cycle by rotation only: free, no inversions.
inline ActionedGraph rotations_on_cycle(std::size_t n) {
    return make_actioned_graph(cycle_graph(n), {rotation(n)}, {}, {"r"});
}

inline ActionedGraph trivial_on(Graph g) {
    auto n = g.vertex_count();
    return make_actioned_graph(std::move(g), {Perm::identity(n)}, {}, {"e"});
}

} // namespace fixtures
