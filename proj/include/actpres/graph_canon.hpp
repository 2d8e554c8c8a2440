#pragma once

#include <actpres/graph.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace actpres {

namespace detail {

// Colour refinement to a stable, relabelling-invariant colouring.
inline std::vector<std::size_t> refine(const Graph& g, std::vector<std::size_t> colour) {
    const std::size_t n = g.vertex_count();
    std::size_t classes = 0;
    while (true) {
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<std::size_t> s{colour[v]};
            std::vector<std::size_t> nb;
            for (Vertex w : g.neighbors(v)) nb.push_back(colour[w]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<std::size_t>> keys;
        for (auto& s : sig) keys.push_back(s.first);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<std::size_t> next(n);
        for (Vertex v = 0; v < n; ++v)
            next[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (keys.size() == classes) return next;
        classes = keys.size();
        colour = std::move(next);
    }
}

} // namespace detail

/// Canonical form of a graph: the least adjacency string over all
/// labellings reached by individualisation and colour refinement. Two
/// graphs are isomorphic iff their forms are equal.
inline std::string canonical_form(const Graph& g, std::size_t budget = 1000000) {
    const std::size_t n = g.vertex_count();
    std::optional<std::string> best;
    std::size_t leaves = 0;
    std::function<void(std::vector<std::size_t>)> search = [&](std::vector<std::size_t> colour) {
        colour = detail::refine(g, colour);
        std::map<std::size_t, std::vector<Vertex>> cells;
        for (Vertex v = 0; v < n; ++v) cells[colour[v]].push_back(v);
        const std::vector<Vertex>* target = nullptr;
        for (auto& [c, cell] : cells)
            if (cell.size() > 1 && (!target || cell.size() < target->size())) target = &cell;
        if (!target) {
            if (++leaves > budget) throw LimitExceeded("canonical_form: search budget exhausted");
            std::vector<std::string> rows;
            std::vector<std::pair<std::size_t, std::size_t>> es;
            for (auto [u, v] : g.edges()) {
                auto a = colour[u], b = colour[v];
                es.push_back({std::min(a, b), std::max(a, b)});
            }
            std::sort(es.begin(), es.end());
            std::string s = std::to_string(n) + ":";
            for (auto [a, b] : es) s += std::to_string(a) + "-" + std::to_string(b) + ",";
            if (!best || s < *best) best = s;
            return;
        }
        for (Vertex v : *target) {
            std::vector<std::size_t> c(colour.size());
            // individualised vertex keeps its colour, the rest of its cell moves up
            for (Vertex x = 0; x < n; ++x) c[x] = 2 * colour[x] + ((colour[x] == colour[v] && x != v) ? 1 : 0);
            search(c);
        }
    };
    search(std::vector<std::size_t>(n, 0));
    return best.value_or(std::to_string(n) + ":");
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace actpres
