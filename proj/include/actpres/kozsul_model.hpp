#pragma once

#include <actpres/derive.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace actpres {

struct OrderReport {
    bool ok = false;
    bool limit_hit = false;
    std::optional<std::size_t> enumerated_order;
    std::size_t group_order = 0;
    std::optional<std::size_t> failing_relator; // relator not mapped to the identity
    std::string message;
};

/// Relator soundness under the generator images, then coset enumeration
/// over the trivial subgroup compared with |G|.
inline OrderReport presentation_order_check(const Presentation& p, const std::vector<ElementId>& images,
                                            const FiniteGroupTable& G, std::size_t limit = 1000000) {
    OrderReport r;
    r.group_order = G.order();
    if (images.size() != p.generators.size()) throw InputError("presentation_order_check: image count mismatch");
    for (std::size_t i = 0; i < p.relators.size(); ++i)
        if (evaluate_word(G, p.relators[i], images, FiniteGroupTable::identity()) != FiniteGroupTable::identity()) {
            r.failing_relator = i;
            r.message = "relator " + std::to_string(i) + " is not the identity in G";
            return r;
        }
    try {
        r.enumerated_order = todd_coxeter(p, {}, limit).cosets;
    } catch (const LimitExceeded& e) {
        r.limit_hit = true;
        r.message = e.what();
        return r;
    }
    r.ok = *r.enumerated_order == G.order();
    if (!r.ok)
        r.message = "enumerated order " + std::to_string(*r.enumerated_order) + " != |G| = " + std::to_string(G.order());
    return r;
}

/// The graph on the disjoint union of the coset spaces Gamma/Gamma_v (v in
/// V), Gamma the group of the presentation. The neighbours of gamma v* are
/// gamma g_e v(e)* for e leaving v, and f(gamma v*) = phi(gamma)(v).
struct KozsulModel {
    std::size_t group_order = 0;
    std::vector<std::pair<Vertex, std::size_t>> label; // (v, least coset of the block)
    std::vector<Vertex> f;
    std::vector<std::vector<std::size_t>> neighbors; // in order of E_v
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    bool neighbor_rule_well_defined = true;
    std::optional<std::size_t> ill_defined_at;

    std::size_t vertex_count() const { return f.size(); }
};

/// `p` must use the generator names of the derivation (stabilizer names and
/// g[k]); its order may differ.
inline KozsulModel build_kozsul_model(const Presentation& p, const DerivationInput& in, std::size_t limit = 1000000) {
    WordTranslator tr(in);
    const auto& names = tr.generator_names();
    std::vector<std::uint32_t> to_p(names.size());
    if (p.generators.size() != names.size()) throw InputError("presentation generators differ from the derivation's");
    for (std::size_t i = 0; i < names.size(); ++i) {
        auto j = p.generator_index(names[i]);
        if (!j) throw InputError("presentation lacks generator '" + names[i] + "'");
        to_p[i] = *j;
    }
    auto remap = [&](PresWord w) {
        for (auto& l : w) l.gen = to_p[l.gen];
        return w;
    };
    std::vector<ElementId> images(p.generators.size());
    for (std::size_t i = 0; i < names.size(); ++i) images[to_p[i]] = tr.generator_images()[i];

    EnumeratedGroup Gamma(p, limit);
    const auto& T = Gamma.table();
    const auto& G = in.ag.group;
    const std::size_t n = Gamma.order();

    // phi : Gamma -> G along shortest words, checked against every table entry
    std::vector<ElementId> phi(n);
    for (std::size_t c = 0; c < n; ++c) phi[c] = evaluate_word(G, Gamma.word(c), images, FiniteGroupTable::identity());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < p.generators.size(); ++i)
            if (phi[static_cast<std::size_t>(T.at(c, 2 * i))] != G.mul(phi[c], images[i]))
                throw VerificationError("generator images do not define a homomorphism from the presented group");

    KozsulModel m;
    m.group_order = n;
    std::map<Vertex, std::vector<std::int64_t>> block; // v -> coset -> model vertex
    std::size_t offset = 0;
    for (std::size_t vi = 0; vi < in.sc.V.size(); ++vi) {
        Vertex v = in.sc.V[vi];
        std::vector<std::size_t> cols;
        for (std::size_t j = 0; j < in.stabilizers[vi].presentation.generators.size(); ++j) {
            std::size_t g = to_p[offset + j];
            cols.push_back(2 * g);
            cols.push_back(2 * g + 1);
        }
        offset += in.stabilizers[vi].presentation.generators.size();
        auto& b = block[v];
        b.assign(n, -1);
        for (std::size_t c = 0; c < n; ++c) {
            if (b[c] >= 0) continue;
            auto id = static_cast<std::int64_t>(m.f.size());
            m.label.push_back({v, c});
            m.f.push_back(in.ag.act(phi[c], v));
            std::vector<std::size_t> stack{c};
            b[c] = id;
            while (!stack.empty()) {
                std::size_t x = stack.back();
                stack.pop_back();
                for (std::size_t col : cols) {
                    auto y = static_cast<std::size_t>(T.at(x, col));
                    if (b[y] < 0) {
                        b[y] = id;
                        stack.push_back(y);
                    }
                }
            }
        }
    }

    std::map<Vertex, std::vector<std::pair<OrientedEdge, PresWord>>> edge_words;
    for (const auto& e : in.sc.E) edge_words[e.origin].push_back({e, remap(tr.edge_word(e))});

    m.neighbors.resize(m.f.size());
    for (std::size_t x = 0; x < m.f.size(); ++x) {
        auto [v, c] = m.label[x];
        for (auto& [e, w] : edge_words[v])
            m.neighbors[x].push_back(static_cast<std::size_t>(block[in.sc.v_of(e)][T.trace(c, w)]));
    }
    // every member of a block must give the same neighbour set
    for (std::size_t c = 0; c < n && m.neighbor_rule_well_defined; ++c)
        for (Vertex v : in.sc.V) {
            auto x = static_cast<std::size_t>(block[v][c]);
            std::multiset<std::size_t> want(m.neighbors[x].begin(), m.neighbors[x].end()), got;
            for (auto& [e, w] : edge_words[v]) got.insert(static_cast<std::size_t>(block[in.sc.v_of(e)][T.trace(c, w)]));
            if (want != got) {
                m.neighbor_rule_well_defined = false;
                m.ill_defined_at = x;
                break;
            }
        }
    std::set<std::pair<std::size_t, std::size_t>> es;
    for (std::size_t x = 0; x < m.f.size(); ++x)
        for (std::size_t y : m.neighbors[x]) es.insert({std::min(x, y), std::max(x, y)});
    m.edges.assign(es.begin(), es.end());
    return m;
}

struct CoveringReport {
    bool ok = true;
    std::string defect; // "", "neighbor-rule", "asymmetric", "degree", "local", "non-injective", "non-surjective", "disconnected"
    std::vector<std::size_t> witness; // model vertices involved
    std::string message;
    std::size_t model_vertices = 0, model_edges = 0;
};

/// f must be a local isomorphism (degree and neighbour bijection at every
/// vertex) and a bijection on vertices; edges then correspond as well.
inline CoveringReport check_covering_isomorphism(const KozsulModel& m, const ActionedGraph& ag) {
    CoveringReport r;
    r.model_vertices = m.vertex_count();
    r.model_edges = m.edges.size();
    auto fail = [&](std::string kind, std::vector<std::size_t> w, std::string msg) {
        r.ok = false;
        r.defect = std::move(kind);
        r.witness = std::move(w);
        r.message = std::move(msg);
        return r;
    };
    if (!m.neighbor_rule_well_defined)
        return fail("neighbor-rule", {*m.ill_defined_at}, "neighbour set depends on the coset representative");
    for (std::size_t x = 0; x < m.vertex_count(); ++x)
        for (std::size_t y : m.neighbors[x])
            if (std::find(m.neighbors[y].begin(), m.neighbors[y].end(), x) == m.neighbors[y].end())
                return fail("asymmetric", {x, y}, "neighbour relation is not symmetric");
    for (std::size_t x = 0; x < m.vertex_count(); ++x) {
        std::set<std::size_t> nx(m.neighbors[x].begin(), m.neighbors[x].end());
        Vertex fx = m.f[x];
        if (nx.size() != ag.graph.degree(fx) || m.neighbors[x].size() != nx.size())
            return fail("degree", {x}, "degree " + std::to_string(nx.size()) + " at model vertex maps to degree " +
                                           std::to_string(ag.graph.degree(fx)));
        std::set<Vertex> image;
        for (std::size_t y : nx) image.insert(m.f[y]);
        std::set<Vertex> want(ag.graph.neighbors(fx).begin(), ag.graph.neighbors(fx).end());
        if (image != want) return fail("local", {x}, "f does not map neighbours onto neighbours");
    }
    std::map<Vertex, std::size_t> pre;
    for (std::size_t x = 0; x < m.vertex_count(); ++x) {
        auto [it, fresh] = pre.emplace(m.f[x], x);
        if (!fresh) return fail("non-injective", {it->second, x}, "two model vertices map to X-vertex " + std::to_string(m.f[x]));
    }
    if (pre.size() != ag.graph.vertex_count()) return fail("non-surjective", {}, "f misses some vertex of X");
    if (m.edges.size() != ag.graph.edge_count()) return fail("local", {}, "edge counts differ");
    std::vector<std::pair<Vertex, Vertex>> es;
    for (auto [a, b] : m.edges) es.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    Graph model(m.vertex_count(), es);
    if (!model.connected()) return fail("disconnected", {}, "model graph is not connected");
    return r;
}

} // namespace actpres
