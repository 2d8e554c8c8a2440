#pragma once

#include <actpres/graph.hpp>

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace actpres {

/// Choices needed to turn an action into a presentation.
///
/// V holds one vertex per orbit (V[0] is the base vertex), tree_A is a tree
/// on V (both orientations of each edge; empty when transitive). E lists all
/// oriented edges leaving V; E0 one per G_v-orbit, E1 one per pair of
/// partner orbits. s maps each e in E to an element with s_e(v(e)) = t(e),
/// where v(e) is the representative of the orbit of t(e).
struct Scaffolding {
    std::vector<Vertex> V;
    std::vector<OrientedEdge> tree_A;
    std::vector<OrientedEdge> E;
    std::vector<OrientedEdge> E0;
    std::vector<OrientedEdge> E1;
    std::map<OrientedEdge, std::vector<ElementId>> transversals;
    std::map<OrientedEdge, ElementId> s;

    // Derived lookups, filled by finalize().
    std::vector<Vertex> orbit_rep;                                       // vertex -> its member of V
    std::map<OrientedEdge, std::pair<OrientedEdge, ElementId>> decomposition; // d -> (e in E0, u) with d = u(e)

    bool transitive() const { return V.size() == 1; }
    Vertex base() const { return V.at(0); }
    Vertex v_of(OrientedEdge e) const { return orbit_rep.at(e.target); }

    bool in_V(Vertex x) const { return std::find(V.begin(), V.end(), x) != V.end(); }
    bool in_A(OrientedEdge e) const { return std::find(tree_A.begin(), tree_A.end(), e) != tree_A.end(); }
    bool in_E(OrientedEdge e) const { return std::binary_search(E.begin(), E.end(), e); }
    bool in_E0(OrientedEdge e) const { return std::binary_search(E0.begin(), E0.end(), e); }
    bool in_E1(OrientedEdge e) const { return std::binary_search(E1.begin(), E1.end(), e); }

    ElementId s_of(OrientedEdge e) const {
        auto it = s.find(e);
        if (it == s.end()) throw InputError("no s-element for edge (" + e.str() + ")");
        return it->second;
    }

    // Recomputes E and the decomposition from V, E0 and transversals.
    void finalize(const ActionedGraph& ag) {
        orbit_rep.assign(ag.graph.vertex_count(), 0);
        std::vector<bool> hit(ag.graph.vertex_count(), false);
        for (Vertex v : V)
            for (ElementId g = 0; g < ag.group.order(); ++g) {
                Vertex x = ag.act(g, v);
                if (hit[x] && orbit_rep[x] != v) throw InputError("two representatives in one vertex orbit");
                hit[x] = true;
                orbit_rep[x] = v;
            }
        for (Vertex x = 0; x < hit.size(); ++x)
            if (!hit[x]) throw InputError("vertex orbit of " + std::to_string(x) + " has no representative");
        E.clear();
        for (Vertex v : V)
            for (Vertex w : ag.graph.neighbors(v)) E.push_back({v, w});
        std::sort(E.begin(), E.end());
        decomposition.clear();
        for (auto& [e, T] : transversals)
            for (ElementId u : T) decomposition.emplace(ag.act(u, e), std::pair{e, u});
    }
};

struct SpanningTree {
    std::vector<Vertex> V;
    std::vector<OrientedEdge> tree_A;
};

namespace detail {
inline std::vector<int> orbit_index(const ActionedGraph& ag) {
    auto orbits = vertex_orbits(ag);
    std::vector<int> idx(ag.graph.vertex_count(), -1);
    for (std::size_t i = 0; i < orbits.size(); ++i)
        for (Vertex x : orbits[i]) idx[x] = static_cast<int>(i);
    return idx;
}
} // namespace detail

/// Subtree of X meeting every vertex orbit exactly once, grown greedily from
/// vertex `root` by always adding the least edge (u, w) with u in the tree
/// and the orbit of w not yet represented.
inline SpanningTree build_spanning_tree_A(const ActionedGraph& ag, Vertex root = 0) {
    if (!ag.graph.connected()) throw InputError("build_spanning_tree_A: graph is not connected");
    auto orb = detail::orbit_index(ag);
    int orbit_count = *std::max_element(orb.begin(), orb.end()) + 1;
    SpanningTree t;
    std::vector<bool> represented(orbit_count, false);
    t.V.push_back(root);
    represented[orb[root]] = true;
    while (static_cast<int>(t.V.size()) < orbit_count) {
        std::optional<OrientedEdge> best;
        for (Vertex u : t.V)
            for (Vertex w : ag.graph.neighbors(u))
                if (!represented[orb[w]] && (!best || OrientedEdge{u, w} < *best)) best = OrientedEdge{u, w};
        if (!best) throw InputError("build_spanning_tree_A: cannot reach every orbit");
        t.V.push_back(best->target);
        represented[orb[best->target]] = true;
        t.tree_A.push_back(*best);
        t.tree_A.push_back(best->reversed());
    }
    std::sort(t.tree_A.begin(), t.tree_A.end());
    return t;
}

/// Uses caller-chosen orbit representatives (one per orbit, inducing a
/// connected subgraph). A grows from reps[0] by the same least-edge rule as
/// build_spanning_tree_A, restricted to the given vertices.
inline SpanningTree spanning_tree_from_reps(const ActionedGraph& ag, const std::vector<Vertex>& reps) {
    auto orb = detail::orbit_index(ag);
    int orbit_count = *std::max_element(orb.begin(), orb.end()) + 1;
    if (static_cast<int>(reps.size()) != orbit_count)
        throw InputError("orbit_reps must list exactly one vertex per orbit");
    std::set<int> seen;
    for (Vertex r : reps) {
        if (r >= ag.graph.vertex_count()) throw InputError("orbit_reps: vertex out of range");
        if (!seen.insert(orb[r]).second) throw InputError("orbit_reps: two vertices from one orbit");
    }
    SpanningTree t;
    std::set<Vertex> in_tree{reps[0]}, pending(reps.begin() + 1, reps.end());
    while (!pending.empty()) {
        std::optional<OrientedEdge> best;
        for (Vertex u : in_tree)
            for (Vertex w : ag.graph.neighbors(u))
                if (pending.count(w) && (!best || OrientedEdge{u, w} < *best)) best = OrientedEdge{u, w};
        if (!best) throw InputError("orbit_reps do not span a connected subgraph");
        pending.erase(best->target);
        in_tree.insert(best->target);
        t.tree_A.push_back(*best);
        t.tree_A.push_back(best->reversed());
    }
    t.V = reps;
    std::sort(t.tree_A.begin(), t.tree_A.end());
    return t;
}

namespace detail {
// Orbit of an oriented edge leaving v under G_v, sorted.
inline std::vector<OrientedEdge> local_edge_orbit(const ActionedGraph& ag, const ElementSet& Gv, OrientedEdge e) {
    std::set<OrientedEdge> o;
    for (ElementId g : Gv) o.insert(ag.act(g, e));
    return {o.begin(), o.end()};
}
} // namespace detail

/// Regular scaffolding, following the existence proof: inversion orbits get
/// an inversion, other orbits are paired with their partner orbit (the
/// first of the pair is primary and keeps a free choice, the partner gets
/// the inverse), and s is spread over each orbit through the transversal.
inline Scaffolding build_regular_scaffolding(const ActionedGraph& ag, std::optional<std::vector<Vertex>> orbit_reps = {}) {
    auto rep = validate_action(ag);
    if (!rep.ok) throw InputError("invalid action: " + rep.message);

    Scaffolding sc;
    auto orbits = vertex_orbits(ag);
    if (orbit_reps) {
        auto t = spanning_tree_from_reps(ag, *orbit_reps);
        sc.V = t.V;
        sc.tree_A = t.tree_A;
    } else if (orbits.size() == 1) {
        sc.V = {0};
    } else {
        auto t = build_spanning_tree_A(ag);
        sc.V = t.V;
        sc.tree_A = t.tree_A;
    }
    sc.finalize(ag);

    std::map<Vertex, ElementSet> stab;
    for (Vertex v : sc.V) stab[v] = stabilizer(ag, v);

    // G_v-orbits on E, keyed by their least edge.
    std::map<OrientedEdge, std::vector<OrientedEdge>> orbit_of_least;
    std::map<OrientedEdge, OrientedEdge> least_of;
    for (const auto& e : sc.E) {
        if (least_of.count(e)) continue;
        auto o = detail::local_edge_orbit(ag, stab[e.origin], e);
        for (auto& x : o) least_of[x] = o.front();
        orbit_of_least[o.front()] = o;
    }

    std::map<OrientedEdge, OrientedEdge> chosen_rep; // orbit key -> representative
    std::map<OrientedEdge, OrientedEdge> iota;
    std::vector<OrientedEdge> primaries;
    for (auto& [key, members] : orbit_of_least) {
        if (chosen_rep.count(key)) continue;
        OrientedEdge e = key;
        for (auto& m : members)
            if (sc.in_A(m)) e = m;
        chosen_rep[key] = e;
        primaries.push_back(e);
        const Vertex w = sc.v_of(e);
        if (sc.in_A(e)) {
            sc.s[e] = FiniteGroupTable::identity();
        } else if (auto inv = find_inversion(ag, e)) {
            sc.s[e] = *inv;
            iota[e] = e;
            continue;
        } else {
            std::optional<ElementId> s;
            for (ElementId g = 0; g < ag.group.order() && !s; ++g)
                if (ag.act(g, w) == e.target) s = g;
            sc.s[e] = *s;
        }
        // partner a = s_e^-1(reverse of e), an edge leaving v(e)
        ElementId sinv = ag.group.inv(sc.s[e]);
        OrientedEdge a = ag.act(sinv, e.reversed());
        OrientedEdge akey = least_of.at(a);
        if (akey == key || chosen_rep.count(akey))
            throw InputError("edge orbit pairing is inconsistent at (" + e.str() + ")");
        chosen_rep[akey] = a;
        sc.s[a] = sinv;
        iota[e] = a;
        iota[a] = e;
    }

    for (auto& [key, r] : chosen_rep) sc.E0.push_back(r);
    std::sort(sc.E0.begin(), sc.E0.end());
    sc.E1 = primaries;
    std::sort(sc.E1.begin(), sc.E1.end());

    for (const auto& e : sc.E0) {
        auto Ge = edge_stabilizer(ag, e);
        sc.transversals[e] = left_cosets(ag.group, Ge, stab[e.origin]);
    }
    // spread s over every orbit
    for (const auto& e : sc.E0) {
        ElementId se = sc.s.at(e);
        bool conj = sc.v_of(e) == e.origin;
        for (ElementId u : sc.transversals[e]) {
            if (u == FiniteGroupTable::identity()) continue;
            OrientedEdge d = ag.act(u, e);
            ElementId sd = ag.group.mul(u, se);
            if (conj) sd = ag.group.mul(sd, ag.group.inv(u));
            sc.s[d] = sd;
        }
    }
    sc.finalize(ag);
    return sc;
}

/// k(e,t) = s_d^-1 t s_e with d = t(e); it fixes v(e).
inline ElementId k_element(const ActionedGraph& ag, const Scaffolding& sc, OrientedEdge e, ElementId t) {
    OrientedEdge d = ag.act(t, e);
    const auto& G = ag.group;
    return G.mul(G.mul(G.inv(sc.s_of(d)), t), sc.s_of(e));
}

/// The involution on E0: e maps to itself when it admits an inversion,
/// otherwise to the representative of the orbit of s_e^-1(reverse of e).
inline std::map<OrientedEdge, OrientedEdge> edge_orbit_involution(const ActionedGraph& ag, const Scaffolding& sc) {
    std::map<OrientedEdge, OrientedEdge> iota;
    for (const auto& e : sc.E0) {
        ElementId se = sc.s_of(e);
        if (ag.act(se, sc.v_of(e)) != e.target)
            throw InputError("inconsistent s-map at (" + e.str() + "): s_e(v(e)) != t(e)");
        if (find_inversion(ag, e)) {
            iota[e] = e;
            continue;
        }
        OrientedEdge a = ag.act(ag.group.inv(se), e.reversed());
        if (!sc.in_E(a)) throw InputError("inconsistent s-map at (" + e.str() + "): partner edge leaves V");
        auto Gw = stabilizer(ag, a.origin);
        std::optional<OrientedEdge> rep;
        for (ElementId g : Gw) {
            OrientedEdge b = ag.act(g, a);
            if (sc.in_E0(b)) rep = b;
        }
        if (!rep) throw InputError("inconsistent s-map at (" + e.str() + "): partner orbit has no representative");
        iota[e] = *rep;
    }
    return iota;
}

struct RegularityReport {
    bool ok = true;
    std::string condition; // "s-map", "E0", "transversal", "i", "ii", "iii", "iv"
    std::optional<OrientedEdge> edge;
    std::optional<ElementId> element;
    std::string message;
};

/// Exhaustive check of the scaffolding conditions. For (iii) the expected
/// value is u s_e u^-1 when v(e) = o(e) and u s_e otherwise (u need not fix
/// v(e) in the second case, so conjugation would not be a valid choice).
inline RegularityReport validate_regularity(const Scaffolding& sc, const ActionedGraph& ag) {
    const auto& G = ag.group;
    auto fail = [](std::string cond, std::optional<OrientedEdge> e, std::optional<ElementId> u, std::string msg) {
        RegularityReport r;
        r.ok = false;
        r.condition = std::move(cond);
        r.edge = e;
        r.element = u;
        r.message = std::move(msg);
        return r;
    };
    for (const auto& e : sc.E) {
        auto it = sc.s.find(e);
        if (it == sc.s.end()) return fail("s-map", e, std::nullopt, "missing s_e");
        if (ag.act(it->second, sc.v_of(e)) != e.target) return fail("s-map", e, it->second, "s_e(v(e)) != t(e)");
    }
    std::map<Vertex, ElementSet> stab;
    for (Vertex v : sc.V) stab[v] = stabilizer(ag, v);
    {
        std::set<OrientedEdge> covered;
        for (const auto& e : sc.E0) {
            if (!sc.in_E(e)) return fail("E0", e, std::nullopt, "representative does not leave V");
            for (ElementId g : stab[e.origin]) {
                OrientedEdge d = ag.act(g, e);
                if (d != e && sc.in_E0(d)) return fail("E0", e, g, "two representatives in one orbit");
                covered.insert(d);
            }
        }
        if (covered.size() != sc.E.size()) return fail("E0", std::nullopt, std::nullopt, "some edge orbit unrepresented");
    }
    for (const auto& e : sc.E0) {
        auto it = sc.transversals.find(e);
        if (it == sc.transversals.end()) return fail("transversal", e, std::nullopt, "missing transversal");
        const auto& T = it->second;
        if (std::find(T.begin(), T.end(), FiniteGroupTable::identity()) == T.end())
            return fail("transversal", e, std::nullopt, "identity missing");
        std::set<OrientedEdge> images;
        auto Ge = edge_stabilizer(ag, e);
        for (ElementId u : T) {
            if (!std::binary_search(stab[e.origin].begin(), stab[e.origin].end(), u))
                return fail("transversal", e, u, "element not in G_v");
            images.insert(ag.act(u, e));
        }
        if (images.size() != T.size() || T.size() * Ge.size() != stab[e.origin].size())
            return fail("transversal", e, std::nullopt, "not a set of coset representatives of G_v/G_e");
    }
    for (const auto& e : sc.E0) {
        ElementId se = sc.s_of(e);
        bool invertible = find_inversion(ag, e).has_value();
        if (invertible) {
            if (ag.act(se, e.origin) != e.target || ag.act(se, e.target) != e.origin)
                return fail("i", e, se, "edge admits an inversion but s_e is not one");
        } else {
            OrientedEdge a = ag.act(G.inv(se), e.reversed());
            if (!sc.in_E0(a)) return fail("ii", e, std::nullopt, "partner s_e^-1(reverse e) = (" + a.str() + ") not in E0");
            if (sc.s_of(a) != G.inv(se)) return fail("ii", e, sc.s_of(a), "s_a != s_e^-1 for a = (" + a.str() + ")");
        }
    }
    for (const auto& e : sc.E0) {
        ElementId se = sc.s_of(e);
        bool conj = sc.v_of(e) == e.origin;
        for (ElementId u : sc.transversals.at(e)) {
            OrientedEdge d = ag.act(u, e);
            ElementId want = G.mul(u, se);
            if (conj) want = G.mul(want, G.inv(u));
            if (sc.s_of(d) != want) return fail("iii", e, u, "s_d != expected value for d = (" + d.str() + ")");
        }
    }
    if (!sc.transitive() || !sc.tree_A.empty()) {
        for (const auto& e : sc.tree_A) {
            if (!sc.in_V(e.origin) || !sc.in_V(e.target)) return fail("iv", e, std::nullopt, "A-edge leaves V");
            if (!sc.in_E0(e)) return fail("iv", e, std::nullopt, "A-edge not in E0");
            if (sc.s_of(e) != FiniteGroupTable::identity()) return fail("iv", e, sc.s_of(e), "s_e != 1 on A");
        }
        if (sc.tree_A.size() != 2 * (sc.V.size() - 1)) return fail("iv", std::nullopt, std::nullopt, "A is not a tree on V");
    }
    return {};
}

} // namespace actpres
