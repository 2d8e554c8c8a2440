#pragma once

#include <actpres/scaffolding.hpp>

#include <string>
#include <vector>

namespace actpres {

/// A letter of the free product F * H: either an edge generator g_e or an
/// element of the stabilizer G_owner (H is the free product of the G_v).
struct Letter {
    enum class Kind { Edge, Stab };
    Kind kind = Kind::Edge;
    OrientedEdge edge{};     // Edge
    Vertex owner = 0;        // Stab
    ElementId element = 0;   // Stab
    int sign = 1;

    static Letter gen(OrientedEdge e, int sign = 1) { return {Kind::Edge, e, 0, 0, sign}; }
    static Letter stab(Vertex owner, ElementId x, int sign = 1) { return {Kind::Stab, {}, owner, x, sign}; }

    Letter inverse() const {
        Letter l = *this;
        l.sign = -sign;
        return l;
    }
    friend bool operator==(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

inline Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back(it->inverse());
    return r;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Free reduction in F * H: cancels g g^-1, multiplies adjacent letters of
/// one stabilizer and drops identity stabilizer letters.
inline Word free_reduce(const Word& w, const FiniteGroupTable& G) {
    Word out;
    auto value = [&](const Letter& l) { return l.sign > 0 ? l.element : G.inv(l.element); };
    for (Letter l : w) {
        if (l.kind == Letter::Kind::Stab) {
            l.element = value(l);
            l.sign = 1;
            if (!out.empty() && out.back().kind == Letter::Kind::Stab && out.back().owner == l.owner) {
                l.element = G.mul(out.back().element, l.element);
                out.pop_back();
            }
            if (l.element != FiniteGroupTable::identity()) out.push_back(l);
            continue;
        }
        if (!out.empty() && out.back().kind == Letter::Kind::Edge && out.back().edge == l.edge &&
            out.back().sign == -l.sign) {
            out.pop_back();
            continue;
        }
        out.push_back(l);
    }
    return out;
}

/// ASCII form: g[o,t], G[v:i], ^-1 for inverses, juxtaposition; "1" if empty.
inline std::string format_relation_word(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        if (l.kind == Letter::Kind::Edge)
            s += "g[" + l.edge.str() + "]";
        else
            s += "G[" + std::to_string(l.owner) + ":" + std::to_string(l.element) + "]";
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

/// Image under psi: g_e -> s_e, stabilizer letters -> themselves.
inline ElementId evaluate_word_in_G(const Word& w, const ActionedGraph& ag, const Scaffolding& sc) {
    const auto& G = ag.group;
    ElementId r = FiniteGroupTable::identity();
    for (const auto& l : w) {
        ElementId x;
        if (l.kind == Letter::Kind::Edge) {
            if (!sc.in_E(l.edge)) throw InputError("word references edge (" + l.edge.str() + ") outside E");
            x = sc.s_of(l.edge);
        } else {
            if (l.element >= G.order()) throw InputError("word references unknown group element");
            if (ag.act(l.element, l.owner) != l.owner)
                throw InputError("stabilizer letter G[" + std::to_string(l.owner) + ":" + std::to_string(l.element) +
                                 "] does not fix its owner");
            x = l.element;
        }
        r = G.mul(r, l.sign > 0 ? x : G.inv(x));
    }
    return r;
}

struct EdgeRelation {
    Word relator;
    ElementId k = 0;
};

/// E(e,t) = (g_d^-1 t g_e)^-1 k(e,t), d = t(e), k(e,t) = s_d^-1 t s_e in G_v(e).
inline EdgeRelation edge_relation(OrientedEdge e, ElementId t, const ActionedGraph& ag, const Scaffolding& sc) {
    if (!sc.in_E(e)) throw InputError("edge_relation: (" + e.str() + ") not in E");
    if (ag.act(t, e.origin) != e.origin) throw InputError("edge_relation: t does not fix o(e)");
    OrientedEdge d = ag.act(t, e);
    EdgeRelation r;
    r.k = k_element(ag, sc, e, t);
    Word lhs{Letter::gen(d, -1), Letter::stab(e.origin, t), Letter::gen(e)};
    r.relator = concat(word_inverse(lhs), Word{Letter::stab(sc.v_of(e), r.k)});
    return r;
}

struct Trace {
    std::vector<OrientedEdge> edges; // e_i in E
    std::vector<ElementId> s;        // s_{e_i}
    ElementId product = 0;           // s_1 ... s_n
};

/// The unique e_1..e_n in E with (s_1...s_{i-1})(e_i) the i-th step of the
/// path; s_1...s_i maps v(e_i) to the i-th vertex after the start.
inline Trace trace_path(const std::vector<Vertex>& path, const ActionedGraph& ag, const Scaffolding& sc) {
    if (path.empty()) throw InputError("trace_path: empty path");
    if (!sc.in_V(path[0])) throw InputError("trace_path: path must start at a vertex of V");
    const auto& G = ag.group;
    Trace tr;
    ElementId prefix = FiniteGroupTable::identity();
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (!ag.graph.adjacent(path[i - 1], path[i]))
            throw InputError("trace_path: " + std::to_string(path[i - 1]) + " and " + std::to_string(path[i]) +
                             " are not adjacent");
        ElementId pinv = G.inv(prefix);
        OrientedEdge e = ag.act(pinv, OrientedEdge{path[i - 1], path[i]});
        if (!sc.in_E(e)) throw InputError("trace_path: traced edge leaves V (scaffolding inconsistent)");
        ElementId s = sc.s_of(e);
        prefix = G.mul(prefix, s);
        if (ag.act(prefix, sc.v_of(e)) != path[i]) throw InputError("trace_path: s-sequence property violated");
        tr.edges.push_back(e);
        tr.s.push_back(s);
    }
    tr.product = prefix;
    return tr;
}

/// L(l) = (g_1...g_n)^-1 (s_1...s_n). The path must end in V (a loop, or a
/// pseudo-loop in the multi-orbit case).
inline Word loop_relation(const std::vector<Vertex>& loop, const ActionedGraph& ag, const Scaffolding& sc) {
    auto tr = trace_path(loop, ag, sc);
    if (sc.transitive() && loop.back() != loop.front()) throw InputError("loop_relation: path is not closed");
    if (!sc.in_V(loop.back())) throw InputError("loop_relation: path does not end in V");
    Word g;
    for (auto& e : tr.edges) g.push_back(Letter::gen(e));
    Vertex end = tr.edges.empty() ? loop.front() : sc.v_of(tr.edges.back());
    return concat(word_inverse(g), Word{Letter::stab(end, tr.product)});
}

/// g_e g_a = s_e s_a with a = s_e^-1(reverse e); for an inversion s_e this
/// is g_e^2 = s_e^2.
inline Word edge_loop_relation(OrientedEdge e, const ActionedGraph& ag, const Scaffolding& sc) {
    if (!sc.in_E(e)) throw InputError("edge_loop_relation: (" + e.str() + ") not in E");
    ElementId se = sc.s_of(e);
    if (ag.act(se, e.origin) != e.target || ag.act(se, e.target) != e.origin)
        throw InputError("edge_loop_relation: s_e is not an inversion of (" + e.str() + ")");
    Word g{Letter::gen(e), Letter::gen(e)};
    return concat(word_inverse(g), Word{Letter::stab(e.origin, ag.group.mul(se, se))});
}

/// T(e): g_e = s_e = 1 for an oriented edge of A.
inline Word tautological_relation(OrientedEdge e, const Scaffolding& sc) {
    if (!sc.in_A(e)) throw InputError("tautological_relation: (" + e.str() + ") is not an edge of A");
    return Word{Letter::gen(e)};
}

/// Expresses g_d (d in E) over E1 generators and stabilizer letters:
///   g_d = u g_e k(e,u)^-1 for d = u(e), e in E0, u in T_e;
///   g_a = g_b^-1 s_b s_a for a in E0 \ E1 paired with b in E1.
inline Word edge_generator_definition(OrientedEdge d, const ActionedGraph& ag, const Scaffolding& sc) {
    const auto& G = ag.group;
    auto it = sc.decomposition.find(d);
    if (it == sc.decomposition.end()) throw InputError("edge (" + d.str() + ") not covered by the scaffolding");
    auto [e, u] = it->second;
    Word core;
    if (sc.in_E1(e)) {
        core = {Letter::gen(e)};
    } else {
        std::optional<OrientedEdge> b;
        for (const auto& c : sc.E1) {
            OrientedEdge a = ag.act(G.inv(sc.s_of(c)), c.reversed());
            if (a == e) b = c;
        }
        if (!b) throw InputError("edge (" + e.str() + ") in E0 has no partner in E1");
        core = {Letter::gen(*b, -1), Letter::stab(b->origin, G.mul(sc.s_of(*b), sc.s_of(e)))};
    }
    if (u == FiniteGroupTable::identity()) return core;
    ElementId k = k_element(ag, sc, e, u);
    Word w{Letter::stab(e.origin, u)};
    w = concat(w, core);
    if (k != FiniteGroupTable::identity()) w.push_back(Letter::stab(sc.v_of(e), k, -1));
    return w;
}

/// Replaces every edge letter outside E1 by its definition.
inline Word rewrite_word_to_E1(const Word& w, const ActionedGraph& ag, const Scaffolding& sc) {
    Word out;
    for (const auto& l : w) {
        if (l.kind == Letter::Kind::Stab || sc.in_E1(l.edge)) {
            out.push_back(l);
            continue;
        }
        Word def = edge_generator_definition(l.edge, ag, sc);
        if (l.sign < 0) def = word_inverse(def);
        out = concat(out, def);
    }
    return out;
}

} // namespace actpres
