#pragma once

#include <actpres/builtins.hpp>
#include <actpres/coxeter.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace actpres {

/// The truncated dodecahedron Y: one vertex per oriented edge (w -> u) of
/// the dodecahedron X (the corner near w on the edge wu). Pentagon-edges
/// join (w->u) and (u->w); triangle-edges join (w->u) and (w->u').
struct TruncatedDodecahedron {
    ActionedGraph X;                        // D acting on the dodecahedron
    Graph Y;
    std::vector<OrientedEdge> corner;       // Y-vertex -> oriented X-edge
    std::map<OrientedEdge, Vertex> corner_index;
    std::vector<std::vector<Vertex>> faces; // clockwise boundary cycles, no repeated endpoint
    std::vector<bool> triangle_face;
    std::vector<ElementId> h_at;            // counterclockwise rotation about each X-vertex

    bool pentagon_edge(Vertex a, Vertex b) const { return corner[a].reversed() == corner[b]; }

    // The unique element of D carrying corner a to corner b.
    ElementId t_element(Vertex a, Vertex b) const {
        for (ElementId g = 0; g < X.group.order(); ++g)
            if (X.act(g, corner[a]) == corner[b]) return g;
        throw InputError("no element of D maps one corner to the other");
    }
};

inline TruncatedDodecahedron truncated_dodecahedron() {
    TruncatedDodecahedron T;
    T.X = builtins::dodecahedron_group_action();
    const auto& X = T.X;
    const ElementId h = X.group.generators()[1];
    for (auto [u, w] : X.graph.edges()) {
        T.corner.push_back({u, w});
        T.corner.push_back({w, u});
    }
    std::sort(T.corner.begin(), T.corner.end());
    for (Vertex i = 0; i < T.corner.size(); ++i) T.corner_index[T.corner[i]] = i;

    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < T.corner.size(); ++i) {
        auto [w, u] = T.corner[i];
        Vertex rev = T.corner_index.at({u, w});
        if (i < rev) edges.push_back({i, rev});
        for (Vertex u2 : X.graph.neighbors(w)) {
            Vertex j = T.corner_index.at({w, u2});
            if (i < j) edges.push_back({i, j});
        }
    }
    T.Y = Graph(T.corner.size(), edges);

    // h_w = phi h phi^-1 with phi(v) = w
    T.h_at.resize(X.graph.vertex_count());
    for (Vertex w = 0; w < X.graph.vertex_count(); ++w)
        for (ElementId g = 0; g < X.group.order(); ++g)
            if (X.act(g, builtins::label::v) == w) {
                T.h_at[w] = X.group.mul(X.group.mul(g, h), X.group.inv(g));
                break;
            }

    // triangles: (w->u) -> (w->h_w^-1 u)
    for (Vertex w = 0; w < X.graph.vertex_count(); ++w) {
        ElementId hinv = X.group.inv(T.h_at[w]);
        Vertex u = X.graph.neighbors(w).front();
        std::vector<Vertex> f;
        for (int k = 0; k < 3; ++k) {
            f.push_back(T.corner_index.at({w, u}));
            u = X.act(hinv, u);
        }
        T.faces.push_back(f);
        T.triangle_face.push_back(true);
    }
    // decagons: (w->u) -> (u->w) -> (u->h_u w) -> ...
    std::set<std::pair<Vertex, Vertex>> used;
    for (Vertex i = 0; i < T.corner.size(); ++i) {
        if (used.count({i, T.corner_index.at(T.corner[i].reversed())})) continue;
        std::vector<Vertex> f;
        Vertex y = i;
        do {
            auto [w, u] = T.corner[y];
            Vertex y1 = T.corner_index.at({u, w});
            used.insert({y, y1});
            Vertex y2 = T.corner_index.at({u, X.act(T.h_at[u], w)});
            f.push_back(y);
            f.push_back(y1);
            y = y2;
        } while (y != i);
        T.faces.push_back(f);
        T.triangle_face.push_back(false);
    }
    return T;
}

/// The lift of the canonical D-scaffolding of Y to the universal group
/// <g, r | g^2 = r^-3 = (rg)^5>, with phi: g -> s1, r -> h.
class CoxeterLift {
public:
    explicit CoxeterLift(const TruncatedDodecahedron& T, std::size_t limit = 1000000)
        : T_(&T), G_(coxeter_universal_presentation(), limit) {
        const auto& D = T.X.group;
        std::vector<ElementId> img{D.generators()[0], D.generators()[1]};
        phi_.resize(G_.order());
        for (std::size_t c = 0; c < G_.order(); ++c) phi_[c] = evaluate_word(D, G_.word(c), img, FiniteGroupTable::identity());
        for (std::size_t c = 0; c < G_.order(); ++c)
            for (std::size_t i = 0; i < 2; ++i)
                if (phi_[G_.mul(c, G_.generator(i))] != D.mul(phi_[c], img[i]))
                    throw VerificationError("g -> s1, r -> h does not define a homomorphism");
        z_ = G_.mul(G_.generator(0), G_.generator(0));
    }

    const EnumeratedGroup& group() const { return G_; }
    std::size_t z() const { return z_; }
    ElementId phi(std::size_t gamma) const { return phi_.at(gamma); }

    // tau for the step a -> b of Y
    std::size_t tau(Vertex a, Vertex b) const {
        const auto& T = *T_;
        const auto& X = T.X;
        if (!T.Y.adjacent(a, b)) throw InputError("path_product: consecutive Y-vertices not adjacent");
        const OrientedEdge e1{builtins::label::v, builtins::label::w1};
        if (T.pentagon_edge(a, b)) {
            OrientedEdge d = T.corner[a];
            for (std::size_t c = 0; c < G_.order(); ++c) {
                OrientedEdge img = X.act(phi_[c], e1);
                if (img == d || img == d.reversed()) return conj(c, G_.generator(0));
            }
        } else {
            Vertex w = T.corner[a].origin;
            for (std::size_t c = 0; c < G_.order(); ++c)
                if (X.act(phi_[c], builtins::label::v) == w) {
                    std::size_t rw = conj(c, G_.generator(1));
                    ElementId t = T.t_element(a, b);
                    if (t == phi_[rw]) return rw;
                    if (t == X.group.inv(phi_[rw])) return G_.inv(rw);
                    throw VerificationError("triangle step is not a rotation about its vertex");
                }
        }
        throw VerificationError("no lift found for a step of Y");
    }

private:
    const TruncatedDodecahedron* T_;
    EnumeratedGroup G_;
    std::vector<ElementId> phi_;
    std::size_t z_ = 0;

    std::size_t conj(std::size_t c, std::size_t x) const { return G_.mul(G_.mul(c, x), G_.inv(c)); }
};

enum class PathMode { D, G };

/// Pi(p) = t_n ... t_1 (mode D, an element of D) or tau_n ... tau_1 (mode
/// G, a coset of the universal group).
inline std::size_t path_product(const std::vector<Vertex>& path, PathMode mode, const TruncatedDodecahedron& T,
                                const CoxeterLift& lift) {
    for (std::size_t i = 1; i < path.size(); ++i)
        if (!T.Y.adjacent(path[i - 1], path[i])) throw InputError("path_product: invalid path");
    std::size_t acc = 0;
    for (std::size_t i = 1; i < path.size(); ++i) {
        if (mode == PathMode::D)
            acc = T.X.group.mul(T.t_element(path[i - 1], path[i]), static_cast<ElementId>(acc));
        else
            acc = lift.group().mul(lift.tau(path[i - 1], path[i]), acc);
    }
    return acc;
}

inline std::vector<Vertex> closed(std::vector<Vertex> cycle) {
    if (!cycle.empty()) cycle.push_back(cycle.front());
    return cycle;
}

struct DiscOrdering {
    std::vector<std::size_t> order;
    std::vector<std::size_t> shared_edges; // |U_i meet F_{i+1}| in edges, per step after the first
};

namespace detail {

using DirEdge = std::pair<Vertex, Vertex>;

inline std::vector<DirEdge> face_edges(const std::vector<Vertex>& f) {
    std::vector<DirEdge> es;
    for (std::size_t i = 0; i < f.size(); ++i) es.push_back({f[i], f[(i + 1) % f.size()]});
    return es;
}

struct DiscState {
    std::set<DirEdge> edges;     // directed edges of faces in U
    std::set<Vertex> vertices;
    std::size_t boundary_size() const {
        std::size_t b = 0;
        for (auto [a, c] : edges)
            if (!edges.count({c, a})) ++b;
        return b;
    }
};

// Number of shared edges if F can be attached along one arc (or closes the
// sphere when `last`), otherwise nullopt.
inline std::optional<std::size_t> attach(const DiscState& U, const std::vector<Vertex>& F, bool last) {
    auto es = face_edges(F);
    const std::size_t n = es.size();
    std::vector<bool> shared(n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (U.edges.count(es[i])) return std::nullopt; // same orientation: not a surface
        shared[i] = U.edges.count({es[i].second, es[i].first}) > 0;
        k += shared[i];
    }
    if (k == 0) return std::nullopt;
    if (k == n) {
        if (!last || U.boundary_size() != n) return std::nullopt;
        return k;
    }
    if (last) return std::nullopt;
    // shared edges must form one cyclic run
    std::size_t starts = 0, start = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (shared[i] && !shared[(i + n - 1) % n]) {
            ++starts;
            start = i;
        }
    if (starts != 1) return std::nullopt;
    std::set<Vertex> run{es[start].first};
    for (std::size_t i = 0; i < k; ++i) run.insert(es[(start + i) % n].second);
    for (Vertex x : F)
        if (U.vertices.count(x) != run.count(x)) return std::nullopt;
    return k;
}

inline void add_face(DiscState& U, const std::vector<Vertex>& F) {
    for (auto e : face_edges(F)) U.edges.insert(e);
    for (Vertex x : F) U.vertices.insert(x);
}

} // namespace detail

/// Orders the faces so that every partial union U_i is a disc and
/// U_i meets F_{i+1} in one arc of edges, the last face meeting U_31 in
/// its whole boundary. Depth-first search with backtracking.
inline std::optional<DiscOrdering> greedy_disc_ordering(const std::vector<std::vector<Vertex>>& faces,
                                                        std::size_t budget = 1000000) {
    if (faces.empty()) return std::nullopt;
    DiscOrdering best;
    std::vector<bool> used(faces.size(), false);
    std::size_t nodes = 0;
    std::vector<std::size_t> order{0}, shared;
    used[0] = true;
    detail::DiscState U0;
    detail::add_face(U0, faces[0]);
    std::function<bool(const detail::DiscState&)> dfs = [&](const detail::DiscState& U) -> bool {
        if (order.size() == faces.size()) return true;
        if (++nodes > budget) return false;
        bool last = order.size() + 1 == faces.size();
        for (std::size_t i = 0; i < faces.size(); ++i) {
            if (used[i]) continue;
            auto k = detail::attach(U, faces[i], last);
            if (!k) continue;
            detail::DiscState next = U;
            detail::add_face(next, faces[i]);
            used[i] = true;
            order.push_back(i);
            shared.push_back(*k);
            if (dfs(next)) return true;
            used[i] = false;
            order.pop_back();
            shared.pop_back();
        }
        return false;
    };
    if (!dfs(U0)) return std::nullopt;
    best.order = order;
    best.shared_edges = shared;
    return best;
}

/// Re-checks an ordering's arc conditions from scratch.
inline bool verify_disc_ordering(const std::vector<std::vector<Vertex>>& faces, const DiscOrdering& d) {
    if (d.order.size() != faces.size()) return false;
    std::set<std::size_t> seen(d.order.begin(), d.order.end());
    if (seen.size() != faces.size()) return false;
    detail::DiscState U;
    detail::add_face(U, faces[d.order[0]]);
    for (std::size_t i = 1; i < d.order.size(); ++i) {
        auto k = detail::attach(U, faces[d.order[i]], i + 1 == d.order.size());
        if (!k || *k != d.shared_edges.at(i - 1)) return false;
        detail::add_face(U, faces[d.order[i]]);
    }
    return U.boundary_size() == 0;
}

struct FaceReport {
    bool ok = false;
    std::size_t vertices = 0, edges = 0, faces = 0, pentagon_edges = 0, triangle_edges = 0;
    long euler = 0;
    std::size_t faces_with_z = 0;
    std::vector<std::size_t> failing_faces;
    bool disc_ordering_found = false;
    bool disc_ordering_verified = false;
    bool induction_holds = false;     // Pi(F_1)...Pi(F_i) = z^{k_i} Pi(boundary of U_i) for all i
    bool z_squared_trivial = false;   // z^32 = z^30 read in the enumerated group
    std::vector<std::size_t> order;
};

namespace detail {
// Boundary loop of a disc given its directed edge set, as a closed path.
inline std::vector<Vertex> boundary_loop(const DiscState& U) {
    std::map<Vertex, Vertex> next;
    for (auto [a, c] : U.edges)
        if (!U.edges.count({c, a})) next[a] = c;
    if (next.empty()) return {};
    std::vector<Vertex> loop{next.begin()->first};
    do loop.push_back(next.at(loop.back()));
    while (loop.back() != loop.front() && loop.size() <= next.size() + 1);
    return loop;
}
} // namespace detail

inline FaceReport face_boundary_check(const TruncatedDodecahedron& T, const CoxeterLift& lift) {
    FaceReport r;
    const auto& G = lift.group();
    r.vertices = T.Y.vertex_count();
    r.edges = T.Y.edge_count();
    r.faces = T.faces.size();
    for (auto [a, b] : T.Y.edges()) (T.pentagon_edge(a, b) ? r.pentagon_edges : r.triangle_edges)++;
    r.euler = static_cast<long>(r.vertices) - static_cast<long>(r.edges) + static_cast<long>(r.faces);
    std::vector<std::size_t> face_value;
    for (std::size_t i = 0; i < T.faces.size(); ++i) {
        std::size_t p = path_product(closed(T.faces[i]), PathMode::G, T, lift);
        face_value.push_back(p);
        if (p == lift.z())
            ++r.faces_with_z;
        else
            r.failing_faces.push_back(i);
    }
    auto ordering = greedy_disc_ordering(T.faces);
    r.disc_ordering_found = ordering.has_value();
    if (ordering) {
        r.order = ordering->order;
        r.disc_ordering_verified = verify_disc_ordering(T.faces, *ordering);
        r.induction_holds = true;
        detail::DiscState U;
        std::size_t lhs = 0;
        for (std::size_t i = 0; i < ordering->order.size(); ++i) {
            std::size_t f = ordering->order[i];
            detail::add_face(U, T.faces[f]);
            lhs = G.mul(lhs, face_value[f]);
            std::size_t interior_pentagons = 0;
            for (auto [a, c] : U.edges)
                if (a < c && U.edges.count({c, a}) && T.pentagon_edge(a, c)) ++interior_pentagons;
            auto bl = detail::boundary_loop(U);
            std::size_t rhs = G.mul(G.power(lift.z(), static_cast<long>(interior_pentagons)),
                                    bl.empty() ? 0 : path_product(bl, PathMode::G, T, lift));
            if (lhs != rhs) r.induction_holds = false;
        }
        // all faces: z^32 on the left, z^30 * Pi(empty loop) on the right
        r.z_squared_trivial = G.power(lift.z(), static_cast<long>(r.faces)) ==
                                  G.power(lift.z(), static_cast<long>(r.pentagon_edges)) &&
                              G.power(lift.z(), 2) == 0;
    }
    r.ok = r.vertices == 60 && r.edges == 90 && r.faces == 32 && r.pentagon_edges == 30 && r.triangle_edges == 60 &&
           r.euler == 2 && r.failing_faces.empty() && r.disc_ordering_found && r.disc_ordering_verified &&
           r.induction_holds && r.z_squared_trivial;
    return r;
}

/// D acting freely on Y, for the derivation pipeline: base corner (v->w1),
/// one triangle and one decagon as loops.
inline DerivationInput truncated_dodecahedron_action() {
    auto T = truncated_dodecahedron();
    const auto& X = T.X;
    std::vector<Perm> gens;
    for (ElementId g : X.group.generators()) {
        std::vector<Point> img;
        for (const auto& c : T.corner) img.push_back(T.corner_index.at(X.act(g, c)));
        gens.push_back(Perm::from_images(img));
    }
    DerivationInput in;
    in.name = "truncated-dodecahedron";
    in.ag = make_actioned_graph(T.Y, gens, {}, X.generator_labels);
    Vertex base = T.corner_index.at({builtins::label::v, builtins::label::w1});
    in.sc = build_regular_scaffolding(in.ag, std::vector<Vertex>{base});
    for (std::size_t i = 0; i < T.faces.size(); ++i) {
        const auto& f = T.faces[i];
        auto it = std::find(f.begin(), f.end(), base);
        if (it == f.end()) continue;
        std::vector<Vertex> loop(it, f.end());
        loop.insert(loop.end(), f.begin(), it);
        in.loops.push_back(closed(loop));
    }
    in.stabilizers = {StabilizerPresentation{base, Presentation{}, {}}};
    return complete_input(std::move(in), false);
}

} // namespace actpres
