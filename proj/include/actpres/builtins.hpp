#pragma once

#include <actpres/derive.hpp>
#include <actpres/golden.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace actpres::builtins {

// Figure labels of the dodecahedron; the other ten vertices are 10..19.
namespace label {
inline constexpr Vertex v = 0, w1 = 1, w2 = 2, w3 = 3, a = 4, b = 5, c = 6, d = 7, e = 8, f = 9;
}

/// Vertices of the dodecahedron (+-1,+-1,+-1), (0,+-1/phi,+-phi),
/// (+-1/phi,+-phi,0), (+-phi,0,+-1/phi), listed in label order.
inline std::vector<GoldenVec3> dodecahedron_coordinates() {
    // 1 = 1, 2 = phi, 3 = 1/phi, negatives likewise
    static const int code[20][3] = {{1, 1, 1},   {0, 3, 2},   {3, 2, 0},   {2, 0, 3},    {-1, 1, 1},
                                    {-3, 2, 0},  {0, -3, 2},  {1, -1, 1},  {1, 1, -1},   {2, 0, -3},
                                    {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}, {-1, -1, -1}, {0, 3, -2},
                                    {3, -2, 0},  {-2, 0, 3},  {0, -3, -2}, {-3, -2, 0},  {-2, 0, -3}};
    auto val = [](int c) {
        GoldenNum x = std::abs(c) == 0 ? GoldenNum(0)
                      : std::abs(c) == 1 ? GoldenNum(1)
                      : std::abs(c) == 2 ? GoldenNum::phi()
                                         : GoldenNum::phi_inv();
        return c < 0 ? -x : x;
    };
    std::vector<GoldenVec3> pts;
    for (auto& p : code) pts.push_back({val(p[0]), val(p[1]), val(p[2])});
    return pts;
}

inline Graph dodecahedron_graph() {
    auto pts = dodecahedron_coordinates();
    auto dist2 = [&](std::size_t i, std::size_t j) {
        GoldenVec3 d{pts[i][0] - pts[j][0], pts[i][1] - pts[j][1], pts[i][2] - pts[j][2]};
        return dot(d, d);
    };
    std::optional<GoldenNum> best;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (!best || dist2(i, j) < *best) best = dist2(i, j);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (dist2(i, j) == *best) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
    return Graph(pts.size(), edges);
}

inline GoldenVec3 vsum(const GoldenVec3& a, const GoldenVec3& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2]}; }

/// Counterclockwise rotation by 2pi/3 about v (seen from outside).
inline GoldenQuat quat_h() { return rotation_quat(dodecahedron_coordinates()[label::v], GoldenNum(Rational(1, 2)), +1); }

/// Clockwise rotation by pi about the midpoint of the edge v w1.
inline GoldenQuat quat_s1() {
    auto p = dodecahedron_coordinates();
    return rotation_quat(vsum(p[label::v], p[label::w1]), GoldenNum(0), -1);
}

/// Clockwise rotation by 2pi/5 about the centre of the face v w1 a b w2.
inline GoldenQuat quat_f() {
    auto p = dodecahedron_coordinates();
    GoldenVec3 c{};
    for (Vertex x : {label::v, label::w1, label::a, label::b, label::w2}) c = vsum(c, p[x]);
    return rotation_quat(c, GoldenNum::phi() / GoldenNum(2), -1);
}

/// How a rotation permutes the dodecahedron's vertices.
inline Perm vertex_perm_of(const GoldenQuat& q) {
    auto pts = dodecahedron_coordinates();
    std::vector<Point> img;
    for (const auto& x : pts) {
        auto y = quat_rotate(q, x);
        auto it = std::find(pts.begin(), pts.end(), y);
        if (it == pts.end()) throw InputError("rotation does not preserve the dodecahedron");
        img.push_back(static_cast<Point>(it - pts.begin()));
    }
    return Perm::from_images(std::move(img));
}

/// The 120 unit icosians: (+-1/2)^4, the 8 units +-1, +-i, +-j, +-k, and the
/// even permutations of (0, +-1/2, +-phi/2, +-1/(2 phi)).
inline std::vector<GoldenQuat> icosians() {
    std::vector<GoldenQuat> out;
    const GoldenNum half(Rational(1, 2));
    for (int m = 0; m < 16; ++m) {
        auto s = [&](int bit) { return (m >> bit) & 1 ? -half : half; };
        out.push_back({s(3), s(2), s(1), s(0)});
    }
    for (int i = 0; i < 4; ++i)
        for (int sg : {1, -1}) {
            std::array<GoldenNum, 4> c{0, 0, 0, 0};
            c[static_cast<std::size_t>(i)] = sg;
            out.push_back({c[0], c[1], c[2], c[3]});
        }
    const std::array<GoldenNum, 4> base{GoldenNum(0), half, GoldenNum::phi() / GoldenNum(2), GoldenNum::phi_inv() / GoldenNum(2)};
    std::array<int, 4> perm{0, 1, 2, 3};
    do {
        int inversions = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)]) ++inversions;
        if (inversions % 2) continue;
        for (int m = 0; m < 8; ++m) {
            std::array<GoldenNum, 4> c;
            for (std::size_t k = 0; k < 4; ++k) {
                GoldenNum x = base[k];
                if (k > 0 && ((m >> (k - 1)) & 1)) x = -x;
                c[static_cast<std::size_t>(perm[k])] = x;
            }
            out.push_back({c[0], c[1], c[2], c[3]});
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

/// The rotation group D of the dodecahedron on its vertices, generated by
/// s1 and h (in that order).
inline ActionedGraph dodecahedron_group_action() {
    return make_actioned_graph(dodecahedron_graph(), {vertex_perm_of(quat_s1()), vertex_perm_of(quat_h())}, {}, {"s1", "h"});
}

inline std::vector<Vertex> dodecahedron_face_loop() {
    using namespace label;
    return {v, w1, a, b, w2, v};
}

inline StabilizerPresentation cyclic_stabilizer(const ActionedGraph& ag, Vertex v, const std::string& name, std::size_t n,
                                                ElementId image) {
    StabilizerPresentation sp;
    sp.vertex = v;
    sp.presentation.generators = {name};
    sp.presentation.relators = {PresWord(n, PresLetter{0, 1})};
    sp.images = {image};
    (void)ag;
    return sp;
}

/// D on the dodecahedron; base vertex v, stabilizer <h | h^3>, one face loop.
inline DerivationInput dodecahedron_action(bool with_loop = true) {
    DerivationInput in;
    in.name = "dodecahedron";
    in.ag = dodecahedron_group_action();
    in.sc = build_regular_scaffolding(in.ag);
    if (with_loop) in.loops = {dodecahedron_face_loop()};
    in.stabilizers = {cyclic_stabilizer(in.ag, label::v, "h", 3, in.ag.group.generators()[1])};
    return complete_input(std::move(in), false);
}

struct IcosianAction {
    DerivationInput input;
    std::vector<GoldenQuat> quaternion; // per group element
};

/// The binary icosahedral group, carried by its left regular action on the
/// 120 icosians, acting on the dodecahedron through the rotation it induces.
inline IcosianAction binary_icosahedral_action() {
    auto Q = icosians();
    auto index_of = [&](const GoldenQuat& q) {
        auto it = std::find(Q.begin(), Q.end(), q);
        if (it == Q.end()) throw InputError("quaternion is not a unit icosian");
        return static_cast<Point>(it - Q.begin());
    };
    auto left_mult = [&](const GoldenQuat& g) {
        std::vector<Point> img;
        for (const auto& q : Q) img.push_back(index_of(g * q));
        return Perm::from_images(std::move(img));
    };
    GoldenQuat s1 = quat_s1(), h = quat_h();
    IcosianAction out;
    auto& in = out.input;
    in.name = "binary-icosahedral";
    in.ag = make_actioned_graph(dodecahedron_graph(), {left_mult(s1), left_mult(h)}, {vertex_perm_of(s1), vertex_perm_of(h)},
                                {"s1", "h"});
    const Point one = index_of(GoldenQuat::one());
    for (const auto& p : in.ag.group.elements()) out.quaternion.push_back(Q[p(one)]);
    in.sc = build_regular_scaffolding(in.ag);
    in.loops = {dodecahedron_face_loop()};
    in.stabilizers = {cyclic_stabilizer(in.ag, label::v, "h", 6, in.ag.group.generators()[1])};
    in = complete_input(std::move(in), false);
    return out;
}

namespace detail {
inline Perm transposition(std::size_t n, Point i, Point j) { return Perm::from_cycles(n, {{i, j}}); }

// index of s<k> in a name, or 0
inline int sigma_index(const std::string& name) {
    if (name.size() < 2 || name[0] != 's') return 0;
    try {
        return std::stoi(name.substr(1));
    } catch (...) {
        return 0;
    }
}
} // namespace detail

inline DerivationInput simplex_action(std::size_t n);

/// Presentation of the stabilizer of vertex 0 in S_n, on generators
/// s2..s_{n-1}: the derived presentation of S_{n-1} with g[0] renamed s1
/// and every index shifted up by one.
inline Presentation simplex_stabilizer_presentation(std::size_t n) {
    if (n == 3) return parse_presentation({"s2"}, {"s2 s2"});
    auto prev = derive_presentation(simplex_action(n - 1)).presentation;
    std::vector<std::string> shifted;
    for (auto g : prev.generators) {
        int k = g == "g[0]" ? 1 : detail::sigma_index(g);
        if (k == 0) throw std::logic_error("unexpected generator in symmetric group presentation");
        shifted.push_back("s" + std::to_string(k + 1));
    }
    // sort generators by index
    std::vector<std::uint32_t> order(shifted.size());
    for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](auto x, auto y) { return detail::sigma_index(shifted[x]) < detail::sigma_index(shifted[y]); });
    std::vector<std::uint32_t> pos(order.size());
    Presentation p;
    for (std::uint32_t i = 0; i < order.size(); ++i) {
        pos[order[i]] = i;
        p.generators.push_back(shifted[order[i]]);
    }
    for (auto r : prev.relators) {
        for (auto& l : r) l.gen = pos[l.gen];
        p.relators.push_back(r);
    }
    return p;
}

/// S_n on the complete graph K_n (the 1-skeleton of the simplex), with
/// transpositions s_i = (i-1, i) on points 0..n-1, base vertex 0 and the
/// single loop 0,1,2,0.
inline DerivationInput simplex_action(std::size_t n) {
    if (n < 3) throw InputError("simplex_action needs n >= 3");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.push_back({i, j});
    std::vector<Perm> gens;
    std::vector<std::string> labels;
    for (Point i = 1; i < n; ++i) {
        gens.push_back(detail::transposition(n, i - 1, i));
        labels.push_back("s" + std::to_string(i));
    }
    DerivationInput in;
    in.name = "simplex:" + std::to_string(n);
    in.ag = make_actioned_graph(Graph(n, edges), gens, {}, labels);
    in.sc = build_regular_scaffolding(in.ag);
    in.loops = {{0, 1, 2, 0}};
    StabilizerPresentation sp;
    sp.vertex = 0;
    sp.presentation = simplex_stabilizer_presentation(n);
    for (const auto& g : sp.presentation.generators) {
        int k = detail::sigma_index(g);
        sp.images.push_back(*in.ag.group.find(detail::transposition(n, static_cast<Point>(k - 1), static_cast<Point>(k))));
    }
    in.stabilizers = {sp};
    return complete_input(std::move(in), false);
}

/// Dihedral group of order 2n on the n-cycle, generated by the rotation r
/// and the reflection f fixing vertex 0. With a seed the vertices are
/// relabelled by a random permutation first.
inline DerivationInput dihedral_cycle_action(std::size_t n, std::optional<std::uint64_t> relabel_seed = {}) {
    if (n < 3) throw InputError("dihedral_cycle_action needs n >= 3");
    std::vector<Point> pi(n);
    for (Point i = 0; i < n; ++i) pi[i] = i;
    if (relabel_seed) {
        std::mt19937_64 rng(*relabel_seed);
        for (std::size_t i = n - 1; i > 0; --i) std::swap(pi[i], pi[rng() % (i + 1)]);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<Point> rot(n), ref(n);
    for (Point i = 0; i < n; ++i) {
        edges.push_back({pi[i], pi[(i + 1) % n]});
        rot[pi[i]] = pi[(i + 1) % n];
        ref[pi[i]] = pi[(n - i) % n];
    }
    DerivationInput in;
    in.name = "dihedral:" + std::to_string(n);
    in.ag = make_actioned_graph(Graph(n, edges), {Perm::from_images(rot), Perm::from_images(ref)}, {}, {"r", "f"});
    in.sc = build_regular_scaffolding(in.ag);
    // walk the cycle from the base vertex towards its smaller neighbour
    std::vector<Vertex> loop{in.sc.base()};
    Vertex prev = in.sc.base(), cur = in.ag.graph.neighbors(prev).front();
    while (cur != in.sc.base()) {
        loop.push_back(cur);
        const auto& nb = in.ag.graph.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
    }
    loop.push_back(in.sc.base());
    in.loops = {loop};
    auto Gv = stabilizer(in.ag, in.sc.base());
    in.stabilizers = {cyclic_stabilizer(in.ag, in.sc.base(), "x", 2, Gv.at(1))};
    return complete_input(std::move(in), false);
}

/// S3 on the hexagon formed by the corners 0,1,2 of a triangle and the
/// midpoints 3 (of 01), 4 (of 12), 5 (of 02): two vertex orbits.
inline DerivationInput barycentric_triangle_action() {
    std::vector<std::pair<Vertex, Vertex>> edges{{0, 3}, {3, 1}, {1, 4}, {4, 2}, {2, 5}, {5, 0}};
    Perm t01 = Perm::from_images({1, 0, 2, 3, 5, 4});
    Perm t12 = Perm::from_images({0, 2, 1, 5, 4, 3});
    DerivationInput in;
    in.name = "barycentric-triangle";
    in.ag = make_actioned_graph(Graph(6, edges), {t01, t12}, {}, {"t01", "t12"});
    in.sc = build_regular_scaffolding(in.ag);
    in.loops = {{0, 3, 1, 4, 2, 5, 0}};
    for (Vertex v : in.sc.V) {
        auto Gv = stabilizer(in.ag, v);
        in.stabilizers.push_back(cyclic_stabilizer(in.ag, v, v == 0 ? "a" : "b", 2, Gv.at(1)));
    }
    return complete_input(std::move(in), false);
}

/// A finite proper cover of the group derived from `in` with no loops: the
/// generator images gain an S3 coordinate (stabilizer generators a 3-cycle,
/// edge generators a transposition), giving a finite group that still
/// satisfies every derived relator of order-3 stabilizers and involutive
/// edge generators. Used as a negative control for the Kozsul check.
inline Presentation s3_cover_presentation(const DerivationInput& in, const DerivationResult& res) {
    auto extend = [&](ElementId x, std::vector<Point> tail) {
        auto im = in.ag.group.element(x).images();
        std::vector<Point> out(im.begin(), im.end());
        const auto base = static_cast<Point>(in.ag.group.degree());
        for (Point t : tail) out.push_back(base + t);
        return Perm::from_images(out);
    };
    std::vector<Perm> gens;
    for (std::size_t i = 0; i < res.images.size(); ++i) {
        bool edge_gen = res.presentation.generators[i].rfind("g[", 0) == 0;
        gens.push_back(extend(res.images[i], edge_gen ? std::vector<Point>{1, 0, 2} : std::vector<Point>{1, 2, 0}));
    }
    auto G = generate_closure(gens);
    ElementSet all(G.order());
    for (ElementId x = 0; x < G.order(); ++x) all[x] = x;
    return cayley_presentation(G, all, G.generators(), res.presentation.generators);
}

} // namespace actpres::builtins
