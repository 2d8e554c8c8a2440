#include "fixtures.hpp"
#include "test_support.hpp"

#include <actpres/kozsul_model.hpp>
#include <actpres/milnor.hpp>
#include <actpres/registry.hpp>
#include <actpres/smith.hpp>
#include <actpres/truncated.hpp>

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace actpres;

namespace {

std::string power_word(const std::string& w, int k) {
    std::string s;
    for (int i = 0; i < k; ++i) s += (s.empty() ? "" : " ") + w;
    return s;
}

Presentation universal() {
    return parse_presentation({"g", "r"}, {"g g r r r", "g g " + power_word("g^-1 r^-1", 5)});
}

void expect_complete(const CosetTable& t, const Presentation& p) {
    for (std::size_t c = 0; c < t.cosets; ++c) {
        for (std::size_t col = 0; col < t.columns(); ++col) ASSERT_LT(static_cast<std::size_t>(t.at(c, col)), t.cosets);
        for (const auto& r : p.relators) ASSERT_EQ(t.trace(c, r), c);
    }
}

} // namespace

TEST(ToddCoxeter, SmallExamples) {
    auto cyc = parse_presentation({"a"}, {"a^3"});
    EXPECT_EQ(todd_coxeter(cyc).cosets, 3u);

    auto s4 = parse_presentation({"a", "b", "c"}, {"a^2", "b^2", "c^2", "a b a b a b", "b c b c b c", "a c a c"});
    auto t = todd_coxeter(s4);
    EXPECT_EQ(t.cosets, 24u);
    expect_complete(t, s4);

    auto u = universal();
    auto tu = todd_coxeter(u);
    EXPECT_EQ(tu.cosets, 120u);
    expect_complete(tu, u);
}

TEST(ToddCoxeter, SubgroupIndex) {
    auto s3 = parse_presentation({"a", "b"}, {"a^2", "b^2", "a b a b a b"});
    EXPECT_EQ(todd_coxeter(s3, {parse_word("a", s3.generators)}).cosets, 3u);
    EXPECT_EQ(todd_coxeter(s3, {parse_word("a b", s3.generators)}).cosets, 2u);
}

TEST(ToddCoxeter, LimitAndDeterminism) {
    auto free2 = parse_presentation({"a", "b"}, {});
    EXPECT_THROW(todd_coxeter(free2, {}, 1000), LimitExceeded);
    auto u = universal();
    auto a = todd_coxeter(u), b = todd_coxeter(u);
    EXPECT_EQ(a.table, b.table);
}

TEST(ToddCoxeter, RandomCyclicAndDihedral) {
    std::mt19937_64 rng(test_seed());
    for (int i = 0; i < 20; ++i) {
        int n = 2 + static_cast<int>(rng() % 30);
        auto c = parse_presentation({"a"}, {"a^" + std::to_string(n)});
        EXPECT_EQ(todd_coxeter(c).cosets, static_cast<std::size_t>(n));
        auto d = parse_presentation({"r", "f"}, {"r^" + std::to_string(n), "f^2", "f r f r"});
        EXPECT_EQ(todd_coxeter(d).cosets, static_cast<std::size_t>(2 * n));
    }
}

TEST(OrderCheck, DerivedPresentations) {
    std::vector<std::pair<std::string, std::size_t>> cases{
        {"simplex:3", 6}, {"simplex:4", 24}, {"simplex:5", 120}, {"dodecahedron", 60}};
    for (auto& [name, order] : cases) {
        auto in = builtins::make_builtin(name);
        auto res = derive_presentation(in);
        auto r = presentation_order_check(res.presentation, res.images, in.ag.group);
        EXPECT_TRUE(r.ok) << name << ": " << r.message;
        ASSERT_TRUE(r.enumerated_order);
        EXPECT_EQ(*r.enumerated_order, order);
    }
}

TEST(OrderCheck, DroppedRelator) {
    auto in = builtins::dodecahedron_action();
    auto res = derive_presentation(in);
    auto p = res.presentation;
    std::size_t loop = std::find(res.families.begin(), res.families.end(), RelatorFamily::Loop) - res.families.begin();
    p.relators.erase(p.relators.begin() + static_cast<long>(loop));
    auto r = presentation_order_check(p, res.images, in.ag.group, 100000);
    EXPECT_FALSE(r.ok);
    EXPECT_TRUE(r.limit_hit);

    // a relator that fails in G is caught before enumeration
    auto q = res.presentation;
    q.relators.push_back(parse_word("h", q.generators));
    auto r2 = presentation_order_check(q, res.images, in.ag.group);
    EXPECT_FALSE(r2.ok);
    EXPECT_TRUE(r2.failing_relator);
}

TEST(Kozsul, ModelSizes) {
    std::vector<std::tuple<std::string, std::size_t, std::size_t>> cases{
        {"simplex:3", 3, 3}, {"dodecahedron", 20, 30}, {"binary-icosahedral", 20, 30}};
    for (auto& [name, v, e] : cases) {
        auto in = builtins::make_builtin(name);
        auto res = derive_presentation(in);
        auto m = build_kozsul_model(res.presentation, in);
        auto c = check_covering_isomorphism(m, in.ag);
        EXPECT_TRUE(c.ok) << name << " " << c.defect << " " << c.message;
        EXPECT_EQ(m.vertex_count(), v) << name;
        EXPECT_EQ(m.edges.size(), e) << name;
        EXPECT_EQ(m.group_order, in.ag.group.order());
    }
}

TEST(Kozsul, SingleVertexTrivialGroup) {
    auto ag = fixtures::trivial_on(Graph(1, {}));
    DerivationInput in;
    in.ag = ag;
    in.sc = build_regular_scaffolding(ag);
    in = complete_input(std::move(in));
    auto res = derive_presentation(in);
    auto m = build_kozsul_model(res.presentation, in);
    auto c = check_covering_isomorphism(m, in.ag);
    EXPECT_TRUE(c.ok) << c.message;
    EXPECT_EQ(m.vertex_count(), 1u);
}

TEST(Kozsul, FiniteCoverIsNotInjective) {
    auto in = builtins::dodecahedron_action(false);
    auto res = derive_presentation(in);
    auto cover = builtins::s3_cover_presentation(in, res);
    EXPECT_EQ(todd_coxeter(cover).cosets, 360u);
    auto m = build_kozsul_model(cover, in);
    auto c = check_covering_isomorphism(m, in.ag);
    EXPECT_FALSE(c.ok);
    EXPECT_EQ(c.defect, "non-injective");
    ASSERT_EQ(c.witness.size(), 2u);
    EXPECT_EQ(m.f[c.witness[0]], m.f[c.witness[1]]);
    EXPECT_EQ(m.vertex_count(), 120u);
}

TEST(KozsulProperty, LocalIsomorphismEverywhere) {
    std::mt19937_64 rng(test_seed());
    std::vector<DerivationInput> inputs;
    for (const auto& b : builtins::list_builtins()) {
        std::string name = b.name;
        if (name.find(":N") != std::string::npos) name.replace(name.find(":N"), 2, ":5");
        inputs.push_back(builtins::make_builtin(name));
    }
    for (int i = 0; i < 10; ++i) inputs.push_back(builtins::dihedral_cycle_action(3 + rng() % 10, rng()));
    for (const auto& in : inputs) {
        SCOPED_TRACE(in.name);
        auto res = derive_presentation(in);
        auto m = build_kozsul_model(res.presentation, in);
        EXPECT_TRUE(m.neighbor_rule_well_defined);
        for (std::size_t x = 0; x < m.vertex_count(); ++x) {
            ASSERT_EQ(m.neighbors[x].size(), in.ag.graph.degree(m.f[x]));
            std::set<Vertex> img;
            for (auto y : m.neighbors[x]) img.insert(m.f[y]);
            EXPECT_EQ(img, std::set<Vertex>(in.ag.graph.neighbors(m.f[x]).begin(), in.ag.graph.neighbors(m.f[x]).end()));
        }
        EXPECT_TRUE(check_covering_isomorphism(m, in.ag).ok);
    }
}

TEST(Abelianization, Examples) {
    auto a = abelianization_smith(parse_presentation({"g", "r"}, {"g^2 r^3", "g^3 r^5"}));
    EXPECT_TRUE(a.trivial());
    EXPECT_EQ(a.diagonal, (std::vector<BigInt>{1, 1}));

    auto cox = abelianization_smith(universal());
    EXPECT_TRUE(cox.trivial());

    auto c5 = abelianization_smith(parse_presentation({"a"}, {"a^5"}));
    EXPECT_EQ(c5.invariant_factors, std::vector<BigInt>{5});

    auto free2 = abelianization_smith(parse_presentation({"a", "b"}, {}));
    EXPECT_EQ(free2.invariant_factors, (std::vector<BigInt>{0, 0}));

    // Z/2 x Z/6 written non-diagonally: [[2,0],[0,6]] ~ [[2,4],[0,6]]
    auto z26 = abelianization_smith(parse_presentation({"a", "b"}, {"a^2 b^4", "b^6"}));
    EXPECT_EQ(z26.invariant_factors, (std::vector<BigInt>{2, 6}));
}

TEST(Abelianization, RandomDiagonalOracle) {
    // the product of invariant factors equals |det| for a full-rank square matrix
    std::mt19937_64 rng(test_seed() + 5);
    for (int trial = 0; trial < 50; ++trial) {
        int a = 1 + static_cast<int>(rng() % 9), b = static_cast<int>(rng() % 9) - 4, c = static_cast<int>(rng() % 9) - 4,
            d = 1 + static_cast<int>(rng() % 9);
        long det = static_cast<long>(a) * d - static_cast<long>(b) * c;
        if (det == 0) continue;
        auto p = parse_presentation({"x", "y"}, {"x^" + std::to_string(a) + " y^" + std::to_string(b),
                                                 "x^" + std::to_string(c) + " y^" + std::to_string(d)});
        auto inv = abelianization_smith(p);
        BigInt prod = 1;
        for (auto& x : inv.diagonal) prod *= x;
        EXPECT_EQ(prod, BigInt(std::labs(det)));
        for (std::size_t i = 1; i < inv.diagonal.size(); ++i) EXPECT_EQ(inv.diagonal[i] % inv.diagonal[i - 1], 0);
    }
}

TEST(Coxeter, ImplicationCheck) {
    auto r = coxeter_implication_check();
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.group_order, 120u);
    EXPECT_EQ(r.z_order, 2u);
    EXPECT_TRUE(r.z_central);
    EXPECT_EQ(r.quotient_order, 60u);
    for (const auto& c : r.identities) EXPECT_TRUE(c.holds) << c.name;
    EXPECT_GE(r.identities.size(), 10u);
}

class TruncatedTest : public ::testing::Test {
protected:
    static void SetUpTestSuite() {
        T = new TruncatedDodecahedron(truncated_dodecahedron());
        L = new CoxeterLift(*T);
    }
    static void TearDownTestSuite() {
        delete L;
        delete T;
    }
    static TruncatedDodecahedron* T;
    static CoxeterLift* L;
};
TruncatedDodecahedron* TruncatedTest::T = nullptr;
CoxeterLift* TruncatedTest::L = nullptr;

TEST_F(TruncatedTest, Counts) {
    EXPECT_EQ(T->Y.vertex_count(), 60u);
    EXPECT_EQ(T->Y.edge_count(), 90u);
    EXPECT_EQ(T->faces.size(), 32u);
    EXPECT_EQ(std::count(T->triangle_face.begin(), T->triangle_face.end(), true), 20);
    // oracle from the dodecahedron: V = 3*20, E = 30 + 3*20, F = 12 + 20
    auto X = builtins::dodecahedron_graph();
    EXPECT_EQ(T->Y.vertex_count(), 2 * X.edge_count());
    EXPECT_EQ(T->Y.edge_count(), X.edge_count() + 3 * X.vertex_count());
}

TEST_F(TruncatedTest, FreeAction) {
    auto in = truncated_dodecahedron_action();
    for (Vertex y = 0; y < 60; ++y) EXPECT_EQ(stabilizer(in.ag, y).size(), 1u);
    for (auto [a, b] : T->Y.edges()) {
        if (T->pentagon_edge(a, b)) {
            EXPECT_EQ(T->t_element(a, b), T->t_element(b, a));
        }
    }
}

TEST_F(TruncatedTest, LoopsInDModeAreTrivial) {
    std::mt19937_64 rng(test_seed());
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Vertex> p{static_cast<Vertex>(rng() % 60)};
        for (int i = 0; i < 12; ++i) {
            const auto& nb = T->Y.neighbors(p.back());
            p.push_back(nb[rng() % nb.size()]);
        }
        // close along the reversed path: a loop
        std::vector<Vertex> loop = p;
        for (auto it = p.rbegin() + 1; it != p.rend(); ++it) loop.push_back(*it);
        EXPECT_EQ(path_product(loop, PathMode::D, *T, *L), 0u);
        for (const auto& f : T->faces) EXPECT_EQ(path_product(closed(f), PathMode::D, *T, *L), 0u);

        std::size_t k = 0;
        for (std::size_t i = 1; i < p.size(); ++i) k += T->pentagon_edge(p[i - 1], p[i]);
        EXPECT_EQ(path_product(loop, PathMode::G, *T, *L), L->group().power(L->z(), static_cast<long>(k)));
    }
}

TEST_F(TruncatedTest, BackAndForth) {
    for (auto [a, b] : T->Y.edges()) {
        auto v = path_product({a, b, a}, PathMode::G, *T, *L);
        EXPECT_EQ(v, T->pentagon_edge(a, b) ? L->z() : 0u);
    }
    EXPECT_THROW(path_product({0, 59}, PathMode::G, *T, *L), InputError);
}

TEST_F(TruncatedTest, FacesAndRotations) {
    for (const auto& f : T->faces) {
        for (std::size_t s = 0; s < f.size(); ++s) {
            std::vector<Vertex> rot(f.begin() + static_cast<long>(s), f.end());
            rot.insert(rot.end(), f.begin(), f.begin() + static_cast<long>(s));
            EXPECT_EQ(path_product(closed(rot), PathMode::G, *T, *L), L->z());
        }
    }
    auto r = face_boundary_check(*T, *L);
    EXPECT_TRUE(r.ok);
    EXPECT_EQ(r.faces_with_z, 32u);
    EXPECT_EQ(r.pentagon_edges, 30u);
    EXPECT_EQ(r.euler, 2);
    EXPECT_TRUE(r.induction_holds);
}

TEST_F(TruncatedTest, DiscOrdering) {
    auto d = greedy_disc_ordering(T->faces);
    ASSERT_TRUE(d);
    EXPECT_EQ(d->order.size(), 32u);
    EXPECT_TRUE(verify_disc_ordering(T->faces, *d));
    // a tampered ordering fails the re-check
    auto bad = *d;
    std::swap(bad.order[1], bad.order.back());
    EXPECT_FALSE(verify_disc_ordering(T->faces, bad));

    auto one = greedy_disc_ordering({T->faces[0]});
    ASSERT_TRUE(one);
    EXPECT_EQ(one->order.size(), 1u);

    // two faces sharing no edge
    std::size_t far = 1;
    for (; far < T->faces.size(); ++far) {
        std::set<Vertex> a(T->faces[0].begin(), T->faces[0].end());
        bool touch = false;
        for (Vertex x : T->faces[far]) touch = touch || a.count(x);
        if (!touch) break;
    }
    EXPECT_FALSE(greedy_disc_ordering({T->faces[0], T->faces[far]}));
}

TEST(Milnor, Identities) {
    auto h = builtins::quat_h(), s1 = builtins::quat_s1(), f = builtins::quat_f();
    auto m = milnor_product_check(h.conj(), s1, f);
    EXPECT_TRUE(m.ok) << m.product.str();
    EXPECT_EQ(quat_pow(s1 * h, 5), GoldenQuat::minus_one());
    GoldenQuat i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
    EXPECT_TRUE(milnor_product_check(i, j, k).ok);
    auto bad = milnor_product_check(h, s1, f);
    EXPECT_FALSE(bad.ok);
    EXPECT_NE(bad.product, GoldenQuat::minus_one());
    // rotation angles: h third turn, s1 half turn, f fifth turn
    EXPECT_EQ(quat_pow(h, 3), GoldenQuat::minus_one());
    EXPECT_EQ(s1 * s1, GoldenQuat::minus_one());
    EXPECT_EQ(quat_pow(f, 5), GoldenQuat::minus_one());
}
