// Acceptance runner: one PASS/FAIL line per criterion, with timings.

#include "presentation_oracles.hpp"

#include <actpres/actpres.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace actpres;

namespace {

// Collects failed conditions; a criterion passes when none failed.
struct Checker {
    std::vector<std::string> failures;
    std::ostringstream notes;
    void require(bool cond, const std::string& what) {
        if (!cond) failures.push_back(what);
    }
};

using Criterion = std::function<void(Checker&)>;

std::uint64_t g_seed = 20240611;

void symmetric_groups(Checker& c) {
    const std::size_t want[] = {6, 24, 120};
    for (std::size_t n = 3; n <= 5; ++n) {
        auto in = builtins::simplex_action(n);
        auto res = derive_presentation(in);
        auto oc = presentation_order_check(res.presentation, res.images, in.ag.group);
        c.require(oc.ok && oc.enumerated_order == want[n - 3], "simplex:" + std::to_string(n) + " order " + oc.message);
        auto renamed = rename_generators(res.presentation, {{"g[0]", "s1"}});
        c.require(fixtures::canonical_strings(renamed) == fixtures::canonical_strings(fixtures::standard_symmetric(n)),
                  "simplex:" + std::to_string(n) + " relators differ from the standard presentation");
        auto cov = check_covering_isomorphism(build_kozsul_model(res.presentation, in), in.ag);
        c.require(cov.ok, "simplex:" + std::to_string(n) + " covering " + cov.defect);
        c.notes << n << "!=" << want[n - 3] << " ";
    }
}

void dodecahedron(Checker& c) {
    auto in = builtins::dodecahedron_action();
    auto res = derive_presentation(in);
    auto p = rename_generators(res.presentation, {{"g[0]", "g"}});
    auto want = parse_presentation({"g", "h"}, {"g g", "h h h", "g h g h g h g h g h"});
    c.require(fixtures::canonical_strings(p) == fixtures::canonical_strings(want), "relators differ from <g,h|g^2,h^3,(gh)^5>");
    auto oc = presentation_order_check(res.presentation, res.images, in.ag.group);
    c.require(oc.ok && oc.enumerated_order == 60u, "order: " + oc.message);
    auto m = build_kozsul_model(res.presentation, in);
    auto cov = check_covering_isomorphism(m, in.ag);
    c.require(cov.ok && m.vertex_count() == 20 && m.edges.size() == 30, "Kozsul model " + cov.defect);
    c.notes << "order 60, model " << m.vertex_count() << "/" << m.edges.size();
}

void binary_icosahedral(Checker& c) {
    auto bi = builtins::binary_icosahedral_action();
    auto res = derive_presentation(bi.input);
    auto p = rename_generators(res.presentation, {{"g[0]", "g"}, {"h", "r"}});
    std::string rg5 = "g g";
    for (int i = 0; i < 5; ++i) rg5 += " g^-1 r^-1";
    auto want = parse_presentation({"g", "r"}, {"g g r^-3", rg5, "r^6"});
    c.require(fixtures::mutually_isomorphic(p, want, {"r", "g"}, {"g", "r"}), "derived presentation is not the expected one");
    auto n = todd_coxeter(p).cosets;
    c.require(n == 120, "enumeration gave " + std::to_string(n));

    auto cs = coxeter_substitution(p);
    c.require(cs.order == 120, "substitution order " + std::to_string(cs.order));
    EnumeratedGroup B(cs.result);
    auto ev = [&](const std::string& w) { return B.evaluate(parse_word(w, cs.result.generators)); };
    std::size_t z = ev("z");
    c.require(ev("s s s") == z && ev("t t t t t") == z && ev("s t s t") == z, "s^3 = t^5 = (st)^2 = z fails");
    c.require(z != 0 && B.element_order(z) == 2, "z is not of order 2");

    auto m = build_kozsul_model(res.presentation, bi.input);
    auto cov = check_covering_isomorphism(m, bi.input.ag);
    c.require(cov.ok && m.vertex_count() == 20 && m.edges.size() == 30, "Kozsul model " + cov.defect);
    c.notes << "order 120, z order 2, model " << m.vertex_count() << "/" << m.edges.size();
}

void coxeter_implication(Checker& c) {
    auto r = coxeter_implication_check();
    c.require(r.group_order == 120, "group order " + std::to_string(r.group_order));
    c.require(r.z_order == 2, "z order " + std::to_string(r.z_order));
    c.require(r.z_central, "z not central");
    c.require(r.quotient_order == 60, "quotient order " + std::to_string(r.quotient_order));
    for (const auto& id : r.identities) c.require(id.holds, "identity fails: " + id.name);
    c.require(r.ok, "report not ok");
    c.notes << r.identities.size() << " identities";
}

void face_products(Checker& c) {
    auto T = truncated_dodecahedron();
    CoxeterLift lift(T);
    auto r = face_boundary_check(T, lift);
    c.require(r.faces_with_z == 32 && r.failing_faces.empty(), "faces with product z: " + std::to_string(r.faces_with_z));
    c.require(r.pentagon_edges == 30, "pentagon edges " + std::to_string(r.pentagon_edges));
    c.require(r.vertices == 60 && r.edges == 90 && r.faces == 32 && r.euler == 2, "Euler count");
    c.require(r.disc_ordering_found && r.disc_ordering_verified, "disc ordering");
    c.require(r.induction_holds && r.z_squared_trivial, "segment conditions");
    c.require(r.ok, "report not ok");
    c.notes << "32/32 faces, 60-90+32=" << r.euler;
}

void milnor(Checker& c) {
    auto h = builtins::quat_h(), s1 = builtins::quat_s1(), f = builtins::quat_f();
    auto m = milnor_product_check(h.conj(), s1, f);
    c.require(m.ok, "h^-1 s1 f = " + m.product.str());
    auto p = quat_pow(s1 * h, 5);
    c.require(p == GoldenQuat::minus_one(), "(s1 h)^5 = " + p.str());
    c.notes << "exact";
}

void perfectness(Checker& c) {
    auto a = abelianization_smith(coxeter_universal_presentation());
    c.require(a.diagonal == std::vector<BigInt>{1, 1}, "Coxeter abelianization not diag(1,1)");
    auto c5 = abelianization_smith(parse_presentation({"a"}, {"a^5"}));
    c.require(c5.invariant_factors == std::vector<BigInt>{5}, "<a|a^5> not [5]");
    c.notes << "diag(1,1), [5]";
}

void property_suites(Checker& c) {
    std::vector<DerivationInput> inputs;
    for (const auto& b : builtins::list_builtins()) {
        for (int k : {3, 4, 5, 6}) {
            std::string name = b.name;
            if (auto pos = name.find(":N"); pos != std::string::npos)
                name.replace(pos, 2, ":" + std::to_string(k));
            else if (k != 3)
                continue;
            inputs.push_back(builtins::make_builtin(name));
        }
    }
    std::mt19937_64 rng(g_seed);
    for (int i = 0; i < 100; ++i) inputs.push_back(builtins::dihedral_cycle_action(3 + rng() % 14, rng()));

    std::size_t relators = 0;
    for (const auto& in : inputs) {
        // (a) relators evaluate to the identity
        auto res = derive_presentation(in);
        for (const auto& r : res.presentation.relators) {
            ++relators;
            c.require(evaluate_word(in.ag.group, r, res.images, FiniteGroupTable::identity()) == FiniteGroupTable::identity(),
                      "(a) " + in.name + ": " + format_word(r, res.presentation.generators));
        }
        // (b) regularity
        auto reg = validate_regularity(in.sc, in.ag);
        c.require(reg.ok, "(b) " + in.name + ": " + reg.message);
        // (c) the edge-orbit involution
        auto iota = edge_orbit_involution(in.ag, in.sc);
        for (auto [e, f] : iota) {
            c.require(iota.at(f) == e, "(c) " + in.name + ": not an involution");
            c.require((e == f) == find_inversion(in.ag, e).has_value(), "(c) " + in.name + ": fixed point mismatch");
        }
        // (d) local isomorphism at every vertex
        auto m = build_kozsul_model(res.presentation, in);
        for (std::size_t x = 0; x < m.vertex_count(); ++x)
            c.require(m.neighbors[x].size() == in.ag.graph.degree(m.f[x]), "(d) " + in.name + ": degree");
        c.require(check_covering_isomorphism(m, in.ag).ok, "(d) " + in.name + ": covering");
    }
    auto T = truncated_dodecahedron_action();
    c.require(validate_regularity(T.sc, T.ag).ok, "(b) truncated scaffolding");

    // (e) dropping the loop: enumeration must not stop at 60
    auto bare = builtins::dodecahedron_action(false);
    auto bres = derive_presentation(bare);
    auto oc = presentation_order_check(bres.presentation, bres.images, bare.ag.group);
    c.require(!oc.ok && (oc.limit_hit || (oc.enumerated_order && *oc.enumerated_order != 60)),
              "(e) loop-free presentation still gives 60");
    if (oc.enumerated_order && *oc.enumerated_order % 60 == 0) {
        auto cov = check_covering_isomorphism(build_kozsul_model(bres.presentation, bare), bare.ag);
        c.require(cov.defect == "non-injective", "(e) Kozsul check did not report non-injective");
    }
    // a finite quotient of the loop-free group shows the non-injective defect directly
    auto cover = builtins::s3_cover_presentation(bare, bres);
    auto cov = check_covering_isomorphism(build_kozsul_model(cover, bare), bare.ag);
    c.require(!cov.ok && cov.defect == "non-injective", "(e) finite cover not reported non-injective");

    c.notes << inputs.size() << " inputs, " << relators << " relators, loop-free: "
            << (oc.limit_hit ? "limit hit" : std::to_string(oc.enumerated_order.value_or(0))) << ", cover: " << cov.defect;
}

void cayley_export(Checker& c) {
    auto D = builtins::dodecahedron_group_action();
    const auto& G = D.group;
    ElementId s1 = G.generators()[0], h = G.generators()[1];
    auto d = cayley_diagram(G, {s1, h, G.inv(h)}, {"s1", "h", "h^-1"});
    c.require(d.generates, "does not generate");
    auto U = cayley_underlying_graph(d);
    auto T = truncated_dodecahedron();
    c.require(U.vertex_count() == 60 && U.edge_count() == 90, "underlying graph is not 60/90");
    c.require(canonical_form(U) == canonical_form(T.Y), "canonical forms differ");
    c.notes << U.vertex_count() << "/" << U.edge_count() << " canonical forms equal";
}

} // namespace

int main(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--seed=", 0) == 0)
            g_seed = std::stoull(a.substr(7));
        else if (a == "--seed" && i + 1 < argc)
            g_seed = std::stoull(argv[++i]);
    }
    struct Entry {
        const char* title;
        double budget_s;
        Criterion run;
    };
    const std::vector<Entry> criteria{
        {"symmetric groups S3, S4, S5", 5, symmetric_groups},
        {"dodecahedron presentation and Kozsul model", 5, dodecahedron},
        {"binary icosahedral group and Coxeter substitution", 10, binary_icosahedral},
        {"Coxeter implication z^2 = 1", 10, coxeter_implication},
        {"truncated dodecahedron face products", 10, face_products},
        {"quaternion product identities", 5, milnor},
        {"perfectness via Smith normal form", 5, perfectness},
        {"property suites", 60, property_suites},
        {"Cayley diagram is the truncated dodecahedron", 5, cayley_export},
    };
    std::cout << "seed: " << g_seed << "\n";
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Checker c;
        auto t0 = std::chrono::steady_clock::now();
        try {
            criteria[i].run(c);
        } catch (const std::exception& e) {
            c.failures.push_back(std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (secs > criteria[i].budget_s) c.failures.push_back("over time budget");
        bool pass = c.failures.empty();
        failed += !pass;
        std::cout << (pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].title << " (" << std::fixed
                  << std::setprecision(2) << secs << " s)";
        if (pass)
            std::cout << ": " << c.notes.str();
        else
            for (const auto& f : c.failures) std::cout << "\n    " << f;
        std::cout << "\n";
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
