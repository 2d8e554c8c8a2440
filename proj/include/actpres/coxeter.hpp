#pragma once

#include <actpres/enumerated_group.hpp>

#include <string>
#include <vector>

namespace actpres {

/// <g, r | g^2 = r^-3 = (rg)^5>, with no relation on the order of z = g^2.
inline Presentation coxeter_universal_presentation() {
    return parse_presentation({"g", "r"}, {"g g r r r", "g g g^-1 r^-1 g^-1 r^-1 g^-1 r^-1 g^-1 r^-1 g^-1 r^-1"});
}

/// <s, t | s^3 = t^5 = (st)^2>, the same group in Coxeter's generators.
inline Presentation coxeter_st_presentation() {
    return parse_presentation({"s", "t"}, {"s^3 t^-5", "s^3 t^-1 s^-1 t^-1 s^-1"});
}

struct IdentityCheck {
    std::string name;
    bool holds = false;
};

struct CoxeterReport {
    bool ok = false;
    std::size_t group_order = 0;
    std::size_t z_order = 0;
    bool z_central = false;
    std::size_t quotient_order = 0;
    std::size_t st_group_order = 0;
    std::vector<IdentityCheck> identities;
};

/// Enumerates the universal group, checks that z = g^2 is central of order
/// exactly 2 with quotient of order 60, and checks every step of Coxeter's
/// derivation of z^2 = 1 as an element equality, in the s,t group and in
/// the g,r group through s = r^-1, t = rg.
inline CoxeterReport coxeter_implication_check(std::size_t limit = 1000000) {
    CoxeterReport rep;
    auto P = coxeter_universal_presentation();
    EnumeratedGroup G(P, limit);
    rep.group_order = G.order();
    const std::size_t g = G.generator(0), r = G.generator(1);
    const std::size_t z = G.mul(g, g);
    rep.z_order = G.element_order(z);
    rep.z_central = G.central(z);
    auto Q = P;
    Q.relators.push_back(parse_word("g g", Q.generators));
    rep.quotient_order = todd_coxeter(Q, {}, limit).cosets;

    auto add = [&](std::string name, bool holds) { rep.identities.push_back({std::move(name), holds}); };
    const std::size_t s = G.inv(r), t = G.mul(r, g);
    add("g^2 = r^-3", z == G.power(r, -3));
    add("g^2 = (rg)^5", z == G.power(t, 5));
    add("s^3 = z", G.power(s, 3) == z);
    add("t^5 = z", G.power(t, 5) == z);
    add("(st)^2 = z", G.power(G.mul(s, t), 2) == z);

    // the chain itself, inside <s,t | s^3 = t^5 = (st)^2>
    EnumeratedGroup H(coxeter_st_presentation(), limit);
    rep.st_group_order = H.order();
    auto ev = [&](const std::string& w) { return H.evaluate(parse_word(w, {"s", "t"})); };
    auto eq = [&](const std::string& a, const std::string& b) { return ev(a) == ev(b); };
    const std::size_t zz = ev("s s s");
    add("[st] z central", H.central(zz));
    add("[st] s^2 = t s t", eq("s^2", "t s t"));
    add("[st] t^4 = s t s", eq("t^4", "s t s"));
    add("[st] t = s^2 t^-1 s^-1", eq("t", "s^2 t^-1 s^-1"));
    add("[st] s = t^-1 s^-1 t^4", eq("s", "t^-1 s^-1 t^4"));
    add("[st] s^3 = (s t^-1)^5", eq("s^3", "s t^-1 s t^-1 s t^-1 s t^-1 s t^-1"));
    add("[st] t^5 = (s^-1 t^2)^5", eq("t^5", "s^-1 t^2 s^-1 t^2 s^-1 t^2 s^-1 t^2 s^-1 t^2"));
    add("[st] (s^-1 t^2)^5 = (s t^-1 s t^-1 s^-1)^5",
        eq("s^-1 t^2 s^-1 t^2 s^-1 t^2 s^-1 t^2 s^-1 t^2",
           "s t^-1 s t^-1 s^-1 s t^-1 s t^-1 s^-1 s t^-1 s t^-1 s^-1 s t^-1 s t^-1 s^-1 s t^-1 s t^-1 s^-1"));
    add("[st] s^3 = s t (t^-2 s)^5 t^-1 s^-1",
        eq("s^3", "s t t^-2 s t^-2 s t^-2 s t^-2 s t^-2 s t^-1 s^-1"));
    add("[st] t^5 = (t^-2 s)^5", eq("t^5", "t^-2 s t^-2 s t^-2 s t^-2 s t^-2 s"));
    add("[st] z^2 = t^5 t^5 = 1", H.mul(zz, zz) == 0 && eq("t^5 t^5", "1"));
    add("[st] z != 1", zz != 0);

    rep.ok = rep.group_order == 120 && rep.z_order == 2 && rep.z_central && rep.quotient_order == 60 &&
             rep.st_group_order == 120;
    for (auto& c : rep.identities) rep.ok = rep.ok && c.holds;
    return rep;
}

struct CoxeterSubstitution {
    Presentation result;                                   // over s, t, z
    std::vector<std::pair<std::string, std::string>> forward;  // s, t, z as words in g, r
    std::vector<std::pair<std::string, std::string>> backward; // g, r as words in s, t, z
    std::size_t order = 0;
};

/// z = g^2, s = r^-1, t = rg turns <g, r | g^2 = r^3 = (rg)^5, r^6> into
/// <s, t, z | s^3 = t^5 = (st)^2 = z, z^2>. The two presentations are
/// enumerated and the substitutions checked to be mutually inverse
/// isomorphisms; anything else is a pattern mismatch.
inline CoxeterSubstitution coxeter_substitution(const Presentation& p, const std::string& g_name = "g",
                                                const std::string& r_name = "r", std::size_t limit = 1000000) {
    if (p.generators.size() != 2 || !p.generator_index(g_name) || !p.generator_index(r_name))
        throw InputError("coxeter_substitution: expected exactly the generators " + g_name + ", " + r_name);
    // work over names g, r in the input's order
    Presentation in = p;
    in.generators[*p.generator_index(g_name)] = "g";
    in.generators[*p.generator_index(r_name)] = "r";

    CoxeterSubstitution out;
    out.result = parse_presentation({"s", "t", "z"}, {"s s s z^-1", "t t t t t z^-1", "s t s t z^-1", "z z"});
    out.forward = {{"s", "r^-1"}, {"t", "r g"}, {"z", "g g"}};
    out.backward = {{"g", "s t"}, {"r", "s^-1"}};

    EnumeratedGroup A(in, limit), B(out.result, limit);
    auto image_in_A = [&](const std::string& w) { return A.evaluate(parse_word(w, in.generators)); };
    auto image_in_B = [&](const std::string& w) { return B.evaluate(parse_word(w, out.result.generators)); };

    // beta: s,t,z -> words in g,r ; alpha: g,r -> words in s,t,z
    std::vector<std::size_t> beta{image_in_A("r^-1"), image_in_A("r g"), image_in_A("g g")};
    std::vector<std::size_t> alpha(2);
    alpha[*in.generator_index("g")] = image_in_B("s t");
    alpha[*in.generator_index("r")] = image_in_B("s^-1");
    for (const auto& rel : out.result.relators)
        if (evaluate_word(A, rel, beta, std::size_t{0}) != 0)
            throw InputError("coxeter_substitution: pattern mismatch (Coxeter relator fails in the input group)");
    for (const auto& rel : in.relators)
        if (evaluate_word(B, rel, alpha, std::size_t{0}) != 0)
            throw InputError("coxeter_substitution: pattern mismatch (input relator fails after substitution)");
    // alpha(beta(x)) = x for x = s, t, z and beta(alpha(y)) = y for y = g, r
    auto ab = [&](std::size_t elemA) { return evaluate_word(B, A.word(elemA), alpha, std::size_t{0}); };
    auto ba = [&](std::size_t elemB) { return evaluate_word(A, B.word(elemB), beta, std::size_t{0}); };
    for (std::size_t i = 0; i < 3; ++i)
        if (ab(beta[i]) != B.generator(i)) throw InputError("coxeter_substitution: substitutions are not inverse");
    for (std::size_t i = 0; i < 2; ++i)
        if (ba(alpha[i]) != A.generator(i)) throw InputError("coxeter_substitution: substitutions are not inverse");
    if (A.order() != B.order()) throw InputError("coxeter_substitution: orders differ");
    out.order = B.order();
    return out;
}

} // namespace actpres
