#pragma once

#include <actpres/derive.hpp>
#include <actpres/kozsul_model.hpp>

#include <json.hpp>

#include <string>
#include <vector>

namespace actpres {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline std::vector<Point> point_array(const ordered_json& j, const std::string& what) {
    if (!j.is_array()) throw InputError(what + " must be an array of integers");
    std::vector<Point> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) throw InputError(what + " must hold non-negative integers");
        out.push_back(x.get<Point>());
    }
    return out;
}

// Shortest word over the action's generators (letters g1, g1^-1, g2, ...).
inline std::vector<PresWord> shortest_words(const FiniteGroupTable& G) {
    std::vector<PresWord> w(G.order());
    std::vector<bool> seen(G.order(), false);
    seen[0] = true;
    std::vector<ElementId> order{0};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < G.generators().size(); ++j)
            for (int sgn : {1, -1}) {
                ElementId x = G.generators()[j];
                ElementId y = G.mul(order[i], sgn > 0 ? x : G.inv(x));
                if (seen[y]) continue;
                seen[y] = true;
                w[y] = w[order[i]];
                w[y].push_back({static_cast<std::uint32_t>(j), sgn});
                order.push_back(y);
            }
    return w;
}

} // namespace detail

inline ordered_json parse_json_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const ordered_json::parse_error& e) {
        throw InputError(std::string("malformed JSON at byte ") + std::to_string(e.byte) + ": " + e.what());
    }
}

/// Reads an action description:
///   {"vertices": n, "edges": [[u,v],...],
///    "generators": {"name": [images...] | {"element": [...], "vertex": [...]}},
///    "orbit_reps": [...], "loops": [[...]],
///    "stabilizers": [{"vertex": v, "generators": {"name": "word"}, "relators": ["..."]}]}
/// Only the first three keys are required.
inline DerivationInput derivation_input_from_json(const ordered_json& j, bool default_loops = true) {
    try {
        if (!j.is_object()) throw InputError("action description must be a JSON object");
        for (const char* key : {"vertices", "edges", "generators"})
            if (!j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
        if (!j["vertices"].is_number_integer() || j["vertices"].get<long long>() < 1)
            throw InputError("'vertices' must be a positive integer");
        const auto n = j["vertices"].get<std::size_t>();
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (const auto& e : j["edges"]) {
            auto p = detail::point_array(e, "edge");
            if (p.size() != 2) throw InputError("each edge must have two endpoints");
            edges.push_back({p[0], p[1]});
        }
        Graph X(n, edges);
        if (!j["generators"].is_object() || j["generators"].empty()) throw InputError("'generators' must be a non-empty object");
        std::vector<Perm> carrier, vertex;
        std::vector<std::string> labels;
        bool faithful = true;
        for (const auto& [name, val] : j["generators"].items()) {
            labels.push_back(name);
            if (val.is_array()) {
                carrier.push_back(Perm::from_images(detail::point_array(val, "generator " + name)));
                vertex.push_back(carrier.back());
            } else if (val.is_object() && val.contains("element") && val.contains("vertex")) {
                faithful = false;
                carrier.push_back(Perm::from_images(detail::point_array(val["element"], "generator " + name)));
                vertex.push_back(Perm::from_images(detail::point_array(val["vertex"], "generator " + name)));
            } else {
                throw InputError("generator " + name + " must be an image array or {element, vertex}");
            }
        }
        DerivationInput in;
        in.name = j.value("name", std::string("action"));
        in.ag = make_actioned_graph(std::move(X), carrier, faithful ? std::vector<Perm>{} : vertex, labels);
        std::optional<std::vector<Vertex>> reps;
        if (j.contains("orbit_reps")) reps = detail::point_array(j["orbit_reps"], "orbit_reps");
        in.sc = build_regular_scaffolding(in.ag, reps);
        if (j.contains("loops"))
            for (const auto& l : j["loops"]) in.loops.push_back(detail::point_array(l, "loop"));
        if (j.contains("stabilizers")) {
            for (const auto& s : j["stabilizers"]) {
                StabilizerPresentation sp;
                sp.vertex = s.at("vertex").get<Vertex>();
                for (const auto& [name, val] : s.at("generators").items()) {
                    sp.presentation.generators.push_back(name);
                    if (val.is_string()) {
                        auto w = parse_word(val.get<std::string>(), labels);
                        std::vector<ElementId> gens = in.ag.group.generators();
                        sp.images.push_back(evaluate_word(in.ag.group, w, gens, FiniteGroupTable::identity()));
                    } else {
                        auto p = Perm::from_images(detail::point_array(val, "stabilizer generator " + name));
                        auto x = in.ag.group.find(p);
                        if (!x) throw InputError("stabilizer generator " + name + " is not a group element");
                        sp.images.push_back(*x);
                    }
                }
                std::vector<std::string> rels;
                for (const auto& r : s.at("relators")) rels.push_back(r.get<std::string>());
                sp.presentation = parse_presentation(sp.presentation.generators, rels);
                in.stabilizers.push_back(sp);
            }
        }
        return complete_input(std::move(in), default_loops && !j.contains("loops"));
    } catch (const ordered_json::exception& e) {
        throw InputError(std::string("bad action description: ") + e.what());
    }
}

inline ordered_json derivation_input_to_json(const DerivationInput& in) {
    const auto& ag = in.ag;
    ordered_json j;
    j["name"] = in.name;
    j["vertices"] = ag.graph.vertex_count();
    j["edges"] = ordered_json::array();
    for (auto [u, v] : ag.graph.edges()) j["edges"].push_back({u, v});
    bool faithful = true;
    for (std::size_t i = 0; i < ag.group.generators().size(); ++i)
        if (ag.group.element(ag.group.generators()[i]) != ag.vertex_action[ag.group.generators()[i]]) faithful = false;
    j["generators"] = ordered_json::object();
    for (std::size_t i = 0; i < ag.group.generators().size(); ++i) {
        ElementId g = ag.group.generators()[i];
        auto el = ag.group.element(g).images();
        auto vx = ag.vertex_action[g].images();
        if (faithful)
            j["generators"][ag.generator_labels[i]] = std::vector<Point>(vx.begin(), vx.end());
        else
            j["generators"][ag.generator_labels[i]] = {{"element", std::vector<Point>(el.begin(), el.end())},
                                                      {"vertex", std::vector<Point>(vx.begin(), vx.end())}};
    }
    j["orbit_reps"] = in.sc.V;
    j["loops"] = in.loops;
    auto words = detail::shortest_words(ag.group);
    j["stabilizers"] = ordered_json::array();
    for (const auto& sp : in.stabilizers) {
        ordered_json s;
        s["vertex"] = sp.vertex;
        s["generators"] = ordered_json::object();
        for (std::size_t i = 0; i < sp.images.size(); ++i)
            s["generators"][sp.presentation.generators[i]] = format_word(words[sp.images[i]], ag.generator_labels);
        s["relators"] = ordered_json::array();
        for (const auto& r : sp.presentation.relators) s["relators"].push_back(format_word(r, sp.presentation.generators));
        j["stabilizers"].push_back(s);
    }
    return j;
}

inline ordered_json presentation_to_json(const Presentation& p) {
    ordered_json j;
    j["generators"] = p.generators;
    j["relators"] = ordered_json::array();
    for (const auto& r : p.relators) j["relators"].push_back(format_word(r, p.generators));
    return j;
}

inline Presentation presentation_from_json(const ordered_json& j) {
    try {
        const auto& pj = j.contains("presentation") ? j["presentation"] : j;
        std::vector<std::string> gens = pj.at("generators").get<std::vector<std::string>>();
        std::vector<std::string> rels = pj.at("relators").get<std::vector<std::string>>();
        return parse_presentation(gens, rels);
    } catch (const ordered_json::exception& e) {
        throw InputError(std::string("bad presentation: ") + e.what());
    }
}

inline ordered_json edge_json(OrientedEdge e) { return ordered_json::array({e.origin, e.target}); }

inline ordered_json scaffolding_to_json(const Scaffolding& sc) {
    ordered_json j;
    j["V"] = sc.V;
    auto edges = [](const std::vector<OrientedEdge>& es) {
        ordered_json a = ordered_json::array();
        for (auto& e : es) a.push_back(edge_json(e));
        return a;
    };
    j["tree_A"] = edges(sc.tree_A);
    j["E0"] = edges(sc.E0);
    j["E1"] = edges(sc.E1);
    j["transversals"] = ordered_json::array();
    for (auto& [e, T] : sc.transversals) j["transversals"].push_back({{"edge", edge_json(e)}, {"elements", T}});
    j["s"] = ordered_json::array();
    for (auto& [e, x] : sc.s) j["s"].push_back({{"edge", edge_json(e)}, {"element", x}});
    return j;
}

inline ordered_json derivation_to_json(const DerivationResult& r) {
    ordered_json j;
    j["presentation"] = presentation_to_json(r.presentation);
    j["families"] = ordered_json::array();
    for (auto f : r.families) j["families"].push_back(family_name(f));
    j["renaming"] = ordered_json::object();
    for (auto& [name, e] : r.renaming) j["renaming"][name] = edge_json(e);
    j["generator_images"] = r.images;
    j["relation_words"] = ordered_json::array();
    for (const auto& w : r.relation_words) j["relation_words"].push_back(w.empty() ? "" : format_relation_word(w));
    j["loops"] = r.closed_loops;
    return j;
}

inline ordered_json order_report_to_json(const OrderReport& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["group_order"] = r.group_order;
    j["enumerated_order"] = r.enumerated_order ? ordered_json(*r.enumerated_order) : ordered_json(nullptr);
    j["limit_hit"] = r.limit_hit;
    if (r.failing_relator) j["failing_relator"] = *r.failing_relator;
    if (!r.message.empty()) j["message"] = r.message;
    return j;
}

inline ordered_json covering_report_to_json(const CoveringReport& r) {
    ordered_json j;
    j["ok"] = r.ok;
    j["model_vertices"] = r.model_vertices;
    j["model_edges"] = r.model_edges;
    if (!r.ok) {
        j["defect"] = r.defect;
        j["witness"] = r.witness;
        j["message"] = r.message;
    }
    return j;
}

} // namespace actpres
