#pragma once

#include <actpres/enumerated_group.hpp>
#include <actpres/relations.hpp>

#include <map>
#include <queue>
#include <string>
#include <vector>

namespace actpres {

/// A presentation of G_v together with the element each generator names.
struct StabilizerPresentation {
    Vertex vertex = 0;
    Presentation presentation;
    std::vector<ElementId> images;
};

struct DerivationInput {
    std::string name;
    ActionedGraph ag;
    Scaffolding sc;
    std::vector<std::vector<Vertex>> loops;
    std::vector<StabilizerPresentation> stabilizers;                      // one per vertex of V, in V order
    std::map<OrientedEdge, std::vector<ElementId>> edge_stabilizer_gens; // H_e for e in E1
};

/// Presentation of a finite group read off a spanning tree of its Cayley
/// graph: relators w_x s w_{xs}^-1 for non-tree edges. `elements` must be a
/// subgroup of G generated by `gens`.
inline Presentation cayley_presentation(const FiniteGroupTable& G, const ElementSet& elements,
                                        const std::vector<ElementId>& gens, const std::vector<std::string>& names) {
    Presentation p;
    p.generators = names;
    std::map<ElementId, PresWord> word;
    std::map<std::pair<ElementId, std::size_t>, bool> tree_edge;
    word[0] = {};
    std::vector<ElementId> order{0};
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            ElementId y = G.mul(order[i], gens[j]);
            if (word.count(y)) continue;
            word[y] = word[order[i]];
            word[y].push_back({static_cast<std::uint32_t>(j), 1});
            tree_edge[{order[i], j}] = true;
            order.push_back(y);
        }
    if (order.size() != elements.size()) throw InputError("cayley_presentation: generators do not generate the subgroup");
    for (ElementId x : order)
        for (std::size_t j = 0; j < gens.size(); ++j) {
            if (tree_edge.count({x, j})) continue;
            PresWord r = word[x];
            r.push_back({static_cast<std::uint32_t>(j), 1});
            r = pres_free_reduce(pres_concat(r, pres_inverse(word[G.mul(x, gens[j])])));
            if (!r.empty()) p.relators.push_back(r);
        }
    return p;
}

/// Greedy generating set of G_v (least indices first) and the Cayley
/// presentation on it. Generator names are prefix + index.
inline StabilizerPresentation default_stabilizer_presentation(const ActionedGraph& ag, Vertex v, const std::string& prefix) {
    auto Gv = stabilizer(ag, v);
    std::vector<ElementId> gens;
    ElementSet span{0};
    for (ElementId x : Gv)
        if (!std::binary_search(span.begin(), span.end(), x)) {
            gens.push_back(x);
            span = subgroup_closure(ag.group, gens);
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < gens.size(); ++i) names.push_back(prefix + std::to_string(i + 1));
    StabilizerPresentation sp;
    sp.vertex = v;
    sp.presentation = cayley_presentation(ag.group, Gv, gens, names);
    sp.images = gens;
    return sp;
}

/// H_e: stabilizer generators already lying in G_e, then least-index
/// elements of G_e until it is generated.
inline std::vector<ElementId> default_edge_stabilizer_generators(const ActionedGraph& ag, OrientedEdge e,
                                                                 const StabilizerPresentation& sp) {
    auto Ge = edge_stabilizer(ag, e);
    std::vector<ElementId> gens;
    ElementSet span{0};
    auto consider = [&](ElementId x) {
        if (std::binary_search(Ge.begin(), Ge.end(), x) && !std::binary_search(span.begin(), span.end(), x)) {
            gens.push_back(x);
            span = subgroup_closure(ag.group, gens);
        }
    };
    for (ElementId x : sp.images) consider(x);
    for (ElementId x : Ge) consider(x);
    return gens;
}

/// Fundamental cycles of the BFS spanning tree of X rooted at `root`, one
/// loop per non-tree edge, in edge order.
inline std::vector<std::vector<Vertex>> fundamental_cycle_loops(const Graph& X, Vertex root) {
    const std::size_t n = X.vertex_count();
    std::vector<std::int64_t> parent(n, -1);
    std::vector<bool> seen(n, false);
    std::vector<Vertex> order{root};
    seen[root] = true;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (Vertex w : X.neighbors(order[i]))
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = order[i];
                order.push_back(w);
            }
    auto path_from_root = [&](Vertex x) {
        std::vector<Vertex> p;
        for (std::int64_t y = x; y >= 0; y = parent[static_cast<std::size_t>(y)]) p.push_back(static_cast<Vertex>(y));
        std::reverse(p.begin(), p.end());
        return p;
    };
    std::vector<std::vector<Vertex>> loops;
    for (auto [u, w] : X.edges()) {
        if (parent[w] == static_cast<std::int64_t>(u) || parent[u] == static_cast<std::int64_t>(w)) continue;
        auto pu = path_from_root(u), pw = path_from_root(w);
        std::vector<Vertex> loop = pu;
        for (auto it = pw.rbegin(); it != pw.rend(); ++it) loop.push_back(*it);
        loops.push_back(loop);
    }
    return loops;
}

/// Path in A between two vertices of V.
inline std::vector<Vertex> tree_path(const Scaffolding& sc, Vertex from, Vertex to) {
    std::map<Vertex, Vertex> parent;
    std::vector<Vertex> order{from};
    parent[from] = from;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (const auto& e : sc.tree_A)
            if (e.origin == order[i] && !parent.count(e.target)) {
                parent[e.target] = e.origin;
                order.push_back(e.target);
            }
    if (!parent.count(to)) throw InputError("no path in A between " + std::to_string(from) + " and " + std::to_string(to));
    std::vector<Vertex> p{to};
    while (p.back() != from) p.push_back(parent[p.back()]);
    std::reverse(p.begin(), p.end());
    return p;
}

/// Closure of pseudo-loops: a path q from w0 to wm (both in V) becomes
/// r q where r runs in A from wm to w0.
inline std::vector<std::vector<Vertex>> close_pseudo_loops(const std::vector<std::vector<Vertex>>& loops,
                                                           const Scaffolding& sc) {
    std::vector<std::vector<Vertex>> out;
    for (const auto& q : loops) {
        if (q.empty()) throw InputError("empty loop");
        if (!sc.in_V(q.front()) || !sc.in_V(q.back())) throw InputError("pseudo-loop endpoint not in V");
        if (q.front() == q.back()) {
            out.push_back(q);
            continue;
        }
        auto r = tree_path(sc, q.back(), q.front());
        std::vector<Vertex> p = r;
        p.insert(p.end(), q.begin() + 1, q.end());
        out.push_back(p);
    }
    return out;
}

/// Checks the hypotheses: action valid, scaffolding regular, each stabilizer
/// presentation presents G_v through its images, each H_e generates G_e.
inline void validate_derivation_input(const DerivationInput& in) {
    auto ar = validate_action(in.ag, !in.sc.transitive());
    if (!ar.ok) throw InputError("invalid action: " + ar.message);
    auto rr = validate_regularity(in.sc, in.ag);
    if (!rr.ok) throw InputError("scaffolding not regular, condition (" + rr.condition + "): " + rr.message);
    if (in.stabilizers.size() != in.sc.V.size()) throw InputError("need one stabilizer presentation per orbit representative");
    std::set<std::string> names;
    for (std::size_t i = 0; i < in.stabilizers.size(); ++i) {
        const auto& sp = in.stabilizers[i];
        if (sp.vertex != in.sc.V[i]) throw InputError("stabilizer presentations must follow the order of V");
        if (sp.images.size() != sp.presentation.generators.size())
            throw InputError("stabilizer presentation: image count mismatch");
        for (auto& g : sp.presentation.generators) {
            if (g.rfind("g[", 0) == 0) throw InputError("stabilizer generator names may not start with 'g['");
            if (!names.insert(g).second) throw InputError("duplicate stabilizer generator name '" + g + "'");
        }
        auto Gv = stabilizer(in.ag, sp.vertex);
        for (ElementId x : sp.images)
            if (!std::binary_search(Gv.begin(), Gv.end(), x))
                throw InputError("stabilizer generator image does not fix vertex " + std::to_string(sp.vertex));
        if (subgroup_closure(in.ag.group, sp.images) != Gv)
            throw InputError("stabilizer generators do not generate G_" + std::to_string(sp.vertex));
        for (const auto& r : sp.presentation.relators)
            if (evaluate_word(in.ag.group, r, sp.images, FiniteGroupTable::identity()) != FiniteGroupTable::identity())
                throw InputError("stabilizer relator does not hold in G: " + format_word(r, sp.presentation.generators));
        if (todd_coxeter(sp.presentation, {}, 100000).cosets != Gv.size())
            throw InputError("stabilizer presentation does not present G_" + std::to_string(sp.vertex));
    }
    for (const auto& e : in.sc.E1) {
        auto it = in.edge_stabilizer_gens.find(e);
        if (it == in.edge_stabilizer_gens.end()) throw InputError("missing generators of G_e for (" + e.str() + ")");
        if (subgroup_closure(in.ag.group, it->second) != edge_stabilizer(in.ag, e))
            throw InputError("given elements do not generate G_e for (" + e.str() + ")");
    }
}

/// Fills loops (fundamental cycles), stabilizer presentations and H_e with
/// defaults where the caller left them empty.
inline DerivationInput complete_input(DerivationInput in, bool default_loops = true) {
    if (in.loops.empty() && default_loops) in.loops = fundamental_cycle_loops(in.ag.graph, in.sc.base());
    if (in.stabilizers.empty())
        for (std::size_t i = 0; i < in.sc.V.size(); ++i) {
            std::string prefix = in.sc.transitive() ? "h" : "h" + std::to_string(in.sc.V[i]) + "_";
            in.stabilizers.push_back(default_stabilizer_presentation(in.ag, in.sc.V[i], prefix));
        }
    for (const auto& e : in.sc.E1)
        if (!in.edge_stabilizer_gens.count(e)) {
            std::size_t vi = std::find(in.sc.V.begin(), in.sc.V.end(), e.origin) - in.sc.V.begin();
            in.edge_stabilizer_gens[e] = default_edge_stabilizer_generators(in.ag, e, in.stabilizers.at(vi));
        }
    return in;
}

/// Turns relation-level words into presentation words: g_e (e in E1) is
/// the generator g[k], a stabilizer element is its shortest word in the
/// owner's presentation (letters in the order g1, g1^-1, g2, ...).
class WordTranslator {
public:
    explicit WordTranslator(const DerivationInput& in) : in_(&in) {
        std::uint32_t next = 0;
        for (const auto& sp : in.stabilizers) {
            std::uint32_t offset = next;
            for (std::size_t i = 0; i < sp.presentation.generators.size(); ++i) {
                names_.push_back(sp.presentation.generators[i]);
                images_.push_back(sp.images[i]);
                ++next;
            }
            auto& words = stab_words_[sp.vertex];
            words[0] = {};
            std::vector<ElementId> order{0};
            for (std::size_t i = 0; i < order.size(); ++i)
                for (std::size_t j = 0; j < sp.images.size(); ++j)
                    for (int sgn : {1, -1}) {
                        ElementId x = sgn > 0 ? sp.images[j] : in.ag.group.inv(sp.images[j]);
                        ElementId y = in.ag.group.mul(order[i], x);
                        if (words.count(y)) continue;
                        words[y] = words[order[i]];
                        words[y].push_back({static_cast<std::uint32_t>(offset + j), sgn});
                        order.push_back(y);
                    }
        }
        for (std::size_t k = 0; k < in.sc.E1.size(); ++k) {
            edge_gen_[in.sc.E1[k]] = next++;
            names_.push_back("g[" + std::to_string(k) + "]");
            images_.push_back(in.sc.s_of(in.sc.E1[k]));
        }
    }

    const std::vector<std::string>& generator_names() const { return names_; }
    const std::vector<ElementId>& generator_images() const { return images_; }
    std::size_t stabilizer_generator_count() const { return names_.size() - in_->sc.E1.size(); }

    PresWord translate(const Word& w) const {
        PresWord out;
        for (const auto& l : w) {
            if (l.kind == Letter::Kind::Edge) {
                auto it = edge_gen_.find(l.edge);
                if (it == edge_gen_.end()) throw InputError("edge letter g[" + l.edge.str() + "] is not an E1 generator");
                out.push_back({it->second, l.sign});
            } else {
                ElementId x = l.sign > 0 ? l.element : in_->ag.group.inv(l.element);
                auto& words = stab_words_.at(l.owner);
                auto it = words.find(x);
                if (it == words.end()) throw InputError("stabilizer element outside G_v");
                out = pres_concat(out, it->second);
            }
        }
        return pres_free_reduce(out);
    }

    // Presentation word for g_d, any d in E.
    PresWord edge_word(OrientedEdge d) const {
        return translate(rewrite_word_to_E1(Word{Letter::gen(d)}, in_->ag, in_->sc));
    }

private:
    const DerivationInput* in_;
    std::vector<std::string> names_;
    std::vector<ElementId> images_;
    std::map<Vertex, std::map<ElementId, PresWord>> stab_words_;
    std::map<OrientedEdge, std::uint32_t> edge_gen_;
};

enum class RelatorFamily { Stabilizer, Edge, EdgeLoop, Loop, Tautological };

inline const char* family_name(RelatorFamily f) {
    switch (f) {
    case RelatorFamily::Stabilizer: return "stabilizer";
    case RelatorFamily::Edge: return "edge";
    case RelatorFamily::EdgeLoop: return "edge-loop";
    case RelatorFamily::Loop: return "loop";
    case RelatorFamily::Tautological: return "tautological";
    }
    return "?";
}

struct DerivationResult {
    Presentation presentation;
    std::vector<ElementId> images;                    // generator -> element of G
    std::vector<RelatorFamily> families;              // per relator
    std::vector<Word> relation_words;                 // per relator, over E1 and stabilizer letters (empty for stabilizer family)
    std::vector<std::pair<std::string, OrientedEdge>> renaming; // g[k] -> edge of E1
    std::vector<std::vector<Vertex>> closed_loops;

    std::size_t count(RelatorFamily f) const { return static_cast<std::size_t>(std::count(families.begin(), families.end(), f)); }
};

/// Stabilizer generators and relators, then g[k] for E1 with relators
/// (E) for E1 x H_e, (EL) for invertible E1 edges, (L) for the closed
/// loops rewritten over E1, (T) for A-edges in E1.
inline DerivationResult derive_presentation(const DerivationInput& in) {
    validate_derivation_input(in);
    const auto& ag = in.ag;
    const auto& sc = in.sc;
    WordTranslator tr(in);
    DerivationResult res;
    res.presentation.generators = tr.generator_names();
    res.images = tr.generator_images();

    std::uint32_t offset = 0;
    for (const auto& sp : in.stabilizers) {
        for (const auto& r : sp.presentation.relators) {
            PresWord w;
            for (auto l : r) w.push_back({l.gen + offset, l.exp});
            res.presentation.relators.push_back(w);
            res.families.push_back(RelatorFamily::Stabilizer);
            res.relation_words.push_back({});
        }
        offset += static_cast<std::uint32_t>(sp.presentation.generators.size());
    }
    auto emit = [&](const Word& rel, RelatorFamily fam) {
        if (evaluate_word_in_G(rel, ag, sc) != FiniteGroupTable::identity())
            throw VerificationError(std::string(family_name(fam)) + " relator does not hold in G");
        Word over_e1 = rewrite_word_to_E1(rel, ag, sc);
        res.presentation.relators.push_back(tr.translate(over_e1));
        res.families.push_back(fam);
        res.relation_words.push_back(over_e1);
    };
    for (const auto& e : sc.E1)
        for (ElementId t : in.edge_stabilizer_gens.at(e)) emit(edge_relation(e, t, ag, sc).relator, RelatorFamily::Edge);
    for (const auto& e : sc.E1)
        if (find_inversion(ag, e)) emit(edge_loop_relation(e, ag, sc), RelatorFamily::EdgeLoop);
    res.closed_loops = close_pseudo_loops(in.loops, sc);
    for (const auto& l : res.closed_loops) emit(loop_relation(l, ag, sc), RelatorFamily::Loop);
    for (const auto& e : sc.E1)
        if (sc.in_A(e)) emit(tautological_relation(e, sc), RelatorFamily::Tautological);
    for (std::size_t k = 0; k < sc.E1.size(); ++k) res.renaming.push_back({"g[" + std::to_string(k) + "]", sc.E1[k]});
    return res;
}

/// Renames generators (e.g. g[0] -> g) without touching relators.
inline Presentation rename_generators(Presentation p, const std::map<std::string, std::string>& names) {
    for (auto& g : p.generators)
        if (auto it = names.find(g); it != names.end()) g = it->second;
    return p;
}

} // namespace actpres
