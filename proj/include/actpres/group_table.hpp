#pragma once

#include <actpres/perm.hpp>

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace actpres {

using ElementId = std::uint32_t;
using ElementSet = std::vector<ElementId>; // sorted, duplicate free

/// A finite permutation group with elements numbered in BFS order from the
/// identity (element 0). Multiplication follows perm_compose.
class FiniteGroupTable {
public:
    // Tables up to this order keep a dense multiplication table.
    static constexpr std::size_t dense_limit = 4096;

    FiniteGroupTable() = default;

    std::size_t order() const { return elements_.size(); }
    std::size_t degree() const { return elements_.empty() ? 0 : elements_[0].degree(); }
    static constexpr ElementId identity() { return 0; }

    const Perm& element(ElementId a) const { return elements_.at(a); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<ElementId>& generators() const { return generators_; }

    ElementId mul(ElementId a, ElementId b) const {
        if (!mul_.empty()) return mul_[static_cast<std::size_t>(a) * order() + b];
        return index_.at(elements_[a] * elements_[b]);
    }
    ElementId inv(ElementId a) const { return inv_.at(a); }

    std::optional<ElementId> find(const Perm& p) const {
        auto it = index_.find(p);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    ElementId power(ElementId a, long long k) const {
        if (k < 0) {
            a = inv(a);
            k = -k;
        }
        ElementId r = identity();
        for (long long i = 0; i < k; ++i) r = mul(r, a);
        return r;
    }

    std::size_t element_order(ElementId a) const {
        std::size_t k = 1;
        for (ElementId x = a; x != identity(); x = mul(x, a)) ++k;
        return k;
    }

    // BFS tree: element = parent * generator; root has no parent.
    std::optional<std::pair<ElementId, std::size_t>> bfs_parent(ElementId a) const {
        if (a == 0) return std::nullopt;
        return std::pair{parent_[a], parent_gen_[a]};
    }

    friend FiniteGroupTable generate_closure(std::span<const Perm> gens, std::size_t limit);

private:
    std::vector<Perm> elements_;
    std::unordered_map<Perm, ElementId, PermHash> index_;
    std::vector<ElementId> mul_;
    std::vector<ElementId> inv_;
    std::vector<ElementId> generators_;
    std::vector<ElementId> parent_;
    std::vector<std::size_t> parent_gen_;
};

/// Breadth-first closure. Elements are discovered as x * g for x in
/// discovery order and g in generator order.
inline FiniteGroupTable generate_closure(std::span<const Perm> gens, std::size_t limit = 100000) {
    if (gens.empty()) throw InputError("generate_closure: empty generator list");
    const std::size_t n = gens[0].degree();
    for (auto& g : gens)
        if (g.degree() != n) throw InputError("generate_closure: generators of unequal degree");

    FiniteGroupTable t;
    auto add = [&](Perm p, ElementId parent, std::size_t gen) -> ElementId {
        auto [it, fresh] = t.index_.emplace(p, static_cast<ElementId>(t.elements_.size()));
        if (fresh) {
            if (t.elements_.size() >= limit)
                throw LimitExceeded("group closure exceeded " + std::to_string(limit) + " elements");
            t.elements_.push_back(std::move(p));
            t.parent_.push_back(parent);
            t.parent_gen_.push_back(gen);
        }
        return it->second;
    };
    add(Perm::identity(n), 0, 0);
    for (std::size_t i = 0; i < t.elements_.size(); ++i)
        for (std::size_t j = 0; j < gens.size(); ++j) add(t.elements_[i] * gens[j], static_cast<ElementId>(i), j);

    for (auto& g : gens) t.generators_.push_back(t.index_.at(g));

    const std::size_t ord = t.elements_.size();
    t.inv_.resize(ord);
    for (std::size_t i = 0; i < ord; ++i) t.inv_[i] = t.index_.at(t.elements_[i].inverse());
    if (ord <= FiniteGroupTable::dense_limit) {
        t.mul_.resize(ord * ord);
        for (std::size_t a = 0; a < ord; ++a)
            for (std::size_t b = 0; b < ord; ++b)
                t.mul_[a * ord + b] = t.index_.at(t.elements_[a] * t.elements_[b]);
    }
    return t;
}

inline FiniteGroupTable generate_closure(const std::vector<Perm>& gens, std::size_t limit = 100000) {
    return generate_closure(std::span<const Perm>(gens), limit);
}

/// Subgroup generated by the given elements, as a sorted set.
inline ElementSet subgroup_closure(const FiniteGroupTable& t, std::span<const ElementId> gens) {
    std::vector<bool> in(t.order(), false);
    ElementSet out{FiniteGroupTable::identity()};
    in[0] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (ElementId g : gens) {
            ElementId x = t.mul(out[i], g);
            if (!in[x]) {
                in[x] = true;
                out.push_back(x);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_subgroup(const FiniteGroupTable& t, std::span<const ElementId> set) {
    std::vector<bool> in(t.order(), false);
    for (ElementId a : set) in.at(a) = true;
    if (set.empty() || !in[0]) return false;
    for (ElementId a : set)
        for (ElementId b : set)
            if (!in[t.mul(a, b)]) return false;
    return true;
}

/// One representative for each left coset xH, x ranging over `ambient`
/// (the whole group when empty). Within a coset the representative moving
/// the fewest points wins, ties going to the smaller index; so the identity
/// represents H itself. Output is sorted by representative index.
inline std::vector<ElementId> left_cosets(const FiniteGroupTable& t, std::span<const ElementId> subgroup,
                                          std::span<const ElementId> ambient = {}) {
    if (!is_subgroup(t, subgroup)) throw InputError("left_cosets: subgroup is not closed");
    std::vector<ElementId> amb;
    if (ambient.empty()) {
        amb.resize(t.order());
        for (std::size_t i = 0; i < amb.size(); ++i) amb[i] = static_cast<ElementId>(i);
    } else {
        amb.assign(ambient.begin(), ambient.end());
    }
    std::vector<bool> covered(t.order(), false);
    std::vector<ElementId> reps;
    for (ElementId x : amb) {
        if (covered[x]) continue;
        ElementId best = x;
        for (ElementId h : subgroup) {
            ElementId y = t.mul(x, h);
            covered[y] = true;
            auto sy = t.element(y).support_size(), sb = t.element(best).support_size();
            if (sy < sb || (sy == sb && y < best)) best = y;
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

} // namespace actpres
