#pragma once

#include <actpres/todd_coxeter.hpp>

#include <optional>
#include <vector>

namespace actpres {

/// The group of a finite presentation, with elements = cosets of the
/// trivial subgroup. Element 0 is the identity.
class EnumeratedGroup {
public:
    explicit EnumeratedGroup(const Presentation& p, std::size_t limit = 1000000)
        : pres_(p), table_(todd_coxeter(p, {}, limit)) {
        const std::size_t n = table_.cosets;
        // shortest words by BFS over letters in column order
        words_.assign(n, {});
        std::vector<bool> seen(n, false);
        seen[0] = true;
        std::vector<std::size_t> queue{0};
        for (std::size_t i = 0; i < queue.size(); ++i) {
            std::size_t c = queue[i];
            for (std::size_t col = 0; col < table_.columns(); ++col) {
                auto d = static_cast<std::size_t>(table_.at(c, col));
                if (seen[d]) continue;
                seen[d] = true;
                words_[d] = words_[c];
                words_[d].push_back({static_cast<std::uint32_t>(col / 2), col % 2 ? -1 : 1});
                queue.push_back(d);
            }
        }
    }

    std::size_t order() const { return table_.cosets; }
    const CosetTable& table() const { return table_; }
    const Presentation& presentation() const { return pres_; }
    static constexpr std::size_t identity() { return 0; }

    std::size_t evaluate(const PresWord& w) const { return table_.trace(0, w); }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_.trace(a, words_[b]); }
    std::size_t inv(std::size_t a) const { return evaluate(pres_inverse(words_[a])); }
    std::size_t power(std::size_t a, long k) const {
        std::size_t base = k < 0 ? inv(a) : a, r = 0;
        for (long i = 0; i < std::abs(k); ++i) r = mul(r, base);
        return r;
    }
    std::size_t element_order(std::size_t a) const {
        std::size_t k = 1;
        for (std::size_t x = a; x != 0; x = mul(x, a)) ++k;
        return k;
    }
    std::size_t generator(std::size_t i) const { return static_cast<std::size_t>(table_.at(0, 2 * i)); }
    const PresWord& word(std::size_t a) const { return words_.at(a); }
    bool central(std::size_t a) const {
        for (std::size_t i = 0; i < pres_.generators.size(); ++i)
            if (mul(a, generator(i)) != mul(generator(i), a)) return false;
        return true;
    }

private:
    Presentation pres_;
    CosetTable table_;
    std::vector<PresWord> words_;
};

/// Evaluates w with generator i sent to images[i] through mul/inv of any
/// group-like object.
template <class Group, class Elem>
Elem evaluate_word(const Group& G, const PresWord& w, const std::vector<Elem>& images, Elem identity) {
    Elem r = identity;
    for (const auto& l : w) r = G.mul(r, l.exp > 0 ? images.at(l.gen) : G.inv(images.at(l.gen)));
    return r;
}

} // namespace actpres
