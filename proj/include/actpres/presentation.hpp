#pragma once

#include <actpres/error.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

namespace actpres {

struct PresLetter {
    std::uint32_t gen = 0;
    int exp = 1; // +1 or -1
    friend auto operator<=>(const PresLetter&, const PresLetter&) = default;
};

using PresWord = std::vector<PresLetter>;

/// Finite presentation: generator names and relator words over them.
struct Presentation {
    std::vector<std::string> generators;
    std::vector<PresWord> relators;

    std::optional<std::uint32_t> generator_index(const std::string& name) const {
        for (std::size_t i = 0; i < generators.size(); ++i)
            if (generators[i] == name) return static_cast<std::uint32_t>(i);
        return std::nullopt;
    }
};

inline PresWord pres_inverse(const PresWord& w) {
    PresWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.exp = -l.exp;
    return r;
}

inline PresWord pres_concat(PresWord a, const PresWord& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

inline PresWord pres_power(const PresWord& w, int k) {
    PresWord base = k < 0 ? pres_inverse(w) : w, r;
    for (int i = 0; i < std::abs(k); ++i) r = pres_concat(r, base);
    return r;
}

inline PresWord pres_free_reduce(const PresWord& w) {
    PresWord out;
    for (auto l : w) {
        if (!out.empty() && out.back().gen == l.gen && out.back().exp == -l.exp)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

inline PresWord pres_cyclic_reduce(PresWord w) {
    w = pres_free_reduce(w);
    std::size_t i = 0, j = w.size();
    while (j - i >= 2 && w[i].gen == w[j - 1].gen && w[i].exp == -w[j - 1].exp) {
        ++i;
        --j;
    }
    return PresWord(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(j));
}

/// Space separated tokens: name, name^-1, name^k; "1" is the empty word.
inline std::string format_word(const PresWord& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += names.at(l.gen);
        if (l.exp < 0) s += "^-1";
    }
    return s;
}

inline PresWord parse_word(const std::string& text, const std::vector<std::string>& names) {
    std::istringstream is(text);
    std::string tok;
    PresWord w;
    while (is >> tok) {
        if (tok == "1") continue;
        std::string name = tok;
        long k = 1;
        if (auto caret = tok.rfind('^'); caret != std::string::npos && tok.find(']', caret) == std::string::npos) {
            name = tok.substr(0, caret);
            std::string e = tok.substr(caret + 1);
            try {
                std::size_t used = 0;
                k = std::stol(e, &used);
                if (used != e.size()) throw std::invalid_argument(e);
            } catch (const std::exception&) {
                throw InputError("bad exponent in token '" + tok + "'");
            }
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end()) throw InputError("unknown generator '" + name + "'");
        auto g = static_cast<std::uint32_t>(it - names.begin());
        for (long i = 0; i < std::abs(k); ++i) w.push_back({g, k < 0 ? -1 : 1});
    }
    return w;
}

inline Presentation parse_presentation(const std::vector<std::string>& generators,
                                       const std::vector<std::string>& relators) {
    Presentation p;
    p.generators = generators;
    for (const auto& r : relators) p.relators.push_back(parse_word(r, generators));
    return p;
}

// Exponent sums per generator.
inline std::vector<long> exponent_sums(const PresWord& w, std::size_t ngens) {
    std::vector<long> v(ngens, 0);
    for (const auto& l : w) v.at(l.gen) += l.exp;
    return v;
}

/// Canonical form used to compare relator sets up to the obvious Tietze
/// moves: a relator x^n fixes the order of x, exponents of such x are
/// reduced into (-n/2, n/2], then the word is freely and cyclically reduced and
/// the least rotation of it or its inverse is taken. Letters are compared by
/// generator name, so renaming generators is done through `names`.
class RelatorNormalizer {
public:
    struct Syllable {
        std::string gen;
        long exp;
        // by generator, then |exp|, positive before negative
        friend auto operator<=>(const Syllable& x, const Syllable& y) {
            auto key = [](const Syllable& s) { return std::tuple(s.gen, std::labs(s.exp), s.exp < 0); };
            return key(x) <=> key(y);
        }
        friend bool operator==(const Syllable&, const Syllable&) = default;
    };
    using Form = std::vector<Syllable>;

    explicit RelatorNormalizer(const Presentation& p, std::vector<std::string> names = {})
        : names_(names.empty() ? p.generators : std::move(names)) {
        for (const auto& r : p.relators) {
            auto red = pres_cyclic_reduce(r);
            if (red.empty()) continue;
            bool single = std::all_of(red.begin(), red.end(), [&](auto& l) { return l.gen == red[0].gen; });
            if (single) {
                long n = static_cast<long>(red.size());
                auto& cur = power_[red[0].gen];
                cur = cur == 0 ? n : std::gcd(cur, n);
            }
        }
    }

    Form canonical(const PresWord& w) const {
        auto red = pres_cyclic_reduce(w);
        if (!red.empty() && std::all_of(red.begin(), red.end(), [&](auto& l) { return l.gen == red[0].gen; }))
            return {{names_.at(red[0].gen), static_cast<long>(red.size())}};
        Form a = reduce(syllables(w));
        Form b = reduce(syllables(pres_inverse(w)));
        Form best = least_rotation(a), other = least_rotation(b);
        return std::min(best, other);
    }

    std::vector<Form> canonical_all(const Presentation& p) const {
        std::vector<Form> out;
        for (const auto& r : p.relators) {
            auto f = canonical(r);
            if (!f.empty()) out.push_back(f);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    static std::string format(const Form& f) {
        if (f.empty()) return "1";
        std::string s;
        for (auto& [g, e] : f) {
            if (!s.empty()) s += ' ';
            s += g;
            if (e != 1) s += "^" + std::to_string(e);
        }
        return s;
    }

private:
    std::vector<std::string> names_;
    std::map<std::uint32_t, long> power_;

    std::vector<std::pair<std::uint32_t, long>> syllables(const PresWord& w) const {
        std::vector<std::pair<std::uint32_t, long>> s;
        for (auto l : w) {
            if (!s.empty() && s.back().first == l.gen)
                s.back().second += l.exp;
            else
                s.push_back({l.gen, l.exp});
        }
        return s;
    }

    Form reduce(std::vector<std::pair<std::uint32_t, long>> s) const {
        // normalize exponents and merge until stable, treating the word cyclically
        bool changed = true;
        while (changed) {
            changed = false;
            std::vector<std::pair<std::uint32_t, long>> t;
            for (auto [g, e] : s) {
                if (auto it = power_.find(g); it != power_.end()) {
                    const long n = it->second;
                    e = ((e % n) + n) % n;
                    if (2 * e > n) e -= n;
                }
                if (e == 0) {
                    changed = true;
                    continue;
                }
                if (!t.empty() && t.back().first == g) {
                    t.back().second += e;
                    changed = true;
                    continue;
                }
                t.push_back({g, e});
            }
            if (t.size() >= 2 && t.front().first == t.back().first) {
                t.front().second += t.back().second;
                t.pop_back();
                changed = true;
            }
            s = std::move(t);
        }
        Form f;
        for (auto [g, e] : s) f.push_back({names_.at(g), e});
        return f;
    }

    static Form least_rotation(const Form& f) {
        Form best = f;
        for (std::size_t i = 1; i < f.size(); ++i) {
            Form r(f.begin() + static_cast<long>(i), f.end());
            r.insert(r.end(), f.begin(), f.begin() + static_cast<long>(i));
            best = std::min(best, r);
        }
        return best;
    }
};

} // namespace actpres
