#pragma once

#include <actpres/presentation.hpp>

#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <vector>

namespace actpres {

/// Complete coset table: row c, column 2i is generator i, column 2i+1 its
/// inverse. Row 0 is the subgroup coset.
struct CosetTable {
    std::size_t generator_count = 0;
    std::vector<std::int32_t> table; // rows * columns
    std::size_t cosets = 0;
    std::size_t defined = 0; // cosets ever defined during enumeration

    std::size_t columns() const { return 2 * generator_count; }
    std::int32_t at(std::size_t c, std::size_t col) const { return table[c * columns() + col]; }
    static std::size_t column(const PresLetter& l) { return 2 * l.gen + (l.exp < 0 ? 1 : 0); }

    std::size_t trace(std::size_t c, const PresWord& w) const {
        for (const auto& l : w) c = static_cast<std::size_t>(at(c, column(l)));
        return c;
    }
};

namespace detail {

class HltEnumerator {
public:
    HltEnumerator(const Presentation& p, std::size_t limit) : ngen_(p.generators.size()), cols_(2 * ngen_), limit_(limit) {
        for (const auto& r : p.relators) {
            auto red = pres_cyclic_reduce(r);
            if (red.empty()) continue;
            std::vector<std::size_t> w;
            for (auto& l : red) w.push_back(CosetTable::column(l));
            rels_.push_back(std::move(w));
        }
        new_coset();
    }

    CosetTable run(const std::vector<PresWord>& subgroup) {
        for (const auto& h : subgroup) {
            std::vector<std::size_t> w;
            for (auto& l : pres_free_reduce(h)) w.push_back(CosetTable::column(l));
            if (!w.empty()) scan_and_fill(0, w);
        }
        for (std::size_t c = 0; c < p_.size(); ++c) {
            if (p_[c] != c) continue;
            for (const auto& r : rels_) {
                scan_and_fill(c, r);
                if (p_[c] != c) break;
            }
            if (p_[c] != c) continue;
            for (std::size_t x = 0; x < cols_; ++x)
                if (get(c, x) < 0) define(c, x);
        }
        return compact();
    }

private:
    std::size_t ngen_, cols_, limit_;
    std::vector<std::vector<std::size_t>> rels_;
    std::vector<std::int32_t> tab_;
    std::vector<std::size_t> p_; // union-find parent; p_[c] == c iff live
    std::deque<std::size_t> queue_;

    static std::size_t inv(std::size_t x) { return x ^ 1u; }
    std::int32_t get(std::size_t c, std::size_t x) const { return tab_[c * cols_ + x]; }
    void set(std::size_t c, std::size_t x, std::int64_t v) { tab_[c * cols_ + x] = static_cast<std::int32_t>(v); }

    std::size_t new_coset() {
        if (p_.size() >= limit_)
            throw LimitExceeded("coset enumeration exceeded " + std::to_string(limit_) + " cosets");
        std::size_t c = p_.size();
        p_.push_back(c);
        tab_.resize(tab_.size() + cols_, -1);
        return c;
    }

    void define(std::size_t c, std::size_t x) {
        std::size_t d = new_coset();
        set(c, x, static_cast<std::int64_t>(d));
        set(d, inv(x), static_cast<std::int64_t>(c));
    }

    std::size_t rep(std::size_t c) {
        std::size_t r = c;
        while (p_[r] != r) r = p_[r];
        while (p_[c] != r) {
            std::size_t n = p_[c];
            p_[c] = r;
            c = n;
        }
        return r;
    }

    void merge(std::size_t a, std::size_t b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        queue_.push_back(b);
    }

    void coincidence(std::size_t a, std::size_t b) {
        merge(a, b);
        while (!queue_.empty()) {
            std::size_t e = queue_.front();
            queue_.pop_front();
            for (std::size_t x = 0; x < cols_; ++x) {
                std::int32_t fv = get(e, x);
                if (fv < 0) continue;
                auto f = static_cast<std::size_t>(fv);
                set(f, inv(x), -1);
                std::size_t e1 = rep(e), f1 = rep(f);
                if (get(e1, x) >= 0)
                    merge(f1, static_cast<std::size_t>(get(e1, x)));
                else if (get(f1, inv(x)) >= 0)
                    merge(e1, static_cast<std::size_t>(get(f1, inv(x))));
                else {
                    set(e1, x, static_cast<std::int64_t>(f1));
                    set(f1, inv(x), static_cast<std::int64_t>(e1));
                }
            }
        }
    }

    void scan_and_fill(std::size_t c, const std::vector<std::size_t>& w) {
        std::size_t f = c, b = c;
        std::size_t i = 0, j = w.size(); // unscanned letters are w[i..j)
        while (true) {
            while (i < j && get(f, w[i]) >= 0) f = static_cast<std::size_t>(get(f, w[i++]));
            if (i == j) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (j > i && get(b, inv(w[j - 1])) >= 0) b = static_cast<std::size_t>(get(b, inv(w[--j])));
            if (j == i) {
                coincidence(f, b);
                return;
            }
            if (j == i + 1) {
                set(f, w[i], static_cast<std::int64_t>(b));
                set(b, inv(w[i]), static_cast<std::int64_t>(f));
                return;
            }
            define(f, w[i]);
        }
    }

    CosetTable compact() {
        std::vector<std::int64_t> newid(p_.size(), -1);
        std::size_t n = 0;
        for (std::size_t c = 0; c < p_.size(); ++c)
            if (p_[c] == c) newid[c] = static_cast<std::int64_t>(n++);
        CosetTable t;
        t.generator_count = ngen_;
        t.cosets = n;
        t.defined = p_.size();
        t.table.resize(n * cols_);
        for (std::size_t c = 0; c < p_.size(); ++c) {
            if (p_[c] != c) continue;
            for (std::size_t x = 0; x < cols_; ++x) {
                if (get(c, x) < 0) throw std::logic_error("coset table incomplete after enumeration");
                t.table[static_cast<std::size_t>(newid[c]) * cols_ + x] =
                    static_cast<std::int32_t>(newid[rep(static_cast<std::size_t>(get(c, x)))]);
            }
        }
        return t;
    }
};

} // namespace detail

/// Coset enumeration of the subgroup generated by `subgroup` (Hasler-Lewis
/// style relator scanning with coincidence processing). Cosets are defined
/// in order, filling the least undefined entry of the earliest live row.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<PresWord>& subgroup = {},
                               std::size_t limit = 1000000) {
    for (const auto& r : p.relators)
        for (const auto& l : r)
            if (l.gen >= p.generators.size()) throw InputError("relator references an undeclared generator");
    detail::HltEnumerator en(p, limit);
    return en.run(subgroup);
}

} // namespace actpres
