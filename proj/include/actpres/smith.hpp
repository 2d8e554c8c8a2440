#pragma once

#include <actpres/golden.hpp>
#include <actpres/presentation.hpp>

#include <vector>

namespace actpres {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Diagonal of the Smith normal form (non-negative, each dividing the
/// next), padded with zeros to min(rows, cols).
inline std::vector<BigInt> smith_diagonal(IntMatrix a, std::size_t cols) {
    const std::size_t rows = a.size();
    for (auto& r : a) r.resize(cols, 0);
    const std::size_t k = std::min(rows, cols);
    for (std::size_t t = 0; t < k; ++t) {
        while (true) {
            // pivot: least non-zero absolute value in the lower-right block
            std::size_t pi = rows, pj = cols;
            for (std::size_t i = t; i < rows; ++i)
                for (std::size_t j = t; j < cols; ++j)
                    if (a[i][j] != 0 && (pi == rows || abs(a[i][j]) < abs(a[pi][pj]))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == rows) goto done;
            std::swap(a[t], a[pi]);
            for (auto& r : a) std::swap(r[t], r[pj]);
            bool clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                BigInt q = a[i][t] / a[t][t];
                if (q != 0)
                    for (std::size_t j = t; j < cols; ++j) a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                BigInt q = a[t][j] / a[t][t];
                if (q != 0)
                    for (std::size_t i = t; i < rows; ++i) a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) clean = false;
            }
            if (!clean) continue;
            // divisibility of the remaining block
            bool divides = true;
            for (std::size_t i = t + 1; i < rows && divides; ++i)
                for (std::size_t j = t + 1; j < cols; ++j)
                    if (a[i][j] % a[t][t] != 0) {
                        for (std::size_t jj = t; jj < cols; ++jj) a[t][jj] += a[i][jj];
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
done:
    std::vector<BigInt> d(k, 0);
    for (std::size_t t = 0; t < k; ++t) d[t] = abs(a[t][t]);
    return d;
}

struct AbelianInvariants {
    std::vector<BigInt> diagonal;          // one entry per generator (0 = free factor)
    std::vector<BigInt> invariant_factors; // diagonal without the 1s
    bool trivial() const { return invariant_factors.empty(); }
};

/// Abelianization of a finite presentation from its exponent-sum matrix.
inline AbelianInvariants abelianization_smith(const Presentation& p) {
    const std::size_t n = p.generators.size();
    IntMatrix m;
    for (const auto& r : p.relators) {
        auto sums = exponent_sums(r, n);
        m.emplace_back(sums.begin(), sums.end());
    }
    AbelianInvariants a;
    a.diagonal = smith_diagonal(m, n);
    a.diagonal.resize(n, 0);
    for (const auto& d : a.diagonal)
        if (d != 1) a.invariant_factors.push_back(d);
    return a;
}

} // namespace actpres
