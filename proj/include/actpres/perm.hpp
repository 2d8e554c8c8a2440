#pragma once

#include <actpres/error.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace actpres {

using Point = std::uint32_t;

/// A bijection of {0..n-1}, stored as its image sequence.
class Perm {
public:
    Perm() = default;

    static Perm identity(std::size_t n) {
        Perm p;
        p.images_.resize(n);
        for (std::size_t i = 0; i < n; ++i) p.images_[i] = static_cast<Point>(i);
        return p;
    }

    static Perm from_images(std::vector<Point> images) {
        std::vector<bool> seen(images.size(), false);
        for (Point x : images) {
            if (x >= images.size() || seen[x])
                throw InputError("image sequence is not a bijection of {0.." +
                                 std::to_string(images.size()) + "-1}");
            seen[x] = true;
        }
        Perm p;
        p.images_ = std::move(images);
        return p;
    }

    // 0-indexed cycles, e.g. {{0,1,2}} sends 0->1->2->0.
    static Perm from_cycles(std::size_t n, std::initializer_list<std::initializer_list<Point>> cycles) {
        std::vector<Point> img(n);
        for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<Point>(i);
        for (auto& c : cycles) {
            std::vector<Point> cyc(c);
            for (std::size_t i = 0; i < cyc.size(); ++i) {
                if (cyc[i] >= n) throw InputError("cycle point out of range");
                img[cyc[i]] = cyc[(i + 1) % cyc.size()];
            }
        }
        return from_images(std::move(img));
    }

    std::size_t degree() const { return images_.size(); }
    Point operator()(Point i) const { return images_[i]; }
    std::span<const Point> images() const { return images_; }

    Perm inverse() const {
        Perm r;
        r.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
        return r;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // Number of points moved.
    std::size_t support_size() const {
        std::size_t k = 0;
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) ++k;
        return k;
    }

    friend bool operator==(const Perm&, const Perm&) = default;
    friend auto operator<=>(const Perm&, const Perm&) = default;

private:
    std::vector<Point> images_;
};

/// (p o q)(i) = p(q(i)): q acts first.
inline Perm perm_compose(const Perm& p, const Perm& q) {
    if (p.degree() != q.degree())
        throw InputError("perm_compose: degree mismatch (" + std::to_string(p.degree()) + " vs " +
                         std::to_string(q.degree()) + ")");
    std::vector<Point> img(p.degree());
    for (std::size_t i = 0; i < img.size(); ++i) img[i] = p(q(static_cast<Point>(i)));
    return Perm::from_images(std::move(img));
}

inline Perm operator*(const Perm& p, const Perm& q) { return perm_compose(p, q); }

struct PermHash {
    std::size_t operator()(const Perm& p) const noexcept {
        // FNV-1a over the image sequence
        std::uint64_t h = 1469598103934665603ull;
        for (Point x : p.images()) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

} // namespace actpres
