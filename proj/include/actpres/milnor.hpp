#pragma once

#include <actpres/golden.hpp>

#include <vector>

namespace actpres {

struct MilnorReport {
    bool ok = false;
    GoldenQuat product;
};

/// The product a b c of three rotations must be exactly -1.
inline MilnorReport milnor_product_check(const GoldenQuat& a, const GoldenQuat& b, const GoldenQuat& c) {
    MilnorReport r;
    r.product = a * b * c;
    r.ok = r.product == GoldenQuat::minus_one();
    return r;
}

inline GoldenQuat quat_pow(const GoldenQuat& q, unsigned k) {
    GoldenQuat r = GoldenQuat::one();
    for (unsigned i = 0; i < k; ++i) r = r * q;
    return r;
}

} // namespace actpres
