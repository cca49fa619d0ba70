#pragma once

// Cohomological weights (k1, k2; c1, c2) and the nine interpolation regions.

#include "errors.hpp"

#include <array>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

namespace ggp {

struct Weights {
    long k1, k2, c1, c2;

    Weights(long k1_, long k2_, long c1_, long c2_) : k1(k1_), k2(k2_), c1(c1_), c2(c2_) {
        if (!(k1 >= k2 && k2 >= 2)) throw range_violation("need k1 >= k2 >= 2");
        if (!(c1 >= 1 && c2 >= 1)) throw range_violation("need c1, c2 >= 1");
        if (((k1 + k2 + c1 + c2) % 2) != 0)
            throw parity_violation("need c1 + c2 = k1 + k2 mod 2");
    }

    /// Motivic weight bound: the half-sum (k1 + k2 + c1 + c2 - 6) / 2.
    long w() const { return (k1 + k2 + c1 + c2 - 6) / 2; }

    /// Hodge invariant t = (k1 - k2 - c1 - c2 + 2) / 2; t >= 0 iff region f.
    long t() const { return (k1 - k2 - c1 - c2 + 2) / 2; }
};

enum class RegionLabel { a, a_prime, b, b_prime, c, d, d_prime, e, f };

inline const std::array<RegionLabel, 9>& all_regions() {
    static const std::array<RegionLabel, 9> r = {
        RegionLabel::a, RegionLabel::a_prime, RegionLabel::b,
        RegionLabel::b_prime, RegionLabel::c, RegionLabel::d,
        RegionLabel::d_prime, RegionLabel::e, RegionLabel::f};
    return r;
}

inline std::string region_name(RegionLabel r) {
    switch (r) {
        case RegionLabel::a: return "a";
        case RegionLabel::a_prime: return "a'";
        case RegionLabel::b: return "b";
        case RegionLabel::b_prime: return "b'";
        case RegionLabel::c: return "c";
        case RegionLabel::d: return "d";
        case RegionLabel::d_prime: return "d'";
        case RegionLabel::e: return "e";
        case RegionLabel::f: return "f";
    }
    std::abort();
}

inline RegionLabel region_from_name(const std::string& s) {
    for (RegionLabel r : all_regions())
        if (region_name(r) == s) return r;
    throw validation_error("unknown region '" + s + "'");
}

/// Swapping the two GL2 factors: a<->a', b<->b', d<->d'; c, e, f fixed.
inline RegionLabel mirror_label(RegionLabel r) {
    switch (r) {
        case RegionLabel::a: return RegionLabel::a_prime;
        case RegionLabel::a_prime: return RegionLabel::a;
        case RegionLabel::b: return RegionLabel::b_prime;
        case RegionLabel::b_prime: return RegionLabel::b;
        case RegionLabel::d: return RegionLabel::d_prime;
        case RegionLabel::d_prime: return RegionLabel::d;
        default: return r;
    }
}

/// The six defining inequalities, in the fixed order A1, A2, A3, B1, B2, B3.
inline std::array<bool, 6> region_signature(const Weights& w) {
    return {
        w.c2 - w.c1 <= w.k1 + w.k2 - 4,  // A1
        w.c1 - w.c2 <= w.k1 + w.k2 - 4,  // A2
        w.c1 + w.c2 <= w.k1 + w.k2 - 2,  // A3
        w.c2 - w.c1 <= w.k1 - w.k2,      // B1
        w.c1 - w.c2 <= w.k1 - w.k2,      // B2
        w.c1 + w.c2 <= w.k1 - w.k2 + 2,  // B3
    };
}

/// Region membership is total and unique: the signatures partition the
/// weight lattice into the nine labels.
inline RegionLabel classify(const Weights& w) {
    auto [A1, A2, A3, B1, B2, B3] = region_signature(w);
    if (!A1) return RegionLabel::a;
    if (!A2) return RegionLabel::a_prime;
    if (!A3) {
        if (!B1) return RegionLabel::b;
        if (!B2) return RegionLabel::b_prime;
        return RegionLabel::c;
    }
    if (B3) return RegionLabel::f;
    if (!B1) return RegionLabel::d;
    if (!B2) return RegionLabel::d_prime;
    return RegionLabel::e;
}

/// Archimedean sign of the functional equation: -1 exactly on b, b', e.
inline int sign_infinity(RegionLabel r) {
    switch (r) {
        case RegionLabel::b:
        case RegionLabel::b_prime:
        case RegionLabel::e:
            return -1;
        default:
            return 1;
    }
}
inline int sign_infinity(const Weights& w) { return sign_infinity(classify(w)); }

enum class Parabolic { none, borel, siegel, klingen };

inline std::string parabolic_name(Parabolic p) {
    switch (p) {
        case Parabolic::none: return "-";
        case Parabolic::borel: return "B";
        case Parabolic::siegel: return "Sieg";
        case Parabolic::klingen: return "Kl";
    }
    std::abort();
}

/// The (GSp4, GL2, GL2) parabolic levels of ordinarity needed in each region.
inline std::array<Parabolic, 3> parabolic_of_region(RegionLabel r) {
    using P = Parabolic;
    switch (r) {
        case RegionLabel::a: return {P::none, P::none, P::borel};
        case RegionLabel::a_prime: return {P::none, P::borel, P::none};
        case RegionLabel::b: return {P::siegel, P::borel, P::borel};
        case RegionLabel::b_prime: return {P::siegel, P::borel, P::borel};
        case RegionLabel::c: return {P::klingen, P::borel, P::borel};
        case RegionLabel::d: return {P::siegel, P::none, P::borel};
        case RegionLabel::d_prime: return {P::siegel, P::borel, P::none};
        case RegionLabel::e: return {P::borel, P::borel, P::borel};
        case RegionLabel::f: return {P::klingen, P::none, P::none};
    }
    std::abort();
}

/// Edges of the region adjacency graph (symmetric; listed once each).
/// Adjacent regions always carry opposite archimedean signs, so the
/// all-plus pairs {d,f} and {d',f} meet only in a corner, not an edge.
inline const std::vector<std::pair<RegionLabel, RegionLabel>>& adjacency_edges() {
    using R = RegionLabel;
    static const std::vector<std::pair<R, R>> edges = {
        {R::a, R::b},       {R::b, R::c},
        {R::b, R::d},       {R::c, R::e},
        {R::d, R::e},       {R::e, R::f},
        {R::a_prime, R::b_prime},
        {R::b_prime, R::c}, {R::b_prime, R::d_prime},
        {R::d_prime, R::e},
    };
    return edges;
}

inline bool adjacent(RegionLabel x, RegionLabel y) {
    for (auto& [u, v] : adjacency_edges())
        if ((u == x && v == y) || (u == y && v == x)) return true;
    return false;
}

/// Whether a region has no lattice points for the given (k1, k2).
/// (Regions d, d', e, f need k1 - k2 >= 1; b, b', c need k1 + k2 >= 6, etc.
/// decided by brute scan over the bounded polytope where all regions live.)
inline bool region_is_empty(RegionLabel r, long k1, long k2) {
    if (!(k1 >= k2 && k2 >= 2))
        throw range_violation("need k1 >= k2 >= 2");
    // every region that is nonempty has a point with c1, c2 <= k1 + k2 + 2:
    // the bounded regions live inside A1/A2/A3, and a/a' are hit at c1 = 1
    // (resp. c2 = 1) with the other coordinate just past the A1/A2 wall.
    long bound = k1 + k2 + 2;
    for (long c1 = 1; c1 <= bound; ++c1)
        for (long c2 = 1; c2 <= bound; ++c2) {
            if (((k1 + k2 + c1 + c2) % 2) != 0) continue;
            if (classify(Weights(k1, k2, c1, c2)) == r) return false;
        }
    return true;
}

}  // namespace ggp
