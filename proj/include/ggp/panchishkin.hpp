#pragma once

// The 16 Jordan-Holder constituents of the tensor representation, their
// Frobenius valuations and Hodge numbers, the contributing 8-subsets, and
// the rank-1 graded quotient separating two adjacent regions.

#include "errors.hpp"
#include "weights.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace ggp {

/// (i, j, k): i in 0..3 names the GSp4 parameter (alpha, beta, gamma, delta);
/// j, k in {0, 1} name (fraktur a, fraktur b) for the two GL2 factors.
struct ConstituentLabel {
    int i, j, k;

    int index() const { return i * 4 + j * 2 + k; }
    friend auto operator<=>(const ConstituentLabel&, const ConstituentLabel&) = default;
};

inline const std::array<ConstituentLabel, 16>& all_constituents() {
    static const std::array<ConstituentLabel, 16> all = [] {
        std::array<ConstituentLabel, 16> r{};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) r[i * 4 + j * 2 + k] = {i, j, k};
        return r;
    }();
    return all;
}

/// The complement pairing: a fixed-point-free involution on the 16 labels.
inline ConstituentLabel partner(const ConstituentLabel& l) {
    return {3 - l.i, 1 - l.j, 1 - l.k};
}

inline std::string constituent_name(const ConstituentLabel& l) {
    static const char* gsp4[] = {"alpha", "beta", "gamma", "delta"};
    static const char* gl2[] = {"a", "b"};
    return std::string(gsp4[l.i]) + "." + gl2[l.j] + "1." + gl2[l.k] + "2";
}

/// v_p of the Frobenius eigenvalue xi(label) under Borel-ordinary valuations:
/// n_i + m_j + l_k with (n) = (0, k2-2, k1-1, k1+k2-3), (m) = (0, c1-1),
/// (l) = (0, c2-1).
inline long constituent_valuation(const ConstituentLabel& l, const Weights& w) {
    const long n[4] = {0, w.k2 - 2, w.k1 - 1, w.k1 + w.k2 - 3};
    const long m[2] = {0, w.c1 - 1};
    const long ll[2] = {0, w.c2 - 1};
    return n[l.i] + m[l.j] + ll[l.k];
}

/// The labels xi with v(xi) <= w: always 8 of them, one per complement pair.
inline std::set<ConstituentLabel> contributing_set(const Weights& w) {
    std::set<ConstituentLabel> s;
    for (const auto& l : all_constituents())
        if (constituent_valuation(l, w) <= w.w()) s.insert(l);
    return s;
}

/// Hodge numbers of the three factors and the motivic twist.
struct HodgeProfile {
    std::array<long, 4> gsp4_numbers;
    std::array<long, 2> gl2_1_numbers, gl2_2_numbers;
    long twist;

    explicit HodgeProfile(const Weights& w)
        : gsp4_numbers{0, w.k2 - 2, w.k1 - 1, w.k1 + w.k2 - 3},
          gl2_1_numbers{0, w.c1 - 1},
          gl2_2_numbers{0, w.c2 - 1},
          twist(1 + w.w()) {
        if (w.k2 == 2)
            throw unsupported("HodgeProfile: GSp4 Hodge numbers collide at k2 = 2");
    }
};

/// Filtration triple (s0, s1, s2): alpha <-> Gr^3, ..., delta <-> Gr^0 on the
/// GSp4 factor and fraktur-a <-> Gr^1, fraktur-b <-> Gr^0 on each GL2 factor.
struct GradedTriple {
    int s0, s1, s2;
    friend bool operator==(const GradedTriple&, const GradedTriple&) = default;
    std::string str() const {
        return "(" + std::to_string(s0) + "," + std::to_string(s1) + "," +
               std::to_string(s2) + ")";
    }
};

inline GradedTriple graded_triple_of(const ConstituentLabel& l) {
    return {3 - l.i, 1 - l.j, 1 - l.k};
}

/// Interchanging the two regions complements the triple.
inline GradedTriple swap_symmetry(const GradedTriple& t) {
    return {3 - t.s0, 1 - t.s1, 1 - t.s2};
}

/// The unique constituent in contributing_set(hearts) \ contributing_set(spades)
/// for adjacent regions, reported as its graded triple.
inline GradedTriple panchishkin_quotient(RegionLabel hearts, RegionLabel spades,
                                         const Weights& wh, const Weights& ws) {
    if (!adjacent(hearts, spades))
        throw not_adjacent("regions " + region_name(hearts) + " and " +
                           region_name(spades) + " are not adjacent");
    if (wh.k1 != ws.k1 || wh.k2 != ws.k2)
        throw validation_error("panchishkin_quotient: mismatched (k1, k2)");
    if (classify(wh) != hearts || classify(ws) != spades)
        throw wrong_region("weights do not lie in the stated regions");
    auto sh = contributing_set(wh), ss = contributing_set(ws);
    std::vector<ConstituentLabel> diff;
    for (const auto& l : sh)
        if (!ss.count(l)) diff.push_back(l);
    if (diff.size() != 1)
        throw not_rank_one("set difference has size " + std::to_string(diff.size()));
    return graded_triple_of(diff[0]);
}

}  // namespace ggp
