#pragma once

// The Euler factor E_p = prod (1 - p^w / xi) over the contributing Frobenius
// eigenvalues, with two independent evaluation paths (table-driven and the
// region-f closed form) and the local zeta constants for regions e and f.

#include "characters.hpp"
#include "errors.hpp"
#include "hecke.hpp"
#include "panchishkin.hpp"
#include "weights.hpp"

#include <vector>

namespace ggp {

struct EulerInput {
    Weights weights;
    GSp4HeckeParams gsp4;
    GL2HeckeParams gl2_1, gl2_2;

    EulerInput(Weights w, GSp4HeckeParams g, GL2HeckeParams s1, GL2HeckeParams s2)
        : weights(w), gsp4(std::move(g)), gl2_1(std::move(s1)), gl2_2(std::move(s2)) {
        if (gsp4.p != gl2_1.p || gsp4.p != gl2_2.p)
            throw validation_error("EulerInput: mismatched primes");
        if (gsp4.k1 != weights.k1 || gsp4.k2 != weights.k2)
            throw validation_error("EulerInput: GSp4 weights disagree");
        if (gl2_1.c != weights.c1 || gl2_2.c != weights.c2)
            throw validation_error("EulerInput: GL2 weights disagree");
        if (!is_borel_ordinary(gsp4))
            throw validation_error("EulerInput: GSp4 parameters not Borel-ordinary");
        if (gl2_1.a.valuation(gsp4.p) != 0 || gl2_2.a.valuation(gsp4.p) != 0)
            throw validation_error("EulerInput: GL2 parameters not ordinary");
        check_single_field();
    }

    const Int& p() const { return gsp4.p; }

    /// The Frobenius eigenvalue named by a constituent label.
    AlgNum xi(const ConstituentLabel& l) const {
        const AlgNum* g[4] = {&gsp4.alpha, &gsp4.beta, &gsp4.gamma, &gsp4.delta};
        const AlgNum* s1[2] = {&gl2_1.a, &gl2_1.b};
        const AlgNum* s2[2] = {&gl2_2.a, &gl2_2.b};
        return (*g[l.i]) * (*s1[l.j]) * (*s2[l.k]);
    }

private:
    void check_single_field() const {
        const AlgNum* all[] = {&gsp4.alpha, &gsp4.beta,  &gsp4.gamma,
                               &gsp4.delta, &gsp4.chi_pi_at_p,
                               &gl2_1.a,    &gl2_1.b,    &gl2_1.unit_scalar,
                               &gl2_2.a,    &gl2_2.b,    &gl2_2.unit_scalar};
        const QuadExt* seen = nullptr;
        for (const AlgNum* x : all) {
            if (x->is_rational()) continue;
            if (!seen)
                seen = &*x->field();
            else if (!(*seen == *x->field()))
                throw unsupported("EulerInput: parameters span more than one "
                                  "quadratic field");
        }
    }
};

namespace detail {

inline AlgNum euler_product(const EulerInput& in,
                            const std::vector<ConstituentLabel>& labels,
                            bool strict) {
    AlgNum pw(Rat(ipow(in.p(), in.weights.w())));
    AlgNum result(1);
    for (const auto& l : labels) {
        AlgNum x = in.xi(l);
        if (x == pw)
            throw zero_denominator("contributing eigenvalue equals p^w (" +
                                   constituent_name(l) + ")");
        if (strict && x.is_rational() && (x == pw || x == -pw))
            throw validation_error("strict: eigenvalue " + constituent_name(l) +
                                   " violates temperedness at the valuation level");
        result = result * (AlgNum(1) - pw / x);
    }
    return result;
}

}  // namespace detail

/// Table-driven path: the product over contributing_set(weights).
inline AlgNum euler_factor(const EulerInput& in, bool strict = false) {
    auto s = contributing_set(in.weights);
    return detail::euler_product(in, {s.begin(), s.end()}, strict);
}

/// Region-f closed form: the printed eight-factor product over
/// {alpha, beta} x {a1, b1} x {a2, b2}. Must agree with euler_factor.
inline AlgNum euler_factor_f_closed_form(const EulerInput& in, bool strict = false) {
    if (classify(in.weights) != RegionLabel::f)
        throw wrong_region("closed form only applies in region f");
    std::vector<ConstituentLabel> labels;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) labels.push_back({i, j, k});
    return detail::euler_product(in, labels, strict);
}

/// Local zeta constants: f -> p^3/((p+1)^2 (p-1)), e -> p^4/(p^2-1)^2.
inline Rat zeta_constant(RegionLabel r, const Int& p) {
    Rat q(p);
    switch (r) {
        case RegionLabel::f:
            return rpow(q, 3) / ((q + 1) * (q + 1) * (q - 1));
        case RegionLabel::e:
            return rpow(q, 4) / rpow(q * q - 1, 2);
        default:
            throw unsupported("no zeta constant for region " + region_name(r));
    }
}

/// Nonvanishing certificate: if every contributing eigenvalue has valuation
/// strictly below w, each factor is 1 minus a positive-valuation term and the
/// product cannot vanish; otherwise evaluate exactly.
inline bool crystalline_nonvanishing(const EulerInput& in) {
    long w = in.weights.w();
    bool strict_vals = true;
    for (const auto& l : contributing_set(in.weights))
        if (in.xi(l).valuation(in.p()) >= w) {
            strict_vals = false;
            break;
        }
    if (strict_vals) return true;
    return !euler_factor(in).is_zero();
}

/// The Euler factor of a family specialisation: 1 at fully-ramified points
/// (trivial crystalline module), the product formula at crystalline points.
/// Ramified points that are not fully ramified have no printed formula.
inline AlgNum euler_factor_at_point(const EulerInput& in, const ClassicalPoint& pt,
                                    bool strict = false) {
    if (pt.p != in.p())
        throw validation_error("euler_factor_at_point: mismatched primes");
    if (is_fully_ramified(pt)) return AlgNum(1);
    if (is_crystalline(pt)) return euler_factor(in, strict);
    throw unsupported("no formula for ramified but not fully-ramified points");
}

}  // namespace ggp
