#pragma once

// Hecke parameters at p for GSp4 and GL2, living in Q or a quadratic
// extension Q(theta) with theta^2 = t*theta - n. The p-adic valuation is
// extended to the quadratic field via the norm (non-split case) or a
// Hensel-lifted embedding into Q_p (split case, selected by a branch tag).

#include "errors.hpp"
#include "numeric.hpp"

#include <optional>
#include <string>

namespace ggp {

/// Q(theta), theta^2 = t*theta - n, with a branch tag choosing which root
/// of X^2 - tX + n the valuation sees in the split case.
struct QuadExt {
    Rat t, n;
    int branch = 0;  // 0 or 1

    QuadExt(Rat t_, Rat n_, int branch_ = 0)
        : t(std::move(t_)), n(std::move(n_)), branch(branch_) {
        if (branch != 0 && branch != 1)
            throw validation_error("QuadExt: branch must be 0 or 1");
        if (exact_sqrt(Rat(t * t - 4 * n)).has_value())
            throw validation_error(
                "QuadExt: X^2 - tX + n is reducible over Q; use rationals");
    }
    friend bool operator==(const QuadExt&, const QuadExt&) = default;
};

/// x + y*theta, or a plain rational when no field is attached (y = 0).
class AlgNum {
public:
    AlgNum() = default;
    AlgNum(Rat r) : x_(std::move(r)) {}
    AlgNum(int r) : x_(r) {}
    AlgNum(Int r) : x_(std::move(r)) {}
    AlgNum(Rat x, Rat y, const QuadExt& F) : x_(std::move(x)), y_(std::move(y)) {
        if (y_ != 0) field_ = F;
    }

    static AlgNum theta(const QuadExt& F) { return AlgNum(0, 1, F); }

    bool is_rational() const { return !field_.has_value(); }
    bool is_zero() const { return x_ == 0 && y_ == 0; }
    const Rat& x() const { return x_; }
    const Rat& y() const { return y_; }
    const std::optional<QuadExt>& field() const { return field_; }

    Rat rational() const {
        if (!is_rational()) throw arithmetic_error("not a rational number");
        return x_;
    }

    /// Image under the nontrivial field automorphism theta -> t - theta.
    AlgNum conjugate() const {
        if (is_rational()) return *this;
        return AlgNum(x_ + y_ * field_->t, -y_, *field_);
    }

    /// Product with the conjugate: x^2 + t*x*y + n*y^2, always rational.
    Rat norm() const {
        if (is_rational()) return x_ * x_;
        return x_ * x_ + field_->t * x_ * y_ + field_->n * y_ * y_;
    }

    friend AlgNum operator+(const AlgNum& a, const AlgNum& b) {
        auto F = common_field(a, b);
        if (!F) return AlgNum(a.x_ + b.x_);
        return AlgNum(a.x_ + b.x_, a.y_ + b.y_, *F);
    }
    friend AlgNum operator-(const AlgNum& a, const AlgNum& b) {
        auto F = common_field(a, b);
        if (!F) return AlgNum(a.x_ - b.x_);
        return AlgNum(a.x_ - b.x_, a.y_ - b.y_, *F);
    }
    AlgNum operator-() const {
        if (is_rational()) return AlgNum(-x_);
        return AlgNum(-x_, -y_, *field_);
    }
    friend AlgNum operator*(const AlgNum& a, const AlgNum& b) {
        auto F = common_field(a, b);
        if (!F) return AlgNum(a.x_ * b.x_);
        // (x + y th)(u + v th) with th^2 = t th - n
        const Rat &x = a.x_, &y = a.y_, &u = b.x_, &v = b.y_;
        return AlgNum(x * u - y * v * F->n, x * v + y * u + y * v * F->t, *F);
    }
    friend AlgNum operator/(const AlgNum& a, const AlgNum& b) {
        if (b.is_zero()) throw zero_denominator("division by zero");
        if (b.is_rational()) {
            if (a.is_rational()) return AlgNum(a.x_ / b.x_);
            return AlgNum(a.x_ / b.x_, a.y_ / b.x_, *a.field_);
        }
        return (a * b.conjugate()) / AlgNum(b.norm());
    }
    friend bool operator==(const AlgNum&, const AlgNum&) = default;

    AlgNum pow(long e) const {
        if (e < 0) return AlgNum(1) / pow(-e);
        AlgNum r(1), b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }

    /// p-adic valuation, possibly half-integral (returned as a rational).
    Rat valuation(const Int& p) const {
        if (is_zero()) throw arithmetic_error("valuation of zero");
        if (is_rational()) return Rat(vp(x_, p));
        if (p == 2) throw unsupported("p = 2 is not supported in quadratic fields");

        // clear denominators of t, n first so theta is integral
        Int df = lcm(Int(denominator(field_->t)), Int(denominator(field_->n)));
        if (df != 1) {
            // lam*theta is a root of X^2 - (lam t) X + lam^2 n
            QuadExt G(field_->t * df, field_->n * df * df, field_->branch);
            AlgNum scaled(x_, y_ / df, G);
            return scaled.valuation(p);
        }
        Int t(numerator(field_->t)), n(numerator(field_->n));

        // clear denominators of the coordinates
        Int d = lcm(Int(denominator(x_)), Int(denominator(y_)));
        Int X(numerator(Rat(x_ * d))), Y(numerator(Rat(y_ * d)));
        long shift = vp(d, p);

        Int disc = t * t - 4 * n;
        long vd = vp(disc, p);
        bool split = (vd % 2 == 0) &&
                     is_quadratic_residue(disc / ipow(p, vd), p) &&
                     mod_reduce(disc / ipow(p, vd), p) != 0;
        Int N = X * X + t * X * Y + n * Y * Y;  // norm of X + Y theta
        if (!split) {
            if (N == 0) throw std::logic_error("norm of nonzero element is zero");
            return Rat(vp(N, p), 2) - shift;
        }
        // theta -> (t + (-1)^branch * p^m * s) / 2 with s^2 = disc / p^(2m)
        long m = vd / 2;
        int M = static_cast<int>(vp(Int(4) * N, p)) + 1;
        Int pM = ipow(p, M);
        Int s = hensel_sqrt(disc / ipow(p, 2 * m), p, M);
        Int B = Y * ipow(p, m) * s;
        Int C = mod_reduce(2 * X + Y * t + (field_->branch == 0 ? B : -B), pM);
        if (C == 0) throw std::logic_error("valuation exceeded its norm bound");
        return Rat(vp(C, p)) - shift;
    }

    std::string str() const {
        auto rs = [](const Rat& r) {
            std::string s = numerator(r).str();
            if (denominator(r) != 1) s += "/" + denominator(r).str();
            return s;
        };
        if (is_rational()) return rs(x_);
        return rs(x_) + " + (" + rs(y_) + ")*theta[t=" + rs(field_->t) +
               ",n=" + rs(field_->n) + ",branch=" + std::to_string(field_->branch) + "]";
    }

private:
    static std::optional<QuadExt> common_field(const AlgNum& a, const AlgNum& b) {
        if (a.field_ && b.field_) {
            if (!(*a.field_ == *b.field_))
                throw unsupported("mixed quadratic fields: compositum not supported");
            return a.field_;
        }
        if (a.field_) return a.field_;
        return b.field_;
    }

    Rat x_ = 0, y_ = 0;
    std::optional<QuadExt> field_;
};

/// Hecke parameters of an unramified Pi_p on GSp4, normalised so that
/// alpha*delta = beta*gamma = p^(k1+k2-3) chi_Pi(p) and the valuations
/// are nondecreasing.
struct GSp4HeckeParams {
    AlgNum alpha, beta, gamma, delta;
    AlgNum chi_pi_at_p;
    long k1, k2;
    Int p;

    GSp4HeckeParams(AlgNum a, AlgNum b, AlgNum c, AlgNum d, AlgNum chi, long k1_,
                    long k2_, Int p_)
        : alpha(std::move(a)), beta(std::move(b)), gamma(std::move(c)),
          delta(std::move(d)), chi_pi_at_p(std::move(chi)), k1(k1_), k2(k2_),
          p(std::move(p_)) {
        AlgNum mid = AlgNum(Rat(ipow(p, k1 + k2 - 3))) * chi_pi_at_p;
        if (!(alpha * delta == mid) || !(beta * gamma == mid))
            throw validation_error("GSp4HeckeParams: alpha delta = beta gamma = "
                                   "p^(k1+k2-3) chi(p) fails");
        Rat va = alpha.valuation(p), vb = beta.valuation(p),
            vc = gamma.valuation(p), vd = delta.valuation(p);
        if (!(0 <= va && va <= vb && vb <= vc && vc <= vd))
            throw validation_error("GSp4HeckeParams: valuations not sorted");
    }

    std::array<Rat, 4> valuations() const {
        return {alpha.valuation(p), beta.valuation(p), gamma.valuation(p),
                delta.valuation(p)};
    }
};

/// true iff (v(alpha), ..., v(delta)) = (0, k2-2, k1-1, k1+k2-3).
inline bool is_borel_ordinary(const GSp4HeckeParams& P) {
    auto v = P.valuations();
    return v[0] == 0 && v[1] == P.k2 - 2 && v[2] == P.k1 - 1 &&
           v[3] == P.k1 + P.k2 - 3;
}

/// true iff alpha beta / p^(k2-2) is a unit.
inline bool is_klingen_ordinary(const GSp4HeckeParams& P) {
    return P.alpha.valuation(P.p) + P.beta.valuation(P.p) == P.k2 - 2;
}

/// true iff v(alpha) = 0 (equivalently v(delta) = k1+k2-3).
inline bool is_siegel_ordinary(const GSp4HeckeParams& P) {
    return P.alpha.valuation(P.p) == 0;
}

/// GL2 Hecke parameters: roots a, b of X^2 - a_p X + p^(c-1) u.
struct GL2HeckeParams {
    AlgNum a, b;
    long c;
    Int p;
    AlgNum unit_scalar;

    GL2HeckeParams(AlgNum a_, AlgNum b_, long c_, Int p_, AlgNum u)
        : a(std::move(a_)), b(std::move(b_)), c(c_), p(std::move(p_)),
          unit_scalar(std::move(u)) {
        if (unit_scalar.valuation(p) != 0)
            throw validation_error("GL2HeckeParams: central value is not a unit");
        if (!(a * b == AlgNum(Rat(ipow(p, c - 1))) * unit_scalar))
            throw validation_error("GL2HeckeParams: a b != p^(c-1) * unit");
    }
};

/// The ordinary p-stabilisation data of a newform: splits the Hecke
/// polynomial X^2 - a_p X + p^(c-1) u and returns (unit root, other root).
/// When `branch` is given it selects the embedding; otherwise the unit
/// branch is found automatically.
inline GL2HeckeParams ordinary_gl2(const Rat& a_p, const Rat& u, long c,
                                   const Int& p,
                                   std::optional<int> branch = std::nullopt) {
    if (u == 0 || vp(u, p) != 0)
        throw validation_error("ordinary_gl2: central value is not a unit");
    if (a_p == 0 || vp(a_p, p) > 0)
        throw not_ordinary("ordinary_gl2: a_p = 0 mod p, both roots non-unit");
    Rat n = Rat(ipow(p, c - 1)) * u;
    Rat disc = a_p * a_p - 4 * n;
    if (auto s = exact_sqrt(disc)) {
        Rat r1 = (a_p + *s) / 2, r2 = (a_p - *s) / 2;
        if (vp(r1, p) != 0) std::swap(r1, r2);
        if (vp(r1, p) != 0) throw not_ordinary("ordinary_gl2: no unit root");
        return GL2HeckeParams(AlgNum(r1), AlgNum(r2), c, p, AlgNum(u));
    }
    auto make = [&](int br) {
        QuadExt F(a_p, n, br);
        return std::pair<AlgNum, AlgNum>(AlgNum::theta(F),
                                         AlgNum(a_p) - AlgNum::theta(F));
    };
    if (branch) {
        auto [r, s] = make(*branch);
        if (r.valuation(p) != 0)
            throw not_ordinary("ordinary_gl2: chosen branch is not the unit root");
        return GL2HeckeParams(r, s, c, p, AlgNum(u));
    }
    for (int br : {0, 1}) {
        auto [r, s] = make(br);
        if (r.valuation(p) == 0) return GL2HeckeParams(r, s, c, p, AlgNum(u));
    }
    throw not_ordinary("ordinary_gl2: both roots have positive valuation");
}

}  // namespace ggp
