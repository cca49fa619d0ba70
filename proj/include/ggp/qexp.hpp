#pragma once

// Truncated formal q-expansions over pluggable exact coefficient rings, and
// the operator calculus on them: Hecke operators away from p, U_p, ordinary
// p-stabilisation, p-depletion, theta powers, and specialisation of
// Iwasawa-coefficient families at integer weights.

#include "characters.hpp"
#include "errors.hpp"
#include "numeric.hpp"
#include "weights.hpp"

#include <string>
#include <utility>
#include <vector>

namespace ggp {

struct RatRing {
    using Elem = Rat;
    Elem zero() const { return 0; }
    Elem from_int(const Int& n) const { return Rat(n); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    friend bool operator==(const RatRing&, const RatRing&) { return true; }
};

/// Z / p^M
struct ZpRing {
    Int p;
    int M;
    Int modulus;

    ZpRing(Int p_, int M_) : p(std::move(p_)), M(M_), modulus(ipow(p, M_)) {
        if (M < 1 || M > 64) throw range_violation("ZpRing: need 1 <= M <= 64");
    }
    using Elem = Int;
    Elem zero() const { return 0; }
    Elem from_int(const Int& n) const { return mod_reduce(n, modulus); }
    Elem add(const Elem& a, const Elem& b) const { return mod_reduce(a + b, modulus); }
    Elem mul(const Elem& a, const Elem& b) const { return a * b % modulus; }
    Elem neg(const Elem& a) const { return mod_reduce(-a, modulus); }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }
    friend bool operator==(const ZpRing& x, const ZpRing& y) {
        return x.p == y.p && x.M == y.M;
    }
};

/// (Z / p^M)[T] / T^D, the truncated Iwasawa algebra. Elements are
/// coefficient vectors of length D.
struct IwRing {
    Int p;
    int M, D;
    Int pM;

    IwRing(Int p_, int M_, int D_)
        : p(std::move(p_)), M(M_), D(D_), pM(ipow(p, M_)) {
        if (M < 1 || M > 64) throw range_violation("IwRing: need 1 <= M <= 64");
        if (D < 1) throw range_violation("IwRing: need D >= 1");
    }
    using Elem = std::vector<Int>;
    Elem zero() const { return Elem(D, Int(0)); }
    Elem from_int(const Int& n) const {
        Elem e(D, Int(0));
        e[0] = mod_reduce(n, pM);
        return e;
    }
    Elem from_coeffs(std::vector<Int> c) const {
        c.resize(D, Int(0));
        for (auto& x : c) x = mod_reduce(x, pM);
        return c;
    }
    Elem add(const Elem& a, const Elem& b) const {
        Elem r(D);
        for (int i = 0; i < D; ++i) r[i] = mod_reduce(a[i] + b[i], pM);
        return r;
    }
    Elem mul(const Elem& a, const Elem& b) const {
        Elem r(D, Int(0));
        for (int i = 0; i < D; ++i) {
            if (a[i] == 0) continue;
            for (int j = 0; i + j < D; ++j) r[i + j] += a[i] * b[j];
        }
        for (auto& x : r) x = mod_reduce(x, pM);
        return r;
    }
    Elem neg(const Elem& a) const {
        Elem r(D);
        for (int i = 0; i < D; ++i) r[i] = mod_reduce(-a[i], pM);
        return r;
    }
    bool eq(const Elem& a, const Elem& b) const { return a == b; }

    /// Evaluation T -> t0 into Z/p^M.
    Int evaluate(const Elem& a, const Int& t0) const {
        Int acc = 0, pw = 1;
        for (int i = 0; i < D; ++i) {
            acc = mod_reduce(acc + a[i] * pw, pM);
            pw = pw * t0 % pM;
        }
        return acc;
    }
    friend bool operator==(const IwRing& x, const IwRing& y) {
        return x.p == y.p && x.M == y.M && x.D == y.D;
    }
};

/// A formal q-expansion a_0 + a_1 q + ... + a_N q^N with bookkeeping.
template <typename Ring>
struct QExpansion {
    Ring ring;
    std::vector<typename Ring::Elem> coeffs;  // indices 0..N
    long weight = 0;
    DirichletCharacter character;
    Int level = 1;
    std::string twist_tag;  // opaque adelic-twist marker, not a coefficient change

    long truncation() const { return static_cast<long>(coeffs.size()) - 1; }

    static QExpansion zero(Ring r, long N, long weight, Int level = 1) {
        if (N < 0) throw range_violation("truncation must be >= 0");
        if (N > 10000) throw range_violation("truncation exceeds the 10^4 contract");
        QExpansion f{std::move(r), {}, weight, DirichletCharacter(), std::move(level), ""};
        f.coeffs.assign(static_cast<size_t>(N) + 1, f.ring.zero());
        return f;
    }

    friend bool operator==(const QExpansion& f, const QExpansion& g) {
        return f.ring == g.ring && f.coeffs == g.coeffs && f.weight == g.weight &&
               f.character == g.character && f.level == g.level;
    }
};

/// Scalar multiple (ring element).
template <typename Ring>
QExpansion<Ring> scale(const QExpansion<Ring>& f, const typename Ring::Elem& c) {
    QExpansion<Ring> g = f;
    for (auto& a : g.coeffs) a = f.ring.mul(c, a);
    return g;
}

template <typename Ring>
QExpansion<Ring> add(const QExpansion<Ring>& f, const QExpansion<Ring>& g) {
    if (!(f.ring == g.ring)) throw validation_error("add: mismatched rings");
    QExpansion<Ring> h = f;
    h.coeffs.resize(std::min(f.coeffs.size(), g.coeffs.size()));
    for (size_t n = 0; n < h.coeffs.size(); ++n)
        h.coeffs[n] = f.ring.add(f.coeffs[n], g.coeffs[n]);
    return h;
}

/// chi(ell) as a ring constant; only real character values are usable here.
template <typename Ring>
typename Ring::Elem char_value_in(const Ring& R, const DirichletCharacter& chi,
                                  const Int& ell) {
    CharValue v = chi.evaluate(ell);
    if (v.zero) return R.zero();
    return R.from_int(Int(v.value.as_sign()));
}

/// T_ell for ell prime to the level: a_n -> a_{n ell} + ell^(k-1) chi(ell) a_{n/ell}.
template <typename Ring>
QExpansion<Ring> hecke_T(const QExpansion<Ring>& f, const Int& ell) {
    if (f.level % ell == 0)
        throw validation_error("hecke_T: ell divides the level");
    long N = f.truncation();
    long lell = static_cast<long>(ell);
    if (N < lell) throw truncation_too_short("hecke_T: need truncation >= ell");
    auto g = QExpansion<Ring>::zero(f.ring, N / lell, f.weight, f.level);
    g.character = f.character;
    g.twist_tag = f.twist_tag;
    auto c = f.ring.mul(f.ring.from_int(ipow(ell, f.weight - 1)),
                        char_value_in(f.ring, f.character, ell));
    for (long n = 0; n <= g.truncation(); ++n) {
        auto v = f.coeffs[n * lell];
        if (n % lell == 0)
            v = f.ring.add(v, f.ring.mul(c, f.coeffs[n / lell]));
        g.coeffs[n] = v;
    }
    return g;
}

/// U_p: a_n -> a_{np}.
template <typename Ring>
QExpansion<Ring> u_p(const QExpansion<Ring>& f, const Int& p) {
    long N = f.truncation();
    long lp = static_cast<long>(p);
    if (N < lp) throw truncation_too_short("u_p: need truncation >= p");
    auto g = QExpansion<Ring>::zero(f.ring, N / lp, f.weight, f.level);
    g.character = f.character;
    g.twist_tag = f.twist_tag;
    for (long n = 0; n <= g.truncation(); ++n) g.coeffs[n] = f.coeffs[n * lp];
    return g;
}

/// p-depletion: kill every a_n with p | n.
template <typename Ring>
QExpansion<Ring> p_deplete(const QExpansion<Ring>& f, const Int& p) {
    QExpansion<Ring> g = f;
    long lp = static_cast<long>(p);
    for (long n = 0; n <= g.truncation(); n += lp) g.coeffs[n] = f.ring.zero();
    return g;
}

/// theta^t: a_n -> n^t a_n; raises the declared weight by 2t.
template <typename Ring>
QExpansion<Ring> theta_power(const QExpansion<Ring>& f, long t) {
    if (t < 0) throw negative_power("theta_power: t must be >= 0");
    if (t == 0) return f;
    QExpansion<Ring> g = f;
    g.weight += 2 * t;
    g.coeffs[0] = f.ring.zero();
    for (long n = 1; n <= g.truncation(); ++n)
        g.coeffs[n] = f.ring.mul(f.ring.from_int(ipow(Int(n), t)), f.coeffs[n]);
    return g;
}

/// Ordinary p-stabilisation over Z/p^M: f(q) - beta f(q^p) where beta is the
/// non-unit root of X^2 - a_p X + p^(k-1) chi(p). Returns the stabilised form
/// and the unit eigenvalue alpha.
inline std::pair<QExpansion<ZpRing>, Int> p_stabilize(const QExpansion<ZpRing>& f,
                                                      const Int& p) {
    if (!(f.ring.p == p))
        throw validation_error("p_stabilize: ring prime mismatch");
    if (f.level % p == 0)
        throw validation_error("p_stabilize: level already divisible by p");
    if (f.truncation() < p)
        throw truncation_too_short("p_stabilize: need truncation >= p");
    Int ap = f.coeffs[static_cast<long>(p)];
    if (ap % p == 0)
        throw not_ordinary("p_stabilize: a_p = 0 mod p");
    CharValue cv = f.character.evaluate(p);
    if (cv.zero) throw validation_error("p_stabilize: chi(p) = 0");
    Int n = mod_reduce(ipow(p, f.weight - 1) * cv.value.as_sign(), f.ring.modulus);
    Int alpha = hensel_unit_root(ap, n, p, f.ring.M);
    Int beta = mod_reduce(ap - alpha, f.ring.modulus);
    QExpansion<ZpRing> g = f;
    g.level = f.level * p;
    long lp = static_cast<long>(p);
    for (long m = 0; m * lp <= f.truncation(); ++m)
        g.coeffs[m * lp] =
            f.ring.add(g.coeffs[m * lp], f.ring.mul(f.ring.neg(beta), f.coeffs[m]));
    return {g, alpha};
}

/// Specialise an Iwasawa-coefficient family at integer weight k via the
/// group-like convention [1+p] -> 1+T, i.e. T -> (1+p)^k - 1.
inline QExpansion<ZpRing> specialize(const QExpansion<IwRing>& F, long k) {
    if (k < 0) throw range_violation("specialize: weight must be >= 0");
    const IwRing& R = F.ring;
    // T -> (1+p)^k - 1 sends T^D into p^D Z, so the evaluation factors through
    // the truncation ideal (and is a ring homomorphism) only when D >= M
    if (R.D < R.M) throw range_violation("specialize: need T-degree D >= M");
    Int t0 = mod_reduce(powmod(1 + R.p, Int(k), R.pM) - 1, R.pM);
    QExpansion<ZpRing> f =
        QExpansion<ZpRing>::zero(ZpRing(R.p, R.M), F.truncation(), k, F.level);
    f.character = F.character;
    f.twist_tag = F.twist_tag;
    for (long n = 0; n <= F.truncation(); ++n)
        f.coeffs[n] = R.evaluate(F.coeffs[n], t0);
    return f;
}

/// The two p-depleted components of the region-f interpolation input:
/// (g1^[p], theta^t(g2^[p])), with the exponent r = floor((k1-k2+2)/2).
template <typename Ring>
struct EFamily {
    QExpansion<Ring> g1_depleted;
    QExpansion<Ring> g2_theta;
    long t;
    long r;
};

template <typename Ring>
EFamily<Ring> build_E_family(const QExpansion<Ring>& g1, const QExpansion<Ring>& g2,
                             const Weights& w, const Int& p) {
    long t = w.t();
    if (t < 0) throw negative_power("build_E_family: t < 0 outside region f");
    if (g1.weight != w.c1 || g2.weight != w.c2)
        throw validation_error("build_E_family: component weights disagree");
    long r = (w.k1 - w.k2 + 2) / 2;  // floor; k1 - k2 is even iff c1 + c2 is
    return {p_deplete(g1, p), theta_power(p_deplete(g2, p), t), t, r};
}

}  // namespace ggp
