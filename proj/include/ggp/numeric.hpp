#pragma once

// Exact integer/rational arithmetic helpers shared by all modules.
// Everything is built on boost::multiprecision; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <utility>

namespace ggp {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int ipow(Int base, long exp) {
    if (exp < 0) throw std::invalid_argument("ipow: negative exponent");
    Int r = 1;
    while (exp > 0) {
        if (exp & 1) r *= base;
        base *= base;
        exp >>= 1;
    }
    return r;
}

inline Rat rpow(const Rat& base, long exp) {
    if (exp >= 0)
        return Rat(ipow(numerator(base), exp), ipow(denominator(base), exp));
    if (base == 0) throw std::invalid_argument("rpow: 0^negative");
    return Rat(ipow(denominator(base), -exp), ipow(numerator(base), -exp));
}

/// p-adic valuation of a nonzero integer.
inline long vp(Int x, const Int& p) {
    if (x == 0) throw std::invalid_argument("vp: valuation of zero");
    long v = 0;
    while (x % p == 0) {
        x /= p;
        ++v;
    }
    return v;
}

/// p-adic valuation of a nonzero rational.
inline long vp(const Rat& x, const Int& p) {
    return vp(numerator(x), p) - vp(denominator(x), p);
}

inline Int mod_reduce(Int x, const Int& m) {
    x %= m;
    if (x < 0) x += m;
    return x;
}

inline Int powmod(Int base, Int exp, const Int& m) {
    base = mod_reduce(base, m);
    Int r = 1;
    while (exp > 0) {
        if (bit_test(exp, 0)) r = r * base % m;
        base = base * base % m;
        exp >>= 1;
    }
    return r;
}

/// Inverse of a mod m (gcd(a, m) = 1), via extended Euclid.
inline Int invmod(const Int& a, const Int& m) {
    Int r0 = m, r1 = mod_reduce(a, m), s0 = 0, s1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        Int s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw std::invalid_argument("invmod: not invertible");
    return mod_reduce(s0, m);
}

inline bool is_quadratic_residue(const Int& a, const Int& p) {
    Int r = mod_reduce(a, p);
    if (r == 0) return true;
    return powmod(r, (p - 1) / 2, p) == 1;
}

/// Square root of a mod p^M for odd p with a a unit QR mod p.
/// Returns the root whose residue mod p is smallest.
inline Int hensel_sqrt(const Int& a, const Int& p, int M) {
    Int r0;
    bool found = false;
    for (Int x = 1; x < p; ++x) {
        if (x * x % p == mod_reduce(a, p)) {
            r0 = x;
            found = true;
            break;
        }
    }
    if (!found) throw std::invalid_argument("hensel_sqrt: not a QR");
    Int pk = p;
    Int r = r0;
    for (int k = 1; k < M; ++k) {
        // lift r from mod p^k to mod p^{k+1}: r' = r - (r^2 - a)/(2r)
        Int pk1 = pk * p;
        Int num = mod_reduce(a - r * r, pk1);
        Int corr = num / pk % p;  // (a - r^2)/p^k mod p
        Int step = corr * invmod(2 * r % p, p) % p;
        r = mod_reduce(r + step * pk, pk1);
        pk = pk1;
    }
    Int other = pk - r;
    return (mod_reduce(r, p) <= mod_reduce(other, p)) ? r : other;
}

/// Unit root of X^2 - t X + n mod p^M, when t is a unit mod p (Hensel lift
/// of the residue root t mod p). The other root then has positive valuation.
inline Int hensel_unit_root(const Int& t, const Int& n, const Int& p, int M) {
    if (mod_reduce(t, p) == 0)
        throw std::invalid_argument("hensel_unit_root: t not a unit");
    Int pM = ipow(p, M);
    Int r = mod_reduce(t, p);  // root of x^2 - tx + n = x(x-t) mod p with x != 0
    Int pk = p;
    for (int k = 1; k < M; ++k) {
        Int pk1 = pk * p;
        Int f = mod_reduce(r * r - t * r + n, pk1);
        Int fp = mod_reduce(2 * r - t, p);  // derivative, a unit here
        Int corr = f / pk % p;
        Int step = corr * invmod(fp, p) % p;
        r = mod_reduce(r - step * pk, pk1);
        pk = pk1;
    }
    return mod_reduce(r, pM);
}

/// a = b * 2^k test helper: is x a perfect square? Returns sqrt if so.
inline std::optional<Int> exact_sqrt(const Int& x) {
    if (x < 0) return std::nullopt;
    Int r = sqrt(x);
    if (r * r == x) return r;
    return std::nullopt;
}

inline std::optional<Rat> exact_sqrt(const Rat& x) {
    auto n = exact_sqrt(Int(numerator(x)));
    auto d = exact_sqrt(Int(denominator(x)));
    if (n && d) return Rat(*n, *d);
    return std::nullopt;
}

}  // namespace ggp
