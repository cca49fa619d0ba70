#pragma once

// GSp4 conventions: the form J, the embedding iota of GL2 x_{GL1} GL2, the
// standard parabolics mod p, and the open-orbit test for u_Kl.

#include "errors.hpp"
#include "numeric.hpp"
#include "weights.hpp"

#include <array>

namespace ggp {

struct Mat2q {
    std::array<std::array<Rat, 2>, 2> m{};

    Mat2q() = default;
    Mat2q(Rat a, Rat b, Rat c, Rat d) : m{{{a, b}, {c, d}}} {}
    Rat det() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
    friend bool operator==(const Mat2q&, const Mat2q&) = default;

    friend Mat2q operator*(const Mat2q& x, const Mat2q& y) {
        Mat2q r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                for (int k = 0; k < 2; ++k) r.m[i][j] += x.m[i][k] * y.m[k][j];
        return r;
    }
};

struct Mat4q {
    std::array<std::array<Rat, 4>, 4> m{};

    static Mat4q identity() {
        Mat4q r;
        for (int i = 0; i < 4; ++i) r.m[i][i] = 1;
        return r;
    }
    static Mat4q diag(Rat a, Rat b, Rat c, Rat d) {
        Mat4q r;
        r.m[0][0] = a;
        r.m[1][1] = b;
        r.m[2][2] = c;
        r.m[3][3] = d;
        return r;
    }

    Mat4q transpose() const {
        Mat4q r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) r.m[i][j] = m[j][i];
        return r;
    }

    friend Mat4q operator*(const Mat4q& x, const Mat4q& y) {
        Mat4q r;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                for (int k = 0; k < 4; ++k) r.m[i][j] += x.m[i][k] * y.m[k][j];
        return r;
    }
    friend bool operator==(const Mat4q&, const Mat4q&) = default;
};

/// The antisymmetric form defining GSp4.
inline const Mat4q& J_form() {
    static const Mat4q J = [] {
        Mat4q j;
        j.m[0][3] = 1;
        j.m[1][2] = 1;
        j.m[2][1] = -1;
        j.m[3][0] = -1;
        return j;
    }();
    return J;
}

/// The open-orbit representative for the lower Borel of GL2 x GL2 acting on
/// the full flag variety of GSp4; lies in the lower unipotent radical.
inline const Mat4q& u_b_constant() {
    static const Mat4q u = [] {
        Mat4q r = Mat4q::identity();
        r.m[1][0] = 1;
        r.m[2][1] = 1;
        r.m[3][1] = -1;
        r.m[3][2] = -1;
        return r;
    }();
    return u;
}

/// Similitude factor nu with M^T J M = nu J, if M is symplectic.
inline std::optional<Rat> is_symplectic(const Mat4q& M) {
    Mat4q g = M.transpose() * J_form() * M;
    Rat nu = g.m[0][3];
    if (nu == 0) return std::nullopt;
    Mat4q expect = J_form();
    for (auto& row : expect.m)
        for (auto& x : row) x *= nu;
    if (g == expect) return nu;
    return std::nullopt;
}

/// The embedding of GL2 x_{GL1} GL2 into GSp4: requires det h1 = det h2.
inline Mat4q iota(const Mat2q& h1, const Mat2q& h2) {
    if (h1.det() != h2.det())
        throw determinant_mismatch("iota: det h1 != det h2");
    Mat4q r;
    r.m[0][0] = h1.m[0][0];
    r.m[0][3] = h1.m[0][1];
    r.m[3][0] = h1.m[1][0];
    r.m[3][3] = h1.m[1][1];
    r.m[1][1] = h2.m[0][0];
    r.m[1][2] = h2.m[0][1];
    r.m[2][1] = h2.m[1][0];
    r.m[2][2] = h2.m[1][1];
    return r;
}

/// A 4x4 matrix over Z/p^r, tagged with its modulus.
struct Mat4p {
    std::array<std::array<Int, 4>, 4> m{};
    Int modulus = 1;

    friend bool operator==(const Mat4p&, const Mat4p&) = default;

    friend Mat4p operator*(const Mat4p& x, const Mat4p& y) {
        if (x.modulus != y.modulus)
            throw validation_error("Mat4p: modulus mismatch");
        Mat4p r;
        r.modulus = x.modulus;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) {
                Int s = 0;
                for (int k = 0; k < 4; ++k) s += x.m[i][k] * y.m[k][j];
                r.m[i][j] = mod_reduce(s, x.modulus);
            }
        return r;
    }

    /// Determinant in Z/modulus (cofactor expansion; exact, no division).
    Int det() const {
        Int s = 0;
        auto term3 = [&](int r, int c) {
            int rows[3], cols[3], ri = 0, ci = 0;
            for (int i = 0; i < 4; ++i)
                if (i != r) rows[ri++] = i;
            for (int j = 0; j < 4; ++j)
                if (j != c) cols[ci++] = j;
            return m[rows[0]][cols[0]] * (m[rows[1]][cols[1]] * m[rows[2]][cols[2]] -
                                          m[rows[1]][cols[2]] * m[rows[2]][cols[1]]) -
                   m[rows[0]][cols[1]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[2]] -
                                          m[rows[1]][cols[2]] * m[rows[2]][cols[0]]) +
                   m[rows[0]][cols[2]] * (m[rows[1]][cols[0]] * m[rows[2]][cols[1]] -
                                          m[rows[1]][cols[1]] * m[rows[2]][cols[0]]);
        };
        for (int j = 0; j < 4; ++j) {
            Int t = m[0][j] * term3(0, j);
            s += (j % 2 == 0) ? t : -t;
        }
        return mod_reduce(s, modulus);
    }
};

/// Reduce a rational matrix mod p^r; every entry must be p-integral.
inline Mat4p reduce(const Mat4q& M, const Int& p, int r) {
    Mat4p out;
    out.modulus = ipow(p, r);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Rat& x = M.m[i][j];
            Int den = denominator(x);
            if (den % p == 0)
                throw validation_error("reduce: entry is not p-integral");
            out.m[i][j] =
                mod_reduce(Int(numerator(x)) * invmod(den, out.modulus), out.modulus);
        }
    return out;
}

/// Membership of an invertible matrix mod p in the standard parabolics.
/// Borel: upper triangular. Siegel: lower-left 2x2 block zero.
/// Klingen: first column of shape (*, 0, 0, 0).
inline bool in_parabolic(const Mat4p& M, const Int& p, Parabolic P) {
    auto z = [&](int i, int j) { return M.m[i][j] % p == 0; };
    Mat4p red = M;
    if (red.modulus % p != 0) throw validation_error("in_parabolic: modulus not divisible by p");
    red.modulus = p;
    for (auto& row : red.m)
        for (auto& x : row) x = mod_reduce(x, p);
    if (red.det() % p == 0) return false;  // not invertible mod p
    switch (P) {
        case Parabolic::none:
            return true;
        case Parabolic::borel:
            return z(1, 0) && z(2, 0) && z(3, 0) && z(2, 1) && z(3, 1) && z(3, 2);
        case Parabolic::siegel:
            return z(2, 0) && z(2, 1) && z(3, 0) && z(3, 1);
        case Parabolic::klingen:
            return z(1, 0) && z(2, 0) && z(3, 0);
    }
    std::abort();
}

/// Open-orbit test for Klingen-level zeta integrals: the first column mod p
/// must avoid the shapes (0, *, *, 0) and (*, 0, 0, *).
inline bool valid_u_kl(const Mat4p& M, const Int& p) {
    auto z = [&](int i) { return M.m[i][0] % p == 0; };
    if (z(0) && z(3)) return false;
    if (z(1) && z(2)) return false;
    return true;
}

}  // namespace ggp
