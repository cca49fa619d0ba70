#include "doctest.h"
#include "ggp/symplectic.hpp"

using namespace ggp;

TEST_CASE("the form J") {
    const Mat4q& J = J_form();
    CHECK(J * J == Mat4q::diag(-1, -1, -1, -1));
    CHECK(*is_symplectic(J) == 1);
    CHECK(*is_symplectic(Mat4q::identity()) == 1);
}

TEST_CASE("similitude factors of diagonal elements") {
    CHECK(*is_symplectic(Mat4q::diag(25, 5, 5, 1)) == 25);
    CHECK(*is_symplectic(Mat4q::diag(Rat(1, 3), 1, 1, 3)) == 1);
    CHECK(!is_symplectic(Mat4q::diag(2, 1, 1, 1)).has_value());
    Mat4q z;  // zero matrix: nu would vanish
    CHECK(!is_symplectic(z).has_value());
}

TEST_CASE("u_B is symplectic and lower unipotent") {
    const Mat4q& u = u_b_constant();
    CHECK(*is_symplectic(u) == 1);
    for (int i = 0; i < 4; ++i) {
        CHECK(u.m[i][i] == 1);
        for (int j = i + 1; j < 4; ++j) CHECK(u.m[i][j] == 0);
    }
    CHECK(u.m[1][0] == 1);
    CHECK(u.m[2][1] == 1);
    CHECK(u.m[3][1] == -1);
    CHECK(u.m[3][2] == -1);
    CHECK(u.m[2][0] == 0);
    CHECK(u.m[3][0] == 0);
}

TEST_CASE("iota embeds GL2 x_{GL1} GL2 symplectically") {
    CHECK(iota(Mat2q(1, 0, 0, 1), Mat2q(1, 0, 0, 1)) == Mat4q::identity());
    auto g = iota(Mat2q(1, 2, 0, 1), Mat2q(1, 0, 3, 1));
    CHECK(*is_symplectic(g) == 1);
    CHECK(g.m[0][3] == 2);  // b goes to the outer corner
    CHECK(g.m[2][1] == 3);  // c' goes to the inner block
    auto h = iota(Mat2q(2, 0, 0, 3), Mat2q(0, 1, -6, 0));
    CHECK(*is_symplectic(h) == 6);
    CHECK_THROWS_AS(iota(Mat2q(2, 0, 0, 1), Mat2q(1, 0, 0, 1)),
                    determinant_mismatch);
    // multiplicativity through the embedding
    Mat2q a(1, 1, 0, 1), b(1, 0, 2, 1), c(3, 1, 2, 1), d(0, 1, -1, 0);
    CHECK(iota(a, c) * iota(b, d) == iota(a * b, c * d));
}

TEST_CASE("reduction mod p^r") {
    Mat4q M = Mat4q::identity();
    M.m[0][1] = Rat(1, 2);
    Mat4p R = reduce(M, Int(5), 2);
    CHECK(R.modulus == 25);
    CHECK(R.m[0][1] == 13);  // 1/2 mod 25
    CHECK(R.m[0][0] == 1);
    M.m[0][1] = Rat(1, 5);
    CHECK_THROWS_AS(reduce(M, Int(5), 2), validation_error);
    CHECK(reduce(Mat4q::identity(), Int(5), 1).det() == 1);
}

TEST_CASE("parabolic membership mod p") {
    Int p(5);
    auto red = [&](const Mat4q& M) { return reduce(M, p, 1); };

    Mat4p id = red(Mat4q::identity());
    for (auto P : {Parabolic::none, Parabolic::borel, Parabolic::siegel,
                   Parabolic::klingen})
        CHECK(in_parabolic(id, p, P));

    Mat4p ub = red(u_b_constant());
    CHECK(in_parabolic(ub, p, Parabolic::none));
    CHECK(!in_parabolic(ub, p, Parabolic::borel));
    CHECK(!in_parabolic(ub, p, Parabolic::siegel));
    CHECK(!in_parabolic(ub, p, Parabolic::klingen));

    // upper triangular: in the Borel, hence in both parabolics
    Mat4p ubt = red(u_b_constant().transpose());
    CHECK(in_parabolic(ubt, p, Parabolic::borel));
    CHECK(in_parabolic(ubt, p, Parabolic::siegel));
    CHECK(in_parabolic(ubt, p, Parabolic::klingen));

    // Siegel but not Borel or Klingen
    Mat4q s = Mat4q::identity();
    s.m[1][0] = 1;
    CHECK(in_parabolic(red(s), p, Parabolic::siegel));
    CHECK(!in_parabolic(red(s), p, Parabolic::borel));
    CHECK(!in_parabolic(red(s), p, Parabolic::klingen));

    // Klingen but not Siegel
    Mat4q k = Mat4q::identity();
    k.m[2][1] = 2;
    CHECK(in_parabolic(red(k), p, Parabolic::klingen));
    CHECK(!in_parabolic(red(k), p, Parabolic::siegel));

    // degenerate mod p: never in a parabolic
    Mat4p deg = red(Mat4q::diag(5, 1, 1, 1));
    CHECK(!in_parabolic(deg, p, Parabolic::none));
    CHECK(!in_parabolic(deg, p, Parabolic::borel));
}

TEST_CASE("open-orbit condition for u_Kl") {
    Int p(5);
    auto red = [&](const Mat4q& M) { return reduce(M, p, 1); };
    CHECK(valid_u_kl(red(u_b_constant()), p));
    CHECK(!valid_u_kl(red(Mat4q::identity()), p));  // column (*, 0, 0, *)
    CHECK(!valid_u_kl(red(J_form()), p));           // column (0, 0, 0, *)
    Mat4q M = Mat4q::identity();
    M.m[1][0] = 1;  // column (1, 1, 0, 0): escapes both excluded shapes
    CHECK(valid_u_kl(red(M), p));
    Mat4q N;  // first column (0, 1, 1, 0)
    N.m[1][0] = 1;
    N.m[2][0] = 1;
    CHECK(!valid_u_kl(red(N), p));
}
