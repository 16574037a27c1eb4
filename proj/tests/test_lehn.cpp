#include <catch2/catch_amalgamated.hpp>

#include "segrehilb/lehn.hpp"

using namespace segrehilb;

namespace {

TruncatedSeries segre_top_series(long ell, int order) {
    TruncatedSeries s(order);
    for (int n = 0; n < order; ++n) s.at(n) = Rational(segre_top(ell, n));
    return s;
}

}  // namespace

TEST_CASE("lehn constants for the presets") {
    auto k3 = lehn_constants(SurfaceInvariants::k3(5));
    CHECK(k3.a == Rational(0));
    CHECK(k3.b == Rational(16));  // 2l+6
    CHECK(k3.c == Rational(7));   // l+2

    auto ab = lehn_constants(SurfaceInvariants::abelian(5));
    CHECK(ab.a == Rational(0));
    CHECK(ab.b == Rational(10));
    CHECK(ab.c == Rational(5));

    auto en = lehn_constants(SurfaceInvariants::enriques(5));
    CHECK(en.a == Rational(0));
    CHECK(en.b == Rational(13));  // 2l+3
    CHECK(en.c == Rational(6));   // l+1

    CHECK(SurfaceInvariants::k3(5).c2() == 24);
    CHECK(SurfaceInvariants::abelian(5).c2() == 0);
}

TEST_CASE("change of variable round trips") {
    int N = 12;
    TruncatedSeries w = TruncatedSeries::identity(N);
    TruncatedSeries z_of_w = w * detail::linear(-1, N)
        * pow_rat(detail::linear(-2, N), 4)
        * pow_rat(detail::lehn_denominator(N), -3);
    CHECK(compose(z_of_w, lehn_w_of_z(N)) == TruncatedSeries::identity(N));
    CHECK(compose(lehn_w_of_z(N), z_of_w) == TruncatedSeries::identity(N));
}

TEST_CASE("lehn series basics") {
    CHECK(lehn_series(LehnConstants{0, 0, 0}, 10) == TruncatedSeries::one(10));
    for (long ell = 0; ell <= 6; ++ell) {
        TruncatedSeries s = lehn_series(LehnConstants{Rational(0), Rational(2 * ell + 6), Rational(ell + 2)}, 3);
        CHECK(s[0] == Rational(1));
        CHECK(s[1] == Rational(2 * ell));
    }
}

TEST_CASE("lehn series reproduces the closed K3 formula") {
    for (long ell : {0L, 1L, 3L, 7L, 12L})
        CHECK(lehn_series(LehnConstants{Rational(0), Rational(2 * ell + 6), Rational(ell + 2)}, 10)
              == segre_top_series(ell, 10));
}

TEST_CASE("A1 and A4 extraction") {
    int N = 12;
    TruncatedSeries a1 = a1_series(N);
    TruncatedSeries a4 = a4_series(N);
    CHECK(a1[0].is_zero());
    CHECK(a4[0].is_zero());
    CHECK(a1[1] == Rational(1));

    // defining functional equations, checked through the forward substitution
    TruncatedSeries t = TruncatedSeries::identity(N);
    TruncatedSeries z_of_t = Rational(Int(1), Int(2)) * (t * pow_rat(detail::linear(1, N), 2));
    CHECK(compose(a1, z_of_t) == Rational(Int(1), Int(2)) * log_series(detail::linear(1, N)));
    CHECK(compose(a4, z_of_t) ==
          Rational(Int(1), Int(8)) * log_series(detail::linear(1, N))
          - Rational(Int(1), Int(24)) * log_series(detail::linear(3, N)));

    for (long ell : {0L, 2L, 9L}) {
        TruncatedSeries lhs = exp_series(Rational(2 * ell) * a1 + Rational(24) * a4);
        CHECK(lhs == lehn_series(LehnConstants{Rational(0), Rational(2 * ell + 6), Rational(ell + 2)}, N));
    }
}

TEST_CASE("ktrivial series") {
    for (long ell : {0L, 1L, 5L}) {
        TruncatedSeries ab = ktrivial_series(SurfaceInvariants::abelian(ell), 8);
        CHECK(ab[1] == Rational(2 * ell));
        CHECK(ktrivial_series(SurfaceInvariants::k3(ell), 8)
              == lehn_series(lehn_constants(SurfaceInvariants::k3(ell)), 8));
    }
    CHECK(ktrivial_series(SurfaceInvariants{0, 0, 0, 0}, 8) == TruncatedSeries::one(8));
    CHECK_THROWS_AS(ktrivial_series(SurfaceInvariants{1, 0, 4, 1}, 8), NotKTrivial);
}

TEST_CASE("abelian closed form") {
    TruncatedSeries s = abelian_closed(6, 10);
    CHECK(s[0] == Rational(1));
    CHECK(s[1] == Rational(12));  // 2l
    for (long ell = 0; ell <= 12; ++ell)
        CHECK(abelian_closed(ell, 10) == ktrivial_series(SurfaceInvariants::abelian(ell), 10));
    TruncatedSeries zero_ell = abelian_closed(0, 10);
    for (int n = 1; n < 10; ++n) CHECK(zero_ell[n].is_zero());
}

TEST_CASE("enriques squaring identity") {
    for (long ell = 0; ell <= 10; ++ell) {
        CheckReport r = enriques_check(ell, 12);
        CHECK(r.match);
    }
    // hand expansion at order 2: (1 + 2l z + ...)^2 vs 1 + 2*binom(2l, 1) z + ...
    long ell = 4;
    TruncatedSeries e = ktrivial_series(SurfaceInvariants::enriques(ell), 3);
    CHECK(Rational(2) * e[1] == Rational(Int(2 * binom_int(2 * ell, 1))));
}

TEST_CASE("elliptic series") {
    CHECK(elliptic_series(0, 10) == TruncatedSeries::one(10));
    // chi = 2 gives the base series itself
    TruncatedSeries base = scale_argument(binom_sum_series(0, 10), 2);
    CHECK(elliptic_series(2, 10) == base);
    for (long chi = 0; chi <= 6; ++chi)
        CHECK(elliptic_series(chi, 12) == exp_series(Rational(12 * chi) * a4_series(12)));
    CHECK_THROWS_AS(elliptic_series(-1, 8), DomainError);
}

TEST_CASE("change-of-variable identity for the binomial sum") {
    for (long ell = -6; ell <= 10; ++ell) {
        CHECK(ident_check(ell, 14).match);
        CHECK(pascal_check(ell, 14).match);
    }
    // l = -4: the left side is dt/dx for x = t(1+t)^2
    int N = 12;
    TruncatedSeries t = TruncatedSeries::identity(N);
    TruncatedSeries x_of_t = t * pow_rat(detail::linear(1, N), 2);
    TruncatedSeries dtdx = revert(x_of_t).derivative().truncate(N - 1);
    CHECK(binom_sum_series(-4, N - 1) == dtdx);
    // l = -2: matches (1+t)/(1+3t) expanded through t(x)
    TruncatedSeries frac = detail::linear(1, N) * inverse(detail::linear(3, N));
    CHECK(binom_sum_series(-2, N) == compose(frac, revert(x_of_t)));
}

TEST_CASE("mismatch witness is populated on failure") {
    CheckReport r;
    r.name = "demo";
    TruncatedSeries a = TruncatedSeries::one(4);
    TruncatedSeries b = TruncatedSeries::one(4);
    b.at(2) = Rational(Int(1), Int(3));
    compare_series(r, a, b);
    CHECK(!r.match);
    CHECK(r.mismatch_index == 2);
    CHECK(r.lhs_value == "0");
    CHECK(r.rhs_value == "1/3");
}

TEST_CASE("chern/segre leading tables") {
    CHECK_THROWS_AS(chern_segre_leading(1), DomainError);

    // n = 2: top table is y^2 (y-x)^2 / 2
    ChernSegreLeading cs2 = chern_segre_leading(2);
    CHECK(cs2.top.coeff(0, 4) == Rational(Int(1), Int(2)));
    CHECK(cs2.top.coeff(1, 3) == Rational(-1));
    CHECK(cs2.top.coeff(2, 2) == Rational(Int(1), Int(2)));
    // subleading table is y^2 (y-x)(2x-5y) / 0!
    CHECK(cs2.subleading.coeff(0, 4) == Rational(-5));
    CHECK(cs2.subleading.coeff(1, 3) == Rational(7));
    CHECK(cs2.subleading.coeff(2, 2) == Rational(-2));

    for (long n = 2; n <= 8; ++n) {
        ChernSegreLeading cs = chern_segre_leading(n);
        // pure Segre term at x = 0: y^{2n}/n! times (2l)^n matches the
        // leading coefficient of alpha_top up to the sign bookkeeping of
        // the variable flip.
        CHECK(cs.top.coeff(0, static_cast<int>(2 * n)) == Rational(Int(1), factorial(n)));

        // coefficient of x y^{2n-1} recovers alpha_next's two leading
        // coefficients: -(2l)^n/(n-1)! and (5n-3)(2l)^{n-1}/(n-2)!.
        Rational c_top = cs.top.coeff(1, static_cast<int>(2 * n - 1));
        Rational c_sub = cs.subleading.coeff(1, static_cast<int>(2 * n - 1));
        CHECK(c_top == Rational(Int(-1), factorial(n - 1)));
        CHECK(c_sub == Rational(Int(5 * n - 3), factorial(n - 2)));

        PolynomialInL p = alpha_next_poly(n);
        CHECK(p.coeff(static_cast<int>(n)) == c_top * Rational(pow_int(2, n)));
        CHECK(p.coeff(static_cast<int>(n - 1)) == c_sub * Rational(pow_int(2, n - 1)));
    }
}
