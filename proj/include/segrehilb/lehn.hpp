#pragma once

// Lehn's generating series and its closed-form consequences: the
// change-of-variable evaluator, extraction of the universal series A1 and
// A4, the K-trivial surface families, and the two-variable asymptotics.

#include <stdexcept>
#include <string>
#include <vector>

#include "segrehilb/rational.hpp"
#include "segrehilb/report.hpp"
#include "segrehilb/segre.hpp"
#include "segrehilb/series.hpp"

namespace segrehilb {

struct NotKTrivial : std::domain_error {
    NotKTrivial() : std::domain_error("surface is not K-trivial (K2 and HK must vanish)") {}
};

/// Intersection numbers of a polarized surface. c2 follows from Noether's
/// formula and is exposed read-only.
struct SurfaceInvariants {
    long K2 = 0;
    long HK = 0;
    long H2 = 0;
    long chiO = 0;

    long c2() const { return 12 * chiO - K2; }
    bool k_trivial() const { return K2 == 0 && HK == 0; }

    static SurfaceInvariants k3(long ell) { return {0, 0, 2 * ell, 2}; }
    static SurfaceInvariants abelian(long ell) { return {0, 0, 2 * ell, 0}; }
    static SurfaceInvariants enriques(long ell) { return {0, 0, 2 * ell, 1}; }
};

struct LehnConstants {
    Rational a, b, c;
};

inline LehnConstants lehn_constants(const SurfaceInvariants& s) {
    LehnConstants k;
    k.a = Rational(s.HK - 2 * s.K2);
    k.b = Rational(s.H2 - 2 * s.HK + s.K2 + 3 * s.chiO);
    k.c = Rational(Int(s.H2), Int(2)) - Rational(Int(s.HK), Int(2)) + Rational(s.chiO);
    return k;
}

namespace detail {

/// 1 + c*z as a truncated series.
inline TruncatedSeries linear(const Rational& c, int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    if (order > 1) s.at(1) = c;
    return s;
}

/// 1 - 6w + 6w^2.
inline TruncatedSeries lehn_denominator(int order) {
    TruncatedSeries s = TruncatedSeries::one(order);
    if (order > 1) s.at(1) = -6;
    if (order > 2) s.at(2) = 6;
    return s;
}

}  // namespace detail

/// f(c*z): rescales the series argument. Used for the substitutions
/// x = 2z and its inverses.
inline TruncatedSeries scale_argument(const TruncatedSeries& f, const Rational& c) {
    TruncatedSeries r(f.order());
    Rational p = 1;
    for (int i = 0; i < f.order(); ++i) {
        r.at(i) = f[i] * p;
        p *= c;
    }
    return r;
}

/// The inverse change of variable of Lehn's conjecture: w as a series in z,
/// where z = w(1-w)(1-2w)^4 / (1-6w+6w^2)^3.
inline TruncatedSeries lehn_w_of_z(int order) {
    TruncatedSeries w = TruncatedSeries::identity(order);
    TruncatedSeries z = w * detail::linear(-1, order)
        * pow_rat(detail::linear(-2, order), 4)
        * pow_rat(detail::lehn_denominator(order), -3);
    return revert(z);
}

/// Evaluates (1-w)^a (1-2w)^b / (1-6w+6w^2)^c at w = w(z).
inline TruncatedSeries lehn_series(const LehnConstants& k, int order) {
    TruncatedSeries f = pow_rat(detail::linear(-1, order), k.a)
        * pow_rat(detail::linear(-2, order), k.b)
        * pow_rat(detail::lehn_denominator(order), Rational(0) - k.c);
    return compose(f, lehn_w_of_z(order));
}

/// t as a series in z, for the substitution z = t(1+t)^2 / 2.
inline TruncatedSeries t_of_z(int order) {
    TruncatedSeries t = TruncatedSeries::identity(order);
    TruncatedSeries z = Rational(Int(1), Int(2)) * (t * pow_rat(detail::linear(1, order), 2));
    return revert(z);
}

/// A1(z), determined by A1(t(1+t)^2/2) = log(1+t)/2.
inline TruncatedSeries a1_series(int order) {
    TruncatedSeries in_t = Rational(Int(1), Int(2)) * log_series(detail::linear(1, order));
    return compose(in_t, t_of_z(order));
}

/// A4(z), determined by A4(t(1+t)^2/2) = log(1+t)/8 - log(1+3t)/24.
inline TruncatedSeries a4_series(int order) {
    TruncatedSeries in_t = Rational(Int(1), Int(8)) * log_series(detail::linear(1, order))
        - Rational(Int(1), Int(24)) * log_series(detail::linear(3, order));
    return compose(in_t, t_of_z(order));
}

/// exp(H^2 * A1 + c2 * A4) for a surface with numerically trivial K.
inline TruncatedSeries ktrivial_series(const SurfaceInvariants& s, int order) {
    if (!s.k_trivial()) throw NotKTrivial();
    TruncatedSeries arg = Rational(s.H2) * a1_series(order) + Rational(s.c2()) * a4_series(order);
    return exp_series(arg);
}

/// Closed form for abelian and bielliptic surfaces of degree 2l:
/// coefficient of z^n is 2^n * (l/n) * binom(l-2n-1, n-1) for n >= 1.
inline TruncatedSeries abelian_closed(long ell, int order) {
    TruncatedSeries s(order);
    s.at(0) = 1;
    for (int n = 1; n < order; ++n)
        s.at(n) = Rational(Int(pow_int(2, n) * binom_int(ell - 2 * n - 1, n - 1)))
                * Rational(Int(ell), Int(n));
    return s;
}

/// The series sum_n binom(l-2n+2, n) x^n of the change-of-variable identity.
inline TruncatedSeries binom_sum_series(long ell, int order) {
    TruncatedSeries s(order);
    for (int n = 0; n < order; ++n)
        s.at(n) = Rational(binom_int(ell - 2 * n + 2, n));
    return s;
}

/// Enriques check: the square of exp(2l*A1 + 12*A4) must equal
/// sum_n 2^n binom(2l-2n+2, n) z^n.
inline CheckReport enriques_check(long ell, int order) {
    CheckReport report;
    report.name = "corollary2";
    report.params = {{"ell", std::to_string(ell)}};
    report.order = order;
    TruncatedSeries e = ktrivial_series(SurfaceInvariants::enriques(ell), order);
    TruncatedSeries rhs = scale_argument(binom_sum_series(2 * ell, order), 2);
    compare_series(report, e * e, rhs);
    return report;
}

/// (sum_n x^n binom(-2n+2, n))^{chi/2} with x = 2z; half-integer exponent
/// when chi is odd. Equals exp(12 * chi * A4).
inline TruncatedSeries elliptic_series(long chiO, int order) {
    if (chiO < 0) throw DomainError("elliptic_series: chiO must be nonnegative");
    TruncatedSeries base = scale_argument(binom_sum_series(0, order), 2);
    return pow_rat(base, Rational(Int(chiO), Int(2)));
}

/// y as a series in x, for the substitution x = y(1-2y)^2 / (1-3y)^3.
inline TruncatedSeries y_of_x(int order) {
    TruncatedSeries y = TruncatedSeries::identity(order);
    TruncatedSeries x = y * pow_rat(detail::linear(-2, order), 2)
        * pow_rat(detail::linear(-3, order), -3);
    return revert(x);
}

/// The change-of-variable identity: sum_n x^n binom(l-2n+2, n) equals
/// (1-2y)^{l+3} / (1-3y)^{l+2} after substituting y = y(x). Holds for all
/// integers l; negative l are the induction base cases.
inline CheckReport ident_check(long ell, int order) {
    CheckReport report;
    report.name = "ident";
    report.params = {{"ell", std::to_string(ell)}};
    report.order = order;
    TruncatedSeries lhs = binom_sum_series(ell, order);
    TruncatedSeries in_y = pow_rat(detail::linear(-2, order), Rational(ell + 3))
        * pow_rat(detail::linear(-3, order), Rational(-ell - 2));
    compare_series(report, lhs, compose(in_y, y_of_x(order)));
    return report;
}

/// Pascal recursion of the left side: f_{l+1} = f_l + x * f_{l-2}.
inline CheckReport pascal_check(long ell, int order) {
    CheckReport report;
    report.name = "pascal";
    report.params = {{"ell", std::to_string(ell)}};
    report.order = order;
    TruncatedSeries rhs = binom_sum_series(ell, order);
    TruncatedSeries shifted(order);
    TruncatedSeries fm2 = binom_sum_series(ell - 2, order);
    for (int i = 1; i < order; ++i) shifted.at(i) = fm2[i - 1];
    compare_series(report, binom_sum_series(ell + 1, order), rhs + shifted);
    return report;
}

/// Dense bivariate polynomial table: entry (i, j) is the coefficient of
/// x^i y^j.
struct BivariateTable {
    std::vector<std::vector<Rational>> entries;  // entries[i][j]

    Rational coeff(int i, int j) const {
        if (i < 0 || j < 0) return Rational(0);
        if (static_cast<size_t>(i) >= entries.size()) return Rational(0);
        if (static_cast<size_t>(j) >= entries[static_cast<size_t>(i)].size()) return Rational(0);
        return entries[static_cast<size_t>(i)][static_cast<size_t>(j)];
    }
};

struct ChernSegreLeading {
    BivariateTable top;        // coefficient of (2l)^n:     y^n (y-x)^n / n!
    BivariateTable subleading; // coefficient of (2l)^{n-1}: y^n (y-x)^{n-1} (2x-5y) / (n-2)!
};

/// The two leading coefficient polynomials of the mixed Chern/Segre
/// asymptotics in (x, y). The coefficient of x*y^{2n-1} in each table
/// recovers the two leading coefficients of alpha_next's polynomial form.
inline ChernSegreLeading chern_segre_leading(long n) {
    if (n < 2) throw DomainError("chern_segre_leading: requires n >= 2");
    auto y_minus_x_pow = [](long p) {
        // (y-x)^p: coefficient of x^k y^{p-k} is (-1)^k binom(p, k).
        BivariateTable t;
        t.entries.assign(static_cast<size_t>(p) + 1, {});
        for (long k = 0; k <= p; ++k) {
            auto& row = t.entries[static_cast<size_t>(k)];
            row.assign(static_cast<size_t>(p - k) + 1, Rational(0));
            Int b = binom_int(p, k);
            row[static_cast<size_t>(p - k)] = Rational((k % 2 == 0) ? b : -b);
        }
        return t;
    };
    auto shift_y = [](BivariateTable t, long by) {
        for (auto& row : t.entries)
            row.insert(row.begin(), static_cast<size_t>(by), Rational(0));
        return t;
    };
    auto scale = [](BivariateTable t, const Rational& s) {
        for (auto& row : t.entries)
            for (auto& v : row) v *= s;
        return t;
    };

    ChernSegreLeading out;
    out.top = scale(shift_y(y_minus_x_pow(n), n), Rational(Int(1), factorial(n)));

    // y^n (y-x)^{n-1} (2x-5y): multiply (y-x)^{n-1} by (2x-5y) termwise.
    BivariateTable base = y_minus_x_pow(n - 1);
    BivariateTable prod;
    prod.entries.assign(static_cast<size_t>(n) + 1, std::vector<Rational>(static_cast<size_t>(n) + 1, Rational(0)));
    for (size_t i = 0; i < base.entries.size(); ++i)
        for (size_t j = 0; j < base.entries[i].size(); ++j) {
            const Rational& c = base.entries[i][j];
            if (c.is_zero()) continue;
            prod.entries[i + 1][j] += Rational(2) * c;
            prod.entries[i][j + 1] -= Rational(5) * c;
        }
    out.subleading = scale(shift_y(std::move(prod), n), Rational(Int(1), factorial(n - 2)));
    return out;
}

}  // namespace segrehilb
