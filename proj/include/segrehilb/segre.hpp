#pragma once

// Closed formulas for the top Segre integrals on K3 surfaces and the exact
// linear-algebra machinery behind them: the recursion system, the
// root-and-leading-term reconstruction, and the matrix A_n.

#include <stdexcept>

#include "segrehilb/matrix.hpp"
#include "segrehilb/polynomial.hpp"
#include "segrehilb/rational.hpp"

namespace segrehilb {

struct DomainError : std::domain_error {
    explicit DomainError(const char* what) : std::domain_error(what) {}
};

/// 2^n * binom(l - 2n + 2, n): the top Segre integral over the Hilbert
/// scheme of n points of a K3 surface of degree 2l.
inline Int segre_top(long ell, long n) {
    if (n < 0) throw DomainError("segre_top: n must be nonnegative");
    return pow_int(2, n) * binom_int(ell - 2 * n + 2, n);
}

/// The same value as a degree-n polynomial in l, leading coefficient 2^n/n!.
inline PolynomialInL alpha_top_poly(long n) {
    if (n < 0) throw DomainError("alpha_top_poly: n must be nonnegative");
    PolynomialInL l = PolynomialInL::variable();
    PolynomialInL arg = l + PolynomialInL::constant(Rational(-2 * n + 2));
    return Rational(pow_int(2, n)) * binom_poly(arg, n);
}

/// The integral of c_1 * s_{2n-1}: -2^n * binom(l-2n+2, n-1) * (l - (3n-3)/2).
inline Rational alpha_next(long ell, long n) {
    if (n < 2) throw DomainError("alpha_next: requires n >= 2");
    Rational root_shift = Rational(ell) - Rational(Int(3 * n - 3), Int(2));
    return Rational(Int(-pow_int(2, n) * binom_int(ell - 2 * n + 2, n - 1))) * root_shift;
}

/// Polynomial-in-l form of alpha_next, degree n.
inline PolynomialInL alpha_next_poly(long n) {
    if (n < 2) throw DomainError("alpha_next_poly: requires n >= 2");
    PolynomialInL l = PolynomialInL::variable();
    PolynomialInL arg = l + PolynomialInL::constant(Rational(-2 * n + 2));
    PolynomialInL shift = l - PolynomialInL::constant(Rational(Int(3 * n - 3), Int(2)));
    return Rational(Int(-pow_int(2, n))) * (binom_poly(arg, n - 1) * shift);
}

/// The integral of c_n * s_n, reduced to the curve case: (-4)^n * binom(l/2, n).
/// Odd l is outside the geometric setting but well defined through binom_rat.
inline Rational alpha_curve(long ell, long n) {
    if (n < 0) throw DomainError("alpha_curve: n must be nonnegative");
    Rational sign = (n % 2 == 0) ? Rational(pow_int(4, n)) : Rational(Int(-pow_int(4, n)));
    return sign * binom_rat(Rational(Int(ell), Int(2)), n);
}

/// Polynomial-in-l form of alpha_curve, degree n.
inline PolynomialInL alpha_curve_poly(long n) {
    if (n < 0) throw DomainError("alpha_curve_poly: n must be nonnegative");
    PolynomialInL half_l({Rational(0), Rational(Int(1), Int(2))});
    Rational sign = (n % 2 == 0) ? Rational(pow_int(4, n)) : Rational(Int(-pow_int(4, n)));
    return sign * binom_poly(half_l, n);
}

/// The (n+1) x (n+1) coefficient system of the localization recursion:
/// rows k = 1..n have entries binom(l+2-i-2n, l+2-i-2k) for columns
/// i = 0..n, and the final row is all ones (alpha_0 + ... + alpha_n = 0).
inline RationalMatrix recursion_matrix(long ell, long n) {
    if (n < 1) throw DomainError("recursion_matrix: n must be positive");
    RationalMatrix m(static_cast<int>(n) + 1, static_cast<int>(n) + 1);
    for (long k = 1; k <= n; ++k)
        for (long i = 0; i <= n; ++i)
            m.at(static_cast<int>(k) - 1, static_cast<int>(i)) =
                Rational(binom_int(ell + 2 - i - 2 * n, ell + 2 - i - 2 * k));
    for (long i = 0; i <= n; ++i) m.at(static_cast<int>(n), static_cast<int>(i)) = 1;
    return m;
}

/// The n x n matrix A_n with entries a_ij = (-1)^{j+1} * binom(2i-1, j),
/// 0 <= i, j <= n-1. Row i = 0 is (-1, -1, ..., -1), the sum relation
/// beta_1 + ... + beta_n = 0 up to overall sign; rows i >= 1 carry the
/// coefficients binom(-j, 2i-j) = (-1)^j binom(2i-1, j-1) on beta_j (with
/// j shifted to the column index j-1).
inline RationalMatrix lehn_matrix(long n) {
    if (n < 1) throw DomainError("lehn_matrix: n must be positive");
    RationalMatrix m(static_cast<int>(n), static_cast<int>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            Int b = binom_int(2 * i - 1, j);
            m.at(static_cast<int>(i), static_cast<int>(j)) = Rational((j % 2 == 0) ? -b : b);
        }
    return m;
}

/// Rebuilds alpha_n from its n roots l = 2n-2, ..., 3n-3 and leading
/// coefficient 2^n/n!; must agree with alpha_top_poly coefficientwise.
inline PolynomialInL reconstruct_alpha_top(long n) {
    if (n < 1) throw DomainError("reconstruct_alpha_top: n must be positive");
    PolynomialInL l = PolynomialInL::variable();
    PolynomialInL prod = PolynomialInL::constant(1);
    for (long r = 2 * n - 2; r <= 3 * n - 3; ++r)
        prod = prod * (l - PolynomialInL::constant(Rational(r)));
    return Rational(pow_int(2, n), factorial(n)) * prod;
}

}  // namespace segrehilb
