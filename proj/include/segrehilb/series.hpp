#pragma once

// Truncated formal power series over Rational. All computations are exact
// modulo z^order. Binary operations between series of different orders
// truncate to the smaller order.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "segrehilb/rational.hpp"

namespace segrehilb {

struct ZeroConstantTerm : std::domain_error {
    ZeroConstantTerm() : std::domain_error("series: constant term is zero") {}
};
struct NonUnitConstantTerm : std::domain_error {
    NonUnitConstantTerm() : std::domain_error("series: constant term is not 1") {}
};
struct BadConstantTerm : std::domain_error {
    explicit BadConstantTerm(const char* what) : std::domain_error(what) {}
};
struct NonzeroInnerConstant : std::domain_error {
    NonzeroInnerConstant() : std::domain_error("compose: inner series has nonzero constant term") {}
};
struct NotInvertible : std::domain_error {
    NotInvertible() : std::domain_error("revert: series needs f(0)=0 and f'(0)!=0") {}
};

class TruncatedSeries {
public:
    explicit TruncatedSeries(int order)
        : coeffs_(static_cast<size_t>(order)) {
        if (order < 1) throw std::invalid_argument("series order must be positive");
    }
    TruncatedSeries(std::vector<Rational> coeffs)
        : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("series order must be positive");
    }

    static TruncatedSeries constant(const Rational& c, int order) {
        TruncatedSeries s(order);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(int order) { return constant(1, order); }
    /// The identity series z (zero when order == 1).
    static TruncatedSeries identity(int order) {
        TruncatedSeries s(order);
        if (order > 1) s.coeffs_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()); }
    const Rational& operator[](int i) const { return coeffs_[static_cast<size_t>(i)]; }
    Rational& at(int i) { return coeffs_[static_cast<size_t>(i)]; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    TruncatedSeries truncate(int new_order) const {
        new_order = std::min(new_order, order());
        return TruncatedSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_order));
    }

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
        return a.coeffs_ == b.coeffs_;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i < n; ++i) r.at(i) = a[i] + b[i];
        return r;
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i < n; ++i) r.at(i) = a[i] - b[i];
        return r;
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        int n = std::min(a.order(), b.order());
        TruncatedSeries r(n);
        for (int i = 0; i < n; ++i) {
            if (a[i].is_zero()) continue;
            for (int j = 0; i + j < n; ++j)
                r.at(i + j) += a[i] * b[j];
        }
        return r;
    }
    friend TruncatedSeries operator*(const Rational& c, const TruncatedSeries& a) {
        TruncatedSeries r(a.order());
        for (int i = 0; i < a.order(); ++i) r.at(i) = c * a[i];
        return r;
    }

    TruncatedSeries derivative() const {
        TruncatedSeries r(order());
        for (int i = 1; i < order(); ++i) r.at(i - 1) = Rational(i) * coeffs_[static_cast<size_t>(i)];
        return r;
    }

private:
    std::vector<Rational> coeffs_;
};

/// Multiplicative inverse modulo z^order; requires f(0) != 0.
inline TruncatedSeries inverse(const TruncatedSeries& f) {
    if (f[0].is_zero()) throw ZeroConstantTerm();
    int n = f.order();
    TruncatedSeries g(n);
    g.at(0) = Rational(1) / f[0];
    for (int i = 1; i < n; ++i) {
        Rational s = 0;
        for (int j = 1; j <= i; ++j) s += f[j] * g[i - j];
        g.at(i) = -s / f[0];
    }
    return g;
}

/// f^q via the binomial series sum_k binom(q,k) (f-1)^k; requires f(0)=1.
inline TruncatedSeries pow_rat(const TruncatedSeries& f, const Rational& q) {
    if (f[0] != Rational(1)) throw NonUnitConstantTerm();
    int n = f.order();
    TruncatedSeries u = f - TruncatedSeries::one(n);  // nilpotent mod z^n
    TruncatedSeries result = TruncatedSeries::one(n);
    TruncatedSeries upow = TruncatedSeries::one(n);
    for (int k = 1; k < n; ++k) {
        upow = upow * u;
        result = result + binom_rat(q, k) * upow;
    }
    return result;
}

inline TruncatedSeries exp_series(const TruncatedSeries& f) {
    if (!f[0].is_zero()) throw BadConstantTerm("exp: constant term must be 0");
    int n = f.order();
    TruncatedSeries result = TruncatedSeries::one(n);
    TruncatedSeries fpow = TruncatedSeries::one(n);
    Int fact = 1;
    for (int k = 1; k < n; ++k) {
        fpow = fpow * f;
        fact *= k;
        result = result + Rational(Int(1), fact) * fpow;
    }
    return result;
}

inline TruncatedSeries log_series(const TruncatedSeries& f) {
    if (f[0] != Rational(1)) throw BadConstantTerm("log: constant term must be 1");
    int n = f.order();
    TruncatedSeries u = f - TruncatedSeries::one(n);
    TruncatedSeries result(n);
    TruncatedSeries upow = TruncatedSeries::one(n);
    for (int k = 1; k < n; ++k) {
        upow = upow * u;
        Rational term = Rational(Int((k % 2) ? 1 : -1), Int(k));
        result = result + term * upow;
    }
    return result;
}

/// f(g(z)) by Horner's rule; requires g(0)=0.
inline TruncatedSeries compose(const TruncatedSeries& f, const TruncatedSeries& g) {
    if (!g[0].is_zero()) throw NonzeroInnerConstant();
    int n = std::min(f.order(), g.order());
    TruncatedSeries gt = g.truncate(n);
    TruncatedSeries result = TruncatedSeries::constant(f[std::min(f.order(), n) - 1], n);
    for (int i = std::min(f.order(), n) - 2; i >= 0; --i) {
        result = result * gt;
        result.at(0) += f[i];
    }
    return result;
}

/// Compositional inverse by Newton iteration on compose(f, g) = z.
/// Requires f(0)=0 and f'(0) != 0.
inline TruncatedSeries revert(const TruncatedSeries& f) {
    if (!f[0].is_zero() || f.order() < 2 || f[1].is_zero()) throw NotInvertible();
    int n = f.order();
    TruncatedSeries g(n);
    g.at(1) = Rational(1) / f[1];
    TruncatedSeries id = TruncatedSeries::identity(n);
    TruncatedSeries fp = f.derivative();
    // Quadratic convergence: each step doubles the number of correct
    // coefficients, starting from two.
    for (int correct = 2; correct < n; correct *= 2) {
        TruncatedSeries err = compose(f, g) - id;
        g = g - err * inverse(compose(fp, g));
    }
    return g;
}

}  // namespace segrehilb
