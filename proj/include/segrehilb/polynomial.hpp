#pragma once

// Dense exact polynomials in the half-degree variable l (coefficients
// ascending by power). Used for the alpha-family polynomials and for the
// root-and-leading-term reconstruction.

#include <stdexcept>
#include <string>
#include <vector>

#include "segrehilb/rational.hpp"

namespace segrehilb {

class PolynomialInL {
public:
    PolynomialInL() : coeffs_{Rational(0)} {}
    PolynomialInL(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(Rational(0));
        trim();
    }
    static PolynomialInL constant(const Rational& c) { return PolynomialInL({c}); }
    /// The monomial l.
    static PolynomialInL variable() { return PolynomialInL({Rational(0), Rational(1)}); }

    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    /// Coefficient of l^i (zero beyond the degree).
    Rational coeff(int i) const {
        if (i < 0 || i > degree()) return Rational(0);
        return coeffs_[static_cast<size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const {
        Rational r = 0;
        for (int i = degree(); i >= 0; --i) r = r * x + coeffs_[static_cast<size_t>(i)];
        return r;
    }

    friend bool operator==(const PolynomialInL& a, const PolynomialInL& b) {
        return a.coeffs_ == b.coeffs_;
    }
    friend PolynomialInL operator+(const PolynomialInL& a, const PolynomialInL& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) c[i] += b.coeffs_[i];
        }
        return PolynomialInL(std::move(c));
    }
    friend PolynomialInL operator-(const PolynomialInL& a, const PolynomialInL& b) {
        std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size()) c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size()) c[i] -= b.coeffs_[i];
        }
        return PolynomialInL(std::move(c));
    }
    friend PolynomialInL operator*(const PolynomialInL& a, const PolynomialInL& b) {
        std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i].is_zero()) continue;
            for (size_t j = 0; j < b.coeffs_.size(); ++j)
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
        return PolynomialInL(std::move(c));
    }
    friend PolynomialInL operator*(const Rational& s, const PolynomialInL& a) {
        std::vector<Rational> c = a.coeffs_;
        for (auto& x : c) x *= s;
        return PolynomialInL(std::move(c));
    }

private:
    void trim() {
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

/// binom(p, b) with a polynomial upper argument: p(p-1)...(p-b+1)/b!.
inline PolynomialInL binom_poly(const PolynomialInL& p, long b) {
    if (b < 0) return PolynomialInL();
    PolynomialInL prod = PolynomialInL::constant(1);
    for (long i = 0; i < b; ++i)
        prod = prod * (p - PolynomialInL::constant(Rational(i)));
    return Rational(Int(1), factorial(b)) * prod;
}

}  // namespace segrehilb
