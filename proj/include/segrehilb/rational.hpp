#pragma once

// Exact rational scalars on top of GMP, plus the extended binomial
// coefficients (negative upper index, rational upper index) used
// throughout the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace segrehilb {

using Int = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Arithmetic is exact; there is no floating-point path.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0)
            throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    const mpq_class& raw() const { return v_; }
    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero())
            throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    /// Serializes as "p/q", or "p" when the denominator is 1.
    std::string str() const {
        if (is_integer()) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    /// Parses "p" or "p/q"; inverse of str().
    static Rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos)
            return Rational(Int(std::string(s)));
        Int num(std::string(s.substr(0, slash)));
        Int den(std::string(s.substr(slash + 1)));
        return Rational(num, den);
    }

private:
    mpq_class v_;
};

inline Int factorial(long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline Int pow_int(const Int& base, long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

/// Extended integer binomial:
///   binom(0,0) = 1, binom(a,b) = 0 for 0 <= a < b or b < 0,
///   binom(a,b) = a(a-1)...(a-b+1)/b! otherwise (so negative a is allowed
///   via the falling-factorial product).
/// The single product formula realizes all four listed conventions: for
/// 0 <= a < b the product passes through zero.
inline Int binom_int(const Int& a, long b) {
    if (b < 0) return 0;
    Int prod = 1;
    for (long i = 0; i < b; ++i) prod *= a - i;
    Int r;
    mpz_divexact(r.get_mpz_t(), prod.get_mpz_t(), factorial(b).get_mpz_t());
    return r;
}

inline Int binom_int(long a, long b) { return binom_int(Int(a), b); }

/// binom(q, b) = q(q-1)...(q-b+1)/b! for rational q; 0 for b < 0.
/// Agrees with binom_int whenever q is an integer.
inline Rational binom_rat(const Rational& q, long b) {
    if (b < 0) return Rational(0);
    Rational prod = 1;
    for (long i = 0; i < b; ++i) prod *= q - Rational(i);
    return prod / Rational(factorial(b));
}

}  // namespace segrehilb
