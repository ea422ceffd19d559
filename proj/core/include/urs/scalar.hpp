#pragma once

#include <string>

#include "urs/errors.hpp"
#include "urs/laurent.hpp"

namespace urs {

// Element of the fraction field of Laurent polynomials in u = r^(1/2),
// v = s^(1/2) over Q. Every structure constant of the algebra lives here.
//
// The stored form is canonical under a heuristic simplification (common
// monomial and rational content, exact division by u^2 - v^2 and u^2 + v^2,
// denominator leading coefficient +1 under the fixed exponent order).
// Equality is decided by cross-multiplication and never relies on the
// heuristic being a complete gcd.
class Scalar {
  public:
    Scalar() : num_(Laurent::zero()), den_(Laurent::one()) {}
    Scalar(long c) : num_(Laurent(c)), den_(Laurent::one()) {}
    explicit Scalar(const Rat& c) : num_(Laurent(c)), den_(Laurent::one()) {}
    explicit Scalar(const Laurent& p) : num_(p), den_(Laurent::one()) {}
    Scalar(const Laurent& n, const Laurent& d);

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(1); }
    static Scalar r() { return monomial(1, 2, 0); }
    static Scalar s() { return monomial(1, 0, 2); }
    static Scalar rs() { return monomial(1, 2, 2); }
    static Scalar r_minus_s() { return Scalar(Laurent::monomial(1, 2, 0) - Laurent::monomial(1, 0, 2)); }
    // Monomial u^a v^b with rational coefficient.
    static Scalar monomial(const Rat& c, int a, int b) { return Scalar(Laurent::monomial(c, a, b)); }

    const Laurent& num() const { return num_; }
    const Laurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }
    bool is_monomial() const { return num_.is_monomial() && den_.is_monomial(); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

    Scalar inv() const;
    Scalar pow(long e) const;

    // Exact equality via cross-multiplication.
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // r <-> s swap (acts on u, v exponents).
    Scalar tau() const;

    std::string str() const;

  private:
    void canonicalize();
    Laurent num_, den_;
};

inline Scalar operator*(long c, const Scalar& x) { return Scalar(c) * x; }

// base^(numerator/2) for base a monomial in r, s (e.g. pairing values, rs).
// The result is a Laurent monomial in u, v; a non-monomial base or a
// non-representable half power raises UnsupportedRadical.
Scalar half_power(const Scalar& base, long numerator);

// {ell * a}_<i,i> = (rs)^(|ell|/2) (<i,i>^(ell a/2) - <i,i>^(-ell a/2)) / (|ell| (r-s))
// with <i,i> = r s^(-1); antisymmetric in each argument separately. The
// signed-denominator variant used by the a-vs-x commutation relations is
// sign(ell) times this. ell = 0 is a domain error.
Scalar deformed_bracket(long ell, long a_ij);

}  // namespace urs
