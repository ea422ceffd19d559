#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>

#include "urs/rational.hpp"

namespace urs {

// Exponent pair (a, b) of a monomial u^a v^b, where u = r^(1/2), v = s^(1/2).
using Expo = std::pair<int, int>;

// Fixed total order on exponent pairs: compare v-degree first, then u-degree.
// The leading term of a polynomial is the maximal one under this order; the
// canonical form of a fraction normalizes the denominator's leading
// coefficient against it.
struct ExpoLess {
    bool operator()(const Expo& x, const Expo& y) const {
        if (x.second != y.second) return x.second < y.second;
        return x.first < y.first;
    }
};

// Laurent polynomial in u, v over Q. Stored coefficients are never zero.
class Laurent {
  public:
    using Terms = std::map<Expo, Rat, ExpoLess>;

    Laurent() = default;
    explicit Laurent(const Rat& c) {
        if (c != 0) terms_[{0, 0}] = c;
    }
    Laurent(long c) : Laurent(Rat(c)) {}

    static Laurent monomial(const Rat& c, int a, int b) {
        Laurent p;
        if (c != 0) p.terms_[{a, b}] = c;
        return p;
    }
    static Laurent zero() { return Laurent(); }
    static Laurent one() { return Laurent(1); }
    static Laurent u() { return monomial(1, 1, 0); }
    static Laurent v() { return monomial(1, 0, 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    bool is_one() const;
    size_t size() const { return terms_.size(); }

    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator*(const Laurent& o) const;
    Laurent operator-() const;
    Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
    Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

    Laurent scaled(const Rat& c) const;
    Laurent shifted(int da, int db) const;

    // Leading term under the fixed exponent order. Undefined on zero.
    Expo lead_expo() const { return terms_.rbegin()->first; }
    const Rat& lead_coeff() const { return terms_.rbegin()->second; }

    // Componentwise minimum of all exponents (monomial content).
    Expo min_expo() const;

    // Exact quotient, or nullopt if the division leaves a remainder.
    std::optional<Laurent> exact_div(const Laurent& d) const;

    // Swap u and v (the effect of r <-> s on coefficients).
    Laurent tau() const;

    void add_term(int a, int b, const Rat& c);

    std::string str() const;

  private:
    Terms terms_;
};

}  // namespace urs
