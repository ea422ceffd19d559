#pragma once

#include <map>
#include <string>

#include "urs/errors.hpp"
#include "urs/scalar.hpp"

namespace urs {

// Laurent polynomial in w = q^(1/2) over Q.
class QLaurent {
  public:
    using Terms = std::map<int, Rat>;

    QLaurent() = default;
    QLaurent(long c) : QLaurent(Rat(c)) {}
    explicit QLaurent(const Rat& c) {
        if (c != 0) terms_[0] = c;
    }
    static QLaurent monomial(const Rat& c, int e) {
        QLaurent p;
        if (c != 0) p.terms_[e] = c;
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_monomial() const { return terms_.size() == 1; }
    size_t size() const { return terms_.size(); }
    void add_term(int e, const Rat& c);

    QLaurent operator+(const QLaurent& o) const;
    QLaurent operator-(const QLaurent& o) const;
    QLaurent operator*(const QLaurent& o) const;
    QLaurent operator-() const;
    bool operator==(const QLaurent& o) const { return terms_ == o.terms_; }

    QLaurent scaled(const Rat& c) const;
    int lead_expo() const { return terms_.rbegin()->first; }
    const Rat& lead_coeff() const { return terms_.rbegin()->second; }

    std::string str() const;

  private:
    Terms terms_;
};

// One-parameter Laurent fraction in q^(1/2); target of the specialization
// u -> q^(1/2), v -> q^(-1/2).
class QScalar {
  public:
    QScalar() : num_(), den_(1) {}
    QScalar(long c) : num_(c), den_(1) {}
    explicit QScalar(const QLaurent& n) : num_(n), den_(1) {}
    QScalar(const QLaurent& n, const QLaurent& d);

    static QScalar q() { return QScalar(QLaurent::monomial(1, 2)); }
    static QScalar w(int e) { return QScalar(QLaurent::monomial(1, e)); }
    static QScalar one() { return QScalar(1); }
    static QScalar zero() { return QScalar(); }

    const QLaurent& num() const { return num_; }
    const QLaurent& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o) { return *this = *this + o; }
    QScalar& operator-=(const QScalar& o) { return *this = *this - o; }
    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }
    QScalar inv() const;
    QScalar pow(long e) const;
    bool operator==(const QScalar& o) const;
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    std::string str() const;

  private:
    void canonicalize();
    QLaurent num_, den_;
};

// Ring homomorphism Q(u,v) -> Q(w): u^a v^b -> w^(a-b). Raises
// SpecializationPole if the denominator collapses to zero.
QScalar specialize_one_param(const Scalar& x);

// [n] = (q^n - q^(-n)) / (q - q^(-1))
QScalar q_integer(long n);

}  // namespace urs
