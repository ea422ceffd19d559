#include "urs/qscalar.hpp"

#include <sstream>

namespace urs {

void QLaurent::add_term(int e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QLaurent QLaurent::operator+(const QLaurent& o) const {
    QLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

QLaurent QLaurent::operator-(const QLaurent& o) const {
    QLaurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

QLaurent QLaurent::scaled(const Rat& c) const {
    QLaurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

std::string QLaurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        Rat a = it->second;
        if (lead) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? "-" : "+");
            if (a < 0) a = -a;
        }
        lead = false;
        int e = it->first;
        if (e == 0) {
            os << rat_str(a);
            continue;
        }
        if (a != 1) os << rat_str(a) << "*";
        os << "q";
        if (e != 2) {
            os << "^";
            if (e % 2 == 0)
                os << e / 2;
            else
                os << e << "/2";
        }
    }
    return os.str();
}

QScalar::QScalar(const QLaurent& n, const QLaurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void QScalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = QLaurent(1);
        return;
    }
    int mn = num_.terms().begin()->first, md = den_.terms().begin()->first;
    int shift = std::min(mn, md);
    if (shift != 0) {
        QLaurent n2, d2;
        for (const auto& [e, c] : num_.terms()) n2.add_term(e - shift, c);
        for (const auto& [e, c] : den_.terms()) d2.add_term(e - shift, c);
        num_ = n2;
        den_ = d2;
    }
    if (den_.is_monomial()) {
        int e = den_.lead_expo();
        QLaurent n2;
        for (const auto& [ee, c] : num_.terms()) n2.add_term(ee - e, c);
        num_ = n2;
        den_ = QLaurent::monomial(den_.lead_coeff(), 0);
    }
    Rat lc = den_.lead_coeff();
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
}

QScalar QScalar::operator+(const QScalar& o) const { return QScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
QScalar QScalar::operator-(const QScalar& o) const { return QScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
QScalar QScalar::operator*(const QScalar& o) const { return QScalar(num_ * o.num_, den_ * o.den_); }

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return QScalar(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::operator-() const {
    QScalar x = *this;
    x.num_ = -x.num_;
    return x;
}

QScalar QScalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    return QScalar(den_, num_);
}

QScalar QScalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    QScalar acc = QScalar::one(), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool QScalar::operator==(const QScalar& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

std::string QScalar::str() const {
    if (den_ == QLaurent(1)) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

QLaurent substitute(const Laurent& p) {
    QLaurent out;
    for (const auto& [e, c] : p.terms()) out.add_term(e.first - e.second, c);
    return out;
}

}  // namespace

QScalar specialize_one_param(const Scalar& x) {
    QLaurent d = substitute(x.den());
    if (d.is_zero()) throw SpecializationPole(x.str());
    return QScalar(substitute(x.num()), d);
}

QScalar q_integer(long n) {
    QLaurent num = QLaurent::monomial(1, static_cast<int>(2 * n)) - QLaurent::monomial(1, static_cast<int>(-2 * n));
    QLaurent den = QLaurent::monomial(1, 2) - QLaurent::monomial(1, -2);
    return QScalar(num, den);
}

}  // namespace urs
