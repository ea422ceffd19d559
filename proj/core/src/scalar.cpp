#include "urs/scalar.hpp"

namespace urs {

Scalar::Scalar(const Laurent& n, const Laurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw DivisionByZero();
    canonicalize();
}

void Scalar::canonicalize() {
    if (num_.is_zero()) {
        den_ = Laurent::one();
        return;
    }
    // Common monomial content: shift so both parts are polynomials with joint
    // minimal exponent (0, 0).
    Expo mn = num_.min_expo(), md = den_.min_expo();
    int sa = std::min(mn.first, md.first), sb = std::min(mn.second, md.second);
    if (sa != 0 || sb != 0) {
        num_ = num_.shifted(-sa, -sb);
        den_ = den_.shifted(-sa, -sb);
    }
    // If either side is a monomial, divide it out entirely.
    if (den_.is_monomial() && !(den_.lead_expo() == Expo{0, 0})) {
        Expo e = den_.lead_expo();
        num_ = num_.shifted(-e.first, -e.second);
        den_ = den_.shifted(-e.first, -e.second);
    }
    // Cancel the two binomials the algebra actually produces: r - s = u^2 - v^2
    // and r + s = u^2 + v^2. Anything beyond this is left to cross-multiplied
    // equality.
    static const Laurent rms = Laurent::monomial(1, 2, 0) - Laurent::monomial(1, 0, 2);
    static const Laurent rps = Laurent::monomial(1, 2, 0) + Laurent::monomial(1, 0, 2);
    for (const Laurent* f : {&rms, &rps}) {
        while (num_.size() > 1 || den_.size() > 1) {
            if (den_.is_monomial() || num_.is_monomial()) break;
            auto qn = num_.exact_div(*f);
            if (!qn) break;
            auto qd = den_.exact_div(*f);
            if (!qd) break;
            num_ = *qn;
            den_ = *qd;
        }
    }
    // Denominator leading coefficient +1.
    Rat lc = den_.lead_coeff();
    num_ = num_.scaled(1 / lc);
    den_ = den_.scaled(1 / lc);
    // Re-strip monomial content introduced by the cancellations.
    mn = num_.min_expo();
    md = den_.min_expo();
    sa = std::min(mn.first, md.first);
    sb = std::min(mn.second, md.second);
    if (sa != 0 || sb != 0) {
        num_ = num_.shifted(-sa, -sb);
        den_ = den_.shifted(-sa, -sb);
    }
}

Scalar Scalar::operator+(const Scalar& o) const { return Scalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Scalar Scalar::operator-(const Scalar& o) const { return Scalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Scalar Scalar::operator*(const Scalar& o) const { return Scalar(num_ * o.num_, den_ * o.den_); }

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero();
    return Scalar(num_ * o.den_, den_ * o.num_);
}

Scalar Scalar::operator-() const {
    Scalar x = *this;
    x.num_ = -x.num_;
    return x;
}

Scalar Scalar::inv() const {
    if (is_zero()) throw DivisionByZero();
    return Scalar(den_, num_);
}

Scalar Scalar::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Scalar acc = Scalar::one(), base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool Scalar::operator==(const Scalar& o) const { return (num_ * o.den_ - o.num_ * den_).is_zero(); }

Scalar Scalar::tau() const { return Scalar(num_.tau(), den_.tau()); }

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    std::string n = num_.str();
    if (num_.size() > 1) n = "(" + n + ")";
    std::string d = den_.str();
    // A compound denominator needs parens to parse back; a*b/c*d would
    // re-associate otherwise.
    if (den_.size() > 1 || d.find('*') != std::string::npos) d = "(" + d + ")";
    return n + "/" + d;
}

Scalar half_power(const Scalar& base, long numerator) {
    if (numerator == 0) return Scalar::one();
    if (!base.is_monomial()) throw UnsupportedRadical(base.str());
    Expo en = base.num().lead_expo(), ed = base.den().lead_expo();
    Rat c = base.num().lead_coeff() / base.den().lead_coeff();
    int a = en.first - ed.first, b = en.second - ed.second;
    if (c != 1 && numerator % 2 != 0) throw UnsupportedRadical(base.str());
    if ((static_cast<long>(a) * numerator) % 2 != 0 || (static_cast<long>(b) * numerator) % 2 != 0)
        throw UnsupportedRadical(base.str());
    Rat coeff = 1;
    if (c != 1) {
        // even numerator: plain integer power of the rational coefficient
        long half = numerator / 2;
        coeff = 1;
        Rat cc = c;
        long e = half < 0 ? -half : half;
        for (long t = 0; t < e; ++t) coeff *= cc;
        if (half < 0) coeff = 1 / coeff;
    }
    return Scalar::monomial(coeff, static_cast<int>(a * numerator / 2), static_cast<int>(b * numerator / 2));
}

Scalar deformed_bracket(long ell, long a_ij) {
    if (ell == 0) throw DomainError("deformed bracket needs nonzero level");
    long abs_ell = ell < 0 ? -ell : ell;
    Scalar rs_half = half_power(Scalar::rs(), abs_ell);                        // (rs)^(|ell|/2)
    Scalar ii = Scalar::monomial(1, 2, -2);                                    // <i,i> = r s^(-1)
    Scalar diff = half_power(ii, ell * a_ij) - half_power(ii, -ell * a_ij);    // <i,i>^(ell a/2) - ...
    return rs_half * diff / (Scalar(abs_ell) * Scalar::r_minus_s());
}

}  // namespace urs
