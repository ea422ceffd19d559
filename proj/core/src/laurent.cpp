#include "urs/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace urs {

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Expo{0, 0} && terms_.begin()->second == 1;
}

void Laurent::add_term(int a, int b, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find({a, b});
    if (it == terms_.end()) {
        terms_[{a, b}] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, c);
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e.first, e.second, -c);
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1.first + e2.first, e1.second + e2.second, c1 * c2);
    return r;
}

Laurent Laurent::scaled(const Rat& c) const {
    Laurent r;
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

Laurent Laurent::shifted(int da, int db) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + da, e.second + db}] = c;
    return r;
}

Expo Laurent::min_expo() const {
    int ma = 0, mb = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            ma = e.first;
            mb = e.second;
            first = false;
        } else {
            ma = std::min(ma, e.first);
            mb = std::min(mb, e.second);
        }
    }
    return {ma, mb};
}

std::optional<Laurent> Laurent::exact_div(const Laurent& d) const {
    if (d.is_zero()) return std::nullopt;
    if (is_zero()) return Laurent::zero();
    // Shift both to honest polynomials, divide, shift back.
    Expo mp = min_expo(), md = d.min_expo();
    Laurent p = shifted(-mp.first, -mp.second);
    Laurent dv = d.shifted(-md.first, -md.second);
    Expo dl = dv.lead_expo();
    const Rat& dc = dv.lead_coeff();
    Laurent q;
    while (!p.is_zero()) {
        Expo pl = p.lead_expo();
        int da = pl.first - dl.first, db = pl.second - dl.second;
        if (da < 0 || db < 0) return std::nullopt;  // leading term not divisible
        Rat qc = p.lead_coeff() / dc;
        q.add_term(da, db, qc);
        p -= dv.shifted(da, db).scaled(qc);
    }
    return q.shifted(mp.first - md.first, mp.second - md.second);
}

Laurent Laurent::tau() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.second, e.first}] = c;
    return r;
}

namespace {

// One u- or v-exponent, printed in r/s half powers: u^2 = r, u^3 = r^3/2.
void append_var(std::ostringstream& os, bool& need_star, const char* name, int halves) {
    if (halves == 0) return;
    if (need_star) os << "*";
    need_star = true;
    os << name;
    if (halves == 2) return;
    os << "^";
    if (halves % 2 == 0)
        os << halves / 2;
    else
        os << halves << "/2";
}

}  // namespace

std::string Laurent::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool lead = true;
    // Descending exponent order, leading term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
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
        bool need_star = false;
        bool constant = (e.first == 0 && e.second == 0);
        if (a != 1 || constant) {
            os << rat_str(a);
            need_star = true;
        }
        append_var(os, need_star, "r", e.first);
        append_var(os, need_star, "s", e.second);
    }
    return os.str();
}

}  // namespace urs
