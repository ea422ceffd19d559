#pragma once

#include <map>
#include <string>
#include <vector>

#include "urs/errors.hpp"
#include "urs/qscalar.hpp"
#include "urs/scalar.hpp"
#include "urs/symbol.hpp"

namespace urs {

// Finite K-linear combination of free-monoid words. No zero coefficients are
// stored; the empty word is the algebra unit.
template <class K>
class BasicElement {
  public:
    using Terms = std::map<Word, K>;

    BasicElement() = default;
    explicit BasicElement(const K& c) {
        if (!c.is_zero()) terms_[Word{}] = c;
    }
    explicit BasicElement(const Word& w, const K& c = K(1)) {
        if (!c.is_zero()) terms_[w] = c;
    }
    explicit BasicElement(const GenSymbol& g, const K& c = K(1)) {
        if (!c.is_zero()) terms_[Word{g}] = c;
    }

    static BasicElement unit() { return BasicElement(K(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const Word& w, const K& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(w);
        if (it == terms_.end()) {
            terms_[w] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    BasicElement operator+(const BasicElement& o) const {
        BasicElement r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, c);
        return r;
    }
    BasicElement operator-(const BasicElement& o) const {
        BasicElement r = *this;
        for (const auto& [w, c] : o.terms_) r.add(w, -c);
        return r;
    }
    BasicElement operator-() const {
        BasicElement r;
        for (const auto& [w, c] : terms_) r.terms_[w] = -c;
        return r;
    }
    BasicElement& operator+=(const BasicElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    BasicElement& operator-=(const BasicElement& o) {
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }

    BasicElement scaled(const K& c) const {
        BasicElement r;
        if (c.is_zero()) return r;
        for (const auto& [w, k] : terms_) r.terms_[w] = k * c;
        return r;
    }

    // Free concatenation product. Chevalley and loop letters never mix in a
    // word unless explicitly allowed (the isomorphism code maps first).
    BasicElement operator*(const BasicElement& o) const {
        BasicElement r;
        for (const auto& [w1, c1] : terms_)
            for (const auto& [w2, c2] : o.terms_) {
                Word w = w1;
                w.insert(w.end(), w2.begin(), w2.end());
                check_family(w);
                r.add(w, c1 * c2);
            }
        return r;
    }
    BasicElement& operator*=(const BasicElement& o) { return *this = *this * o; }

    bool operator==(const BasicElement& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        auto it = terms_.begin();
        auto jt = o.terms_.begin();
        for (; it != terms_.end(); ++it, ++jt) {
            if (it->first != jt->first) return false;
            if (!(it->second == jt->second)) return false;
        }
        return true;
    }
    bool operator!=(const BasicElement& o) const { return !(*this == o); }

    // The coefficient of the empty word, when the element is a pure scalar.
    K as_scalar() const {
        if (is_zero()) return K(0);
        if (terms_.size() != 1 || !terms_.begin()->first.empty())
            throw DomainError("element is not a scalar multiple of the unit");
        return terms_.begin()->second;
    }

    K coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? K(0) : it->second;
    }

  private:
    static void check_family(const Word& w) {
        if (word_family(w) == Family::Mixed) throw DomainError("mixed Chevalley/loop alphabets in one word");
    }
    Terms terms_;
};

using Element = BasicElement<Scalar>;
using QElement = BasicElement<QScalar>;

// [a, b]_q = ab - q ba, q nonzero.
template <class K>
BasicElement<K> qbracket(const BasicElement<K>& a, const BasicElement<K>& b, const K& q) {
    if (q.is_zero()) throw DomainError("bracket parameter must be nonzero");
    return a * b - (b * a).scaled(q);
}

// Right-nested chain [a_1, .., a_s]_{(q_1..q_{s-1})}; the last parameter is
// applied at the outermost bracket.
template <class K>
BasicElement<K> qbracket_chain(const std::vector<BasicElement<K>>& items, const std::vector<K>& qs) {
    if (items.empty()) throw DomainError("empty bracket chain");
    if (qs.size() + 1 != items.size()) throw DomainError("bracket chain needs s-1 parameters");
    BasicElement<K> acc = items.back();
    for (size_t t = items.size() - 1; t-- > 0;) acc = qbracket(items[t], acc, qs[t]);
    return acc;
}

// Plain commutator.
template <class K>
BasicElement<K> comm(const BasicElement<K>& a, const BasicElement<K>& b) {
    return a * b - b * a;
}

struct Graded {
    std::vector<int> degree;  // Q-degree per homogeneous component
    int level = 0;
};

// Q-degree and total level of a homogeneous element; DomainError if the
// element mixes components.
template <class K>
Graded grade(const BasicElement<K>& x, int n) {
    if (x.is_zero()) return {std::vector<int>(n, 0), 0};
    bool first = true;
    Graded g;
    for (const auto& [w, c] : x.terms()) {
        std::vector<int> d = word_degree(w, n);
        int lv = word_level(w);
        if (first) {
            g.degree = d;
            g.level = lv;
            first = false;
        } else if (d != g.degree || lv != g.level) {
            throw DomainError("element is not homogeneous");
        }
    }
    return g;
}

template <class K>
bool is_homogeneous(const BasicElement<K>& x, int n) {
    try {
        grade(x, n);
        return true;
    } catch (const DomainError&) {
        return false;
    }
}

std::string element_str(const Element& x);
std::string element_str(const QElement& x);

}  // namespace urs
