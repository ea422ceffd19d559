#pragma once

#include <map>
#include <vector>

#include "urs/cartan.hpp"
#include "urs/element.hpp"

namespace urs {

// Which Borel half a word lives in: Bhat is generated by e_i, w_i, g^(1/2),
// D; BhatPrime by f_i, w'_i, g'^(1/2), D'.
enum class Borel { B, BPrime };

bool in_borel(const Word& w, Borel side);
Borel borel_of(const Element& x);

// Element of a tensor power of a Borel half: finite map from slot tuples to
// coefficients, multiplied componentwise.
class Tensor {
  public:
    using Key = std::vector<Word>;
    using Terms = std::map<Key, Scalar>;

    Tensor() = default;
    explicit Tensor(size_t arity) : arity_(arity) {}

    size_t arity() const { return arity_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Key& k, const Scalar& c);
    Tensor operator+(const Tensor& o) const;
    Tensor operator*(const Tensor& o) const;  // componentwise concatenation
    Tensor scaled(const Scalar& c) const;
    bool operator==(const Tensor& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }

  private:
    size_t arity_ = 2;
    Terms terms_;
};

// Merge adjacent powers of the same group-like letter (the toral sector is a
// Laurent ring); the Hopf axioms hold on the nose in this presentation.
Word merge_grouplikes(const Word& w);
Element hopf_normalize(const Element& x);

// Coproduct (power 1) or its iterate (Delta x id)Delta (power 2) of a Borel
// element; an algebra morphism into the 2- or 3-fold tensor power.
Tensor coproduct(const Element& x, Borel side, int power = 1);

Scalar counit(const Element& x);

// Antipode: antihomomorphism with S(e_i) = -w_i^(-1) e_i,
// S(f_i) = -f_i w'_i^(-1), inverses on group-likes.
Element antipode(const Element& x, Borel side);

// The skew-dual pairing B' x B -> K, evaluated by peeling letters through
// the coproduct laws with memoization on word pairs. One context owns one
// memo table; confine a context to a single thread.
class PairingContext {
  public:
    explicit PairingContext(const RootData& R) : R_(R) {}

    Scalar pair(const Element& bprime, const Element& b);
    Scalar pair_words(const Word& bprime, const Word& b);

    const RootData& root_data() const { return R_; }

  private:
    Scalar gen_pair(const GenSymbol& bp, const GenSymbol& b) const;

    const RootData& R_;
    std::map<std::pair<Word, Word>, Scalar> memo_;
};

// Element of the double: left slot in Bhat, right slot in BhatPrime.
class DoubleElement {
  public:
    using Key = std::pair<Word, Word>;
    using Terms = std::map<Key, Scalar>;

    DoubleElement() = default;
    DoubleElement(const Element& a, const Element& b);

    static DoubleElement left(const Element& a) { return DoubleElement(a, Element::unit()); }
    static DoubleElement right(const Element& b) { return DoubleElement(Element::unit(), b); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const Key& k, const Scalar& c);
    DoubleElement operator+(const DoubleElement& o) const;
    DoubleElement operator-(const DoubleElement& o) const;
    DoubleElement scaled(const Scalar& c) const;
    bool operator==(const DoubleElement& o) const { return terms_ == o.terms_; }

    std::string str() const;

  private:
    Terms terms_;
};

// (a (x) b)(a' (x) b') = sum <S(b_(1)), a'_(1)> <b_(3), a'_(3)> a a'_(2) (x) b_(2) b'
DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y, PairingContext& ctx);

// The four e-side Serre elements per cyclically adjacent ordered pair, and
// the f-side ones with inverted coefficients.
Element serre_e(const RootData& R, int i, int j, bool majority_left);
Element serre_f(const RootData& R, int i, int j, bool majority_left);

struct KernelReport {
    bool ok = true;
    size_t checked = 0;
    std::vector<std::string> witnesses;  // nonzero pairings, printed
};

// Pair every matching-degree word (with toral paddings up to degree_cap
// total letters) against every Serre relation element on both sides; all
// values must vanish.
KernelReport verify_pairing_kernel(PairingContext& ctx, int degree_cap);

}  // namespace urs
