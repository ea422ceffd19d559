#include "urs/hopf.hpp"

#include <algorithm>
#include <sstream>

#include "urs/errors.hpp"

namespace urs {

namespace {

bool letter_in_borel(const GenSymbol& g, Borel side) {
    switch (g.kind) {
        case SymKind::E:
            return side == Borel::B;
        case SymKind::Omega:
            return side == Borel::B;
        case SymKind::GammaHalf:
            return side == Borel::B;
        case SymKind::Dg:
            return side == Borel::B;
        case SymKind::F:
            return side == Borel::BPrime;
        case SymKind::OmegaPrime:
            return side == Borel::BPrime;
        case SymKind::GammaPrimeHalf:
            return side == Borel::BPrime;
        case SymKind::DPrime:
            return side == Borel::BPrime;
        default:
            return false;
    }
}

void require_borel(const Element& x, Borel side) {
    for (const auto& [w, c] : x.terms())
        for (const auto& g : w)
            if (!letter_in_borel(g, side)) throw DomainError("symbol outside Borel alphabet: " + symbol_str(g));
}

// e/f letter content as a multiplicity vector over I_0.
std::vector<int> ef_content(const Word& w, int n) {
    std::vector<int> v(static_cast<size_t>(n), 0);
    for (const auto& g : w)
        if (g.kind == SymKind::E || g.kind == SymKind::F) v.at(static_cast<size_t>(g.index)) += 1;
    return v;
}

GenSymbol group_inverse(GenSymbol g) {
    g.exp = -g.exp;
    return g;
}

}  // namespace

bool in_borel(const Word& w, Borel side) {
    for (const auto& g : w)
        if (!letter_in_borel(g, side)) return false;
    return true;
}

Borel borel_of(const Element& x) {
    for (const auto& [w, c] : x.terms())
        for (const auto& g : w) {
            if (letter_in_borel(g, Borel::B) && !letter_in_borel(g, Borel::BPrime)) return Borel::B;
            if (letter_in_borel(g, Borel::BPrime) && !letter_in_borel(g, Borel::B)) return Borel::BPrime;
        }
    return Borel::B;
}

Word merge_grouplikes(const Word& w) {
    Word out;
    for (const auto& g : w) {
        if (is_toral(g.kind) && !out.empty() && is_toral(out.back().kind) && out.back().kind == g.kind &&
            out.back().index == g.index) {
            out.back().exp += g.exp;
            if (out.back().exp == 0) out.pop_back();
        } else {
            out.push_back(g);
        }
    }
    return out;
}

Element hopf_normalize(const Element& x) {
    Element out;
    for (const auto& [w, c] : x.terms()) out.add(merge_grouplikes(w), c);
    return out;
}

void Tensor::add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Tensor Tensor::operator+(const Tensor& o) const {
    Tensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

Tensor Tensor::operator*(const Tensor& o) const {
    Tensor r(arity_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Key k = k1;
            for (size_t t = 0; t < k.size(); ++t) k[t].insert(k[t].end(), k2[t].begin(), k2[t].end());
            r.add(k, c1 * c2);
        }
    return r;
}

Tensor Tensor::scaled(const Scalar& c) const {
    Tensor r(arity_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

namespace {

// Coproduct of a single letter into `arity` slots: group-likes are diagonal;
// e_i spreads as e x 1 + w x e (iterated to w x w x e on the left), f_i as
// f x w' + 1 x f (iterated to f x w' x w' on the right).
Tensor letter_coproduct(const GenSymbol& g, size_t arity) {
    Tensor out(arity);
    if (g.kind == SymKind::E) {
        for (size_t slot = 0; slot < arity; ++slot) {
            Tensor::Key k(arity);
            for (size_t t = 0; t < arity; ++t) {
                if (t < slot)
                    k[t] = Word{om(g.index)};
                else if (t == slot)
                    k[t] = Word{g};
                // slots right of the letter stay 1
            }
            out.add(k, Scalar::one());
        }
        return out;
    }
    if (g.kind == SymKind::F) {
        for (size_t slot = 0; slot < arity; ++slot) {
            Tensor::Key k(arity);
            for (size_t t = 0; t < arity; ++t) {
                if (t > slot)
                    k[t] = Word{omp(g.index)};
                else if (t == slot)
                    k[t] = Word{g};
            }
            out.add(k, Scalar::one());
        }
        return out;
    }
    if (is_toral(g.kind)) {
        Tensor::Key k(arity);
        for (size_t t = 0; t < arity; ++t) k[t] = Word{g};
        out.add(k, Scalar::one());
        return out;
    }
    throw DomainError("symbol outside Borel alphabet: " + symbol_str(g));
}

}  // namespace

Tensor coproduct(const Element& x, Borel side, int power) {
    require_borel(x, side);
    if (power != 1 && power != 2) throw DomainError("coproduct power must be 1 or 2");
    size_t arity = static_cast<size_t>(power) + 1;
    Tensor out(arity);
    for (const auto& [w, c] : x.terms()) {
        Tensor acc(arity);
        acc.add(Tensor::Key(arity), Scalar::one());
        for (const auto& g : w) acc = acc * letter_coproduct(g, arity);
        out = out + acc.scaled(c);
    }
    return out;
}

Scalar counit(const Element& x) {
    Scalar out = Scalar::zero();
    for (const auto& [w, c] : x.terms()) {
        bool killed = false;
        for (const auto& g : w)
            if (g.kind == SymKind::E || g.kind == SymKind::F) {
                killed = true;
                break;
            }
        if (!killed) out += c;
    }
    return out;
}

Element antipode(const Element& x, Borel side) {
    require_borel(x, side);
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Element acc(Word{}, c);
        // S is an antihomomorphism: apply letterwise in reverse order.
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            const GenSymbol& g = *it;
            Element sg;
            if (g.kind == SymKind::E)
                sg = Element(Word{om(g.index, -1), g}, Scalar(-1));
            else if (g.kind == SymKind::F)
                sg = Element(Word{g, omp(g.index, -1)}, Scalar(-1));
            else
                sg = Element(group_inverse(g));
            acc = acc * sg;
        }
        out += acc;
    }
    return out;
}

Scalar PairingContext::gen_pair(const GenSymbol& bp, const GenSymbol& b) const {
    int n = R_.n();
    switch (bp.kind) {
        case SymKind::F:
            if (b.kind == SymKind::E && b.index == bp.index)
                return Scalar::one() / (Scalar::s() - Scalar::r());
            return Scalar::zero();
        case SymKind::OmegaPrime:
            if (b.kind == SymKind::E) return Scalar::zero();
            if (b.kind == SymKind::Omega) return R_.pairing_gen(bp.index, b.index).pow(static_cast<long>(bp.exp) * b.exp);
            if (b.kind == SymKind::GammaHalf) return Scalar::one();
            if (b.kind == SymKind::Dg)
                return bp.index == 0 ? Scalar::r().pow(static_cast<long>(bp.exp) * b.exp) : Scalar::one();
            break;
        case SymKind::GammaPrimeHalf:
            if (b.kind == SymKind::E) return Scalar::zero();
            if (b.kind == SymKind::Omega || b.kind == SymKind::GammaHalf) return Scalar::one();
            if (b.kind == SymKind::Dg) return Scalar::monomial(1, bp.exp * b.exp, 0);  // r^(exp exp'/2)
            break;
        case SymKind::DPrime:
            if (b.kind == SymKind::E) return Scalar::zero();
            if (b.kind == SymKind::Omega)
                return b.index == 0 ? Scalar::s().pow(-static_cast<long>(bp.exp) * b.exp) : Scalar::one();
            if (b.kind == SymKind::GammaHalf) return Scalar::monomial(1, 0, -bp.exp * b.exp);  // s^(-exp exp'/2)
            if (b.kind == SymKind::Dg) return Scalar::one();
            break;
        default:
            break;
    }
    (void)n;
    return Scalar::zero();
}

Scalar PairingContext::pair_words(const Word& bp, const Word& b) {
    // Degree orthogonality: the f content must match the e content.
    if (ef_content(bp, R_.n()) != ef_content(b, R_.n())) return Scalar::zero();
    if (b.empty()) {
        Element x(bp, Scalar::one());
        return counit(x);
    }
    if (bp.empty()) {
        Element y(b, Scalar::one());
        return counit(y);
    }
    auto key = std::make_pair(bp, b);
    auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;

    Scalar out = Scalar::zero();
    if (b.size() == 1) {
        if (bp.size() == 1) {
            out = gen_pair(bp[0], b[0]);
        } else {
            // <b1' R', y> = sum <b1', y_(1)> <R', y_(2)>
            GenSymbol head = bp.front();
            Word rest(bp.begin() + 1, bp.end());
            Tensor dy = letter_coproduct(b[0], 2);
            for (const auto& [k, c] : dy.terms()) {
                Scalar lhs = pair_words(Word{head}, k[0]);
                if (lhs.is_zero()) continue;
                Scalar rhs = pair_words(rest, k[1]);
                if (rhs.is_zero()) continue;
                out += c * lhs * rhs;
            }
        }
    } else {
        // <X', y1 RY> = sum over Delta(X') of <X'_(2), y1> <X'_(1), RY>
        GenSymbol y1 = b.front();
        Word ry(b.begin() + 1, b.end());
        Element xp_elem(bp, Scalar::one());
        Borel side = Borel::BPrime;
        Tensor dx = coproduct(xp_elem, side, 1);
        for (const auto& [k, c] : dx.terms()) {
            Scalar lhs = pair_words(k[1], Word{y1});
            if (lhs.is_zero()) continue;
            Scalar rhs = pair_words(k[0], ry);
            if (rhs.is_zero()) continue;
            out += c * lhs * rhs;
        }
    }
    memo_[key] = out;
    return out;
}

Scalar PairingContext::pair(const Element& bprime, const Element& b) {
    require_borel(bprime, Borel::BPrime);
    require_borel(b, Borel::B);
    Scalar out = Scalar::zero();
    for (const auto& [wp, cp] : bprime.terms())
        for (const auto& [w, c] : b.terms()) {
            Scalar v = pair_words(wp, w);
            if (!v.is_zero()) out += cp * c * v;
        }
    return out;
}

DoubleElement::DoubleElement(const Element& a, const Element& b) {
    require_borel(a, Borel::B);
    require_borel(b, Borel::BPrime);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) add({wa, wb}, ca * cb);
}

void DoubleElement::add(const Key& k, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DoubleElement DoubleElement::operator+(const DoubleElement& o) const {
    DoubleElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, c);
    return r;
}

DoubleElement DoubleElement::operator-(const DoubleElement& o) const {
    DoubleElement r = *this;
    for (const auto& [k, c] : o.terms_) r.add(k, -c);
    return r;
}

DoubleElement DoubleElement::scaled(const Scalar& c) const {
    DoubleElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add(k, v * c);
    return r;
}

std::string DoubleElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*(" << word_str(k.first) << " (x) " << word_str(k.second) << ")";
    }
    return os.str();
}

DoubleElement double_mul(const DoubleElement& x, const DoubleElement& y, PairingContext& ctx) {
    DoubleElement out;
    for (const auto& [kx, cx] : x.terms()) {
        const Word& a = kx.first;
        const Word& b = kx.second;
        Tensor db = coproduct(Element(b, Scalar::one()), Borel::BPrime, 2);
        for (const auto& [ky, cy] : y.terms()) {
            const Word& a2 = ky.first;
            const Word& b2 = ky.second;
            Tensor da2 = coproduct(Element(a2, Scalar::one()), Borel::B, 2);
            for (const auto& [kb, cb] : db.terms()) {
                Element sb1 = antipode(Element(kb[0], Scalar::one()), Borel::BPrime);
                for (const auto& [ka, ca] : da2.terms()) {
                    Scalar p1 = ctx.pair(sb1, Element(ka[0], Scalar::one()));
                    if (p1.is_zero()) continue;
                    Scalar p3 = ctx.pair(Element(kb[2], Scalar::one()), Element(ka[2], Scalar::one()));
                    if (p3.is_zero()) continue;
                    Word left = a;
                    left.insert(left.end(), ka[1].begin(), ka[1].end());
                    Word right = kb[1];
                    right.insert(right.end(), b2.begin(), b2.end());
                    out.add({merge_grouplikes(left), merge_grouplikes(right)}, cx * cy * cb * ca * p1 * p3);
                }
            }
        }
    }
    return out;
}

// The Serre relations are stated along the oriented cycle edges i -> i+1
// (mod n); both majority forms of one edge share the (r+s, rs) pattern.
Element serre_e(const RootData& R, int i, int j, bool majority_left) {
    if (j != (i + 1) % R.n()) throw DomainError("Serre element needs an oriented edge i -> i+1");
    Element ei(e_(i)), ej(e_(j));
    Scalar rps = Scalar::r() + Scalar::s(), rs = Scalar::rs();
    if (majority_left) return ei * ei * ej - (ei * ej * ei).scaled(rps) + (ej * ei * ei).scaled(rs);
    return ei * ej * ej - (ej * ei * ej).scaled(rps) + (ej * ej * ei).scaled(rs);
}

Element serre_f(const RootData& R, int i, int j, bool majority_left) {
    if (j != (i + 1) % R.n()) throw DomainError("Serre element needs an oriented edge i -> i+1");
    Element fi(f_(i)), fj(f_(j));
    Scalar rpsi = Scalar::r().inv() + Scalar::s().inv(), rsi = Scalar::rs().inv();
    if (majority_left) return fi * fi * fj - (fi * fj * fi).scaled(rpsi) + (fj * fi * fi).scaled(rsi);
    return fi * fj * fj - (fj * fi * fj).scaled(rpsi) + (fj * fj * fi).scaled(rsi);
}

namespace {

std::vector<Word> arrangements(std::vector<GenSymbol> letters) {
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<GenSymbol> toral_padding_letters(const RootData& R, Borel side) {
    std::vector<GenSymbol> out;
    for (int k = 0; k < R.n(); ++k) {
        out.push_back(side == Borel::B ? om(k, 1) : omp(k, 1));
        out.push_back(side == Borel::B ? om(k, -1) : omp(k, -1));
    }
    out.push_back(side == Borel::B ? gam(1) : gamp(1));
    out.push_back(side == Borel::B ? dg(1) : dp(1));
    out.push_back(side == Borel::B ? dg(-1) : dp(-1));
    return out;
}

}  // namespace

KernelReport verify_pairing_kernel(PairingContext& ctx, int degree_cap) {
    const RootData& R = ctx.root_data();
    if (degree_cap < 3) throw DomainError("degree cap below the Serre degree");
    KernelReport rep;
    int n = R.n();

    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);

    auto run_side = [&](bool e_side) {
        for (auto [i, j] : edges)
            for (bool maj : {true, false}) {
                Element serre = e_side ? serre_e(R, i, j, maj) : serre_f(R, i, j, maj);
                // Matching-degree bare words on the other side.
                std::vector<GenSymbol> base;
                if (e_side)
                    base = {f_(maj ? i : j), f_(maj ? i : j), f_(maj ? j : i)};
                else
                    base = {e_(maj ? i : j), e_(maj ? i : j), e_(maj ? j : i)};
                std::vector<Word> words = arrangements(base);
                // Toral paddings: insert extra group-like letters anywhere,
                // up to the total-length cap.
                std::vector<Word> padded = words;
                auto pads = toral_padding_letters(R, e_side ? Borel::BPrime : Borel::B);
                std::vector<Word> frontier = words;
                for (int len = 4; len <= degree_cap; ++len) {
                    std::vector<Word> next;
                    for (const auto& w : frontier)
                        for (const auto& p : pads)
                            for (size_t pos = 0; pos <= w.size(); ++pos) {
                                Word nw = w;
                                nw.insert(nw.begin() + static_cast<long>(pos), p);
                                next.push_back(nw);
                            }
                    std::sort(next.begin(), next.end());
                    next.erase(std::unique(next.begin(), next.end()), next.end());
                    padded.insert(padded.end(), next.begin(), next.end());
                    frontier = next;
                }
                for (const auto& w : padded) {
                    Scalar v = e_side ? ctx.pair(Element(w, Scalar::one()), serre)
                                      : ctx.pair(serre, Element(w, Scalar::one()));
                    ++rep.checked;
                    if (!v.is_zero()) {
                        rep.ok = false;
                        rep.witnesses.push_back(word_str(w) + " pairs to " + v.str());
                    }
                }
            }
    };
    run_side(true);
    run_side(false);
    return rep;
}

}  // namespace urs
