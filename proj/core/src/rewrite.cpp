#include "urs/rewrite.hpp"

#include <optional>
#include <set>

#include "urs/errors.hpp"

namespace urs {

namespace {

struct Tail {
    std::vector<int> om_exp, omp_exp;  // indexed by generator subscript
    int gamma = 0;                     // halves; gamma' folded in
    int d = 0, dp_ = 0;

    explicit Tail(int n) : om_exp(n, 0), omp_exp(n, 0) {}
    bool trivial() const {
        for (int e : om_exp)
            if (e) return false;
        for (int e : omp_exp)
            if (e) return false;
        return gamma == 0 && d == 0 && dp_ == 0;
    }
};

// Scalar picked up when one toral letter passes a free letter to the right.
Scalar conj_scalar(const RootData& R, const GenSymbol& t, const GenSymbol& l) {
    switch (t.kind) {
        case SymKind::Omega:
            switch (l.kind) {
                case SymKind::Xp:
                case SymKind::E:
                    return R.pairing_gen(l.index, t.index).pow(t.exp);
                case SymKind::Xm:
                case SymKind::F:
                    return R.pairing_gen(l.index, t.index).pow(-t.exp);
                default:
                    return Scalar::one();
            }
        case SymKind::OmegaPrime:
            switch (l.kind) {
                case SymKind::Xp:
                case SymKind::E:
                    return R.pairing_gen(t.index, l.index).pow(-t.exp);
                case SymKind::Xm:
                case SymKind::F:
                    return R.pairing_gen(t.index, l.index).pow(t.exp);
                default:
                    return Scalar::one();
            }
        case SymKind::GammaHalf:
        case SymKind::GammaPrimeHalf:
            return Scalar::one();
        case SymKind::Dg:
            switch (l.kind) {
                case SymKind::Xp:
                case SymKind::Xm:
                case SymKind::A:
                    return Scalar::r().pow(static_cast<long>(t.exp) * l.level);
                case SymKind::E:
                    return l.index == 0 ? Scalar::r().pow(t.exp) : Scalar::one();
                case SymKind::F:
                    return l.index == 0 ? Scalar::r().pow(-t.exp) : Scalar::one();
                default:
                    return Scalar::one();
            }
        case SymKind::DPrime:
            switch (l.kind) {
                case SymKind::Xp:
                case SymKind::Xm:
                case SymKind::A:
                    return Scalar::s().pow(static_cast<long>(t.exp) * l.level);
                case SymKind::E:
                    return l.index == 0 ? Scalar::s().pow(t.exp) : Scalar::one();
                case SymKind::F:
                    return l.index == 0 ? Scalar::s().pow(-t.exp) : Scalar::one();
                default:
                    return Scalar::one();
            }
        default:
            throw DomainError("not a toral letter");
    }
}

// Scalar for a whole tail passing one free letter.
Scalar tail_cross(const RootData& R, const Tail& tail, const GenSymbol& l) {
    Scalar out = Scalar::one();
    for (size_t i = 0; i < tail.om_exp.size(); ++i)
        if (tail.om_exp[i]) out *= conj_scalar(R, om(static_cast<int>(i), tail.om_exp[i]), l);
    for (size_t i = 0; i < tail.omp_exp.size(); ++i)
        if (tail.omp_exp[i]) out *= conj_scalar(R, omp(static_cast<int>(i), tail.omp_exp[i]), l);
    if (tail.d) out *= conj_scalar(R, dg(tail.d), l);
    if (tail.dp_) out *= conj_scalar(R, dp(tail.dp_), l);
    return out;
}

Word tail_to_word(const Tail& tail) {
    Word w;
    for (size_t i = 0; i < tail.om_exp.size(); ++i)
        if (tail.om_exp[i]) w.push_back(om(static_cast<int>(i), tail.om_exp[i]));
    for (size_t i = 0; i < tail.omp_exp.size(); ++i)
        if (tail.omp_exp[i]) w.push_back(omp(static_cast<int>(i), tail.omp_exp[i]));
    if (tail.gamma) w.push_back(gam(tail.gamma));
    if (tail.d) w.push_back(dg(tail.d));
    if (tail.dp_) w.push_back(dp(tail.dp_));
    return w;
}

}  // namespace

Element normalize_torals(const RootData& R, const Element& x) {
    Element out;
    for (const auto& [w, c0] : x.terms()) {
        Tail tail(R.n());
        Scalar c = c0;
        Word free;
        for (const auto& g : w) {
            if (is_toral(g.kind)) {
                switch (g.kind) {
                    case SymKind::Omega:
                        tail.om_exp.at(static_cast<size_t>(g.index)) += g.exp;
                        break;
                    case SymKind::OmegaPrime:
                        tail.omp_exp.at(static_cast<size_t>(g.index)) += g.exp;
                        break;
                    case SymKind::GammaHalf:
                        tail.gamma += g.exp;
                        break;
                    case SymKind::GammaPrimeHalf:
                        // gamma'^(h/2) = (rs)^(h/2) gamma^(-h/2)
                        tail.gamma -= g.exp;
                        c *= Scalar::monomial(1, g.exp, g.exp);
                        break;
                    case SymKind::Dg:
                        tail.d += g.exp;
                        break;
                    case SymKind::DPrime:
                        tail.dp_ += g.exp;
                        break;
                    default:
                        break;
                }
            } else {
                // everything collected so far crosses this letter
                c *= tail_cross(R, tail, g);
                free.push_back(g);
            }
        }
        Word nw = free;
        Word tw = tail_to_word(tail);
        nw.insert(nw.end(), tw.begin(), tw.end());
        out.add(nw, c);
    }
    return out;
}

Element spec_layout(const RootData& R, const Element& x) {
    Element out;
    for (const auto& [w, c0] : x.terms()) {
        // split free prefix / tail
        size_t cut = w.size();
        while (cut > 0 && is_toral(w[cut - 1].kind)) --cut;
        size_t boundary = 0;
        while (boundary < cut && (w[boundary].kind == SymKind::Xm || w[boundary].kind == SymKind::F)) ++boundary;
        Scalar c = c0;
        Tail tail(R.n());
        for (size_t t = cut; t < w.size(); ++t) {
            const GenSymbol& g = w[t];
            if (g.kind == SymKind::Omega) tail.om_exp.at(static_cast<size_t>(g.index)) += g.exp;
            if (g.kind == SymKind::OmegaPrime) tail.omp_exp.at(static_cast<size_t>(g.index)) += g.exp;
            if (g.kind == SymKind::GammaHalf) tail.gamma += g.exp;
            if (g.kind == SymKind::Dg) tail.d += g.exp;
            if (g.kind == SymKind::DPrime) tail.dp_ += g.exp;
        }
        for (size_t t = boundary; t < cut; ++t) c *= tail_cross(R, tail, w[t]).inv();
        Word nw(w.begin(), w.begin() + static_cast<long>(boundary));
        Word tw = tail_to_word(tail);
        nw.insert(nw.end(), tw.begin(), tw.end());
        nw.insert(nw.end(), w.begin() + static_cast<long>(boundary), w.begin() + static_cast<long>(cut));
        out.add(nw, c);
    }
    return out;
}

namespace {

struct Rewrite {
    Element ideal_elem;  // normalized left * instance * right
    Scalar coeff;        // multiplier so the pattern word cancels exactly
    TraceItem item;
};

// Decide whether the adjacent pair (u, v) inside a word is a redex, and
// produce the relation instance that straightens it.
std::optional<std::pair<RelId, RelParams>> find_pattern(const RootData& R, const GenSymbol& u, const GenSymbol& v) {
    // x+ past x-
    if (u.kind == SymKind::Xp && v.kind == SymKind::Xm) {
        RelParams p;
        p.i = u.index;
        p.j = v.index;
        p.k = u.level;
        p.kp = v.level;
        return std::make_pair(RelId::D8, p);
    }
    // a settles between the minus and plus blocks
    if (u.kind == SymKind::Xp && v.kind == SymKind::A) {
        RelParams p;
        p.i = v.index;
        p.ell = v.level;
        p.j = u.index;
        p.k = u.level;
        p.sign = +1;
        return std::make_pair(v.level < 0 ? RelId::D6_1 : RelId::D6_2, p);
    }
    if (u.kind == SymKind::A && v.kind == SymKind::Xm) {
        RelParams p;
        p.i = u.index;
        p.ell = u.level;
        p.j = v.index;
        p.k = v.level;
        p.sign = -1;
        return std::make_pair(u.level < 0 ? RelId::D6_1 : RelId::D6_2, p);
    }
    // a-letters sort by (index, level)
    if (u.kind == SymKind::A && v.kind == SymKind::A) {
        if (std::pair{u.index, u.level} > std::pair{v.index, v.level}) {
            RelParams p;
            p.i = u.index;
            p.ell = u.level;
            p.j = v.index;
            p.ellp = v.level;
            return std::make_pair(RelId::D2, p);
        }
        return std::nullopt;
    }
    if ((u.kind == SymKind::Xp && v.kind == SymKind::Xp) || (u.kind == SymKind::Xm && v.kind == SymKind::Xm)) {
        bool plus = u.kind == SymKind::Xp;
        int sign = plus ? +1 : -1;
        int i = u.index, j = v.index;
        if (i == j) {
            if (u.level <= v.level) return std::nullopt;
            RelParams p;
            p.i = i;
            p.j = i;
            p.k = u.level - 1;
            p.kp = v.level;
            p.sign = sign;
            return std::make_pair(RelId::D7, p);
        }
        if (R.cartan(i, j) == 0) {
            bool out_of_order = plus ? (i < j) : (i > j);
            if (!out_of_order) return std::nullopt;
            RelParams p;
            p.i = i;
            p.j = j;
            p.m1 = u.level;
            p.k = v.level;
            p.sign = sign;
            return std::make_pair(RelId::D9_1, p);
        }
        if (R.cartan(i, j) != -1) return std::nullopt;
        if (plus) {
            // ascent with nonzero right level: shift the level to the left
            if (j != i + 1 || v.level == 0) return std::nullopt;
            RelParams p;
            p.i = i;
            p.j = j;
            p.sign = +1;
            if (v.level > 0) {
                p.k = u.level;
                p.kp = v.level - 1;
            } else {
                p.k = u.level - 1;
                p.kp = v.level;
            }
            return std::make_pair(RelId::D7, p);
        }
        // minus side: descent with nonzero left level
        if (i != j + 1 || u.level == 0) return std::nullopt;
        RelParams p;
        p.i = i;
        p.j = j;
        p.sign = -1;
        if (u.level > 0) {
            p.k = u.level - 1;
            p.kp = v.level;
        } else {
            p.k = u.level;
            p.kp = v.level - 1;
        }
        return std::make_pair(RelId::D7, p);
    }
    return std::nullopt;
}

}  // namespace

ReduceResult reduce(const RootData& R, const Element& x, const ReduceOptions& opts) {
    ReduceResult res;
    Element cur = normalize_torals(R, expand_series(x));
    std::set<Word> queue;
    for (const auto& [w, c] : cur.terms()) queue.insert(w);
    long steps = 0;
    while (!queue.empty()) {
        if (steps >= opts.step_cap) {
            res.normal = false;
            break;
        }
        Word w;
        if (opts.scan_right) {
            w = *queue.rbegin();
            queue.erase(std::prev(queue.end()));
        } else {
            w = *queue.begin();
            queue.erase(queue.begin());
        }
        Scalar c = cur.coeff(w);
        if (c.is_zero()) continue;
        // free prefix ends at the first toral letter
        size_t cut = 0;
        while (cut < w.size() && !is_toral(w[cut].kind)) ++cut;
        bool rewritten = false;
        auto positions = [&](size_t t) { return opts.scan_right ? cut - 2 - t : t; };
        for (size_t t = 0; cut >= 2 && t + 2 <= cut; ++t) {
            size_t pos = positions(t);
            auto hit = find_pattern(R, w[pos], w[pos + 1]);
            if (!hit) continue;
            auto [id, params] = *hit;
            Element g = rel_instance(R, id, params);
            // Exact multiplier so the pattern word cancels: coefficient of the
            // pattern inside the instance.
            Word pat{w[pos], w[pos + 1]};
            Scalar inside = normalize_torals(R, g).coeff(pat);
            if (inside.is_zero()) continue;
            Word left(w.begin(), w.begin() + static_cast<long>(pos));
            Word right(w.begin() + static_cast<long>(pos) + 2, w.end());
            Scalar factor = c / inside;
            Element delta = normalize_torals(R, Element(left, Scalar::one()) * g * Element(right, Scalar::one()));
            for (const auto& [dw, dc] : delta.terms()) {
                cur.add(dw, -(factor * dc));
                queue.insert(dw);
            }
            if (opts.trace) res.trace.push_back({factor, left, id, params, right});
            ++steps;
            rewritten = true;
            break;
        }
        (void)rewritten;
    }
    res.value = cur;
    res.steps = steps;
    return res;
}

Element replay_trace(const RootData& R, const Element& start, const std::vector<TraceItem>& items) {
    Element acc = normalize_torals(R, expand_series(start));
    for (const auto& it : items) {
        Element g = rel_instance(R, it.id, it.params);
        Element delta = normalize_torals(R, Element(it.left, Scalar::one()) * g * Element(it.right, Scalar::one()));
        acc -= delta.scaled(it.coeff);
    }
    return acc;
}

}  // namespace urs
