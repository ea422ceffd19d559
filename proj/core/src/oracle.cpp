#include "urs/oracle.hpp"

#include <algorithm>
#include <functional>

#include "urs/errors.hpp"

namespace urs {

namespace {

// ---- toral tails as exponent vectors ----------------------------------

// key: (kind code, index); gamma keys use index 0.
using TailVec = std::map<std::pair<int, int>, int>;

int kind_code(SymKind k) {
    switch (k) {
        case SymKind::Omega: return 0;
        case SymKind::OmegaPrime: return 1;
        case SymKind::GammaHalf: return 2;
        case SymKind::Dg: return 3;
        case SymKind::DPrime: return 4;
        default: return -1;
    }
}

std::pair<Word, TailVec> split_tail(const Word& w) {
    size_t cut = w.size();
    while (cut > 0 && is_toral(w[cut - 1].kind)) --cut;
    Word free(w.begin(), w.begin() + static_cast<long>(cut));
    TailVec tail;
    for (size_t t = cut; t < w.size(); ++t) {
        int code = kind_code(w[t].kind);
        tail[{code, code <= 1 ? w[t].index : 0}] += w[t].exp;
    }
    return {free, tail};
}

Word render_tail(const TailVec& tv) {
    Word w;
    auto emit = [&](int code, int index, int exp) {
        if (!exp) return;
        switch (code) {
            case 0: w.push_back(om(index, exp)); break;
            case 1: w.push_back(omp(index, exp)); break;
            case 2: w.push_back(gam(exp)); break;
            case 3: w.push_back(dg(exp)); break;
            case 4: w.push_back(dp(exp)); break;
            default: break;
        }
    };
    for (const auto& [k, e] : tv) emit(k.first, k.second, e);
    return w;
}

TailVec tail_diff(const TailVec& a, const TailVec& b) {
    TailVec out = a;
    for (const auto& [k, e] : b) {
        out[k] -= e;
        if (out[k] == 0) out.erase(k);
    }
    return out;
}

bool tail_nonzero(const TailVec& t) { return !t.empty(); }

Element shift_element(const Element& x, const TailVec& delta) {
    if (delta.empty()) return x;
    Element out;
    for (const auto& [w, c] : x.terms()) {
        auto [free, tail] = split_tail(w);
        for (const auto& [k, e] : delta) {
            tail[k] += e;
            if (tail[k] == 0) tail.erase(k);
        }
        Word nw = free;
        Word tw = render_tail(tail);
        nw.insert(nw.end(), tw.begin(), tw.end());
        out.add(nw, c);
    }
    return out;
}

// ---- relation instance pool --------------------------------------------

struct GenInst {
    RelId id;
    RelParams p;
};

std::vector<GenInst> instance_pool(const RootData& R, int wlo, int whi) {
    std::vector<GenInst> out;
    int n = R.n();
    auto in_w = [&](int v) { return v >= wlo && v <= whi; };
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            // D2
            for (int l = wlo; l <= whi; ++l)
                for (int lp = wlo; lp <= whi; ++lp) {
                    if (l == 0 || lp == 0) continue;
                    if (i > j || (i == j && l > lp)) continue;  // antisymmetric pairs once
                    RelParams p;
                    p.i = i;
                    p.j = j;
                    p.ell = l;
                    p.ellp = lp;
                    out.push_back({RelId::D2, p});
                }
            // D6
            for (int l = wlo; l <= whi; ++l)
                for (int k = wlo; k <= whi; ++k)
                    for (int sign : {+1, -1}) {
                        if (l == 0 || !in_w(l + k)) continue;
                        RelParams p;
                        p.i = i;
                        p.j = j;
                        p.ell = l;
                        p.k = k;
                        p.sign = sign;
                        out.push_back({l < 0 ? RelId::D6_1 : RelId::D6_2, p});
                    }
            // D7
            for (int k = wlo; k < whi; ++k)
                for (int kp = wlo; kp < whi; ++kp)
                    for (int sign : {+1, -1}) {
                        RelParams p;
                        p.i = i;
                        p.j = j;
                        p.k = k;
                        p.kp = kp;
                        p.sign = sign;
                        out.push_back({RelId::D7, p});
                    }
            // D8
            for (int k = wlo; k <= whi; ++k)
                for (int kp = wlo; kp <= whi; ++kp) {
                    if (i == j) {
                        int m = k + kp;
                        if (m > 0 && m > whi) continue;
                        if (m < 0 && m < wlo) continue;
                    }
                    RelParams p;
                    p.i = i;
                    p.j = j;
                    p.k = k;
                    p.kp = kp;
                    out.push_back({RelId::D8, p});
                }
            // D9
            if (i < j && R.cartan(i, j) == 0)
                for (int m = wlo; m <= whi; ++m)
                    for (int k = wlo; k <= whi; ++k)
                        for (int sign : {+1, -1}) {
                            RelParams p;
                            p.i = i;
                            p.j = j;
                            p.m1 = m;
                            p.k = k;
                            p.sign = sign;
                            out.push_back({RelId::D9_1, p});
                        }
            if (R.cartan(i, j) == -1)
                for (int m1 = wlo; m1 <= whi; ++m1)
                    for (int m2 = m1; m2 <= whi; ++m2)
                        for (int k = wlo; k <= whi; ++k)
                            for (int sign : {+1, -1}) {
                                RelParams p;
                                p.i = i;
                                p.j = j;
                                p.m1 = m1;
                                p.m2 = m2;
                                p.k = k;
                                p.sign = sign;
                                out.push_back({i < j ? RelId::D9_2 : RelId::D9_3, p});
                            }
        }
    return out;
}

// ---- multiplier enumeration ----------------------------------------------

struct MultiplierSets {
    std::vector<std::pair<Word, Word>> pairs;  // (left, right)
};

void enumerate_multipliers(const RootData& R, const std::vector<int>& dneed, int lneed, const OracleOptions& opts,
                           int ewlo, int ewhi, MultiplierSets& out) {
    int n = R.n();
    int xlen = 0;
    for (int i = 1; i < n; ++i) xlen += std::abs(dneed[i]);
    if (xlen > opts.max_mult_len) return;

    std::vector<GenSymbol> letters;
    std::function<void(int)> assign_levels = [&](int idx) {
        if (idx == n) {
            // optional a letters
            std::function<void(int, int)> with_a = [&](int acount, int minidx) {
                int have = 0;
                for (const auto& g : letters) have += g.level;
                if (acount == 0) {
                    if (have != lneed) return;
                    // all orderings and splits
                    std::vector<GenSymbol> sorted = letters;
                    std::sort(sorted.begin(), sorted.end());
                    do {
                        for (size_t cutpos = 0; cutpos <= sorted.size(); ++cutpos) {
                            Word L(sorted.begin(), sorted.begin() + static_cast<long>(cutpos));
                            Word Rt(sorted.begin() + static_cast<long>(cutpos), sorted.end());
                            out.pairs.emplace_back(L, Rt);
                        }
                    } while (std::next_permutation(sorted.begin(), sorted.end()));
                    return;
                }
                for (int ai = minidx; ai < n; ++ai)
                    for (int al = ewlo; al <= ewhi; ++al) {
                        if (al == 0) continue;
                        letters.push_back(aa(ai, al));
                        with_a(acount - 1, ai);
                        letters.pop_back();
                    }
            };
            for (int acount = 0; acount <= opts.max_mult_a; ++acount) {
                if (xlen + acount > opts.max_mult_len) break;
                with_a(acount, 1);
            }
            return;
        }
        int c = dneed[idx];
        if (c == 0) {
            assign_levels(idx + 1);
            return;
        }
        int cnt = std::abs(c);
        std::vector<int> lv(static_cast<size_t>(cnt), ewlo);
        std::function<void(int, int)> pick = [&](int t, int minlv) {
            if (t == cnt) {
                assign_levels(idx + 1);
                return;
            }
            for (int v = minlv; v <= ewhi; ++v) {
                letters.push_back(c > 0 ? xp(idx, v) : xm(idx, v));
                pick(t + 1, v);  // nondecreasing levels avoid duplicate multisets
                letters.pop_back();
            }
        };
        (void)lv;
        pick(0, ewlo);
    };
    assign_levels(1);
}

// ---- elimination with combination tracking --------------------------------

struct GenDescriptor {
    Word left;
    RelId id;
    RelParams p;
    Word right;  // includes any toral shift
    std::vector<TraceItem> trace;
};

struct PivotRow {
    std::map<Word, Scalar> vals;
    std::vector<std::pair<size_t, Scalar>> combo;
};

class ComboEliminator {
  public:
    explicit ComboEliminator(bool track) : track_(track) {}

    void reduce(std::map<Word, Scalar>& row, std::vector<std::pair<size_t, Scalar>>& combo) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.begin()->first);
            if (it == pivots_.end()) return;
            Scalar f = row.begin()->second;
            for (const auto& [w, c] : it->second.vals) {
                auto jt = row.find(w);
                Scalar nv = (jt == row.end() ? Scalar::zero() : jt->second) - f * c;
                if (nv.is_zero()) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[w] = nv;
                }
            }
            if (track_)
                for (const auto& [g, c] : it->second.combo) combo.emplace_back(g, -f * c);
        }
    }

    bool insert(std::map<Word, Scalar> row, size_t gen_index) {
        std::vector<std::pair<size_t, Scalar>> combo;
        if (track_) combo.emplace_back(gen_index, Scalar::one());
        reduce(row, combo);
        if (row.empty()) return false;
        Scalar lead = row.begin()->second;
        for (auto& [w, c] : row) c = c / lead;
        if (track_)
            for (auto& [g, c] : combo) c = c / lead;
        pivots_[row.begin()->first] = PivotRow{std::move(row), std::move(combo)};
        return true;
    }

    size_t rank() const { return pivots_.size(); }

  private:
    bool track_;
    std::map<Word, PivotRow> pivots_;
};

std::map<Word, Scalar> to_row(const Element& x) {
    std::map<Word, Scalar> out;
    for (const auto& [w, c] : x.terms()) out[w] = c;
    return out;
}

std::vector<int> finite_degree(const RootData& R, const Element& x) {
    Graded g = grade(x, R.n());
    return g.degree;
}

OracleOutcome run_oracle(const RootData& R, const Element& target, const std::vector<Element>& extra,
                         const OracleOptions& opts) {
    OracleOutcome out;
    Element t0 = normalize_torals(R, expand_series(target));
    if (t0.is_zero()) {
        out.verdict = Verdict::Yes;
        if (opts.want_certificate) out.certificate = Certificate{};
        return out;
    }
    for (const auto& [w, c] : t0.terms())
        for (const auto& g : w)
            if (is_chevalley(g.kind)) throw DomainError("oracle targets live on the loop side");

    Graded tg = grade(t0, R.n());  // throws if inhomogeneous

    ReduceOptions ro;
    ro.step_cap = opts.step_cap;
    ro.trace = opts.want_certificate;
    ReduceResult tr = reduce(R, t0, ro);
    Element t = tr.value;
    if (t.is_zero()) {
        out.verdict = Verdict::Yes;
        if (opts.want_certificate) out.certificate = Certificate{std::move(tr.trace)};
        return out;
    }

    // Effective window: the configured one, widened to the residual's letters.
    int ewlo = opts.wlo, ewhi = opts.whi;
    for (const auto& [w, c] : t.terms())
        for (const auto& g : w)
            if (!is_toral(g.kind)) {
                ewlo = std::min(ewlo, g.level);
                ewhi = std::max(ewhi, g.level);
            }

    std::vector<TailVec> target_tails;
    for (const auto& [w, c] : t.terms()) {
        auto [f, tv] = split_tail(w);
        target_tails.push_back(tv);
    }

    ComboEliminator elim(opts.want_certificate);
    std::vector<GenDescriptor> gens;
    std::map<Word, Scalar> trow = to_row(t);
    std::vector<std::pair<size_t, Scalar>> tcombo;

    size_t words_seen = t.size();
    auto try_finish = [&]() {
        std::map<Word, Scalar> probe = trow;
        std::vector<std::pair<size_t, Scalar>> combo;
        elim.reduce(probe, combo);
        if (!probe.empty()) return false;
        out.verdict = Verdict::Yes;
        if (opts.want_certificate) {
            Certificate cert;
            cert.items = tr.trace;
            for (const auto& [g, c] : combo) {
                if (g == SIZE_MAX) continue;
                const GenDescriptor& d = gens[g];
                cert.items.push_back({-c, d.left, d.id, d.p, d.right});
                for (const auto& it : d.trace) cert.items.push_back({c * it.coeff, it.left, it.id, it.params, it.right});
            }
            out.certificate = std::move(cert);
        }
        return true;
    };

    // Span rows first (they are few).
    for (const auto& x : extra) {
        ReduceResult rr = reduce(R, x, {opts.step_cap, false, false});
        if (rr.value.is_zero()) continue;
        elim.insert(to_row(rr.value), SIZE_MAX);
    }
    if (try_finish()) return out;

    std::vector<GenInst> pool = instance_pool(R, ewlo, ewhi);
    size_t row_count = 0;
    size_t since_check = 0;
    for (const auto& gi : pool) {
        Element g = rel_instance(R, gi.id, gi.p);
        if (g.is_zero()) continue;
        Element gn = normalize_torals(R, expand_series(g));
        if (gn.is_zero()) continue;
        Graded gg = grade(gn, R.n());
        std::vector<int> dneed(static_cast<size_t>(R.n()), 0);
        for (int i = 1; i < R.n(); ++i)
            dneed[static_cast<size_t>(i)] = tg.degree[static_cast<size_t>(i)] - gg.degree[static_cast<size_t>(i)];
        int lneed = tg.level - gg.level;
        MultiplierSets mults;
        enumerate_multipliers(R, dneed, lneed, opts, ewlo, ewhi, mults);
        for (const auto& [L, Rt] : mults.pairs) {
            ReduceOptions rro;
            rro.step_cap = opts.step_cap;
            rro.trace = opts.want_certificate;
            Element raw = Element(L, Scalar::one()) * g * Element(Rt, Scalar::one());
            ReduceResult rr = reduce(R, raw, rro);
            if (rr.value.is_zero()) continue;
            // Align toral tails with the target.
            std::vector<TailVec> deltas;
            deltas.push_back({});
            std::vector<TailVec> row_tails;
            for (const auto& [rw, rc] : rr.value.terms()) {
                row_tails.push_back(split_tail(rw).second);
                if (row_tails.size() >= 4) break;
            }
            for (const auto& tt : target_tails) {
                for (const auto& rtv : row_tails) {
                    TailVec d = tail_diff(tt, rtv);
                    if (tail_nonzero(d) &&
                        std::find(deltas.begin(), deltas.end(), d) == deltas.end())
                        deltas.push_back(d);
                }
                if (deltas.size() >= static_cast<size_t>(opts.max_shifts)) break;
            }
            for (const auto& d : deltas) {
                Element shifted = shift_element(rr.value, d);
                words_seen += shifted.size();
                if (words_seen > opts.max_dim)
                    throw ResourceLimit("component exceeds the word cap", words_seen);
                size_t gen_index = SIZE_MAX;
                if (opts.want_certificate) {
                    Word rshift = Rt;
                    Word dw = render_tail(d);
                    rshift.insert(rshift.end(), dw.begin(), dw.end());
                    std::vector<TraceItem> trace = rr.trace;
                    for (auto& it : trace) {
                        Word nr = it.right;
                        nr.insert(nr.end(), dw.begin(), dw.end());
                        it.right = nr;
                    }
                    gens.push_back({L, gi.id, gi.p, rshift, std::move(trace)});
                    gen_index = gens.size() - 1;
                }
                elim.insert(to_row(shifted), gen_index);
                ++row_count;
                ++since_check;
                if (row_count > opts.max_rows) throw ResourceLimit("row cap exceeded", row_count);
                if (since_check >= 64) {
                    since_check = 0;
                    if (try_finish()) {
                        out.rows = row_count;
                        out.dim = words_seen;
                        return out;
                    }
                }
            }
        }
    }
    out.rows = row_count;
    out.dim = words_seen;
    if (try_finish()) return out;
    out.verdict = Verdict::Inconclusive;
    out.note = "not reachable within the window and caps";
    return out;
}

}  // namespace

OracleOutcome ideal_member(const RootData& R, const Element& target, const OracleOptions& opts) {
    return run_oracle(R, target, {}, opts);
}

OracleOutcome certify_in_span(const RootData& R, const Element& target, const std::vector<Element>& extra,
                              const OracleOptions& opts) {
    OracleOptions o = opts;
    o.want_certificate = false;
    return run_oracle(R, target, extra, o);
}

bool certificate_replays(const RootData& R, const Element& target, const Certificate& cert) {
    return replay_trace(R, target, cert.items).is_zero();
}

long kostant_count(const RootData& R, const std::vector<int>& degree) {
    const auto& roots = R.positive_roots();
    std::function<long(size_t, std::vector<int>)> rec = [&](size_t idx, std::vector<int> rem) -> long {
        bool zero = true;
        for (int v : rem)
            if (v != 0) zero = false;
        if (zero) return 1;
        if (idx == roots.size()) return 0;
        long total = rec(idx + 1, rem);
        std::vector<int> rv = R.root_vec(roots[idx]);
        while (true) {
            bool fits = true;
            for (size_t t = 0; t < rem.size(); ++t) {
                rem[t] -= rv[t];
                if (rem[t] < 0) fits = false;
            }
            if (!fits) break;
            total += rec(idx + 1, rem);
        }
        return total;
    };
    std::vector<int> d = degree;
    d.resize(static_cast<size_t>(R.n()), 0);
    return rec(0, d);
}

std::vector<std::vector<Root>> root_partitions(const RootData& R, const std::vector<int>& degree) {
    const auto& roots = R.positive_roots();
    std::vector<std::vector<Root>> out;
    std::vector<Root> cur;
    std::function<void(size_t, std::vector<int>)> rec = [&](size_t idx, std::vector<int> rem) {
        bool zero = true;
        for (int v : rem)
            if (v != 0) zero = false;
        if (zero) {
            out.push_back(cur);
            return;
        }
        if (idx == roots.size()) return;
        rec(idx + 1, rem);
        std::vector<int> rv = R.root_vec(roots[idx]);
        std::vector<int> work = rem;
        while (true) {
            bool fits = true;
            for (size_t t = 0; t < work.size(); ++t) {
                work[t] -= rv[t];
                if (work[t] < 0) fits = false;
            }
            if (!fits) break;
            cur.push_back(roots[idx]);
            rec(idx + 1, work);
        }
        for (size_t t = 0; t < cur.size();) {
            if (cur[t] == roots[idx])
                cur.erase(cur.begin() + static_cast<long>(t));
            else
                ++t;
        }
    };
    std::vector<int> d = degree;
    d.resize(static_cast<size_t>(R.n()), 0);
    rec(0, d);
    return out;
}

namespace {

std::vector<Word> component_words(const std::vector<int>& degree, int sign) {
    std::vector<GenSymbol> letters;
    for (size_t i = 1; i < degree.size(); ++i)
        for (int c = 0; c < degree[i]; ++c)
            letters.push_back(sign > 0 ? xp(static_cast<int>(i), 0) : xm(static_cast<int>(i), 0));
    std::sort(letters.begin(), letters.end());
    std::vector<Word> out;
    if (letters.empty()) {
        out.push_back({});
        return out;
    }
    do {
        out.push_back(letters);
    } while (std::next_permutation(letters.begin(), letters.end()));
    return out;
}

std::vector<Element> level0_rows(const RootData& R, const std::vector<int>& degree, int sign) {
    OracleOptions opts;
    opts.wlo = 0;
    opts.whi = 0;
    opts.max_mult_len = 8;
    opts.max_mult_a = 0;
    std::vector<Element> rows;
    std::vector<GenInst> pool;
    int n = R.n();
    for (int i = 1; i < n; ++i)
        for (int j = 1; j < n; ++j) {
            if (i < j && R.cartan(i, j) == 0) {
                RelParams p;
                p.i = i;
                p.j = j;
                p.sign = sign;
                pool.push_back({RelId::D9_1, p});
            }
            if (R.cartan(i, j) == -1) {
                RelParams p;
                p.i = i;
                p.j = j;
                p.sign = sign;
                pool.push_back({i < j ? RelId::D9_2 : RelId::D9_3, p});
            }
        }
    for (const auto& gi : pool) {
        Element g = rel_instance(R, gi.id, gi.p);
        Graded gg = grade(g, n);
        std::vector<int> dneed(static_cast<size_t>(n), 0);
        bool ok = true;
        for (int i = 1; i < n; ++i) {
            dneed[static_cast<size_t>(i)] = sign * degree[static_cast<size_t>(i)] - gg.degree[static_cast<size_t>(i)];
            if (sign > 0 && dneed[static_cast<size_t>(i)] < 0) ok = false;
            if (sign < 0 && dneed[static_cast<size_t>(i)] > 0) ok = false;
        }
        if (!ok) continue;
        MultiplierSets mults;
        enumerate_multipliers(R, dneed, 0, opts, 0, 0, mults);
        for (const auto& [L, Rt] : mults.pairs)
            rows.push_back(Element(L, Scalar::one()) * g * Element(Rt, Scalar::one()));
    }
    return rows;
}

}  // namespace

size_t level0_dim(const RootData& R, const std::vector<int>& degree, int sign) {
    std::vector<Word> words = component_words(degree, sign);
    Eliminator<Scalar> elim;
    for (const auto& row : level0_rows(R, degree, sign)) {
        std::map<Word, Scalar> m;
        for (const auto& [w, c] : row.terms()) m[w] = c;
        elim.insert(std::move(m));
    }
    return words.size() - elim.rank();
}

Decomposition lyndon_decompose(const RootData& R, const Element& x, int sign) {
    Decomposition out;
    if (x.is_zero()) {
        out.ok = true;
        return out;
    }
    Graded g = grade(x, R.n());
    if (g.level != 0) {
        out.note = "only level-zero elements decompose in this basis";
        return out;
    }
    std::vector<int> degree(static_cast<size_t>(R.n()), 0);
    for (int i = 1; i < R.n(); ++i) {
        int v = g.degree[static_cast<size_t>(i)];
        if (sign > 0 ? v < 0 : v > 0) {
            out.note = "degree sign does not match the requested side";
            return out;
        }
        degree[static_cast<size_t>(i)] = std::abs(v);
    }
    auto partitions = root_partitions(R, degree);
    std::sort(partitions.begin(), partitions.end(), [&](const auto& a, const auto& b) {
        std::vector<int> ra, rb;
        for (const auto& r : a) ra.push_back(R.root_rank(r));
        for (const auto& r : b) rb.push_back(R.root_rank(r));
        return ra < rb;
    });

    Eliminator<Scalar> ideal;
    for (const auto& row : level0_rows(R, degree, sign)) {
        std::map<Word, Scalar> m;
        for (const auto& [w, c] : row.terms()) m[w] = c;
        ideal.insert(std::move(m));
    }

    // Reduce the basis expansions and the target by the ideal rows, then
    // solve the target's coordinates over the reduced basis.
    struct BRow {
        std::map<Word, Scalar> vals;
        std::vector<std::pair<size_t, Scalar>> combo;
    };
    std::map<Word, BRow> pivots;
    for (size_t k = 0; k < partitions.size(); ++k) {
        Element b = Element::unit();
        if (sign > 0) {
            for (size_t t = partitions[k].size(); t-- > 0;) b = b * root_vector(R, partitions[k][t], 0, +1);
        } else {
            for (size_t t = 0; t < partitions[k].size(); ++t) b = b * root_vector(R, partitions[k][t], 0, -1);
        }
        std::map<Word, Scalar> row;
        for (const auto& [w, c] : b.terms()) row[w] = c;
        ideal.reduce_in_place(row);
        std::vector<std::pair<size_t, Scalar>> combo{{k, Scalar::one()}};
        while (!row.empty()) {
            auto it = pivots.find(row.begin()->first);
            if (it == pivots.end()) break;
            Scalar f = row.begin()->second;
            for (const auto& [w, c] : it->second.vals) {
                auto jt = row.find(w);
                Scalar nv = (jt == row.end() ? Scalar::zero() : jt->second) - f * c;
                if (nv.is_zero()) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[w] = nv;
                }
            }
            for (const auto& [idx, c] : it->second.combo) combo.emplace_back(idx, -f * c);
        }
        if (row.empty()) {
            out.note = "basis expansions are dependent modulo the Serre ideal";
            return out;
        }
        Scalar lead = row.begin()->second;
        for (auto& [w, c] : row) c = c / lead;
        for (auto& [idx, c] : combo) c = c / lead;
        pivots[row.begin()->first] = BRow{std::move(row), std::move(combo)};
    }

    std::map<Word, Scalar> trow;
    for (const auto& [w, c] : x.terms()) trow[w] = c;
    ideal.reduce_in_place(trow);
    std::vector<Scalar> coords(partitions.size(), Scalar::zero());
    while (!trow.empty()) {
        auto it = pivots.find(trow.begin()->first);
        if (it == pivots.end()) {
            out.note = "element does not lie in the basis span";
            return out;
        }
        Scalar f = trow.begin()->second;
        for (const auto& [w, c] : it->second.vals) {
            auto jt = trow.find(w);
            Scalar nv = (jt == trow.end() ? Scalar::zero() : jt->second) - f * c;
            if (nv.is_zero()) {
                if (jt != trow.end()) trow.erase(jt);
            } else {
                trow[w] = nv;
            }
        }
        for (const auto& [idx, c] : it->second.combo) coords[idx] += f * c;
    }
    out.ok = true;
    out.coords = std::move(coords);
    return out;
}

}  // namespace urs
