#include "urs/relations.hpp"

#include <functional>

#include "urs/errors.hpp"

namespace urs {

std::string rel_name(RelId id) {
    switch (id) {
        case RelId::D1inv: return "D1";
        case RelId::D1comm: return "D1";
        case RelId::D1gamma: return "D1";
        case RelId::D2: return "D2";
        case RelId::D3: return "D3";
        case RelId::D4: return "D4";
        case RelId::D5: return "D5";
        case RelId::D6_1: return "D6_1";
        case RelId::D6_2: return "D6_2";
        case RelId::D7: return "D7";
        case RelId::D8: return "D8";
        case RelId::D9_1: return "D9_1";
        case RelId::D9_2: return "D9_2";
        case RelId::D9_3: return "D9_3";
        case RelId::A1: return "A1";
        case RelId::A2: return "A2";
        case RelId::A3: return "A3";
        case RelId::A4: return "A4";
        case RelId::A5: return "A5";
        case RelId::A6: return "A6";
        case RelId::A7: return "A7";
    }
    return "?";
}

namespace {

GenSymbol toral_by_code(int code, int index, int exp) {
    switch (code) {
        case 0: return om(index, exp);
        case 1: return omp(index, exp);
        case 2: return gam(exp);
        case 3: return gamp(exp);
        case 4: return dg(exp);
        case 5: return dp(exp);
        default: throw DomainError("bad toral kind code");
    }
}

void need(bool cond, const char* what) {
    if (!cond) throw DomainError(std::string("relation parameters out of domain: ") + what);
}

Element commutator(const Element& a, const Element& b) { return a * b - b * a; }

// Signed-denominator coefficient of the a-vs-x commutation relations.
Scalar d6_coefficient(const RootData& R, int i, int j, int ell) {
    Scalar c = deformed_bracket(ell, R.cartan(i, j));
    return ell < 0 ? -c : c;
}

}  // namespace

Element omega_series_elem(int i, int m, bool primed) {
    if (!primed && m < 0) return Element();
    if (primed && m > 0) return Element();
    GenSymbol head = primed ? omp(i) : om(i);
    if (m == 0) return Element(head);
    int mm = m < 0 ? -m : m;
    Scalar step = primed ? -Scalar::r_minus_s() : Scalar::r_minus_s();
    Element out;
    // Sum over multisets of positive integers summing to |m|; commuting
    // letters make the multinomial weight 1/prod(mult!).
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int minpart) {
        if (remaining == 0) {
            Word w{head};
            Scalar coeff = Scalar::one();
            Rat denom = 1;
            int run = 0;
            for (size_t t = 0; t < parts.size(); ++t) {
                w.push_back(aa(i, primed ? -parts[t] : parts[t]));
                coeff *= step;
                run = (t > 0 && parts[t] == parts[t - 1]) ? run + 1 : 1;
                denom *= run;
            }
            out.add(w, coeff / Scalar(denom));
            return;
        }
        for (int p = minpart; p <= remaining; ++p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    rec(mm, 1);
    return out;
}

Element expand_series(const Element& x) {
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Element acc(Word{}, c);
        for (const auto& g : w) {
            if (g.kind == SymKind::OmegaSeries)
                acc = acc * omega_series_elem(g.index, g.level, false);
            else if (g.kind == SymKind::OmegaPrimeSeries)
                acc = acc * omega_series_elem(g.index, g.level, true);
            else
                acc = acc * Element(g);
        }
        out += acc;
    }
    return out;
}

GenSymbol tau_symbol(const GenSymbol& g) {
    switch (g.kind) {
        case SymKind::E: return f_(g.index);
        case SymKind::F: return e_(g.index);
        case SymKind::Xp: return xm(g.index, -g.level);
        case SymKind::Xm: return xp(g.index, -g.level);
        case SymKind::A: return aa(g.index, -g.level);
        case SymKind::Omega: return omp(g.index, g.exp);
        case SymKind::OmegaPrime: return om(g.index, g.exp);
        case SymKind::GammaHalf: return gamp(g.exp);
        case SymKind::GammaPrimeHalf: return gam(g.exp);
        case SymKind::Dg: return dp(g.exp);
        case SymKind::DPrime: return dg(g.exp);
        case SymKind::OmegaSeries: return ompser(g.index, -g.level);
        case SymKind::OmegaPrimeSeries: return omser(g.index, -g.level);
    }
    throw DomainError("unmapped symbol");
}

Element tau_elem(const Element& x) {
    Element out;
    for (const auto& [w, c] : x.terms()) {
        Word rw;
        for (auto it = w.rbegin(); it != w.rend(); ++it) rw.push_back(tau_symbol(*it));
        out.add(rw, c.tau());
    }
    return out;
}

Element root_vector(const RootData& R, Root alpha, int level, int sign) {
    need(alpha.i >= 1 && alpha.i < alpha.j && alpha.j <= R.n(), "root");
    if (sign > 0) {
        Element acc(xp(alpha.i, level));
        for (int t = alpha.i + 1; t < alpha.j; ++t) acc = qbracket(acc, Element(xp(t, 0)), Scalar::r());
        return acc;
    }
    Element acc(xm(alpha.i, level));
    for (int t = alpha.i + 1; t < alpha.j; ++t) acc = qbracket(Element(xm(t, 0)), acc, Scalar::s());
    return acc;
}

Element affine_qbracket(const RootData& R, const Element& a, const Element& b, int sign) {
    Graded ga = grade(a, R.n()), gb = grade(b, R.n());
    std::vector<int> da = ga.degree, db = gb.degree;
    for (auto& v : da) v = std::abs(v);
    for (auto& v : db) v = std::abs(v);
    Scalar q = R.pairing_finite_vec(da, db);
    return qbracket(a, b, sign > 0 ? q.inv() : q);
}

std::vector<Element> omega_subspace(const RootData& R, Root alpha, int k, int sign, int wlo, int whi) {
    std::vector<Element> out;
    int gaps = alpha.j - alpha.i - 1;
    if (gaps <= 0) return out;  // simple root: no proper partitions
    // Cut points inside (i, j) pick the proper partitions; parts come out in
    // convex order automatically.
    for (int mask = 1; mask < (1 << gaps); ++mask) {
        std::vector<Root> parts;
        int start = alpha.i;
        for (int t = 0; t < gaps; ++t)
            if (mask & (1 << t)) {
                parts.push_back({start, alpha.i + t + 1});
                start = alpha.i + t + 1;
            }
        parts.push_back({start, alpha.j});
        // Level splits within the window.
        size_t nu = parts.size();
        std::vector<int> ks(nu, 0);
        std::function<void(size_t, int)> rec = [&](size_t t, int rem) {
            if (t + 1 == nu) {
                if (rem < wlo || rem > whi) return;
                ks[t] = rem;
                Element prod = Element::unit();
                if (sign > 0) {
                    // decreasing convex order left to right
                    for (size_t p = nu; p-- > 0;) prod = prod * root_vector(R, parts[p], ks[p], +1);
                } else {
                    for (size_t p = 0; p < nu; ++p) prod = prod * root_vector(R, parts[p], ks[p], -1);
                }
                out.push_back(prod);
                return;
            }
            for (int v = wlo; v <= whi; ++v) {
                ks[t] = v;
                rec(t + 1, rem - v);
            }
        };
        rec(0, k);
    }
    return out;
}

Element rel_instance(const RootData& R, RelId id, const RelParams& p) {
    int n = R.n();
    auto in_I = [&](int t) { return t >= 1 && t < n; };
    Scalar rms = Scalar::r_minus_s();
    switch (id) {
        case RelId::D1inv: {
            GenSymbol t = toral_by_code(p.var, p.i, 1);
            return Element(Word{t, toral_by_code(p.var, p.i, -1)}) - Element::unit();
        }
        case RelId::D1comm: {
            GenSymbol t1 = toral_by_code(p.k, p.i, 1);
            GenSymbol t2 = toral_by_code(p.kp, p.j, 1);
            return commutator(Element(t1), Element(t2));
        }
        case RelId::D1gamma: {
            switch (p.var) {
                case 0: return Element(Word{gam(2), gamp(2)}) - Element(Scalar::rs());
                case 1: return commutator(Element(gam(1)), Element(p.sign > 0 ? xp(p.i, p.k) : xm(p.i, p.k)));
                case 2: return commutator(Element(gam(1)), Element(aa(p.i, p.ell)));
                case 3: return commutator(Element(gamp(1)), Element(p.sign > 0 ? xp(p.i, p.k) : xm(p.i, p.k)));
                case 4: return commutator(Element(gamp(1)), Element(aa(p.i, p.ell)));
                default: throw DomainError("D1 subcase");
            }
        }
        case RelId::D2: {
            need(in_I(p.i) && in_I(p.j) && p.ell != 0 && p.ellp != 0, "D2");
            Element lhs = commutator(Element(aa(p.i, p.ell)), Element(aa(p.j, p.ellp)));
            if (p.ell + p.ellp != 0) return lhs;
            int abse = p.ell < 0 ? -p.ell : p.ell;
            Scalar c = deformed_bracket(p.ell, R.cartan(p.i, p.j)) / rms;
            Element gammas = Element(gam(2 * abse)) - Element(gamp(2 * abse));
            return lhs - gammas.scaled(c);
        }
        case RelId::D3: {
            need(in_I(p.i) && in_I(p.j) && p.ell != 0, "D3");
            GenSymbol t = p.var == 0 ? om(p.j, p.sign) : omp(p.j, p.sign);
            return commutator(Element(aa(p.i, p.ell)), Element(t));
        }
        case RelId::D4: {
            bool prime = p.var == 1 || p.var == 3;
            bool on_a = p.var >= 2;
            GenSymbol t = prime ? dp() : dg();
            Element target = on_a ? Element(aa(p.i, p.ell)) : Element(p.sign > 0 ? xp(p.i, p.k) : xm(p.i, p.k));
            need(in_I(p.i) && (!on_a || p.ell != 0), "D4");
            long e = on_a ? p.ell : p.k;
            Scalar chi = prime ? Scalar::s().pow(e) : Scalar::r().pow(e);
            return Element(t) * target - (target * Element(t)).scaled(chi);
        }
        case RelId::D5: {
            need(in_I(p.i) && in_I(p.j), "D5");
            Element x(p.sign > 0 ? xp(p.j, p.k) : xm(p.j, p.k));
            if (p.var == 0) {
                Scalar chi = R.pairing_gen(p.j, p.i).pow(p.sign);
                return Element(om(p.i)) * x - (x * Element(om(p.i))).scaled(chi);
            }
            Scalar chi = R.pairing_gen(p.i, p.j).pow(-p.sign);
            return Element(omp(p.i)) * x - (x * Element(omp(p.i))).scaled(chi);
        }
        case RelId::D6_1:
        case RelId::D6_2: {
            need(in_I(p.i) && in_I(p.j) && p.ell != 0, "D6");
            need((id == RelId::D6_1) == (p.ell < 0), "D6 level sign");
            Element x(p.sign > 0 ? xp(p.j, p.k) : xm(p.j, p.k));
            Element lhs = commutator(Element(aa(p.i, p.ell)), x);
            Scalar c = d6_coefficient(R, p.i, p.j, p.ell);
            if (p.sign < 0) c = -c;
            GenSymbol center = id == RelId::D6_1 ? gam(p.sign * p.ell) : gamp(p.sign * p.ell);
            Element rhs = Element(Word{center, p.sign > 0 ? xp(p.j, p.ell + p.k) : xm(p.j, p.ell + p.k)}, c);
            return lhs - rhs;
        }
        case RelId::D7: {
            need(in_I(p.i) && in_I(p.j), "D7");
            auto X = [&](int idx, int lv) { return Element(p.sign > 0 ? xp(idx, lv) : xm(idx, lv)); };
            Scalar qji = R.pairing_gen(p.j, p.i).pow(p.sign);
            Scalar qij = R.pairing_gen(p.i, p.j).pow(p.sign);
            Scalar mix = half_power(R.pairing_gen(p.j, p.i) / R.pairing_gen(p.i, p.j), p.sign);
            Element lhs = X(p.i, p.k + 1) * X(p.j, p.kp) - (X(p.j, p.kp) * X(p.i, p.k + 1)).scaled(qji);
            Element rhs = X(p.j, p.kp + 1) * X(p.i, p.k) - (X(p.i, p.k) * X(p.j, p.kp + 1)).scaled(qij);
            return lhs + rhs.scaled(mix);
        }
        case RelId::D8: {
            need(in_I(p.i) && in_I(p.j), "D8");
            Element lhs = commutator(Element(xp(p.i, p.k)), Element(xm(p.j, p.kp)));
            if (p.i != p.j) return lhs;
            int m = p.k + p.kp;
            auto torals = [](int gamma_halves, int gammap_halves) {
                Word w;
                if (gammap_halves) w.push_back(gamp(gammap_halves));
                if (gamma_halves) w.push_back(gam(gamma_halves));
                return Element(w, Scalar::one());
            };
            Element term1 = torals(-m, -2 * p.k) * omega_series_elem(p.i, m, false);
            Element term2 = torals(2 * p.kp, m) * omega_series_elem(p.i, m, true);
            return lhs - (term1 - term2).scaled(Scalar::one() / rms);
        }
        case RelId::D9_1: {
            need(in_I(p.i) && in_I(p.j) && R.cartan(p.i, p.j) == 0, "D9_1");
            auto X = [&](int idx, int lv) { return Element(p.sign > 0 ? xp(idx, lv) : xm(idx, lv)); };
            return commutator(X(p.i, p.m1), X(p.j, p.k));
        }
        case RelId::D9_2:
        case RelId::D9_3: {
            bool low_major = id == RelId::D9_2;
            need(in_I(p.i) && in_I(p.j) && R.cartan(p.i, p.j) == -1, "D9 adjacency");
            need(low_major ? p.i < p.j : p.i > p.j, "D9 majority order");
            auto X = [&](int idx, int lv) { return Element(p.sign > 0 ? xp(idx, lv) : xm(idx, lv)); };
            int sg = low_major ? p.sign : -p.sign;
            Scalar mid = Scalar::r().pow(sg) + Scalar::s().pow(sg);
            Scalar outer = Scalar::rs().pow(sg);
            Element sum;
            for (auto [u, v] : {std::pair{p.m1, p.m2}, std::pair{p.m2, p.m1}}) {
                sum += X(p.i, u) * X(p.i, v) * X(p.j, p.k) - (X(p.i, u) * X(p.j, p.k) * X(p.i, v)).scaled(mid) +
                       (X(p.j, p.k) * X(p.i, u) * X(p.i, v)).scaled(outer);
            }
            return sum;
        }
        default:
            return chevalley_instance(R, id, p);
    }
}

Element chevalley_instance(const RootData& R, RelId id, const RelParams& p) {
    int n = R.n();
    auto in_I0 = [&](int t) { return t >= 0 && t < n; };
    Scalar rms = Scalar::r_minus_s();
    switch (id) {
        case RelId::A1: {
            switch (p.var) {
                case 0: return Element(Word{gam(2), gamp(2)}) - Element(Scalar::rs());
                case 1: return commutator(Element(om(p.i)), Element(omp(p.j)));
                case 2: return commutator(Element(om(p.i)), Element(om(p.j)));
                case 3: return commutator(Element(omp(p.i)), Element(dp()));
                case 4: return Element(Word{om(p.i), om(p.i, -1)}) - Element::unit();
                case 5: return commutator(Element(gam(1)), Element(p.sign > 0 ? e_(p.i) : f_(p.i)));
                case 6: return commutator(Element(gamp(1)), Element(p.sign > 0 ? e_(p.i) : f_(p.i)));
                default: throw DomainError("A1 subcase");
            }
        }
        case RelId::A2: {
            need(in_I0(p.i) && in_I0(p.j), "A2");
            switch (p.var) {
                case 0: {
                    Scalar chi = p.i == 0 ? Scalar::r() : Scalar::one();
                    return Element(dg()) * Element(e_(p.i)) - (Element(e_(p.i)) * Element(dg())).scaled(chi);
                }
                case 1: {
                    Scalar chi = p.i == 0 ? Scalar::r().inv() : Scalar::one();
                    return Element(dg()) * Element(f_(p.i)) - (Element(f_(p.i)) * Element(dg())).scaled(chi);
                }
                case 2: {
                    Scalar chi = R.pairing_gen(p.i, p.j);
                    return Element(om(p.j)) * Element(e_(p.i)) - (Element(e_(p.i)) * Element(om(p.j))).scaled(chi);
                }
                default: {
                    Scalar chi = R.pairing_gen(p.i, p.j).inv();
                    return Element(om(p.j)) * Element(f_(p.i)) - (Element(f_(p.i)) * Element(om(p.j))).scaled(chi);
                }
            }
        }
        case RelId::A3: {
            need(in_I0(p.i) && in_I0(p.j), "A3");
            switch (p.var) {
                case 0: {
                    Scalar chi = p.i == 0 ? Scalar::s() : Scalar::one();
                    return Element(dp()) * Element(e_(p.i)) - (Element(e_(p.i)) * Element(dp())).scaled(chi);
                }
                case 1: {
                    Scalar chi = p.i == 0 ? Scalar::s().inv() : Scalar::one();
                    return Element(dp()) * Element(f_(p.i)) - (Element(f_(p.i)) * Element(dp())).scaled(chi);
                }
                case 2: {
                    Scalar chi = R.pairing_gen(p.j, p.i).inv();
                    return Element(omp(p.j)) * Element(e_(p.i)) - (Element(e_(p.i)) * Element(omp(p.j))).scaled(chi);
                }
                default: {
                    Scalar chi = R.pairing_gen(p.j, p.i);
                    return Element(omp(p.j)) * Element(f_(p.i)) - (Element(f_(p.i)) * Element(omp(p.j))).scaled(chi);
                }
            }
        }
        case RelId::A4: {
            need(in_I0(p.i) && in_I0(p.j), "A4");
            Element lhs = commutator(Element(e_(p.i)), Element(f_(p.j)));
            if (p.i != p.j) return lhs;
            return lhs - (Element(om(p.i)) - Element(omp(p.i))).scaled(Scalar::one() / rms);
        }
        case RelId::A5: {
            need(in_I0(p.i) && in_I0(p.j) && R.cartan(p.i, p.j) == 0, "A5");
            if (p.var == 0) return commutator(Element(e_(p.i)), Element(e_(p.j)));
            return commutator(Element(f_(p.i)), Element(f_(p.j)));
        }
        case RelId::A6:
        case RelId::A7: {
            need(in_I0(p.i) && p.j == (p.i + 1) % n, "A6/A7 oriented edge");
            bool e_side = id == RelId::A6;
            auto G = [&](int idx) { return Element(e_side ? e_(idx) : f_(idx)); };
            Scalar mid = e_side ? Scalar::r() + Scalar::s() : Scalar::r().inv() + Scalar::s().inv();
            Scalar outer = e_side ? Scalar::rs() : Scalar::rs().inv();
            int i = p.i, j = p.j;
            if (p.var == 0)
                return G(i) * G(i) * G(j) - (G(i) * G(j) * G(i)).scaled(mid) + (G(j) * G(i) * G(i)).scaled(outer);
            return G(i) * G(j) * G(j) - (G(j) * G(i) * G(j)).scaled(mid) + (G(j) * G(j) * G(i)).scaled(outer);
        }
        default:
            throw DomainError("not a Chevalley relation id");
    }
}

}  // namespace urs
