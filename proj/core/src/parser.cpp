#include "urs/parser.hpp"

#include <cctype>
#include <optional>

namespace urs {

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos);
    }
    long integer() {
        skip_ws();
        bool neg = false;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
            neg = s[pos] == '-';
            ++pos;
        }
        if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
            throw ParseError("expected integer", pos);
        long v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + (s[pos] - '0');
            ++pos;
        }
        return neg ? -v : v;
    }
};

struct Exponent {
    long num;
    bool half;  // true: num/2
};

class Parser {
  public:
    explicit Parser(const std::string& text) : c_{text} {}

    Element parse() {
        Element x = expr();
        if (!c_.eof()) throw ParseError("trailing input", c_.pos);
        return x;
    }

  private:
    Cursor c_;

    Element expr() {
        bool neg = c_.accept('-');
        Element acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (c_.accept('+')) {
                acc += term();
            } else if (c_.peek() == '-') {
                c_.accept('-');
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Element term() {
        Element acc = factor();
        while (true) {
            char p = c_.peek();
            if (p == '*') {
                c_.accept('*');
                acc = acc * factor();
            } else if (p == '/') {
                c_.accept('/');
                Element d = factor();
                acc = acc.scaled(d.as_scalar().inv());
            } else if (starts_factor(p)) {
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    static bool starts_factor(char p) {
        return std::isdigit(static_cast<unsigned char>(p)) || std::isalpha(static_cast<unsigned char>(p)) ||
               p == '(' || p == '[';
    }

    Element factor() {
        Element base = primary();
        while (c_.peek() == '^') {
            c_.accept('^');
            base = apply_exponent(base, exponent());
        }
        return base;
    }

    // "^p/2" with odd p is a half power (the only form the printer emits);
    // any other slash after an exponent is ordinary division.
    Exponent exponent() {
        long num = c_.integer();
        if (num % 2 != 0) {
            size_t save = c_.pos;
            if (c_.accept('/')) {
                c_.skip_ws();
                if (c_.pos < c_.s.size() && c_.s[c_.pos] == '2' &&
                    (c_.pos + 1 >= c_.s.size() || !std::isdigit(static_cast<unsigned char>(c_.s[c_.pos + 1])))) {
                    ++c_.pos;
                    return {num, true};
                }
                c_.pos = save;
            }
        }
        return {num, false};
    }

    Element apply_exponent(const Element& base, Exponent e) {
        // Scalar base
        if (base.is_zero() || (base.size() == 1 && base.terms().begin()->first.empty())) {
            Scalar sc = base.as_scalar();
            return Element(e.half ? half_power(sc, e.num) : sc.pow(e.num));
        }
        // Single invertible symbol
        if (base.size() == 1 && base.terms().begin()->first.size() == 1) {
            GenSymbol g = base.terms().begin()->first[0];
            Scalar coeff = base.terms().begin()->second;
            if (is_toral(g.kind)) {
                bool gamma = g.kind == SymKind::GammaHalf || g.kind == SymKind::GammaPrimeHalf;
                long halves = e.half ? e.num : 2 * e.num;
                if (!gamma) {
                    if (e.half) throw ParseError("half exponent only on g, g' or scalar monomials", c_.pos);
                    g.exp = static_cast<int>(g.exp * e.num);
                } else {
                    if ((g.exp * halves) % 2 != 0) throw ParseError("quarter powers are not representable", c_.pos);
                    g.exp = static_cast<int>(g.exp * halves / 2);
                }
                Scalar cc = e.half ? half_power(coeff, e.num) : coeff.pow(e.num);
                if (g.exp == 0) return Element(cc);
                return Element(g, cc);
            }
        }
        if (e.half) throw ParseError("half exponent only on g, g' or scalar monomials", c_.pos);
        if (e.num >= 0) {
            Element acc = Element::unit();
            for (long t = 0; t < e.num; ++t) acc = acc * base;
            return acc;
        }
        // Negative power: invertible only for purely toral single words.
        if (base.size() == 1) {
            const Word& w = base.terms().begin()->first;
            bool toral = true;
            for (const auto& g : w) toral = toral && is_toral(g.kind);
            if (toral) {
                Word inv;
                for (auto it = w.rbegin(); it != w.rend(); ++it) {
                    GenSymbol g = *it;
                    g.exp = -g.exp;
                    inv.push_back(g);
                }
                Element x(inv, base.terms().begin()->second.inv());
                Element acc = Element::unit();
                for (long t = 0; t < -e.num; ++t) acc = acc * x;
                return acc;
            }
        }
        throw ParseError("negative power of a non-invertible element", c_.pos);
    }

    Element primary() {
        char p = c_.peek();
        if (std::isdigit(static_cast<unsigned char>(p))) return Element(Scalar(Rat(c_.integer())));
        if (p == '(') {
            c_.accept('(');
            Element x = expr();
            c_.expect(')');
            return x;
        }
        if (p == '[') return bracket();
        if (std::isalpha(static_cast<unsigned char>(p))) return generator();
        throw ParseError("unexpected character", c_.pos);
    }

    Element bracket() {
        c_.expect('[');
        std::vector<Element> items;
        items.push_back(expr());
        while (c_.accept(',')) items.push_back(expr());
        c_.expect(']');
        if (items.size() < 2) throw ParseError("bracket needs at least two arguments", c_.pos);
        c_.expect('_');
        std::vector<Scalar> qs;
        if (c_.peek() == '(') {
            c_.accept('(');
            qs.push_back(expr().as_scalar());
            while (c_.accept(',')) qs.push_back(expr().as_scalar());
            c_.expect(')');
        } else {
            qs.push_back(factor().as_scalar());
        }
        if (qs.size() == 1 && items.size() > 2) throw ParseError("chain bracket needs s-1 parameters", c_.pos);
        if (qs.size() + 1 != items.size()) throw ParseError("bracket parameter count mismatch", c_.pos);
        return qbracket_chain(items, qs);
    }

    // name[i] or name[i](k) forms plus the bare torals r, s, g, g', D, D'.
    Element generator() {
        size_t at = c_.pos;
        char name = c_.s[c_.pos++];
        bool primed = false;
        char sign = 0;
        if (c_.pos < c_.s.size() && c_.s[c_.pos] == '\'') {
            primed = true;
            ++c_.pos;
        }
        if (name == 'x') {
            if (c_.pos < c_.s.size() && (c_.s[c_.pos] == '+' || c_.s[c_.pos] == '-')) {
                sign = c_.s[c_.pos];
                ++c_.pos;
            } else {
                throw ParseError("expected x+ or x-", at);
            }
        }
        switch (name) {
            case 'r':
                return Element(Scalar::r());
            case 's':
                return Element(Scalar::s());
            case 'g':
                return Element(primed ? gamp() : gam());
            case 'D':
                return Element(primed ? dp() : dg());
            default:
                break;
        }
        c_.expect('[');
        int idx = static_cast<int>(c_.integer());
        c_.expect(']');
        std::optional<int> level;
        if (c_.peek() == '(') {
            c_.accept('(');
            level = static_cast<int>(c_.integer());
            c_.expect(')');
        }
        switch (name) {
            case 'e':
                if (level) throw ParseError("e[i] takes no level", at);
                return Element(e_(idx));
            case 'f':
                if (level) throw ParseError("f[i] takes no level", at);
                return Element(f_(idx));
            case 'a':
                if (!level) throw ParseError("a[i](l) needs a level", at);
                if (*level == 0) throw ParseError("a[i](l) needs a nonzero level", at);
                return Element(aa(idx, *level));
            case 'w':
                if (!level) return Element(primed ? omp(idx) : om(idx));
                if (*level == 0) return Element(primed ? omp(idx) : om(idx));
                if (!primed && *level < 0) throw ParseError("w[i](m) needs m >= 0", at);
                if (primed && *level > 0) throw ParseError("w'[i](m) needs m <= 0", at);
                return Element(primed ? ompser(idx, *level) : omser(idx, *level));
            case 'x':
                if (!level) throw ParseError("x generators need a level", at);
                return Element(sign == '+' ? xp(idx, *level) : xm(idx, *level));
            default:
                throw ParseError("unknown generator", at);
        }
    }
};

}  // namespace

Element parse_element(const std::string& text) { return Parser(text).parse(); }

Scalar parse_scalar(const std::string& text) { return parse_element(text).as_scalar(); }

}  // namespace urs
