#include <doctest.h>

#include <random>

#include "urs/element.hpp"
#include "urs/parser.hpp"

using namespace urs;

namespace {

Scalar rand_nonzero(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> expo(-2, 2);
    std::uniform_int_distribution<int> coef(1, 5);
    return Scalar::monomial(coef(rng), expo(rng), expo(rng)) +
           Scalar::monomial(1, expo(rng), expo(rng));
}

Element rand_element(std::mt19937_64& rng, int max_words = 2, int max_len = 2) {
    std::uniform_int_distribution<int> nwords(1, max_words);
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> idx(1, 2);
    std::uniform_int_distribution<int> lv(-1, 1);
    std::uniform_int_distribution<int> pick(0, 3);
    Element out;
    int k = nwords(rng);
    for (int t = 0; t < k; ++t) {
        Word w;
        int l = len(rng);
        for (int p = 0; p < l; ++p) {
            switch (pick(rng)) {
                case 0: w.push_back(xp(idx(rng), lv(rng))); break;
                case 1: w.push_back(xm(idx(rng), lv(rng))); break;
                case 2: w.push_back(aa(idx(rng), 1)); break;
                default: w.push_back(om(idx(rng))); break;
            }
        }
        out.add(w, rand_nonzero(rng));
    }
    return out;
}

}  // namespace

TEST_CASE("free product basics") {
    Element one = Element::unit();
    Element x(xp(1, 0));
    CHECK(one * x == x);
    CHECK(x * one == x);
    Element e1(e_(1)), e2(e_(2));
    Element prod = e1 * e2;
    CHECK(prod.size() == 1);
    CHECK(prod.terms().begin()->first == Word{e_(1), e_(2)});
    // bilinearity
    Element lhs = (e1 - e2.scaled(Scalar::r())) * e1;
    Element rhs = e1 * e1 - (e2 * e1).scaled(Scalar::r());
    CHECK(lhs == rhs);
    CHECK_THROWS_AS(Element(e_(1)) * Element(xp(1, 0)), DomainError);
}

TEST_CASE("grading is additive") {
    Element a(Word{xp(1, 2), xp(2, -1)});
    Graded g = grade(a, 3);
    CHECK(g.degree == std::vector<int>{0, 1, 1});
    CHECK(g.level == 1);
    CHECK(grade(Element(aa(1, 3)), 3).level == 3);
    CHECK(grade(Element(aa(1, 3)), 3).degree == std::vector<int>{0, 0, 0});
    CHECK(grade(Element::unit(), 3).level == 0);
    std::mt19937_64 rng(23);
    for (int t = 0; t < 100; ++t) {
        Element x = rand_element(rng, 1, 3), y = rand_element(rng, 1, 3);
        Graded gx = grade(x, 3), gy = grade(y, 3), gxy = grade(x * y, 3);
        for (int i = 0; i < 3; ++i) CHECK(gxy.degree[i] == gx.degree[i] + gy.degree[i]);
        CHECK(gxy.level == gx.level + gy.level);
    }
}

TEST_CASE("bracket definition and chain nesting") {
    Element e1(e_(1)), e2(e_(2));
    Element b = qbracket(e1, e2, Scalar::r());
    Element expect = e1 * e2 - (e2 * e1).scaled(Scalar::r());
    CHECK(b == expect);
    CHECK_THROWS_AS(qbracket(e1, e2, Scalar::zero()), DomainError);

    // [a,a,b]_(u,v) = a^2 b - (u+v) aba + uv b a^2
    std::mt19937_64 rng(29);
    for (int t = 0; t < 50; ++t) {
        Element a = rand_element(rng), b2 = rand_element(rng);
        Scalar u = rand_nonzero(rng), v = rand_nonzero(rng);
        Element chain = qbracket_chain<Scalar>({a, a, b2}, {u, v});
        Element direct = a * a * b2 - (a * b2 * a).scaled(u + v) + (b2 * a * a).scaled(u * v);
        CHECK(chain == direct);
        CHECK(chain == qbracket_chain<Scalar>({a, a, b2}, {v, u}));
    }
}

TEST_CASE("bracket identities hold in the free algebra") {
    std::mt19937_64 rng(31);
    for (int t = 0; t < 60; ++t) {
        Element a = rand_element(rng), b = rand_element(rng), c = rand_element(rng);
        Scalar u = rand_nonzero(rng), v = rand_nonzero(rng), x = rand_nonzero(rng);
        // [a, bc]_v = [a,b]_x c + x b [a,c]_{v/x}
        CHECK(qbracket(a, b * c, v) == qbracket(a, b, x) * c + (b * qbracket(a, c, v / x)).scaled(x));
        // [ab, c]_v = a [b,c]_x + x [a,c]_{v/x} b
        CHECK(qbracket(a * b, c, v) == a * qbracket(b, c, x) + (qbracket(a, c, v / x) * b).scaled(x));
        // [a,[b,c]_u]_v = [[a,b]_x, c]_{uv/x} + x [b, [a,c]_{v/x}]_{u/x}
        CHECK(qbracket(a, qbracket(b, c, u), v) ==
              qbracket(qbracket(a, b, x), c, u * v / x) + qbracket(b, qbracket(a, c, v / x), u / x).scaled(x));
        // [[a,b]_u, c]_v = [a, [b,c]_x]_{uv/x} + x [[a,c]_{v/x}, b]_{u/x}
        CHECK(qbracket(qbracket(a, b, u), c, v) ==
              qbracket(a, qbracket(b, c, x), u * v / x) + qbracket(qbracket(a, c, v / x), b, u / x).scaled(x));
    }
}

TEST_CASE("ad-Leibniz expansion for chains up to length 4") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 30; ++t) {
        Element a = rand_element(rng, 1, 2);
        for (size_t s = 2; s <= 4; ++s) {
            std::vector<Element> bs;
            std::vector<Scalar> vs;
            for (size_t p = 0; p < s; ++p) bs.push_back(rand_element(rng, 1, 2));
            for (size_t p = 0; p + 1 < s; ++p) vs.push_back(rand_nonzero(rng));
            Element lhs = comm(a, qbracket_chain(bs, vs));
            Element rhs;
            for (size_t p = 0; p < s; ++p) {
                std::vector<Element> mod = bs;
                mod[p] = comm(a, bs[p]);
                rhs += qbracket_chain(mod, vs);
            }
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("parser round trips") {
    Element b = parse_element("[x+[1](0), x+[2](0)]_r");
    CHECK(b == qbracket(Element(xp(1, 0)), Element(xp(2, 0)), Scalar::r()));
    Element c = parse_element("e[0]*f[0] - f[0]*e[0]");
    CHECK(c == comm(Element(e_(0)), Element(f_(0))));
    Element d = parse_element("g'^-1 * w[1]^-1");
    CHECK(d == Element(Word{gamp(-2), om(1, -1)}));
    // canonical text round trip
    std::mt19937_64 rng(41);
    for (int t = 0; t < 200; ++t) {
        Element x = rand_element(rng, 3, 3);
        std::string s1 = element_str(x);
        Element back = parse_element(s1);
        CHECK(back == x);
        CHECK(element_str(back) == s1);
    }
    // chain twist lists
    Element ch = parse_element("[e[1],e[1],e[2]]_(r,s)");
    CHECK(ch == qbracket_chain<Scalar>({Element(e_(1)), Element(e_(1)), Element(e_(2))}, {Scalar::r(), Scalar::s()}));
    CHECK_THROWS_AS(parse_element("[e[1]]_r"), ParseError);
    CHECK_THROWS_AS(parse_element("e[1] +"), ParseError);
    CHECK_THROWS_AS(parse_element("q[1]"), ParseError);
}

TEST_CASE("scalar embedding and division in expressions") {
    CHECK(parse_element("(r-s)^-1").as_scalar() == Scalar::r_minus_s().inv());
    CHECK(parse_element("3/4").as_scalar() == Scalar(Rat(3)) / Scalar(Rat(4)));
    CHECK(parse_element("r^1/2 * s^-1/2").as_scalar() == Scalar::monomial(1, 1, -1));
    CHECK(parse_element("2e[1]") == Element(e_(1)).scaled(Scalar(2)));
}
