#include <doctest.h>

#include "urs/lyndon.hpp"

using namespace urs;

namespace {

// Definition check by direct comparison with every proper right factor.
bool lyndon_brute(const LetterWord& w) {
    for (size_t k = 1; k < w.size(); ++k)
        if (LetterWord(w.begin() + static_cast<long>(k), w.end()) <= w) return false;
    return true;
}

void all_words(int maxlen, int alpha, std::vector<LetterWord>& out) {
    out.push_back({});
    size_t lo = 0;
    for (int len = 1; len <= maxlen; ++len) {
        size_t hi = out.size();
        for (size_t t = lo; t < hi; ++t)
            if (static_cast<int>(out[t].size()) == len - 1)
                for (int a = 1; a <= alpha; ++a) {
                    LetterWord w = out[t];
                    w.push_back(a);
                    out.push_back(w);
                }
        lo = hi;
    }
}

}  // namespace

TEST_CASE("lyndon test agrees with the definition for short words") {
    CHECK(is_lyndon({1, 2}));
    CHECK(!is_lyndon({2, 1}));
    CHECK(is_lyndon({1, 2, 1, 3}));
    CHECK_THROWS_AS(is_lyndon({}), DomainError);
    std::vector<LetterWord> words;
    all_words(8, 4, words);
    for (const auto& w : words)
        if (!w.empty()) CHECK(is_lyndon(w) == lyndon_brute(w));
}

TEST_CASE("Chen-Fox-Lyndon factorization") {
    CHECK(clf_factorize({2, 1, 1}) == std::vector<LetterWord>{{2}, {1}, {1}});
    CHECK(clf_factorize({1, 2}) == std::vector<LetterWord>{{1, 2}});
    std::vector<LetterWord> words;
    all_words(7, 3, words);
    for (const auto& w : words) {
        if (w.empty()) continue;
        auto fac = clf_factorize(w);
        LetterWord cat;
        for (const auto& f : fac) {
            CHECK(is_lyndon(f));
            cat.insert(cat.end(), f.begin(), f.end());
        }
        CHECK(cat == w);
        for (size_t t = 0; t + 1 < fac.size(); ++t) CHECK(!(fac[t] < fac[t + 1]));
    }
}

TEST_CASE("good Lyndon words are the consecutive runs") {
    for (int n : {3, 4, 5}) {
        RootData R(n);
        auto good = good_lyndon_words(R);
        CHECK(static_cast<int>(good.size()) == n * (n - 1) / 2);
        const auto& roots = R.positive_roots();
        for (const auto& [rank, w] : good) {
            CHECK(is_lyndon(w));
            const Root& a = roots[static_cast<size_t>(rank)];
            CHECK(static_cast<int>(w.size()) == a.j - a.i);
            // letter multiset matches the root decomposition
            std::vector<int> mult(n, 0);
            for (int letter : w) mult[letter]++;
            CHECK(mult == R.root_vec(a));
        }
        // pairwise distinct
        for (auto it = good.begin(); it != good.end(); ++it)
            for (auto jt = std::next(it); jt != good.end(); ++jt) CHECK(it->second != jt->second);
    }
    RootData R3(3);
    CHECK(good_lyndon_words(R3)[1] == LetterWord{1, 2});  // alpha_13
    RootData R4(4);
    CHECK(good_lyndon_words(R4)[4] == LetterWord{2, 3});  // alpha_24
}

TEST_CASE("the length-then-reverse-lex order") {
    CHECK(precedes({1}, {1, 2}));
    CHECK(precedes({2}, {1}));
    CHECK(precedes({1}, {1}));
    std::vector<LetterWord> words;
    all_words(5, 3, words);
    for (const auto& u : words)
        for (const auto& w : words) {
            // total preorder refining length; antisymmetric on distinct words
            CHECK((precedes(u, w) || precedes(w, u)));
            if (u != w && u.size() == w.size()) CHECK(precedes(u, w) != precedes(w, u));
            if (u.size() < w.size()) CHECK(precedes(u, w));
        }
}
