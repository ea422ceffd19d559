#include "urs/lyndon.hpp"

#include <algorithm>

#include "urs/errors.hpp"

namespace urs {

bool is_lyndon(const LetterWord& w) {
    if (w.empty()) throw DomainError("empty word");
    for (size_t k = 1; k < w.size(); ++k) {
        LetterWord suffix(w.begin() + static_cast<long>(k), w.end());
        if (!std::lexicographical_compare(w.begin(), w.end(), suffix.begin(), suffix.end())) return false;
    }
    return true;
}

std::vector<LetterWord> clf_factorize(const LetterWord& w) {
    if (w.empty()) throw DomainError("empty word");
    // Duval's algorithm.
    std::vector<LetterWord> out;
    size_t i = 0, n = w.size();
    while (i < n) {
        size_t j = i + 1, k = i;
        while (j < n && w[k] <= w[j]) {
            if (w[k] < w[j])
                k = i;
            else
                ++k;
            ++j;
        }
        while (i <= k) {
            out.emplace_back(w.begin() + static_cast<long>(i), w.begin() + static_cast<long>(i + j - k));
            i += j - k;
        }
    }
    return out;
}

std::map<int, LetterWord> good_lyndon_words(const RootData& R) {
    std::map<int, LetterWord> out;
    const auto& roots = R.positive_roots();
    for (size_t k = 0; k < roots.size(); ++k) {
        LetterWord w;
        for (int t = roots[k].i; t < roots[k].j; ++t) w.push_back(t);
        out[static_cast<int>(k)] = w;
    }
    return out;
}

bool precedes(const LetterWord& u, const LetterWord& w) {
    if (u.size() != w.size()) return u.size() < w.size();
    return !std::lexicographical_compare(u.begin(), u.end(), w.begin(), w.end());
}

}  // namespace urs
