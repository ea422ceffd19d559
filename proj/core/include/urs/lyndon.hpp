#pragma once

#include <map>
#include <vector>

#include "urs/cartan.hpp"

namespace urs {

// Word over the alphabet {1, .., n-1} with its natural order.
using LetterWord = std::vector<int>;

// True iff w is lexicographically smaller than all its proper right factors.
bool is_lyndon(const LetterWord& w);

// Chen-Fox-Lyndon factorization: nonincreasing sequence of Lyndon words
// whose concatenation is w.
std::vector<LetterWord> clf_factorize(const LetterWord& w);

// The good Lyndon word of each positive root alpha_{ij}: the consecutive run
// [i, i+1, .., j-1], keyed in the convex root order.
std::map<int, LetterWord> good_lyndon_words(const RootData& R);

// u precedes w iff |u| < |w|, or |u| = |w| and u >= w lexicographically.
bool precedes(const LetterWord& u, const LetterWord& w);

}  // namespace urs
