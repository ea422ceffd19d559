#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace urs {

// Generator alphabet. E/F are the Chevalley-Kac-Lusztig generators (indices
// in I_0), Xp/Xm/A and the omega series are loop generators (indices in I).
// The torals (Omega, OmegaPrime, Gamma*, D*) are shared by both presentations.
enum class SymKind : uint8_t {
    E,
    F,
    Xp,
    Xm,
    A,
    Omega,
    OmegaPrime,
    GammaHalf,
    GammaPrimeHalf,
    Dg,
    DPrime,
    OmegaSeries,
    OmegaPrimeSeries,
};

struct GenSymbol {
    SymKind kind;
    int index = 0;  // generator subscript
    int level = 0;  // loop level k / l / m where applicable
    int exp = 1;    // exponent of invertible group-likes; halves for gamma kinds

    auto operator<=>(const GenSymbol&) const = default;
};

// Constructors named after the textual forms.
inline GenSymbol e_(int i) { return {SymKind::E, i, 0, 1}; }
inline GenSymbol f_(int i) { return {SymKind::F, i, 0, 1}; }
inline GenSymbol xp(int i, int k) { return {SymKind::Xp, i, k, 1}; }
inline GenSymbol xm(int i, int k) { return {SymKind::Xm, i, k, 1}; }
inline GenSymbol aa(int i, int l) { return {SymKind::A, i, l, 1}; }
inline GenSymbol om(int i, int e = 1) { return {SymKind::Omega, i, 0, e}; }
inline GenSymbol omp(int i, int e = 1) { return {SymKind::OmegaPrime, i, 0, e}; }
inline GenSymbol gam(int halves = 2) { return {SymKind::GammaHalf, 0, 0, halves}; }
inline GenSymbol gamp(int halves = 2) { return {SymKind::GammaPrimeHalf, 0, 0, halves}; }
inline GenSymbol dg(int e = 1) { return {SymKind::Dg, 0, 0, e}; }
inline GenSymbol dp(int e = 1) { return {SymKind::DPrime, 0, 0, e}; }
inline GenSymbol omser(int i, int m) { return {SymKind::OmegaSeries, i, m, 1}; }
inline GenSymbol ompser(int i, int m) { return {SymKind::OmegaPrimeSeries, i, m, 1}; }

inline bool is_toral(SymKind k) {
    switch (k) {
        case SymKind::Omega:
        case SymKind::OmegaPrime:
        case SymKind::GammaHalf:
        case SymKind::GammaPrimeHalf:
        case SymKind::Dg:
        case SymKind::DPrime:
            return true;
        default:
            return false;
    }
}

inline bool is_chevalley(SymKind k) { return k == SymKind::E || k == SymKind::F; }
inline bool is_loop(SymKind k) {
    return k == SymKind::Xp || k == SymKind::Xm || k == SymKind::A || k == SymKind::OmegaSeries ||
           k == SymKind::OmegaPrimeSeries;
}

// Free-monoid word; the empty word is the unit.
using Word = std::vector<GenSymbol>;

enum class Family { Neutral, Chevalley, Drinfeld, Mixed };

Family word_family(const Word& w);
int word_level(const Word& w);

// Q-degree as a multiplicity vector of simple roots, size n (index 0 used
// only by Chevalley words).
std::vector<int> word_degree(const Word& w, int n);

std::string symbol_str(const GenSymbol& g);
std::string word_str(const Word& w);

}  // namespace urs
