#include "urs/symbol.hpp"

#include <sstream>

#include "urs/errors.hpp"

namespace urs {

Family word_family(const Word& w) {
    bool chev = false, drin = false;
    for (const auto& g : w) {
        if (is_chevalley(g.kind)) chev = true;
        if (is_loop(g.kind)) drin = true;
    }
    if (chev && drin) return Family::Mixed;
    if (chev) return Family::Chevalley;
    if (drin) return Family::Drinfeld;
    return Family::Neutral;
}

int word_level(const Word& w) {
    int lv = 0;
    for (const auto& g : w)
        if (g.kind == SymKind::Xp || g.kind == SymKind::Xm || g.kind == SymKind::A || g.kind == SymKind::OmegaSeries ||
            g.kind == SymKind::OmegaPrimeSeries)
            lv += g.level;
    return lv;
}

std::vector<int> word_degree(const Word& w, int n) {
    std::vector<int> d(n, 0);
    for (const auto& g : w) {
        switch (g.kind) {
            case SymKind::E:
            case SymKind::Xp:
                d.at(g.index) += 1;
                break;
            case SymKind::F:
            case SymKind::Xm:
                d.at(g.index) -= 1;
                break;
            default:
                break;
        }
    }
    return d;
}

namespace {

void append_exp(std::ostringstream& os, int e) {
    if (e == 1) return;
    os << "^" << e;
}

void append_half_exp(std::ostringstream& os, int halves) {
    if (halves == 2) return;
    os << "^";
    if (halves % 2 == 0)
        os << halves / 2;
    else
        os << halves << "/2";
}

}  // namespace

std::string symbol_str(const GenSymbol& g) {
    std::ostringstream os;
    switch (g.kind) {
        case SymKind::E:
            os << "e[" << g.index << "]";
            break;
        case SymKind::F:
            os << "f[" << g.index << "]";
            break;
        case SymKind::Xp:
            os << "x+[" << g.index << "](" << g.level << ")";
            break;
        case SymKind::Xm:
            os << "x-[" << g.index << "](" << g.level << ")";
            break;
        case SymKind::A:
            os << "a[" << g.index << "](" << g.level << ")";
            break;
        case SymKind::Omega:
            os << "w[" << g.index << "]";
            append_exp(os, g.exp);
            break;
        case SymKind::OmegaPrime:
            os << "w'[" << g.index << "]";
            append_exp(os, g.exp);
            break;
        case SymKind::GammaHalf:
            os << "g";
            append_half_exp(os, g.exp);
            break;
        case SymKind::GammaPrimeHalf:
            os << "g'";
            append_half_exp(os, g.exp);
            break;
        case SymKind::Dg:
            os << "D";
            append_exp(os, g.exp);
            break;
        case SymKind::DPrime:
            os << "D'";
            append_exp(os, g.exp);
            break;
        case SymKind::OmegaSeries:
            os << "w[" << g.index << "](" << g.level << ")";
            break;
        case SymKind::OmegaPrimeSeries:
            os << "w'[" << g.index << "](" << g.level << ")";
            break;
    }
    return os.str();
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << "*";
        os << symbol_str(w[i]);
    }
    return os.str();
}

}  // namespace urs
