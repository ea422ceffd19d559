#include "urs/element.hpp"

#include <sstream>

namespace urs {

namespace {

// True if the string has a binary + or - outside parentheses (an exponent
// minus after '^' does not count).
bool top_level_pm(const std::string& s) {
    int depth = 0;
    for (size_t i = 0; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '(')
            ++depth;
        else if (ch == ')')
            --depth;
        else if (depth == 0 && (ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^')
            return true;
    }
    return false;
}

// One term: coefficient then word, with 1 and -1 absorbed into the sign.
template <class K>
std::string format_terms(const std::map<Word, K>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms) {
        std::string cs = c.str();
        bool neg = !cs.empty() && cs[0] == '-';
        std::string body = neg ? cs.substr(1) : cs;
        if (top_level_pm(body)) {
            // Compound coefficient: keep its own sign inside parens.
            body = "(" + cs + ")";
            neg = false;
        }
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        if (w.empty())
            os << body;
        else if (body == "1")
            os << word_str(w);
        else
            os << body << "*" << word_str(w);
    }
    return os.str();
}

}  // namespace

std::string element_str(const Element& x) { return format_terms(x.terms()); }
std::string element_str(const QElement& x) { return format_terms(x.terms()); }

}  // namespace urs
