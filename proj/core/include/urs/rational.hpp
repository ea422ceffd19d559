#pragma once

#include <gmpxx.h>
#include <string>

namespace urs {

// Exact arbitrary-precision rational. All coefficient arithmetic in the
// library goes through this type; fixed-width integers are never used for
// coefficients.
using Rat = mpq_class;

inline Rat rat_of(long n) { return Rat(n); }

inline Rat rat_parse(const std::string& text) {
    Rat q(text);
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

}  // namespace urs
