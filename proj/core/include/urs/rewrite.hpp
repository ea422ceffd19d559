#pragma once

#include <vector>

#include "urs/relations.hpp"

namespace urs {

struct ReduceOptions {
    long step_cap = 400000;
    bool trace = false;       // collect the rewrite certificate
    bool scan_right = false;  // alternate scheduling, for divergence probes
};

// One certified rewrite step: the ideal element coeff * left * g * right was
// subtracted, where g = rel_instance(id, params).
struct TraceItem {
    Scalar coeff;
    Word left;
    RelId id;
    RelParams params;
    Word right;
};

struct ReduceResult {
    Element value;
    bool normal = true;  // false when the step cap was exhausted
    long steps = 0;
    std::vector<TraceItem> trace;
};

// Canonical toral handling: group-like letters are collected into a tail at
// the right end of each word (conjugation scalars applied), merged, sorted,
// and gamma' is eliminated through gamma gamma' = rs. This is the
// representation every reduction and oracle computation lives in.
Element normalize_torals(const RootData& R, const Element& x);

// Oriented best-effort reduction toward ordered monomials: plus letters move
// right past minus letters, a's settle between them, distant letters sort,
// levels concentrate on the lowest index of adjacent pairs. Every step
// subtracts an explicit relation instance; the result equals the input
// modulo the relation ideal.
ReduceResult reduce(const RootData& R, const Element& x, const ReduceOptions& opts = {});

// start - sum of trace items, in the canonical representation. Replaying a
// certificate against reduce's input must reproduce its output exactly.
Element replay_trace(const RootData& R, const Element& start, const std::vector<TraceItem>& items);

// Display layout with the toral block after the minus-part letters.
Element spec_layout(const RootData& R, const Element& x);

}  // namespace urs
