#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "urs/rewrite.hpp"

namespace urs {

struct OracleOptions {
    int wlo = -2, whi = 2;         // level window for relation instances
    size_t max_dim = 20000;        // distinct words allowed in a component
    size_t max_rows = 120000;      // generated generator rows
    int max_mult_len = 4;          // x letters per multiplier pair
    int max_mult_a = 1;            // extra a letters allowed in multipliers
    int max_shifts = 12;           // toral tail alignments per row
    bool want_certificate = false;
    long step_cap = 400000;
};

enum class Verdict { Yes, Inconclusive };

struct Certificate {
    std::vector<TraceItem> items;  // normalize(target) == sum of items
};

struct OracleOutcome {
    Verdict verdict = Verdict::Inconclusive;
    size_t dim = 0;
    size_t rows = 0;
    std::string note;
    std::optional<Certificate> certificate;
};

// Exact membership of a homogeneous element in the two-sided ideal generated
// by the relation instances whose letters live inside the level window.
// "Yes" is sound; "Inconclusive" suggests widening the window or caps.
// Components beyond the caps raise ResourceLimit.
OracleOutcome ideal_member(const RootData& R, const Element& target, const OracleOptions& opts = {});

// Membership in ideal + span(extra).
OracleOutcome certify_in_span(const RootData& R, const Element& target, const std::vector<Element>& extra,
                              const OracleOptions& opts = {});

bool certificate_replays(const RootData& R, const Element& target, const Certificate& cert);

// Generic exact row reduction used by the oracle and the dimension counts.
template <class K>
class Eliminator {
  public:
    using RowMap = std::map<Word, K>;

    // Returns true if the row was independent (a new pivot was stored).
    bool insert(RowMap row) {
        reduce_in_place(row);
        if (row.empty()) return false;
        K lead = row.begin()->second;
        for (auto& [w, c] : row) c = c / lead;
        pivots_[row.begin()->first] = std::move(row);
        return true;
    }

    void reduce_in_place(RowMap& row) const {
        while (!row.empty()) {
            auto it = pivots_.find(row.begin()->first);
            if (it == pivots_.end()) return;
            K factor = row.begin()->second;
            for (const auto& [w, c] : it->second) {
                auto jt = row.find(w);
                K nv = (jt == row.end() ? K(0) : jt->second) - factor * c;
                if (nv.is_zero()) {
                    if (jt != row.end()) row.erase(jt);
                } else {
                    row[w] = nv;
                }
            }
        }
    }

    bool reduces_to_zero(RowMap row) const {
        reduce_in_place(row);
        return row.empty();
    }

    size_t rank() const { return pivots_.size(); }

  private:
    std::map<Word, RowMap> pivots_;
};

// Number of multiset decompositions of a finite-part degree into positive
// roots (a brute-force counter, independent of the algebra).
long kostant_count(const RootData& R, const std::vector<int>& degree);

// All root partitions of a degree, each a nondecreasing list of root ranks.
std::vector<std::vector<Root>> root_partitions(const RootData& R, const std::vector<int>& degree);

// Dimension of the level-zero component of the given degree on the plus or
// minus side, modulo the Serre ideal.
size_t level0_dim(const RootData& R, const std::vector<int>& degree, int sign);

struct Decomposition {
    bool ok = false;
    // coefficient per partition, aligned with root_partitions(degree)
    std::vector<Scalar> coords;
    std::string note;
};

// Express a level-zero homogeneous element in the ordered root-vector basis,
// modulo the Serre ideal. Fails (ok = false) if the basis expansions are
// dependent or do not span.
Decomposition lyndon_decompose(const RootData& R, const Element& x, int sign);

}  // namespace urs
