#pragma once

#include <string>
#include <vector>

#include "urs/cartan.hpp"
#include "urs/element.hpp"

namespace urs {

// Relation families of the two presentations. The loop-side ids D1..D9 carry
// subcases; A1..A7 are the Chevalley-Kac-Lusztig ones.
enum class RelId {
    D1inv,    // T T^(-1) - 1                          (var = toral kind code)
    D1comm,   // [T1, T2]                              (k, kp = kind codes)
    D1gamma,  // gamma gamma' - rs and centrality      (var selects)
    D2,       // [a_i(l), a_j(l')] - delta Heisenberg
    D3,       // [a_i(l), w_j] / [a_i(l), w'_j]
    D4,       // D / D' conjugation of x and a
    D5,       // w_i / w'_i conjugation of x_j(k)
    D6_1,     // [a_i(l), x_j(k)], l < 0
    D6_2,     // [a_i(l), x_j(k)], l > 0
    D7,       // the level-mixing relation
    D8,       // [x_i^+(k), x_j^-(k')]
    D9_1,     // distant x's commute
    D9_2,     // Serre, majority index lower
    D9_3,     // Serre, majority index higher
    A1,
    A2,
    A3,
    A4,
    A5,
    A6,
    A7,
};

std::string rel_name(RelId id);

// Parameter tuple; which fields matter depends on the family.
struct RelParams {
    int i = 1, j = 1;
    int k = 0, kp = 0;   // x levels
    int ell = 0;         // a level (ell' is -ell in D2 unless kp is used)
    int ellp = 0;        // second a level for D2
    int m1 = 0, m2 = 0;  // Serre levels
    int sign = +1;       // the +- superscript of x
    int var = 0;         // subcase selector
};

// Left-minus-right of one relation instance, as a free-algebra element whose
// vanishing is the relation. Out-of-domain parameters raise DomainError.
Element rel_instance(const RootData& R, RelId id, const RelParams& p);

// Coefficient of z^(-m) (unprimed) or z^(+|m|) (primed, m <= 0) in the toral
// generating series: a polynomial in the a_i times w_i or w'_i.
Element omega_series_elem(int i, int m, bool primed);

// Replace any series symbols by their expansions.
Element expand_series(const Element& x);

// The parameter-swapping antiautomorphism on scalars, symbols and words.
GenSymbol tau_symbol(const GenSymbol& g);
Element tau_elem(const Element& x);

// Quantum affine root vectors: the bracketing of the good Lyndon word of
// alpha_{ij} with the level on the lowest index.
Element root_vector(const RootData& R, Root alpha, int level, int sign);

// The affine bracket [x_alpha(k), x_beta(k')] twisted by the lattice pairing
// <w'_alpha, w_beta>^(-sign).
Element affine_qbracket(const RootData& R, const Element& a, const Element& b, int sign);

// Spanning set of Omega_alpha^(k): ordered products of root vectors over
// proper partitions of alpha with letter levels inside [wlo, whi] summing
// to k. Simple roots yield the empty set.
std::vector<Element> omega_subspace(const RootData& R, Root alpha, int k, int sign, int wlo, int whi);

// Chevalley generators of the Serre ideal and cross relations, for the
// pairing-kernel, image and specialization checks.
Element chevalley_instance(const RootData& R, RelId id, const RelParams& p);

}  // namespace urs
