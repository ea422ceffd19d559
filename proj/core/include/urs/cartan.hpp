#pragma once

#include <vector>

#include "urs/scalar.hpp"

namespace urs {

// A positive root alpha_{ij} = eps_i - eps_j = alpha_i + ... + alpha_{j-1},
// 1 <= i < j <= n.
struct Root {
    int i, j;
    bool operator==(const Root&) const = default;
};

// Integer vector over the affine simple roots alpha_0..alpha_{n-1}.
using LatticeVec = std::vector<int>;

// Root-system data for affine type A_{n-1}^(1): Cartan matrix over
// I_0 = {0..n-1}, eps-basis inner products, the generator pairing table
// <w'_i, w_j>, and its bimultiplicative lattice extension.
class RootData {
  public:
    explicit RootData(int n);

    int n() const { return n_; }

    // a_ij over I_0 (cyclic band of -1 around diagonal 2).
    int cartan(int i, int j) const;

    // (eps_j, alpha_i) for j in 1..n, i in I_0.
    int inner(int eps_j, int alpha_i) const;

    // <w'_i, w_j> for i, j in I_0; always a Laurent monomial in r, s.
    Scalar pairing_gen(int i, int j) const;

    // <i,j> restricted to i, j in I (finite part), same values as pairing_gen.
    Scalar pair_finite(int i, int j) const { return pairing_gen(i, j); }

    // Bimultiplicative extension: <w'_zeta, w_eta> over the affine lattice.
    Scalar pairing_lattice(const LatticeVec& zeta, const LatticeVec& eta) const;

    // <w'_zeta, w_eta> with zeta, eta supported on the finite part, given as
    // multiplicity vectors indexed 1..n-1 (index 0 ignored).
    Scalar pairing_finite_vec(const std::vector<int>& zeta, const std::vector<int>& eta) const;

    // Positive roots of the finite A_{n-1} in the convex row order
    // alpha_12, alpha_13, ..., alpha_1n, alpha_23, ..., alpha_{n-1,n}.
    const std::vector<Root>& positive_roots() const { return roots_; }

    // Position of alpha_{ij} in the convex order.
    int root_rank(const Root& a) const;

    // alpha_{ij} as a multiplicity vector over the finite simple roots
    // (size n, entries 1..n-1 used).
    std::vector<int> root_vec(const Root& a) const;

    LatticeVec simple(int i) const;  // alpha_i as a lattice vector
    LatticeVec theta() const;        // alpha_1 + ... + alpha_{n-1}

  private:
    int n_;
    std::vector<Root> roots_;
};

}  // namespace urs
