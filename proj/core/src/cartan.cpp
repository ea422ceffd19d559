#include "urs/cartan.hpp"

#include "urs/errors.hpp"

namespace urs {

RootData::RootData(int n) : n_(n) {
    if (n <= 2) throw DomainError("rank parameter must satisfy n > 2");
    for (int i = 1; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) roots_.push_back({i, j});
}

int RootData::cartan(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DomainError("Cartan index out of range");
    if (i == j) return 2;
    int d = (i - j + n_) % n_;
    if (d == 1 || d == n_ - 1) return -1;
    return 0;
}

int RootData::inner(int eps_j, int alpha_i) const {
    if (eps_j < 1 || eps_j > n_ || alpha_i < 0 || alpha_i >= n_) throw DomainError("inner product index out of range");
    if (alpha_i == 0) {
        // alpha_0 = delta - (eps_1 - eps_n), (delta, .) = 0
        return (eps_j == n_ ? 1 : 0) - (eps_j == 1 ? 1 : 0);
    }
    return (eps_j == alpha_i ? 1 : 0) - (eps_j == alpha_i + 1 ? 1 : 0);
}

Scalar RootData::pairing_gen(int i, int j) const {
    if (i < 0 || i >= n_ || j < 0 || j >= n_) throw DomainError("pairing index out of range");
    int re, se;
    if (j != 0) {
        re = inner(j, i);
        se = inner(j + 1, i);
    } else {
        re = -inner(i == 0 ? 1 : i + 1, 0);
        se = inner(1, i);
    }
    return Scalar::monomial(1, 2 * re, 2 * se);
}

Scalar RootData::pairing_lattice(const LatticeVec& zeta, const LatticeVec& eta) const {
    Scalar out = Scalar::one();
    for (int i = 0; i < n_; ++i) {
        if (i >= static_cast<int>(zeta.size()) || zeta[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (j >= static_cast<int>(eta.size()) || eta[j] == 0) continue;
            out *= pairing_gen(i, j).pow(static_cast<long>(zeta[i]) * eta[j]);
        }
    }
    return out;
}

Scalar RootData::pairing_finite_vec(const std::vector<int>& zeta, const std::vector<int>& eta) const {
    Scalar out = Scalar::one();
    for (int i = 1; i < n_; ++i) {
        if (i >= static_cast<int>(zeta.size()) || zeta[i] == 0) continue;
        for (int j = 1; j < n_; ++j) {
            if (j >= static_cast<int>(eta.size()) || eta[j] == 0) continue;
            out *= pairing_gen(i, j).pow(static_cast<long>(zeta[i]) * eta[j]);
        }
    }
    return out;
}

int RootData::root_rank(const Root& a) const {
    for (size_t k = 0; k < roots_.size(); ++k)
        if (roots_[k] == a) return static_cast<int>(k);
    throw DomainError("not a positive root");
}

std::vector<int> RootData::root_vec(const Root& a) const {
    if (a.i < 1 || a.i >= a.j || a.j > n_) throw DomainError("not a positive root");
    std::vector<int> v(n_, 0);
    for (int t = a.i; t < a.j; ++t) v[t] = 1;
    return v;
}

LatticeVec RootData::simple(int i) const {
    if (i < 0 || i >= n_) throw DomainError("simple root index out of range");
    LatticeVec v(n_, 0);
    v[i] = 1;
    return v;
}

LatticeVec RootData::theta() const {
    LatticeVec v(n_, 0);
    for (int i = 1; i < n_; ++i) v[i] = 1;
    return v;
}

}  // namespace urs
