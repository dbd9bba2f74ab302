#pragma once

#include "cluster/matrix.hpp"

#include <optional>
#include <set>
#include <vector>

namespace cluster {

// Dominance-order solver for a fixed full-column-rank exchange matrix Bt
// (|I| x |I_uf|, integer).  g' <= g in the dominance order iff
// g' = g + Bt*n with n a nonnegative integer vector; full rank makes the
// witness unique, so the order's antisymmetry is exact.
//
// The solver precomputes S = (Bt^T Bt)^{-1} Bt^T once; each query is a
// rational mat-vec plus a consistency check.
class DomSolver {
  public:
    explicit DomSolver(const Mat& bt);

    const Mat& bt() const { return bt_; }
    int ambient() const { return bt_.rows(); }
    int uf() const { return bt_.cols(); }

    // The unique rational solution of Bt*n = diff, or nullopt if diff is
    // not in the column span.
    std::optional<std::vector<Rat>> rational_witness(const IntVec& diff) const;

    // Integer witness (may have negative entries), or nullopt if diff is
    // not in the image lattice.
    std::optional<IntVec> lattice_witness(const IntVec& diff) const;

    // A rational row vector lam with lam . (Bt e_k) = 1 for every k: a
    // strictly positive grading on the dominance cone.  Exists because the
    // columns are linearly independent.
    const std::vector<Rat>& positive_grading() const { return lambda_; }

    Rat grade(const IntVec& v) const; // lam . v

  private:
    Mat bt_;
    Mat s_; // (Bt^T Bt)^{-1} Bt^T
    std::vector<Rat> lambda_;
};

// solve_dominance: the nonnegative integer n with g_from = g_to + Bt*n,
// absent when no such n exists.  Rank-deficient Bt is a configuration
// error (the order would not be antisymmetric).
std::optional<IntVec> solve_dominance(const IntVec& g_from, const IntVec& g_to, const Mat& bt);
std::optional<IntVec> solve_dominance(const IntVec& g_from, const IntVec& g_to, const DomSolver& solver);

// Finite dominance interval { g + Bt*m : 0 <= m <= n } where
// n = solve_dominance(eta, g, bt); empty when eta is not dominated by g.
// Cardinality is prod(n_k + 1).
std::set<IntVec> interval(const IntVec& eta, const IntVec& g, const Mat& bt);
std::set<IntVec> interval(const IntVec& eta, const IntVec& g, const DomSolver& solver);

} // namespace cluster
