#pragma once

#include "cluster/lattice.hpp"
#include "cluster/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cluster {

// A seed: skew-symmetrizable n x n exchange matrix with a frozen/unfrozen
// vertex partition and positive integer symmetrizer weights d satisfying
// d_i b_ij = -d_j b_ji.  Entries are exact rationals; only the frozen x
// frozen block may be non-integer.  The I x I_uf submatrix Btilde must
// have full column rank (checked at construction).
class Seed {
  public:
    Seed(int n, std::vector<int> unfrozen, std::vector<i64> weights, Mat b,
         std::vector<std::string> labels = {});

    int n() const { return n_; }
    const std::vector<int>& unfrozen() const { return unfrozen_; }
    const std::vector<int>& frozen() const { return frozen_; }
    int uf_count() const { return int(unfrozen_.size()); }
    bool is_unfrozen(int i) const;
    // Position of vertex i inside the unfrozen list, -1 if frozen.
    int uf_pos(int i) const;

    const std::vector<i64>& weights() const { return weights_; }
    const Mat& b() const { return b_; }
    const std::vector<std::string>& labels() const { return labels_; }
    std::string label(int i) const;

    // I x I_uf exchange matrix (integer).
    const Mat& btilde() const { return btilde_; }
    const DomSolver& dom() const { return dom_; }

    bool is_skew_symmetric() const;

    // Exchange matrices agree entrywise (partition and weights too).
    bool same_matrix(const Seed& o) const;

  private:
    int n_;
    std::vector<int> unfrozen_, frozen_;
    std::vector<i64> weights_;
    Mat b_;
    Mat btilde_;
    std::vector<std::string> labels_;
    DomSolver dom_;

    static Mat extract_btilde(const Mat& b, const std::vector<int>& unfrozen);
};

// Matrix mutation mu_k (k unfrozen).  Involutive; independent of the sign
// convention used internally.
Seed mutate_matrix(const Seed& s, int k);

struct EFPair {
    Mat E; // I x I     (Etilde_{k,eps})
    Mat F; // I_uf x I_uf (F_{k,eps}, principal part)
};

// The elementary mutation matrices at vertex k with sign eps = +-1:
//   Etilde identity except column k: E_ik = [-eps b_ik]_+ (i != k), E_kk = -1
//   Ftilde identity except row k:    F_kj = [ eps b_kj]_+ (j != k), F_kk = -1
// Satisfy E^2 = Id, F^2 = Id and Btilde(mu_k s) = E * Btilde(s) * F.
EFPair ef_matrices(const Seed& s, int k, int eps);

// Lemma-style extension of an I x I_uf integer matrix (unfrozen rows
// first) to a full seed: d_f = lcm of unfrozen weights, b_kf =
// -(d/d_k) b_fk, b_ff' = 0.
Seed extend_full_matrix(const Mat& bt, const std::vector<i64>& d_uf);

Seed opposite_seed(const Seed& s);   // b -> -b
Seed langlands_dual(const Seed& s);  // b_ij -> -b_ji, d_i -> lcm(d)/d_i

// Appends one frozen framing vertex i' per unfrozen i (optionally skipping
// `excluded`) with b_{i',i} = 1, b_{i,i'} = -1.
Seed principal_framing(const Seed& s, std::optional<int> excluded = std::nullopt);

// Convenience constructors used across tests and the CLI.
Seed make_skew_symmetric_seed(const std::vector<std::vector<i64>>& b_rows);
Seed kronecker_seed(); // B = [[0,-2],[2,0]]
Seed a2_seed();        // B = [[0,-1],[1,0]]

} // namespace cluster
