#pragma once

#include "cluster/seed.hpp"

#include <optional>
#include <vector>

namespace cluster {

// Permutation of the unfrozen vertices, stored as images on unfrozen
// positions: sigma maps position p to images[p].
struct Permutation {
    std::vector<int> images;

    bool is_identity() const;
    std::string str() const; // "id" or space-separated 1-based images
};

// A mutation sequence from a base seed carrying the evolving C-matrix and
// extended G-matrix.  The trail keeps every intermediate seed so tropical
// maps and transports can replay without re-deriving mutations.
//
// Invariants maintained by extend_path: every C column stays sign-coherent,
// C = prod F_{k_s, eps_s}(t_s) and Gext = prod Etilde_{k_s, eps_s}(t_s)
// with eps_s the sign of the k_s-th c-vector at t_s.
struct TrackedPath {
    std::vector<Seed> trail;  // trail[0] = base, trail[s] = after s steps
    std::vector<int> steps;   // mutated vertex per step (0-based vertex ids)
    std::vector<int> signs;   // eps_s per step
    Mat C;                    // I_uf x I_uf, integer
    Mat Gext;                 // I x I, integer; frozen columns stay units

    const Seed& base() const { return trail.front(); }
    const Seed& current() const { return trail.back(); }
    int length() const { return int(steps.size()); }
};

TrackedPath make_path(const Seed& base);
TrackedPath extend_path(const TrackedPath& p, int k);
TrackedPath extend_path(const TrackedPath& p, const std::vector<int>& ks);

// Path from p.current() back to p.base() along the reversed step sequence.
TrackedPath reversed_path(const TrackedPath& p);

std::vector<IntVec> g_vectors(const TrackedPath& p); // n columns of Gext
std::vector<IntVec> c_vectors(const TrackedPath& p); // |I_uf| columns of C

// One tropical transformation step at vertex k, computed in the seed s
// (the un-mutated side):
//   g'_k = -g_k,   g'_i = g_i + [b_ik]_+ [g_k]_+ - [-b_ik]_+ [-g_k]_+.
IntVec tropical_transform(const IntVec& g, const Seed& s, int k);

// Composite phi_{p.current, p.base} applied to g.
IntVec phi(const IntVec& g, const TrackedPath& p);

// The linear map psi_{t',t} for t' = p.current, t = p.base: the I x I
// matrix whose i-th column is phi(f_i).  Unimodular by theory; violations
// raise InvariantError.
Mat psi_matrix(const TrackedPath& p);

// sigma with C(p) = -P_sigma, if the endpoint is base[1]; also checks the
// weight compatibility d_k = d_sigma(k) the theory forces.
std::optional<Permutation> green_to_red_check(const TrackedPath& p);

// Depth-first search for a green-to-red sequence: prefers green vertices,
// never repeats the vertex just mutated, iterative deepening up to
// max_depth.  Absence within the depth proves nothing.
std::optional<TrackedPath> find_green_to_red(const Seed& s, int max_depth);

// Searches for t_- = s[-1]: enumerates candidate forward sequences nu,
// builds t_- by applying nu reversed to s, replays nu from t_- and keeps
// the first path that green-to-red checks (its endpoint is s again).
std::optional<TrackedPath> find_coreachable(const Seed& s, int max_depth);

// The two alternating mutation chains of a rank-2 seed, all lengths
// 1..depth (the only repeat-free sequences in rank 2).
std::vector<TrackedPath> enumerate_rank2_paths(const Seed& s, int depth);

} // namespace cluster
