#pragma once

#include "cluster/series.hpp"

#include <functional>
#include <map>
#include <set>

namespace cluster {

// Everything derived from one injective-reachability witness for a seed t:
// the forward green-to-red path from t[-1], its reverse, the permutation,
// and the degree transformation psi_{t[-1],t} with its inverse.
struct CoreachCtx {
    TrackedPath forward;  // t[-1] -> t, green-to-red checked
    TrackedPath reverse;  // t -> t[-1]
    Permutation sigma;
    Mat psi;      // psi_{t[-1],t}
    Mat psi_inv;
};

CoreachCtx make_coreach_ctx(const TrackedPath& forward);
// Searches for t[-1] first; ConfigError if none within max_depth.
CoreachCtx find_coreach_ctx(const Seed& t, int max_depth);

// phi_{t[-1],t}(g), computed along the reverse path.
IntVec phi_to_coreach(const IntVec& g, const CoreachCtx& ctx);

// The nonnegative integer vector n with
//   psi^{-1}(phi_{t[-1],t}(g)) = g + Btilde(t) * n.
// The theory guarantees existence for verified coreach witnesses; failure
// raises InvariantError.
IntVec support_dimension_of_degree(const IntVec& g, const Seed& t, const CoreachCtx& ctx);

// interval(eta, g) with eta = g + Btilde * suppDim(g).
std::set<IntVec> bidegree_interval(const IntVec& g, const Seed& t, const CoreachCtx& ctx);

// Degrees strictly dominated by g in every seed reachable within
// seed_depth mutations (plus the coreach path's seeds).  Candidates are
// drawn from the bidegree interval, so the result is finite and exact for
// the enumerated seed set.
std::set<IntVec> deformation_factor(const IntVec& g, const Seed& t, const CoreachCtx& ctx,
                                    int seed_depth = 8);

// Mutation paths from t of every length 1..depth without immediate
// repeats.  The building block for "all seeds within depth" checks.
std::vector<TrackedPath> enumerate_paths(const Seed& t, int depth);

enum class TriBool { False, True, Unknown };

// Transports z along each path and checks pointedness at the phi-image of
// its degree.  Truncated (frontier-touched) transports yield Unknown
// rather than a false theorem violation.
TriBool is_compatibly_pointed(const LaurentPoly& z, const Seed& t0,
                              const std::vector<TrackedPath>& paths, int order);

// A degree-indexed collection of pointed elements.  The provider returns
// nullopt outside its domain; produced elements are verified pointed at
// the requested degree on access (FamilyError otherwise).
struct PointedFamily {
    Seed seed;
    std::function<std::optional<LaurentPoly>(const IntVec&)> provider;
    std::string domain_desc;
};

std::optional<LaurentPoly> family_element(const PointedFamily& fam, const IntVec& g);

struct DecompResult {
    std::map<IntVec, BigInt> coefficients;
    LaurentPoly residual;            // zero on success
    int iterations = 0;
    std::optional<IntVec> domain_gap; // first degree outside the family's domain
    bool complete() const { return residual.is_zero(); }
};

// Iterative dominance-order peeling of z against the family.
DecompResult dominance_decompose(const LaurentPoly& z, const PointedFamily& fam, int max_iter);

// Decomposes z at p.base() and its transport at p.current() against the
// transported family; true iff the coefficient functions agree under phi.
bool decomposition_seed_independence(const LaurentPoly& z, const PointedFamily& fam,
                                     const TrackedPath& p, int max_iter, int order);

// Cluster-monomial family: g-vector cones enumerated from tracked paths up
// to `depth`; degrees inside a cone map to the localized cluster monomial
// expanded in t0.  Partial: nullopt outside the enumerated fan.
PointedFamily cluster_monomial_family(const Seed& t0, int depth = 12);

// The generic family of the Kronecker seed: cluster monomials off the
// delta-ray, z^d = (x^delta (1 + y2 + y1 y2))^d on it.  Total on Z^2.
PointedFamily kronecker_generic_family(const Seed& t0, int depth = 12);
LaurentPoly kronecker_z(const Seed& t0);

// Base family plus integer deformations: s_g = base(g) + sum b_{g,g'}
// base(g') over keys g' that must lie in deformation_factor(g).
PointedFamily deformed_family(const PointedFamily& base,
                              const std::map<IntVec, std::map<IntVec, BigInt>>& deformation,
                              const Seed& t, const CoreachCtx& ctx, int seed_depth = 8);

struct DegreeCheck {
    IntVec g;
    bool provider_ok = false;   // element produced and pointed at g
    bool bipointed_ok = false;  // bidegree exists
    bool suppdim_ok = false;    // suppDim(s_g) == suppDim(g)
    bool compat_ok = false;     // compatibly pointed on the sampled paths
    bool monomial_ok = true;    // matches the cluster monomial at cone degrees
    std::string note;
    bool pass() const {
        return provider_ok && bipointed_ok && suppdim_ok && compat_ok && monomial_ok;
    }
};

// Per-degree verification over a finite window [lo, hi] (componentwise).
std::vector<DegreeCheck> verify_basis_candidate(const PointedFamily& fam, const IntVec& lo,
                                                const IntVec& hi, const Seed& t,
                                                const CoreachCtx& ctx, int path_depth = 6,
                                                int order = 16);

std::string degree_check_line(const DegreeCheck& c); // stable one-line record

} // namespace cluster
