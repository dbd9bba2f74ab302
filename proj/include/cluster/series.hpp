#pragma once

#include "cluster/laurent.hpp"

namespace cluster {

// A Laurent series element x^anchor * (power series in the seed's
// y-variables), truncated at total y-order `order`.  Every stored exponent
// decomposes as anchor + Btilde*n with n >= 0 and |n| <= order.
//
// frontier_touched reports whether anything was cut.  Stored coefficients
// are exact either way: transport carries an exact numerator/denominator
// pair through every mutation step and truncates only in the final
// single-seed series expansion, where dropped terms all live strictly
// beyond the frontier.  When the flag is false the series converts
// losslessly to a LaurentPoly (`order` is raised to cover every term).
struct TruncatedSeries {
    int nvars = 0;
    IntVec anchor;
    int order = 0;
    bool frontier_touched = false;
    std::map<IntVec, BigInt> terms;

    bool is_zero() const { return terms.empty(); }
    LaurentPoly as_poly() const; // terms as-is, no exactness claim
    std::optional<LaurentPoly> to_laurent() const; // only when certified exact
};

// Wraps a Laurent polynomial as a series in seed s: anchor = dominance join
// of the support.  Fails (InvariantError) if the support does not fit under
// a common anchor in the image lattice.
TruncatedSeries series_of_poly(const LaurentPoly& z, const Seed& s, int order);

// Unique dominance-maximal stored exponent.  Truncation only removes
// dominance-low terms, so this is the true series degree even when the
// frontier was touched.
std::optional<IntVec> series_degree(const TruncatedSeries& ts, const Seed& s);

// One monomial-substitution step of the mutation transport mu*_k with the
// positive completion direction:
//   x^m  ->  x^{tau_{k,+}(m)} * (1 + y_k)^{m_k}
// computed in the seed `t` (the un-mutated side).
IntVec tau_plus(const IntVec& m, const Seed& t, int k);

// Formal Laurent series expansion of z (a Laurent polynomial at
// p.current()) in the base seed p.base(), truncated at total y-order N.
// Steps that stay exact divide exactly; once truncation happens the result
// is flagged and callers must treat low-order coefficients as unverified.
TruncatedSeries transport(const LaurentPoly& z, const TrackedPath& p, int order);

// transport specialised to certified-exact results: throws InvariantError
// if the transport truncated.
LaurentPoly transport_exact(const LaurentPoly& z, const TrackedPath& p, int order);

// Degree/codegree swap: for z in LP(t) with t = forward.current() and
// t[-1] = forward.base(), checks
//   deg^{t[-1]}(mu* z) = psi_{t[-1],t}(codeg^t z).
bool codeg_deg_swap_check(const LaurentPoly& z, const TrackedPath& forward, int order);

} // namespace cluster
