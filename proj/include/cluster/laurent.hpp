#pragma once

#include "cluster/path.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>

namespace cluster {

// Sparse Laurent polynomial with integer coefficients: a finite map from
// exponent vectors (length = ambient vertex count) to nonzero coefficients.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, BigInt c);
    static LaurentPoly monomial(const IntVec& e, BigInt c = 1);

    int nvars() const { return nvars_; }
    const std::map<IntVec, BigInt>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int term_count() const { return int(t_.size()); }
    BigInt coeff(const IntVec& e) const;
    bool all_coeffs_nonneg() const;

    void add_term(const IntVec& e, BigInt c); // merges; drops zeros

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly scaled(const BigInt& c) const;
    LaurentPoly shifted(const IntVec& e) const; // multiply by x^e
    bool operator==(const LaurentPoly& o) const { return nvars_ == o.nvars_ && t_ == o.t_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    LaurentPoly pow(i64 e) const; // e >= 0

  private:
    int nvars_ = 0;
    std::map<IntVec, BigInt> t_;
};

// Canonical text form: terms in ascending lex order of exponent vectors,
// "c*x1^a1*x2^a2" with unit coefficients and zero exponents elided.
// Parses back exactly.
std::string poly_to_text(const LaurentPoly& p);
LaurentPoly poly_from_text(const std::string& text, int nvars);

// Exact division P / D relative to a seed's dominance grading (used both
// for exchange-relation division and for peeling off binomial factors in
// transports).  The divisor's grading-minimal term must have coefficient
// +-1.  Returns nullopt when the division is not exact.
std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d, const Seed& s);

// y_k = x^{Btilde e_k}
LaurentPoly y_variable(const Seed& s, int k);

// Dominance-maximal exponents of the support (a finite antichain).
std::set<IntVec> maximal_degrees(const LaurentPoly& z, const Seed& s);
std::set<IntVec> minimal_degrees(const LaurentPoly& z, const Seed& s);

// Unique dominance-maximal (minimal) exponent, if one exists.
std::optional<IntVec> degree(const LaurentPoly& z, const Seed& s);
std::optional<IntVec> codegree(const LaurentPoly& z, const Seed& s);

bool is_pointed(const LaurentPoly& z, const Seed& s);   // unique max, coeff 1
bool is_copointed(const LaurentPoly& z, const Seed& s); // unique min, coeff 1
bool is_bipointed(const LaurentPoly& z, const Seed& s);

struct Bidegree {
    IntVec deg;
    IntVec codeg;
    IntVec supp_dim; // codeg = deg + Btilde * supp_dim, supp_dim >= 0
};

// Present iff z is bipointed.
std::optional<Bidegree> bidegree_of(const LaurentPoly& z, const Seed& s);

// Cluster variables of p.current() expanded exactly in p.base()'s
// variables via the exchange relation
//   x_k' = (prod x_j^{[b_jk]_+} + prod x_j^{[-b_jk]_+}) / x_k.
// Inexact division would contradict the Laurent phenomenon and raises
// InvariantError.
std::vector<LaurentPoly> cluster_variables_along(const TrackedPath& p);

// The newly created variable after each step, in step order.
std::vector<LaurentPoly> new_variables_along(const TrackedPath& p);

// x(t)^e as a Laurent polynomial in the base seed, e in Z^I with e >= 0 on
// unfrozen coordinates.
LaurentPoly cluster_monomial(const TrackedPath& p, const IntVec& e);

} // namespace cluster
