#pragma once

#include "cluster/laurent.hpp"
#include "cluster/path.hpp"

#include <map>
#include <vector>

namespace cluster {

// One wall through the origin in the rank-2 degree plane: a primitive ray
// (or a full line, for incoming walls), the primitive nonnegative normal,
// and the log of the attached automorphism as u = sum_j c_j y^{j n0}.
struct Wall2 {
    IntVec ray;      // primitive integer direction, length 2
    bool full_line;  // incoming walls are lines; completion adds rays
    IntVec normal;   // primitive, >= 0, perpendicular to ray
    std::map<i64, Rat> logfn;

    // Multiplicative wall function f = exp(sum_j j c_j T^j) as truncated
    // T-series (T = y^{n0}), constant term 1.
    std::vector<Rat> mult_fn(int t_order) const;
};

// Rank-2 skew-symmetric cluster scattering diagram truncated at total
// y-order `order`.  At most one wall per ray; loop consistency holds up to
// `order` after complete().
struct ScatterDiagram2 {
    Seed seed;
    int order = 0;
    std::vector<Wall2> walls;
};

// Formal series x^anchor * (rational series in y), truncated at total
// y-order `order`; the working value for wall-crossing operators.
struct ScatterSeries {
    IntVec anchor;
    int order = 0;
    std::map<IntVec, Rat> terms;

    static ScatterSeries monomial(const IntVec& g, int order);
    // All coefficients integer and orders strictly below the truncation:
    // converts when the represented element is certified polynomial by the
    // caller's context; pure data conversion otherwise.
    LaurentPoly as_poly() const;
    bool operator==(const ScatterSeries& o) const {
        return anchor == o.anchor && terms == o.terms;
    }
};

// Path-ordered product: wall indices in crossing order with the crossing
// signs eps = -sign<gamma', n0>.
struct PathOp {
    std::vector<std::pair<int, int>> crossings;
};

// The two incoming walls (e_k^perp, exp(-d_k Li2(-y_k))) of the cluster
// scattering diagram; requires a rank-2 skew-symmetric seed with both
// vertices unfrozen.
ScatterDiagram2 incoming_diagram(const Seed& s, int order);

// Single wall-crossing p_w^eps applied to z: per monomial,
// x^m -> x^m * f^{eps <m, n0>}.
ScatterSeries cross(const Wall2& w, int eps, const ScatterSeries& z, const ScatterDiagram2& d);

// Order-by-order consistency completion; input must contain only incoming
// walls.  Corrections land on outgoing rays; a correction on an incoming
// ray raises InvariantError.
ScatterDiagram2 complete(const ScatterDiagram2& d);

// Deterministic arc at radius 1 from `from_dir` to `to_dir`
// (counterclockwise when ccw, else clockwise).  Both directions must lie
// strictly inside chambers.
PathOp path_between(const ScatterDiagram2& d, const IntVec& from_dir, const IntVec& to_dir,
                    bool ccw = true);

ScatterSeries apply(const PathOp& op, const ScatterSeries& z, const ScatterDiagram2& d);

// Full counterclockwise loop from a base direction inside a chamber.
PathOp loop_op(const ScatterDiagram2& d);

// Cluster chambers enumerated from c-vector data.
struct Chamber2 {
    TrackedPath path;   // from the diagram's seed
    IntVec g1, g2;      // spanning g-vectors
    IntVec interior;    // a direction strictly inside
    bool contains(const IntVec& g) const; // closed cone test
};

std::vector<Chamber2> cluster_chambers(const ScatterDiagram2& d, int depth);

// Theta function of degree g evaluated at (transported to) the chamber
// containing at_dir: x^g in g's own chamber, moved by the path-ordered
// product.  Degrees outside every enumerated cluster chamber (e.g. the
// Kronecker delta-ray) are an explicit unsupported-region error.
ScatterSeries theta(const ScatterDiagram2& d, const IntVec& g, const IntVec& at_dir,
                    int chamber_depth = 12);

// Negated rays with the same wall functions over the opposite seed.
ScatterDiagram2 opposite_diagram(const ScatterDiagram2& d);

// One record per wall sorted by ray angle, order-stamped header.
std::string dump_diagram(const ScatterDiagram2& d);

} // namespace cluster
