#include "cluster/scatter2.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cluster {

namespace {

IntVec primitive(const IntVec& v) {
    i64 g = 0;
    for (i64 x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) throw UsageError("zero vector has no primitive direction");
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
    return r;
}

i64 cross2(const IntVec& a, const IntVec& b) {
    return checked_sub(checked_mul(a[0], b[1]), checked_mul(a[1], b[0]));
}

// Angle ordering on nonzero vectors, counterclockwise from (1,0).
int half_plane(const IntVec& v) {
    if (v[1] > 0 || (v[1] == 0 && v[0] > 0)) return 0; // [0, pi)
    return 1;                                          // [pi, 2pi)
}

bool angle_less(const IntVec& a, const IntVec& b) {
    int ha = half_plane(a), hb = half_plane(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

bool parallel_same_dir(const IntVec& a, const IntVec& b) {
    return cross2(a, b) == 0 && (checked_add(checked_mul(a[0], b[0]), checked_mul(a[1], b[1])) > 0);
}

void check_rank2(const Seed& s) {
    if (s.n() != 2 || s.uf_count() != 2)
        throw ConfigError("scattering diagrams: rank-2 seeds with both vertices unfrozen only");
    if (!s.is_skew_symmetric())
        throw ConfigError("scattering diagrams: skew-symmetric seeds only");
    if (s.weights() != std::vector<i64>{1, 1})
        throw ConfigError("scattering diagrams: weights d = (1,1) required");
}

// n with Btilde n = diff; integer by lattice-coherence of everything the
// module produces.
IntVec witness2(const Seed& s, const IntVec& diff) {
    auto n = s.dom().lattice_witness(diff);
    if (!n) throw InvariantError("scatter exponent left the Btilde lattice");
    return *n;
}

i64 order_of(const Seed& s, const IntVec& anchor, const IntVec& m) {
    IntVec n = witness2(s, ivec_sub(m, anchor));
    if (!ivec_nonneg(n))
        throw InvariantError("scatter series term above its anchor");
    return ivec_sum(n);
}

// ---- truncated series in one formal variable T (index = power) ----

using TSeries = std::vector<Rat>; // size K+1, index = T-power

TSeries t_mul(const TSeries& a, const TSeries& b) {
    int k = int(a.size()) - 1;
    TSeries r(k + 1, Rat(0));
    for (int i = 0; i <= k; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= k; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

TSeries t_one(int k) {
    TSeries r(k + 1, Rat(0));
    r[0] = Rat(1);
    return r;
}

TSeries t_inverse(const TSeries& a) {
    if (a[0] != Rat(1)) throw UsageError("T-series inverse needs constant term 1");
    int k = int(a.size()) - 1;
    TSeries r = t_one(k);
    for (int i = 1; i <= k; ++i) {
        Rat s(0);
        for (int j = 1; j <= i; ++j) s += a[j] * r[i - j];
        r[i] = -s;
    }
    return r;
}

TSeries t_pow(const TSeries& a, i64 e, int k) {
    TSeries base = e < 0 ? t_inverse(a) : a;
    i64 n = e < 0 ? -e : e;
    TSeries acc = t_one(k);
    while (n) {
        if (n & 1) acc = t_mul(acc, base);
        base = t_mul(base, base);
        n >>= 1;
    }
    return acc;
}

TSeries t_exp(const TSeries& a, int k) {
    if (!a[0].is_zero()) throw UsageError("T-series exp needs zero constant term");
    TSeries acc = t_one(k);
    TSeries term = t_one(k);
    for (int i = 1; i <= k; ++i) {
        term = t_mul(term, a);
        Rat inv_fact = Rat(1);
        for (int j = 2; j <= i; ++j) inv_fact = inv_fact / Rat(j);
        // term currently holds a^i; add a^i / i!
        for (int idx = 0; idx <= k; ++idx) acc[idx] += term[idx] * inv_fact;
    }
    return acc;
}

} // namespace

std::vector<Rat> Wall2::mult_fn(int t_order) const {
    TSeries u(t_order + 1, Rat(0));
    for (const auto& [j, c] : logfn) {
        if (j < 1) throw InvariantError("wall log term with nonpositive index");
        if (j <= t_order) u[size_t(j)] += Rat(j) * c;
    }
    return t_exp(u, t_order);
}

ScatterSeries ScatterSeries::monomial(const IntVec& g, int order) {
    ScatterSeries s;
    s.anchor = g;
    s.order = order;
    s.terms.emplace(g, Rat(1));
    return s;
}

LaurentPoly ScatterSeries::as_poly() const {
    LaurentPoly p(int(anchor.size()));
    for (const auto& [e, c] : terms) p.add_term(e, c.as_integer());
    return p;
}

ScatterDiagram2 incoming_diagram(const Seed& s, int order) {
    check_rank2(s);
    if (order < 1) throw UsageError("diagram order must be >= 1");
    ScatterDiagram2 d{s, order, {}};
    for (int k = 0; k < 2; ++k) {
        Wall2 w;
        w.normal = unit_vec(2, k);
        w.ray = primitive(s.btilde().int_column(k)); // v_k spans e_k^perp
        w.full_line = true;
        // -d_k Li2(-y_k): c_j = (-1)^{j-1} / j^2  (d_k = 1)
        for (i64 j = 1; j <= order; ++j)
            w.logfn[j] = Rat((j % 2) ? 1 : -1, checked_mul(j, j));
        d.walls.push_back(std::move(w));
    }
    return d;
}

ScatterSeries cross(const Wall2& w, int eps, const ScatterSeries& z, const ScatterDiagram2& d) {
    if (z.order != d.order) throw UsageError("series and diagram truncation orders differ");
    const Seed& s = d.seed;
    i64 nweight = ivec_sum(w.normal); // y-order of one T step
    IntVec xstep = s.btilde().apply_int(w.normal);

    ScatterSeries out;
    out.anchor = z.anchor;
    out.order = z.order;
    std::map<i64, TSeries> pow_cache;
    int kmax = d.order / int(nweight);
    TSeries f = w.mult_fn(kmax);

    for (const auto& [m, c] : z.terms) {
        i64 p = checked_mul(i64(eps), ivec_dot(m, w.normal));
        if (p == 0) {
            out.terms[m] += c;
            if (out.terms[m].is_zero()) out.terms.erase(m);
            continue;
        }
        auto it = pow_cache.find(p);
        if (it == pow_cache.end()) it = pow_cache.emplace(p, t_pow(f, p, kmax)).first;
        const TSeries& fp = it->second;
        i64 base_ord = order_of(s, z.anchor, m);
        for (int j = 0; j < int(fp.size()); ++j) {
            if (fp[j].is_zero()) continue;
            if (base_ord + j * nweight > d.order) break;
            IntVec e = m;
            for (int i = 0; i < 2; ++i) e[i] = checked_add(e[i], checked_mul(j, xstep[i]));
            Rat& slot = out.terms[e];
            slot += c * fp[j];
            if (slot.is_zero()) out.terms.erase(e);
        }
    }
    return out;
}

namespace {

struct CrossEvent {
    IntVec ray;
    int wall_idx;
};

std::vector<CrossEvent> all_events(const ScatterDiagram2& d) {
    std::vector<CrossEvent> ev;
    for (int i = 0; i < int(d.walls.size()); ++i) {
        ev.push_back({d.walls[i].ray, i});
        if (d.walls[i].full_line) ev.push_back({ivec_neg(d.walls[i].ray), i});
    }
    return ev;
}

int ccw_sign(const IntVec& ray, const IntVec& normal) {
    i64 c = cross2(ray, normal);
    if (c == 0) throw InvariantError("wall ray parallel to its own normal");
    return c > 0 ? -1 : 1; // eps = -sign<gamma', n> with gamma' = rot90(ray)
}

IntVec base_direction(const ScatterDiagram2& d) {
    // a direction not parallel to any wall ray, deterministic
    std::vector<IntVec> cands = {{1, 1}, {2, 1}, {1, 2}, {3, 1}, {1, 3}, {3, 2}, {2, 3}, {4, 1}};
    for (const auto& c : cands) {
        bool clash = false;
        for (const auto& ev : all_events(d))
            if (cross2(c, ev.ray) == 0) { clash = true; break; }
        if (!clash) return c;
    }
    throw InvariantError("no generic base direction found");
}

// Events strictly after `from` in ccw order, as (angle offset rank).
std::vector<CrossEvent> sorted_from(const ScatterDiagram2& d, const IntVec& from) {
    auto ev = all_events(d);
    std::stable_sort(ev.begin(), ev.end(), [&](const CrossEvent& a, const CrossEvent& b) {
        // angle measured ccw starting just after `from`
        auto rank = [&](const IntVec& v) {
            if (parallel_same_dir(v, from)) return 2; // crossing at start: put last
            return angle_less(from, v) ? 0 : 1;
        };
        int rx = rank(a.ray), ry = rank(b.ray);
        if (rx != ry) return rx < ry;
        return angle_less(a.ray, b.ray);
    });
    return ev;
}

} // namespace

PathOp loop_op(const ScatterDiagram2& d) {
    IntVec from = base_direction(d);
    PathOp op;
    for (const auto& ev : sorted_from(d, from))
        op.crossings.emplace_back(ev.wall_idx, ccw_sign(ev.ray, d.walls[ev.wall_idx].normal));
    return op;
}

PathOp path_between(const ScatterDiagram2& d, const IntVec& from_dir, const IntVec& to_dir,
                    bool ccw) {
    for (const auto& ev : all_events(d)) {
        if (cross2(from_dir, ev.ray) == 0 && parallel_same_dir(from_dir, ev.ray))
            throw UsageError("path endpoint lies on a wall");
        if (cross2(to_dir, ev.ray) == 0 && parallel_same_dir(to_dir, ev.ray))
            throw UsageError("path endpoint lies on a wall");
    }
    PathOp op;
    if (parallel_same_dir(from_dir, to_dir)) return op;
    auto ev = sorted_from(d, from_dir); // ccw order starting just after from_dir
    if (ccw) {
        for (const auto& e : ev) {
            // stop once we pass to_dir (ccw)
            auto rank = [&](const IntVec& v) {
                if (parallel_same_dir(v, from_dir)) return 2;
                return angle_less(from_dir, v) ? 0 : 1;
            };
            int rt = rank(to_dir), re = rank(e.ray);
            bool before_target = (re < rt) || (re == rt && angle_less(e.ray, to_dir));
            if (!before_target) continue;
            op.crossings.emplace_back(e.wall_idx, ccw_sign(e.ray, d.walls[e.wall_idx].normal));
        }
    } else {
        PathOp fwd = path_between(d, to_dir, from_dir, true);
        for (auto it = fwd.crossings.rbegin(); it != fwd.crossings.rend(); ++it)
            op.crossings.emplace_back(it->first, -it->second);
    }
    return op;
}

ScatterSeries apply(const PathOp& op, const ScatterSeries& z, const ScatterDiagram2& d) {
    ScatterSeries cur = z;
    for (const auto& [idx, eps] : op.crossings) cur = cross(d.walls[idx], eps, cur, d);
    return cur;
}

namespace {

// Correction coefficients c_n at total order ell extracted from the loop
// failure on x^{f_0}, x^{f_1}.
std::map<IntVec, Rat> loop_failure(const ScatterDiagram2& d, int ell) {
    std::map<IntVec, Rat> cn;
    PathOp loop = loop_op(d);
    for (int i = 0; i < 2; ++i) {
        IntVec fi = unit_vec(2, i);
        ScatterSeries res = apply(loop, ScatterSeries::monomial(fi, d.order), d);
        for (const auto& [e, c] : res.terms) {
            if (e == fi || c.is_zero()) continue;
            IntVec n = witness2(d.seed, ivec_sub(e, fi));
            if (ivec_sum(n) != ell) continue;
            if (n[i] == 0) continue;
            Rat val = c / Rat(n[i]);
            auto it = cn.find(n);
            if (it == cn.end()) {
                cn.emplace(n, val);
            } else if (it->second != val) {
                throw InvariantError("inconsistent loop-failure reads between x1 and x2");
            }
        }
    }
    for (auto it = cn.begin(); it != cn.end();)
        it = it->second.is_zero() ? cn.erase(it) : std::next(it);
    return cn;
}

} // namespace

ScatterDiagram2 complete(const ScatterDiagram2& din) {
    check_rank2(din.seed);
    for (const auto& w : din.walls)
        if (!w.full_line)
            throw UsageError("completion input must contain only incoming walls");
    ScatterDiagram2 d = din;

    for (int ell = 1; ell <= d.order; ++ell) {
        auto cn = loop_failure(d, ell);
        for (const auto& [n, c] : cn) {
            IntVec dir = ivec_neg(d.seed.btilde().apply_int(n));
            IntVec ray = primitive(dir);
            IntVec n0 = primitive(n);
            i64 j = std::gcd(n[0], n[1]); // n = j * n0
            // incoming would mean p*(n0) on the ray itself
            if (parallel_same_dir(ray, d.seed.btilde().apply_int(n0)))
                throw InvariantError("completion demanded a correction on an incoming ray");
            int widx = -1;
            for (int i = 0; i < int(d.walls.size()); ++i) {
                if (d.walls[i].full_line) {
                    if (parallel_same_dir(d.walls[i].ray, ray) ||
                        parallel_same_dir(ivec_neg(d.walls[i].ray), ray)) {
                        if (d.walls[i].normal != n0)
                            throw InvariantError("correction normal clashes with an incoming wall");
                        widx = i;
                        break;
                    }
                } else if (parallel_same_dir(d.walls[i].ray, ray)) {
                    if (d.walls[i].normal != n0)
                        throw InvariantError("two walls on one ray with different normals");
                    widx = i;
                    break;
                }
            }
            if (widx < 0) {
                Wall2 w;
                w.ray = ray;
                w.full_line = false;
                w.normal = n0;
                d.walls.push_back(std::move(w));
                widx = int(d.walls.size()) - 1;
            }
            int eps_w = ccw_sign(ray, n0);
            Rat& slot = d.walls[widx].logfn[j];
            slot += -Rat(eps_w) * c;
            if (slot.is_zero()) d.walls[widx].logfn.erase(j);
        }
        if (!cn.empty() && !loop_failure(d, ell).empty())
            throw InvariantError("completion failed to cancel order-" + std::to_string(ell) +
                                 " inconsistency");
    }
    return d;
}

bool Chamber2::contains(const IntVec& g) const {
    // closed cone spanned by g1, g2
    i64 det = cross2(g1, g2);
    if (det == 0) throw InvariantError("degenerate chamber");
    // solve a*g1 + b*g2 = g by Cramer; signs against det
    i64 a_num = cross2(g, g2);
    i64 b_num = cross2(g1, g);
    if (det < 0) { a_num = -a_num; b_num = -b_num; det = -det; }
    return a_num >= 0 && b_num >= 0;
}

std::vector<Chamber2> cluster_chambers(const ScatterDiagram2& d, int depth) {
    std::vector<Chamber2> out;
    std::set<std::pair<IntVec, IntVec>> seen;
    auto add = [&](const TrackedPath& p) {
        Chamber2 ch;
        ch.path = p;
        ch.g1 = p.Gext.int_column(0);
        ch.g2 = p.Gext.int_column(1);
        auto key = std::minmax(ch.g1, ch.g2);
        if (!seen.insert({key.first, key.second}).second) return;
        ch.interior = ivec_add(ch.g1, ch.g2);
        out.push_back(std::move(ch));
    };
    add(make_path(d.seed));
    for (const auto& p : enumerate_rank2_paths(d.seed, depth)) add(p);
    return out;
}

ScatterSeries theta(const ScatterDiagram2& d, const IntVec& g, const IntVec& at_dir,
                    int chamber_depth) {
    auto chambers = cluster_chambers(d, chamber_depth);
    const Chamber2* home = nullptr;
    for (const auto& ch : chambers)
        if (ch.contains(g)) { home = &ch; break; }
    if (!home)
        throw UsageError("degree " + ivec_str(g) +
                         " lies outside the enumerated cluster chambers (unsupported region)");
    ScatterSeries z = ScatterSeries::monomial(g, d.order);
    PathOp op = path_between(d, home->interior, at_dir, true);
    return apply(op, z, d);
}

ScatterDiagram2 opposite_diagram(const ScatterDiagram2& d) {
    ScatterDiagram2 o{opposite_seed(d.seed), d.order, {}};
    for (const auto& w : d.walls) {
        Wall2 nw = w;
        if (!w.full_line) nw.ray = ivec_neg(w.ray);
        o.walls.push_back(std::move(nw));
    }
    return o;
}

std::string dump_diagram(const ScatterDiagram2& d) {
    std::ostringstream os;
    os << "scatter-dump v1 order=" << d.order << "\n";
    std::vector<int> idx(d.walls.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = int(i);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (d.walls[a].ray != d.walls[b].ray) return angle_less(d.walls[a].ray, d.walls[b].ray);
        return a < b;
    });
    for (int i : idx) {
        const Wall2& w = d.walls[i];
        os << "wall kind=" << (w.full_line ? "line" : "ray") << " ray=" << ivec_str(w.ray)
           << " normal=" << ivec_str(w.normal) << " f=1";
        int kmax = w.normal.empty() ? 0 : d.order / int(ivec_sum(w.normal));
        auto f = w.mult_fn(kmax);
        for (int j = 1; j < int(f.size()); ++j) {
            if (f[j].is_zero()) continue;
            os << " + " << f[j].str() << "*y^" << ivec_str(ivec_scale(j, w.normal));
        }
        os << "\n";
    }
    return os.str();
}

} // namespace cluster
