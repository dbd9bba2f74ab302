#include "cluster/bases.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace cluster {

CoreachCtx make_coreach_ctx(const TrackedPath& forward) {
    auto sigma = green_to_red_check(forward);
    if (!sigma) throw ConfigError("coreach path does not green-to-red check");
    CoreachCtx ctx;
    ctx.forward = forward;
    ctx.reverse = reversed_path(forward);
    ctx.sigma = *sigma;
    ctx.psi = psi_matrix(ctx.reverse);
    ctx.psi_inv = int_inverse(ctx.psi);
    return ctx;
}

CoreachCtx find_coreach_ctx(const Seed& t, int max_depth) {
    auto fwd = find_coreachable(t, max_depth);
    if (!fwd) throw ConfigError("no coreach witness within depth " + std::to_string(max_depth));
    return make_coreach_ctx(*fwd);
}

IntVec phi_to_coreach(const IntVec& g, const CoreachCtx& ctx) {
    return phi(g, ctx.reverse);
}

IntVec support_dimension_of_degree(const IntVec& g, const Seed& t, const CoreachCtx& ctx) {
    IntVec eta = ctx.psi_inv.apply_int(phi_to_coreach(g, ctx));
    auto n = solve_dominance(eta, g, t.dom());
    if (!n)
        throw InvariantError("support dimension of " + ivec_str(g) +
                             " undefined: check the coreach witness");
    return *n;
}

std::set<IntVec> bidegree_interval(const IntVec& g, const Seed& t, const CoreachCtx& ctx) {
    IntVec n = support_dimension_of_degree(g, t, ctx);
    IntVec eta = g;
    for (int k = 0; k < t.uf_count(); ++k)
        for (int i = 0; i < t.n(); ++i)
            eta[i] = checked_add(eta[i], checked_mul(n[k], t.btilde().at(i, k).as_integer()));
    return interval(eta, g, t.dom());
}

std::vector<TrackedPath> enumerate_paths(const Seed& t, int depth) {
    std::vector<TrackedPath> out;
    std::vector<TrackedPath> frontier{make_path(t)};
    for (int len = 1; len <= depth; ++len) {
        std::vector<TrackedPath> next;
        for (const auto& p : frontier) {
            int last = p.steps.empty() ? -1 : p.steps.back();
            for (int k : t.unfrozen()) {
                if (k == last) continue;
                next.push_back(extend_path(p, k));
            }
        }
        for (const auto& p : next) out.push_back(p);
        frontier = std::move(next);
    }
    return out;
}

std::set<IntVec> deformation_factor(const IntVec& g, const Seed& t, const CoreachCtx& ctx,
                                    int seed_depth) {
    std::set<IntVec> out;
    std::set<IntVec> candidates = bidegree_interval(g, t, ctx);
    candidates.erase(g);
    if (candidates.empty()) return out;

    std::vector<TrackedPath> paths = enumerate_paths(t, seed_depth);
    paths.push_back(ctx.reverse);

    for (const IntVec& gp : candidates) {
        if (!solve_dominance(gp, g, t.dom())) continue; // strict at t itself
        bool ok = true;
        for (const auto& p : paths) {
            IntVec a = phi(gp, p);
            IntVec b = phi(g, p);
            if (!solve_dominance(a, b, p.current().dom())) { ok = false; break; }
        }
        if (ok) out.insert(gp);
    }
    return out;
}

TriBool is_compatibly_pointed(const LaurentPoly& z, const Seed& t0,
                              const std::vector<TrackedPath>& paths, int order) {
    auto d0 = degree(z, t0);
    if (!d0 || z.coeff(*d0) != 1) return TriBool::False;
    bool unknown = false;
    for (const auto& p : paths) {
        if (!p.base().same_matrix(t0)) throw UsageError("compatibility path from a different seed");
        TruncatedSeries ts = transport(z, reversed_path(p), order);
        IntVec expect = phi(*d0, p);
        const Seed& tp = p.current();
        LaurentPoly poly = ts.as_poly();
        auto dp = degree(poly, tp);
        // with a truncated tail the degree is still certain when the
        // anchor term is present: every cut term lies below the anchor
        bool certain = !ts.frontier_touched || (dp && *dp == ts.anchor);
        if (!certain) { unknown = true; continue; }
        if (!dp || *dp != expect || poly.coeff(*dp) != 1) return TriBool::False;
    }
    return unknown ? TriBool::Unknown : TriBool::True;
}

std::optional<LaurentPoly> family_element(const PointedFamily& fam, const IntVec& g) {
    auto el = fam.provider(g);
    if (!el) return std::nullopt;
    auto d = degree(*el, fam.seed);
    if (!d || *d != g || el->coeff(*d) != 1)
        throw FamilyError("family element at " + ivec_str(g) + " is not pointed there");
    return el;
}

DecompResult dominance_decompose(const LaurentPoly& z, const PointedFamily& fam, int max_iter) {
    if (max_iter < 1) throw UsageError("dominance decomposition needs max_iter >= 1");
    DecompResult res;
    res.residual = z;
    while (!res.residual.is_zero() && res.iterations < max_iter) {
        auto maxima = maximal_degrees(res.residual, fam.seed);
        for (const IntVec& g : maxima) {
            BigInt c = res.residual.coeff(g);
            if (c == 0) continue; // removed while peeling a sibling
            auto el = family_element(fam, g);
            if (!el) {
                res.domain_gap = g;
                return res;
            }
            res.coefficients[g] += c;
            if (res.coefficients[g] == 0) res.coefficients.erase(g);
            res.residual = res.residual - el->scaled(c);
        }
        ++res.iterations;
    }
    return res;
}

bool decomposition_seed_independence(const LaurentPoly& z, const PointedFamily& fam,
                                     const TrackedPath& p, int max_iter, int order) {
    DecompResult at_t = dominance_decompose(z, fam, max_iter);
    if (!at_t.complete()) return false;

    LaurentPoly z_prime = transport_exact(z, reversed_path(p), order);

    PointedFamily fam_prime{p.current(), {}, fam.domain_desc + " (transported)"};
    TrackedPath rev = reversed_path(p);
    fam_prime.provider = [fam, rev, order](const IntVec& h) -> std::optional<LaurentPoly> {
        IntVec g = phi(h, rev); // phi_{t,t'}(h)
        auto el = fam.provider(g);
        if (!el) return std::nullopt;
        return transport_exact(*el, rev, order);
    };

    DecompResult at_tp = dominance_decompose(z_prime, fam_prime, max_iter);
    if (!at_tp.complete()) return false;

    if (at_t.coefficients.size() != at_tp.coefficients.size()) return false;
    for (const auto& [g, c] : at_t.coefficients) {
        IntVec gp = phi(g, p);
        auto it = at_tp.coefficients.find(gp);
        if (it == at_tp.coefficients.end() || it->second != c) return false;
    }
    return true;
}

namespace {

struct Chamber {
    TrackedPath path;
    Mat gfull;     // n x n extended G-matrix
    Mat ginv;      // integer inverse
};

std::vector<Chamber> chamber_atlas(const Seed& t0, int depth) {
    std::vector<Chamber> out;
    std::set<std::vector<std::string>> seen;
    auto add = [&](const TrackedPath& p) {
        // canonical form: sorted column strings
        std::vector<std::string> cols;
        for (int j = 0; j < p.Gext.cols(); ++j) cols.push_back(ivec_str(p.Gext.int_column(j)));
        std::sort(cols.begin(), cols.end());
        if (!seen.insert(cols).second) return;
        out.push_back({p, p.Gext, int_inverse(p.Gext)});
    };
    add(make_path(t0));
    for (const auto& p : enumerate_paths(t0, depth)) add(p);
    return out;
}

// Localized-cluster-monomial lookup: the first chamber whose cone contains
// g (integer coordinates, nonnegative on unfrozen vertices).
std::optional<LaurentPoly> monomial_at_degree(const std::vector<Chamber>& atlas, const Seed& t0,
                                              const IntVec& g) {
    for (const auto& ch : atlas) {
        IntVec a = ch.ginv.apply_int(g);
        bool ok = true;
        for (int k : t0.unfrozen())
            if (a[k] < 0) { ok = false; break; }
        if (!ok) continue;
        return cluster_monomial(ch.path, a);
    }
    return std::nullopt;
}

} // namespace

PointedFamily cluster_monomial_family(const Seed& t0, int depth) {
    auto atlas = std::make_shared<std::vector<Chamber>>(chamber_atlas(t0, depth));
    PointedFamily fam{t0, [atlas, t0](const IntVec& g) { return monomial_at_degree(*atlas, t0, g); },
                      "localized cluster monomials on the depth-" + std::to_string(depth) + " fan"};
    return fam;
}

LaurentPoly kronecker_z(const Seed& t0) {
    // z = x^delta (1 + y2 + y1 y2), delta = (1,-1)
    IntVec delta{1, -1};
    LaurentPoly y1 = y_variable(t0, 0);
    LaurentPoly y2 = y_variable(t0, 1);
    LaurentPoly inner = LaurentPoly::constant(2, 1) + y2 + y1 * y2;
    return inner.shifted(delta);
}

PointedFamily kronecker_generic_family(const Seed& t0, int depth) {
    Seed kr = kronecker_seed();
    if (!t0.same_matrix(kr))
        throw ConfigError("the generic family is implemented for the Kronecker seed only");
    auto atlas = std::make_shared<std::vector<Chamber>>(chamber_atlas(t0, depth));
    LaurentPoly z = kronecker_z(t0);
    PointedFamily fam{t0, {}, "Kronecker generic family (cluster monomials and z^d)"};
    fam.provider = [atlas, t0, z](const IntVec& g) -> std::optional<LaurentPoly> {
        if (g.size() != 2) throw UsageError("Kronecker degree must have length 2");
        if (g[0] >= 1 && g[1] == -g[0]) return z.pow(g[0]); // d*delta, d >= 1
        auto mono = monomial_at_degree(*atlas, t0, g);
        if (!mono)
            throw FamilyError("degree " + ivec_str(g) +
                              " outside the enumerated fan; raise the atlas depth");
        return mono;
    };
    return fam;
}

PointedFamily deformed_family(const PointedFamily& base,
                              const std::map<IntVec, std::map<IntVec, BigInt>>& deformation,
                              const Seed& t, const CoreachCtx& ctx, int seed_depth) {
    for (const auto& [g, row] : deformation) {
        auto factor = deformation_factor(g, t, ctx, seed_depth);
        for (const auto& [gp, c] : row)
            if (c != 0 && !factor.count(gp))
                throw FamilyError("deformation key " + ivec_str(gp) +
                                  " lies outside the deformation factor of " + ivec_str(g));
    }
    PointedFamily fam{base.seed, {}, base.domain_desc + " (deformed)"};
    auto ctx_copy = std::make_shared<CoreachCtx>(ctx);
    Seed tcopy = t;
    fam.provider = [base, deformation, tcopy, ctx_copy](const IntVec& g) -> std::optional<LaurentPoly> {
        auto el = base.provider(g);
        if (!el) return std::nullopt;
        auto it = deformation.find(g);
        if (it != deformation.end()) {
            for (const auto& [gp, c] : it->second) {
                auto lower = base.provider(gp);
                if (!lower)
                    throw FamilyError("deformation refers to degree " + ivec_str(gp) +
                                      " outside the base family");
                el = *el + lower->scaled(c);
            }
            // combination proposition: the sum stays bipointed with the
            // leading bidegree; verified here
            auto bd = bidegree_of(*el, tcopy);
            auto want = support_dimension_of_degree(g, tcopy, *ctx_copy);
            if (!bd || bd->supp_dim != want)
                throw FamilyError("deformed element at " + ivec_str(g) +
                                  " lost its bidegree contract");
        }
        return el;
    };
    return fam;
}

std::vector<DegreeCheck> verify_basis_candidate(const PointedFamily& fam, const IntVec& lo,
                                                const IntVec& hi, const Seed& t,
                                                const CoreachCtx& ctx, int path_depth, int order) {
    if (lo.size() != hi.size() || int(lo.size()) != t.n())
        throw UsageError("verification window must match the seed arity");
    std::vector<TrackedPath> paths = enumerate_paths(t, path_depth);
    paths.push_back(ctx.reverse);
    auto atlas_fam = cluster_monomial_family(t, std::max(path_depth, 8));

    std::vector<DegreeCheck> out;
    IntVec g = lo;
    while (true) {
        DegreeCheck chk;
        chk.g = g;
        try {
            auto el = family_element(fam, g);
            if (!el) {
                chk.note = "outside family domain";
            } else {
                chk.provider_ok = true;
                auto bd = bidegree_of(*el, t);
                chk.bipointed_ok = bool(bd);
                IntVec want = support_dimension_of_degree(g, t, ctx);
                chk.suppdim_ok = bd && bd->supp_dim == want;
                if (bd && !chk.suppdim_ok)
                    chk.note = "suppDim " + ivec_str(bd->supp_dim) + " != " + ivec_str(want);
                TriBool compat = is_compatibly_pointed(*el, t, paths, order);
                chk.compat_ok = compat == TriBool::True;
                if (compat == TriBool::Unknown) chk.note = "compatibility unknown (truncated)";
                auto mono = atlas_fam.provider(g);
                if (mono) chk.monomial_ok = (*el == *mono);
            }
        } catch (const FamilyError& e) {
            chk.note = e.what();
        }
        out.push_back(std::move(chk));

        int i = 0;
        while (i < int(g.size()) && g[i] == hi[i]) { g[i] = lo[i]; ++i; }
        if (i == int(g.size())) break;
        ++g[i];
    }
    return out;
}

std::string degree_check_line(const DegreeCheck& c) {
    std::ostringstream os;
    os << "degree " << ivec_str(c.g) << " " << (c.pass() ? "PASS" : "FAIL");
    if (!c.pass()) {
        os << " [";
        bool first = true;
        auto item = [&](bool ok, const char* name) {
            if (ok) return;
            if (!first) os << ",";
            os << name;
            first = false;
        };
        item(c.provider_ok, "provider");
        item(c.bipointed_ok, "bipointed");
        item(c.suppdim_ok, "suppdim");
        item(c.compat_ok, "compat");
        item(c.monomial_ok, "monomial");
        os << "]";
        if (!c.note.empty()) os << " " << c.note;
    }
    return os.str();
}

} // namespace cluster
