#include "cluster/series.hpp"

#include <algorithm>

namespace cluster {

LaurentPoly TruncatedSeries::as_poly() const {
    LaurentPoly p(nvars);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

std::optional<LaurentPoly> TruncatedSeries::to_laurent() const {
    if (frontier_touched) return std::nullopt;
    return as_poly();
}

IntVec tau_plus(const IntVec& m, const Seed& t, int k) {
    if (!t.is_unfrozen(k)) throw UsageError("tau needs an unfrozen vertex");
    IntVec out(m.size());
    i64 mk = m[k];
    for (int j = 0; j < t.n(); ++j) {
        if (j == k) {
            out[j] = -mk;
        } else {
            i64 bjk = t.b().at(j, k).as_integer();
            out[j] = checked_add(m[j], checked_mul(mk, plus_part(-bjk)));
        }
    }
    return out;
}

namespace {

struct AnchoredTerms {
    IntVec anchor;
    // exponent -> (coefficient, total y-order relative to anchor)
    std::map<IntVec, std::pair<BigInt, i64>> terms;
};

// Dominance join: shift `anchor` up by Btilde*w so every witness becomes
// nonnegative.  Throws when the support is not lattice-coherent.
AnchoredTerms anchored(const std::map<IntVec, BigInt>& terms, const Seed& s, IntVec anchor_hint) {
    AnchoredTerms out;
    const DomSolver& dom = s.dom();
    int m = dom.uf();
    IntVec w(m, 0);
    std::map<IntVec, std::pair<BigInt, IntVec>> staged;
    for (const auto& [e, c] : terms) {
        auto n = dom.lattice_witness(ivec_sub(e, anchor_hint));
        if (!n)
            throw InvariantError("series support is not lattice-coherent with its anchor");
        for (int i = 0; i < m; ++i) w[i] = std::max(w[i], plus_part(-(*n)[i]));
        staged.emplace(e, std::make_pair(c, *n));
    }
    IntVec shift(s.n(), 0);
    for (int k = 0; k < m; ++k)
        for (int i = 0; i < s.n(); ++i)
            shift[i] = checked_add(shift[i], checked_mul(w[k], dom.bt().at(i, k).as_integer()));
    out.anchor = ivec_sub(anchor_hint, shift);
    i64 wsum = ivec_sum(w);
    for (auto& [e, cn] : staged)
        out.terms.emplace(e, std::make_pair(cn.first, checked_add(ivec_sum(cn.second), wsum)));
    return out;
}

TruncatedSeries pack(const std::map<IntVec, BigInt>& terms, const Seed& s, IntVec anchor_hint,
                     int order, bool frontier, bool prune) {
    TruncatedSeries ts;
    ts.nvars = s.n();
    ts.order = order;
    ts.frontier_touched = frontier;
    if (terms.empty()) {
        ts.anchor = IntVec(s.n(), 0);
        return ts;
    }
    AnchoredTerms at = anchored(terms, s, std::move(anchor_hint));
    ts.anchor = at.anchor;
    i64 maxord = 0;
    for (const auto& [e, co] : at.terms) {
        if (prune && co.second > order) {
            ts.frontier_touched = true;
            continue;
        }
        if (prune && co.second == order) ts.frontier_touched = true;
        ts.terms.emplace(e, co.first);
        maxord = std::max(maxord, co.second);
    }
    if (!prune && maxord > order) ts.order = int(maxord);
    return ts;
}

// One mutation step on an exact Laurent polynomial: returns (image, M)
// with mu*(P) = image * (1 + y_k(t))^{-M}, both polynomials at t.
std::pair<LaurentPoly, i64> step_image(const LaurentPoly& p, const Seed& t, int k) {
    if (p.is_zero()) return {LaurentPoly::zero(t.n()), 0};
    i64 mmin = 0;
    for (const auto& [m, c] : p.terms()) mmin = std::min(mmin, m[k]);
    i64 M = plus_part(-mmin);
    IntVec u = t.btilde().int_column(t.uf_pos(k));
    LaurentPoly onep = LaurentPoly::constant(t.n(), 1) + LaurentPoly::monomial(u);
    LaurentPoly out(t.n());
    for (const auto& [m, c] : p.terms()) {
        LaurentPoly piece = onep.pow(checked_add(m[k], M)).shifted(tau_plus(m, t, k));
        out = out + piece.scaled(c);
    }
    return {std::move(out), M};
}

// p pruned at total y-order `order` relative to `anchor`; reports whether
// anything was dropped and whether the frontier order is populated.
struct PrunedPoly {
    LaurentPoly poly;
    bool dropped = false;
    bool at_frontier = false;
};

PrunedPoly prune_poly(const LaurentPoly& p, const Seed& s, const IntVec& anchor, int order) {
    PrunedPoly out{LaurentPoly(s.n()), false, false};
    const DomSolver& dom = s.dom();
    for (const auto& [e, c] : p.terms()) {
        auto n = dom.lattice_witness(ivec_sub(e, anchor));
        if (!n || !ivec_nonneg(*n))
            throw InvariantError("series term escaped its anchor cone");
        i64 o = ivec_sum(*n);
        if (o > order) {
            out.dropped = true;
            continue;
        }
        if (o == order) out.at_frontier = true;
        out.poly.add_term(e, c);
    }
    return out;
}

} // namespace

TruncatedSeries series_of_poly(const LaurentPoly& z, const Seed& s, int order) {
    IntVec hint = z.is_zero() ? IntVec(s.n(), 0) : z.terms().begin()->first;
    return pack(z.terms(), s, hint, order, false, true);
}

std::optional<IntVec> series_degree(const TruncatedSeries& ts, const Seed& s) {
    return degree(ts.as_poly(), s);
}

TruncatedSeries transport(const LaurentPoly& z, const TrackedPath& p, int order) {
    if (order < 0) throw UsageError("transport needs order >= 0");
    if (z.nvars() != p.base().n()) throw UsageError("transport arity mismatch");
    const Seed& base = p.base();

    // Exact fraction pipeline: the value is always numer / denom, both
    // Laurent polynomials at the current intermediate seed.
    LaurentPoly numer = z;
    LaurentPoly denom = LaurentPoly::constant(base.n(), 1);

    for (int s = p.length() - 1; s >= 0; --s) {
        const Seed& t = p.trail[s]; // target side of this step
        int k = p.steps[s];
        auto [nimg, mn] = step_image(numer, t, k);
        auto [dimg, md] = step_image(denom, t, k);
        IntVec u = t.btilde().int_column(t.uf_pos(k));
        LaurentPoly onep = LaurentPoly::constant(t.n(), 1) + LaurentPoly::monomial(u);
        numer = nimg * onep.pow(md);
        denom = dimg * onep.pow(mn);
        if (denom.term_count() > 1) {
            // keep the fraction reduced whenever the division is exact
            try {
                if (auto q = divide_exact(numer, denom, t)) {
                    numer = *q;
                    denom = LaurentPoly::constant(base.n(), 1);
                }
            } catch (const UsageError&) {
                // divisor not graded-copointed here; leave the fraction
            }
        }
    }

    if (denom.term_count() == 1) {
        // monomial denominator: the transport is an exact Laurent polynomial
        const auto& [de, dc] = *denom.terms().begin();
        if (dc != 1 && dc != -1)
            throw InvariantError("transport denominator is a non-unit monomial");
        LaurentPoly exact = numer.shifted(ivec_neg(de)).scaled(dc);
        IntVec hint = exact.is_zero() ? IntVec(base.n(), 0) : exact.terms().begin()->first;
        return pack(exact.terms(), base, hint, order, false, false);
    }
    if (auto q = divide_exact(numer, denom, base)) {
        IntVec hint = q->is_zero() ? IntVec(base.n(), 0) : q->terms().begin()->first;
        return pack(q->terms(), base, hint, order, false, false);
    }

    // genuine series: expand denom^{-1} = x^{-dg} sum (-R)^i, R strictly
    // below the unit term, and truncate at the requested order
    auto dg = degree(denom, base);
    if (!dg || (denom.coeff(*dg) != 1 && denom.coeff(*dg) != -1))
        throw InvariantError("transport denominator is not pointed; no series expansion");
    BigInt lead = denom.coeff(*dg);
    LaurentPoly rest = denom.shifted(ivec_neg(*dg)).scaled(lead) - LaurentPoly::constant(base.n(), 1);

    if (numer.is_zero()) {
        TruncatedSeries ts;
        ts.nvars = base.n();
        ts.anchor = IntVec(base.n(), 0);
        ts.order = order;
        return ts;
    }

    // anchor of the result: join of numer's exponents shifted by -deg(denom)
    AnchoredTerms an = anchored(numer.terms(), base, numer.terms().begin()->first);
    IntVec anchor = ivec_sub(an.anchor, *dg);

    // orders only add under multiplication, so every factor can be pruned
    // to the target order up front
    IntVec zerov(base.n(), 0);
    rest = prune_poly(rest, base, zerov, order).poly;
    LaurentPoly shifted_numer =
        prune_poly(numer.shifted(ivec_neg(*dg)).scaled(lead), base, anchor, order).poly;

    LaurentPoly inv = LaurentPoly::constant(base.n(), 1); // sum (-rest)^i, truncated
    LaurentPoly powr = LaurentPoly::constant(base.n(), 1);
    for (int i = 1; i <= order; ++i) {
        powr = prune_poly(powr * (-rest), base, zerov, order).poly;
        if (powr.is_zero()) break;
        inv = inv + powr;
    }
    LaurentPoly product = shifted_numer * inv;
    PrunedPoly pruned = prune_poly(product, base, anchor, order);

    TruncatedSeries ts;
    ts.nvars = base.n();
    ts.anchor = anchor;
    ts.order = order;
    ts.frontier_touched = true; // an infinite tail was cut by construction
    ts.terms = pruned.poly.terms();
    return ts;
}

LaurentPoly transport_exact(const LaurentPoly& z, const TrackedPath& p, int order) {
    TruncatedSeries ts = transport(z, p, order);
    auto poly = ts.to_laurent();
    if (!poly)
        throw InvariantError("transport was truncated where an exact result was required");
    return *poly;
}

bool codeg_deg_swap_check(const LaurentPoly& z, const TrackedPath& forward, int order) {
    const Seed& t = forward.current();
    auto cd = codegree(z, t);
    if (!cd) return false;
    // mu* maps LP(t) into LP(t[-1]); psi_{t[-1],t} comes from the reverse
    Mat psi = psi_matrix(reversed_path(forward));
    TruncatedSeries moved = transport(z, forward, order);
    auto poly = moved.to_laurent();
    if (!poly) return false; // truncated: cannot verify
    auto dg = degree(*poly, forward.base());
    return dg && *dg == psi.apply_int(*cd);
}

} // namespace cluster
