#include "cluster/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace cluster {

LaurentPoly LaurentPoly::constant(int nvars, BigInt c) {
    LaurentPoly p(nvars);
    p.add_term(IntVec(nvars, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const IntVec& e, BigInt c) {
    LaurentPoly p(int(e.size()));
    p.add_term(e, c);
    return p;
}

BigInt LaurentPoly::coeff(const IntVec& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigInt(0) : it->second;
}

bool LaurentPoly::all_coeffs_nonneg() const {
    return std::all_of(t_.begin(), t_.end(), [](const auto& kv) { return kv.second > 0; });
}

void LaurentPoly::add_term(const IntVec& e, BigInt c) {
    if (c == 0) return;
    if (int(e.size()) != nvars_) throw UsageError("term exponent length mismatch");
    auto [it, inserted] = t_.emplace(e, std::move(c));
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw UsageError("polynomial arity mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw UsageError("polynomial arity mismatch");
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : t_) r.t_.emplace(e, k * c);
    return r;
}

LaurentPoly LaurentPoly::shifted(const IntVec& e) const {
    LaurentPoly r(nvars_);
    for (const auto& [m, c] : t_) r.t_.emplace(ivec_add(m, e), c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    if (nvars_ != o.nvars_) throw UsageError("polynomial arity mismatch");
    LaurentPoly r(nvars_);
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_) r.add_term(ivec_add(e1, e2), c1 * c2);
    return r;
}

LaurentPoly LaurentPoly::pow(i64 e) const {
    if (e < 0) throw UsageError("negative power of a Laurent polynomial");
    LaurentPoly acc = constant(nvars_, 1);
    LaurentPoly b = *this;
    while (e) {
        if (e & 1) acc = acc * b;
        b = b * b;
        e >>= 1;
    }
    return acc;
}

std::string poly_to_text(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        BigInt a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
            first = false;
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mono;
        for (size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (e[i] != 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            os << a.str();
        } else if (a == 1) {
            os << mono;
        } else {
            os << a.str() << "*" << mono;
        }
    }
    return os.str();
}

namespace {

struct TextCursor {
    const std::string& s;
    size_t i = 0;
    void skip_ws() {
        while (i < s.size() && s[i] == ' ') ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
};

i64 parse_int(TextCursor& c) {
    c.skip_ws();
    size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    size_t digits = 0;
    while (c.i < c.s.size() && isdigit(c.s[c.i])) { ++c.i; ++digits; }
    if (!digits) throw ParseError("expected integer at position " + std::to_string(start));
    return std::stoll(c.s.substr(start, c.i - start));
}

} // namespace

LaurentPoly poly_from_text(const std::string& text, int nvars) {
    LaurentPoly p(nvars);
    TextCursor c{text};
    if (c.done()) throw ParseError("empty polynomial text");
    {
        // special-case the zero polynomial
        TextCursor probe = c;
        if (probe.s.substr(probe.i) == "0") return p;
    }
    int sign = 1;
    c.skip_ws();
    if (c.s[c.i] == '-') { sign = -1; ++c.i; }
    while (true) {
        c.skip_ws();
        BigInt coeff = 1;
        bool saw_coeff = false;
        if (c.i < c.s.size() && isdigit(c.s[c.i])) {
            size_t start = c.i;
            while (c.i < c.s.size() && isdigit(c.s[c.i])) ++c.i;
            coeff = BigInt(c.s.substr(start, c.i - start));
            saw_coeff = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') ++c.i;
        }
        IntVec e(nvars, 0);
        bool saw_var = false;
        while (true) {
            c.skip_ws();
            if (c.i >= c.s.size() || c.s[c.i] != 'x') break;
            ++c.i;
            i64 idx = parse_int(c);
            if (idx < 1 || idx > nvars)
                throw ParseError("variable index x" + std::to_string(idx) + " out of range");
            i64 ex = 1;
            if (c.i < c.s.size() && c.s[c.i] == '^') {
                ++c.i;
                ex = parse_int(c);
            }
            e[size_t(idx - 1)] = checked_add(e[size_t(idx - 1)], ex);
            saw_var = true;
            c.skip_ws();
            if (c.i < c.s.size() && c.s[c.i] == '*') { ++c.i; continue; }
            break;
        }
        if (!saw_coeff && !saw_var) throw ParseError("expected term at position " + std::to_string(c.i));
        p.add_term(e, BigInt(sign) * coeff);
        c.skip_ws();
        if (c.i >= c.s.size()) break;
        if (c.s[c.i] == '+') sign = 1;
        else if (c.s[c.i] == '-') sign = -1;
        else throw ParseError("unexpected character '" + std::string(1, c.s[c.i]) + "'");
        ++c.i;
    }
    return p;
}

std::optional<LaurentPoly> divide_exact(const LaurentPoly& p, const LaurentPoly& d, const Seed& s) {
    if (d.is_zero()) throw UsageError("division by zero polynomial");
    if (p.is_zero()) return LaurentPoly::zero(p.nvars());
    const DomSolver& dom = s.dom();

    // Total order: grading first, exponent lex as tiebreak.
    auto key = [&](const IntVec& e) { return std::make_pair(dom.grade(e), e); };
    using Key = std::pair<Rat, IntVec>;

    Key dmin, dmax;
    bool first = true;
    IntVec e0;
    for (const auto& [e, c] : d.terms()) {
        Key k = key(e);
        if (first || k < dmin) { dmin = k; e0 = e; }
        if (first || dmax < k) dmax = k;
        first = false;
    }
    BigInt lead = d.coeff(e0);
    if (lead != 1 && lead != -1)
        throw UsageError("divisor's grading-minimal coefficient must be +-1");
    // Termination needs every other divisor term strictly above the minimal
    // one in the grading (true for copointed divisors and binomial powers).
    for (const auto& [e, c] : d.terms())
        if (e != e0 && !(dom.grade(e0) < dom.grade(e)))
            throw UsageError("divisor is not graded-copointed; division would not terminate");

    Key pmax = key(p.terms().begin()->first);
    for (const auto& [e, c] : p.terms()) pmax = std::max(pmax, key(e));
    // exact quotients live at or below grade(p_max) - grade(d_max)
    Key qbound{pmax.first - dmax.first, ivec_sub(pmax.second, dmax.second)};

    LaurentPoly r = p;
    LaurentPoly q(p.nvars());
    while (!r.is_zero()) {
        IntVec rmin = r.terms().begin()->first;
        Key rk = key(rmin);
        for (const auto& [e, c] : r.terms()) {
            Key k = key(e);
            if (k < rk) { rk = k; rmin = e; }
        }
        IntVec qe = ivec_sub(rmin, e0);
        Key qk = key(qe);
        if (qbound < qk) return std::nullopt;
        BigInt qc = r.coeff(rmin) * lead; // lead is +-1
        q.add_term(qe, qc);
        r = r - d.shifted(qe).scaled(qc);
    }
    return q;
}

LaurentPoly y_variable(const Seed& s, int k) {
    if (!s.is_unfrozen(k)) throw UsageError("y-variable needs an unfrozen vertex");
    return LaurentPoly::monomial(s.btilde().int_column(s.uf_pos(k)));
}

namespace {

std::set<IntVec> extremal_degrees(const LaurentPoly& z, const Seed& s, bool maximal) {
    std::set<IntVec> out;
    const DomSolver& dom = s.dom();
    for (const auto& [e, c] : z.terms()) {
        bool beaten = false;
        for (const auto& [f, c2] : z.terms()) {
            if (e == f) continue;
            bool dominates = maximal ? bool(solve_dominance(e, f, dom))
                                     : bool(solve_dominance(f, e, dom));
            if (dominates) { beaten = true; break; }
        }
        if (!beaten) out.insert(e);
    }
    return out;
}

} // namespace

std::set<IntVec> maximal_degrees(const LaurentPoly& z, const Seed& s) {
    return extremal_degrees(z, s, true);
}

std::set<IntVec> minimal_degrees(const LaurentPoly& z, const Seed& s) {
    return extremal_degrees(z, s, false);
}

std::optional<IntVec> degree(const LaurentPoly& z, const Seed& s) {
    auto m = maximal_degrees(z, s);
    if (m.size() != 1) return std::nullopt;
    return *m.begin();
}

std::optional<IntVec> codegree(const LaurentPoly& z, const Seed& s) {
    auto m = minimal_degrees(z, s);
    if (m.size() != 1) return std::nullopt;
    return *m.begin();
}

bool is_pointed(const LaurentPoly& z, const Seed& s) {
    auto d = degree(z, s);
    return d && z.coeff(*d) == 1;
}

bool is_copointed(const LaurentPoly& z, const Seed& s) {
    auto d = codegree(z, s);
    return d && z.coeff(*d) == 1;
}

bool is_bipointed(const LaurentPoly& z, const Seed& s) {
    return is_pointed(z, s) && is_copointed(z, s);
}

std::optional<Bidegree> bidegree_of(const LaurentPoly& z, const Seed& s) {
    if (!is_bipointed(z, s)) return std::nullopt;
    Bidegree b;
    b.deg = *degree(z, s);
    b.codeg = *codegree(z, s);
    auto n = solve_dominance(b.codeg, b.deg, s.dom());
    if (!n) throw InvariantError("bipointed element whose codegree does not dominate-solve");
    b.supp_dim = *n;
    return b;
}

std::vector<LaurentPoly> cluster_variables_along(const TrackedPath& p) {
    const Seed& base = p.base();
    int n = base.n();
    std::vector<LaurentPoly> vars;
    vars.reserve(n);
    for (int i = 0; i < n; ++i) vars.push_back(LaurentPoly::monomial(unit_vec(n, i)));

    for (int s = 0; s < p.length(); ++s) {
        const Seed& at = p.trail[s];
        int k = p.steps[s];
        LaurentPoly mono_plus = LaurentPoly::constant(n, 1);
        LaurentPoly mono_minus = LaurentPoly::constant(n, 1);
        for (int j = 0; j < n; ++j) {
            i64 bjk = at.b().at(j, k).as_integer();
            if (bjk > 0) mono_plus = mono_plus * vars[j].pow(bjk);
            if (bjk < 0) mono_minus = mono_minus * vars[j].pow(-bjk);
        }
        auto q = divide_exact(mono_plus + mono_minus, vars[k], base);
        if (!q)
            throw InvariantError("exchange relation division inexact: Laurent phenomenon violated");
        vars[k] = *q;
    }
    return vars;
}

std::vector<LaurentPoly> new_variables_along(const TrackedPath& p) {
    std::vector<LaurentPoly> out;
    for (int len = 1; len <= p.length(); ++len) {
        TrackedPath prefix = make_path(p.base());
        for (int s = 0; s < len; ++s) prefix = extend_path(prefix, p.steps[s]);
        out.push_back(cluster_variables_along(prefix)[p.steps[len - 1]]);
    }
    return out;
}

LaurentPoly cluster_monomial(const TrackedPath& p, const IntVec& e) {
    const Seed& cur = p.current();
    if (int(e.size()) != cur.n()) throw UsageError("cluster monomial exponent length mismatch");
    for (int k : cur.unfrozen())
        if (e[k] < 0) throw UsageError("cluster monomial needs nonnegative unfrozen exponents");
    auto vars = cluster_variables_along(p);
    LaurentPoly out = LaurentPoly::constant(p.base().n(), 1);
    for (int i = 0; i < cur.n(); ++i) {
        if (e[i] == 0) continue;
        if (e[i] > 0) {
            out = out * vars[i].pow(e[i]);
        } else {
            // frozen with negative exponent: monomial inverse
            out = out.shifted(ivec_scale(e[i], unit_vec(p.base().n(), i)));
        }
    }
    return out;
}

} // namespace cluster
