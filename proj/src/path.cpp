#include "cluster/path.hpp"

#include <algorithm>

namespace cluster {

bool Permutation::is_identity() const {
    for (size_t i = 0; i < images.size(); ++i)
        if (images[i] != int(i)) return false;
    return true;
}

std::string Permutation::str() const {
    if (is_identity()) return "id";
    std::string s;
    for (size_t i = 0; i < images.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(images[i] + 1);
    }
    return s;
}

TrackedPath make_path(const Seed& base) {
    TrackedPath p;
    p.trail.push_back(base);
    p.C = Mat::identity(base.uf_count());
    p.Gext = Mat::identity(base.n());
    return p;
}

namespace {

// Sign of a coherent column; 0 if mixed or zero.
int column_sign(const Mat& C, int col) {
    bool pos = false, neg = false;
    for (int i = 0; i < C.rows(); ++i) {
        int s = C.at(i, col).sign();
        pos |= s > 0;
        neg |= s < 0;
    }
    if (pos && !neg) return 1;
    if (neg && !pos) return -1;
    return 0;
}

} // namespace

TrackedPath extend_path(const TrackedPath& p, int k) {
    const Seed& cur = p.current();
    if (!cur.is_unfrozen(k)) throw UsageError("cannot extend path at frozen vertex");
    int kp = cur.uf_pos(k);
    int eps = column_sign(p.C, kp);
    if (eps == 0)
        throw InvariantError("c-vector column " + std::to_string(k + 1) +
                             " is not sign-coherent");
    EFPair ef = ef_matrices(cur, k, eps);
    TrackedPath q = p;
    q.C = p.C * ef.F;
    q.Gext = p.Gext * ef.E;
    q.steps.push_back(k);
    q.signs.push_back(eps);
    q.trail.push_back(mutate_matrix(cur, k));
    return q;
}

TrackedPath extend_path(const TrackedPath& p, const std::vector<int>& ks) {
    TrackedPath q = p;
    for (int k : ks) q = extend_path(q, k);
    return q;
}

TrackedPath reversed_path(const TrackedPath& p) {
    TrackedPath q = make_path(p.current());
    for (int s = p.length() - 1; s >= 0; --s) q = extend_path(q, p.steps[s]);
    return q;
}

std::vector<IntVec> g_vectors(const TrackedPath& p) {
    std::vector<IntVec> out;
    for (int j = 0; j < p.Gext.cols(); ++j) out.push_back(p.Gext.int_column(j));
    return out;
}

std::vector<IntVec> c_vectors(const TrackedPath& p) {
    std::vector<IntVec> out;
    for (int j = 0; j < p.C.cols(); ++j) out.push_back(p.C.int_column(j));
    return out;
}

IntVec tropical_transform(const IntVec& g, const Seed& s, int k) {
    if (int(g.size()) != s.n()) throw UsageError("tropical transform dimension mismatch");
    if (!s.is_unfrozen(k)) throw UsageError("tropical transform needs an unfrozen vertex");
    IntVec out(g.size());
    i64 gk = g[k];
    for (int i = 0; i < s.n(); ++i) {
        if (i == k) {
            out[i] = -gk;
        } else {
            i64 bik = s.b().at(i, k).as_integer();
            out[i] = checked_add(g[i], checked_sub(checked_mul(plus_part(bik), plus_part(gk)),
                                                   checked_mul(plus_part(-bik), plus_part(-gk))));
        }
    }
    return out;
}

IntVec phi(const IntVec& g, const TrackedPath& p) {
    IntVec cur = g;
    for (int s = 0; s < p.length(); ++s) cur = tropical_transform(cur, p.trail[s], p.steps[s]);
    return cur;
}

Mat psi_matrix(const TrackedPath& p) {
    int n = p.base().n();
    Mat m(n, n);
    for (int i = 0; i < n; ++i) {
        IntVec col = phi(unit_vec(n, i), p);
        for (int r = 0; r < n; ++r) m.at(r, i) = Rat(col[r]);
    }
    // bijectivity over Z (Lemma: psi is a change of basis by g-vectors)
    int_inverse(m);
    return m;
}

std::optional<Permutation> green_to_red_check(const TrackedPath& p) {
    int m = p.base().uf_count();
    std::vector<int> images(m, -1);
    for (int col = 0; col < m; ++col) {
        int row = -1;
        for (int r = 0; r < m; ++r) {
            const Rat& x = p.C.at(r, col);
            if (x.is_zero()) continue;
            if (x != Rat(-1) || row != -1) return std::nullopt;
            row = r;
        }
        if (row < 0) return std::nullopt;
        images[col] = row;
    }
    std::vector<bool> seen(m, false);
    for (int r : images) {
        if (seen[r]) return std::nullopt;
        seen[r] = true;
    }
    // Negative-chamber proposition forces d_k = d_sigma(k).
    for (int col = 0; col < m; ++col) {
        i64 dk = p.base().weights()[p.base().unfrozen()[col]];
        i64 dsk = p.base().weights()[p.base().unfrozen()[images[col]]];
        if (dk != dsk)
            throw InvariantError("green-to-red endpoint violates d_k = d_sigma(k)");
    }
    return Permutation{images};
}

namespace {

bool g2r_dfs(TrackedPath& p, int depth_left, std::optional<TrackedPath>& found) {
    if (green_to_red_check(p)) {
        found = p;
        return true;
    }
    if (depth_left == 0) return false;
    const Seed& cur = p.current();
    int last = p.steps.empty() ? -1 : p.steps.back();
    std::vector<int> greens, reds;
    for (int k : cur.unfrozen()) {
        if (k == last) continue;
        (column_sign(p.C, cur.uf_pos(k)) > 0 ? greens : reds).push_back(k);
    }
    for (int k : greens) {
        TrackedPath q = extend_path(p, k);
        if (g2r_dfs(q, depth_left - 1, found)) return true;
    }
    for (int k : reds) {
        TrackedPath q = extend_path(p, k);
        if (g2r_dfs(q, depth_left - 1, found)) return true;
    }
    return false;
}

} // namespace

std::optional<TrackedPath> find_green_to_red(const Seed& s, int max_depth) {
    if (max_depth < 1) throw UsageError("green-to-red search needs max_depth >= 1");
    for (int depth = 1; depth <= max_depth; ++depth) {
        TrackedPath p = make_path(s);
        std::optional<TrackedPath> found;
        if (g2r_dfs(p, depth, found)) return found;
    }
    return std::nullopt;
}

namespace {

bool next_sequence(std::vector<int>& seq, const std::vector<int>& uf) {
    // lexicographic successor among sequences over uf without immediate
    // repeats; false when exhausted at this length
    int m = int(uf.size());
    auto pos_of = [&](int v) {
        return int(std::lower_bound(uf.begin(), uf.end(), v) - uf.begin());
    };
    int i = int(seq.size()) - 1;
    while (i >= 0) {
        int pos = pos_of(seq[i]);
        bool advanced = false;
        for (int np = pos + 1; np < m; ++np) {
            if (i > 0 && uf[np] == seq[i - 1]) continue;
            seq[i] = uf[np];
            advanced = true;
            break;
        }
        if (advanced) {
            for (size_t j = i + 1; j < seq.size(); ++j) {
                for (int np = 0; np < m; ++np) {
                    if (uf[np] == seq[j - 1]) continue;
                    seq[j] = uf[np];
                    break;
                }
            }
            return true;
        }
        --i;
    }
    return false;
}

bool first_sequence(std::vector<int>& seq, const std::vector<int>& uf, int len) {
    seq.assign(len, uf[0]);
    for (int j = 1; j < len; ++j) {
        if (int(uf.size()) < 2) return false;
        seq[j] = (seq[j - 1] == uf[0]) ? uf[1] : uf[0];
    }
    return true;
}

} // namespace

std::vector<TrackedPath> enumerate_rank2_paths(const Seed& s, int depth) {
    if (s.uf_count() != 2) throw UsageError("rank-2 path enumeration needs two unfrozen vertices");
    std::vector<TrackedPath> out;
    for (int start = 0; start < 2; ++start) {
        TrackedPath p = make_path(s);
        int k = s.unfrozen()[start];
        for (int len = 1; len <= depth; ++len) {
            p = extend_path(p, k);
            out.push_back(p);
            k = s.unfrozen()[0] == k ? s.unfrozen()[1] : s.unfrozen()[0];
        }
    }
    return out;
}

std::optional<TrackedPath> find_coreachable(const Seed& s, int max_depth) {
    for (int len = 1; len <= max_depth; ++len) {
        std::vector<int> seq;
        if (!first_sequence(seq, s.unfrozen(), len)) continue;
        do {
            Seed tminus = s;
            for (int i = len - 1; i >= 0; --i) tminus = mutate_matrix(tminus, seq[i]);
            TrackedPath fwd = extend_path(make_path(tminus), seq);
            if (green_to_red_check(fwd)) {
                if (!fwd.current().same_matrix(s))
                    throw InvariantError("coreach replay did not return to the start seed");
                return fwd;
            }
        } while (next_sequence(seq, s.unfrozen()));
    }
    return std::nullopt;
}

} // namespace cluster
