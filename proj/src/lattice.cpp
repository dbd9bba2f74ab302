#include "cluster/lattice.hpp"

namespace cluster {

DomSolver::DomSolver(const Mat& bt) : bt_(bt) {
    if (!bt.is_integer()) throw ConfigError("dominance matrix must be integer");
    if (bt.rank() != bt.cols())
        throw ConfigError("dominance matrix is rank-deficient (full column rank required)");
    Mat btt = bt.transposed();
    Mat gram = btt * bt;
    auto ginv = gram.inverse();
    if (!ginv) throw InvariantError("Gram matrix of full-rank columns is singular");
    s_ = (*ginv) * btt;

    // lambda = ones^T * S  =>  lambda . Bt = ones
    lambda_.assign(bt.rows(), Rat(0));
    for (int j = 0; j < s_.cols(); ++j) {
        Rat c(0);
        for (int i = 0; i < s_.rows(); ++i) c += s_.at(i, j);
        lambda_[j] = c;
    }
}

std::optional<std::vector<Rat>> DomSolver::rational_witness(const IntVec& diff) const {
    if (int(diff.size()) != bt_.rows()) throw UsageError("dominance query dimension mismatch");
    auto n = s_.apply(to_rat_vec(diff));
    // consistency: Bt * n == diff
    auto back = bt_.apply(n);
    for (int i = 0; i < bt_.rows(); ++i)
        if (back[i] != Rat(diff[i])) return std::nullopt;
    return n;
}

std::optional<IntVec> DomSolver::lattice_witness(const IntVec& diff) const {
    auto n = rational_witness(diff);
    if (!n) return std::nullopt;
    return to_int_vec(*n);
}

Rat DomSolver::grade(const IntVec& v) const {
    Rat s(0);
    for (size_t i = 0; i < lambda_.size(); ++i) s += lambda_[i] * Rat(v[i]);
    return s;
}

std::optional<IntVec> solve_dominance(const IntVec& g_from, const IntVec& g_to, const DomSolver& solver) {
    auto n = solver.lattice_witness(ivec_sub(g_from, g_to));
    if (!n || !ivec_nonneg(*n)) return std::nullopt;
    return n;
}

std::optional<IntVec> solve_dominance(const IntVec& g_from, const IntVec& g_to, const Mat& bt) {
    return solve_dominance(g_from, g_to, DomSolver(bt));
}

std::set<IntVec> interval(const IntVec& eta, const IntVec& g, const DomSolver& solver) {
    std::set<IntVec> out;
    auto n = solve_dominance(eta, g, solver);
    if (!n) return out;
    int m = solver.uf();
    IntVec cur(m, 0);
    while (true) {
        IntVec pt = g;
        for (int k = 0; k < m; ++k)
            for (int i = 0; i < solver.ambient(); ++i)
                pt[i] = checked_add(pt[i], checked_mul(cur[k], solver.bt().at(i, k).as_integer()));
        out.insert(pt);
        int k = 0;
        while (k < m && cur[k] == (*n)[k]) { cur[k] = 0; ++k; }
        if (k == m) break;
        ++cur[k];
    }
    return out;
}

std::set<IntVec> interval(const IntVec& eta, const IntVec& g, const Mat& bt) {
    return interval(eta, g, DomSolver(bt));
}

} // namespace cluster
