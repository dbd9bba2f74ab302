#include "cluster/seed.hpp"

#include <algorithm>
#include <numeric>

namespace cluster {

Mat Seed::extract_btilde(const Mat& b, const std::vector<int>& unfrozen) {
    Mat bt = b.select_columns(unfrozen);
    if (!bt.is_integer()) throw ConfigError("exchange matrix has non-integer unfrozen column");
    return bt;
}

Seed::Seed(int n, std::vector<int> unfrozen, std::vector<i64> weights, Mat b,
           std::vector<std::string> labels)
    : n_(n),
      unfrozen_(std::move(unfrozen)),
      weights_(std::move(weights)),
      b_(std::move(b)),
      btilde_(extract_btilde(b_, unfrozen_)),
      labels_(std::move(labels)),
      dom_(btilde_) {
    if (n_ <= 0) throw ConfigError("seed needs at least one vertex");
    if (b_.rows() != n_ || b_.cols() != n_) throw ConfigError("exchange matrix must be n x n");
    if (int(weights_.size()) != n_) throw ConfigError("weight list length mismatch");
    for (i64 d : weights_)
        if (d <= 0) throw ConfigError("symmetrizer weights must be positive");
    if (unfrozen_.empty()) throw ConfigError("seed needs at least one unfrozen vertex");
    for (size_t i = 0; i < unfrozen_.size(); ++i) {
        if (unfrozen_[i] < 0 || unfrozen_[i] >= n_) throw ConfigError("unfrozen index out of range");
        if (i > 0 && unfrozen_[i] <= unfrozen_[i - 1])
            throw ConfigError("unfrozen indices must be strictly increasing");
    }
    frozen_.clear();
    for (int i = 0; i < n_; ++i)
        if (!is_unfrozen(i)) frozen_.push_back(i);
    if (!labels_.empty() && int(labels_.size()) != n_)
        throw ConfigError("label list length mismatch");

    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            bool both_frozen = !is_unfrozen(i) && !is_unfrozen(j);
            if (!both_frozen && !b_.at(i, j).is_integer())
                throw ConfigError("entry b(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") must be an integer outside the frozen block");
            if (Rat(weights_[i]) * b_.at(i, j) != -(Rat(weights_[j]) * b_.at(j, i)))
                throw ConfigError("skew-symmetrizability fails at pair (" + std::to_string(i + 1) +
                                  "," + std::to_string(j + 1) + ")");
        }
    // DomSolver construction has already verified full column rank of btilde_.
}

bool Seed::is_unfrozen(int i) const {
    return std::binary_search(unfrozen_.begin(), unfrozen_.end(), i);
}

int Seed::uf_pos(int i) const {
    auto it = std::lower_bound(unfrozen_.begin(), unfrozen_.end(), i);
    if (it == unfrozen_.end() || *it != i) return -1;
    return int(it - unfrozen_.begin());
}

std::string Seed::label(int i) const {
    if (!labels_.empty() && !labels_[i].empty()) return labels_[i];
    return "x" + std::to_string(i + 1);
}

bool Seed::is_skew_symmetric() const {
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (b_.at(i, j) != -b_.at(j, i)) return false;
    return true;
}

bool Seed::same_matrix(const Seed& o) const {
    return n_ == o.n_ && unfrozen_ == o.unfrozen_ && weights_ == o.weights_ && b_ == o.b_;
}

Seed mutate_matrix(const Seed& s, int k) {
    if (!s.is_unfrozen(k)) throw UsageError("mutation at frozen vertex " + std::to_string(k + 1));
    // eps = +; the result is sign-independent.
    int n = s.n();
    Mat nb(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == k || j == k) {
                nb.at(i, j) = -s.b().at(i, j);
            } else {
                nb.at(i, j) = s.b().at(i, j) +
                              s.b().at(i, k) * plus_part(s.b().at(k, j)) +
                              plus_part(-s.b().at(i, k)) * s.b().at(k, j);
            }
        }
    return Seed(n, s.unfrozen(), s.weights(), std::move(nb), s.labels());
}

EFPair ef_matrices(const Seed& s, int k, int eps) {
    if (!s.is_unfrozen(k)) throw UsageError("E/F matrices need an unfrozen vertex");
    if (eps != 1 && eps != -1) throw UsageError("sign must be +-1");
    int n = s.n();
    int m = s.uf_count();
    int kp = s.uf_pos(k);

    Mat E = Mat::identity(n);
    for (int i = 0; i < n; ++i)
        E.at(i, k) = (i == k) ? Rat(-1) : plus_part(Rat(-eps) * s.b().at(i, k));

    Mat F = Mat::identity(m);
    for (int jp = 0; jp < m; ++jp) {
        int j = s.unfrozen()[jp];
        F.at(kp, jp) = (jp == kp) ? Rat(-1) : plus_part(Rat(eps) * s.b().at(k, j));
    }
    return {std::move(E), std::move(F)};
}

Seed extend_full_matrix(const Mat& bt, const std::vector<i64>& d_uf) {
    int n = bt.rows();
    int m = bt.cols();
    if (m > n) throw ConfigError("extension input must have at least as many rows as columns");
    if (int(d_uf.size()) != m) throw ConfigError("extension weight list length mismatch");
    if (!bt.is_integer()) throw ConfigError("extension input must be integer");

    i64 d = 1;
    for (i64 w : d_uf) {
        if (w <= 0) throw ConfigError("extension weights must be positive");
        d = std::lcm(d, w);
    }

    Mat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) b.at(i, j) = bt.at(i, j);
    for (int k = 0; k < m; ++k)
        for (int f = m; f < n; ++f)
            b.at(k, f) = Rat(-(d / d_uf[k])) * bt.at(f, k);
    // frozen x frozen block stays zero

    std::vector<int> uf(m);
    std::iota(uf.begin(), uf.end(), 0);
    std::vector<i64> w = d_uf;
    w.resize(n, d);
    return Seed(n, uf, w, std::move(b));
}

Seed opposite_seed(const Seed& s) {
    return Seed(s.n(), s.unfrozen(), s.weights(), -s.b(), s.labels());
}

Seed langlands_dual(const Seed& s) {
    i64 d = 1;
    for (i64 w : s.weights()) d = std::lcm(d, w);
    int n = s.n();
    Mat b(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = -s.b().at(j, i);
    std::vector<i64> w(n);
    for (int i = 0; i < n; ++i) w[i] = d / s.weights()[i];
    return Seed(n, s.unfrozen(), std::move(w), std::move(b), s.labels());
}

Seed principal_framing(const Seed& s, std::optional<int> excluded) {
    std::vector<int> framed;
    for (int i : s.unfrozen())
        if (!excluded || *excluded != i) framed.push_back(i);
    int n = s.n();
    int nn = n + int(framed.size());
    Mat b(nn, nn);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b.at(i, j) = s.b().at(i, j);
    for (size_t a = 0; a < framed.size(); ++a) {
        int ip = n + int(a);
        int i = framed[a];
        b.at(ip, i) = Rat(1);
        b.at(i, ip) = Rat(-1);
    }
    std::vector<i64> w = s.weights();
    std::vector<std::string> labels = s.labels();
    labels.resize(n);
    for (size_t a = 0; a < framed.size(); ++a) {
        w.push_back(s.weights()[framed[a]]);
        labels.push_back(s.label(framed[a]) + "'");
    }
    return Seed(nn, s.unfrozen(), std::move(w), std::move(b), std::move(labels));
}

Seed make_skew_symmetric_seed(const std::vector<std::vector<i64>>& b_rows) {
    int n = int(b_rows.size());
    std::vector<int> uf(n);
    std::iota(uf.begin(), uf.end(), 0);
    return Seed(n, uf, std::vector<i64>(n, 1), Mat::from_int_rows(b_rows));
}

Seed kronecker_seed() { return make_skew_symmetric_seed({{0, -2}, {2, 0}}); }

Seed a2_seed() { return make_skew_symmetric_seed({{0, -1}, {1, 0}}); }

} // namespace cluster
