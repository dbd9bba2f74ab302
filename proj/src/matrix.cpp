#include "cluster/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace cluster {

IntVec ivec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVec ivec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVec ivec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
    return r;
}

IntVec ivec_scale(i64 c, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(c, a[i]);
    return r;
}

i64 ivec_dot(const IntVec& a, const IntVec& b) {
    i64 s = 0;
    for (size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

i64 ivec_sum(const IntVec& a) {
    i64 s = 0;
    for (i64 x : a) s = checked_add(s, x);
    return s;
}

bool ivec_is_zero(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x == 0; });
}

bool ivec_nonneg(const IntVec& a) {
    return std::all_of(a.begin(), a.end(), [](i64 x) { return x >= 0; });
}

IntVec unit_vec(int n, int i) {
    IntVec r(n, 0);
    r[i] = 1;
    return r;
}

std::string ivec_str(const IntVec& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + ")";
}

Mat Mat::identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rat(1);
    return m;
}

Mat Mat::from_int_rows(const std::vector<std::vector<i64>>& rows) {
    int r = int(rows.size());
    int c = r ? int(rows[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (int(rows[i].size()) != c) throw ConfigError("ragged matrix rows");
        for (int j = 0; j < c; ++j) m.at(i, j) = Rat(rows[i][j]);
    }
    return m;
}

bool Mat::is_integer() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rat& x) { return x.is_integer(); });
}

bool Mat::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (at(i, j) != Rat(i == j ? 1 : 0)) return false;
    return true;
}

Mat Mat::transposed() const {
    Mat m(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw UsageError("matrix product dimension mismatch");
    Mat m(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rat& x = at(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) m.at(i, j) += x * o.at(k, j);
        }
    return m;
}

Mat Mat::operator-() const {
    Mat m(rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
}

bool Mat::operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Mat Mat::select_columns(const std::vector<int>& idx) const {
    Mat m(rows_, int(idx.size()));
    for (size_t j = 0; j < idx.size(); ++j) {
        if (idx[j] < 0 || idx[j] >= cols_) throw UsageError("column index out of range");
        for (int i = 0; i < rows_; ++i) m.at(i, int(j)) = at(i, idx[j]);
    }
    return m;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
    Mat m(int(idx.size()), cols_);
    for (size_t i = 0; i < idx.size(); ++i) {
        if (idx[i] < 0 || idx[i] >= rows_) throw UsageError("row index out of range");
        for (int j = 0; j < cols_; ++j) m.at(int(i), j) = at(idx[i], j);
    }
    return m;
}

IntVec Mat::int_column(int c) const {
    IntVec v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c).as_integer();
    return v;
}

std::vector<Rat> Mat::apply(const std::vector<Rat>& v) const {
    if (int(v.size()) != cols_) throw UsageError("matrix apply dimension mismatch");
    std::vector<Rat> r(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rat s(0);
        for (int j = 0; j < cols_; ++j) s += at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

IntVec Mat::apply_int(const IntVec& v) const {
    auto r = apply(to_rat_vec(v));
    auto iv = to_int_vec(r);
    if (!iv) throw InvariantError("expected integer matrix-vector product");
    return *iv;
}

namespace {

// Row echelon form by exact rational elimination.  Returns pivot column
// per row (used by rank / solve / inverse).
struct Echelon {
    std::vector<std::vector<Rat>> a;
    std::vector<int> pivot_col;
};

Echelon echelon(std::vector<std::vector<Rat>> a) {
    Echelon e;
    int rows = int(a.size());
    int cols = rows ? int(a[0].size()) : 0;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) continue;
        std::swap(a[r], a[p]);
        Rat inv = Rat(1) / a[r][c];
        for (int j = c; j < cols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat f = a[i][c];
            for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        e.pivot_col.push_back(c);
        ++r;
    }
    e.a = std::move(a);
    return e;
}

std::vector<std::vector<Rat>> to_rows(const Mat& m, int extra = 0) {
    std::vector<std::vector<Rat>> rows(m.rows(), std::vector<Rat>(m.cols() + extra));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[i][j] = m.at(i, j);
    return rows;
}

} // namespace

int Mat::rank() const {
    return int(echelon(to_rows(*this)).pivot_col.size());
}

Rat Mat::det() const {
    if (rows_ != cols_) throw UsageError("determinant of non-square matrix");
    auto a = to_rows(*this);
    Rat d(1);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!a[i][c].is_zero()) { p = i; break; }
        if (p < 0) return Rat(0);
        if (p != c) { std::swap(a[p], a[c]); d = -d; }
        d *= a[c][c];
        Rat inv = Rat(1) / a[c][c];
        for (int i = c + 1; i < rows_; ++i) {
            if (a[i][c].is_zero()) continue;
            Rat f = a[i][c] * inv;
            for (int j = c; j < cols_; ++j) a[i][j] -= f * a[c][j];
        }
    }
    return d;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) throw UsageError("inverse of non-square matrix");
    auto rows = to_rows(*this, rows_);
    for (int i = 0; i < rows_; ++i) rows[i][cols_ + i] = Rat(1);
    Echelon e = echelon(std::move(rows));
    if (int(e.pivot_col.size()) != rows_) return std::nullopt;
    Mat inv(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = e.a[i][cols_ + j];
    return inv;
}

std::optional<std::vector<Rat>> Mat::solve(const std::vector<Rat>& b) const {
    if (int(b.size()) != rows_) throw UsageError("solve dimension mismatch");
    auto rows = to_rows(*this, 1);
    for (int i = 0; i < rows_; ++i) rows[i][cols_] = b[i];
    Echelon e = echelon(std::move(rows));
    std::vector<Rat> x(cols_, Rat(0));
    int nr = int(e.pivot_col.size());
    for (int r = 0; r < nr; ++r) {
        if (e.pivot_col[r] == cols_) return std::nullopt; // pivot in rhs: inconsistent
    }
    if (nr < cols_) throw UsageError("solve: rank-deficient system (solution not unique)");
    for (int r = 0; r < nr; ++r) x[e.pivot_col[r]] = e.a[r][cols_];
    return x;
}

std::string Mat::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << at(i, j).str();
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Rat> to_rat_vec(const IntVec& v) {
    std::vector<Rat> r(v.size());
    for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
    return r;
}

std::optional<IntVec> to_int_vec(const std::vector<Rat>& v) {
    IntVec r(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_integer()) return std::nullopt;
        r[i] = narrow(v[i].num);
    }
    return r;
}

Mat int_inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw UsageError("int_inverse: matrix not square");
    if (!m.is_integer()) throw UsageError("int_inverse: matrix not integer");
    Rat d = m.det();
    if (!(d == Rat(1) || d == Rat(-1)))
        throw InvariantError("int_inverse: matrix not unimodular (det = " + d.str() + ")");
    auto inv = m.inverse();
    if (!inv || !inv->is_integer()) throw InvariantError("int_inverse: inverse not integral");
    return *inv;
}

} // namespace cluster
