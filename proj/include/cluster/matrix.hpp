#pragma once

#include "cluster/rational.hpp"

#include <optional>
#include <vector>

namespace cluster {

// Integer vector; length is the ambient dimension (|I| for degree vectors,
// |I_uf| for dominance witnesses / c-vectors).
using IntVec = std::vector<i64>;

IntVec ivec_add(const IntVec& a, const IntVec& b);
IntVec ivec_sub(const IntVec& a, const IntVec& b);
IntVec ivec_neg(const IntVec& a);
IntVec ivec_scale(i64 c, const IntVec& a);
i64 ivec_dot(const IntVec& a, const IntVec& b);
i64 ivec_sum(const IntVec& a);
bool ivec_is_zero(const IntVec& a);
bool ivec_nonneg(const IntVec& a);
IntVec unit_vec(int n, int i);
std::string ivec_str(const IntVec& a); // "(a,b,...)"

// Dense rational matrix.  Row/column index semantics are supplied by the
// caller; extraction helpers take explicit index lists so frozen/unfrozen
// splits are checked rather than positional.
class Mat {
  public:
    Mat() = default;
    Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(size_t(rows) * cols) {}

    static Mat identity(int n);
    static Mat from_int_rows(const std::vector<std::vector<i64>>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rat& at(int r, int c) { return a_[size_t(r) * cols_ + c]; }
    const Rat& at(int r, int c) const { return a_[size_t(r) * cols_ + c]; }

    bool is_integer() const;
    bool is_identity() const;

    Mat transposed() const;
    Mat operator*(const Mat& o) const;
    Mat operator-() const;
    bool operator==(const Mat& o) const;
    bool operator!=(const Mat& o) const { return !(*this == o); }

    // Columns selected by index list (checked).
    Mat select_columns(const std::vector<int>& idx) const;
    Mat select_rows(const std::vector<int>& idx) const;

    IntVec int_column(int c) const;  // throws if non-integer
    std::vector<Rat> apply(const std::vector<Rat>& v) const;
    IntVec apply_int(const IntVec& v) const; // throws if result non-integer

    int rank() const;
    Rat det() const;                     // square only
    std::optional<Mat> inverse() const;  // square only; nullopt if singular

    // Solve A x = b exactly; nullopt if inconsistent.  When the solution
    // space is positive-dimensional, throws (callers here always work with
    // full-column-rank systems).
    std::optional<std::vector<Rat>> solve(const std::vector<Rat>& b) const;

    std::string str() const; // multi-line, exact entries

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

std::vector<Rat> to_rat_vec(const IntVec& v);
std::optional<IntVec> to_int_vec(const std::vector<Rat>& v);

// Exact integer inverse of a unimodular matrix (det = +-1).
// Non-unimodular input raises InvariantError: the matrices this is used on
// (psi matrices, extended G-matrices) are Z-invertible by theory.
Mat int_inverse(const Mat& m);

} // namespace cluster
