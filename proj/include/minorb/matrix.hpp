#ifndef MINORB_MATRIX_HPP
#define MINORB_MATRIX_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "minorb/numeric.hpp"

namespace minorb {

using Vec = std::vector<GQ>;

/// Dense exact matrix over Gaussian rationals. Row-major. All linear algebra
/// on it is exact; modular ranks are advisory cross-checks, never results.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = GQ(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GQ& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
  const GQ& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Mat conj() const {
    Mat t(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(r, c) = (*this)(r, c).conj();
    return t;
  }

  Mat conj_transpose() const { return transpose().conj(); }

  friend Mat operator+(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
    return r;
  }
  friend Mat operator-(const Mat& x, const Mat& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw std::invalid_argument("matrix shape mismatch");
    Mat r(x.rows_, x.cols_);
    for (std::size_t i = 0; i < x.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
    return r;
  }
  friend Mat operator*(const Mat& x, const Mat& y) {
    if (x.cols_ != y.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Mat r(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
      for (int k = 0; k < x.cols_; ++k) {
        const GQ& v = x(i, k);
        if (v.is_zero()) continue;
        for (int j = 0; j < y.cols_; ++j) {
          const GQ& w = y(k, j);
          if (w.is_zero()) continue;
          r(i, j) += v * w;
        }
      }
    return r;
  }
  friend Mat operator*(const GQ& s, Mat m) {
    for (auto& x : m.a_) x *= s;
    return m;
  }
  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  Vec apply(const Vec& v) const {
    if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("matrix apply shape mismatch");
    Vec r(rows_, GQ(0));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        const GQ& w = (*this)(i, j);
        if (!w.is_zero() && !v[j].is_zero()) r[i] += w * v[j];
      }
    return r;
  }

  void set_col(int c, const Vec& v) {
    for (int r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }
  Vec col(int c) const {
    Vec v(rows_);
    for (int r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

 private:
  int rows_, cols_;
  std::vector<GQ> a_;
};

inline Vec vec_add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline Vec vec_scale(const GQ& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}
inline bool vec_is_zero(const Vec& a) {
  for (auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

/// Row echelon factorization of an exact matrix, reused for rank, nullspace
/// and repeated solves. Gauss-Jordan with first-nonzero pivoting
/// (deterministic); entries stay canonical mpq ratios throughout.
class Echelon {
 public:
  explicit Echelon(const Mat& m) : cols_(m.cols()) {
    for (int r = 0; r < m.rows(); ++r) {
      Vec row(m.cols());
      for (int c = 0; c < m.cols(); ++c) row[c] = m(r, c);
      insert(std::move(row));
    }
  }
  Echelon(int cols) : cols_(cols) {}

  /// Reduce a row against the current echelon; if a new pivot survives,
  /// absorb it and return true.
  bool insert(Vec row) {
    reduce(row);
    int p = pivot_col(row);
    if (p < 0) return false;
    GQ lead = row[p];
    for (auto& x : row) x /= lead;
    // back-substitute into existing rows to keep the echelon reduced
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      GQ& v = rows_[i][p];
      if (!v.is_zero()) {
        GQ f = v;
        for (int c = p; c < cols_; ++c)
          if (!row[c].is_zero()) rows_[i][c] -= f * row[c];
      }
    }
    std::size_t at = 0;
    while (at < pivots_.size() && pivots_[at] < p) ++at;
    pivots_.insert(pivots_.begin() + at, p);
    rows_.insert(rows_.begin() + at, std::move(row));
    return true;
  }

  void reduce(Vec& row) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      GQ& v = row[pivots_[i]];
      if (v.is_zero()) continue;
      GQ f = v;
      const Vec& er = rows_[i];
      for (int c = pivots_[i]; c < cols_; ++c)
        if (!er[c].is_zero()) row[c] -= f * er[c];
    }
  }

  /// Coordinates of `v` in the span of the inserted rows (in insertion-pivot
  /// order is not preserved, so callers needing expansion coefficients track
  /// them separately); here we only test membership.
  bool in_span(Vec v) const {
    reduce(v);
    return vec_is_zero(v);
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }
  const std::vector<int>& pivots() const { return pivots_; }
  const std::vector<Vec>& rows() const { return rows_; }

  /// Basis of the right nullspace of the row span, one vector per free column.
  std::vector<Vec> nullspace_basis() const {
    std::vector<bool> is_pivot(cols_, false);
    for (int p : pivots_) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (int c = 0; c < cols_; ++c) {
      if (is_pivot[c]) continue;
      Vec v(cols_, GQ(0));
      v[c] = GQ(1);
      for (std::size_t i = 0; i < rows_.size(); ++i) v[pivots_[i]] = -rows_[i][c];
      basis.push_back(std::move(v));
    }
    return basis;
  }

 private:
  static int pivot_col(const Vec& row) {
    for (std::size_t c = 0; c < row.size(); ++c)
      if (!row[c].is_zero()) return static_cast<int>(c);
    return -1;
  }

  int cols_;
  std::vector<int> pivots_;
  std::vector<Vec> rows_;
};

inline int exact_rank(const Mat& m) { return Echelon(m).rank(); }

inline std::vector<Vec> nullspace(const Mat& m) { return Echelon(m).nullspace_basis(); }

enum class SolveStatus { ok, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status;
  Vec x;  // valid when status == ok
};

/// Solve A x = b exactly. Inconsistency is reported distinctly from rank
/// deficiency of A (underdetermined systems with a consistent rhs pick the
/// pivot-column solution only when the solution is unique).
inline SolveResult solve(const Mat& a, const Vec& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: rhs dimension");
  // eliminate on [A | b]
  Mat aug(a.rows(), a.cols() + 1);
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  Echelon e(aug);
  for (std::size_t i = 0; i < e.pivots().size(); ++i)
    if (e.pivots()[i] == a.cols()) return {SolveStatus::inconsistent, {}};
  if (e.rank() < a.cols()) return {SolveStatus::underdetermined, {}};
  Vec x(a.cols(), GQ(0));
  for (std::size_t i = 0; i < e.pivots().size(); ++i) x[e.pivots()[i]] = e.rows()[i][a.cols()];
  return {SolveStatus::ok, std::move(x)};
}

/// Solve A X = B columnwise via one factorization of A (A must have full
/// column rank and every column of B must be consistent; throws otherwise).
class ColumnSolver {
 public:
  explicit ColumnSolver(const Mat& a) : a_(a) {
    int m = a.rows(), n = a.cols();
    ops_ = Mat::identity(m);
    work_ = a;
    perm_.clear();
    for (int c = 0; c < n; ++c) {
      int piv = -1;
      for (int r = static_cast<int>(perm_.size()); r < m; ++r)
        if (!work_(r, c).is_zero()) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::runtime_error("ColumnSolver: matrix does not have full column rank");
      int dst = static_cast<int>(perm_.size());
      swap_rows(piv, dst);
      GQ inv = work_(dst, c).inv();
      scale_row(dst, inv);
      for (int r = 0; r < m; ++r) {
        if (r == dst) continue;
        GQ f = work_(r, c);
        if (!f.is_zero()) axpy_row(r, dst, f);
      }
      perm_.push_back(c);
    }
  }

  /// x with A x = b; throws if inconsistent.
  Vec solve(const Vec& b) const {
    int m = a_.rows(), n = a_.cols();
    Vec y(m, GQ(0));
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < m; ++c)
        if (!ops_(r, c).is_zero() && !b[c].is_zero()) y[r] += ops_(r, c) * b[c];
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = y[i];
    for (int r = n; r < m; ++r)
      if (!y[r].is_zero()) throw std::runtime_error("ColumnSolver: inconsistent right-hand side");
    return x;
  }

 private:
  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int c = 0; c < work_.cols(); ++c) std::swap(work_(i, c), work_(j, c));
    for (int c = 0; c < ops_.cols(); ++c) std::swap(ops_(i, c), ops_(j, c));
  }
  void scale_row(int i, const GQ& s) {
    for (int c = 0; c < work_.cols(); ++c) work_(i, c) *= s;
    for (int c = 0; c < ops_.cols(); ++c) ops_(i, c) *= s;
  }
  void axpy_row(int dst, int src, const GQ& f) {
    for (int c = 0; c < work_.cols(); ++c)
      if (!work_(src, c).is_zero()) work_(dst, c) -= f * work_(src, c);
    for (int c = 0; c < ops_.cols(); ++c)
      if (!ops_(src, c).is_zero()) ops_(dst, c) -= f * ops_(src, c);
  }

  Mat a_;
  Mat ops_;   // accumulated row operations: ops_ * A = [I; 0]
  Mat work_;
  std::vector<int> perm_;
};

/// Exact inverse of a square full-rank matrix.
inline Mat inverse(const Mat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse: square matrix required");
  ColumnSolver cs(a);
  Mat inv(a.rows(), a.cols());
  for (int c = 0; c < a.cols(); ++c) {
    Vec e(a.rows(), GQ(0));
    e[c] = GQ(1);
    inv.set_col(c, cs.solve(e));
  }
  return inv;
}

}  // namespace minorb

#endif
