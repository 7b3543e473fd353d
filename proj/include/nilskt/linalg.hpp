#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "nilskt/scalar.hpp"

namespace nilskt {

/// Dense matrix of Scalars. Small fixed-size problems only (n <= ~20),
/// exact Gaussian elimination works in either scalar mode.
class Mat {
 public:
  Mat() : rows_(0), cols_(0) {}
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Mat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int i, int j) { return a_[i * cols_ + j]; }
  const Scalar& at(int i, int j) const { return a_[i * cols_ + j]; }

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const Scalar& s) const;
  Mat transpose() const;
  Mat conj() const;

  Scalar det() const;
  /// Rank by Gaussian elimination; float pivots compared against
  /// tol * (largest entry magnitude).
  int rank(double tol = kDefaultTol) const;
  std::optional<Mat> inverse(double tol = kDefaultTol) const;
  /// Solve A x = b for each column of b; empty if singular.
  std::optional<Mat> solve(const Mat& b, double tol = kDefaultTol) const;
  /// Basis of the right kernel, one column per basis vector.
  Mat kernel(double tol = kDefaultTol) const;

  bool near(const Mat& o, double tol = kDefaultTol) const;
  double max_abs() const;

 private:
  // Row-reduce `m` in place (optionally carrying `rhs` along); returns pivot columns.
  static std::vector<int> eliminate(Mat& m, Mat* rhs, double tol);
  int rows_, cols_;
  std::vector<Scalar> a_;
};

/// Sylvester signature (p, q) of a real symmetric matrix, by congruence
/// diagonalisation. Exact mode counts signs exactly.
std::pair<int, int> signature(const Mat& h, double tol = kDefaultTol);

/// Complex 2x2 matrix. Houses the coefficient matrix Y of the family,
/// the Iwasawa parameter X, and consimilarity transforms.
struct Mat2 {
  Scalar a, b, c, d;  // [[a, b], [c, d]]

  static Mat2 identity() { return {Scalar(1), Scalar(0), Scalar(0), Scalar(1)}; }
  static Mat2 zero() { return {Scalar(0), Scalar(0), Scalar(0), Scalar(0)}; }

  Scalar det() const { return a * d - b * c; }
  Scalar tr() const { return a + d; }
  /// Adjugate: M * adj(M) = det(M) * I.
  Mat2 adj() const { return {d, -b, -c, a}; }
  Mat2 conj() const { return {a.conj(), b.conj(), c.conj(), d.conj()}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 scaled(const Scalar& s) const { return {a * s, b * s, c * s, d * s}; }
  Mat2 inverse() const {
    Scalar dt = det();
    if (dt.is_zero(0.0)) throw Error("singular 2x2 matrix");
    return adj().scaled(Scalar(1) / dt);
  }
  bool near(const Mat2& o, double tol = kDefaultTol) const {
    return a.near(o.a, tol) && b.near(o.b, tol) && c.near(o.c, tol) && d.near(o.d, tol);
  }
};

}  // namespace nilskt
