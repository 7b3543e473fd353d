#include "nilskt/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace nilskt {

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (cols_ != o.rows_) throw Error("matrix product shape mismatch");
  Mat r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Scalar& aik = at(i, k);
      if (aik.is_zero(0.0)) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += aik * o.at(k, j);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

Mat Mat::scaled(const Scalar& s) const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * s;
  return r;
}

Mat Mat::transpose() const {
  Mat r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::conj() const {
  Mat r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conj();
  return r;
}

double Mat::max_abs() const {
  double m = 0;
  for (const auto& s : a_) m = std::max(m, s.abs());
  return m;
}

bool Mat::near(const Mat& o, double tol) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  for (size_t i = 0; i < a_.size(); ++i)
    if (!a_[i].near(o.a_[i], tol)) return false;
  return true;
}

std::vector<int> Mat::eliminate(Mat& m, Mat* rhs, double tol) {
  double scale = std::max(1.0, m.max_abs());
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols_ && row < m.rows_; ++col) {
    // Exact mode: first nonzero (lexicographic pivoting). Float: largest.
    int piv = -1;
    double best = tol * scale;
    for (int i = row; i < m.rows_; ++i) {
      const Scalar& s = m.at(i, col);
      if (s.is_exact()) {
        if (!s.is_zero()) {
          piv = i;
          break;
        }
      } else if (s.abs() > best) {
        piv = i;
        best = s.abs();
      }
    }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
    if (rhs)
      for (int j = 0; j < rhs->cols_; ++j) std::swap(rhs->at(piv, j), rhs->at(row, j));
    Scalar inv = Scalar(1) / m.at(row, col);
    for (int j = 0; j < m.cols_; ++j) m.at(row, j) = m.at(row, j) * inv;
    if (rhs)
      for (int j = 0; j < rhs->cols_; ++j) rhs->at(row, j) = rhs->at(row, j) * inv;
    for (int i = 0; i < m.rows_; ++i) {
      if (i == row) continue;
      Scalar f = m.at(i, col);
      if (f.is_zero(0.0)) continue;
      for (int j = 0; j < m.cols_; ++j) m.at(i, j) -= f * m.at(row, j);
      if (rhs)
        for (int j = 0; j < rhs->cols_; ++j) rhs->at(i, j) -= f * rhs->at(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

Scalar Mat::det() const {
  if (rows_ != cols_) throw Error("det of non-square matrix");
  Mat m = *this;
  Scalar d(1);
  int row = 0;
  for (int col = 0; col < cols_; ++col) {
    int piv = -1;
    double best = 0;
    for (int i = row; i < rows_; ++i) {
      const Scalar& s = m.at(i, col);
      if (s.is_exact()) {
        if (!s.is_zero()) {
          piv = i;
          break;
        }
      } else if (s.abs() > best) {
        piv = i;
        best = s.abs();
      }
    }
    if (piv < 0) return Scalar(0) * d;  // keeps mode
    if (piv != row) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(row, j));
      d = -d;
    }
    d = d * m.at(row, col);
    Scalar inv = Scalar(1) / m.at(row, col);
    for (int i = row + 1; i < rows_; ++i) {
      Scalar f = m.at(i, col) * inv;
      if (f.is_zero(0.0)) continue;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(row, j);
    }
    ++row;
  }
  return d;
}

int Mat::rank(double tol) const {
  Mat m = *this;
  return static_cast<int>(eliminate(m, nullptr, tol).size());
}

std::optional<Mat> Mat::inverse(double tol) const {
  if (rows_ != cols_) throw Error("inverse of non-square matrix");
  Mat m = *this;
  Mat rhs = identity(rows_);
  if (static_cast<int>(eliminate(m, &rhs, tol).size()) != rows_) return std::nullopt;
  return rhs;
}

std::optional<Mat> Mat::solve(const Mat& b, double tol) const {
  if (rows_ != b.rows()) throw Error("solve shape mismatch");
  Mat m = *this;
  Mat rhs = b;
  auto pivots = eliminate(m, &rhs, tol);
  if (static_cast<int>(pivots.size()) != cols_) return std::nullopt;
  // Overdetermined consistency: rows beyond the pivots must be zero.
  double scale = std::max(1.0, b.max_abs());
  for (int i = cols_; i < rows_; ++i)
    for (int j = 0; j < rhs.cols(); ++j)
      if (!rhs.at(i, j).is_zero(tol * scale)) return std::nullopt;
  Mat x(cols_, rhs.cols());
  for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
    for (int j = 0; j < rhs.cols(); ++j) x.at(pivots[r], j) = rhs.at(r, j);
  return x;
}

Mat Mat::kernel(double tol) const {
  Mat m = *this;
  auto pivots = eliminate(m, nullptr, tol);
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  int nfree = cols_ - static_cast<int>(pivots.size());
  Mat k(cols_, nfree);
  int col = 0;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    k.at(free, col) = Scalar(1);
    for (int r = 0; r < static_cast<int>(pivots.size()); ++r)
      k.at(pivots[r], col) = -m.at(r, free);
    ++col;
  }
  return k;
}

std::pair<int, int> signature(const Mat& h, double tol) {
  if (h.rows() != h.cols()) throw Error("signature of non-square matrix");
  int n = h.rows();
  Mat m = h;
  double scale = std::max(1.0, m.max_abs());
  int pos = 0, neg = 0;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    // Find the strongest remaining diagonal pivot.
    int piv = -1;
    double best = tol * scale;
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      const Scalar& s = m.at(i, i);
      if (s.is_exact()) {
        if (!s.is_zero() && piv < 0) piv = i;
      } else if (s.abs() > best) {
        best = s.abs();
        piv = i;
      }
    }
    if (piv < 0) {
      // All remaining diagonal entries vanish; pull in an off-diagonal
      // entry via the congruence x_i -> x_i + x_j, or stop if none left.
      int bi = -1, bj = -1;
      double bo = tol * scale;
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        for (int j = i + 1; j < n; ++j) {
          if (done[j]) continue;
          const Scalar& s = m.at(i, j);
          if (s.is_exact() ? !s.is_zero() : s.abs() > bo) {
            bi = i;
            bj = j;
            if (!s.is_exact()) bo = s.abs();
          }
        }
      }
      if (bi < 0) break;  // remaining block is zero
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        m.at(bi, k) += m.at(bj, k);
      }
      for (int k = 0; k < n; ++k) {
        if (done[k]) continue;
        m.at(k, bi) += m.at(k, bj);
      }
      --step;
      continue;
    }
    int s = m.at(piv, piv).sign_real(tol * scale);
    if (s > 0) ++pos;
    else ++neg;
    Scalar inv = Scalar(1) / m.at(piv, piv);
    for (int i = 0; i < n; ++i) {
      if (done[i] || i == piv) continue;
      Scalar f = m.at(i, piv) * inv;
      if (f.is_zero(0.0)) continue;
      for (int j = 0; j < n; ++j) {
        if (done[j]) continue;
        m.at(i, j) -= f * m.at(piv, j);
      }
    }
    for (int j = 0; j < n; ++j) {
      if (done[j] || j == piv) continue;
      m.at(piv, j) = Scalar(0);
      m.at(j, piv) = Scalar(0);
    }
    done[piv] = true;
  }
  return {pos, neg};
}

}  // namespace nilskt
