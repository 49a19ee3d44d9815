#ifndef PGO_MAT_HPP
#define PGO_MAT_HPP

#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "pgo/padic.hpp"

namespace pgo {

struct singular_matrix : std::domain_error {
  using std::domain_error::domain_error;
};

/// Small dense matrix over an exact field K (Rat or Ext).
template <class K>
class Mat {
 public:
  Mat() : r_(0), c_(0) {}
  Mat(int r, int c) : r_(r), c_(c), a_(static_cast<size_t>(r) * c) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }

  K& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const K& operator()(int i, int j) const {
    return a_[static_cast<size_t>(i) * c_ + j];
  }

  Mat operator+(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + o.a_[i];
    return m;
  }

  Mat operator-(const Mat& o) const {
    assert(r_ == o.r_ && c_ == o.c_);
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - o.a_[i];
    return m;
  }

  Mat operator-() const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = -a_[i];
    return m;
  }

  Mat operator*(const Mat& o) const {
    assert(c_ == o.r_);
    Mat m(r_, o.c_);
    for (int i = 0; i < r_; ++i)
      for (int k = 0; k < c_; ++k) {
        const K& x = (*this)(i, k);
        if (is_zero_val(x)) continue;
        for (int j = 0; j < o.c_; ++j) m(i, j) = m(i, j) + x * o(k, j);
      }
    return m;
  }

  Mat scaled(const K& s) const {
    Mat m(r_, c_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = s * a_[i];
    return m;
  }

  Mat transpose() const {
    Mat m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  Mat conjugate() const {
    Mat m(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(i, j) = conj_val((*this)(i, j));
    return m;
  }

  Mat conj_transpose() const { return conjugate().transpose(); }

  bool operator==(const Mat& o) const {
    if (r_ != o.r_ || c_ != o.c_) return false;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!(a_[i] == o.a_[i])) return false;
    return true;
  }
  bool operator!=(const Mat& o) const { return !(*this == o); }

  bool is_zero() const {
    for (const K& x : a_)
      if (!is_zero_val(x)) return false;
    return true;
  }

  Mat block(int i0, int j0, int nr, int nc) const {
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(i0 + i, j0 + j);
    return m;
  }

  void set_block(int i0, int j0, const Mat& b) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) (*this)(i0 + i, j0 + j) = b(i, j);
  }

  /// Determinant by Gaussian elimination with exact division.
  K det() const {
    assert(r_ == c_);
    Mat m = *this;
    K d = K(1);
    bool neg = false;
    for (int col = 0; col < c_; ++col) {
      int piv = -1;
      for (int i = col; i < r_; ++i)
        if (!is_zero_val(m(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) return K(0);
      if (piv != col) {
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(col, j));
        neg = !neg;
      }
      d = d * m(col, col);
      K pinv = inv_val(m(col, col));
      for (int i = col + 1; i < r_; ++i) {
        if (is_zero_val(m(i, col))) continue;
        K f = m(i, col) * pinv;
        for (int j = col; j < c_; ++j) m(i, j) = m(i, j) - f * m(col, j);
      }
    }
    return neg ? -d : d;
  }

  K leading_minor(int size) const { return block(0, 0, size, size).det(); }
  K trailing_minor(int size) const {
    return block(r_ - size, c_ - size, size, size).det();
  }

  Mat inverse() const {
    assert(r_ == c_);
    int n = r_;
    Mat m = *this;
    Mat inv = identity(n);
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int i = col; i < n; ++i)
        if (!is_zero_val(m(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) throw singular_matrix("singular matrix");
      if (piv != col)
        for (int j = 0; j < n; ++j) {
          std::swap(m(piv, j), m(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      K pinv = inv_val(m(col, col));
      for (int j = 0; j < n; ++j) {
        m(col, j) = pinv * m(col, j);
        inv(col, j) = pinv * inv(col, j);
      }
      for (int i = 0; i < n; ++i) {
        if (i == col || is_zero_val(m(i, col))) continue;
        K f = m(i, col);
        for (int j = 0; j < n; ++j) {
          m(i, j) = m(i, j) - f * m(col, j);
          inv(i, j) = inv(i, j) - f * inv(col, j);
        }
      }
    }
    return inv;
  }

  int rank() const {
    Mat m = *this;
    int rk = 0;
    for (int col = 0; col < c_ && rk < r_; ++col) {
      int piv = -1;
      for (int i = rk; i < r_; ++i)
        if (!is_zero_val(m(i, col))) {
          piv = i;
          break;
        }
      if (piv < 0) continue;
      if (piv != rk)
        for (int j = 0; j < c_; ++j) std::swap(m(piv, j), m(rk, j));
      K pinv = inv_val(m(rk, col));
      for (int i = rk + 1; i < r_; ++i) {
        if (is_zero_val(m(i, col))) continue;
        K f = m(i, col) * pinv;
        for (int j = col; j < c_; ++j) m(i, j) = m(i, j) - f * m(rk, j);
      }
      ++rk;
    }
    return rk;
  }

  /// Anti-diagonal permutation matrix of size n (ones on the second diagonal).
  static Mat anti_identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, n - 1 - i) = K(1);
    return m;
  }

 private:
  int r_, c_;
  std::vector<K> a_;
};

using QMat = Mat<Rat>;
using EMat = Mat<Ext>;

/// Embeds a rational matrix into E.
inline EMat to_ext(const QMat& m, const Rat& twist) {
  EMat e(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) e(i, j) = Ext(m(i, j), Rat(0), twist);
  return e;
}

}  // namespace pgo

#endif  // PGO_MAT_HPP
