#pragma once

// Smith normal form and the lattice quantities derived from it.
//
// Everything here is templated on the scalar of the Eigen expression passed in,
// so the same code runs on llc::Integer and on builtin integers (the latter only
// when the caller knows entries stay small).

#include "llc/errors.hpp"
#include "llc/integer.hpp"

#include <Eigen/Core>

#include <algorithm>
#include <optional>
#include <utility>

namespace llc {

template <typename Scalar>
struct SmithDecomposition {
  Matrix<Scalar> U;  // rows x rows, unimodular
  Matrix<Scalar> D;  // rows x cols, diagonal, d_1 | d_2 | ... , nonnegative
  Matrix<Scalar> V;  // cols x cols, unimodular
  Eigen::Index rank = 0;

  /// Diagonal entries d_1, ..., d_min(rows, cols), zeros included.
  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> out;
    const Eigen::Index m = std::min(D.rows(), D.cols());
    out.reserve(static_cast<std::size_t>(m));
    for (Eigen::Index i = 0; i < m; ++i) out.push_back(D(i, i));
    return out;
  }
};

namespace detail {

template <typename Scalar>
Scalar abs_value(const Scalar& x) {
  return x < 0 ? Scalar(-x) : x;
}

// Smallest |entry| != 0 in D[t:, t:], scanned row-major so ties go to the
// smaller row index and then the smaller column index.
template <typename Scalar>
std::optional<std::pair<Eigen::Index, Eigen::Index>> smallest_pivot(const Matrix<Scalar>& d,
                                                                   Eigen::Index t) {
  std::optional<std::pair<Eigen::Index, Eigen::Index>> best;
  Scalar best_abs = 0;
  for (Eigen::Index i = t; i < d.rows(); ++i) {
    for (Eigen::Index j = t; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Scalar v = abs_value(d(i, j));
      if (!best || v < best_abs) {
        best = {i, j};
        best_abs = v;
      }
    }
  }
  return best;
}

}  // namespace detail

/// Computes U, D, V with U * A * V = D.
///
/// Pivoting always moves the smallest nonzero entry of the active block to the
/// corner, so the output is deterministic for a given input. D is unique.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();

  SmithDecomposition<Scalar> out;
  out.D = a;
  out.U = Matrix<Scalar>::Identity(rows, rows);
  out.V = Matrix<Scalar>::Identity(cols, cols);
  auto& D = out.D;
  auto& U = out.U;
  auto& V = out.V;

  Eigen::Index t = 0;
  for (; t < std::min(rows, cols); ++t) {
    bool empty_block = false;
    for (;;) {
      auto pivot = detail::smallest_pivot(D, t);
      if (!pivot) {
        empty_block = true;
        break;
      }
      auto [pi, pj] = *pivot;
      if (pi != t) {
        D.row(t).swap(D.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        D.col(t).swap(D.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (D(i, t) == 0) continue;
        const Scalar f = D(i, t) / D(t, t);
        D.row(i) -= f * D.row(t);
        U.row(i) -= f * U.row(t);
        if (D(i, t) != 0) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (D(t, j) == 0) continue;
        const Scalar f = D(t, j) / D(t, t);
        D.col(j) -= f * D.col(t);
        V.col(j) -= f * V.col(t);
        if (D(t, j) != 0) clean = false;
      }
      if (!clean) continue;  // a remainder smaller than the pivot is now in the block

      // Divisibility: fold an offending row into the pivot row and go again.
      bool divisible = true;
      for (Eigen::Index i = t + 1; i < rows && divisible; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (D(i, j) % D(t, t) != 0) {
            D.row(t) += D.row(i);
            U.row(t) += U.row(i);
            divisible = false;
            break;
          }
        }
      }
      if (divisible) break;
    }
    if (empty_block) break;
    if (D(t, t) < 0) {
      D.row(t) = -D.row(t);
      U.row(t) = -U.row(t);
    }
  }
  out.rank = t;
  return out;
}

template <typename Derived>
Eigen::Index matrix_rank(const Eigen::MatrixBase<Derived>& a) {
  return smith_normal_form(a).rank;
}

/// Columns form a saturated basis of ker(A) in Z^cols; each column has its
/// first nonzero entry positive.
template <typename Derived>
Matrix<typename Derived::Scalar> kernel_basis(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  auto snf = smith_normal_form(a);
  const Eigen::Index cols = a.cols();
  Matrix<Scalar> basis = snf.V.rightCols(cols - snf.rank);
  for (Eigen::Index j = 0; j < basis.cols(); ++j) {
    for (Eigen::Index i = 0; i < basis.rows(); ++i) {
      if (basis(i, j) == 0) continue;
      if (basis(i, j) < 0) basis.col(j) = -basis.col(j);
      break;
    }
  }
  return basis;
}

/// Fraction-free (Bareiss) determinant; exact over the integers.
template <typename Derived>
typename Derived::Scalar determinant(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  if (a.rows() != a.cols()) throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
  const Eigen::Index n = a.rows();
  if (n == 0) return Scalar(1);
  Matrix<Scalar> m = a;
  Scalar sign = 1;
  Scalar prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return Scalar(0);
      m.row(k).swap(m.row(swap_row));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      }
    }
    prev = m(k, k);
  }
  return sign * m(n - 1, n - 1);
}

template <typename Derived>
bool is_unimodular(const Eigen::MatrixBase<Derived>& a) {
  if (a.rows() != a.cols()) return false;
  const auto det = determinant(a);
  return det == 1 || det == -1;
}

/// Inverse of a unimodular matrix, read off from U * A * V = I as V * U.
template <typename Derived>
Matrix<typename Derived::Scalar> unimodular_inverse(const Eigen::MatrixBase<Derived>& a) {
  if (!is_unimodular(a)) throw Error(ErrorCode::InvalidArgument, "matrix is not unimodular");
  auto snf = smith_normal_form(a);
  return snf.V * snf.U;
}

}  // namespace llc
