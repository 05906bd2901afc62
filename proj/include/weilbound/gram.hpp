#pragma once

// Normalized symmetric Toeplitz matrices T_{n+1}(1, x_1, ..., x_n), their
// Hankel-block factorization G_n = G_n^- * G_n^+ and the gradient of G_n^-.
//
// Index convention: a point of order n stores x_1..x_n at 0-based positions
// 0..n-1. Inside the block constructions x_0 is the constant 1.

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace weilbound {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using SquareMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Coordinates (x_1, ..., x_n) of normalized Frobenius scalar products.
template <typename Scalar = double>
class GramPoint {
 public:
  GramPoint() = default;

  explicit GramPoint(Vector<Scalar> x) : x_(std::move(x)) {
    if (x_.size() < 1) throw std::invalid_argument("GramPoint: order must be >= 1");
    if (!x_.allFinite()) throw std::invalid_argument("GramPoint: entries must be finite");
  }

  GramPoint(std::initializer_list<Scalar> values)
      : GramPoint(Eigen::Map<const Vector<Scalar>>(values.begin(), static_cast<Eigen::Index>(values.size()))) {}

  int order() const { return static_cast<int>(x_.size()); }

  /// 1-based access: x(1) is x_1.
  Scalar x(int i) const { return x_(i - 1); }
  Scalar& x(int i) { return x_(i - 1); }

  const Vector<Scalar>& coords() const { return x_; }

  /// The first k coordinates, as a point of order k.
  GramPoint truncated(int k) const { return GramPoint(Vector<Scalar>(x_.head(k))); }

  friend bool operator==(const GramPoint& a, const GramPoint& b) {
    return a.x_.size() == b.x_.size() && a.x_ == b.x_;
  }

 private:
  Vector<Scalar> x_;
};

template <typename Scalar>
struct FactorPair {
  Scalar g_minus;
  Scalar g_plus;
};

/// Symmetric Toeplitz matrix with entry (i, j) = values[|i - j|].
template <typename Derived>
SquareMatrix<typename Derived::Scalar> toeplitz(const Eigen::MatrixBase<Derived>& values) {
  const Eigen::Index m = values.size();
  if (m < 1) throw std::invalid_argument("toeplitz: empty sequence");
  SquareMatrix<typename Derived::Scalar> t(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) t(i, j) = values(i > j ? i - j : j - i);
  return t;
}

/// Hankel matrix of size m from 2m - 1 values: entry (i, j) = values[i + j].
template <typename Derived>
SquareMatrix<typename Derived::Scalar> hankel(const Eigen::MatrixBase<Derived>& values) {
  const Eigen::Index len = values.size();
  if (len < 1 || len % 2 == 0) throw std::invalid_argument("hankel: sequence length must be odd");
  const Eigen::Index m = (len + 1) / 2;
  SquareMatrix<typename Derived::Scalar> h(m, m);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) h(i, j) = values(i + j);
  return h;
}

/// Determinant; closed form up to size 2, partial-pivoting LU above.
template <typename Derived>
typename Derived::Scalar det(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) throw std::invalid_argument("det: matrix is not square");
  switch (m.rows()) {
    case 0:
      return Scalar(1);
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    default:
      return SquareMatrix<Scalar>(m).partialPivLu().determinant();
  }
}

/// The normalized Toeplitz matrix T_{n+1}(1, x_1, ..., x_n).
template <typename Scalar>
SquareMatrix<Scalar> gram_matrix(const GramPoint<Scalar>& p) {
  Vector<Scalar> v(p.order() + 1);
  v(0) = Scalar(1);
  v.tail(p.order()) = p.coords();
  return toeplitz(v);
}

/// G_n = det T_{n+1}(1, x_1, ..., x_n).
template <typename Scalar>
Scalar G(const GramPoint<Scalar>& p) {
  return det(gram_matrix(p));
}

namespace detail {

// One entry of a block matrix that is affine in the coordinates:
// constant + sum of coef * x_k (k is 1-based; k = 0 denotes the constant 1).
struct AffineTerm {
  int row;
  int col;
  int k;
  double coef;
};

// Affine description of the matrix whose determinant is G_n^- (sign = +1) or
// G_n^+ (sign = -1).
//
// Odd n, n + 1 = 2m:  T_m + sign * H_m,  H(i, j) = x_{n-i-j}.
// Even n, n + 1 = 2m + 1:
//   G_n^-: [[T_m + H_m, X^t], [2 X, 1]] with H(i, j) = x_{n-i-j}, X_j = x_{m-j}
//   G_n^+: T_m - H_m.
inline std::pair<int, std::vector<AffineTerm>> factor_terms(int n, int sign) {
  const bool even = n % 2 == 0;
  const int m = even ? n / 2 : (n + 1) / 2;
  const bool bordered = even && sign > 0;
  const int size = bordered ? m + 1 : m;
  std::vector<AffineTerm> terms;
  terms.reserve(static_cast<std::size_t>(2 * size * size));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      terms.push_back({i, j, i > j ? i - j : j - i, 1.0});
      terms.push_back({i, j, n - i - j, sign > 0 ? 1.0 : -1.0});
    }
  }
  if (bordered) {
    for (int j = 0; j < m; ++j) {
      terms.push_back({j, m, m - j, 1.0});
      terms.push_back({m, j, m - j, 2.0});
    }
    terms.push_back({m, m, 0, 1.0});
  }
  return {size, std::move(terms)};
}

template <typename Scalar>
SquareMatrix<Scalar> assemble(const GramPoint<Scalar>& p, int size, const std::vector<AffineTerm>& terms) {
  SquareMatrix<Scalar> a = SquareMatrix<Scalar>::Zero(size, size);
  for (const auto& t : terms) a(t.row, t.col) += Scalar(t.coef) * (t.k == 0 ? Scalar(1) : p.x(t.k));
  return a;
}

template <typename Scalar>
SquareMatrix<Scalar> cofactors(const SquareMatrix<Scalar>& a) {
  const Eigen::Index s = a.rows();
  SquareMatrix<Scalar> c(s, s);
  if (s == 1) {
    c(0, 0) = Scalar(1);
    return c;
  }
  SquareMatrix<Scalar> minor(s - 1, s - 1);
  for (Eigen::Index i = 0; i < s; ++i) {
    for (Eigen::Index j = 0; j < s; ++j) {
      for (Eigen::Index r = 0, rr = 0; r < s; ++r) {
        if (r == i) continue;
        for (Eigen::Index col = 0, cc = 0; col < s; ++col) {
          if (col == j) continue;
          minor(rr, cc++) = a(r, col);
        }
        ++rr;
      }
      c(i, j) = ((i + j) % 2 == 0 ? Scalar(1) : Scalar(-1)) * det(minor);
    }
  }
  return c;
}

}  // namespace detail

/// Matrix whose determinant is G_n^- (the Hankel-block factor carrying the minimizer).
template <typename Scalar>
SquareMatrix<Scalar> g_minus_matrix(const GramPoint<Scalar>& p) {
  const auto [size, terms] = detail::factor_terms(p.order(), +1);
  return detail::assemble(p, size, terms);
}

template <typename Scalar>
SquareMatrix<Scalar> g_plus_matrix(const GramPoint<Scalar>& p) {
  const auto [size, terms] = detail::factor_terms(p.order(), -1);
  return detail::assemble(p, size, terms);
}

template <typename Scalar>
Scalar G_minus(const GramPoint<Scalar>& p) {
  return det(g_minus_matrix(p));
}

template <typename Scalar>
Scalar G_plus(const GramPoint<Scalar>& p) {
  return det(g_plus_matrix(p));
}

template <typename Scalar>
FactorPair<Scalar> G_factors(const GramPoint<Scalar>& p) {
  return {G_minus(p), G_plus(p)};
}

/// (G_1(x_1), G_2(x_1, x_2), ..., G_n(x_1, ..., x_n)).
template <typename Scalar>
Vector<Scalar> leading_minors(const GramPoint<Scalar>& p) {
  const SquareMatrix<Scalar> t = gram_matrix(p);
  Vector<Scalar> out(p.order());
  for (int i = 1; i <= p.order(); ++i) out(i - 1) = det(t.topLeftCorner(i + 1, i + 1));
  return out;
}

/// Gradient of G_n^- by Jacobi's formula over the affine block entries:
/// d det(A) / dx_k = sum_ij cof(A)_ij * dA_ij / dx_k.
/// Cofactors are formed explicitly so the result stays valid where A is singular.
template <typename Scalar>
Vector<Scalar> grad_G_minus(const GramPoint<Scalar>& p) {
  const auto [size, terms] = detail::factor_terms(p.order(), +1);
  const SquareMatrix<Scalar> cof = detail::cofactors(detail::assemble(p, size, terms));
  Vector<Scalar> grad = Vector<Scalar>::Zero(p.order());
  for (const auto& t : terms)
    if (t.k > 0) grad(t.k - 1) += Scalar(t.coef) * cof(t.row, t.col);
  return grad;
}

/// Central finite-difference gradient of G_n^-; the fallback for grad_G_minus.
template <typename Scalar>
Vector<Scalar> grad_G_minus_fd(const GramPoint<Scalar>& p, Scalar step = Scalar(1e-6)) {
  Vector<Scalar> grad(p.order());
  for (int k = 1; k <= p.order(); ++k) {
    GramPoint<Scalar> up = p;
    GramPoint<Scalar> down = p;
    up.x(k) += step;
    down.x(k) -= step;
    grad(k - 1) = (G_minus(up) - G_minus(down)) / (Scalar(2) * step);
  }
  return grad;
}

}  // namespace weilbound
