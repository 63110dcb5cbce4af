#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpd/matrix.hpp"

namespace gpd {

/// Finite-dimensional inner-product space R^n (or Q^n) with an optional Gram
/// matrix. No Gram means the standard inner product.
template <class T>
class AmbientSpace {
 public:
  explicit AmbientSpace(std::size_t dim, std::vector<std::string> labels = {})
      : dim_(dim), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != dim_) throw std::invalid_argument("label count mismatch");
  }
  AmbientSpace(std::size_t dim, Matrix<T> gram, std::vector<std::string> labels = {})
      : AmbientSpace(dim, std::move(labels)) {
    if (gram.rows() != dim || gram.cols() != dim) throw std::invalid_argument("Gram matrix has wrong size");
    if (!is_positive_definite(gram)) throw std::invalid_argument("Gram matrix is not symmetric positive definite");
    if (!(gram == Matrix<T>::identity(dim))) gram_ = std::move(gram);
  }

  std::size_t dim() const { return dim_; }
  bool standard() const { return !gram_.has_value(); }
  const std::optional<Matrix<T>>& gram() const { return gram_; }
  Matrix<T> gram_matrix() const { return gram_ ? *gram_ : Matrix<T>::identity(dim_); }
  const std::vector<std::string>& labels() const { return labels_; }

  /// G * m (m has dim() rows).
  Matrix<T> apply_gram(const Matrix<T>& m) const { return gram_ ? *gram_ * m : m; }

  T inner(const std::vector<T>& u, const std::vector<T>& v) const {
    std::vector<T> gv = gram_ ? *gram_ * v : v;
    T s(0);
    for (std::size_t i = 0; i < dim_; ++i) s += u[i] * gv[i];
    return s;
  }

  bool same_as(const AmbientSpace& o) const {
    if (this == &o) return true;
    if (dim_ != o.dim_ || gram_.has_value() != o.gram_.has_value()) return false;
    return !gram_ || *gram_ == *o.gram_;
  }

 private:
  std::size_t dim_;
  std::optional<Matrix<T>> gram_;
  std::vector<std::string> labels_;
};

template <class T>
using AmbientPtr = std::shared_ptr<const AmbientSpace<T>>;

template <class T>
struct Vector {
  AmbientPtr<T> ambient;
  std::vector<T> coords;
};

/// Linear subspace stored in canonical form: the basis vectors are the rows of
/// the reduced row echelon form of any spanning set (equivalently, the basis
/// matrix with these as columns is in reduced column echelon form).
template <class T>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(AmbientPtr<T> ambient) : ambient_(std::move(ambient)), rows_(0, ambient_->dim()) {}

  static Subspace zero(AmbientPtr<T> ambient) { return Subspace(std::move(ambient)); }
  static Subspace full(AmbientPtr<T> ambient) {
    Subspace s(ambient);
    s.rows_ = Matrix<T>::identity(ambient->dim());
    return s;
  }

  /// Span of the rows of `generators` (each row a vector in the ambient space).
  static Subspace from_rows(AmbientPtr<T> ambient, const Matrix<T>& generators) {
    if (generators.cols() != ambient->dim()) throw std::invalid_argument("generator length mismatch");
    Subspace s(std::move(ambient));
    if (generators.rows() > 0) s.rows_ = rref(generators).reduced;
    return s;
  }
  /// Span of the columns of `generators`.
  static Subspace from_columns(AmbientPtr<T> ambient, const Matrix<T>& generators) {
    return from_rows(std::move(ambient), generators.transpose());
  }
  static Subspace span(AmbientPtr<T> ambient, const std::vector<std::vector<T>>& vectors) {
    const std::size_t n = ambient->dim();
    return from_rows(std::move(ambient), Matrix<T>::from_rows(vectors, n));
  }

  const AmbientPtr<T>& ambient() const { return ambient_; }
  std::size_t ambient_dim() const { return ambient_->dim(); }
  std::size_t dim() const { return rows_.rows(); }
  bool is_zero() const { return dim() == 0; }

  /// Canonical basis: dim() rows of length ambient_dim().
  const Matrix<T>& rows() const { return rows_; }
  std::vector<std::vector<T>> basis() const {
    std::vector<std::vector<T>> out;
    for (std::size_t r = 0; r < rows_.rows(); ++r) out.push_back(rows_.row(r));
    return out;
  }
  /// ambient_dim() x dim() matrix whose columns are the basis vectors.
  Matrix<T> basis_matrix() const { return rows_.transpose(); }

  bool contains(const std::vector<T>& v) const {
    if (v.size() != ambient_dim()) throw std::invalid_argument("vector length mismatch");
    double scale = 0;
    for (const T& x : v) scale = std::max(scale, ScalarTraits<T>::magnitude(x));
    std::vector<T> w = v;
    // Rows are in RREF, so eliminating each pivot coordinate in turn leaves the
    // residual of v modulo the subspace.
    for (std::size_t r = 0; r < rows_.rows(); ++r) {
      std::size_t p = pivot_of(r);
      const T f = w[p];
      if (ScalarTraits<T>::is_zero(f, 0.0)) continue;
      for (std::size_t c = 0; c < w.size(); ++c) w[c] -= f * rows_(r, c);
    }
    for (const T& x : w)
      if (!ScalarTraits<T>::is_zero(x, scale)) return false;
    return true;
  }

  bool contains(const Subspace& o) const {
    check_compatible(o);
    if (o.dim() > dim()) return false;
    for (std::size_t r = 0; r < o.rows_.rows(); ++r)
      if (!contains(o.rows_.row(r))) return false;
    return true;
  }

  bool operator==(const Subspace& o) const {
    if (ambient_dim() != o.ambient_dim() || dim() != o.dim()) return false;
    if constexpr (ScalarTraits<T>::exact) return rows_ == o.rows_;
    return contains(o);
  }
  bool operator!=(const Subspace& o) const { return !(*this == o); }

  void check_compatible(const Subspace& o) const {
    if (!ambient_ || !o.ambient_ || !ambient_->same_as(*o.ambient_))
      throw std::invalid_argument("subspaces live in different ambient spaces");
  }

 private:
  std::size_t pivot_of(std::size_t r) const {
    for (std::size_t c = 0; c < rows_.cols(); ++c)
      if (!ScalarTraits<T>::is_zero(rows_(r, c), 0.0)) return c;
    throw std::logic_error("zero row in canonical basis");
  }

  AmbientPtr<T> ambient_;
  Matrix<T> rows_;
};

template <class T>
Subspace<T> operator+(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_compatible(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  return Subspace<T>::from_rows(a.ambient(), vstack(a.rows(), b.rows()));
}

template <class T>
Subspace<T> sum(const std::vector<Subspace<T>>& family, AmbientPtr<T> ambient) {
  Subspace<T> s = Subspace<T>::zero(ambient);
  Matrix<T> stacked(0, ambient->dim());
  for (const auto& w : family) {
    s.check_compatible(w);
    stacked = vstack(stacked, w.rows());
  }
  return Subspace<T>::from_rows(ambient, stacked);
}

/// W1 ∩ W2 via the nullspace of [B1^T | -B2^T].
template <class T>
Subspace<T> intersect(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return Subspace<T>::zero(a.ambient());
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  const Matrix<T> at = a.basis_matrix();
  const Matrix<T> system = hstack(at, scaled(b.basis_matrix(), T(-1)));
  const Matrix<T> null = nullspace(system);
  std::vector<std::size_t> top(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) top[i] = i;
  return Subspace<T>::from_columns(a.ambient(), at * null.select_rows(top));
}

/// Orthogonal complement with respect to the ambient inner product.
template <class T>
Subspace<T> perp(const Subspace<T>& w) {
  if (w.is_zero()) return Subspace<T>::full(w.ambient());
  const Matrix<T> bg = w.ambient()->apply_gram(w.basis_matrix()).transpose();  // B G (G symmetric)
  return Subspace<T>::from_columns(w.ambient(), nullspace(bg));
}

/// W1 ⊖ W2 = W1 ∩ W2^⊥, computed inside W1's coordinates.
template <class T>
Subspace<T> ominus(const Subspace<T>& a, const Subspace<T>& b) {
  a.check_compatible(b);
  if (a.is_zero() || b.is_zero()) return a;
  const Matrix<T> at = a.basis_matrix();
  const Matrix<T> cross = b.rows() * a.ambient()->apply_gram(at);  // B2 G B1^T
  const Matrix<T> null = nullspace(cross);
  if (null.cols() == a.dim()) return a;
  return Subspace<T>::from_columns(a.ambient(), at * null);
}

/// Orthogonal projection of v onto W.
template <class T>
std::vector<T> project(const std::vector<T>& v, const Subspace<T>& w) {
  if (w.is_zero()) return std::vector<T>(v.size(), T(0));
  const Matrix<T> bt = w.basis_matrix();
  const Matrix<T> gbt = w.ambient()->apply_gram(bt);
  const Matrix<T> normal = w.rows() * gbt;                // B G B^T
  Matrix<T> rhs(w.dim(), 1);
  const Matrix<T> col = Matrix<T>::from_columns({v}, v.size());
  rhs = gbt.transpose() * col;                            // B G v
  return (bt * solve(normal, rhs)).col(0);
}

template <class T>
Subspace<T> project_subspace(const Subspace<T>& source, const Subspace<T>& target) {
  source.check_compatible(target);
  std::vector<std::vector<T>> images;
  for (const auto& v : source.basis()) images.push_back(project(v, target));
  return Subspace<T>::span(source.ambient(), images);
}

/// dim(Σ W_i) == Σ dim(W_i).
template <class T>
bool is_transverse(const std::vector<Subspace<T>>& family) {
  if (family.empty()) return true;
  std::size_t total = 0;
  for (const auto& w : family) total += w.dim();
  return sum(family, family.front().ambient()).dim() == total;
}

template <class T>
bool is_transversal(const std::vector<Subspace<T>>& a, const std::vector<Subspace<T>>& b) {
  std::vector<Subspace<T>> all = a;
  all.insert(all.end(), b.begin(), b.end());
  return is_transverse(all);
}

template <class T>
Subspace<T> convert_subspace(const Subspace<Rational>& w, AmbientPtr<T> ambient) {
  return Subspace<T>::from_rows(std::move(ambient), convert<T>(w.rows()));
}

}  // namespace gpd
