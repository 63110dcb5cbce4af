#pragma once

#include <map>
#include <optional>
#include <string>

#include "gpd/complex.hpp"

namespace gpd {

/// Subspace-valued function on Int(P) (product order) or Int(P)\diag(P)
/// (reverse-inclusion order). Missing keys are an error on read.
template <class T>
struct SubspaceIntervalFunction {
  LinearMetricPoset poset;
  IntervalOrder order = IntervalOrder::Product;
  AmbientPtr<T> ambient;
  std::map<Interval, Subspace<T>> values;

  int n() const { return poset.size(); }

  const Subspace<T>& at(const Interval& I) const {
    auto it = values.find(I);
    if (it == values.end()) throw std::out_of_range("interval function has no value at this interval");
    return it->second;
  }

  /// Value with the boundary conventions: birth index -1 gives {0}, and a
  /// death index of n means the ray.
  Subspace<T> value(int i, int j) const {
    if (i < 0) return Subspace<T>::zero(ambient);
    if (j >= n()) j = kInf;
    return at({i, j});
  }

  std::vector<Interval> domain() const { return gpd::domain(n(), order); }
  bool total() const {
    for (const Interval& I : domain())
      if (!values.count(I)) return false;
    return true;
  }
};

struct MonotoneViolation {
  int i = 0;
  int j = 0;  // j == n stands for the ray
  std::string what;
};

/// Checks order preservation under ≤× and
/// F([i+1,j]) ∩ F([i,j+1]) = F([i,j]) for i < j (j+1 = n meaning the ray).
/// Returns the first violation in row-major (i, j) order.
template <class T>
std::optional<MonotoneViolation> check_intersection_monotone(const SubspaceIntervalFunction<T>& F) {
  const int n = F.n();
  if (!F.total()) return MonotoneViolation{0, 0, "function is not total"};
  const auto dom = F.domain();
  for (const Interval& I : dom)
    for (const Interval& J : dom)
      if (interval_leq(I, J, IntervalOrder::Product) && !F.at(J).contains(F.at(I)))
        return MonotoneViolation{I.birth, I.is_ray() ? n : I.death, "not order preserving"};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (intersect(F.value(i + 1, j), F.value(i, j + 1)) != F.value(i, j))
        return MonotoneViolation{i, j, "intersection condition fails"};
  return std::nullopt;
}

/// ZB_q([i,j]) = Z_q(K_i) ∩ B_q(K_j), ZB_q([i,inf)) = Z_q(K_i).
template <class T>
SubspaceIntervalFunction<T> zb(const ChainModel<T>& model, int q) {
  SubspaceIntervalFunction<T> F{model.filtration().poset(), IntervalOrder::Product, model.ambient(q), {}};
  for (const Interval& I : all_intervals(model.steps())) {
    const auto& z = model.cycles(q, I.birth);
    F.values.emplace(I, I.is_ray() ? z : intersect(z, model.boundaries(q, I.death)));
  }
  return F;
}

template <class T>
std::size_t persistent_betti(const ChainModel<T>& model, int q, int i, int j) {
  if (i > j) throw std::invalid_argument("persistent Betti number needs i <= j");
  const auto& z = model.cycles(q, i);
  return z.dim() - intersect(z, model.boundaries(q, j)).dim();
}

/// Integer function [i,j] -> β^{i,j-1}, [i,inf) -> β^{i,n-1}, on the off-diagonal domain.
template <class T>
IntegerIntervalFunction betti_function(const ChainModel<T>& model, int q) {
  const int n = model.steps();
  IntegerIntervalFunction m{n, IntervalOrder::ReverseInclusion, {}};
  for (const Interval& I : off_diagonal_intervals(n)) {
    auto b = persistent_betti(model, q, I.birth, I.is_ray() ? n - 1 : I.death - 1);
    if (b) m.values[I] = static_cast<std::int64_t>(b);
  }
  return m;
}

template <class T>
IntegerIntervalFunction dim_function(const SubspaceIntervalFunction<T>& F) {
  IntegerIntervalFunction m{F.n(), F.order, {}};
  for (const auto& [I, W] : F.values)
    if (W.dim()) m.values[I] = static_cast<std::int64_t>(W.dim());
  return m;
}

/// C_q^{K_j,K_i}: chains on K_j whose boundary lies in C_{q-1}^{K_i}.
template <class T>
Subspace<T> relative_chain_space(const ChainModel<T>& model, int q, int i, int j) {
  if (i > j) throw std::invalid_argument("relative chain space needs i <= j");
  const auto cols = model.support(q, j);
  const auto inner = model.support(q - 1, i);
  std::vector<bool> in_i(model.chain_dim(q - 1), false);
  for (auto r : inner) in_i[r] = true;
  std::vector<std::size_t> outside;
  for (std::size_t r = 0; r < in_i.size(); ++r)
    if (!in_i[r]) outside.push_back(r);
  const Matrix<T> local = model.boundary(q).select_columns(cols).select_rows(outside);
  const Matrix<T> null = nullspace(local);
  Matrix<T> embedded(model.chain_dim(q), null.cols());
  for (std::size_t k = 0; k < cols.size(); ++k)
    for (std::size_t c = 0; c < null.cols(); ++c) embedded(cols[k], c) = null(k, c);
  return Subspace<T>::from_columns(model.ambient(q), embedded);
}

/// Im ∂_{q+1}^{K_j,K_i}, inside C_q^{K_i}.
template <class T>
Subspace<T> relative_boundaries(const ChainModel<T>& model, int q, int i, int j) {
  const Subspace<T> rel = relative_chain_space(model, q + 1, i, j);
  return Subspace<T>::from_columns(model.ambient(q), model.boundary(q + 1) * rel.basis_matrix());
}

/// Persistent Laplacian as a matrix acting on coordinates of C_q^{K_i}
/// (basis: the q-simplices of K_i in order).
template <class T>
struct PersistentLaplacian {
  Matrix<T> op;
  Matrix<T> gram;                    // restricted Gram of C_q^{K_i}
  std::vector<std::size_t> support;  // K-wide indices of the basis
  AmbientPtr<T> ambient;

  /// ker Δ embedded into C_q^K.
  Subspace<T> kernel() const {
    const Matrix<T> null = nullspace(op);
    Matrix<T> embedded(ambient->dim(), null.cols());
    for (std::size_t k = 0; k < support.size(); ++k)
      for (std::size_t c = 0; c < null.cols(); ++c) embedded(support[k], c) = null(k, c);
    return Subspace<T>::from_columns(ambient, embedded);
  }
};

template <class T>
PersistentLaplacian<T> persistent_laplacian(const ChainModel<T>& model, int q, int i, int j) {
  if (i > j) throw std::invalid_argument("persistent Laplacian needs i <= j");
  const auto supp = model.support(q, i);
  const std::size_t nq = model.chain_dim(q), s = supp.size();
  Matrix<T> S(nq, s);
  for (std::size_t k = 0; k < s; ++k) S(supp[k], k) = T(1);
  const Matrix<T> Gq = model.ambient(q)->gram_matrix();
  const Matrix<T> Mi = S.transpose() * Gq * S;

  // Up part: A M^{-1} A^T G_q restricted to C_q^{K_i}, where the columns of R
  // span C_{q+1}^{K_j,K_i} and A = ∂ R.
  Matrix<T> op(s, s);
  const Matrix<T> R = relative_chain_space(model, q + 1, i, j).basis_matrix();
  if (R.cols() > 0) {
    const Matrix<T> A = model.boundary(q + 1) * R;
    const Matrix<T> M = R.transpose() * model.ambient(q + 1)->gram_matrix() * R;
    const Matrix<T> A_local = A.select_rows(supp);
    op = A_local * solve(M, A.transpose() * Gq * S);
  }
  // Down part: (∂_q^{K_i})* ∂_q^{K_i} = M_i^{-1} E^T G_{q-1} E with E = ∂_q S.
  if (q > 0 && s > 0) {
    const Matrix<T> E = model.boundary(q) * S;
    op = op + solve(Mi, E.transpose() * model.ambient(q - 1)->gram_matrix() * E);
  }
  return {op, Mi, supp, model.ambient(q)};
}

/// ker Δ_q^{K_i,K_j} = Z_q(K_i) ⊖ Im ∂_{q+1}^{K_j,K_i}.
template <class T>
Subspace<T> laplacian_kernel(const ChainModel<T>& model, int q, int i, int j) {
  return ominus(model.cycles(q, i), relative_boundaries(model, q, i, j));
}

/// LK([i,j]) = ker Δ^{i,j-1} for i < j, LK([i,inf)) = ker Δ^{i,n-1}.
template <class T>
SubspaceIntervalFunction<T> lk(const ChainModel<T>& model, int q) {
  const int n = model.steps();
  SubspaceIntervalFunction<T> L{model.filtration().poset(), IntervalOrder::ReverseInclusion, model.ambient(q), {}};
  for (const Interval& I : off_diagonal_intervals(n))
    L.values.emplace(I, laplacian_kernel(model, q, I.birth, I.is_ray() ? n - 1 : I.death - 1));
  return L;
}

/// {x in H : project(x, target) in S}, where H and S are subspaces and the
/// projection is orthogonal onto `target`.
template <class T>
Subspace<T> projection_preimage(const Subspace<T>& H, const Subspace<T>& target, const Subspace<T>& S) {
  if (H.is_zero()) return H;
  std::vector<std::vector<T>> images;
  for (const auto& v : H.basis()) images.push_back(project(v, target));
  const Matrix<T> Y = Matrix<T>::from_columns(images, H.ambient_dim());
  const Subspace<T> S_perp = perp(S);
  if (S_perp.is_zero()) return H;
  const Matrix<T> cond = S_perp.rows() * H.ambient()->apply_gram(Y);
  return Subspace<T>::from_columns(H.ambient(), H.basis_matrix() * nullspace(cond));
}

enum class HarmonicBase {
  CopyFirst,  // K_0 := K_1 (the literal convention)
  EmptyBase,  // K_0 := the empty complex
};

template <class T>
struct HarmonicTower {
  Subspace<T> harmonic;  // 𝓗_q(K_i)
  Subspace<T> image;     // 𝓗^{i,j} = γ^{i,j}(𝓗_q(K_i))
  Subspace<T> M, N, P;
};

/// 𝓗_q(K_i) = Z_q(K_i) ⊖ B_q(K_i); index -1 follows `base`.
template <class T>
Subspace<T> harmonic_space(const ChainModel<T>& model, int q, int i, HarmonicBase base = HarmonicBase::CopyFirst) {
  if (i < 0) {
    if (base == HarmonicBase::EmptyBase) return Subspace<T>::zero(model.ambient(q));
    i = 0;
  }
  return ominus(model.cycles(q, i), model.boundaries(q, i));
}

/// 𝓗^{i,j}: image of 𝓗_q(K_i) under projection onto B_q(K_j)^⊥.
template <class T>
Subspace<T> harmonic_image(const ChainModel<T>& model, int q, int i, int j, HarmonicBase base) {
  return project_subspace(harmonic_space(model, q, i, base), perp(model.boundaries(q, j)));
}

/// Indices are 0-based; i = 0 uses `base` for the step before the first.
template <class T>
HarmonicTower<T> harmonic_tower(const ChainModel<T>& model, int q, int i, int j,
                                HarmonicBase base = HarmonicBase::CopyFirst) {
  if (!(i < j) || j >= model.steps()) throw std::invalid_argument("harmonic tower needs i < j < n");
  HarmonicTower<T> t;
  t.harmonic = harmonic_space(model, q, i, base);
  const Subspace<T> bj_perp = perp(model.boundaries(q, j));
  const Subspace<T> bj1_perp = perp(model.boundaries(q, j - 1));
  t.image = project_subspace(t.harmonic, bj_perp);
  t.M = projection_preimage(t.harmonic, bj_perp, harmonic_image(model, q, i - 1, j, base));
  t.N = projection_preimage(t.harmonic, bj1_perp, harmonic_image(model, q, i - 1, j - 1, base));
  t.P = ominus(t.M, t.N);
  return t;
}

}  // namespace gpd
