#pragma once

#include <functional>
#include <sstream>

#include "gpd/invariants.hpp"

namespace gpd {

/// Interval-indexed transverse family. Absent keys read as {0}.
template <class T>
struct GrassmannianDiagram {
  LinearMetricPoset poset;
  IntervalOrder order_tag = IntervalOrder::Product;
  AmbientPtr<T> ambient;
  std::map<Interval, Subspace<T>> values;

  int n() const { return poset.size(); }
  Subspace<T> at(const Interval& I) const {
    auto it = values.find(I);
    return it == values.end() ? Subspace<T>::zero(ambient) : it->second;
  }
  void set(const Interval& I, Subspace<T> W) {
    if (W.is_zero())
      values.erase(I);
    else
      values.insert_or_assign(I, std::move(W));
  }
  std::vector<Subspace<T>> family() const {
    std::vector<Subspace<T>> out;
    for (const auto& [I, W] : values) out.push_back(W);
    return out;
  }
  bool transverse() const { return is_transverse(family()); }

  /// Restriction to Int(P)\diag(P).
  GrassmannianDiagram off_diagonal() const {
    GrassmannianDiagram d{poset, order_tag, ambient, {}};
    for (const auto& [I, W] : values)
      if (!I.is_diagonal()) d.values.emplace(I, W);
    return d;
  }
  /// Values on the diagonal only (used as zeta for diagonal-blind morphisms).
  GrassmannianDiagram diagonal() const {
    GrassmannianDiagram d{poset, order_tag, ambient, {}};
    for (const auto& [I, W] : values)
      if (I.is_diagonal()) d.values.emplace(I, W);
    return d;
  }

  bool operator==(const GrassmannianDiagram& o) const {
    if (!(poset == o.poset)) return false;
    for (const auto& [I, W] : values)
      if (o.at(I) != W) return false;
    for (const auto& [I, W] : o.values)
      if (at(I) != W) return false;
    return true;
  }
};

struct NotIntersectionMonotone : std::invalid_argument {
  NotIntersectionMonotone(const MonotoneViolation& v, const LinearMetricPoset& P)
      : std::invalid_argument(describe(v, P)), violation(v) {}
  static std::string describe(const MonotoneViolation& v, const LinearMetricPoset& P) {
    std::ostringstream s;
    s << "input is not intersection-monotone (" << v.what << ") at (i, j) = (" << rational_to_string(P.grade(v.i))
      << ", " << (v.j >= P.size() ? std::string("inf") : rational_to_string(P.grade(v.j))) << ")";
    return s.str();
  }
  MonotoneViolation violation;
};

template <class T>
void require_intersection_monotone(const SubspaceIntervalFunction<T>& F) {
  if (F.order != IntervalOrder::Product) throw std::invalid_argument("×-inversion needs a product-order function");
  if (auto v = check_intersection_monotone(F)) throw NotIntersectionMonotone(*v, F.poset);
}

/// ×-Orthogonal Inverse, single-⊖ form: F([i,j]) ⊖ (F([i-1,j]) + F([i,j-1])),
/// ray F([i,inf)) ⊖ (F([i-1,inf)) + F([i,n])), diagonal F([i,i]) ⊖ F([i-1,i]).
template <class T>
GrassmannianDiagram<T> oi_times(const SubspaceIntervalFunction<T>& F, bool validate = true) {
  if (validate) require_intersection_monotone(F);
  const int n = F.n();
  GrassmannianDiagram<T> D{F.poset, IntervalOrder::Product, F.ambient, {}};
  for (const Interval& I : all_intervals(n)) {
    const int i = I.birth;
    if (I.is_diagonal())
      D.set(I, ominus(F.value(i, i), F.value(i - 1, i)));
    else if (I.is_ray())
      D.set(I, ominus(F.value(i, n), F.value(i - 1, n) + F.value(i, n - 1)));
    else
      D.set(I, ominus(F.value(i, I.death), F.value(i - 1, I.death) + F.value(i, I.death - 1)));
  }
  return D;
}

/// ×-Orthogonal Inverse, literal three-⊖ form.
template <class T>
GrassmannianDiagram<T> oi_times_literal(const SubspaceIntervalFunction<T>& F, bool validate = true) {
  if (validate) require_intersection_monotone(F);
  const int n = F.n();
  GrassmannianDiagram<T> D{F.poset, IntervalOrder::Product, F.ambient, {}};
  for (const Interval& I : all_intervals(n)) {
    const int i = I.birth;
    if (I.is_diagonal()) {
      D.set(I, ominus(F.value(i, i), F.value(i - 1, i)));
    } else {
      const int j = I.is_ray() ? n : I.death;  // value(., n) is the ray
      const int jm = I.is_ray() ? n - 1 : I.death - 1;
      D.set(I, ominus(ominus(F.value(i, j), F.value(i, jm)), ominus(F.value(i - 1, j), F.value(i - 1, jm))));
    }
  }
  return D;
}

/// ⊇-Orthogonal Inverse on Int(P)\diag(P):
/// (L([i,j]) ⊖ L([i,j+1])) ⊖ (L([i-1,j]) ⊖ L([i-1,j+1])) with [i,n] the ray,
/// and L([i,inf)) ⊖ L([i-1,inf)).
template <class T>
GrassmannianDiagram<T> oi_supseteq(const SubspaceIntervalFunction<T>& L) {
  if (L.order != IntervalOrder::ReverseInclusion) throw std::invalid_argument("⊇-inversion needs a reverse-inclusion function");
  if (!L.total()) throw std::invalid_argument("⊇-inversion input is missing interval values");
  const int n = L.n();
  GrassmannianDiagram<T> D{L.poset, IntervalOrder::ReverseInclusion, L.ambient, {}};
  for (const Interval& I : off_diagonal_intervals(n)) {
    const int i = I.birth;
    if (I.is_ray()) {
      D.set(I, ominus(L.value(i, n), L.value(i - 1, n)));
    } else {
      const int j = I.death;
      D.set(I, ominus(ominus(L.value(i, j), L.value(i, j + 1)), ominus(L.value(i - 1, j), L.value(i - 1, j + 1))));
    }
  }
  return D;
}

template <class T>
IntegerIntervalFunction dim_diagram(const GrassmannianDiagram<T>& M) {
  IntegerIntervalFunction m{M.n(), M.order_tag, {}};
  for (const auto& [I, W] : M.values)
    if (W.dim()) m.values[I] = static_cast<std::int64_t>(W.dim());
  return m;
}

/// A finite poset given by its size and order relation; used for the
/// monoidal-inverse checks on chains and on interval posets alike.
struct FinitePoset {
  std::size_t size = 0;
  std::function<bool(std::size_t, std::size_t)> leq;

  static FinitePoset chain(std::size_t n) {
    return {n, [](std::size_t a, std::size_t b) { return a <= b; }};
  }
  static FinitePoset intervals(const std::vector<Interval>& ints, IntervalOrder order) {
    return {ints.size(), [ints, order](std::size_t a, std::size_t b) { return interval_leq(ints[a], ints[b], order); }};
  }
};

template <class T>
std::vector<Subspace<T>> downset_sums(const std::vector<Subspace<T>>& m, const FinitePoset& P) {
  if (m.size() != P.size) throw std::invalid_argument("function size does not match poset");
  std::vector<Subspace<T>> out;
  for (std::size_t b = 0; b < P.size; ++b) {
    std::vector<Subspace<T>> below;
    for (std::size_t a = 0; a < P.size; ++a)
      if (P.leq(a, b)) below.push_back(m[a]);
    out.push_back(sum(below, m.at(b).ambient()));
  }
  return out;
}

template <class T>
bool check_monoidal_inverse(const std::vector<Subspace<T>>& m_prime, const std::vector<Subspace<T>>& m,
                            const FinitePoset& P) {
  return downset_sums(m_prime, P) == m;
}

template <class T>
bool mobius_equivalent(const std::vector<Subspace<T>>& m1, const std::vector<Subspace<T>>& m2, const FinitePoset& P) {
  return downset_sums(m1, P) == downset_sums(m2, P);
}

/// Values of a diagram / interval function on the full domain of its order, in domain order.
template <class T>
std::vector<Subspace<T>> as_vector(const GrassmannianDiagram<T>& D, IntervalOrder order) {
  std::vector<Subspace<T>> out;
  for (const Interval& I : domain(D.n(), order)) out.push_back(D.at(I));
  return out;
}
template <class T>
std::vector<Subspace<T>> as_vector(const SubspaceIntervalFunction<T>& F) {
  std::vector<Subspace<T>> out;
  for (const Interval& I : F.domain()) out.push_back(F.at(I));
  return out;
}

template <class T>
bool check_monoidal_inverse(const GrassmannianDiagram<T>& D, const SubspaceIntervalFunction<T>& F) {
  return check_monoidal_inverse(as_vector(D, F.order), as_vector(F),
                                FinitePoset::intervals(domain(F.n(), F.order), F.order));
}

template <class T>
bool mobius_equivalent(const GrassmannianDiagram<T>& A, const GrassmannianDiagram<T>& B, IntervalOrder order) {
  if (A.n() != B.n()) return false;
  return mobius_equivalent(as_vector(A, order), as_vector(B, order),
                           FinitePoset::intervals(domain(A.n(), order), order));
}

/// Subspace-valued pushforward along an interval map: fibers are summed.
template <class T>
GrassmannianDiagram<T> pushforward(const IntervalMap& f, const GrassmannianDiagram<T>& M,
                                   const LinearMetricPoset& target) {
  GrassmannianDiagram<T> out{target, M.order_tag, M.ambient, {}};
  for (const auto& [I, W] : M.values) out.set(f(I), out.at(f(I)) + W);
  return out;
}

/// (f^♯ F)(I) = F(f(I)) for f : Int(Q) -> Int(P).
template <class T>
SubspaceIntervalFunction<T> pullback(const IntervalMap& f, const SubspaceIntervalFunction<T>& F,
                                     const LinearMetricPoset& source) {
  SubspaceIntervalFunction<T> out{source, F.order, F.ambient, {}};
  for (const Interval& I : domain(source.size(), F.order)) out.values.emplace(I, F.at(f(I)));
  return out;
}

/// Born at b: z ∈ Z_q(K_b) and z ∉ Z_q(K_{b-1}) + B_q(K_b).
template <class T>
bool born_at(const ChainModel<T>& model, int q, const std::vector<T>& z, int b) {
  return model.cycles(q, b).contains(z) && !(model.cycles(q, b - 1) + model.boundaries(q, b)).contains(z);
}

/// Dies at d: z ∈ B_q(K_d) and z ∉ B_q(K_{d-1}). For a ray: z ∉ B_q(K_{n-1}).
template <class T>
bool dies_at(const ChainModel<T>& model, int q, const std::vector<T>& z, int d) {
  if (d == kInf) return !model.boundaries(q, model.steps() - 1).contains(z);
  return model.boundaries(q, d).contains(z) && !model.boundaries(q, d - 1).contains(z);
}

/// The three membership assertions for z in a diagram value at I. Diagonal
/// points use the chain-level analogue: z ∈ B_q(K_i), z ∉ B_q(K_{i-1}),
/// z ∉ Z_q(K_{i-1}).
template <class T>
bool born_and_dies_exactly(const ChainModel<T>& model, int q, const std::vector<T>& z, const Interval& I) {
  if (I.is_diagonal())
    return model.boundaries(q, I.birth).contains(z) && !model.boundaries(q, I.birth - 1).contains(z) &&
           !model.cycles(q, I.birth - 1).contains(z);
  return born_at(model, q, z, I.birth) && dies_at(model, q, z, I.death);
}

}  // namespace gpd
