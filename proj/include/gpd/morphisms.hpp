#pragma once

#include <string>
#include <vector>

#include "gpd/inversion.hpp"

namespace gpd {

struct Validation {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
  static Validation fail(std::string why) { return {false, std::move(why)}; }
};

/// F ∘ right = G on sublevel complexes.
struct FilMorphism {
  GaloisConnection g;
};

/// F̄ ∘ bar(right) = Ḡ.
struct InnMorphism {
  GaloisConnection g;
};

/// (g, zeta) with zeta supported on diag(Q); stored sparsely by diagonal index.
template <class T>
struct GpdMorphism {
  GaloisConnection g;
  std::map<int, Subspace<T>> zeta;

  GrassmannianDiagram<T> zeta_diagram(AmbientPtr<T> ambient) const {
    GrassmannianDiagram<T> z{g.target, IntervalOrder::Product, std::move(ambient), {}};
    for (const auto& [k, W] : zeta) z.set({k, k}, W);
    return z;
  }
};

/// β(J) = Σ_{bar(left)(I) = J} α(I) for non-diagonal J.
struct ChargeMorphism {
  GaloisConnection g;
};

inline ExtendedValue cost(const GaloisConnection& g) { return distortion(g, Side::Left); }
inline ExtendedValue cost(const FilMorphism& m) { return cost(m.g); }
inline ExtendedValue cost(const InnMorphism& m) { return cost(m.g); }
inline ExtendedValue cost(const ChargeMorphism& m) { return cost(m.g); }
template <class T>
ExtendedValue cost(const GpdMorphism<T>& m) {
  return cost(m.g);
}

Validation validate(const FilMorphism& m, const Filtration& F, const Filtration& G);
Validation validate(const ChargeMorphism& m, const IntegerIntervalFunction& alpha, const IntegerIntervalFunction& beta);

namespace detail {
inline Validation check_connection(const GaloisConnection& g, const LinearMetricPoset& p, const LinearMetricPoset& q) {
  if (auto c = verify_galois(g); !c.ok) return Validation::fail("not a Galois connection: " + c.reason);
  if (!(g.source == p)) return Validation::fail("source poset does not match");
  if (!(g.target == q)) return Validation::fail("target poset does not match");
  return {};
}
}  // namespace detail

template <class T>
Validation validate(const InnMorphism& m, const SubspaceIntervalFunction<T>& F, const SubspaceIntervalFunction<T>& G) {
  if (auto c = detail::check_connection(m.g, F.poset, G.poset); !c) return c;
  const IntervalMap right = bar(m.g).right;
  for (const Interval& J : all_intervals(G.n()))
    if (F.at(right(J)) != G.at(J)) return Validation::fail("F ∘ bar(right) differs from G at " + interval_to_string(J, G.poset));
  return {};
}

template <class T>
Validation validate(const GpdMorphism<T>& m, const GrassmannianDiagram<T>& M, const GrassmannianDiagram<T>& N) {
  if (auto c = detail::check_connection(m.g, M.poset, N.poset); !c) return c;
  for (const auto& [k, W] : m.zeta)
    if (k < 0 || k >= N.n()) return Validation::fail("zeta is supported off the diagonal of the target");
  const GrassmannianDiagram<T> z = m.zeta_diagram(N.ambient);
  if (!is_transversal(z.family(), N.family())) return Validation::fail("zeta is not transversal to the target diagram");
  GrassmannianDiagram<T> sum_nz{N.poset, N.order_tag, N.ambient, {}};
  for (const Interval& J : all_intervals(N.n())) sum_nz.set(J, N.at(J) + z.at(J));
  const GrassmannianDiagram<T> pushed = pushforward(bar(m.g).left, M, N.poset);
  if (!mobius_equivalent(pushed, sum_nz, IntervalOrder::Product))
    return Validation::fail("pushforward is not Möbius equivalent to N + zeta");
  return {};
}

/// Functorial transport: the same Galois connection, zeta ≡ 0 at the diagram level.
inline InnMorphism induce_inn(const FilMorphism& m) { return {m.g}; }
template <class T>
GpdMorphism<T> induce_gpd(const InnMorphism& m) {
  return {m.g, {}};
}
template <class T>
ChargeMorphism induce_fnc(const GpdMorphism<T>& m) {
  return {m.g};
}

/// Composite of M1 -> M2 (m1) and M2 -> M3 (m2): zeta' = zeta3 + pushforward(zeta2).
template <class T>
GpdMorphism<T> compose(const GpdMorphism<T>& m1, const GpdMorphism<T>& m2) {
  GpdMorphism<T> out{compose(m1.g, m2.g), m2.zeta};
  for (const auto& [k, W] : m1.zeta) {
    const int image = m2.g.left.at(k);
    auto it = out.zeta.find(image);
    if (it == out.zeta.end())
      out.zeta.emplace(image, W);
    else
      it->second = it->second + W;
  }
  return out;
}

enum class Direction { Forward, Backward };

struct PathStep {
  GaloisConnection g;
  Direction direction = Direction::Forward;
};

/// Sum of step costs. Consecutive steps must meet at a common poset.
ExtendedValue path_cost(const std::vector<PathStep>& path);

}  // namespace gpd
