#include "gpd/morphisms.hpp"

namespace gpd {

Validation validate(const FilMorphism& m, const Filtration& F, const Filtration& G) {
  if (auto c = detail::check_connection(m.g, F.poset(), G.poset()); !c) return c;
  if (F.vertices() != G.vertices()) return Validation::fail("filtrations have different vertex sets");
  if (F.entries().size() != G.entries().size()) return Validation::fail("filtrations are over different complexes");
  for (const auto& [s, e] : F.entries())
    if (!G.entries().count(s)) return Validation::fail("filtrations are over different complexes");
  for (int q = 0; q < G.steps(); ++q)
    if (F.sublevel(m.g.right[q]) != G.sublevel(q))
      return Validation::fail("F ∘ right differs from G at " + rational_to_string(G.poset().grade(q)));
  return {};
}

Validation validate(const ChargeMorphism& m, const IntegerIntervalFunction& alpha, const IntegerIntervalFunction& beta) {
  if (auto c = verify_galois(m.g); !c.ok) return Validation::fail("not a Galois connection: " + c.reason);
  if (alpha.n != m.g.source.size() || beta.n != m.g.target.size()) return Validation::fail("poset sizes do not match");
  const IntervalMap left = bar(m.g).left;
  std::map<Interval, std::int64_t> pushed;
  for (const auto& [I, v] : alpha.values) pushed[left(I)] += v;
  for (const Interval& J : off_diagonal_intervals(beta.n)) {
    auto it = pushed.find(J);
    const std::int64_t got = it == pushed.end() ? 0 : it->second;
    if (got != beta.at(J))
      return Validation::fail("charge not preserved at [" + std::to_string(J.birth) + "," +
                              (J.is_ray() ? std::string("inf") : std::to_string(J.death)) + "]");
  }
  return {};
}

ExtendedValue path_cost(const std::vector<PathStep>& path) {
  ExtendedValue total;
  const LinearMetricPoset* at = nullptr;
  for (const PathStep& step : path) {
    if (auto c = verify_galois(step.g); !c.ok) throw std::invalid_argument("path step is not a Galois connection");
    const bool fwd = step.direction == Direction::Forward;
    const LinearMetricPoset& from = fwd ? step.g.source : step.g.target;
    if (at && !(*at == from)) throw std::invalid_argument("path steps are not composable");
    at = fwd ? &step.g.target : &step.g.source;
    const ExtendedValue c = cost(step.g);
    if (c.infinite || total.infinite)
      total = ExtendedValue::inf();
    else
      total.value += c.value;
  }
  return total;
}

}  // namespace gpd
