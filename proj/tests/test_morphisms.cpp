#include <doctest.h>

#include "fixtures.hpp"

using namespace gpd;

namespace {

using V = std::vector<Rational>;

LinearMetricPoset halves() { return LinearMetricPoset({Rational(3, 2), Rational(5, 2)}); }

// Grades 1 < 2 < 3 mapped onto 3/2 < 5/2 by left = (1 -> 3/2, 2 -> 5/2, 3 -> 5/2).
GaloisConnection three_to_two() { return GaloisConnection::from_left(LinearMetricPoset::range(3), halves(), {0, 1, 1}); }

GrassmannianDiagram<Rational> diagram(const LinearMetricPoset& P, const AmbientPtr<Rational>& amb,
                                      const std::map<Interval, std::vector<V>>& gens) {
  GrassmannianDiagram<Rational> D{P, IntervalOrder::Product, amb, {}};
  for (const auto& [I, g] : gens) D.set(I, Subspace<Rational>::span(amb, g));
  return D;
}

SubspaceIntervalFunction<Rational> downsets(const GrassmannianDiagram<Rational>& D) {
  SubspaceIntervalFunction<Rational> F{D.poset, IntervalOrder::Product, D.ambient, {}};
  const auto dom = all_intervals(D.n());
  const auto sums = downset_sums(as_vector(D, IntervalOrder::Product), FinitePoset::intervals(dom, IntervalOrder::Product));
  for (std::size_t k = 0; k < dom.size(); ++k) F.values.emplace(dom[k], sums[k]);
  return F;
}

}  // namespace

TEST_CASE("a transported diagram that differs pointwise is still a valid morphism target") {
  const auto g = three_to_two();
  auto amb = std::make_shared<const AmbientSpace<Rational>>(4);
  const auto M = diagram(g.source, amb,
                         {{{0, 0}, {{1, 0, 0, 0}}}, {{1, 1}, {{0, 1, 0, 0}}}, {{0, 2}, {{0, 1, 1, 0}}}, {{0, kInf}, {{0, 0, 0, 1}}}});
  const auto N = diagram(g.target, amb,
                         {{{0, 0}, {{1, 0, 0, 0}}}, {{0, 1}, {{0, 1, 1, 0}}}, {{1, 1}, {{0, 1, -1, 0}}}, {{0, kInf}, {{0, 0, 0, 1}}}});
  REQUIRE(M.transverse());
  REQUIRE(N.transverse());

  const auto pushed = pushforward(bar(g).left, M, g.target);
  CHECK(pushed.at({1, 1}) == Subspace<Rational>::span(amb, {{0, 1, 0, 0}}));
  CHECK(pushed.at({1, 1}) != N.at({1, 1}));
  CHECK(mobius_equivalent(pushed, N, IntervalOrder::Product));

  const GpdMorphism<Rational> m{g, {}};
  CHECK(validate(m, M, N));
  CHECK(cost(m) == ExtendedValue{false, 1});

  const auto F = downsets(M), G = downsets(N);
  CHECK(validate(InnMorphism{g}, F, G));
  CHECK(oi_times(G) == N);
  CHECK(validate(ChargeMorphism{g}, dim_diagram(M), dim_diagram(N)));
}

TEST_CASE("a morphism into an unrelated diagram is rejected") {
  const auto g = three_to_two();
  auto amb = std::make_shared<const AmbientSpace<Rational>>(2);
  const auto M = diagram(g.source, amb, {{{0, kInf}, {{1, 0}}}, {{1, 2}, {{0, 1}}}});
  const auto N = diagram(g.target, amb, {{{0, kInf}, {{0, 1}}}, {{1, 1}, {{1, 0}}}});
  const auto v = validate(GpdMorphism<Rational>{g, {}}, M, N);
  CHECK_FALSE(v);
  CHECK(v.reason.find("Möbius") != std::string::npos);
  // The charges still match: dimensions cannot see the swap.
  CHECK(validate(ChargeMorphism{g}, dim_diagram(M), dim_diagram(N)));
}

TEST_CASE("a diagonal-blind morphism absorbs the diagonal and costs nothing") {
  const ChainModel<Rational> model(fixtures::two_triangles());
  const auto D = oi_times(zb(model, 1));
  GpdMorphism<Rational> blind{GaloisConnection::identity(D.poset), {}};
  for (const auto& [I, W] : D.diagonal().values) blind.zeta.emplace(I.birth, W);
  CHECK(validate(blind, D, D.off_diagonal()));
  CHECK(cost(blind) == ExtendedValue{false, 0});
  CHECK_FALSE(validate(GpdMorphism<Rational>{GaloisConnection::identity(D.poset), {}}, D, D.off_diagonal()));
}

TEST_CASE("zeta must be transversal to the target") {
  const auto P = LinearMetricPoset::range(2);
  auto amb = std::make_shared<const AmbientSpace<Rational>>(2);
  const auto N = diagram(P, amb, {{{1, 1}, {{1, 0}}}});
  GpdMorphism<Rational> m{GaloisConnection::identity(P), {{1, Subspace<Rational>::span(amb, {{1, 0}})}}};
  const auto v = validate(m, N, N);
  CHECK_FALSE(v);
  CHECK(v.reason.find("transversal") != std::string::npos);
}

TEST_CASE("filtration morphisms transport through every category with equal cost") {
  SuiteOptions opt;
  opt.seed = 7;
  opt.morphisms = 30;
  for (const auto& inst : make_morphisms(opt)) {
    const auto r = check_transport<Rational>(inst, 1);
    CHECK_FALSE(r.fil.has_value());
    CHECK_FALSE(r.inn.has_value());
    CHECK_FALSE(r.gpd.has_value());
    CHECK_FALSE(r.charge.has_value());
    CHECK_FALSE(r.cost.has_value());
    CHECK_FALSE(check_composition<Rational>(inst, 0).has_value());
  }
}

TEST_CASE("a mismatched filtration morphism is rejected") {
  const auto f = fixtures::path_ab_first(), h = fixtures::path_bc_first();
  const auto v = validate(FilMorphism{GaloisConnection::identity(f->poset())}, *f, *h);
  CHECK_FALSE(v);
}

TEST_CASE("composition adds pushed zeta onto the second zeta") {
  const auto g1 = three_to_two();
  const auto g2 = GaloisConnection::identity(halves());
  auto amb = std::make_shared<const AmbientSpace<Rational>>(2);
  const GpdMorphism<Rational> a{g1, {{1, Subspace<Rational>::span(amb, {{1, 0}})}}};
  const GpdMorphism<Rational> b{g2, {{1, Subspace<Rational>::span(amb, {{0, 1}})}}};
  const auto c = compose(a, b);
  REQUIRE(c.zeta.count(1));
  CHECK(c.zeta.at(1) == Subspace<Rational>::full(amb));
  CHECK(c.g.left == g1.left);
}

TEST_CASE("path cost sums step costs in either direction") {
  const auto g = three_to_two();
  CHECK(path_cost({}) == ExtendedValue{false, 0});
  CHECK(path_cost({{g, Direction::Forward}}) == ExtendedValue{false, 1});
  CHECK(path_cost({{g, Direction::Forward}, {g, Direction::Backward}}) == ExtendedValue{false, 2});
  CHECK_THROWS(path_cost({{g, Direction::Forward}, {g, Direction::Forward}}));
}

TEST_CASE("cost is infinite when a finite distance is sent to an infinite one") {
  const std::vector<std::vector<ExtendedValue>> metric{{{false, 0}, ExtendedValue::inf()}, {ExtendedValue::inf(), {false, 0}}};
  const LinearMetricPoset split({Rational(0), Rational(1)}, metric);
  const auto g = GaloisConnection::from_left(LinearMetricPoset::range(2), split, {0, 1});
  CHECK(cost(FilMorphism{g}).infinite);
}
