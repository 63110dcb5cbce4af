#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

oracle::Complex oracle_of(const Filtration& f) { return {f.entries()}; }

}  // namespace

TEST_CASE("persistent Betti numbers match the quotient-rank oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = std::make_shared<const Filtration>(random_filtration(rng));
    const ChainModel<Rational> model(f);
    const auto o = oracle_of(*f);
    for (int q = 0; q <= 2; ++q)
      for (int i = 0; i < f->steps(); ++i)
        for (int j = i; j < f->steps(); ++j) CHECK(persistent_betti(model, q, i, j) == o.betti(q, i, j));
  }
}

TEST_CASE("birth-death spaces are intersection-monotone with the stated extremes") {
  Rng rng(22);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = std::make_shared<const Filtration>(random_filtration(rng));
    const ChainModel<Rational> model(f);
    for (int q = 0; q <= 2; ++q) {
      const auto F = zb(model, q);
      CHECK_FALSE(check_intersection_monotone(F).has_value());
      for (int i = 0; i < f->steps(); ++i) {
        CHECK(F.at({i, kInf}) == model.cycles(q, i));
        CHECK(F.at({i, i}) == intersect(model.cycles(q, i), model.boundaries(q, i)));
      }
    }
  }
}

TEST_CASE("a non-monotone function reports the first violating interval") {
  auto amb = std::make_shared<const AmbientSpace<Rational>>(2);
  SubspaceIntervalFunction<Rational> F{LinearMetricPoset::range(2), IntervalOrder::Product, amb, {}};
  const auto e1 = Subspace<Rational>::span(amb, {{1, 0}}), e2 = Subspace<Rational>::span(amb, {{0, 1}});
  F.values = {{{0, 0}, e1}, {{0, 1}, e2}, {{1, 1}, e2}, {{0, kInf}, e1 + e2}, {{1, kInf}, e1 + e2}};
  const auto v = check_intersection_monotone(F);
  REQUIRE(v.has_value());
  CHECK(v->i == 0);
  CHECK_THROWS_AS(oi_times(F), NotIntersectionMonotone);
}

TEST_CASE("persistent Laplacian is self-adjoint, positive semidefinite, with Betti-sized kernel") {
  Rng rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto f = std::make_shared<const Filtration>(random_filtration(rng));
    std::map<int, Matrix<Rational>> grams;
    if (trial % 2)
      for (int q = 0; q <= 3; ++q)
        if (auto d = f->simplices(q).size()) grams.emplace(q, random_spd(rng, d));
    const ChainModel<Rational> model(f, grams);
    const auto o = oracle_of(*f);
    for (int q = 0; q <= 2; ++q)
      for (int i = 0; i < f->steps(); ++i)
        for (int j = i; j < f->steps(); ++j) {
          const auto L = persistent_laplacian(model, q, i, j);
          const auto gop = L.gram * L.op;
          CHECK(is_symmetric(gop));
          if (L.op.rows()) {
            const auto x = Matrix<Rational>::from_columns({random_integer_vector(rng, L.op.rows())}, L.op.rows());
            CHECK((x.transpose() * gop * x)(0, 0) >= 0);
          }
          CHECK(L.kernel().dim() == o.betti(q, i, j));
          CHECK(L.kernel() == laplacian_kernel(model, q, i, j));
        }
  }
}

TEST_CASE("LK has the shifted Betti dimensions") {
  Rng rng(24);
  for (int trial = 0; trial < 30; ++trial) {
    const auto f = std::make_shared<const Filtration>(random_filtration(rng));
    const ChainModel<Rational> model(f);
    const auto o = oracle_of(*f);
    const int n = f->steps();
    for (int q = 0; q <= 2; ++q) {
      const auto L = lk(model, q);
      for (const Interval& I : off_diagonal_intervals(n))
        CHECK(L.at(I).dim() == o.betti(q, I.birth, I.is_ray() ? n - 1 : I.death - 1));
    }
  }
}

TEST_CASE("projection preimage agrees with brute-force enumeration") {
  Rng rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    auto amb = std::make_shared<const AmbientSpace<Rational>>(n, random_spd(rng, n));
    auto sub = [&](std::size_t k) {
      std::vector<std::vector<Rational>> vs;
      for (std::size_t i = 0; i < k; ++i) vs.push_back(random_integer_vector(rng, n, 1));
      return Subspace<Rational>::span(amb, vs);
    };
    const auto H = sub(1 + rng() % n), target = sub(1 + rng() % n);
    const auto S = intersect(target, sub(rng() % n + 1));
    const auto R = projection_preimage(H, target, S);
    CHECK(H.contains(R));
    for (const auto& x : R.basis()) CHECK(S.contains(project(x, target)));
    // Every small combination of H's basis lies in R exactly when it projects into S.
    const auto hb = H.basis();
    std::vector<int> c(hb.size(), -1);
    for (;;) {
      std::vector<Rational> x(n, 0);
      for (std::size_t k = 0; k < hb.size(); ++k)
        for (std::size_t t = 0; t < n; ++t) x[t] += c[k] * hb[k][t];
      CHECK(R.contains(x) == S.contains(project(x, target)));
      std::size_t k = 0;
      while (k < c.size() && c[k] == 1) c[k++] = -1;
      if (k == c.size()) break;
      ++c[k];
    }
  }
}

TEST_CASE("harmonic barcode in the two-triangle example") {
  const auto f = fixtures::two_triangles();
  const ChainModel<Rational> model(f);
  for (auto base : {HarmonicBase::EmptyBase, HarmonicBase::CopyFirst}) {
    CHECK(harmonic_tower(model, 0, 1, 2, base).P.dim() == 1);
    CHECK(harmonic_tower(model, 0, 3, 4, base).P.dim() == 1);
    CHECK(harmonic_tower(model, 1, 5, 6, base).P.dim() == 1);
    CHECK(harmonic_tower(model, 0, 1, 3, base).P.dim() == 0);
  }
  CHECK_THROWS(harmonic_tower(model, 0, 2, 2));
}

TEST_CASE("the base convention matters when the first step is not empty") {
  const auto f = fixtures::path_ab_first();
  const ChainModel<Rational> model(f);
  const auto classical = mobius_invert_int(betti_function(model, 0));
  CHECK(classical.at({0, 1}) == 1);
  CHECK(harmonic_tower(model, 0, 0, 1, HarmonicBase::EmptyBase).P.dim() == 1);
  CHECK(harmonic_tower(model, 0, 0, 1, HarmonicBase::CopyFirst).P.dim() == 0);
}

TEST_CASE("classical diagram of the two-triangle example in degree 0") {
  const ChainModel<Rational> model(fixtures::two_triangles());
  const auto m = mobius_invert_int(betti_function(model, 0));
  const std::map<Interval, std::int64_t> expect{{{1, 2}, 1}, {{3, 4}, 1}, {{1, kInf}, 1}};
  for (const Interval& I : off_diagonal_intervals(7)) CHECK(m.at(I) == (expect.count(I) ? expect.at(I) : 0));
}
