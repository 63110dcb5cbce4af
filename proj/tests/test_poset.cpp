#include <doctest.h>

#include "gpd/random.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

IntegerIntervalFunction random_function(Rng& rng, int n, IntervalOrder order) {
  IntegerIntervalFunction m{n, order, {}};
  for (const Interval& I : domain(n, order)) m.values[I] = static_cast<std::int64_t>(rng() % 7) - 3;
  return m;
}

LinearMetricPoset grades(std::vector<Rational> g) { return LinearMetricPoset(std::move(g)); }

}  // namespace

TEST_CASE("closed-form interval inversion matches the zeta-matrix oracle") {
  Rng rng(1);
  for (auto order : {IntervalOrder::Product, IntervalOrder::ReverseInclusion})
    for (int trial = 0; trial < 60; ++trial) {
      const int n = 1 + static_cast<int>(rng() % 6);
      const auto m = random_function(rng, n, order);
      const auto dom = domain(n, order);
      std::vector<std::int64_t> values;
      for (const Interval& I : dom) values.push_back(m.at(I));
      const auto expect = oracle::mobius(values, [&](std::size_t a, std::size_t b) { return interval_leq(dom[a], dom[b], order); });
      const auto got = mobius_invert_int(m);
      for (std::size_t k = 0; k < dom.size(); ++k) CHECK(got.at(dom[k]) == expect[k]);
    }
}

TEST_CASE("inversion followed by down-set summation recovers the function") {
  Rng rng(2);
  for (auto order : {IntervalOrder::Product, IntervalOrder::ReverseInclusion}) {
    const int n = 5;
    const auto m = random_function(rng, n, order);
    const auto inv = mobius_invert_int(m);
    for (const Interval& J : domain(n, order)) {
      std::int64_t s = 0;
      for (const Interval& I : domain(n, order))
        if (interval_leq(I, J, order)) s += inv.at(I);
      CHECK(s == m.at(J));
    }
  }
}

TEST_CASE("diagonal intervals are not comparable under reverse inclusion") {
  CHECK_THROWS(interval_leq({1, 1}, {0, 2}, IntervalOrder::ReverseInclusion));
  CHECK(interval_leq({0, 3}, {1, 2}, IntervalOrder::ReverseInclusion));
  CHECK(interval_leq({0, kInf}, {1, 2}, IntervalOrder::ReverseInclusion));
  CHECK(interval_leq({0, 2}, {1, kInf}, IntervalOrder::Product));
  CHECK_FALSE(interval_leq({0, kInf}, {1, 2}, IntervalOrder::Product));
}

TEST_CASE("Galois connection of the three-to-two example and its integer RGCT numbers") {
  const auto P = LinearMetricPoset::range(3), Q = LinearMetricPoset::range(2);
  const auto g = GaloisConnection::from_left(P, Q, {0, 1, 1});
  CHECK(g.right == std::vector<int>{0, 2});
  CHECK(verify_galois(g).ok);
  const std::vector<std::int64_t> m{1, 2, 5};
  const auto dm = mobius_invert_chain(m);
  CHECK(dm == std::vector<std::int64_t>{1, 1, 3});
  const auto pulled = pullback_chain(g.right, m);
  CHECK(pulled == std::vector<std::int64_t>{1, 5});
  CHECK(mobius_invert_chain(pulled) == std::vector<std::int64_t>{1, 4});
  CHECK(pushforward_chain(g.left, Q.size(), dm) == std::vector<std::int64_t>{1, 4});
  CHECK(bar(g).left({1, 2}) == Interval{1, 1});
  CHECK(bar(g).left({0, kInf}) == Interval{0, kInf});
}

TEST_CASE("RGCT on chains and on interval posets for random connections") {
  Rng rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const auto P = random_poset(rng, 1 + static_cast<int>(rng() % 5));
    const auto g = random_galois(rng, P, 5);
    REQUIRE(verify_galois(g).ok);
    std::vector<std::int64_t> m(P.size());
    for (auto& x : m) x = static_cast<std::int64_t>(rng() % 9) - 4;
    CHECK(pushforward_chain(g.left, g.target.size(), mobius_invert_chain(m)) ==
          mobius_invert_chain(pullback_chain(g.right, m)));

    const auto gb = bar(g);
    CHECK(verify_interval_galois(gb).ok);
    const auto mi = random_function(rng, P.size(), IntervalOrder::Product);
    CHECK(pushforward_int(gb.left, mobius_invert_int(mi)) == mobius_invert_int(pullback_int(gb.right, mi)));
    CHECK(distortion(g, Side::Left) == interval_distortion(g.source, g.target, gb.left));
  }
}

TEST_CASE("composition of Galois connections is a Galois connection") {
  Rng rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const auto P = random_poset(rng, 1 + static_cast<int>(rng() % 5));
    const auto g1 = random_galois(rng, P, 5);
    const auto g2 = random_galois(rng, g1.target, 5);
    CHECK(verify_galois(compose(g1, g2)).ok);
  }
}

TEST_CASE("non-adjoint pairs are rejected with a reason") {
  const auto P = LinearMetricPoset::range(3), Q = LinearMetricPoset::range(2);
  GaloisConnection g{P, Q, {0, 1, 1}, {0, 1}};
  const auto c = verify_galois(g);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.reason.empty());
  CHECK_THROWS(GaloisConnection::from_left(P, Q, {1, 1, 1}));
}

TEST_CASE("distortion of the left adjoint in the half-integer example") {
  const auto P = grades({1, 2, 3}), Q = grades({Rational(3, 2), Rational(5, 2)});
  const auto g = GaloisConnection::from_left(P, Q, {0, 1, 1});
  CHECK(g.right == std::vector<int>{0, 2});
  CHECK(distortion(g, Side::Left) == ExtendedValue{false, 1});
  CHECK(distortion(GaloisConnection::identity(P)) == ExtendedValue{false, 0});
}

TEST_CASE("explicit metrics are validated and used") {
  using EV = ExtendedValue;
  std::vector<std::vector<EV>> d{{{false, 0}, {false, 2}}, {{false, 2}, {false, 0}}};
  const LinearMetricPoset P({0, 1}, d);
  CHECK(P.distance(0, 1) == EV{false, 2});
  std::vector<std::vector<EV>> bad{{{false, 0}, {false, 1}}, {{false, 2}, {false, 0}}};
  CHECK_THROWS(LinearMetricPoset({0, 1}, bad));
  std::vector<std::vector<EV>> inf{{{false, 0}, EV::inf()}, {EV::inf(), {false, 0}}};
  const LinearMetricPoset R({0, 1}, inf);
  const auto g = GaloisConnection::identity(R);
  CHECK(distortion(g) == EV{false, 0});
}
