#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace gpd;

namespace {

std::shared_ptr<const Filtration> random_connected(Rng& rng) {
  RandomFiltrationOptions opt;
  opt.connected = true;
  opt.max_dim = 2;
  return std::make_shared<const Filtration>(random_filtration(rng, opt));
}

// Same subspace, compared by canonical basis across distinct ambient objects.
bool same_span(const Subspace<Rational>& a, const Subspace<Rational>& b) { return a.basis() == b.basis(); }

}  // namespace

TEST_CASE("treegram states match union-find components") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_connected(rng);
    const Treegram t = treegram_of_filtration(*f);
    const int nv = static_cast<int>(f->vertices().size());
    REQUIRE(static_cast<int>(t.states.size()) == f->steps());
    for (int k = 0; k < f->steps(); ++k) {
      std::set<int> alive;
      std::vector<std::pair<int, int>> edges;
      for (const auto& [s, e] : f->entries()) {
        if (e > k) continue;
        if (s.size() == 1) alive.insert(s[0]);
        if (s.size() == 2) edges.emplace_back(s[0], s[1]);
      }
      CHECK(t.states[k].blocks == oracle::components(nv, alive, edges));
    }
  }
}

TEST_CASE("reconstruction from the treegram equals the product inverse of ZB_0") {
  Rng rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const auto f = random_connected(rng);
    CHECK_FALSE(check_treegram_roundtrip<Rational>(f).has_value());
  }
}

TEST_CASE("centroid spans around the five-fold merge") {
  const Treegram t = fixtures::merge_treegram();
  const auto f = fixtures::merge_filtration();
  REQUIRE(treegram_of_filtration(*f) == t);
  const ChainModel<Rational> model(f);
  const auto amb = model.ambient(0);
  using fixtures::vec;
  const Rational h(1, 2), third(1, 3), eighth(1, 8), fifteenth(1, 15);

  auto minus = [](std::vector<Rational> a, const std::vector<Rational>& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
    return a;
  };
  const auto c8 = vec(amb, {{"x", eighth}, {"y", eighth}, {"z", eighth}, {"v", eighth},
                            {"w", eighth}, {"g", eighth}, {"h", eighth}, {"k", eighth}});
  std::map<std::string, Rational> all15;
  for (const auto& name : t.vertices)
    if (name != "a1" && name != "a2") all15[name] = fifteenth;
  const auto c15 = vec(amb, all15);

  const auto s15 = Subspace<Rational>::span(
      amb, {minus(vec(amb, {{"v", h}, {"w", h}}), vec(amb, {{"y", 1}})), vec(amb, {{"g", 1}, {"y", -1}}),
            vec(amb, {{"k", 1}, {"y", -1}})});
  const auto s35 = Subspace<Rational>::span(
      amb, {minus(vec(amb, {{"l", h}, {"n", h}}), c8), minus(vec(amb, {{"p", third}, {"q", third}, {"r", third}}), c8)});
  const auto s55 = Subspace<Rational>::span(amb, {minus(vec(amb, {{"a1", 1}}), c15), minus(vec(amb, {{"a2", 1}}), c15)});

  const auto R = reconstruct_gpd0(t, amb);
  CHECK(R.at({0, 4}) == s15);
  CHECK(R.at({2, 4}) == s35);
  CHECK(R.at({4, 4}) == s55);
  const auto D = oi_times(zb(model, 0));
  CHECK(D == R);
  CHECK(treegram_from_gpd0(D, t.vertices) == t);
}

TEST_CASE("malformed treegrams are rejected") {
  Treegram t = fixtures::merge_treegram();
  SUBCASE("support shrinks") { t.states[1].blocks.pop_back(); }
  SUBCASE("block splits") {
    t.states[2] = t.states[1];
    t.states[2].blocks[0] = {t.states[1].blocks[0][0]};
  }
  SUBCASE("final state not a single block") { t.states.back() = t.states[3]; }
  SUBCASE("breakpoints out of order") { std::swap(t.times[0], t.times[1]); }
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
}

TEST_CASE("treegram of a disconnected filtration is an input error") {
  const auto f = parse_filtration_text("vertices: a b\n1 ; a\n1 ; b\n");
  CHECK_THROWS_AS(treegram_of_filtration(f), InputError);
}

TEST_CASE("the two path filtrations share a classical diagram but not their treegrams") {
  const auto f1 = fixtures::path_ab_first(), f2 = fixtures::path_bc_first();
  const ChainModel<Rational> m1(f1), m2(f2);
  CHECK_FALSE(treegram_of_filtration(*f1) == treegram_of_filtration(*f2));
  CHECK(mobius_invert_int(betti_function(m1, 0)) == mobius_invert_int(betti_function(m2, 0)));
  const auto d1 = oi_times(zb(m1, 0)), d2 = oi_times(zb(m2, 0));
  CHECK(dim_diagram(d1) == dim_diagram(d2));
  bool differ = false;
  for (const Interval& I : all_intervals(f1->steps())) differ = differ || !same_span(d1.at(I), d2.at(I));
  CHECK(differ);
  CHECK_FALSE(same_span(d1.at({0, 1}), d2.at({0, 1})));
  CHECK_FALSE(same_span(d1.at({0, 2}), d2.at({0, 2})));
}

TEST_CASE("dot output lists every breakpoint") {
  const std::string dot = treegram_to_dot(fixtures::merge_treegram());
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("a1") != std::string::npos);
}
