#include <doctest.h>

#include "fixtures.hpp"

using namespace gpd;

namespace {

int error_line(const std::string& text) {
  try {
    parse_filtration_text(text);
  } catch (const InputError& e) {
    return e.line;
  }
  return -1;
}

}  // namespace

TEST_CASE("text filtrations map distinct grades to indices in order") {
  const auto f = parse_filtration_text("vertices: a b\n0.5 ; a\n1/4 ; b\n2 ; a b  # edge\n");
  REQUIRE(f.steps() == 3);
  CHECK(f.poset().grade(0) == Rational(1, 4));
  CHECK(f.poset().grade(1) == Rational(1, 2));
  CHECK(f.entry({0}) == 1);
  CHECK(f.entry({1}) == 0);
  CHECK(f.entry({0, 1}) == 2);
  CHECK(f.simplex_names(1) == std::vector<std::string>{"ab"});
}

TEST_CASE("vertex order follows the header, otherwise name order") {
  const auto f = parse_filtration_text("vertices: c b a\n1 ; a\n1 ; b\n1 ; c\n2 ; b a\n");
  CHECK(f.vertices() == std::vector<std::string>{"c", "b", "a"});
  CHECK(f.simplex_names(1) == std::vector<std::string>{"ba"});
  const auto g = parse_filtration_text("1 ; x\n1 ; w\n2 ; w x\n");
  CHECK(g.vertices() == std::vector<std::string>{"w", "x"});
}

TEST_CASE("malformed files report the offending line") {
  CHECK(error_line("vertices: a b\n1 ; a\n2 ; a b\n") == 3);
  CHECK(error_line("vertices: a b c\n1 ; a\n1 ; b\n2 ; a b c\n") == 4);
  CHECK(error_line("vertices: a b\n1 ; a\n1 ; b\n0 ; a b\n") == 4);
  CHECK(error_line("vertices: a\n1 ; a\n1 ; a\n") == 3);
  CHECK(error_line("vertices: a\n1 ; z\n") == 2);
  CHECK(error_line("1 a\n") == 1);
  CHECK(error_line("x ; a\n") == 1);
}

TEST_CASE("JSON filtrations parse to the same object as text") {
  const auto a = parse_filtration(R"({"vertices": ["a", "b"], "simplices": [
      {"t": 1, "v": ["a"]}, {"t": "3/2", "v": ["b"]}, {"t": 2.5, "v": ["a", "b"]}]})");
  const auto b = parse_filtration("vertices: a b\n1 ; a\n3/2 ; b\n2.5 ; a b\n");
  CHECK(a.entries() == b.entries());
  CHECK(a.poset() == b.poset());
  CHECK_THROWS_AS(parse_filtration("{\"simplices\": [}"), InputError);
}

TEST_CASE("empty input is the empty filtration") {
  const auto f = parse_filtration("# nothing\n\n");
  CHECK(f.steps() == 0);
  CHECK(f.vertices().empty());
}

TEST_CASE("boundary of a boundary is zero") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_filtration(rng);
    for (int q = 1; q <= f.max_dim(); ++q) {
      if (q + 1 > f.max_dim()) break;
      const auto prod = boundary_matrix(f, q) * boundary_matrix(f, q + 1);
      CHECK(prod.max_magnitude() == 0);
    }
  }
}

TEST_CASE("boundary signs follow the vertex order") {
  const auto f = fixtures::two_triangles();
  const auto d2 = boundary_matrix(*f, 2);
  // abc -> bc - ac + ab over edges ab, ac, bc, bd, cd
  CHECK(d2(0, 0) == 1);
  CHECK(d2(1, 0) == -1);
  CHECK(d2(2, 0) == 1);
  CHECK(d2(3, 0) == 0);
}

TEST_CASE("sublevel complexes grow and the chain model is indexed K-wide") {
  const auto f = fixtures::two_triangles();
  CHECK(f->sublevel(-1).empty());
  CHECK(f->sublevel(0).empty());
  CHECK(f->sublevel(1).size() == 4);
  CHECK(f->sublevel(6).size() == f->entries().size());
  const ChainModel<Rational> model(f);
  CHECK(model.chain_dim(0) == 4);
  CHECK(model.cycles(0, 1).dim() == 3);
  CHECK(model.boundaries(0, 1).dim() == 1);
  CHECK(model.cycles(1, 2).dim() == 1);
  CHECK(model.boundaries(1, 2).dim() == 1);
  CHECK(model.cycles(0, -1).is_zero());
}

TEST_CASE("connectivity and transport along a Galois connection") {
  CHECK(fixtures::two_triangles()->connected());
  const auto d = parse_filtration_text("vertices: a b\n0 ; a\n1 ; b\n");
  CHECK_FALSE(d.connected());
  const auto f = fixtures::path_ab_first();
  const auto g = GaloisConnection::from_left(f->poset(), LinearMetricPoset::range(2), {0, 1, 1});
  const auto t = f->transport(g.target, g.left);
  for (int q = 0; q < g.target.size(); ++q) CHECK(t.sublevel(q) == f->sublevel(g.right[q]));
}
