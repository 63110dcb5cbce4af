// Worked instances shared by the unit tests and the acceptance binary.
#pragma once

#include <stdexcept>

#include "gpd/io.hpp"
#include "gpd/verify.hpp"

namespace fixtures {

using namespace gpd;

inline std::shared_ptr<const Filtration> make(const std::vector<std::string>& names, int steps, const std::map<std::string, int>& at) {
  std::map<Simplex, int> entry;
  for (const auto& [s, e] : at) {
    Simplex simplex;
    for (char ch : s) simplex.push_back(static_cast<int>(std::find(names.begin(), names.end(), std::string(1, ch)) - names.begin()));
    entry[simplex] = e;
  }
  std::vector<Rational> grades;
  for (int i = 0; i < steps; ++i) grades.emplace_back(i);
  return std::make_shared<const Filtration>(names, LinearMetricPoset(grades), entry);
}

// Two triangles sharing bc, grades 0..6, nothing at grade 0.
inline std::shared_ptr<const Filtration> two_triangles() {
  return make({"a", "b", "c", "d"}, 7,
              {{"a", 1}, {"b", 1}, {"c", 1}, {"ab", 1}, {"ac", 2}, {"bc", 2}, {"abc", 2},
               {"d", 3}, {"cd", 4}, {"bd", 5}, {"bcd", 6}});
}

// Paths on a, b, c with the merge order swapped; grades 1..3.
inline std::shared_ptr<const Filtration> path_ab_first() {
  auto f = parse_filtration_text("vertices: a b c\n1 ; a\n1 ; b\n1 ; c\n2 ; a b\n3 ; b c\n");
  return std::make_shared<const Filtration>(std::move(f));
}
inline std::shared_ptr<const Filtration> path_bc_first() {
  auto f = parse_filtration_text("vertices: a b c\n1 ; a\n1 ; b\n1 ; c\n2 ; b c\n3 ; a b\n");
  return std::make_shared<const Filtration>(std::move(f));
}

// Linear combination of named basis elements of an ambient space.
inline std::vector<Rational> vec(const AmbientPtr<Rational>& amb, const std::map<std::string, Rational>& coeff) {
  std::vector<Rational> v(amb->dim(), 0);
  for (const auto& [name, c] : coeff) {
    const auto& labels = amb->labels();
    auto it = std::find(labels.begin(), labels.end(), name);
    if (it == labels.end()) throw std::invalid_argument("unknown basis label " + name);
    v[it - labels.begin()] = c;
  }
  return v;
}

inline Subspace<Rational> span1(const AmbientPtr<Rational>& amb, const std::map<std::string, Rational>& coeff) {
  return Subspace<Rational>::span(amb, {vec(amb, coeff)});
}

// Treegram around one merge at grade 5: births y,v,w,g,k at 1; x,z,h at 2;
// l,n,p,q,r at 3; u,m at 4; a1,a2 at 5 where everything merges.
inline Treegram merge_treegram() {
  Treegram t;
  t.vertices = {"x", "y", "z", "u", "v", "w", "g", "h", "k", "l", "m", "n", "p", "q", "r", "a1", "a2"};
  auto id = [&](const std::string& s) { return static_cast<int>(std::find(t.vertices.begin(), t.vertices.end(), s) - t.vertices.begin()); };
  auto state = [&](std::vector<std::vector<std::string>> blocks) {
    SubPartition sp;
    for (const auto& b : blocks) {
      std::vector<int> ids;
      for (const auto& s : b) ids.push_back(id(s));
      sp.blocks.push_back(ids);
    }
    sp.normalize();
    return sp;
  };
  for (int g = 1; g <= 5; ++g) t.times.emplace_back(g);
  t.states = {
      state({{"y"}, {"v", "w"}, {"g"}, {"k"}}),
      state({{"x", "y", "z"}, {"v", "w"}, {"g", "h"}, {"k"}}),
      state({{"x", "y", "z"}, {"v", "w"}, {"g", "h"}, {"k"}, {"l", "n"}, {"p", "q", "r"}}),
      state({{"x", "y", "z", "u"}, {"v", "w"}, {"g", "h"}, {"k"}, {"l", "m", "n"}, {"p", "q", "r"}}),
      state({t.vertices}),
  };
  t.validate();
  return t;
}

// A graph filtration whose treegram is merge_treegram().
inline std::shared_ptr<const Filtration> merge_filtration() {
  const Treegram t = merge_treegram();
  const std::vector<int> birth = t.birth_indices();
  std::map<Simplex, int> entry;
  for (std::size_t v = 0; v < t.vertices.size(); ++v) entry[{static_cast<int>(v)}] = birth[v];
  // Each block is a path in vertex order, joined when its last member arrives.
  for (std::size_t k = 0; k < t.states.size(); ++k)
    for (const auto& b : t.states[k].blocks)
      for (std::size_t x = 1; x < b.size(); ++x) {
        const Simplex e{std::min(b[x - 1], b[x]), std::max(b[x - 1], b[x])};
        if (!entry.count(e)) entry[e] = static_cast<int>(k);
      }
  return std::make_shared<const Filtration>(t.vertices, t.poset(), entry);
}

}  // namespace fixtures
