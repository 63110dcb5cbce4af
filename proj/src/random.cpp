#include "gpd/random.hpp"

#include <numeric>
#include <set>

namespace gpd {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
bool coin(Rng& rng, double p) { return std::bernoulli_distribution(p)(rng); }

// Entry at or after every face, skewed towards the latest face.
int entry_after(Rng& rng, int floor, int n) { return coin(rng, 0.5) ? floor : uniform(rng, floor, n - 1); }

}  // namespace

Filtration random_filtration(Rng& rng, const RandomFiltrationOptions& opt) {
  const int nv = uniform(rng, 1, opt.max_vertices);
  const int n = uniform(rng, 1, opt.max_steps);
  std::vector<std::string> names;
  for (int v = 0; v < nv; ++v) names.push_back(std::string(1, static_cast<char>('a' + v)));
  std::map<Simplex, int> entry;
  for (int v = 0; v < nv; ++v) entry[{v}] = uniform(rng, 0, n - 1);

  std::set<Simplex> edges;
  if (opt.connected) {
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (int k = 1; k < nv; ++k) {
      int a = order[k], b = order[uniform(rng, 0, k - 1)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  for (int a = 0; a < nv; ++a)
    for (int b = a + 1; b < nv; ++b)
      if (coin(rng, opt.edge_probability)) edges.insert({a, b});

  auto add = [&](const Simplex& s) {
    int floor = 0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      floor = std::max(floor, entry.at(face));
    }
    entry[s] = entry_after(rng, floor, n);
  };
  for (const auto& e : edges) add(e);

  // Higher simplices: each candidate whose faces are all present is added with probability 1/2.
  for (int d = 2; d <= opt.max_dim; ++d) {
    std::vector<Simplex> lower;
    for (const auto& [s, e] : entry)
      if (static_cast<int>(s.size()) == d) lower.push_back(s);
    for (const auto& s : lower)
      for (int v = s.back() + 1; v < nv; ++v) {
        Simplex c = s;
        c.push_back(v);
        bool faces = true;
        for (std::size_t k = 0; k + 1 < c.size() && faces; ++k) {
          Simplex face = c;
          face.erase(face.begin() + static_cast<long>(k));
          faces = entry.count(face) > 0;
        }
        if (faces && coin(rng, 0.5)) add(c);
      }
  }
  return Filtration(std::move(names), LinearMetricPoset::range(n), std::move(entry));
}

LinearMetricPoset random_poset(Rng& rng, int n) {
  std::vector<Rational> g;
  Rational t(uniform(rng, 0, 2));
  for (int i = 0; i < n; ++i) {
    g.push_back(t);
    t += Rational(uniform(rng, 1, 4), 2);
  }
  return LinearMetricPoset(std::move(g));
}

Matrix<Rational> random_spd(Rng& rng, std::size_t n) {
  Matrix<Rational> b(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) b(r, c) = uniform(rng, -2, 2);
  return b.transpose() * b + Matrix<Rational>::identity(n);
}

GaloisConnection random_galois(Rng& rng, const LinearMetricPoset& source, int max_target_size) {
  const int m = uniform(rng, 1, max_target_size);
  std::vector<int> left(source.size());
  int cur = 0;
  for (int p = 0; p < source.size(); ++p) {
    if (p > 0 && coin(rng, 0.6)) cur = std::min(m - 1, cur + uniform(rng, 1, 2));
    left[p] = cur;
  }
  return GaloisConnection::from_left(source, random_poset(rng, m), std::move(left));
}

std::vector<Rational> random_integer_vector(Rng& rng, std::size_t dim, int bound) {
  std::vector<Rational> v(dim);
  if (dim == 0) return v;
  do {
    for (auto& x : v) x = uniform(rng, -bound, bound);
  } while (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }));
  return v;
}

}  // namespace gpd
