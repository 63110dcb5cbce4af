#pragma once

#include <random>

#include "gpd/complex.hpp"

namespace gpd {

using Rng = std::mt19937_64;

struct RandomFiltrationOptions {
  int max_vertices = 8;
  int max_steps = 6;
  int max_dim = 3;  // highest simplex dimension generated
  bool connected = false;
  double edge_probability = 0.45;
};

/// Random filtered complex over grades 1..n with n <= max_steps.
Filtration random_filtration(Rng& rng, const RandomFiltrationOptions& opt = {});

/// Strictly increasing rational grades, some non-integral.
LinearMetricPoset random_poset(Rng& rng, int n);

/// B^T B + I with small integer B.
Matrix<Rational> random_spd(Rng& rng, std::size_t n);

/// Random Galois connection out of `source`: a monotone left map fixing the minimum.
GaloisConnection random_galois(Rng& rng, const LinearMetricPoset& source, int max_target_size);

/// Random vector with small integer entries, nonzero unless dim is 0.
std::vector<Rational> random_integer_vector(Rng& rng, std::size_t dim, int bound = 3);

}  // namespace gpd
