#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "gpd/poset.hpp"
#include "gpd/subspace.hpp"

namespace gpd {

/// Strictly increasing vertex indices; orientation is the sorted order.
using Simplex = std::vector<int>;

/// Thrown for malformed input files; carries the 1-based line when known.
struct InputError : std::runtime_error {
  InputError(const std::string& what, int line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line(line) {}
  int line;
};

class Filtration {
 public:
  Filtration() = default;
  /// `entry` maps every simplex of K to its poset index. Validates face closure.
  Filtration(std::vector<std::string> vertex_names, LinearMetricPoset poset, std::map<Simplex, int> entry);

  const LinearMetricPoset& poset() const { return poset_; }
  int steps() const { return poset_.size(); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  int max_dim() const { return static_cast<int>(by_dim_.size()) - 1; }

  /// q-simplices of K in lexicographic order; empty if q exceeds the dimension.
  const std::vector<Simplex>& simplices(int q) const;
  const std::map<Simplex, int>& entries() const { return entry_; }
  int entry(const Simplex& s) const;
  std::optional<std::size_t> index_of(const Simplex& s) const;

  /// Simplices with entry <= i (all dimensions). i < 0 gives the empty complex.
  std::vector<Simplex> sublevel(int i) const;
  bool connected() const;
  std::string simplex_name(const Simplex& s) const;
  std::vector<std::string> simplex_names(int q) const;

  /// The filtration q -> K_{right(q)} over `target`; entries become left(entry).
  Filtration transport(const LinearMetricPoset& target, const std::vector<int>& left) const;

 private:
  std::vector<std::string> vertices_;
  LinearMetricPoset poset_;
  std::map<Simplex, int> entry_;
  std::vector<std::vector<Simplex>> by_dim_;
  std::vector<std::map<Simplex, std::size_t>> index_;
};

Filtration parse_filtration_text(const std::string& text);
Filtration parse_filtration_json(const std::string& text);
/// Dispatches on content: a leading '{' means JSON.
Filtration parse_filtration(const std::string& text);
Filtration load_filtration(const std::string& path);
std::string read_file(const std::string& path);

/// Matrix of ∂_q on the K-wide bases (n_{q-1} x n_q), integer entries.
Matrix<Rational> boundary_matrix(const Filtration& f, int q);

/// A* = G_src^{-1} A^T G_dst for A : src -> dst.
template <class T>
Matrix<T> adjoint(const Matrix<T>& a, const Matrix<T>& gram_src, const Matrix<T>& gram_dst) {
  return solve(gram_src, a.transpose() * gram_dst);
}

/// Chain spaces, boundary operators and cycle/boundary subspaces of one
/// filtration, all embedded K-wide. Per-degree data is built on first use.
template <class T>
class ChainModel {
 public:
  explicit ChainModel(std::shared_ptr<const Filtration> f, std::map<int, Matrix<T>> grams = {})
      : f_(std::move(f)), grams_(std::move(grams)) {}

  const Filtration& filtration() const { return *f_; }
  std::shared_ptr<const Filtration> filtration_ptr() const { return f_; }
  int steps() const { return f_->steps(); }

  AmbientPtr<T> ambient(int q) const { return degree(q).ambient; }
  std::size_t chain_dim(int q) const { return f_->simplices(q).size(); }

  /// ∂_q : C_q -> C_{q-1} on K.
  const Matrix<T>& boundary(int q) const { return degree(q).boundary; }

  /// Indices of the q-simplices of K_i.
  std::vector<std::size_t> support(int q, int i) const {
    std::vector<std::size_t> s;
    const auto& simp = f_->simplices(q);
    for (std::size_t k = 0; k < simp.size(); ++k)
      if (f_->entry(simp[k]) <= i) s.push_back(k);
    return s;
  }

  /// C_q^{K_i} as a coordinate subspace.
  Subspace<T> chains(int q, int i) const {
    auto supp = support(q, i);
    Matrix<T> m(supp.size(), chain_dim(q));
    for (std::size_t k = 0; k < supp.size(); ++k) m(k, supp[k]) = T(1);
    return Subspace<T>::from_rows(ambient(q), m);
  }

  /// Z_q(K_i); i < 0 means the empty complex.
  const Subspace<T>& cycles(int q, int i) const { return pick(degree(q).cycles, q, i); }
  /// B_q(K_i).
  const Subspace<T>& boundaries(int q, int i) const { return pick(degree(q).boundaries, q, i); }

 private:
  struct Degree {
    AmbientPtr<T> ambient;
    Matrix<T> boundary;
    std::vector<Subspace<T>> cycles, boundaries;
    Subspace<T> zero;
  };

  const Subspace<T>& pick(const std::vector<Subspace<T>>& v, int q, int i) const {
    if (i < 0) return degree(q).zero;
    return v.at(static_cast<std::size_t>(i));
  }

  const Degree& degree(int q) const {
    std::lock_guard<std::mutex> lock(*mutex_);
    auto it = cache_.find(q);
    if (it != cache_.end()) return *it->second;
    auto d = std::make_unique<Degree>();
    const std::size_t n = chain_dim(q);
    auto g = grams_.find(q);
    d->ambient = g == grams_.end() ? std::make_shared<const AmbientSpace<T>>(n, f_->simplex_names(q))
                                   : std::make_shared<const AmbientSpace<T>>(n, g->second, f_->simplex_names(q));
    d->boundary = q == 0 ? Matrix<T>(0, n) : convert<T>(boundary_matrix(*f_, q));
    d->zero = Subspace<T>::zero(d->ambient);
    const Matrix<T> up = convert<T>(boundary_matrix(*f_, q + 1));
    for (int i = 0; i < steps(); ++i) {
      auto supp = support(q, i);
      Matrix<T> local_null = nullspace(d->boundary.select_columns(supp));
      Matrix<T> embedded(n, local_null.cols());
      for (std::size_t k = 0; k < supp.size(); ++k)
        for (std::size_t c = 0; c < local_null.cols(); ++c) embedded(supp[k], c) = local_null(k, c);
      d->cycles.push_back(Subspace<T>::from_columns(d->ambient, embedded));
      d->boundaries.push_back(Subspace<T>::from_columns(d->ambient, up.select_columns(support(q + 1, i))));
    }
    return *cache_.emplace(q, std::move(d)).first->second;
  }

  std::shared_ptr<const Filtration> f_;
  std::map<int, Matrix<T>> grams_;
  mutable std::unique_ptr<std::mutex> mutex_ = std::make_unique<std::mutex>();
  mutable std::map<int, std::unique_ptr<Degree>> cache_;
};

}  // namespace gpd
