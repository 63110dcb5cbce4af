#pragma once

#include <set>
#include <string>
#include <vector>

#include "gpd/inversion.hpp"

namespace gpd {

/// Sub-partition of the vertex set: blocks of vertex indices, each sorted,
/// blocks ordered by smallest member.
struct SubPartition {
  std::vector<std::vector<int>> blocks;

  std::set<int> support() const;
  void normalize();
  bool operator==(const SubPartition& o) const { return blocks == o.blocks; }
};

/// One state per breakpoint; the state at times[k] holds on [times[k], times[k+1]).
struct Treegram {
  std::vector<std::string> vertices;
  std::vector<Rational> times;
  std::vector<SubPartition> states;

  /// Throws std::invalid_argument on a malformed treegram.
  void validate() const;
  /// First breakpoint index whose support contains each vertex (-1 if never).
  std::vector<int> birth_indices() const;
  LinearMetricPoset poset() const { return LinearMetricPoset(times); }
  bool operator==(const Treegram& o) const {
    return vertices == o.vertices && times == o.times && states == o.states;
  }
};

/// States (V(K_i), components of K_i) for every step. K must be connected.
Treegram treegram_of_filtration(const Filtration& f);

std::string treegram_to_dot(const Treegram& t);

namespace detail {

template <class T>
std::vector<T> centroid(const std::vector<int>& members, std::size_t dim) {
  std::vector<T> c(dim, T(0));
  const T w = T(1) / T(static_cast<long>(members.size()));
  for (int x : members) c[x] += w;
  return c;
}

template <class T>
std::vector<T> difference(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

}  // namespace detail

/// Degree-0 diagram from a treegram by the centroid construction. Coordinates
/// of `ambient` are the treegram's vertices in order; the inner product must be
/// the standard one.
template <class T>
GrassmannianDiagram<T> reconstruct_gpd0(const Treegram& tg, AmbientPtr<T> ambient) {
  tg.validate();
  if (ambient->dim() != tg.vertices.size()) throw std::invalid_argument("ambient dimension does not match the vertex set");
  if (!ambient->standard()) throw std::invalid_argument("treegram reconstruction needs the standard inner product");
  const std::size_t dim = ambient->dim();
  const int m = static_cast<int>(tg.states.size());
  const std::vector<int> birth = tg.birth_indices();
  auto block_birth = [&](const std::vector<int>& B) {
    int b = kInf;
    for (int x : B) b = std::min(b, birth[x]);
    return b;
  };

  std::map<Interval, std::vector<std::vector<T>>> gens;
  for (int d = 0; d < m; ++d) {
    static const SubPartition empty;
    const SubPartition& prev = d > 0 ? tg.states[d - 1] : empty;
    for (const auto& B : tg.states[d].blocks) {
      const std::set<int> members(B.begin(), B.end());
      std::vector<std::vector<int>> children;
      for (const auto& C : prev.blocks)
        if (members.count(C.front())) children.push_back(C);

      std::vector<int> old;
      for (const auto& C : children) old.insert(old.end(), C.begin(), C.end());
      std::sort(old.begin(), old.end());
      std::vector<int> fresh;
      std::set_difference(B.begin(), B.end(), old.begin(), old.end(), std::back_inserter(fresh));

      // Ephemeral points. With no surviving predecessor the whole block is new
      // and contributes its sum-zero vectors.
      const std::vector<T> anchor = detail::centroid<T>(old.empty() ? B : old, dim);
      for (int v : fresh) {
        std::vector<T> e(dim, T(0));
        e[v] = T(1);
        gens[{d, d}].push_back(detail::difference(e, anchor));
      }
      if (children.size() < 2) continue;

      std::sort(children.begin(), children.end(), [&](const auto& a, const auto& b) {
        return std::pair(block_birth(a), a.front()) < std::pair(block_birth(b), b.front());
      });
      std::vector<int> cb;
      std::vector<std::vector<T>> c;
      for (const auto& C : children) {
        cb.push_back(block_birth(C));
        std::vector<int> R;
        for (int x : C)
          if (birth[x] == cb.back()) R.push_back(x);
        c.push_back(detail::centroid<T>(R, dim));
      }
      std::size_t k = 1;
      while (k < children.size() && cb[k] == cb[0]) ++k;
      for (std::size_t l = 1; l < k; ++l) gens[{cb[0], d}].push_back(detail::difference(c[l], c[0]));
      for (std::size_t j = k; j < children.size(); ++j) {
        std::vector<int> Rp;
        for (std::size_t jp = 0; jp < children.size(); ++jp)
          if (cb[jp] < cb[j])
            for (int x : children[jp])
              if (birth[x] <= cb[j]) Rp.push_back(x);
        gens[{cb[j], d}].push_back(detail::difference(c[j], detail::centroid<T>(Rp, dim)));
      }
    }
  }
  // The single essential class: the all-ones vector on the first nonempty support.
  for (int k = 0; k < m; ++k)
    if (!tg.states[k].blocks.empty()) {
      std::vector<T> ones(dim, T(0));
      for (int x : tg.states[k].support()) ones[x] = T(1);
      gens[{k, kInf}].push_back(ones);
      break;
    }

  GrassmannianDiagram<T> D{tg.poset(), IntervalOrder::Product, ambient, {}};
  for (const auto& [I, g] : gens) D.set(I, Subspace<T>::span(ambient, g));
  return D;
}

/// Treegram recovered from a degree-0 diagram: Z_0(K_i) and B_0(K_i) are
/// rebuilt as down-set sums, then read off as vertex support and blocks.
template <class T>
Treegram treegram_from_gpd0(const GrassmannianDiagram<T>& M, const std::vector<std::string>& vertices) {
  if (M.ambient->dim() != vertices.size()) throw std::invalid_argument("ambient dimension does not match the vertex set");
  const int n = M.n();
  Treegram tg{vertices, M.poset.grades(), {}};
  for (int i = 0; i < n; ++i) {
    std::vector<Subspace<T>> zs, bs;
    for (const auto& [I, W] : M.values) {
      if (interval_leq(I, {i, kInf}, IntervalOrder::Product)) zs.push_back(W);
      if (interval_leq(I, {i, i}, IntervalOrder::Product)) bs.push_back(W);
    }
    const Subspace<T> Z = sum(zs, M.ambient), B = sum(bs, M.ambient);
    std::vector<int> support;
    for (const auto& row : Z.basis()) {
      int hit = -1;
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!ScalarTraits<T>::is_zero(row[c])) {
          if (hit >= 0) throw std::invalid_argument("recovered cycle space is not spanned by vertices");
          hit = static_cast<int>(c);
        }
      support.push_back(hit);
    }
    std::sort(support.begin(), support.end());
    SubPartition state;
    std::vector<bool> used(vertices.size(), false);
    for (int u : support) {
      if (used[u]) continue;
      std::vector<int> block{u};
      used[u] = true;
      for (int v : support) {
        if (used[v]) continue;
        std::vector<T> diff(vertices.size(), T(0));
        diff[u] = T(1);
        diff[v] = T(-1);
        if (B.contains(diff)) block.push_back(v), used[v] = true;
      }
      state.blocks.push_back(block);
    }
    if (!Z.contains(B) || B.dim() + state.blocks.size() != support.size())
      throw std::invalid_argument("recovered boundary space is not spanned by vertex differences");
    state.normalize();
    tg.states.push_back(std::move(state));
  }
  tg.validate();
  return tg;
}

}  // namespace gpd
