#include "gpd/poset.hpp"

#include <algorithm>

namespace gpd {

namespace {

ExtendedValue abs_diff(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.infinite && b.infinite) return {};
  if (a.infinite || b.infinite) return ExtendedValue::inf();
  Rational d = a.value - b.value;
  return {false, abs(d)};
}

ExtendedValue add(const ExtendedValue& a, const ExtendedValue& b) {
  if (a.infinite || b.infinite) return ExtendedValue::inf();
  return {false, a.value + b.value};
}

ExtendedValue max_of(const ExtendedValue& a, const ExtendedValue& b) { return a < b ? b : a; }

}  // namespace

LinearMetricPoset::LinearMetricPoset(std::vector<Rational> grades) : grades_(std::move(grades)) {
  for (std::size_t i = 1; i < grades_.size(); ++i)
    if (!(grades_[i - 1] < grades_[i])) throw std::invalid_argument("poset grades must be strictly increasing");
}

LinearMetricPoset::LinearMetricPoset(std::vector<Rational> grades, std::vector<std::vector<ExtendedValue>> metric)
    : LinearMetricPoset(std::move(grades)) {
  const std::size_t n = grades_.size();
  if (metric.size() != n) throw std::invalid_argument("metric has wrong size");
  for (const auto& row : metric)
    if (row.size() != n) throw std::invalid_argument("metric has wrong size");
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const ExtendedValue& d = metric[a][b];
      if (!d.infinite && d.value < 0) throw std::invalid_argument("metric must be nonnegative");
      if (!(d == metric[b][a])) throw std::invalid_argument("metric must be symmetric");
      if ((a == b) != (!d.infinite && d.value == 0))
        throw std::invalid_argument("metric must vanish exactly on the diagonal");
      for (std::size_t c = 0; c < n; ++c)
        if (add(metric[a][c], metric[c][b]) < d) throw std::invalid_argument("metric violates the triangle inequality");
    }
  metric_ = std::move(metric);
}

LinearMetricPoset LinearMetricPoset::range(int n) {
  std::vector<Rational> g;
  for (int i = 1; i <= n; ++i) g.emplace_back(i);
  return LinearMetricPoset(std::move(g));
}

std::optional<int> LinearMetricPoset::index_of(const Rational& grade) const {
  auto it = std::lower_bound(grades_.begin(), grades_.end(), grade);
  if (it == grades_.end() || *it != grade) return std::nullopt;
  return static_cast<int>(it - grades_.begin());
}

ExtendedValue LinearMetricPoset::distance(int a, int b) const {
  if (metric_) return (*metric_).at(a).at(b);
  Rational d = grades_.at(a) - grades_.at(b);
  return {false, abs(d)};
}

bool LinearMetricPoset::operator==(const LinearMetricPoset& o) const {
  if (grades_ != o.grades_) return false;
  for (int a = 0; a < size(); ++a)
    for (int b = 0; b < size(); ++b)
      if (!(distance(a, b) == o.distance(a, b))) return false;
  return true;
}

std::string to_string(IntervalOrder order) {
  return order == IntervalOrder::Product ? "product" : "reverse-inclusion";
}

IntervalOrder parse_interval_order(const std::string& s) {
  if (s == "product") return IntervalOrder::Product;
  if (s == "reverse-inclusion") return IntervalOrder::ReverseInclusion;
  throw std::invalid_argument("unknown interval order '" + s + "'");
}

bool interval_leq(const Interval& x, const Interval& y, IntervalOrder order) {
  if (order == IntervalOrder::Product) return x.birth <= y.birth && x.death <= y.death;
  if (x.is_diagonal() || y.is_diagonal())
    throw std::invalid_argument("diagonal interval under the reverse-inclusion order");
  return x.birth <= y.birth && y.death <= x.death;
}

std::vector<Interval> all_intervals(int n) {
  std::vector<Interval> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) out.push_back({i, j});
    out.push_back({i, kInf});
  }
  return out;
}

std::vector<Interval> off_diagonal_intervals(int n) {
  std::vector<Interval> out;
  for (const Interval& I : all_intervals(n))
    if (!I.is_diagonal()) out.push_back(I);
  return out;
}

std::vector<Interval> domain(int n, IntervalOrder order) {
  return order == IntervalOrder::Product ? all_intervals(n) : off_diagonal_intervals(n);
}

std::string interval_to_string(const Interval& I, const LinearMetricPoset& P) {
  std::string b = rational_to_string(P.grade(I.birth));
  if (I.is_ray()) return "[" + b + ",inf)";
  return "[" + b + "," + rational_to_string(P.grade(I.death)) + "]";
}

bool IntegerIntervalFunction::operator==(const IntegerIntervalFunction& o) const {
  if (n != o.n || order != o.order) return false;
  for (const Interval& I : domain(n, order))
    if (at(I) != o.at(I)) return false;
  return true;
}

IntegerIntervalFunction mobius_invert_int(const IntegerIntervalFunction& m) {
  const int n = m.n;
  // m([p_0, .]) = 0 and [p_i, p_{n+1}] = [p_i, inf).
  auto val = [&](int i, int j) -> std::int64_t {
    if (i < 0) return 0;
    if (j >= n) j = kInf;
    return m.at({i, j});
  };
  IntegerIntervalFunction out{n, m.order, {}};
  for (const Interval& I : domain(n, m.order)) {
    const int i = I.birth, j = I.death;
    std::int64_t v;
    if (m.order == IntervalOrder::Product) {
      if (I.is_ray())
        v = val(i, kInf) - val(i, n - 1) + val(i - 1, n - 1) - val(i - 1, kInf);
      else if (I.is_diagonal())
        v = val(i, i) - val(i - 1, i);
      else
        v = val(i, j) - val(i, j - 1) + val(i - 1, j - 1) - val(i - 1, j);
    } else {
      if (I.is_ray())
        v = val(i, kInf) - val(i - 1, kInf);
      else
        v = val(i, j) - val(i, j + 1) + val(i - 1, j + 1) - val(i - 1, j);
    }
    if (v != 0) out.values[I] = v;
  }
  return out;
}

std::vector<std::int64_t> mobius_invert_chain(const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i] - (i ? m[i - 1] : 0);
  return out;
}

GaloisConnection GaloisConnection::from_left(LinearMetricPoset source, LinearMetricPoset target,
                                             std::vector<int> left) {
  if (static_cast<int>(left.size()) != source.size()) throw std::invalid_argument("left adjoint has wrong length");
  std::vector<int> right(target.size());
  for (int q = 0; q < target.size(); ++q) {
    int best = -1;
    for (int p = 0; p < source.size(); ++p)
      if (left[p] <= q) best = std::max(best, p);
    if (best < 0) throw std::invalid_argument("map has no right adjoint");
    right[q] = best;
  }
  return {std::move(source), std::move(target), std::move(left), std::move(right)};
}

GaloisConnection GaloisConnection::identity(const LinearMetricPoset& p) {
  std::vector<int> id(p.size());
  for (int i = 0; i < p.size(); ++i) id[i] = i;
  return {p, p, id, id};
}

GaloisCheck verify_galois(const GaloisConnection& g) {
  const int np = g.source.size(), nq = g.target.size();
  if (static_cast<int>(g.left.size()) != np || static_cast<int>(g.right.size()) != nq)
    return {false, "map lengths do not match the posets"};
  for (int p = 0; p < np; ++p)
    if (g.left[p] < 0 || g.left[p] >= nq) return {false, "left adjoint out of range at " + std::to_string(p)};
  for (int q = 0; q < nq; ++q)
    if (g.right[q] < 0 || g.right[q] >= np) return {false, "right adjoint out of range at " + std::to_string(q)};
  for (int p = 1; p < np; ++p)
    if (g.left[p - 1] > g.left[p]) return {false, "left adjoint not monotone at " + std::to_string(p)};
  for (int q = 1; q < nq; ++q)
    if (g.right[q - 1] > g.right[q]) return {false, "right adjoint not monotone at " + std::to_string(q)};
  for (int p = 0; p < np; ++p)
    for (int q = 0; q < nq; ++q)
      if ((g.left[p] <= q) != (p <= g.right[q]))
        return {false, "adjunction fails at (" + std::to_string(p) + "," + std::to_string(q) + ")"};
  return {};
}

ExtendedValue distortion(const GaloisConnection& g, Side side) {
  const LinearMetricPoset& a = side == Side::Left ? g.source : g.target;
  const LinearMetricPoset& b = side == Side::Left ? g.target : g.source;
  const std::vector<int>& f = side == Side::Left ? g.left : g.right;
  ExtendedValue worst;
  for (int x = 0; x < a.size(); ++x)
    for (int y = x + 1; y < a.size(); ++y)
      worst = max_of(worst, abs_diff(a.distance(x, y), b.distance(f[x], f[y])));
  return worst;
}

GaloisConnection compose(const GaloisConnection& g1, const GaloisConnection& g2) {
  if (!(g1.target == g2.source)) throw std::invalid_argument("Galois connections are not composable");
  GaloisConnection out{g1.source, g2.target, {}, {}};
  for (int p : g1.left) out.left.push_back(g2.left.at(p));
  for (int r : g2.right) out.right.push_back(g1.right.at(r));
  return out;
}

Interval IntervalMap::operator()(const Interval& I) const {
  return {point_map.at(I.birth), I.is_ray() ? kInf : point_map.at(I.death)};
}

IntervalGalois bar(const GaloisConnection& g) {
  return {{g.source.size(), g.target.size(), g.left}, {g.target.size(), g.source.size(), g.right}};
}

GaloisCheck verify_interval_galois(const IntervalGalois& g) {
  const auto src = all_intervals(g.left.source_n), tgt = all_intervals(g.left.target_n);
  const auto P = IntervalOrder::Product;
  for (const Interval& I : src)
    for (const Interval& J : src)
      if (interval_leq(I, J, P) && !interval_leq(g.left(I), g.left(J), P)) return {false, "left not monotone"};
  for (const Interval& I : tgt)
    for (const Interval& J : tgt)
      if (interval_leq(I, J, P) && !interval_leq(g.right(I), g.right(J), P)) return {false, "right not monotone"};
  for (const Interval& I : src)
    for (const Interval& J : tgt)
      if (interval_leq(g.left(I), J, P) != interval_leq(I, g.right(J), P)) return {false, "adjunction fails"};
  return {};
}

ExtendedValue interval_distance(const LinearMetricPoset& p, const Interval& a, const Interval& b) {
  ExtendedValue death;
  if (a.is_ray() != b.is_ray())
    death = ExtendedValue::inf();
  else if (!a.is_ray())
    death = p.distance(a.death, b.death);
  return max_of(p.distance(a.birth, b.birth), death);
}

ExtendedValue interval_distortion(const LinearMetricPoset& p, const LinearMetricPoset& q, const IntervalMap& f) {
  const auto ints = all_intervals(p.size());
  ExtendedValue worst;
  for (std::size_t x = 0; x < ints.size(); ++x)
    for (std::size_t y = x + 1; y < ints.size(); ++y)
      worst = max_of(worst, abs_diff(interval_distance(p, ints[x], ints[y]),
                                     interval_distance(q, f(ints[x]), f(ints[y]))));
  return worst;
}

std::vector<std::int64_t> pushforward_chain(const std::vector<int>& f, int target_size,
                                            const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> out(target_size, 0);
  for (std::size_t p = 0; p < m.size(); ++p) out.at(f.at(p)) += m[p];
  return out;
}

std::vector<std::int64_t> pullback_chain(const std::vector<int>& f, const std::vector<std::int64_t>& m) {
  std::vector<std::int64_t> out;
  for (int q : f) out.push_back(m.at(q));
  return out;
}

IntegerIntervalFunction pushforward_int(const IntervalMap& f, const IntegerIntervalFunction& m) {
  IntegerIntervalFunction out{f.target_n, m.order, {}};
  for (const auto& [I, v] : m.values) {
    Interval J = f(I);
    if (m.order == IntervalOrder::ReverseInclusion && J.is_diagonal()) continue;
    out.values[J] += v;
  }
  std::erase_if(out.values, [](const auto& kv) { return kv.second == 0; });
  return out;
}

IntegerIntervalFunction pullback_int(const IntervalMap& f, const IntegerIntervalFunction& m) {
  IntegerIntervalFunction out{f.source_n, m.order, {}};
  for (const Interval& I : domain(f.source_n, m.order)) {
    std::int64_t v = m.at(f(I));
    if (v != 0) out.values[I] = v;
  }
  return out;
}

}  // namespace gpd
