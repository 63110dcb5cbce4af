#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpd/scalar.hpp"

namespace gpd {

/// Nonnegative rational or +infinity.
struct ExtendedValue {
  bool infinite = false;
  Rational value = 0;

  static ExtendedValue inf() { return {true, 0}; }
  bool operator==(const ExtendedValue& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
  bool operator<(const ExtendedValue& o) const {
    if (infinite) return false;
    return o.infinite || value < o.value;
  }
  std::string to_string() const { return infinite ? "inf" : rational_to_string(value); }
};

/// Finite chain p_0 < ... < p_{n-1} with rational grades and an extended metric.
/// Indices are 0-based; the grade is only used for display and the default metric.
class LinearMetricPoset {
 public:
  LinearMetricPoset() = default;
  explicit LinearMetricPoset(std::vector<Rational> grades);
  LinearMetricPoset(std::vector<Rational> grades, std::vector<std::vector<ExtendedValue>> metric);

  static LinearMetricPoset range(int n);  // grades 1..n

  int size() const { return static_cast<int>(grades_.size()); }
  const std::vector<Rational>& grades() const { return grades_; }
  const Rational& grade(int i) const { return grades_.at(i); }
  bool has_explicit_metric() const { return metric_.has_value(); }
  std::optional<int> index_of(const Rational& grade) const;

  bool leq(int a, int b) const { return a <= b; }
  ExtendedValue distance(int a, int b) const;

  bool operator==(const LinearMetricPoset& o) const;

 private:
  std::vector<Rational> grades_;
  std::optional<std::vector<std::vector<ExtendedValue>>> metric_;
};

/// Death index for rays [b, inf).
inline constexpr int kInf = std::numeric_limits<int>::max();

struct Interval {
  int birth = 0;
  int death = 0;  // kInf for a ray

  bool is_ray() const { return death == kInf; }
  bool is_diagonal() const { return birth == death; }
  auto operator<=>(const Interval&) const = default;
};

enum class IntervalOrder { Product, ReverseInclusion };

std::string to_string(IntervalOrder order);
IntervalOrder parse_interval_order(const std::string& s);

/// [a,b] <= [c,d] in the chosen order.
bool interval_leq(const Interval& x, const Interval& y, IntervalOrder order);

/// All of Int(P) for |P| = n: closed [i,j] with i <= j, and rays [i,inf).
std::vector<Interval> all_intervals(int n);
/// Int(P) without the diagonal; the domain of reverse-inclusion functions.
std::vector<Interval> off_diagonal_intervals(int n);
std::vector<Interval> domain(int n, IntervalOrder order);

std::string interval_to_string(const Interval& I, const LinearMetricPoset& P);

/// Integer-valued function on an interval poset (missing keys read as 0).
struct IntegerIntervalFunction {
  int n = 0;
  IntervalOrder order = IntervalOrder::Product;
  std::map<Interval, std::int64_t> values;

  std::int64_t at(const Interval& I) const {
    auto it = values.find(I);
    return it == values.end() ? 0 : it->second;
  }
  bool operator==(const IntegerIntervalFunction& o) const;
};

/// Möbius inversion over Int(P) by closed-form formulas, with the conventions
/// m([p_0, .]) = 0 and [p_i, p_n] := [p_i, inf) for the reverse-inclusion order.
IntegerIntervalFunction mobius_invert_int(const IntegerIntervalFunction& m);

/// Möbius inversion of a function on the chain P itself.
std::vector<std::int64_t> mobius_invert_chain(const std::vector<std::int64_t>& m);

struct GaloisCheck {
  bool ok = true;
  std::string reason;
};

/// Pair of maps left: P -> Q, right: Q -> P between chains.
struct GaloisConnection {
  LinearMetricPoset source;
  LinearMetricPoset target;
  std::vector<int> left;
  std::vector<int> right;

  static GaloisConnection from_left(LinearMetricPoset source, LinearMetricPoset target, std::vector<int> left);
  static GaloisConnection identity(const LinearMetricPoset& p);
};

/// Checks monotonicity of both maps and left(p) <= q <=> p <= right(q) exhaustively.
GaloisCheck verify_galois(const GaloisConnection& g);

enum class Side { Left, Right };

/// sup |d(a,b) - d(f a, f b)|; both-infinite counts as 0, one-infinite as inf.
ExtendedValue distortion(const GaloisConnection& g, Side side = Side::Left);

/// g2 after g1: left = g2.left ∘ g1.left, right = g1.right ∘ g2.right.
GaloisConnection compose(const GaloisConnection& g1, const GaloisConnection& g2);

/// The induced map on intervals under the product order.
struct IntervalMap {
  int source_n = 0;
  int target_n = 0;
  std::vector<int> point_map;

  Interval operator()(const Interval& I) const;
};

struct IntervalGalois {
  IntervalMap left;
  IntervalMap right;
};

IntervalGalois bar(const GaloisConnection& g);
GaloisCheck verify_interval_galois(const IntervalGalois& g);

/// Distance on Int(P) under the product order: max of endpoint distances.
ExtendedValue interval_distance(const LinearMetricPoset& p, const Interval& a, const Interval& b);
ExtendedValue interval_distortion(const LinearMetricPoset& p, const LinearMetricPoset& q, const IntervalMap& f);

std::vector<std::int64_t> pushforward_chain(const std::vector<int>& f, int target_size,
                                            const std::vector<std::int64_t>& m);
std::vector<std::int64_t> pullback_chain(const std::vector<int>& f, const std::vector<std::int64_t>& m);

IntegerIntervalFunction pushforward_int(const IntervalMap& f, const IntegerIntervalFunction& m);
IntegerIntervalFunction pullback_int(const IntervalMap& f, const IntegerIntervalFunction& m);

}  // namespace gpd
