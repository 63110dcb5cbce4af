#include "gpd/io.hpp"

namespace gpd {

json grade_to_json(const Rational& g) {
  if (g.get_den() == 1 && g.get_num().fits_slong_p()) return g.get_num().get_si();
  return rational_to_string(g);
}

Rational grade_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number()) return parse_rational(j.dump());
  throw std::invalid_argument("grade must be a number or a string");
}

json poset_to_json(const LinearMetricPoset& p) {
  json grades = json::array();
  for (const auto& g : p.grades()) grades.push_back(grade_to_json(g));
  json out = {{"grades", grades}};
  if (p.has_explicit_metric()) {
    json metric = json::array();
    for (int a = 0; a < p.size(); ++a) {
      json row = json::array();
      for (int b = 0; b < p.size(); ++b) {
        ExtendedValue d = p.distance(a, b);
        row.push_back(d.infinite ? json("inf") : grade_to_json(d.value));
      }
      metric.push_back(row);
    }
    out["metric"] = metric;
  }
  return out;
}

LinearMetricPoset poset_from_json(const json& j) {
  std::vector<Rational> grades;
  for (const auto& g : j.at("grades")) grades.push_back(grade_from_json(g));
  if (!j.contains("metric") || j.at("metric").is_null()) return LinearMetricPoset(std::move(grades));
  std::vector<std::vector<ExtendedValue>> metric;
  for (const auto& row : j.at("metric")) {
    std::vector<ExtendedValue> r;
    for (const auto& x : row)
      r.push_back(x.is_string() && x.get<std::string>() == "inf" ? ExtendedValue::inf()
                                                                  : ExtendedValue{false, grade_from_json(x)});
    metric.push_back(std::move(r));
  }
  return LinearMetricPoset(std::move(grades), std::move(metric));
}

json interval_to_json(const Interval& I, const LinearMetricPoset& p) {
  return json::array({grade_to_json(p.grade(I.birth)), I.is_ray() ? json("inf") : grade_to_json(p.grade(I.death))});
}

Interval interval_from_json(const json& j, const LinearMetricPoset& p) {
  if (!j.is_array() || j.size() != 2) throw std::invalid_argument("interval must be [birth, death]");
  auto b = p.index_of(grade_from_json(j[0]));
  if (!b) throw std::invalid_argument("interval birth is not a poset grade");
  if (j[1].is_string() && j[1].get<std::string>() == "inf") return {*b, kInf};
  auto d = p.index_of(grade_from_json(j[1]));
  if (!d) throw std::invalid_argument("interval death is not a poset grade");
  if (*d < *b) throw std::invalid_argument("interval death precedes birth");
  return {*b, *d};
}

json integer_function_to_json(const IntegerIntervalFunction& m, const LinearMetricPoset& p) {
  json points = json::array();
  for (const auto& [I, v] : m.values)
    if (v != 0) points.push_back({{"interval", interval_to_json(I, p)}, {"multiplicity", v}});
  return {{"poset", poset_to_json(p)}, {"order", to_string(m.order)}, {"points", points}};
}

json treegram_to_json(const Treegram& t) {
  json bps = json::array();
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    json blocks = json::array();
    for (const auto& b : t.states[k].blocks) {
      json blk = json::array();
      for (int x : b) blk.push_back(t.vertices[x]);
      blocks.push_back(blk);
    }
    bps.push_back({{"t", grade_to_json(t.times[k])}, {"blocks", blocks}});
  }
  return {{"vertices", t.vertices}, {"breakpoints", bps}};
}

Treegram treegram_from_json(const json& j) {
  Treegram t;
  t.vertices = j.at("vertices").get<std::vector<std::string>>();
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < t.vertices.size(); ++i) vid[t.vertices[i]] = static_cast<int>(i);
  for (const auto& bp : j.at("breakpoints")) {
    t.times.push_back(grade_from_json(bp.at("t")));
    SubPartition s;
    for (const auto& blk : bp.at("blocks")) {
      std::vector<int> b;
      for (const auto& name : blk) {
        auto it = vid.find(name.get<std::string>());
        if (it == vid.end()) throw std::invalid_argument("treegram block names an unknown vertex");
        b.push_back(it->second);
      }
      s.blocks.push_back(std::move(b));
    }
    s.normalize();
    t.states.push_back(std::move(s));
  }
  t.validate();
  return t;
}

json galois_to_json(const GaloisConnection& g) {
  json left = json::array(), right = json::array();
  for (int q : g.left) left.push_back(grade_to_json(g.target.grade(q)));
  for (int p : g.right) right.push_back(grade_to_json(g.source.grade(p)));
  return {{"left", left}, {"right", right}};
}

GaloisConnection galois_from_json(const json& j, const LinearMetricPoset& source, const LinearMetricPoset& target) {
  auto read = [](const json& arr, const LinearMetricPoset& into) {
    std::vector<int> out;
    for (const auto& g : arr) {
      auto idx = into.index_of(grade_from_json(g));
      if (!idx) throw std::invalid_argument("Galois map value is not a grade of its target");
      out.push_back(*idx);
    }
    return out;
  };
  return {source, target, read(j.at("left"), target), read(j.at("right"), source)};
}

std::map<int, Matrix<Rational>> grams_from_json(const json& j) {
  std::map<int, Matrix<Rational>> out;
  for (const auto& [key, rows] : j.at("grams").items()) {
    const int q = std::stoi(key);
    Matrix<Rational> m(rows.size(), rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != rows.size()) throw std::invalid_argument("Gram matrix must be square");
      for (std::size_t c = 0; c < rows.size(); ++c) m(r, c) = scalar_from_json<Rational>(rows[r][c]);
    }
    out.emplace(q, std::move(m));
  }
  return out;
}

}  // namespace gpd
