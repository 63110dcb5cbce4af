#pragma once

#include <json.hpp>

#include "gpd/morphisms.hpp"
#include "gpd/treegram.hpp"

namespace gpd {

using json = nlohmann::json;

json grade_to_json(const Rational& g);
Rational grade_from_json(const json& j);

json poset_to_json(const LinearMetricPoset& p);
LinearMetricPoset poset_from_json(const json& j);

json interval_to_json(const Interval& I, const LinearMetricPoset& p);
Interval interval_from_json(const json& j, const LinearMetricPoset& p);

json integer_function_to_json(const IntegerIntervalFunction& m, const LinearMetricPoset& p);

json treegram_to_json(const Treegram& t);
Treegram treegram_from_json(const json& j);

/// {"left": [target grades], "right": [source grades], "zeta": {...}} given both posets.
json galois_to_json(const GaloisConnection& g);
GaloisConnection galois_from_json(const json& j, const LinearMetricPoset& source, const LinearMetricPoset& target);

/// {"grams": {"<degree>": [[entries]]}}; entries are numbers or "p/q" strings.
std::map<int, Matrix<Rational>> grams_from_json(const json& j);

template <class T>
json scalar_to_json(const T& x) {
  if constexpr (ScalarTraits<T>::exact)
    return rational_to_string(x);
  else
    return x;
}

template <class T>
T scalar_from_json(const json& j) {
  Rational r = j.is_string() ? parse_rational(j.get<std::string>()) : parse_rational(j.dump());
  return ScalarTraits<T>::from_rational(r);
}

template <class T>
json basis_to_json(const Subspace<T>& W) {
  json basis = json::array();
  for (const auto& v : W.basis()) {
    json col = json::array();
    for (const T& x : v) col.push_back(scalar_to_json(x));
    basis.push_back(col);
  }
  return basis;
}

template <class T>
json subspace_to_json(const Subspace<T>& W) {
  return {{"ambient_dim", W.ambient_dim()}, {"basis", basis_to_json(W)}};
}

template <class T>
Subspace<T> subspace_from_basis_json(const json& basis, AmbientPtr<T> ambient) {
  std::vector<std::vector<T>> vecs;
  for (const auto& col : basis) {
    std::vector<T> v;
    for (const auto& x : col) v.push_back(scalar_from_json<T>(x));
    if (v.size() != ambient->dim()) throw std::invalid_argument("basis vector has the wrong length");
    vecs.push_back(std::move(v));
  }
  return Subspace<T>::span(ambient, vecs);
}

template <class T>
Subspace<T> subspace_from_json(const json& j, AmbientPtr<T> ambient) {
  if (j.at("ambient_dim").get<std::size_t>() != ambient->dim()) throw std::invalid_argument("ambient dimension mismatch");
  return subspace_from_basis_json(j.at("basis"), std::move(ambient));
}

template <class T>
json diagram_to_json(const GrassmannianDiagram<T>& D) {
  json points = json::array();
  for (const auto& [I, W] : D.values) {
    if (W.is_zero()) continue;
    points.push_back({{"interval", interval_to_json(I, D.poset)}, {"dim", W.dim()}, {"basis", basis_to_json(W)}});
  }
  json out = {{"poset", poset_to_json(D.poset)}, {"order", to_string(D.order_tag)}, {"ambient_dim", D.ambient->dim()}};
  if (!D.ambient->labels().empty()) out["basis_labels"] = D.ambient->labels();
  out["points"] = points;
  return out;
}

/// `ambient` may be null, in which case a standard space of the recorded size is created.
template <class T>
GrassmannianDiagram<T> diagram_from_json(const json& j, AmbientPtr<T> ambient = nullptr) {
  LinearMetricPoset P = poset_from_json(j.at("poset"));
  if (!ambient) {
    std::vector<std::string> labels;
    if (j.contains("basis_labels")) labels = j.at("basis_labels").get<std::vector<std::string>>();
    ambient = std::make_shared<const AmbientSpace<T>>(j.at("ambient_dim").get<std::size_t>(), labels);
  }
  GrassmannianDiagram<T> D{P, parse_interval_order(j.value("order", std::string("product"))), ambient, {}};
  for (const auto& pt : j.at("points")) {
    Interval I = interval_from_json(pt.at("interval"), P);
    if (D.values.count(I)) throw std::invalid_argument("duplicate interval in diagram");
    Subspace<T> W = subspace_from_basis_json(pt.at("basis"), ambient);
    if (pt.contains("dim") && pt.at("dim").get<std::size_t>() != W.dim())
      throw std::invalid_argument("recorded dim does not match the basis");
    D.set(I, std::move(W));
  }
  return D;
}

template <class T>
json interval_function_to_json(const SubspaceIntervalFunction<T>& F) {
  json out = json::array();
  for (const auto& [I, W] : F.values) out.push_back({{"interval", interval_to_json(I, F.poset)}, {"basis", basis_to_json(W)}});
  return out;
}

template <class T>
std::string diagram_to_tsv(const GrassmannianDiagram<T>& D) {
  std::string out = "birth\tdeath\tdim\n";
  for (const auto& [I, W] : D.values) {
    out += rational_to_string(D.poset.grade(I.birth)) + "\t";
    out += (I.is_ray() ? std::string("inf") : rational_to_string(D.poset.grade(I.death))) + "\t";
    out += std::to_string(W.dim()) + "\n";
  }
  return out;
}

}  // namespace gpd
