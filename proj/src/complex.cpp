#include "gpd/complex.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include <json.hpp>

namespace gpd {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

struct RawSimplex {
  Rational grade;
  std::vector<std::string> vertices;
  int line;
};

Filtration assemble(std::vector<std::string> header, const std::vector<RawSimplex>& raw) {
  std::vector<std::string> names = header;
  if (names.empty()) {
    std::set<std::string> seen;
    for (const auto& r : raw) seen.insert(r.vertices.begin(), r.vertices.end());
    names.assign(seen.begin(), seen.end());
  } else {
    std::set<std::string> uniq(names.begin(), names.end());
    if (uniq.size() != names.size()) throw InputError("duplicate vertex in header");
  }
  std::map<std::string, int> vid;
  for (std::size_t i = 0; i < names.size(); ++i) vid[names[i]] = static_cast<int>(i);

  std::set<Rational> grade_set;
  for (const auto& r : raw) grade_set.insert(r.grade);
  LinearMetricPoset poset(std::vector<Rational>(grade_set.begin(), grade_set.end()));

  std::map<Simplex, int> entry;
  std::map<Simplex, int> line_of;
  for (const auto& r : raw) {
    if (r.vertices.empty()) throw InputError("simplex without vertices", r.line);
    Simplex s;
    for (const auto& v : r.vertices) {
      auto it = vid.find(v);
      if (it == vid.end()) throw InputError("vertex '" + v + "' not in the vertex header", r.line);
      s.push_back(it->second);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw InputError("repeated vertex in simplex", r.line);
    if (entry.count(s)) throw InputError("duplicate simplex", r.line);
    entry[s] = *poset.index_of(r.grade);
    line_of[s] = r.line;
  }
  for (const auto& [s, e] : entry) {
    if (s.size() < 2) continue;
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      auto it = entry.find(face);
      if (it == entry.end()) throw InputError("a face of this simplex is missing", line_of[s]);
      if (it->second > e) throw InputError("coface enters before one of its faces", line_of[s]);
    }
  }
  return Filtration(std::move(names), std::move(poset), std::move(entry));
}

}  // namespace

Filtration::Filtration(std::vector<std::string> vertex_names, LinearMetricPoset poset, std::map<Simplex, int> entry)
    : vertices_(std::move(vertex_names)), poset_(std::move(poset)), entry_(std::move(entry)) {
  for (const auto& [s, e] : entry_) {
    if (s.empty()) throw InputError("empty simplex");
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (s[k] < 0 || s[k] >= static_cast<int>(vertices_.size())) throw InputError("vertex index out of range");
      if (k && s[k - 1] >= s[k]) throw InputError("simplex vertices must be strictly increasing");
    }
    if (e < 0 || e >= poset_.size()) throw InputError("entry index out of range");
    const std::size_t q = s.size() - 1;
    if (by_dim_.size() <= q) by_dim_.resize(q + 1);
    by_dim_[q].push_back(s);
    if (s.size() > 1)
      for (std::size_t k = 0; k < s.size(); ++k) {
        Simplex face = s;
        face.erase(face.begin() + static_cast<long>(k));
        auto it = entry_.find(face);
        if (it == entry_.end()) throw InputError("face " + simplex_name(face) + " of " + simplex_name(s) + " is missing");
        if (it->second > e)
          throw InputError("coface " + simplex_name(s) + " enters before its face " + simplex_name(face));
      }
  }
  index_.resize(by_dim_.size());
  for (std::size_t q = 0; q < by_dim_.size(); ++q) {
    std::sort(by_dim_[q].begin(), by_dim_[q].end());
    for (std::size_t k = 0; k < by_dim_[q].size(); ++k) index_[q][by_dim_[q][k]] = k;
  }
}

const std::vector<Simplex>& Filtration::simplices(int q) const {
  static const std::vector<Simplex> none;
  if (q < 0 || q >= static_cast<int>(by_dim_.size())) return none;
  return by_dim_[q];
}

int Filtration::entry(const Simplex& s) const {
  auto it = entry_.find(s);
  if (it == entry_.end()) throw std::out_of_range("simplex not in complex");
  return it->second;
}

std::optional<std::size_t> Filtration::index_of(const Simplex& s) const {
  const std::size_t q = s.size() - 1;
  if (s.empty() || q >= index_.size()) return std::nullopt;
  auto it = index_[q].find(s);
  if (it == index_[q].end()) return std::nullopt;
  return it->second;
}

std::vector<Simplex> Filtration::sublevel(int i) const {
  if (i >= steps()) throw std::out_of_range("sublevel index out of range");
  std::vector<Simplex> out;
  for (const auto& [s, e] : entry_)
    if (e <= i) out.push_back(s);
  return out;
}

bool Filtration::connected() const {
  const auto& verts = simplices(0);
  if (verts.empty()) return false;
  std::vector<int> parent(vertices_.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : simplices(1)) parent[find(e[0])] = find(e[1]);
  const int root = find(verts.front()[0]);
  for (const auto& v : verts)
    if (find(v[0]) != root) return false;
  return true;
}

std::string Filtration::simplex_name(const Simplex& s) const {
  bool short_names = std::all_of(s.begin(), s.end(), [&](int v) { return vertices_.at(v).size() == 1; });
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k && !short_names) out += ",";
    out += vertices_.at(s[k]);
  }
  return out;
}

std::vector<std::string> Filtration::simplex_names(int q) const {
  std::vector<std::string> out;
  for (const auto& s : simplices(q)) out.push_back(simplex_name(s));
  return out;
}

Filtration Filtration::transport(const LinearMetricPoset& target, const std::vector<int>& left) const {
  std::map<Simplex, int> e;
  for (const auto& [s, i] : entry_) e[s] = left.at(i);
  return Filtration(vertices_, target, std::move(e));
}

Filtration parse_filtration_text(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> header;
  std::vector<RawSimplex> raw;
  int lineno = 0;
  for (std::string line; std::getline(in, line);) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    if (line.rfind("vertices:", 0) == 0) {
      if (!raw.empty() || !header.empty()) throw InputError("vertex header must come first", lineno);
      header = split_ws(line.substr(9));
      if (header.empty()) throw InputError("empty vertex header", lineno);
      continue;
    }
    auto semi = line.find(';');
    if (semi == std::string::npos) throw InputError("expected '<grade> ; <vertices>'", lineno);
    RawSimplex r;
    r.line = lineno;
    try {
      r.grade = parse_rational(trim(line.substr(0, semi)));
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("bad grade: ") + e.what(), lineno);
    }
    r.vertices = split_ws(line.substr(semi + 1));
    if (r.vertices.empty()) throw InputError("simplex without vertices", lineno);
    raw.push_back(std::move(r));
  }
  return assemble(std::move(header), raw);
}

Filtration parse_filtration_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  try {
    std::vector<std::string> header;
    if (j.contains("vertices"))
      for (const auto& v : j.at("vertices")) header.push_back(v.is_string() ? v.get<std::string>() : v.dump());
    std::vector<RawSimplex> raw;
    int k = 0;
    for (const auto& s : j.at("simplices")) {
      RawSimplex r;
      r.line = 0;
      const auto& t = s.at("t");
      r.grade = parse_rational(t.is_string() ? t.get<std::string>() : t.dump());
      for (const auto& v : s.at("v")) r.vertices.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      if (r.vertices.empty()) throw InputError("simplex " + std::to_string(k) + " has no vertices");
      raw.push_back(std::move(r));
      ++k;
    }
    return assemble(std::move(header), raw);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed filtration JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

Filtration parse_filtration(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_filtration_json(text);
  return parse_filtration_text(text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Filtration load_filtration(const std::string& path) { return parse_filtration(read_file(path)); }

Matrix<Rational> boundary_matrix(const Filtration& f, int q) {
  const auto& cols = f.simplices(q);
  const auto& rows = f.simplices(q - 1);
  Matrix<Rational> m(rows.size(), cols.size());
  if (q <= 0) return m;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = cols[c];
    for (std::size_t k = 0; k < s.size(); ++k) {
      Simplex face = s;
      face.erase(face.begin() + static_cast<long>(k));
      m(*f.index_of(face), c) = (k % 2 == 0) ? 1 : -1;
    }
  }
  return m;
}

}  // namespace gpd
