#include "gpd/treegram.hpp"

#include <numeric>
#include <sstream>

namespace gpd {

std::set<int> SubPartition::support() const {
  std::set<int> s;
  for (const auto& b : blocks) s.insert(b.begin(), b.end());
  return s;
}

void SubPartition::normalize() {
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  std::sort(blocks.begin(), blocks.end());
}

void Treegram::validate() const {
  if (times.size() != states.size()) throw std::invalid_argument("treegram needs one state per breakpoint");
  for (std::size_t k = 1; k < times.size(); ++k)
    if (!(times[k - 1] < times[k])) throw std::invalid_argument("treegram breakpoints must increase");
  const int nv = static_cast<int>(vertices.size());
  for (std::size_t k = 0; k < states.size(); ++k) {
    std::set<int> seen;
    std::size_t count = 0;
    for (const auto& b : states[k].blocks) {
      if (b.empty()) throw std::invalid_argument("empty block in treegram");
      for (int x : b) {
        if (x < 0 || x >= nv) throw std::invalid_argument("treegram block refers to an unknown vertex");
        seen.insert(x);
        ++count;
      }
    }
    if (seen.size() != count) throw std::invalid_argument("treegram blocks overlap");
    if (k == 0) continue;
    // Every earlier block must sit inside one later block.
    std::map<int, std::size_t> owner;
    for (std::size_t bi = 0; bi < states[k].blocks.size(); ++bi)
      for (int x : states[k].blocks[bi]) owner[x] = bi;
    for (const auto& b : states[k - 1].blocks) {
      auto it = owner.find(b.front());
      if (it == owner.end()) throw std::invalid_argument("treegram support shrinks");
      for (int x : b) {
        auto jt = owner.find(x);
        if (jt == owner.end()) throw std::invalid_argument("treegram support shrinks");
        if (jt->second != it->second) throw std::invalid_argument("treegram block splits");
      }
    }
  }
  if (states.empty()) {
    if (!vertices.empty()) throw std::invalid_argument("treegram has vertices but no states");
    return;
  }
  const auto& last = states.back();
  if (last.blocks.size() != 1 || static_cast<int>(last.blocks[0].size()) != nv)
    throw std::invalid_argument("final treegram state must be a single block on all vertices");
}

std::vector<int> Treegram::birth_indices() const {
  std::vector<int> b(vertices.size(), -1);
  for (int k = static_cast<int>(states.size()) - 1; k >= 0; --k)
    for (const auto& blk : states[k].blocks)
      for (int x : blk) b[x] = k;
  return b;
}

Treegram treegram_of_filtration(const Filtration& f) {
  if (!f.connected()) throw InputError("treegram requires a connected complex");
  const int nv = static_cast<int>(f.vertices().size());
  if (static_cast<int>(f.simplices(0).size()) != nv) throw InputError("every listed vertex must appear in the complex");
  Treegram tg{f.vertices(), f.poset().grades(), {}};
  std::vector<int> parent(nv);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < f.steps(); ++i) {
    for (const auto& e : f.simplices(1))
      if (f.entry(e) == i) parent[find(e[0])] = find(e[1]);
    std::map<int, std::vector<int>> comps;
    for (const auto& v : f.simplices(0))
      if (f.entry(v) <= i) comps[find(v[0])].push_back(v[0]);
    SubPartition s;
    for (auto& [root, members] : comps) s.blocks.push_back(members);
    s.normalize();
    tg.states.push_back(std::move(s));
  }
  tg.validate();
  return tg;
}

std::string treegram_to_dot(const Treegram& t) {
  std::ostringstream out;
  out << "digraph treegram {\n  rankdir=BT;\n  node [shape=box];\n";
  auto node = [](std::size_t k, std::size_t b) { return "s" + std::to_string(k) + "_" + std::to_string(b); };
  for (std::size_t k = 0; k < t.states.size(); ++k) {
    for (std::size_t b = 0; b < t.states[k].blocks.size(); ++b) {
      out << "  " << node(k, b) << " [label=\"t=" << rational_to_string(t.times[k]) << "\\n{";
      const auto& blk = t.states[k].blocks[b];
      for (std::size_t x = 0; x < blk.size(); ++x) out << (x ? "," : "") << t.vertices[blk[x]];
      out << "}\"];\n";
    }
    if (k == 0) continue;
    for (std::size_t b = 0; b < t.states[k - 1].blocks.size(); ++b) {
      const int rep = t.states[k - 1].blocks[b].front();
      for (std::size_t p = 0; p < t.states[k].blocks.size(); ++p) {
        const auto& blk = t.states[k].blocks[p];
        if (std::find(blk.begin(), blk.end(), rep) != blk.end()) out << "  " << node(k - 1, b) << " -> " << node(k, p) << ";\n";
      }
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace gpd
