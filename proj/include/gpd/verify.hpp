#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gpd/morphisms.hpp"
#include "gpd/random.hpp"
#include "gpd/treegram.hpp"

namespace gpd {

enum class PropertyStatus { Pass, Fail, SkippedFloat };
std::string to_string(PropertyStatus s);

struct PropertyReport {
  std::string name;
  PropertyStatus status = PropertyStatus::Pass;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  int filtrations = 200;  // general instances, degrees 0..max_degree
  int spd_grams = 20;     // how many of them carry random SPD Gram matrices
  int connected = 100;    // treegram instances
  int morphisms = 100;    // random filtration morphisms
  int max_degree = 2;
  int born_dies_samples = 10;
  RandomFiltrationOptions shape;
};

struct Instance {
  std::shared_ptr<const Filtration> filtration;
  std::map<int, Matrix<Rational>> grams;  // empty means the standard inner product
};

struct MorphismInstance {
  std::shared_ptr<const Filtration> source;
  GaloisConnection g;
};

std::vector<Instance> make_instances(const SuiteOptions& opt);
std::vector<std::shared_ptr<const Filtration>> make_connected(const SuiteOptions& opt);
std::vector<MorphismInstance> make_morphisms(const SuiteOptions& opt);

template <class T>
std::map<int, Matrix<T>> convert_grams(const std::map<int, Matrix<Rational>>& g) {
  std::map<int, Matrix<T>> out;
  for (const auto& [q, m] : g) out.emplace(q, convert<T>(m));
  return out;
}

using Failure = std::optional<std::string>;

/// ZB, LK and both inverses for one degree.
template <class T>
struct DegreeData {
  SubspaceIntervalFunction<T> zb, lk;
  GrassmannianDiagram<T> times, supseteq;
};

template <class T>
DegreeData<T> compute_degree(const ChainModel<T>& model, int q) {
  DegreeData<T> d{zb(model, q), lk(model, q), {}, {}};
  d.times = oi_times(d.zb);
  d.supseteq = oi_supseteq(d.lk);
  return d;
}

namespace detail {
inline std::string at_interval(const char* what, const Interval& I, const LinearMetricPoset& P) {
  return std::string(what) + " at " + interval_to_string(I, P);
}
}  // namespace detail

template <class T>
Failure check_off_diagonal(const DegreeData<T>& d) {
  for (const Interval& I : off_diagonal_intervals(d.times.n()))
    if (d.times.at(I) != d.supseteq.at(I)) return detail::at_interval("LK and ZB inverses differ", I, d.times.poset);
  return std::nullopt;
}

template <class T>
Failure check_monoidal_inverse(const DegreeData<T>& d) {
  const auto dom = all_intervals(d.zb.n());
  const auto sums = downset_sums(as_vector(d.times, IntervalOrder::Product),
                                 FinitePoset::intervals(dom, IntervalOrder::Product));
  for (std::size_t k = 0; k < dom.size(); ++k)
    if (sums[k] != d.zb.at(dom[k])) return detail::at_interval("down-set sum differs from ZB", dom[k], d.zb.poset);
  return std::nullopt;
}

template <class T>
Failure check_transversal(const GrassmannianDiagram<T>& D) {
  if (!D.transverse()) return std::string("dim of the sum is less than the sum of dims");
  return std::nullopt;
}

template <class T>
Failure check_dimension_match(const ChainModel<T>& model, int q, const DegreeData<T>& d) {
  const IntegerIntervalFunction got = dim_diagram(d.times);
  if (!(got == mobius_invert_int(dim_function(d.zb)))) return std::string("dims differ from the inverse of dim ZB");
  const IntegerIntervalFunction classical = mobius_invert_int(betti_function(model, q));
  for (const Interval& I : off_diagonal_intervals(d.times.n()))
    if (got.at(I) != classical.at(I)) return detail::at_interval("dims differ from the classical diagram", I, d.times.poset);
  return std::nullopt;
}

template <class T>
Failure check_born_dies(const ChainModel<T>& model, int q, const DegreeData<T>& d, Rng& rng, int samples) {
  for (const auto& [I, W] : d.times.values) {
    std::vector<std::vector<T>> tests = W.basis();
    for (int s = 0; s < samples; ++s) {
      const auto coeff = random_integer_vector(rng, W.dim(), 4);
      std::vector<T> z(W.ambient_dim(), T(0));
      const auto basis = W.basis();
      for (std::size_t k = 0; k < basis.size(); ++k) {
        const T c = ScalarTraits<T>::from_rational(coeff[k] / Rational(1 + static_cast<long>(rng() % 3)));
        for (std::size_t x = 0; x < z.size(); ++x) z[x] += c * basis[k][x];
      }
      tests.push_back(std::move(z));
    }
    for (const auto& z : tests)
      if (!born_and_dies_exactly(model, q, z, I)) return detail::at_interval("vector not born/dying exactly", I, d.times.poset);
  }
  return std::nullopt;
}

template <class T>
Failure check_laplacian_kernel(const ChainModel<T>& model, int q) {
  const int n = model.steps();
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const Subspace<T> op_kernel = persistent_laplacian(model, q, i, j).kernel();
      if (op_kernel != laplacian_kernel(model, q, i, j))
        return "operator and intersection kernels differ at (" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (op_kernel.dim() != persistent_betti(model, q, i, j))
        return "kernel dimension differs from the persistent Betti number at (" + std::to_string(i) + "," +
               std::to_string(j) + ")";
    }
  return std::nullopt;
}

/// Harmonic barcode with the empty-complex base, on finite off-diagonal points.
template <class T>
Failure check_harmonic(const ChainModel<T>& model, int q, const DegreeData<T>& d) {
  const IntegerIntervalFunction classical = mobius_invert_int(betti_function(model, q));
  const int n = model.steps();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Interval I{i, j};
      const HarmonicTower<T> t = harmonic_tower(model, q, i, j, HarmonicBase::EmptyBase);
      const auto mult = static_cast<std::size_t>(classical.at(I));
      if (t.P.dim() != mult) return detail::at_interval("dim P differs from the multiplicity", I, d.times.poset);
      if (project_subspace(d.times.at(I), perp(t.N)).dim() != mult)
        return detail::at_interval("projection onto N-perp is not full rank", I, d.times.poset);
    }
  return std::nullopt;
}

/// Filtration -> treegram -> diagram -> treegram, against oi_times(ZB_0).
template <class T>
Failure check_treegram_roundtrip(const std::shared_ptr<const Filtration>& f) {
  const ChainModel<T> model(f);
  const GrassmannianDiagram<T> D = oi_times(zb(model, 0));
  const Treegram tg = treegram_of_filtration(*f);
  const GrassmannianDiagram<T> R = reconstruct_gpd0(tg, model.ambient(0));
  if (!(R == D)) return std::string("reconstructed diagram differs from oi_times(ZB_0)");
  if (!(treegram_from_gpd0(D, f->vertices()) == tg)) return std::string("treegram recovered from the diagram differs");
  if (!(reconstruct_gpd0(treegram_from_gpd0(R, f->vertices()), model.ambient(0)) == R))
    return std::string("diagram round-trip is not the identity");
  return std::nullopt;
}

struct TransportResult {
  Failure fil, inn, gpd, charge, cost;
};

/// G = F ∘ right; validates the morphism in all four categories and compares costs.
template <class T>
TransportResult check_transport(const MorphismInstance& inst, int max_degree) {
  TransportResult r;
  const auto G = std::make_shared<const Filtration>(inst.source->transport(inst.g.target, inst.g.left));
  const FilMorphism fil{inst.g};
  if (auto v = validate(fil, *inst.source, *G); !v) r.fil = v.reason;
  const ChainModel<T> mf(inst.source), mg(G);
  const ExtendedValue c0 = cost(fil);
  for (int q = 0; q <= max_degree; ++q) {
    const auto zf = zb(mf, q), zg = zb(mg, q);
    const InnMorphism inn = induce_inn(fil);
    if (auto v = validate(inn, zf, zg); !v && !r.inn) r.inn = "q=" + std::to_string(q) + ": " + v.reason;
    const auto df = oi_times(zf), dg = oi_times(zg);
    const GpdMorphism<T> gpd = induce_gpd<T>(inn);
    if (auto v = validate(gpd, df, dg); !v && !r.gpd) r.gpd = "q=" + std::to_string(q) + ": " + v.reason;
    const ChargeMorphism ch = induce_fnc(gpd);
    if (auto v = validate(ch, dim_diagram(df), dim_diagram(dg)); !v && !r.charge)
      r.charge = "q=" + std::to_string(q) + ": " + v.reason;
    if (!(cost(inn) == c0 && cost(gpd) == c0 && cost(ch) == c0) && !r.cost) r.cost = "transported costs differ";
  }
  return r;
}

/// Composites with a diagonal-blind step on either side.
template <class T>
Failure check_composition(const MorphismInstance& inst, int q) {
  const auto G = std::make_shared<const Filtration>(inst.source->transport(inst.g.target, inst.g.left));
  const ChainModel<T> mf(inst.source), mg(G);
  const auto df = oi_times(zb(mf, q)), dg = oi_times(zb(mg, q));
  const LinearMetricPoset& Q = dg.poset;

  auto blind = [](const GrassmannianDiagram<T>& M) {
    GpdMorphism<T> m{GaloisConnection::identity(M.poset), {}};
    for (const auto& [I, W] : M.diagonal().values) m.zeta.emplace(I.birth, W);
    return m;
  };

  // df -> dg -> off(dg)
  const GpdMorphism<T> a1{inst.g, {}}, a2 = blind(dg);
  if (auto v = validate(a1, df, dg); !v) return "first factor invalid: " + v.reason;
  if (auto v = validate(a2, dg, dg.off_diagonal()); !v) return "diagonal-blind factor invalid: " + v.reason;
  if (auto v = validate(compose(a1, a2), df, dg.off_diagonal()); !v) return "composite invalid: " + v.reason;

  // df -> off(df) -> pushforward(off(df))
  const GpdMorphism<T> b1 = blind(df), b2{inst.g, {}};
  const GrassmannianDiagram<T> pushed = pushforward(bar(inst.g).left, df.off_diagonal(), Q);
  if (auto v = validate(b2, df.off_diagonal(), pushed); !v) return "pushforward factor invalid: " + v.reason;
  if (auto v = validate(compose(b1, b2), df, pushed); !v) return "composite with pushed zeta invalid: " + v.reason;
  return std::nullopt;
}

/// Runs every property over the generated instance set. Properties that need
/// exact arithmetic are reported as skipped on the float backend.
template <class T>
std::vector<PropertyReport> run_property_suites(const SuiteOptions& opt);

}  // namespace gpd
