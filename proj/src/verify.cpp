#include "gpd/verify.hpp"

#include <future>
#include <thread>

namespace gpd {

std::string to_string(PropertyStatus s) {
  switch (s) {
    case PropertyStatus::Pass: return "pass";
    case PropertyStatus::Fail: return "fail";
    case PropertyStatus::SkippedFloat: return "skipped-float";
  }
  return "?";
}

std::vector<Instance> make_instances(const SuiteOptions& opt) {
  Rng rng(opt.seed);
  std::vector<Instance> out;
  for (int k = 0; k < opt.filtrations; ++k) {
    Instance inst{std::make_shared<const Filtration>(random_filtration(rng, opt.shape)), {}};
    if (k < opt.spd_grams)
      for (int q = 0; q <= opt.max_degree + 1; ++q) {
        const std::size_t dim = inst.filtration->simplices(q).size();
        if (dim) inst.grams.emplace(q, random_spd(rng, dim));
      }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<std::shared_ptr<const Filtration>> make_connected(const SuiteOptions& opt) {
  Rng rng(opt.seed + 1);
  RandomFiltrationOptions shape = opt.shape;
  shape.connected = true;
  std::vector<std::shared_ptr<const Filtration>> out;
  for (int k = 0; k < opt.connected; ++k) out.push_back(std::make_shared<const Filtration>(random_filtration(rng, shape)));
  return out;
}

std::vector<MorphismInstance> make_morphisms(const SuiteOptions& opt) {
  Rng rng(opt.seed + 2);
  std::vector<MorphismInstance> out;
  for (int k = 0; k < opt.morphisms; ++k) {
    auto f = std::make_shared<const Filtration>(random_filtration(rng, opt.shape));
    GaloisConnection g = random_galois(rng, f->poset(), opt.shape.max_steps);
    out.push_back({std::move(f), std::move(g)});
  }
  return out;
}

namespace {

enum Prop {
  kOffDiagonal,
  kMonoidal,
  kTransversal,
  kDimension,
  kBornDies,
  kLaplacian,
  kHarmonic,
  kTreegram,
  kFil,
  kInn,
  kGpd,
  kCharge,
  kCost,
  kComposition,
  kPropCount
};

const char* const kNames[kPropCount] = {
    "off_diagonal_equality", "monoidal_inverse",   "transversality",      "dimension_match",
    "born_dies_exactly",     "laplacian_kernel",   "harmonic_barcode",    "treegram_roundtrip",
    "fil_morphism_valid",    "inn_transport",      "gpd_transport",       "charge_transport",
    "transport_cost",        "gpd_composition",
};

constexpr bool kNeedsExact[kPropCount] = {false, false, false, false, true, false, true,
                                          true,  true,  true,  true,  true, true,  true};

using Results = std::vector<std::pair<Prop, Failure>>;

template <class F>
Failure guarded(F&& f) {
  try {
    return f();
  } catch (const std::exception& e) {
    return std::string("exception: ") + e.what();
  }
}

template <class T>
Results run_instance(const Instance& inst, std::size_t index, const SuiteOptions& opt) {
  constexpr bool exact = ScalarTraits<T>::exact;
  Results r;
  const ChainModel<T> model(inst.filtration, convert_grams<T>(inst.grams));
  Rng rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  for (int q = 0; q <= opt.max_degree; ++q) {
    std::optional<DegreeData<T>> d;
    if (auto fail = guarded([&]() -> Failure {
          d = compute_degree(model, q);
          return std::nullopt;
        })) {
      for (Prop p : {kOffDiagonal, kMonoidal, kTransversal, kDimension}) r.emplace_back(p, fail);
      continue;
    }
    const std::string tag = "instance " + std::to_string(index) + " q=" + std::to_string(q) + ": ";
    auto record = [&](Prop p, Failure f) { r.emplace_back(p, f ? std::optional(tag + *f) : std::nullopt); };
    record(kOffDiagonal, guarded([&] { return check_off_diagonal(*d); }));
    record(kMonoidal, guarded([&] { return check_monoidal_inverse(*d); }));
    record(kTransversal, guarded([&]() -> Failure {
             if (auto f = check_transversal(d->times)) return f;
             return check_transversal(d->supseteq);
           }));
    record(kDimension, guarded([&] { return check_dimension_match(model, q, *d); }));
    record(kLaplacian, guarded([&] { return check_laplacian_kernel(model, q); }));
    if constexpr (exact) {
      record(kBornDies, guarded([&] { return check_born_dies(model, q, *d, rng, opt.born_dies_samples); }));
      record(kHarmonic, guarded([&] { return check_harmonic(model, q, *d); }));
    }
  }
  return r;
}

template <class Job>
auto parallel_map(std::size_t count, Job job) {
  using R = decltype(job(std::size_t{0}));
  std::vector<R> out(count);
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::future<void>> futures;
  for (std::size_t w = 0; w < workers; ++w)
    futures.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < count; k += workers) out[k] = job(k);
    }));
  for (auto& f : futures) f.get();
  return out;
}

}  // namespace

template <class T>
std::vector<PropertyReport> run_property_suites(const SuiteOptions& opt) {
  constexpr bool exact = ScalarTraits<T>::exact;
  std::vector<PropertyReport> reports(kPropCount);
  for (int p = 0; p < kPropCount; ++p) {
    reports[p].name = kNames[p];
    if (!exact && kNeedsExact[p]) reports[p].status = PropertyStatus::SkippedFloat;
  }
  auto absorb = [&](const Results& rs) {
    for (const auto& [p, f] : rs) {
      ++reports[p].cases;
      if (!f) continue;
      if (!reports[p].failures++) reports[p].first_failure = *f;
      reports[p].status = PropertyStatus::Fail;
    }
  };

  const auto instances = make_instances(opt);
  for (const auto& rs : parallel_map(instances.size(), [&](std::size_t k) { return run_instance<T>(instances[k], k, opt); }))
    absorb(rs);

  if constexpr (exact) {
    const auto connected = make_connected(opt);
    for (const auto& rs : parallel_map(connected.size(), [&](std::size_t k) {
           Failure f = guarded([&] { return check_treegram_roundtrip<T>(connected[k]); });
           if (f) f = "connected instance " + std::to_string(k) + ": " + *f;
           return Results{{kTreegram, f}};
         }))
      absorb(rs);

    const auto morphisms = make_morphisms(opt);
    for (const auto& rs : parallel_map(morphisms.size(), [&](std::size_t k) {
           Results r;
           const std::string tag = "morphism " + std::to_string(k) + ": ";
           auto with_tag = [&](const Failure& f) { return f ? std::optional(tag + *f) : std::nullopt; };
           TransportResult t;
           if (auto f = guarded([&]() -> Failure {
                 t = check_transport<T>(morphisms[k], opt.max_degree);
                 return std::nullopt;
               }))
             t.fil = f;
           r.emplace_back(kFil, with_tag(t.fil));
           r.emplace_back(kInn, with_tag(t.inn));
           r.emplace_back(kGpd, with_tag(t.gpd));
           r.emplace_back(kCharge, with_tag(t.charge));
           r.emplace_back(kCost, with_tag(t.cost));
           for (int q = 0; q <= opt.max_degree; ++q)
             r.emplace_back(kComposition,
                            with_tag(guarded([&] { return check_composition<T>(morphisms[k], q); })));
           return r;
         }))
      absorb(rs);
  }
  return reports;
}

template std::vector<PropertyReport> run_property_suites<Rational>(const SuiteOptions&);
template std::vector<PropertyReport> run_property_suites<double>(const SuiteOptions&);

}  // namespace gpd
