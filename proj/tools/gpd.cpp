#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>

#include "gpd/io.hpp"
#include "gpd/verify.hpp"

namespace {

using namespace gpd;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitInput = 2;

struct RunConfig {
  std::vector<std::string> inputs;
  std::vector<int> degrees;
  std::string invariant = "bd";
  std::string backend = "rational";
  std::string gram;
  std::string format = "json";
  std::string output_dir;
  std::string base = "empty";
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
  bool classical = false;
  bool treegram = false;
  bool reconstruct = false;
  SuiteOptions suite;
};

struct InputFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Loaded {
  std::shared_ptr<const Filtration> f;
  std::map<int, Matrix<Rational>> grams;
};

Loaded load(const RunConfig& cfg) {
  try {
    if (cfg.inputs.empty()) throw InputFailure("no input file");
    Loaded l{std::make_shared<const Filtration>(load_filtration(cfg.inputs.front())), {}};
    if (!cfg.gram.empty()) {
      l.grams = grams_from_json(json::parse(read_file(cfg.gram)));
      for (const auto& [q, g] : l.grams)
        AmbientSpace<Rational>(l.f->simplices(q).size(), g);  // validates size and definiteness
    }
    return l;
  } catch (const InputFailure&) {
    throw;
  } catch (const std::exception& e) {
    throw InputFailure(e.what());
  }
}

void emit(const RunConfig& cfg, const std::string& name, const std::string& body) {
  if (cfg.output_dir.empty()) {
    std::cout << body;
    if (!body.empty() && body.back() != '\n') std::cout << '\n';
    return;
  }
  std::filesystem::create_directories(cfg.output_dir);
  std::ofstream(std::filesystem::path(cfg.output_dir) / name) << body << (body.ends_with('\n') ? "" : "\n");
}

std::string stem(const RunConfig& cfg) { return std::filesystem::path(cfg.inputs.front()).stem().string(); }

std::string integer_tsv(const IntegerIntervalFunction& m, const LinearMetricPoset& p) {
  std::string out = "birth\tdeath\tmultiplicity\n";
  for (const auto& [I, v] : m.values) {
    if (!v) continue;
    out += rational_to_string(p.grade(I.birth)) + "\t" +
           (I.is_ray() ? std::string("inf") : rational_to_string(p.grade(I.death))) + "\t" + std::to_string(v) + "\n";
  }
  return out;
}

template <class T>
int compute(const RunConfig& cfg, const Loaded& in) {
  const ChainModel<T> model(in.f, convert_grams<T>(in.grams));
  std::optional<Treegram> tg;
  if (cfg.treegram) {
    try {
      tg = treegram_of_filtration(*in.f);
    } catch (const InputError& e) {
      throw InputFailure(e.what());
    }
  }
  std::vector<std::string> invariants;
  if (cfg.invariant == "bd" || cfg.invariant == "both") invariants.push_back("bd");
  if (cfg.invariant == "lap" || cfg.invariant == "both") invariants.push_back("lap");

  struct Task {
    int q;
    std::string inv;
    std::future<GrassmannianDiagram<T>> diagram;
  };
  std::vector<Task> tasks;
  for (int q : cfg.degrees)
    for (const auto& inv : invariants)
      tasks.push_back({q, inv, std::async(std::launch::async, [&model, q, inv] {
                         return inv == "bd" ? oi_times(zb(model, q)) : oi_supseteq(lk(model, q));
                       })});

  json doc = {{"diagrams", json::array()}};
  for (auto& t : tasks) {
    const GrassmannianDiagram<T> D = t.diagram.get();
    const std::string base = stem(cfg) + ".q" + std::to_string(t.q) + "." + t.inv;
    json entry = {{"degree", t.q}, {"invariant", t.inv}, {"diagram", diagram_to_json(D)}};
    if (cfg.classical) entry["classical"] = integer_function_to_json(dim_diagram(D), D.poset);
    if (cfg.format == "tsv") {
      emit(cfg, base + ".tsv", "# degree " + std::to_string(t.q) + " " + t.inv + "\n" + diagram_to_tsv(D));
      if (cfg.classical) emit(cfg, base + ".classical.tsv", integer_tsv(dim_diagram(D), D.poset));
    } else if (!cfg.output_dir.empty()) {
      emit(cfg, base + ".json", entry.dump(2));
    }
    doc["diagrams"].push_back(std::move(entry));
  }
  if (tg) {
    if (cfg.format == "tsv" || !cfg.output_dir.empty())
      emit(cfg, stem(cfg) + ".treegram.json", treegram_to_json(*tg).dump(2));
    doc["treegram"] = treegram_to_json(*tg);
  }
  if (cfg.format == "json" && cfg.output_dir.empty()) emit(cfg, "", doc.dump(2));
  return kExitOk;
}

int cmd_treegram(const RunConfig& cfg, const Loaded& in) {
  Treegram tg;
  try {
    tg = treegram_of_filtration(*in.f);
  } catch (const InputError& e) {
    throw InputFailure(e.what());
  }
  if (cfg.format == "dot") {
    emit(cfg, stem(cfg) + ".treegram.dot", treegram_to_dot(tg));
    if (!cfg.reconstruct) return kExitOk;
  }
  json doc = {{"treegram", treegram_to_json(tg)}};
  int code = kExitOk;
  if (cfg.reconstruct) {
    const ChainModel<Rational> model(in.f);
    const auto R = reconstruct_gpd0(tg, model.ambient(0));
    const bool equal = R == oi_times(zb(model, 0));
    doc["reconstruction"] = diagram_to_json(R);
    doc["verdict"] = equal ? "equal" : "different";
    if (!equal) code = kExitVerify;
  }
  emit(cfg, stem(cfg) + ".treegram.json", doc.dump(2));
  return code;
}

template <class T>
int cmd_classical(const RunConfig& cfg, const Loaded& in) {
  const ChainModel<T> model(in.f, convert_grams<T>(in.grams));
  json doc = {{"diagrams", json::array()}};
  for (int q : cfg.degrees) {
    const IntegerIntervalFunction m = mobius_invert_int(betti_function(model, q));
    if (cfg.format == "tsv")
      emit(cfg, stem(cfg) + ".q" + std::to_string(q) + ".classical.tsv",
           "# degree " + std::to_string(q) + "\n" + integer_tsv(m, in.f->poset()));
    doc["diagrams"].push_back({{"degree", q}, {"classical", integer_function_to_json(m, in.f->poset())}});
  }
  if (cfg.format == "json") emit(cfg, stem(cfg) + ".classical.json", doc.dump(2));
  return kExitOk;
}

template <class T>
int cmd_harmonic(const RunConfig& cfg, const Loaded& in) {
  const ChainModel<T> model(in.f, convert_grams<T>(in.grams));
  const HarmonicBase base = cfg.base == "copy" ? HarmonicBase::CopyFirst : HarmonicBase::EmptyBase;
  const LinearMetricPoset& P = in.f->poset();
  json doc = {{"base", cfg.base}, {"barcodes", json::array()}};
  std::string tsv = "degree\tbirth\tdeath\tdim\n";
  for (int q : cfg.degrees) {
    json points = json::array();
    for (int i = 0; i < P.size(); ++i)
      for (int j = i + 1; j < P.size(); ++j) {
        const auto t = harmonic_tower(model, q, i, j, base);
        if (t.P.is_zero()) continue;
        points.push_back({{"interval", interval_to_json({i, j}, P)}, {"dim", t.P.dim()}, {"basis", basis_to_json(t.P)}});
        tsv += std::to_string(q) + "\t" + rational_to_string(P.grade(i)) + "\t" + rational_to_string(P.grade(j)) + "\t" +
               std::to_string(t.P.dim()) + "\n";
      }
    doc["barcodes"].push_back({{"degree", q}, {"poset", poset_to_json(P)}, {"points", points}});
  }
  emit(cfg, stem(cfg) + ".harmonic." + (cfg.format == "tsv" ? "tsv" : "json"), cfg.format == "tsv" ? tsv : doc.dump(2));
  return kExitOk;
}

template <class T>
int cmd_verify(const RunConfig& cfg) {
  SuiteOptions opt = cfg.suite;
  opt.seed = cfg.seed;
  const auto reports = run_property_suites<T>(opt);
  json out = {{"seed", opt.seed}, {"backend", ScalarTraits<T>::exact ? "rational" : "float"}, {"properties", json::array()}};
  bool ok = true;
  for (const auto& r : reports) {
    json e = {{"name", r.name}, {"status", to_string(r.status)}, {"cases", r.cases}, {"failures", r.failures}};
    if (!r.first_failure.empty()) e["first_failure"] = r.first_failure;
    out["properties"].push_back(e);
    ok = ok && r.status != PropertyStatus::Fail;
  }
  out["ok"] = ok;
  emit(cfg, "verify.json", out.dump(2));
  return ok ? kExitOk : kExitVerify;
}

// A bare diagram, a per-degree file, or the first diagram of a `compute` document.
json diagram_document(const std::string& path) {
  json j = json::parse(read_file(path));
  if (j.contains("diagram")) return j.at("diagram");
  if (j.contains("diagrams")) {
    if (j.at("diagrams").empty()) throw InputFailure(path + " holds no diagram");
    return j.at("diagrams").at(0).at("diagram");
  }
  return j;
}

int cmd_compare(const RunConfig& cfg) {
  if (cfg.inputs.size() != 2) throw InputFailure("compare needs exactly two diagram files");
  GrassmannianDiagram<Rational> A, B;
  try {
    A = diagram_from_json<Rational>(diagram_document(cfg.inputs[0]));
    B = diagram_from_json<Rational>(diagram_document(cfg.inputs[1]), A.ambient);
  } catch (const std::exception& e) {
    throw InputFailure(e.what());
  }
  if (!(A.poset == B.poset)) throw InputFailure("diagrams are over different posets");
  json diffs = json::array();
  for (const Interval& I : off_diagonal_intervals(A.n()))
    if (A.at(I) != B.at(I))
      diffs.push_back({{"interval", interval_to_json(I, A.poset)}, {"left_dim", A.at(I).dim()}, {"right_dim", B.at(I).dim()}});
  const bool equal = diffs.empty();
  emit(cfg, "compare.json", json{{"equal_off_diagonal", equal}, {"differences", diffs}}.dump(2));
  return equal ? kExitOk : kExitVerify;
}

template <class T>
int dispatch(const std::string& cmd, const RunConfig& cfg) {
  if (cmd == "verify") return cmd_verify<T>(cfg);
  if (cmd == "compare") return cmd_compare(cfg);
  const Loaded in = load(cfg);
  if (cmd == "compute") return compute<T>(cfg, in);
  if (cmd == "treegram") return cmd_treegram(cfg, in);
  if (cmd == "classical") return cmd_classical<T>(cfg, in);
  return cmd_harmonic<T>(cfg, in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Grassmannian persistence diagrams of filtered simplicial complexes"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input) sub->add_option("input", cfg.inputs, "Filtration file (text or JSON)")->required()->expected(1);
    sub->add_option("--backend", cfg.backend, "Scalar backend")->check(CLI::IsMember({"rational", "float"}));
    sub->add_option("--tolerance", cfg.tolerance, "Relative tolerance of the float backend")->check(CLI::PositiveNumber);
    sub->add_option("--output-dir", cfg.output_dir, "Write files here instead of stdout");
  };
  auto add_degrees = [&](CLI::App* sub) {
    sub->add_option("--degree,-q", cfg.degrees, "Homology degree (repeatable)")->check(CLI::NonNegativeNumber);
    sub->add_option("--gram", cfg.gram, "JSON file of Gram matrices per degree");
  };

  auto* compute_cmd = app.add_subcommand("compute", "Grassmannian persistence diagrams per degree");
  add_common(compute_cmd, true);
  add_degrees(compute_cmd);
  compute_cmd->add_option("--invariant", cfg.invariant, "bd, lap or both")->check(CLI::IsMember({"bd", "lap", "both"}));
  compute_cmd->add_flag("--classical", cfg.classical, "Also write the integer diagram");
  compute_cmd->add_flag("--treegram", cfg.treegram, "Also write the treegram (connected complexes only)");
  compute_cmd->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* treegram_cmd = app.add_subcommand("treegram", "Treegram of a connected filtration");
  add_common(treegram_cmd, true);
  treegram_cmd->add_flag("--reconstruct", cfg.reconstruct, "Rebuild the degree-0 diagram and compare");
  treegram_cmd->add_option("--format", cfg.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));

  auto* classical_cmd = app.add_subcommand("classical", "Classical persistence diagrams from persistent Betti numbers");
  add_common(classical_cmd, true);
  add_degrees(classical_cmd);
  classical_cmd->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* harmonic_cmd = app.add_subcommand("harmonic", "Harmonic barcode spaces P^{i,j}");
  add_common(harmonic_cmd, true);
  add_degrees(harmonic_cmd);
  harmonic_cmd->add_option("--base", cfg.base, "Complex before the first step: empty or copy")
      ->check(CLI::IsMember({"empty", "copy"}));
  harmonic_cmd->add_option("--format", cfg.format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Run the property suites on random instances");
  add_common(verify_cmd, false);
  verify_cmd->add_option("--seed", cfg.seed, "Seed of the instance set");
  verify_cmd->add_option("--filtrations", cfg.suite.filtrations, "Number of random filtrations");
  verify_cmd->add_option("--spd", cfg.suite.spd_grams, "How many of them get random SPD Grams");
  verify_cmd->add_option("--connected", cfg.suite.connected, "Number of connected filtrations");
  verify_cmd->add_option("--morphisms", cfg.suite.morphisms, "Number of random filtration morphisms");

  auto* compare_cmd = app.add_subcommand("compare", "Compare two diagram files off the diagonal");
  compare_cmd->add_option("inputs", cfg.inputs, "Two diagram JSON files")->required()->expected(2);
  compare_cmd->add_option("--output-dir", cfg.output_dir, "Write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }
  if (cfg.degrees.empty()) cfg.degrees = {0};
  if (const char* env = std::getenv("GPD_BACKEND")) {
    const std::string b = env;
    if (b != "rational" && b != "float") {
      std::cerr << "GPD_BACKEND must be rational or float\n";
      return kExitInput;
    }
    cfg.backend = b;
  }
  ScalarTraits<double>::tolerance = cfg.tolerance;

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return cfg.backend == "float" ? dispatch<double>(cmd, cfg) : dispatch<Rational>(cmd, cfg);
  } catch (const InputFailure& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
