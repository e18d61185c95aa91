#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "torslat/catalog.hpp"
#include "torslat/corpus.hpp"
#include "torslat/lattice.hpp"
#include "torslat/subcat.hpp"
#include "torslat/verify.hpp"
#include "torslat/wide.hpp"

using namespace torslat;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_resource = 2;
constexpr int exit_usage = 3;
constexpr int exit_precondition = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A path to a spec file, or the name of a bundled algebra.
AlgebraSpec resolve_spec(const std::string& arg) {
  namespace fs = std::filesystem;
  if (fs::exists(arg)) return load_algebra_spec(arg);
  if (auto spec = corpus_spec(fs::path(arg).stem().string())) return *spec;
  throw UsageError("cannot read algebra spec '" + arg + "'");
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

unsigned default_threads() {
  if (const char* env = std::getenv("TORSLAT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Catalog load_catalog(const std::string& spec_path, const Limits& limits) {
  return build_catalog(build_algebra(resolve_spec(spec_path), limits.path_bound), limits);
}

int cmd_indec(const std::string& spec_path, const std::string& json_path, const Limits& limits) {
  const Catalog cat = load_catalog(spec_path, limits);
  if (json_path == "-") {
    write_output(json_path, catalog_to_json(cat));
    return 0;
  }
  std::cout << cat.algebra->name() << " over F_" << cat.algebra->field().order() << ": " << cat.size()
            << " indecomposables\n";
  for (std::size_t i = 0; i < cat.size(); ++i)
    std::cout << "  " << i << "  " << cat.names[i] << "  " << cat.dim_vector_string(static_cast<int>(i))
              << (cat.brick[i] ? "  brick" : "") << "\n";
  if (!json_path.empty()) write_output(json_path, catalog_to_json(cat));
  return 0;
}

int cmd_lattice(const std::string& spec_path, const std::string& dot_path, const std::string& json_path,
                const Limits& limits) {
  const Catalog cat = load_catalog(spec_path, limits);
  const TorsLattice lat = build_lattice(cat, limits);
  // The summary would corrupt an export written to stdout.
  if (dot_path != "-" && json_path != "-") std::cout << lat.size() << " nodes, " << lat.arrows.size() << " arrows\n";
  if (!dot_path.empty()) write_output(dot_path, lattice_to_dot(lat));
  if (!json_path.empty()) write_output(json_path, lattice_to_json(lat));
  return 0;
}

int cmd_interval(const std::string& spec_path, const std::string& bottom, const std::string& top, bool reduce,
                 const Limits& limits) {
  const Catalog cat = load_catalog(spec_path, limits);
  const TorsLattice lat = build_lattice(cat, limits);
  auto node = [&](const std::string& text) {
    auto m = cat.parse_mask(text);
    if (!m) throw Error(ErrorKind::NotAnInterval, "'" + text + "' does not name indecomposables");
    auto v = lat.find(*m);
    if (!v) throw Error(ErrorKind::NotAnInterval, cat.mask_name(*m) + " is not a torsion class");
    return *v;
  };
  const Interval iv{node(bottom), node(top)};
  if (!lat.leq(iv.bottom, iv.top))
    throw Error(ErrorKind::NotAnInterval, cat.mask_name(lat.nodes[iv.bottom]) + " is not contained in " +
                                              cat.mask_name(lat.nodes[iv.top]));

  const auto rep = is_wide_interval(lat, iv, WideMode::All);
  std::cout << "interval [" << cat.mask_name(lat.nodes[iv.bottom]) << ", " << cat.mask_name(lat.nodes[iv.top])
            << "], " << interval_nodes(lat, iv).size() << " nodes\n";
  if (rep.wide())
    std::cout << "wide: yes, W = " << cat.mask_name(rep.wide_mask) << "\n";
  else
    std::cout << "wide: no (join test: " << cat.mask_name(lat.nodes[rep.join_of_lower]) << " != top)\n";
  if (!reduce) return 0;

  const auto red = reduce_interval(lat, iv, limits);
  const TorsLattice& wl = red.wide_lattice;
  std::cout << "reduced lattice: " << wl.size() << " nodes, " << wl.arrows.size() << " arrows\n";
  for (const auto& a : wl.arrows)
    std::cout << "  " << cat.mask_name(wl.nodes[a.top]) << " -> " << cat.mask_name(wl.nodes[a.bottom]) << "  label "
              << cat.names[a.label] << "\n";
  std::cout << "phi:\n";
  for (std::size_t k = 0; k < red.interval_nodes.size(); ++k)
    std::cout << "  " << cat.mask_name(lat.nodes[red.interval_nodes[k]]) << " -> "
              << cat.mask_name(wl.nodes[red.phi[k]]) << "\n";
  return 0;
}

int cmd_verify(const std::vector<std::string>& spec_paths, bool use_corpus, const std::string& props,
               VerifyOptions options) {
  std::vector<AlgebraSpec> specs;
  if (use_corpus)
    for (const auto& e : corpus()) specs.push_back(parse_algebra_spec(e.text, e.name));
  for (const auto& p : spec_paths) specs.push_back(resolve_spec(p));
  if (specs.empty()) throw UsageError("verify needs spec files or --corpus");
  std::stringstream ss(props);
  for (std::string name; std::getline(ss, name, ',');) {
    if (name.empty()) continue;
    if (!is_property_name(name)) throw UsageError("unknown property '" + name + "'");
    options.props.push_back(name);
  }
  const auto reports = verify_all(specs, options);
  for (const auto& r : reports)
    for (const auto& line : r.lines()) std::cout << line << "\n";
  return verify_exit_code(reports);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices of torsion classes of monomial quiver algebras over small prime fields"};
  app.require_subcommand(1);

  Limits limits;
  int dim_bound = limits.dim_bound;
  unsigned threads = default_threads();
  app.add_option("--dim-bound", dim_bound, "largest dimension of an indecomposable")->check(CLI::PositiveNumber);
  app.add_option("--path-bound", limits.path_bound, "largest dimension of the algebra")->check(CLI::PositiveNumber);
  app.add_option("--enum-budget", limits.enum_budget, "largest Hom space enumerated")->check(CLI::PositiveNumber);
  app.add_option("--subspace-budget", limits.subspace_budget, "submodule search budget")->check(CLI::PositiveNumber);
  app.add_option("--node-budget", limits.node_budget, "largest lattice")->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "verification workers (default: TORSLAT_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  std::string spec, json_path, dot_path, bottom, top, props;
  bool check_wide = false, reduce = false, use_corpus = false;
  std::vector<std::string> specs;

  auto* indec = app.add_subcommand("indec", "list the indecomposables");
  indec->add_option("spec", spec, "algebra spec file")->required();
  indec->add_option("--json", json_path, "write the catalog as JSON ('-' for stdout)");

  auto* lattice = app.add_subcommand("lattice", "torsion classes and their labeled Hasse quiver");
  lattice->add_option("spec", spec, "algebra spec file")->required();
  lattice->add_option("--dot", dot_path, "write DOT ('-' for stdout)");
  lattice->add_option("--json", json_path, "write JSON ('-' for stdout)");

  auto* interval = app.add_subcommand("interval", "test and reduce an interval [bottom, top]");
  interval->add_option("spec", spec, "algebra spec file")->required();
  interval->add_option("bottom", bottom, "bottom torsion class, e.g. 0 or S1")->required();
  interval->add_option("top", top, "top torsion class, e.g. S1,P1")->required();
  interval->add_flag("--check-wide", check_wide, "report whether the interval is wide (default)");
  interval->add_flag("--reduce", reduce, "print the reduced lattice and the phi table");

  auto* verify = app.add_subcommand("verify", "check every property on algebras");
  verify->add_option("specs", specs, "algebra spec files");
  verify->add_flag("--corpus", use_corpus, "include the bundled algebras");
  verify->add_option("--props", props, "comma-separated property names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }
  limits.dim_bound = dim_bound;

  try {
    if (*indec) return cmd_indec(spec, json_path, limits);
    if (*lattice) return cmd_lattice(spec, dot_path, json_path, limits);
    if (*interval) return cmd_interval(spec, bottom, top, reduce, limits);
    VerifyOptions options;
    options.limits = limits;
    options.threads = threads;
    return cmd_verify(specs, use_corpus, props, options);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::BadSpec:
      case ErrorKind::BadRelation:
      case ErrorKind::NotAnInterval:
        return exit_usage;
      case ErrorKind::NotWideInterval:
      case ErrorKind::NotWide:
        return exit_precondition;
      default:
        return is_resource_error(e.kind()) ? exit_resource : exit_fail;
    }
  }
}
