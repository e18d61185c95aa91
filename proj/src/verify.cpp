#include "torslat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <memory>
#include <thread>

#include "torslat/catalog.hpp"
#include "torslat/lattice.hpp"
#include "torslat/subcat.hpp"
#include "torslat/wide.hpp"

namespace torslat {

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = {
      "label-coherence", "lattice-closure",   "endpoints",      "incident-semibricks", "duality",
      "join-meet",       "join-filt",         "reduction",      "leftwide-simples",    "leftwide-audit",
      "rightwide-audit", "serre-mutation",    "serre-image-kernel", "label-kernel",   "serre-criteria",
      "wide-count",      "leftwide-roundtrip", "widely-generated",
  };
  return names;
}

bool is_property_name(const std::string& name) {
  const auto& names = property_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::string PropertyResult::line() const {
  std::string s = algebra + " " + property + ": ";
  if (pass()) return s + "PASS on " + std::to_string(checked) + " " + unit;
  return s + "FAIL on " + std::to_string(failed) + " of " + std::to_string(checked) + " " + unit + "; first: " + witness;
}

std::vector<std::string> AlgebraReport::lines() const {
  std::vector<std::string> out;
  for (const auto& r : results) out.push_back(r.line());
  if (error) out.push_back(algebra + " ERROR " + error_text);
  return out;
}

bool is_resource_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PathBlowup:
    case ErrorKind::DecomposeBlowup:
    case ErrorKind::IsoSearchBlowup:
    case ErrorKind::SubspaceBlowup:
    case ErrorKind::NotClosed:
    case ErrorKind::LatticeBlowup:
      return true;
    default:
      return false;
  }
}

namespace {

bool is_theorem_error(ErrorKind kind) {
  return !is_resource_error(kind) && kind != ErrorKind::BadSpec && kind != ErrorKind::BadRelation;
}

struct Context {
  const VerifyOptions& options;
  std::unique_ptr<Catalog> cat;
  TorsLattice lat;
  std::optional<DualLattice> dual_;
  std::optional<MorphismAtlas> atlas_;

  const DualLattice& dual() {
    if (!dual_) dual_ = dual_lattice(*cat, lat, options.limits);
    return *dual_;
  }
  const MorphismAtlas& atlas() {
    if (!atlas_) atlas_.emplace(*cat, options.limits);
    return *atlas_;
  }
};

// Runs check(k) for k < n. check returns how many objects it examined; a
// theorem-level Error counts as one failure.
PropertyResult run_items(const std::string& algebra, const std::string& property, const std::string& unit,
                         std::size_t n, const std::function<std::size_t(std::size_t)>& check) {
  PropertyResult r{algebra, property, 0, 0, unit, {}};
  for (std::size_t k = 0; k < n; ++k) {
    try {
      r.checked += check(k);
    } catch (const Error& e) {
      if (!is_theorem_error(e.kind())) throw;
      ++r.checked;
      if (r.failed++ == 0) r.witness = e.what();
    }
  }
  return r;
}

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorKind::TheoremViolation, what); }

PropertyResult run_property(Context& ctx, const std::string& algebra, const std::string& prop) {
  const Catalog& cat = *ctx.cat;
  const TorsLattice& lat = ctx.lat;
  const std::size_t nodes = lat.size();
  const std::size_t arrows = lat.arrows.size();
  auto arrow_name = [&](const HasseArrow& a) {
    return cat.mask_name(lat.nodes[a.top]) + " -> " + cat.mask_name(lat.nodes[a.bottom]);
  };
  auto intervals = [&] { return all_intervals(lat); };

  if (prop == "label-coherence")
    return run_items(algebra, prop, "arrows", arrows, [&](std::size_t k) -> std::size_t {
      const auto& a = lat.arrows[k];
      const Mask& t = lat.nodes[a.top];
      const Mask& u = lat.nodes[a.bottom];
      const Mask s(cat.size(), {a.label});
      if (!cat.brick[a.label]) fail("label of " + arrow_name(a) + " is not a brick");
      if (filt(cat, s) != (perp_right(cat, u) & t)) fail("Filt S differs from U^perp cap T on " + arrow_name(a));
      if (u != (t & perp_left(cat, s))) fail("U differs from T cap perp S on " + arrow_name(a));
      if (t != tors_gen(cat, u | s)) fail("T differs from T(U, S) on " + arrow_name(a));
      return 1;
    });

  if (prop == "lattice-closure")
    return run_items(algebra, prop, "node pairs", nodes * nodes, [&](std::size_t k) -> std::size_t {
      const int a = static_cast<int>(k / nodes), b = static_cast<int>(k % nodes);
      if (a == b && !is_torsion_class(cat, lat.nodes[a])) fail(cat.mask_name(lat.nodes[a]) + " is not a torsion class");
      join(lat, {a, b});
      meet(lat, {a, b});
      return 1;
    });

  if (prop == "endpoints")
    return run_items(algebra, prop, "simples", 1, [&](std::size_t) -> std::size_t {
      std::vector<std::pair<int, int>> into_zero, expected;
      for (int a : lat.in_arrows[lat.bottom()]) into_zero.push_back({lat.arrows[a].top, lat.arrows[a].label});
      const Mask simples = cat.simples();
      for (int s : simples.members()) {
        auto node = lat.find(filt(cat, Mask(cat.size(), {s})));
        if (!node) fail("Filt " + cat.names[s] + " is not a torsion class");
        expected.push_back({*node, s});
      }
      std::sort(into_zero.begin(), into_zero.end());
      std::sort(expected.begin(), expected.end());
      if (into_zero != expected) fail("arrows into 0 are not the Filt S -> 0");
      if (lat.out_labels(lat.top()) != simples) fail("labels leaving the top are not the simples");
      if (lat.out_arrows[lat.top()].size() != simples.count()) fail("outdegree of the top differs from the simples");
      return simples.count();
    });

  if (prop == "incident-semibricks")
    return run_items(algebra, prop, "nodes", nodes, [&](std::size_t k) -> std::size_t {
      const int t = static_cast<int>(k);
      if (!is_semibrick(cat, lat.in_labels(t))) fail("labels into " + cat.mask_name(lat.nodes[t]) + " are not a semibrick");
      if (!is_semibrick(cat, lat.out_labels(t)))
        fail("labels out of " + cat.mask_name(lat.nodes[t]) + " are not a semibrick");
      if (lat.in_labels(t).count() != lat.in_arrows[t].size() || lat.out_labels(t).count() != lat.out_arrows[t].size())
        fail("repeated incident label at " + cat.mask_name(lat.nodes[t]));
      return 1;
    });

  if (prop == "duality")
    return run_items(algebra, prop, "arrows", 1, [&](std::size_t) -> std::size_t {
      ctx.dual();
      return arrows;
    });

  if (prop == "join-meet") {
    const auto ivs = intervals();
    return run_items(algebra, prop, "intervals", ivs.size(), [&](std::size_t k) -> std::size_t {
      is_wide_interval(lat, ivs[k], WideMode::All);
      return 1;
    });
  }

  if (prop == "join-filt") {
    const auto ivs = intervals();
    return run_items(algebra, prop, "intervals", ivs.size(), [&](std::size_t k) -> std::size_t {
      const auto rep = is_wide_interval(lat, ivs[k], WideMode::Join);
      if (rep.verdict_join && rep.wide_mask != filt(cat, labels_of(lat, lower_set(lat, ivs[k]))))
        fail("W differs from Filt of the lower labels on [" + cat.mask_name(lat.nodes[ivs[k].bottom]) + ", " +
             cat.mask_name(lat.nodes[ivs[k].top]) + "]");
      return 1;
    });
  }

  if (prop == "reduction") {
    std::vector<Interval> wide;
    for (const auto& iv : intervals())
      if (is_wide_interval(lat, iv, WideMode::Direct).wide()) wide.push_back(iv);
    return run_items(algebra, prop, "wide intervals", wide.size(), [&](std::size_t k) -> std::size_t {
      reduce_interval(lat, wide[k], ctx.options.limits);
      return 1;
    });
  }

  if (prop == "leftwide-simples")
    return run_items(algebra, prop, "nodes", nodes, [&](std::size_t k) -> std::size_t {
      const int t = static_cast<int>(k);
      const Mask wl = left_wide(lat, t);
      if (!is_wide(cat, wl) || candidate_simples(cat, wl) != lat.out_labels(t))
        fail("labels leaving " + cat.mask_name(lat.nodes[t]) + " are not the simples of its left wide subcategory");
      return 1;
    });

  if (prop == "leftwide-audit")
    return run_items(algebra, prop, "morphisms", nodes,
                     [&](std::size_t k) { return audit_left_wide(lat, ctx.atlas(), static_cast<int>(k)); });

  if (prop == "rightwide-audit")
    return run_items(algebra, prop, "morphisms", nodes,
                     [&](std::size_t k) { return audit_right_wide(ctx.dual().torf, ctx.atlas(), static_cast<int>(k)); });

  if (prop == "serre-mutation")
    return run_items(algebra, prop, "Serre subcategories", nodes, [&](std::size_t k) -> std::size_t {
      const int t = static_cast<int>(k);
      const auto serres = serre_list(cat, left_wide(lat, t));
      for (const auto& w : serres) serre_mutation(lat, t, w);
      return serres.size();
    });

  if (prop == "serre-image-kernel")
    return run_items(algebra, prop, "morphisms", nodes,
                     [&](std::size_t k) { return audit_serre_image_kernel(lat, ctx.atlas(), static_cast<int>(k)); });

  if (prop == "label-kernel")
    return run_items(algebra, prop, "morphisms", arrows,
                     [&](std::size_t k) { return audit_label_kernel(lat, ctx.atlas(), static_cast<int>(k)); });

  if (prop == "serre-criteria") {
    const auto ivs = intervals();
    return run_items(algebra, prop, "intervals", ivs.size(), [&](std::size_t k) -> std::size_t {
      check_serre_criteria(lat, ctx.dual(), ivs[k]);
      return 1;
    });
  }

  if (prop == "wide-count")
    return run_items(algebra, prop, "nodes", nodes, [&](std::size_t k) -> std::size_t {
      wide_intervals_with_top(lat, static_cast<int>(k));
      return 1;
    });

  if (prop == "leftwide-roundtrip")
    return run_items(algebra, prop, "wide subcategories", 1,
                     [&](std::size_t) { return leftwide_roundtrip(lat).wide.size(); });

  if (prop == "widely-generated")
    return run_items(algebra, prop, "nodes", nodes, [&](std::size_t k) -> std::size_t {
      const auto r = is_widely_generated(lat, static_cast<int>(k));
      if (!r.verdict()) fail(cat.mask_name(lat.nodes[k]) + " is not widely generated in a finite lattice");
      return 1;
    });

  throw Error(ErrorKind::BadSpec, "unknown property " + prop);
}

}  // namespace

AlgebraReport verify_algebra(const AlgebraSpec& spec, const VerifyOptions& options) {
  AlgebraReport report;
  report.algebra = spec.name;
  const auto& wanted = options.props.empty() ? property_names() : options.props;
  try {
    auto alg = build_algebra(spec, options.limits.path_bound);
    Context ctx{options, std::make_unique<Catalog>(build_catalog(alg, options.limits)), {}, {}, {}};
    ctx.lat = build_lattice(*ctx.cat, options.limits);
    for (const auto& name : property_names())
      if (std::find(wanted.begin(), wanted.end(), name) != wanted.end())
        report.results.push_back(run_property(ctx, spec.name, name));
  } catch (const Error& e) {
    report.error = e.kind();
    report.error_text = e.what();
  }
  return report;
}

std::vector<AlgebraReport> verify_all(const std::vector<AlgebraSpec>& specs, const VerifyOptions& options) {
  std::vector<AlgebraReport> reports(specs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < specs.size();) reports[k] = verify_algebra(specs[k], options);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(specs.size())));
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return reports;
}

int verify_exit_code(const std::vector<AlgebraReport>& reports) {
  bool failed = false, resource = false;
  for (const auto& r : reports) {
    for (const auto& p : r.results) failed = failed || !p.pass();
    if (r.error) (is_theorem_error(*r.error) ? failed : resource) = true;
  }
  return failed ? 1 : resource ? 2 : 0;
}

}  // namespace torslat
