#include "torslat/lattice.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "json.hpp"

#include "torslat/subcat.hpp"

namespace torslat {

std::optional<int> TorsLattice::find(const Mask& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Mask TorsLattice::close(const Mask& m) const {
  if (kind == LatticeKind::TorsionFree) return torf_gen(*cat, m);
  if (ambient == cat->full_mask()) return tors_gen(*cat, m);
  return tors_gen_within(*cat, m, ambient);
}

std::optional<int> TorsLattice::arrow_between(int top, int bottom) const {
  for (int a : out_arrows[top])
    if (arrows[a].bottom == bottom) return a;
  return std::nullopt;
}

Mask TorsLattice::out_labels(int node) const {
  Mask m(cat->size());
  for (int a : out_arrows[node]) m.set(arrows[a].label);
  return m;
}

Mask TorsLattice::in_labels(int node) const {
  Mask m(cat->size());
  for (int a : in_arrows[node]) m.set(arrows[a].label);
  return m;
}

void TorsLattice::index_arrows() {
  std::sort(arrows.begin(), arrows.end());
  out_arrows.assign(nodes.size(), {});
  in_arrows.assign(nodes.size(), {});
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    out_arrows[arrows[a].top].push_back(static_cast<int>(a));
    in_arrows[arrows[a].bottom].push_back(static_cast<int>(a));
  }
}

TorsLattice enumerate_classes(const Catalog& cat, LatticeKind kind, const Mask& ambient, const Limits& limits) {
  if (kind == LatticeKind::TorsionFree && ambient != cat.full_mask())
    throw Error(ErrorKind::BadSpec, "torsion-free classes are only enumerated in the whole module category");
  TorsLattice lat;
  lat.cat = &cat;
  lat.kind = kind;
  lat.ambient = ambient;

  std::map<Mask, int> seen;
  std::deque<Mask> queue;
  auto visit = [&](Mask m) {
    if (seen.count(m)) return;
    if (seen.size() >= limits.node_budget)
      throw Error(ErrorKind::LatticeBlowup, "more than " + std::to_string(limits.node_budget) + " classes");
    seen.emplace(m, 0);
    queue.push_back(std::move(m));
  };
  visit(lat.close(Mask(cat.size())));
  const auto generators = ambient.members();
  while (!queue.empty()) {
    Mask cur = std::move(queue.front());
    queue.pop_front();
    for (int i : generators) {
      if (cur.test(i)) continue;
      Mask next = cur;
      next.set(i);
      visit(lat.close(next));
    }
  }

  for (auto& [m, _] : seen) lat.nodes.push_back(m);
  std::sort(lat.nodes.begin(), lat.nodes.end(), canonical_less);
  for (std::size_t k = 0; k < lat.nodes.size(); ++k) lat.index_[lat.nodes[k]] = static_cast<int>(k);
  lat.index_arrows();
  return lat;
}

TorsLattice enumerate_tors(const Catalog& cat, const Limits& limits) {
  return enumerate_classes(cat, LatticeKind::Torsion, cat.full_mask(), limits);
}

namespace {

int brick_label(const TorsLattice& lat, int top, int bottom) {
  const Catalog& cat = *lat.cat;
  const Mask& t = lat.nodes[top];
  const Mask& u = lat.nodes[bottom];
  const Mask d = (lat.kind == LatticeKind::Torsion ? perp_right(cat, u) : perp_left(cat, u)) & t;
  std::vector<int> bricks;
  for (int i : d.members())
    if (cat.brick[i]) bricks.push_back(i);
  const std::string where = cat.mask_name(t) + " -> " + cat.mask_name(u);
  if (bricks.empty()) throw Error(ErrorKind::LabelNotBrick, "no brick in the difference of " + where);
  if (bricks.size() > 1) throw Error(ErrorKind::LabelNotUnique, "several bricks in the difference of " + where);
  Mask s(cat.size(), {bricks[0]});
  if (filt_within(cat, s, lat.ambient) != d)
    throw Error(ErrorKind::LabelNotUnique, cat.names[bricks[0]] + " does not filter the difference of " + where);
  return bricks[0];
}

}  // namespace

void hasse_with_labels(TorsLattice& lat) {
  lat.arrows.clear();
  const int n = static_cast<int>(lat.size());
  for (int top = 0; top < n; ++top) {
    std::vector<int> below;
    for (int b = 0; b < top; ++b)
      if (lat.nodes[b] != lat.nodes[top] && lat.nodes[b].is_subset_of(lat.nodes[top])) below.push_back(b);
    for (int b : below) {
      bool cover = true;
      for (int c : below)
        if (c != b && lat.nodes[b].is_subset_of(lat.nodes[c])) {
          cover = false;
          break;
        }
      if (cover) lat.arrows.push_back({top, b, brick_label(lat, top, b)});
    }
  }
  lat.index_arrows();
}

TorsLattice build_lattice(const Catalog& cat, const Limits& limits) {
  TorsLattice lat = enumerate_tors(cat, limits);
  hasse_with_labels(lat);
  return lat;
}

TorsLattice tors_of_wide(const Catalog& cat, const Mask& w, const Limits& limits) {
  if (!is_wide(cat, w)) throw Error(ErrorKind::NotWide, cat.mask_name(w) + " is not a wide subcategory");
  TorsLattice lat = enumerate_classes(cat, LatticeKind::Torsion, w, limits);
  hasse_with_labels(lat);
  return lat;
}

int join(const TorsLattice& lat, const std::vector<int>& nodes) {
  Mask m(lat.cat->size());
  for (int v : nodes) m |= lat.nodes[v];
  const Mask closed = lat.close(m);
  auto found = lat.find(closed);
  if (!found) throw Error(ErrorKind::TheoremViolation, "closure " + lat.cat->mask_name(closed) + " is not a node");
  return *found;
}

int meet(const TorsLattice& lat, const std::vector<int>& nodes) {
  Mask m = lat.ambient;
  for (int v : nodes) m &= lat.nodes[v];
  auto found = lat.find(m);
  if (!found) throw Error(ErrorKind::TheoremViolation, "intersection " + lat.cat->mask_name(m) + " is not a node");
  return *found;
}

bool in_interval(const TorsLattice& lat, const Interval& iv, int node) {
  return lat.leq(iv.bottom, node) && lat.leq(node, iv.top);
}

std::vector<int> interval_nodes(const TorsLattice& lat, const Interval& iv) {
  std::vector<int> out;
  for (int v = 0; v < static_cast<int>(lat.size()); ++v)
    if (in_interval(lat, iv, v)) out.push_back(v);
  return out;
}

std::vector<Interval> all_intervals(const TorsLattice& lat) {
  std::vector<Interval> out;
  for (int t = 0; t < static_cast<int>(lat.size()); ++t)
    for (int u = 0; u < static_cast<int>(lat.size()); ++u)
      if (lat.leq(u, t)) out.push_back({u, t});
  return out;
}

std::vector<int> upper_set(const TorsLattice& lat, const Interval& iv) {
  std::vector<int> out{iv.top};
  for (int a : lat.out_arrows[iv.top]) {
    const int v = lat.arrows[a].bottom;
    if (lat.leq(iv.bottom, v)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> lower_set(const TorsLattice& lat, const Interval& iv) {
  std::vector<int> out{iv.bottom};
  for (int a : lat.in_arrows[iv.bottom]) {
    const int v = lat.arrows[a].top;
    if (lat.leq(v, iv.top)) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mask labels_of(const TorsLattice& lat, const std::vector<int>& nodes) {
  Mask m(lat.cat->size());
  for (int v : nodes)
    for (int a : lat.out_arrows[v])
      if (std::find(nodes.begin(), nodes.end(), lat.arrows[a].bottom) != nodes.end()) m.set(lat.arrows[a].label);
  return m;
}

DualLattice dual_lattice(const Catalog& cat, const TorsLattice& tors, const Limits& limits) {
  DualLattice d;
  d.torf = enumerate_classes(cat, LatticeKind::TorsionFree, cat.full_mask(), limits);
  hasse_with_labels(d.torf);
  const TorsLattice& torf = d.torf;
  auto fail = [&](const std::string& what) { throw Error(ErrorKind::DualityMismatch, what); };

  if (torf.size() != tors.size())
    fail(std::to_string(tors.size()) + " torsion classes but " + std::to_string(torf.size()) + " torsion-free classes");
  if (torf.arrows.size() != tors.arrows.size()) fail("arrow counts differ");
  std::vector<bool> hit(torf.size(), false);
  for (std::size_t t = 0; t < tors.size(); ++t) {
    const Mask f = perp_right(cat, tors.nodes[t]);
    auto found = torf.find(f);
    if (!found) fail("perpendicular of " + cat.mask_name(tors.nodes[t]) + " is not torsion-free");
    if (perp_left(cat, f) != tors.nodes[t]) fail("left perpendicular does not return " + cat.mask_name(tors.nodes[t]));
    if (hit[*found]) fail("two torsion classes share a perpendicular");
    hit[*found] = true;
    d.image.push_back(*found);
  }
  for (int a = 0; a < static_cast<int>(tors.size()); ++a)
    for (int b = 0; b < static_cast<int>(tors.size()); ++b)
      if (tors.leq(a, b) != torf.leq(d.image[b], d.image[a]))
        fail("order not reversed between " + cat.mask_name(tors.nodes[a]) + " and " + cat.mask_name(tors.nodes[b]));
  for (const auto& arr : tors.arrows) {
    auto dual = torf.arrow_between(d.image[arr.bottom], d.image[arr.top]);
    if (!dual) fail("no dual arrow for " + cat.mask_name(tors.nodes[arr.top]) + " -> " + cat.mask_name(tors.nodes[arr.bottom]));
    if (torf.arrows[*dual].label != arr.label)
      fail("label changes on " + cat.mask_name(tors.nodes[arr.top]) + " -> " + cat.mask_name(tors.nodes[arr.bottom]));
  }
  return d;
}

std::string lattice_to_dot(const TorsLattice& lat) {
  const Catalog& cat = *lat.cat;
  std::ostringstream os;
  os << "digraph " << (lat.kind == LatticeKind::Torsion ? "tors" : "torf") << " {\n";
  for (const auto& m : lat.nodes) os << "  \"" << cat.mask_name(m) << "\";\n";
  for (const auto& a : lat.arrows)
    os << "  \"" << cat.mask_name(lat.nodes[a.top]) << "\" -> \"" << cat.mask_name(lat.nodes[a.bottom])
       << "\" [label=\"" << cat.dim_vector_string(a.label) << "#" << a.label << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string lattice_to_json(const TorsLattice& lat) {
  const Catalog& cat = *lat.cat;
  nlohmann::ordered_json j;
  j["kind"] = lat.kind == LatticeKind::Torsion ? "torsion" : "torsion-free";
  j["algebra"] = cat.algebra->name();
  j["ambient"] = lat.ambient.members();
  j["names"] = cat.names;
  auto& nodes = j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& m : lat.nodes) nodes.push_back(m.members());
  auto& arrows = j["arrows"] = nlohmann::ordered_json::array();
  for (const auto& a : lat.arrows) arrows.push_back({{"top", a.top}, {"bottom", a.bottom}, {"label", a.label}});
  return j.dump(1) + "\n";
}

}  // namespace torslat
