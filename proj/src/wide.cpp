#include "torslat/wide.hpp"

#include <algorithm>

#include "torslat/subcat.hpp"

namespace torslat {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::TheoremViolation, what); }

std::string interval_name(const TorsLattice& lat, const Interval& iv) {
  return "[" + lat.cat->mask_name(lat.nodes[iv.bottom]) + ", " + lat.cat->mask_name(lat.nodes[iv.top]) + "]";
}

bool contains(const std::vector<Mask>& list, const Mask& m) { return std::find(list.begin(), list.end(), m) != list.end(); }

}  // namespace

WideIntervalReport is_wide_interval(const TorsLattice& lat, const Interval& iv, WideMode mode) {
  const Catalog& cat = *lat.cat;
  WideIntervalReport r;
  r.interval = iv;
  r.mode = mode;
  r.wide_mask = perp_right(cat, lat.nodes[iv.bottom]) & lat.nodes[iv.top];
  r.verdict_direct = is_wide(cat, r.wide_mask);
  r.join_of_lower = join(lat, lower_set(lat, iv));
  r.verdict_join = r.join_of_lower == iv.top;
  r.meet_of_upper = meet(lat, upper_set(lat, iv));
  r.verdict_meet = r.meet_of_upper == iv.bottom;
  if (mode == WideMode::All && (r.verdict_direct != r.verdict_join || r.verdict_direct != r.verdict_meet))
    violation("wide-interval verdicts disagree on " + interval_name(lat, iv));
  return r;
}

ReductionIso reduce_interval(const TorsLattice& lat, const Interval& iv, const Limits& limits) {
  const Catalog& cat = *lat.cat;
  const auto rep = is_wide_interval(lat, iv);
  if (!rep.wide()) throw Error(ErrorKind::NotWideInterval, interval_name(lat, iv) + " is not a wide interval");
  const std::string where = " on " + interval_name(lat, iv);
  const Mask& u = lat.nodes[iv.bottom];
  const Mask u_perp = perp_right(cat, u);

  ReductionIso red{iv, rep.wide_mask, tors_of_wide(cat, rep.wide_mask, limits), interval_nodes(lat, iv), {}, {}};
  const TorsLattice& wl = red.wide_lattice;
  if (wl.size() != red.interval_nodes.size()) violation("interval and reduced lattice differ in size" + where);

  std::vector<int> position(lat.size(), -1);
  for (std::size_t k = 0; k < red.interval_nodes.size(); ++k) {
    const int v = red.interval_nodes[k];
    position[v] = static_cast<int>(k);
    auto x = wl.find(u_perp & lat.nodes[v]);
    if (!x) violation("phi(" + cat.mask_name(lat.nodes[v]) + ") is not a torsion class of W" + where);
    red.phi.push_back(*x);
  }
  for (std::size_t x = 0; x < wl.size(); ++x) {
    const Mask generated = lat.close(u | wl.nodes[x]);
    auto v = lat.find(generated);
    if (!v || position[*v] < 0) violation("psi(" + cat.mask_name(wl.nodes[x]) + ") leaves the interval" + where);
    if (star(cat, u, wl.nodes[x]) != generated)
      violation("psi(" + cat.mask_name(wl.nodes[x]) + ") differs from the star product" + where);
    red.psi.push_back(*v);
  }
  for (std::size_t k = 0; k < red.interval_nodes.size(); ++k)
    if (red.psi[red.phi[k]] != red.interval_nodes[k]) violation("psi after phi is not the identity" + where);
  for (std::size_t x = 0; x < wl.size(); ++x)
    if (red.phi[position[red.psi[x]]] != static_cast<int>(x)) violation("phi after psi is not the identity" + where);
  for (std::size_t k = 0; k < red.interval_nodes.size(); ++k)
    for (std::size_t l = 0; l < red.interval_nodes.size(); ++l)
      if (lat.leq(red.interval_nodes[k], red.interval_nodes[l]) != wl.leq(red.phi[k], red.phi[l]))
        violation("phi is not an order isomorphism" + where);

  std::size_t inside = 0;
  for (const auto& a : lat.arrows) {
    if (position[a.top] < 0 || position[a.bottom] < 0) continue;
    ++inside;
    auto image = wl.arrow_between(red.phi[position[a.top]], red.phi[position[a.bottom]]);
    if (!image || wl.arrows[*image].label != a.label)
      violation("label of " + cat.mask_name(lat.nodes[a.top]) + " -> " + cat.mask_name(lat.nodes[a.bottom]) +
                " not preserved" + where);
  }
  if (inside != wl.arrows.size()) violation("reduced lattice has extra arrows" + where);

  const Mask simples = simples_of_wide(cat, red.wide);
  if (labels_of(lat, upper_set(lat, iv)) != simples) violation("upper labels are not the simples of W" + where);
  if (labels_of(lat, lower_set(lat, iv)) != simples) violation("lower labels are not the simples of W" + where);
  return red;
}

Mask left_wide(const TorsLattice& lat, int t) { return filt_within(*lat.cat, lat.out_labels(t), lat.ambient); }

Mask right_wide(const TorsLattice& torf, int f) { return filt(*torf.cat, torf.out_labels(f)); }

std::size_t audit_left_wide(const TorsLattice& lat, const MorphismAtlas& atlas, int t) {
  const Catalog& cat = *lat.cat;
  const Mask& tm = lat.nodes[t];
  std::size_t checked = 0;
  for (int x : left_wide(lat, t).members())
    for (int y : tm.members())
      for (const auto& rec : atlas.between(y, x)) {
        ++checked;
        if (!cat.support(rec.kernel).is_subset_of(tm))
          throw Error(ErrorKind::AuditFailed, "kernel of a map " + cat.names[y] + " -> " + cat.names[x] + " leaves " +
                                                  cat.mask_name(tm));
      }
  return checked;
}

std::size_t audit_right_wide(const TorsLattice& torf, const MorphismAtlas& atlas, int f) {
  const Catalog& cat = *torf.cat;
  const Mask& fm = torf.nodes[f];
  std::size_t checked = 0;
  for (int x : right_wide(torf, f).members())
    for (int y : fm.members())
      for (const auto& rec : atlas.between(x, y)) {
        ++checked;
        if (!cat.support(rec.cokernel).is_subset_of(fm))
          throw Error(ErrorKind::AuditFailed, "cokernel of a map " + cat.names[x] + " -> " + cat.names[y] +
                                                  " leaves " + cat.mask_name(fm));
      }
  return checked;
}

int serre_mutation(const TorsLattice& lat, int t, const Mask& w) {
  const Catalog& cat = *lat.cat;
  const Mask& tm = lat.nodes[t];
  const Mask u = tm & perp_left(cat, w);
  const std::string where = " for T = " + cat.mask_name(tm) + ", W = " + cat.mask_name(w);
  auto node = lat.find(u);
  if (!node) violation("T cap perp W is not a torsion class" + where);
  if (star(cat, u, w) != tm) violation("U * W differs from T" + where);
  if ((perp_right(cat, u) & tm) != w) violation("U^perp cap T differs from W" + where);
  return *node;
}

std::vector<int> wide_intervals_with_top(const TorsLattice& lat, int t) {
  const Catalog& cat = *lat.cat;
  const Mask wl = left_wide(lat, t);
  const std::string where = " below " + cat.mask_name(lat.nodes[t]);
  if (!is_wide(cat, wl)) violation("left wide subcategory is not wide" + where);
  std::vector<int> bottoms;
  for (const auto& w : serre_list(cat, wl)) {
    const int u = serre_mutation(lat, t, w);
    if (!is_wide_interval(lat, {u, t}).wide()) violation("Serre mutation gives a non-wide interval" + where);
    bottoms.push_back(u);
  }
  std::sort(bottoms.begin(), bottoms.end());
  if (std::adjacent_find(bottoms.begin(), bottoms.end()) != bottoms.end())
    violation("two Serre subcategories give the same bottom" + where);

  std::vector<int> scanned;
  for (int u = 0; u < static_cast<int>(lat.size()); ++u)
    if (lat.leq(u, t) && is_wide_interval(lat, {u, t}, WideMode::Direct).wide()) scanned.push_back(u);
  if (scanned != bottoms) violation("Serre mutations miss a wide interval" + where);
  if (bottoms.size() != std::size_t{1} << lat.out_arrows[t].size())
    violation("wide interval count is not a power of the outdegree" + where);
  return bottoms;
}

WidelyGeneratedReport is_widely_generated(const TorsLattice& lat, int t) {
  const Mask& tm = lat.nodes[t];
  WidelyGeneratedReport r;
  r.by_left_wide = lat.close(left_wide(lat, t)) == tm;
  const Mask labels = lat.out_labels(t);
  r.by_labels = lat.close(labels) == tm;
  r.by_arrows = true;
  for (int u = 0; u < static_cast<int>(lat.size()) && r.by_arrows; ++u) {
    if (u == t || !lat.leq(u, t)) continue;
    bool below = false;
    for (int a : lat.out_arrows[t])
      if (lat.leq(u, lat.arrows[a].bottom)) below = true;
    if (!below) {
      r.by_arrows = false;
      r.witness = u;
    }
  }
  for (int s : labels.members()) r.join_terms.push_back(*lat.find(lat.close(Mask(lat.cat->size(), {s}))));
  r.canonical_join = join(lat, r.join_terms);
  const std::string where = " at " + lat.cat->mask_name(tm);
  if (r.by_left_wide != r.by_labels || r.by_left_wide != r.by_arrows)
    violation("widely-generated conditions disagree" + where);
  if (r.verdict() && r.canonical_join != t) violation("canonical join does not reproduce T" + where);
  return r;
}

RoundtripReport leftwide_roundtrip(const TorsLattice& lat) {
  const Catalog& cat = *lat.cat;
  RoundtripReport r;
  r.semibricks = all_semibricks(cat);
  for (const auto& sb : r.semibricks) {
    const Mask w = filt(cat, sb);
    if (!is_wide(cat, w) || candidate_simples(cat, w) != sb)
      violation("Filt of the semibrick " + cat.mask_name(sb) + " is not wide with those simples");
    auto t = lat.find(tors_gen(cat, w));
    if (!t) violation("T(" + cat.mask_name(w) + ") is not a node");
    if (left_wide(lat, *t) != w) violation("left wide subcategory of T(" + cat.mask_name(w) + ") differs");
    r.wide.push_back(w);
  }
  std::sort(r.wide.begin(), r.wide.end(), canonical_less);
  if (std::adjacent_find(r.wide.begin(), r.wide.end()) != r.wide.end())
    violation("two semibricks filter to the same wide subcategory");
  return r;
}

bool check_serre_criteria(const TorsLattice& lat, const DualLattice& dual, const Interval& iv) {
  const Catalog& cat = *lat.cat;
  const Mask w = perp_right(cat, lat.nodes[iv.bottom]) & lat.nodes[iv.top];
  const Mask wl = left_wide(lat, iv.top);
  const Mask wr = right_wide(dual.torf, dual.image[iv.bottom]);
  if (!is_wide(cat, wl) || !is_wide(cat, wr)) violation("a one-sided wide subcategory is not wide on " + interval_name(lat, iv));
  const bool a = is_wide(cat, w);
  const bool b = contains(serre_list(cat, wl), w);
  const bool c = contains(serre_list(cat, wr), w);
  const bool d = w == (wl & wr);
  if (a != b || a != c || a != d) violation("Serre criteria disagree on " + interval_name(lat, iv));
  return a;
}

std::size_t audit_serre_image_kernel(const TorsLattice& lat, const MorphismAtlas& atlas, int t) {
  const Catalog& cat = *lat.cat;
  const Mask& tm = lat.nodes[t];
  std::size_t checked = 0;
  for (const auto& w : serre_list(cat, left_wide(lat, t))) {
    const auto targets = torf_gen(cat, w).members();
    for (int x : tm.members())
      for (int y : targets)
        for (const auto& rec : atlas.between(x, y)) {
          ++checked;
          if (!cat.support(rec.image).is_subset_of(w) || !cat.support(rec.kernel).is_subset_of(tm))
            throw Error(ErrorKind::AuditFailed, "map " + cat.names[x] + " -> " + cat.names[y] + " for T = " +
                                                    cat.mask_name(tm) + ", W = " + cat.mask_name(w));
        }
  }
  return checked;
}

std::size_t audit_label_kernel(const TorsLattice& lat, const MorphismAtlas& atlas, int arrow) {
  const Catalog& cat = *lat.cat;
  const auto& a = lat.arrows[arrow];
  const Mask& tm = lat.nodes[a.top];
  std::size_t checked = 0;
  for (int x : tm.members())
    for (const auto& rec : atlas.between(x, a.label)) {
      ++checked;
      if (!(rec.zero || rec.epi) || !cat.support(rec.kernel).is_subset_of(tm))
        throw Error(ErrorKind::AuditFailed, "map " + cat.names[x] + " -> " + cat.names[a.label] + " into the label of " +
                                                cat.mask_name(tm) + " -> " + cat.mask_name(lat.nodes[a.bottom]));
    }
  return checked;
}

}  // namespace torslat
