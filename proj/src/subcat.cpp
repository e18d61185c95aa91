#include "torslat/subcat.hpp"

#include <algorithm>

namespace torslat {

Mask fac(const Catalog& cat, const Mask& c) {
  Mask out = c;
  for (int i : c.members()) out |= cat.quotient_support[i];
  return out;
}

Mask sub_cl(const Catalog& cat, const Mask& c) {
  Mask out = c;
  for (int i : c.members()) out |= cat.sub_support[i];
  return out;
}

Mask filt_within(const Catalog& cat, const Mask& c, const Mask& ambient) {
  Mask f = c;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int j : ambient.members()) {
      if (f.test(j)) continue;
      for (const auto& sf : cat.proper_subfactors[j])
        if (sf.sub.is_subset_of(f) && sf.quotient.is_subset_of(f)) {
          f.set(j);
          grew = true;
          break;
        }
    }
  }
  return f;
}

Mask filt(const Catalog& cat, const Mask& c) { return filt_within(cat, c, cat.full_mask()); }

Mask perp_right(const Catalog& cat, const Mask& c) {
  Mask hit(cat.size());
  for (int i : c.members()) hit |= cat.hom_out[i];
  return hit.complement();
}

Mask perp_left(const Catalog& cat, const Mask& c) {
  Mask hit(cat.size());
  for (int i : c.members()) hit |= cat.hom_in[i];
  return hit.complement();
}

Mask tors_gen(const Catalog& cat, const Mask& x) { return filt(cat, fac(cat, x)); }

Mask torf_gen(const Catalog& cat, const Mask& x) { return filt(cat, sub_cl(cat, x)); }

Mask star(const Catalog& cat, const Mask& u, const Mask& x) {
  Mask out = u | x;
  for (std::size_t j = 0; j < cat.size(); ++j) {
    if (out.test(static_cast<int>(j))) continue;
    for (const auto& sf : cat.proper_subfactors[j])
      if (sf.sub.is_subset_of(u) && sf.quotient.is_subset_of(x)) {
        out.set(static_cast<int>(j));
        break;
      }
  }
  return out;
}

bool is_torsion_class(const Catalog& cat, const Mask& c) { return fac(cat, c) == c && filt(cat, c) == c; }

bool is_torsion_free_class(const Catalog& cat, const Mask& c) { return sub_cl(cat, c) == c && filt(cat, c) == c; }

CanonicalSequence canonical_sequence(const Catalog& cat, const Module& x, const Mask& torsion) {
  const Algebra& alg = x.algebra();
  const PrimeField& f = alg.field();
  std::vector<Matrix> spans;
  for (int v = 0; v < alg.vertex_count(); ++v) spans.emplace_back(x.dim(v), 0);
  for (int i : torsion.members())
    for (const auto& g : hom_basis(cat.ind[i], x))
      for (int v = 0; v < alg.vertex_count(); ++v) spans[v] = hstack(spans[v], g.comps[v]);
  for (auto& s : spans) s = column_basis(f, s);
  Submodule t = restrict_to(x, spans);
  Quotient q = quotient_by(x, spans);
  return CanonicalSequence{std::move(t.module), std::move(q.module), std::move(t.inclusion)};
}

bool is_semibrick(const Catalog& cat, const Mask& c) {
  const auto members = c.members();
  for (int i : members) {
    if (!cat.brick[i]) return false;
    for (int j : members)
      if (i != j && cat.hom_nonzero[i][j]) return false;
  }
  return true;
}

Mask candidate_simples(const Catalog& cat, const Mask& w) {
  Mask out(cat.size());
  for (int i : w.members()) {
    bool simple = true;
    for (const auto& sf : cat.proper_subfactors[i])
      if (sf.sub.is_subset_of(w)) {
        simple = false;
        break;
      }
    if (simple) out.set(i);
  }
  return out;
}

bool is_wide(const Catalog& cat, const Mask& w) {
  const Mask s = candidate_simples(cat, w);
  return is_semibrick(cat, s) && filt(cat, s) == w;
}

Mask simples_of_wide(const Catalog& cat, const Mask& w) {
  if (!is_wide(cat, w)) throw Error(ErrorKind::NotWide, cat.mask_name(w) + " is not a wide subcategory");
  return candidate_simples(cat, w);
}

std::vector<Mask> serre_list(const Catalog& cat, const Mask& w) {
  const auto simples = simples_of_wide(cat, w).members();
  std::vector<Mask> out;
  const std::size_t k = simples.size();
  for (std::size_t bits = 0; bits < (std::size_t{1} << k); ++bits) {
    Mask chosen(cat.size());
    for (std::size_t b = 0; b < k; ++b)
      if (bits >> b & 1u) chosen.set(simples[b]);
    out.push_back(filt_within(cat, chosen, w));
  }
  return out;
}

Mask fac_within(const Catalog& cat, const Mask& c, const Mask& ambient) {
  Mask out = c;
  for (int i : c.members())
    for (const auto& sf : cat.proper_subfactors[i])
      if (sf.sub.is_subset_of(ambient)) out |= sf.quotient;
  return out;
}

Mask tors_gen_within(const Catalog& cat, const Mask& x, const Mask& ambient) {
  Mask cur = x;
  while (true) {
    Mask next = filt_within(cat, fac_within(cat, cur, ambient), ambient);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<Mask> all_semibricks(const Catalog& cat) {
  std::vector<int> bricks;
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat.brick[i]) bricks.push_back(static_cast<int>(i));
  std::vector<Mask> out;
  Mask cur(cat.size());
  auto recurse = [&](auto& self, std::size_t from) -> void {
    out.push_back(cur);
    for (std::size_t k = from; k < bricks.size(); ++k) {
      const int b = bricks[k];
      if (cat.hom_out[b].intersects(cur) || cat.hom_in[b].intersects(cur)) continue;
      cur.set(b);
      self(self, k + 1);
      cur.reset(b);
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace torslat
