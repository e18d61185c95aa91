#pragma once

#include <vector>

#include "torslat/catalog.hpp"

namespace torslat {

// Closure operators and predicates on masks. All of them are pure index
// combinatorics over the catalog tables.

Mask fac(const Catalog& cat, const Mask& c);
Mask sub_cl(const Catalog& cat, const Mask& c);

/// Smallest set F containing C such that j joins F whenever some proper
/// subfactor pair of j has both parts supported in F. Only indices inside
/// `ambient` may be added.
Mask filt_within(const Catalog& cat, const Mask& c, const Mask& ambient);
Mask filt(const Catalog& cat, const Mask& c);

Mask perp_right(const Catalog& cat, const Mask& c);  // Hom(C, -) = 0
Mask perp_left(const Catalog& cat, const Mask& c);   // Hom(-, C) = 0

Mask tors_gen(const Catalog& cat, const Mask& x);
Mask torf_gen(const Catalog& cat, const Mask& x);

/// Indecomposables with a subfactor pair (u, q), u supported in U and q in X.
/// Agrees with U*X whenever the latter is summand-closed.
Mask star(const Catalog& cat, const Mask& u, const Mask& x);

bool is_torsion_class(const Catalog& cat, const Mask& c);
bool is_torsion_free_class(const Catalog& cat, const Mask& c);

struct TorsionPairWitness {
  Mask torsion;
  Mask free;

  bool holds(const Catalog& cat) const {
    return free == perp_right(cat, torsion) && torsion == perp_left(cat, free);
  }
};

struct CanonicalSequence {
  Module torsion_part;   // tX
  Module free_quotient;  // X / tX
  Morphism inclusion;
};

/// 0 -> tX -> X -> X/tX -> 0 for the torsion pair (T, T^perp); tX is the
/// sum of the images of all maps from members of T.
CanonicalSequence canonical_sequence(const Catalog& cat, const Module& x, const Mask& torsion);

bool is_semibrick(const Catalog& cat, const Mask& c);

/// Members of W with no nonzero proper submodule supported in W. No
/// wideness is assumed.
Mask candidate_simples(const Catalog& cat, const Mask& w);
/// Throws NotWide unless is_wide(W).
Mask simples_of_wide(const Catalog& cat, const Mask& w);
bool is_wide(const Catalog& cat, const Mask& w);

/// Serre subcategories of the wide subcategory W, one per subset of its
/// simples (subset order: bit k of the index selects the k-th simple).
std::vector<Mask> serre_list(const Catalog& cat, const Mask& w);

/// Torsion-class operators inside a wide subcategory W: quotients by
/// submodules lying in W, extensions with both ends in W.
Mask fac_within(const Catalog& cat, const Mask& c, const Mask& ambient);
Mask tors_gen_within(const Catalog& cat, const Mask& x, const Mask& ambient);

/// Every semibrick of the catalog, in increasing canonical order.
std::vector<Mask> all_semibricks(const Catalog& cat);

}  // namespace torslat
