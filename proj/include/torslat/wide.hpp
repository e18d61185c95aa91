#pragma once

#include <optional>
#include <vector>

#include "torslat/lattice.hpp"

namespace torslat {

enum class WideMode { Direct, Join, Meet, All };

struct WideIntervalReport {
  Interval interval;
  Mask wide_mask;  // U^perp cap T
  bool verdict_direct = false;
  bool verdict_join = false;
  bool verdict_meet = false;
  int join_of_lower = 0;
  int meet_of_upper = 0;
  WideMode mode = WideMode::All;

  bool wide() const {
    switch (mode) {
      case WideMode::Join: return verdict_join;
      case WideMode::Meet: return verdict_meet;
      default: return verdict_direct;
    }
  }
};

/// With mode All, throws TheoremViolation when the verdicts disagree.
WideIntervalReport is_wide_interval(const TorsLattice& lat, const Interval& iv, WideMode mode = WideMode::All);

struct ReductionIso {
  Interval interval;
  Mask wide;
  TorsLattice wide_lattice;
  std::vector<int> interval_nodes;
  std::vector<int> phi;  // phi[k]: wide_lattice node of interval_nodes[k]
  std::vector<int> psi;  // psi[x]: lattice node of wide_lattice node x
};

/// The lattice isomorphism between a wide interval [U, T] and tors W, fully
/// checked. Throws NotWideInterval, or TheoremViolation on a failed check.
ReductionIso reduce_interval(const TorsLattice& lat, const Interval& iv, const Limits& limits = {});

/// Filt of the labels of arrows leaving T.
Mask left_wide(const TorsLattice& lat, int t);
/// Filt of the labels of arrows leaving F in the torsion-free lattice.
Mask right_wide(const TorsLattice& torf, int f);

/// Every f: Y -> X with Y in T, X in W_L(T) (indecomposable) has its kernel
/// in T. Returns the number of morphisms checked; throws AuditFailed.
std::size_t audit_left_wide(const TorsLattice& lat, const MorphismAtlas& atlas, int t);
/// Dually, every f: X -> Y with X in W_R(F), Y in F has its cokernel in F.
std::size_t audit_right_wide(const TorsLattice& torf, const MorphismAtlas& atlas, int f);

/// U = T cap perp_left(W) for a Serre subcategory W of W_L(T), checked
/// against T = U * W and W = U^perp cap T. Returns the node of U.
int serre_mutation(const TorsLattice& lat, int t, const Mask& w);

/// Bottoms U of the wide intervals [U, T], one per Serre subcategory of
/// W_L(T), cross-checked against a scan of all nodes and the count
/// 2^(arrows leaving T).
std::vector<int> wide_intervals_with_top(const TorsLattice& lat, int t);

struct WidelyGeneratedReport {
  bool by_left_wide = false;  // T = T(W_L(T))
  bool by_labels = false;     // T = T(labels leaving T)
  bool by_arrows = false;     // every U < T lies below some arrow T -> U'
  std::optional<int> witness;  // a U violating the arrow condition
  std::vector<int> join_terms;  // nodes T(S) for the labels S leaving T
  int canonical_join = 0;       // join of join_terms
  bool verdict() const { return by_left_wide; }
};

WidelyGeneratedReport is_widely_generated(const TorsLattice& lat, int t);

struct RoundtripReport {
  std::vector<Mask> semibricks;
  std::vector<Mask> wide;  // Filt of each semibrick
};

/// W_L(T(W)) = W for every wide subcategory, enumerated from semibricks.
RoundtripReport leftwide_roundtrip(const TorsLattice& lat);

/// The four equivalent descriptions of wideness of U^perp cap T, in terms of
/// W_L(T) and W_R(U^perp). Throws TheoremViolation when they disagree and
/// returns the common verdict.
bool check_serre_criteria(const TorsLattice& lat, const DualLattice& dual, const Interval& iv);

/// For every Serre W of W_L(T), X in T and f: X -> Y with Y in Filt Sub W:
/// image in W and kernel in T. Returns the number of morphisms checked.
std::size_t audit_serre_image_kernel(const TorsLattice& lat, const MorphismAtlas& atlas, int t);

/// For the arrow T -> U labeled S: every f: X -> S with X in T is zero or
/// epic with kernel in T. Returns the number of morphisms checked.
std::size_t audit_label_kernel(const TorsLattice& lat, const MorphismAtlas& atlas, int arrow);

}  // namespace torslat
