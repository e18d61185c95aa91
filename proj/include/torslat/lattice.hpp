#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torslat/catalog.hpp"

namespace torslat {

enum class LatticeKind { Torsion, TorsionFree };

/// Covering arrow top -> bottom (node indices) with the catalog index of its
/// brick label.
struct HasseArrow {
  int top;
  int bottom;
  int label;

  friend auto operator<=>(const HasseArrow&, const HasseArrow&) = default;
};

struct Interval {
  int bottom;
  int top;
};

/// Torsion (or torsion-free) classes of the abelian subcategory `ambient`,
/// ordered by inclusion. Nodes are in canonical mask order, arrows sorted by
/// (top, bottom).
class TorsLattice {
 public:
  const Catalog* cat = nullptr;
  LatticeKind kind = LatticeKind::Torsion;
  Mask ambient;
  std::vector<Mask> nodes;
  std::vector<HasseArrow> arrows;
  std::vector<std::vector<int>> out_arrows;  // arrow indices by top
  std::vector<std::vector<int>> in_arrows;   // arrow indices by bottom

  std::size_t size() const { return nodes.size(); }
  std::optional<int> find(const Mask& m) const;
  int bottom() const { return 0; }
  int top() const { return static_cast<int>(nodes.size()) - 1; }
  bool leq(int a, int b) const { return nodes[a].is_subset_of(nodes[b]); }

  /// Closure used for joins: the torsion (or torsion-free) class generated
  /// inside the ambient category.
  Mask close(const Mask& m) const;

  std::optional<int> arrow_between(int top, int bottom) const;
  Mask out_labels(int node) const;
  Mask in_labels(int node) const;

  void index_arrows();

 private:
  std::map<Mask, int> index_;
  friend TorsLattice enumerate_classes(const Catalog&, LatticeKind, const Mask&, const Limits&);
};

/// Node set only (no arrows). Breadth-first over closures of T + {i}, which
/// reaches every class since each is generated by its members.
TorsLattice enumerate_classes(const Catalog& cat, LatticeKind kind, const Mask& ambient, const Limits& limits = {});
TorsLattice enumerate_tors(const Catalog& cat, const Limits& limits = {});

/// Fills arrows with covering relations and brick labels. Throws
/// LabelNotBrick / LabelNotUnique if a covering pair has no single brick
/// generating its difference.
void hasse_with_labels(TorsLattice& lattice);

/// enumerate_tors followed by hasse_with_labels.
TorsLattice build_lattice(const Catalog& cat, const Limits& limits = {});

/// Torsion classes of the wide subcategory W, labeled. Throws NotWide.
TorsLattice tors_of_wide(const Catalog& cat, const Mask& w, const Limits& limits = {});

int join(const TorsLattice& lattice, const std::vector<int>& nodes);
int meet(const TorsLattice& lattice, const std::vector<int>& nodes);

bool in_interval(const TorsLattice& lattice, const Interval& interval, int node);
std::vector<int> interval_nodes(const TorsLattice& lattice, const Interval& interval);
std::vector<Interval> all_intervals(const TorsLattice& lattice);

std::vector<int> upper_set(const TorsLattice& lattice, const Interval& interval);
std::vector<int> lower_set(const TorsLattice& lattice, const Interval& interval);

/// Labels of arrows with both ends in `nodes`.
Mask labels_of(const TorsLattice& lattice, const std::vector<int>& nodes);

struct DualLattice {
  TorsLattice torf;
  std::vector<int> image;  // torsion node -> torsion-free node of its right perpendicular
};

/// Torsion-free classes with their labeled Hasse quiver, and the check that
/// T -> T^perp reverses order and carries each arrow T -> U to the arrow
/// U^perp -> T^perp with the same label. Throws DualityMismatch.
DualLattice dual_lattice(const Catalog& cat, const TorsLattice& tors, const Limits& limits = {});

std::string lattice_to_dot(const TorsLattice& lattice);
std::string lattice_to_json(const TorsLattice& lattice);

}  // namespace torslat
