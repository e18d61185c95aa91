#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "torslat/algebra.hpp"
#include "torslat/field.hpp"

namespace torslat {

/// A representation of the bound quiver: a vector space F_p^{dims[v]} at each
/// vertex and, for each arrow a: s -> t, a dims[t] x dims[s] matrix.
class Module {
 public:
  Module() = default;
  Module(std::shared_ptr<const Algebra> algebra, std::vector<int> dims, std::vector<Matrix> mats);

  /// The zero module over `algebra`.
  static Module zero(std::shared_ptr<const Algebra> algebra);

  const Algebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return algebra_; }
  const PrimeField& field() const { return algebra_->field(); }

  const std::vector<int>& dims() const { return dims_; }
  int dim(int v) const { return dims_[v]; }
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }

  const std::vector<Matrix>& mats() const { return mats_; }
  const Matrix& mat(int arrow) const { return mats_[arrow]; }

  /// Product M_{ak} ... M_{a1} along a path.
  Matrix path_action(const std::vector<int>& path) const;

  bool satisfies_relations() const;

  friend bool operator==(const Module& a, const Module& b) { return a.dims_ == b.dims_ && a.mats_ == b.mats_; }

 private:
  std::shared_ptr<const Algebra> algebra_;
  std::vector<int> dims_;
  std::vector<Matrix> mats_;
};

/// A family of linear maps source_v -> target_v commuting with the arrows.
struct Morphism {
  Module source;
  Module target;
  std::vector<Matrix> comps;

  bool is_zero() const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_isomorphism() const;
  bool intertwines() const;
};

Morphism identity_morphism(const Module& x);
Morphism zero_morphism(const Module& x, const Module& y);
Morphism compose(const Morphism& g, const Morphism& f);
/// Linear combination sum_k coeffs[k] * basis[k]; all basis elements share source/target.
Morphism combine(const std::vector<Morphism>& basis, const std::vector<std::uint8_t>& coeffs, const Module& x,
                 const Module& y);

Module simple_module(std::shared_ptr<const Algebra> algebra, int vertex);
Module projective_module(std::shared_ptr<const Algebra> algebra, int vertex);
Module direct_sum(const Module& x, const Module& y);
Module direct_sum(const std::vector<Module>& parts, std::shared_ptr<const Algebra> algebra);

/// Basis of Hom(X, Y) as the solution space of the intertwining equations.
std::vector<Morphism> hom_basis(const Module& x, const Module& y);
int hom_dim(const Module& x, const Module& y);

/// Calls `visit` on every element of the span of `basis` (p^|basis| of them,
/// in mixed-radix order starting from zero). `visit` returns false to stop.
/// Throws Error(kind) when p^|basis| exceeds `budget`.
void for_each_in_span(const std::vector<Morphism>& basis, const Module& x, const Module& y, std::uint64_t budget,
                      ErrorKind kind, const std::function<bool(const Morphism&)>& visit);

/// A submodule given by per-vertex bases (columns), with its inclusion.
struct Submodule {
  std::vector<Matrix> bases;
  Module module;
  Morphism inclusion;
};

/// Restricts X to per-vertex subspaces that must be stable under all arrows.
Submodule restrict_to(const Module& x, const std::vector<Matrix>& bases);

struct Quotient {
  Module module;
  Morphism projection;
};

Quotient quotient_by(const Module& x, const std::vector<Matrix>& sub_bases);

struct KernelImageCokernel {
  Submodule kernel;
  Submodule image;
  Quotient cokernel;
};

KernelImageCokernel kernel_image_cokernel(const Morphism& f);

/// Krull-Schmidt decomposition into indecomposable direct summands.
std::vector<Module> decompose(const Module& x, const Limits& limits = {});

bool is_indecomposable(const Module& x, const Limits& limits = {});
bool is_isomorphic(const Module& x, const Module& y, const Limits& limits = {});
bool is_brick(const Module& x, const Limits& limits = {});

/// All submodules (stable tuples of subspaces), including 0 and X.
std::vector<Submodule> submodules(const Module& x, const Limits& limits = {});

/// Middle terms Z of short exact sequences 0 -> U -> Z -> Q -> 0, one per
/// isomorphism class. The first entry is always U (+) Q.
std::vector<Module> all_extensions(const Module& q, const Module& u, const Limits& limits = {});

/// dim Ext^1(Q, U) computed from cocycles modulo coboundaries.
int ext1_dim(const Module& q, const Module& u);

}  // namespace torslat
