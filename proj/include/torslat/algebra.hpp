#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "torslat/error.hpp"
#include "torslat/field.hpp"

namespace torslat {

struct Arrow {
  int source = 0;
  int target = 0;
  std::string name;

  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Quiver {
  int vertex_count = 0;
  std::vector<Arrow> arrows;

  std::optional<int> arrow_index(std::string_view name) const;

  friend bool operator==(const Quiver&, const Quiver&) = default;
};

/// A path in the quiver. Paths compose left to right: arrows[0] is traversed
/// first. The trivial path e_v has no arrows and start == v.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  int end(const Quiver& q) const { return arrows.empty() ? start : q.arrows[arrows.back()].target; }

  friend bool operator==(const Path&, const Path&) = default;
};

/// Textual description of a monomial quiver algebra, as read from a spec
/// file. Vertices in the file are numbered from 1; `quiver` stores them
/// from 0.
struct AlgebraSpec {
  std::string name;
  Quiver quiver;
  std::vector<std::vector<std::string>> relations;
  int prime = 2;
};

/// Parses the line format
///   vertices N / arrow <name> <src> <dst> / relation <a1> <a2> ... / prime p
/// with `#` comments. Throws Error(BadSpec) on malformed input.
AlgebraSpec parse_algebra_spec(std::string_view text, std::string name = {});
AlgebraSpec load_algebra_spec(const std::string& path);
std::string format_algebra_spec(const AlgebraSpec& spec);

/// Finite-dimensional monomial path algebra KQ/I over F_p. Immutable.
class Algebra {
 public:
  const std::string& name() const { return name_; }
  const Quiver& quiver() const { return quiver_; }
  int vertex_count() const { return quiver_.vertex_count; }
  int arrow_count() const { return static_cast<int>(quiver_.arrows.size()); }
  const Arrow& arrow(int a) const { return quiver_.arrows[a]; }
  const std::vector<std::vector<int>>& relations() const { return relations_; }
  const PrimeField& field() const { return field_; }
  const std::vector<Path>& path_basis() const { return path_basis_; }
  int dimension() const { return static_cast<int>(path_basis_.size()); }
  const AlgebraSpec& spec() const { return spec_; }

  std::string path_name(const Path& p) const;

 private:
  friend std::shared_ptr<const Algebra> build_algebra(const AlgebraSpec&, std::size_t);

  Algebra(AlgebraSpec spec, std::vector<std::vector<int>> relations, std::vector<Path> basis)
      : name_(spec.name),
        quiver_(spec.quiver),
        relations_(std::move(relations)),
        field_(spec.prime),
        path_basis_(std::move(basis)),
        spec_(std::move(spec)) {}

  std::string name_;
  Quiver quiver_;
  std::vector<std::vector<int>> relations_;
  PrimeField field_;
  std::vector<Path> path_basis_;
  AlgebraSpec spec_;
};

inline constexpr int max_prime = 7;

/// Validates the algebra spec and enumerates the path basis breadth-first, pruning
/// every path that contains a relation. Throws BadSpec, BadRelation, or
/// PathBlowup when more than `path_bound` paths survive.
std::shared_ptr<const Algebra> build_algebra(const AlgebraSpec& spec, std::size_t path_bound = Limits{}.path_bound);

}  // namespace torslat
