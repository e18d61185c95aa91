#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace torslat {

enum class ErrorKind {
  BadSpec,
  BadRelation,
  PathBlowup,
  DecomposeBlowup,
  IsoSearchBlowup,
  SubspaceBlowup,
  NotClosed,
  LatticeBlowup,
  LabelNotUnique,
  LabelNotBrick,
  DualityMismatch,
  NotWide,
  NotWideInterval,
  NotAnInterval,
  TheoremViolation,
  AuditFailed,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Resource limits shared by the module, catalog and lattice layers.
/// Exceeding any of them raises an Error; nothing is silently truncated.
struct Limits {
  std::size_t path_bound = 4096;
  int dim_bound = 8;
  // Largest number of elements of a Hom space that may be enumerated.
  std::uint64_t enum_budget = std::uint64_t{1} << 20;
  // Largest number of partial subspace tuples visited by submodule search.
  std::uint64_t subspace_budget = std::uint64_t{1} << 20;
  std::size_t node_budget = 200000;
};

}  // namespace torslat
