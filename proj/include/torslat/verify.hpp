#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torslat/algebra.hpp"

namespace torslat {

/// Names accepted by --props, in report order.
const std::vector<std::string>& property_names();
bool is_property_name(const std::string& name);

struct PropertyResult {
  std::string algebra;
  std::string property;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::string unit;
  std::string witness;  // first failure

  bool pass() const { return failed == 0; }
  std::string line() const;
};

struct AlgebraReport {
  std::string algebra;
  std::vector<PropertyResult> results;
  // Set when the catalog or lattice could not be built.
  std::optional<ErrorKind> error;
  std::string error_text;

  std::vector<std::string> lines() const;
};

struct VerifyOptions {
  std::vector<std::string> props;  // empty: all
  Limits limits;
  unsigned threads = 1;
};

AlgebraReport verify_algebra(const AlgebraSpec& spec, const VerifyOptions& options);

/// Runs verify_algebra over `specs` on up to options.threads workers; the
/// reports come back in input order.
std::vector<AlgebraReport> verify_all(const std::vector<AlgebraSpec>& specs, const VerifyOptions& options);

/// 0 all pass, 1 some property failed, 2 a resource limit or closure error.
int verify_exit_code(const std::vector<AlgebraReport>& reports);

/// True for the error kinds that mean a limit was hit rather than a
/// property failing.
bool is_resource_error(ErrorKind kind);

}  // namespace torslat
