#ifndef HOPFCAT_SUITE_HPP
#define HOPFCAT_SUITE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hopfcat/field.hpp"

namespace hopfcat {

struct SuiteConfig {
  std::uint64_t seed = 20240611;
  std::vector<std::string> groups;
  std::vector<FieldSpec> fields;
  std::size_t max_dim = 18;
  /// Replace every antipode by the identity before checking.
  bool inject_antipode_fault = false;
};

/// All catalog groups over Q, F2, F3 and F5.
SuiteConfig default_suite_config();
/// Reads HOPFCAT_SEED into cfg.seed when set. Throws MalformedInputError on a
/// value that is not an unsigned integer.
void apply_seed_override(SuiteConfig& cfg);

struct PropertyResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  /// JSON text of the first failing case.
  std::optional<std::string> witness;
};

struct SuiteReport {
  std::vector<PropertyResult> properties;

  bool ok() const;
  /// `PROP <name> cases=<n> fail=<k>` per property, each failing one followed
  /// by `WITNESS <json>`.
  std::string to_string() const;
};

/// Runs every property in a fixed order. Throws UnknownGroupError for names
/// outside the catalog.
SuiteReport run_suite(const SuiteConfig& cfg);

}  // namespace hopfcat

#endif  // HOPFCAT_SUITE_HPP
