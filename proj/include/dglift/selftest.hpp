// Seeded property suites shared by the command line `selftest` and the
// acceptance runner.
#ifndef DGLIFT_SELFTEST_HPP
#define DGLIFT_SELFTEST_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dglift/scalar.hpp"

namespace dglift {

struct PropertyInfo {
  std::string name;
  std::string statement;
  /// Part of the identity suite (as opposed to the wider invariant checks).
  bool identity = false;
  /// A formula reported for information only; failures do not count.
  bool informational = false;
};

struct PropertyResult {
  std::string name;
  std::string field;
  std::size_t instances = 0;
  std::size_t failures = 0;
  /// Description of the first failing instance.
  std::string first_failure;

  bool passed() const { return failures == 0; }
};

const std::vector<PropertyInfo>& property_catalog();
const PropertyInfo& property_info(const std::string& name);

/// Runs `iterations` random instances. The instances depend only on
/// (name, field, seed).
PropertyResult run_property(const std::string& name, const Field& field, std::uint64_t seed,
                            std::size_t iterations);

}  // namespace dglift

#endif  // DGLIFT_SELFTEST_HPP
