#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace llab::test {

struct PropertyResult {
  std::string name;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  double ms = 0;
  bool ok() const { return failures == 0 && instances > 0; }
};

PropertyResult hilbert_symmetry(std::uint64_t seed, std::size_t count = 60);
PropertyResult euler_identity(std::uint64_t seed, std::size_t count = 80);
PropertyResult watanabe_rank_consistency(std::uint64_t seed, std::size_t count = 50);
PropertyResult variable_change_invariance(std::uint64_t seed, std::size_t count = 50);
PropertyResult basis_change_invariance(std::uint64_t seed, std::size_t count = 50);
PropertyResult gordan_noether_desk_check(std::uint64_t seed, std::size_t count = 60);
PropertyResult separated_variables_additivity(std::uint64_t seed, std::size_t count = 50);

std::vector<PropertyResult> all_properties(std::uint64_t seed);

}  // namespace llab::test
