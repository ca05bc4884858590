#pragma once

// Property checks shared by the property-test binary and the acceptance run.

#include <cstdint>
#include <string>
#include <vector>

namespace props {

struct Result {
  std::string name;
  long long checked = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && checked > 0; }
  void fail(std::string what) { failures.push_back(std::move(what)); }
};

Result graded_commutativity(std::uint32_t seed, int trials);
Result associativity(std::uint32_t seed, int trials);
Result monomial_counts();
Result complete_intersections();
Result differential_squares_to_zero(std::uint32_t seed, int trials);
Result euler_bookkeeping();
Result poincare_duality();
Result projector_idempotence();
Result pushout_symmetry();
Result functoriality();
Result involution_intertwining();

std::vector<Result> all(std::uint32_t seed);

}  // namespace props
