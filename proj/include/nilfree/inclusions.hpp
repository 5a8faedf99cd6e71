#pragma once

#include "nilfree/ideals.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace nilfree {

// Statement names:
//   product             I_{m1} I_{m2} in I_{m1+m2-2}
//   product-odd         same with target m1+m2-1, m1 or m2 odd
//   product-chain       I_{m1}...I_{ml}, target from the parity count of the m_i
//   three-generator     n = 3, target m1+m2-1
//   commutator-product  r-commutator times p-commutator in I_{p+1}, 3 <= r <= p
//   shared-last         [c1,y][c2,y] with [c1,y] in L_r, [c2,y] in L_p, in I_{p+1}
//   even-shared-last    m1, m2 even, [c1,y][c2,y] in I_{m1+m2-1}
//   even-shared-chain   m_i even, [c1,y]...[cl,y] in I_{sum m - l + 1}
struct InclusionCase {
  std::string statement;
  std::vector<int> m;
  int n = 4;
  int max_degree = 6;
  std::uint64_t seed = 20240601;
  std::size_t samples = 300;
  std::size_t exhaustive_threshold = 20000;
  EngineLimits limits;
};

struct InclusionReport {
  std::string statement;
  nlohmann::ordered_json params;
  int target = 0;
  bool exhaustive = false;
  std::size_t checked = 0;
  std::vector<std::string> failures;  // offending elements
  std::vector<std::string> skipped;   // weights beyond the limits

  bool passed() const { return failures.empty(); }
  nlohmann::ordered_json to_json() const;
};

const std::vector<std::string>& inclusion_statements();

/// Ideal index the statement claims for the given parameters; throws
/// std::invalid_argument when the parameters violate its hypotheses.
int inclusion_target(const std::string& statement, const std::vector<int>& m, int n);

InclusionReport verify_inclusion(const InclusionCase& c);

struct NonInclusionSearch {
  int m1 = 4, m2 = 4;
  int target = 7;
  int max_vars = 6;
  EngineLimits limits;
};

struct NonInclusionResult {
  bool found = false;
  std::string witness;
  std::vector<std::string> attempted;  // weights tried
  std::vector<std::string> skipped;    // weights beyond the limits
  nlohmann::ordered_json to_json() const;
};

/// Searches degree m1+m2 weights for a product of an m1- and an m2-commutator
/// of generators that is not in I_target.
NonInclusionResult search_non_inclusion(const NonInclusionSearch& s);

}  // namespace nilfree
