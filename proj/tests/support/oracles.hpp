#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "tcat/category.hpp"

namespace testing {

/// Hom-class counts of C[W⁻¹] among zigzags of length at most max_length.
/// Words up to max_length + slack are glued by one-step relations, so
/// proofs may pass through longer words. Independent of any rewriting code.
struct ZigzagCounts {
  std::map<std::pair<tcat::ObjectId, tcat::ObjectId>, int> counts;
  bool within_budget = true;
  friend bool operator==(const ZigzagCounts&, const ZigzagCounts&) = default;
};
ZigzagCounts zigzag_counts(const tcat::FiniteCategory& c, const std::vector<tcat::MorphismId>& w,
                           int max_length, int slack, std::size_t budget = 400000);

/// Counts at three consecutive bounds that agree; empty when they never do
/// up to max_length or the budget runs out.
struct OracleResult {
  bool stabilized = false;
  std::map<std::pair<tcat::ObjectId, tcat::ObjectId>, int> counts;
};
OracleResult zigzag_oracle(const tcat::FiniteCategory& c, const std::vector<tcat::MorphismId>& w,
                           int max_length = 5, int slack = 3, std::size_t budget = 400000);

/// Whether x is initial in C[W⁻¹] according to stabilized counts.
bool oracle_initial(const OracleResult& r, tcat::ObjectId x, int object_count);

}  // namespace testing
