#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bm/relation.hpp"

namespace bm {

struct EnumConfig {
  int jobs = 0;  // 0: resolve via BM_JOBS / hardware concurrency
  std::optional<std::uint64_t> max_solutions;  // throw BudgetExceeded past this
};

// Exact number of (alpha,beta)-BM relations.
std::uint64_t count_relations(int alpha, int beta, const EnumConfig& config = {});

// All (alpha,beta)-BM relations, sorted canonically. Output is identical for
// any job count.
std::vector<BMRelation> enumerate_relations(int alpha, int beta,
                                            const EnumConfig& config = {});

// Worker count policy, single source of truth: an explicit request wins, then
// the BM_JOBS environment variable, then hardware concurrency.
int resolve_jobs(int requested);

}  // namespace bm
