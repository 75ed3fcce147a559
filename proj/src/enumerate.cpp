#include "bm/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <stdexcept>
#include <thread>

#include "bm/errors.hpp"

namespace bm {

int resolve_jobs(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("BM_JOBS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 4096) return int(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : int(hw);
}

namespace {

// Candidate squares (distinct corners only), each with a bitmask of its four
// corner pairs, plus a per-pair index for O(1) branching.
struct Universe {
  int alpha = 0, beta = 0;
  int pair_count = 0;  // 4*alpha*beta, <= 64
  std::uint64_t full_mask = 0;
  std::vector<GeometricSquare> squares;
  std::vector<std::uint64_t> masks;
  std::vector<std::vector<std::uint32_t>> by_pair;
};

Universe make_universe(int alpha, int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("alpha and beta must be >= 1");
  if (4 * alpha * beta > 64)
    throw std::invalid_argument(
        "enumeration supports 4*alpha*beta <= 64 cross pairs");
  Universe u;
  u.alpha = alpha;
  u.beta = beta;
  u.pair_count = 4 * alpha * beta;
  u.full_mask = (u.pair_count == 64) ? ~0ull : ((1ull << u.pair_count) - 1);
  for (const auto& s : all_squares(alpha, beta)) {
    if (s.has_repeated_corner()) continue;  // can never sit in a relation
    std::uint64_t m = 0;
    for (const auto& e : corner_edges(s)) m |= 1ull << pair_index(e.h, e.v, beta);
    u.squares.push_back(s);
    u.masks.push_back(m);
  }
  u.by_pair.resize(u.pair_count);
  for (std::uint32_t id = 0; id < u.masks.size(); ++id) {
    std::uint64_t m = u.masks[id];
    while (m != 0) {
      int p = std::countr_zero(m);
      u.by_pair[p].push_back(id);
      m &= m - 1;
    }
  }
  return u;
}

// Depth-first search over uncovered pairs: always branch on the least
// uncovered pair, over the squares containing it whose corners are all free.
// Every solution set is generated exactly once (the branch square at each
// node is determined by the solution itself).
template <typename Emit>
void search(const Universe& u, std::uint64_t covered,
            std::vector<std::uint32_t>& chosen, int depth_left,
            const std::atomic<bool>* stop, Emit&& emit) {
  if (depth_left == 0) {
    emit(chosen);
    return;
  }
  if (stop != nullptr && stop->load(std::memory_order_relaxed)) return;
  const int p = std::countr_zero(u.full_mask & ~covered);
  for (std::uint32_t id : u.by_pair[p]) {
    const std::uint64_t m = u.masks[id];
    if ((m & covered) == 0) {
      chosen.push_back(id);
      search(u, covered | m, chosen, depth_left - 1, stop, emit);
      chosen.pop_back();
    }
  }
}

struct Subproblem {
  std::uint64_t covered = 0;
  std::vector<std::uint32_t> chosen;
};

// Split the search by the branch taken at depth 0, and once more at depth 1
// when the worker count exceeds the number of top-level branches.
std::vector<Subproblem> split_frontier(const Universe& u, int jobs) {
  std::vector<Subproblem> nodes{{0, {}}};
  const int total_depth = u.alpha * u.beta;
  for (int depth = 0; depth < 2 && depth < total_depth; ++depth) {
    if (depth == 1 && int(nodes.size()) >= jobs) break;
    std::vector<Subproblem> next;
    for (const auto& node : nodes) {
      const int p = std::countr_zero(u.full_mask & ~node.covered);
      for (std::uint32_t id : u.by_pair[p]) {
        const std::uint64_t m = u.masks[id];
        if ((m & node.covered) == 0) {
          Subproblem child{node.covered | m, node.chosen};
          child.chosen.push_back(id);
          next.push_back(std::move(child));
        }
      }
    }
    nodes = std::move(next);
    if (nodes.empty()) break;
  }
  return nodes;
}

struct Outcome {
  std::uint64_t count = 0;
  std::vector<BMRelation> found;
};

// Shared driver for count-only and materializing runs. Workers pull frontier
// subproblems through an atomic cursor; results land in per-subproblem slots,
// so the merged output does not depend on scheduling.
std::vector<Outcome> run_search(int alpha, int beta, const EnumConfig& config,
                                bool materialize) {
  const Universe u = make_universe(alpha, beta);
  const int total_depth = alpha * beta;
  const int jobs = resolve_jobs(config.jobs);
  std::vector<Subproblem> nodes = split_frontier(u, jobs);
  std::vector<Outcome> results(nodes.size());

  std::atomic<std::size_t> cursor{0};
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> emitted{0};
  const bool capped = config.max_solutions.has_value();
  const std::uint64_t cap = capped ? *config.max_solutions : 0;

  auto worker = [&]() {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1, std::memory_order_relaxed);
      if (i >= nodes.size()) return;
      if (stop.load(std::memory_order_relaxed)) return;
      Outcome& out = results[i];
      std::vector<std::uint32_t> chosen = nodes[i].chosen;
      auto emit = [&](const std::vector<std::uint32_t>& ids) {
        if (capped &&
            emitted.fetch_add(1, std::memory_order_relaxed) + 1 > cap) {
          stop.store(true, std::memory_order_relaxed);
          return;
        }
        ++out.count;
        if (materialize) {
          std::vector<GeometricSquare> squares;
          squares.reserve(ids.size());
          for (auto id : ids) squares.push_back(u.squares[id]);
          out.found.push_back(
              BMRelation::unchecked(std::move(squares), alpha, beta));
        }
      };
      search(u, nodes[i].covered, chosen, total_depth - int(chosen.size()),
             &stop, emit);
    }
  };

  const int workers = std::max(1, std::min<int>(jobs, int(nodes.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  if (stop.load())
    throw BudgetExceeded("enumeration exceeded max_solutions = " +
                         std::to_string(cap));
  return results;
}

}  // namespace

std::uint64_t count_relations(int alpha, int beta, const EnumConfig& config) {
  std::uint64_t total = 0;
  for (const auto& out : run_search(alpha, beta, config, false)) {
    if (__builtin_add_overflow(total, out.count, &total))
      throw std::overflow_error("relation count exceeds 64 bits");
  }
  return total;
}

std::vector<BMRelation> enumerate_relations(int alpha, int beta,
                                            const EnumConfig& config) {
  auto results = run_search(alpha, beta, config, true);
  std::size_t total = 0;
  for (const auto& out : results) total += out.found.size();
  std::vector<BMRelation> all;
  all.reserve(total);
  for (auto& out : results)
    for (auto& r : out.found) all.push_back(std::move(r));
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace bm
