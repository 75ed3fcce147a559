// Test-only oracles, independent of the library's implementation paths:
//  - identification classes of oriented squares via union-find,
//  - invariant factors via determinantal divisors (gcd of k x k minors),
//  - the shared seed for randomized tests (override with BM_TEST_SEED).
#pragma once

#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "bm/letter.hpp"
#include "bm/presentation.hpp"
#include "bm/word.hpp"

namespace oracle {

inline std::uint64_t test_seed() {
  if (const char* env = std::getenv("BM_TEST_SEED")) {
    char* end = nullptr;
    const std::uint64_t v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return 20260809ull;
}

// ---- square identification classes -----------------------------------

using RawQuad = std::array<bm::Letter, 4>;  // h, v, h, v

// The identification set of q, written out from the definition.
inline std::array<RawQuad, 4> identification(const RawQuad& q) {
  const bm::Letter a = q[0], b = q[1], a2 = q[2], b2 = q[3];
  return {RawQuad{a, b, a2, b2},
          RawQuad{a2, b2, a, b},
          RawQuad{a.inverse(), b2.inverse(), a2.inverse(), b.inverse()},
          RawQuad{a2.inverse(), b.inverse(), a.inverse(), b2.inverse()}};
}

struct OrbitSummary {
  std::size_t classes = 0;
  std::vector<std::size_t> orbit_sizes;  // one per class, unsorted
};

// Groups all (2a)^2 (2b)^2 oriented squares with union-find.
inline OrbitSummary square_orbits(int alpha, int beta) {
  std::vector<RawQuad> quads;
  std::vector<bm::Letter> hs, vs;
  for (int i = 1; i <= alpha; ++i)
    for (bool inv : {false, true}) hs.push_back(bm::Letter::horizontal(i, inv));
  for (int i = 1; i <= beta; ++i)
    for (bool inv : {false, true}) vs.push_back(bm::Letter::vertical(i, inv));
  std::map<RawQuad, std::size_t> id_of;
  for (auto a : hs)
    for (auto b : vs)
      for (auto a2 : hs)
        for (auto b2 : vs) {
          RawQuad q{a, b, a2, b2};
          id_of.emplace(q, id_of.size());
          quads.push_back(q);
        }

  std::vector<std::size_t> parent(id_of.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& q : quads)
    for (const auto& img : identification(q)) {
      const std::size_t a = find(id_of.at(q)), b = find(id_of.at(img));
      if (a != b) parent[a] = b;
    }

  std::map<std::size_t, std::size_t> sizes;
  for (std::size_t i = 0; i < parent.size(); ++i) ++sizes[find(i)];
  OrbitSummary out;
  out.classes = sizes.size();
  for (const auto& [root, size] : sizes) out.orbit_sizes.push_back(size);
  return out;
}

// ---- invariant factors by determinantal divisors ----------------------

using Matrix = std::vector<std::vector<std::int64_t>>;

inline __int128 minor_det(const Matrix& m, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m[rows[0]][cols[0]];
  __int128 det = 0;
  std::vector<int> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    const __int128 cofactor =
        static_cast<__int128>(m[rows[0]][cols[j]]) * minor_det(m, sub_rows, sub_cols);
    det += (j % 2 == 0) ? cofactor : -cofactor;
  }
  return det;
}

inline bool next_combination(std::vector<int>& c, int n) {
  const int k = int(c.size());
  for (int i = k - 1; i >= 0; --i) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline unsigned __int128 u128_gcd(unsigned __int128 a, unsigned __int128 b) {
  while (b != 0) {
    const unsigned __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// d_1 | d_2 | ... via D_k = gcd of all k x k minors, f_k = D_k / D_{k-1}.
inline std::vector<std::int64_t> invariant_factors_by_minors(const Matrix& m) {
  if (m.empty() || m[0].empty()) return {};
  const int rows = int(m.size());
  const int cols = int(m[0].size());
  std::vector<std::int64_t> factors;
  unsigned __int128 prev_divisor = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    unsigned __int128 divisor = 0;
    std::vector<int> rc(k), cc(k);
    std::iota(rc.begin(), rc.end(), 0);
    do {
      std::iota(cc.begin(), cc.end(), 0);
      do {
        const __int128 det = minor_det(m, rc, cc);
        const unsigned __int128 mag =
            det < 0 ? static_cast<unsigned __int128>(-det)
                    : static_cast<unsigned __int128>(det);
        divisor = u128_gcd(divisor, mag);
      } while (next_combination(cc, cols));
    } while (next_combination(rc, rows));
    if (divisor == 0) break;  // rank reached
    factors.push_back(std::int64_t(divisor / prev_divisor));
    prev_divisor = divisor;
  }
  return factors;
}

// ---- random words over a presentation ---------------------------------

inline bm::Word random_word(std::mt19937_64& rng, const bm::BMPresentation& p,
                            int max_len) {
  std::vector<bm::Letter> alphabet;
  for (int i = 1; i <= p.alpha(); ++i)
    for (bool inv : {false, true})
      alphabet.push_back(bm::Letter::horizontal(i, inv));
  for (int i = 1; i <= p.beta(); ++i)
    for (bool inv : {false, true})
      alphabet.push_back(bm::Letter::vertical(i, inv));
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  bm::Word w;
  const int len = len_dist(rng);
  for (int i = 0; i < len; ++i) w.push_back(alphabet[pick(rng)]);
  return w;
}

}  // namespace oracle
