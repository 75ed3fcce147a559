#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bm/presentation.hpp"

namespace bm {

// Free rank plus torsion invariant factors (each >= 2, each dividing the
// next); canonical for a given group.
struct AbelianInvariants {
  int free_rank = 0;
  std::vector<std::int64_t> torsion;

  std::string to_string() const;  // "Z^1 ⊕ Z/2 ⊕ Z/4", "0" when trivial

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
  friend auto operator<=>(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Invariant factors d_1 | d_2 | ... | d_r of an integer matrix (the nonzero
// diagonal of its Smith form, ones included); exact arithmetic with overflow
// checks.
std::vector<std::int64_t> smith_invariant_factors(
    std::vector<std::vector<std::int64_t>> m);

// Exponent-sum matrix of the relators: rows are relators, columns the
// generators a_1..a_alpha, b_1..b_beta.
std::vector<std::vector<std::int64_t>> relator_exponent_matrix(
    const BMPresentation& p);

AbelianInvariants abelianization(const BMPresentation& p);

struct AbelianClass {
  AbelianInvariants invariants;
  std::uint64_t count = 0;

  friend bool operator==(const AbelianClass&, const AbelianClass&) = default;
};

// Partition of the relations by the abelianization of their groups, ordered
// by invariants. All relations must share one ambient.
std::vector<AbelianClass> classify_by_abelianization(
    std::span<const BMRelation> relations);

}  // namespace bm
