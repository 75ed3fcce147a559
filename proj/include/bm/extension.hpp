#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bm/relation.hpp"

namespace bm {

// The two ways to split a square of GS_{1,beta} across the fresh vertical
// letter b_{beta+1}: each pair of squares contributes exactly the corners of
// the original square plus those of [a b+ a' b+^-1]. The result does not
// depend on the representative the split is computed from.
struct SquareSplit {
  // Normalized: each pair sorted, pairs sorted.
  std::array<std::array<GeometricSquare, 2>, 2> pairs;

  friend bool operator==(const SquareSplit&, const SquareSplit&) = default;
};

// Throws AmbientMismatch when s is not in GS_{1,beta} (wrong horizontal
// index, or a vertical index above beta such as the fresh letter itself).
SquareSplit split_square(const GeometricSquare& s, int beta);
// The same map applied to one specific representative.
SquareSplit split_square_from(const SquareQuad& rep, int beta);

// Children of a (1,beta) relation at (1,beta+1) that append one new square on
// the fresh letter; always 3 of them.
std::vector<BMRelation> append_extensions(const BMRelation& r);

// Children that replace one square of r by half of its split; 2*beta distinct
// results for a valid r. Sorted.
std::vector<BMRelation> split_extensions(const BMRelation& r);

// All children: append_extensions ∪ split_extensions, sorted; exactly
// 3 + 2*beta for a valid r (the two parts are disjoint: the fresh letter
// occurs in one square of an append child but two squares of a split child).
std::vector<BMRelation> all_extensions(const BMRelation& r);

// A complete set R_{1,beta}, sorted canonically.
struct RelationLevel {
  int beta = 1;
  std::vector<BMRelation> relations;
};

// R_{1,1}: the three one-square relations.
RelationLevel first_level();

// The disjoint union of all_extensions over a complete level; checks the
// cardinality identity |next| = (3+2*beta)*|level| and throws LevelError when
// it fails (the input was not a complete valid level). Materializing a level
// with beta >= 8 (34M+ relations) is refused with BudgetExceeded.
RelationLevel build_next_level(const RelationLevel& level);

// Closed-form count 3*5*...*(2*beta+1) of (1,beta)-BM relations; exact, with
// overflow checks (128-bit arithmetic holds every beta <= 37).
unsigned __int128 closed_form_count(int beta);

std::string to_decimal(unsigned __int128 value);

}  // namespace bm
