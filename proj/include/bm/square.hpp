#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bm/letter.hpp"

namespace bm {

// An oriented square read off as horizontal, vertical, horizontal, vertical.
struct SquareQuad {
  Letter a, b, a2, b2;

  constexpr std::uint64_t packed() const {
    return (std::uint64_t(a.code()) << 48) | (std::uint64_t(b.code()) << 32) |
           (std::uint64_t(a2.code()) << 16) | std::uint64_t(b2.code());
  }
  constexpr bool well_formed() const {
    return a.is_horizontal() && b.is_vertical() && a2.is_horizontal() &&
           b2.is_vertical();
  }

  friend constexpr bool operator==(const SquareQuad&, const SquareQuad&) = default;
  friend constexpr auto operator<=>(const SquareQuad& l, const SquareQuad& r) {
    return l.packed() <=> r.packed();
  }
};

// One corner of a square: an unordered pair across the bipartition, stored
// with the horizontal endpoint first.
struct LinkEdge {
  Letter h, v;

  friend constexpr bool operator==(const LinkEdge&, const LinkEdge&) = default;
  friend constexpr auto operator<=>(const LinkEdge&, const LinkEdge&) = default;
};

// The identification class of an oriented square under reflections along its
// edges. Stored as the least representative under the letter order, so equal
// classes compare equal and sorting is canonical.
class GeometricSquare {
 public:
  explicit GeometricSquare(const SquareQuad& q);

  const SquareQuad& quad() const { return canon_; }

  // The raw 4-tuple of identified squares of q; entries may repeat.
  static std::array<SquareQuad, 4> identified_quads(const SquareQuad& q);

  // Distinct representatives, sorted; size 2 (shape [xyxy]) or 4.
  std::vector<SquareQuad> representatives() const;

  // True for squares of shape [xyxy]; such a square contributes only two
  // distinct corner edges (each twice) and can never sit in a relation.
  bool has_repeated_corner() const;

  friend bool operator==(const GeometricSquare&, const GeometricSquare&) = default;
  friend auto operator<=>(const GeometricSquare& l, const GeometricSquare& r) {
    return l.canon_ <=> r.canon_;
  }

 private:
  SquareQuad canon_;
};

GeometricSquare canonicalize(const SquareQuad& q);

// The four corner edges, duplicates preserved. The multiset is the same for
// every representative of a class.
std::array<LinkEdge, 4> corner_edges_of_quad(const SquareQuad& q);
std::array<LinkEdge, 4> corner_edges(const GeometricSquare& s);

// Every identification class over the (2a)^2 (2b)^2 oriented squares, each
// exactly once, sorted canonically.
std::vector<GeometricSquare> all_squares(int alpha, int beta);

constexpr bool in_ambient(const SquareQuad& q, int alpha, int beta) {
  return in_ambient(q.a, alpha, beta) && in_ambient(q.b, alpha, beta) &&
         in_ambient(q.a2, alpha, beta) && in_ambient(q.b2, alpha, beta);
}
inline bool in_ambient(const GeometricSquare& s, int alpha, int beta) {
  return in_ambient(s.quad(), alpha, beta);
}

std::string to_string(const SquareQuad& q);  // "a1 b1 A1 B1"
std::string to_string(const GeometricSquare& s);
SquareQuad parse_quad(std::string_view text);
GeometricSquare parse_square(std::string_view text);

}  // namespace bm
