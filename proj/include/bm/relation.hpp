#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bm/square.hpp"

namespace bm {

// Undirected bipartite multigraph on A^{±1} ⊔ B^{±1}; edges sorted with
// duplicates kept.
struct LinkGraph {
  std::vector<LinkEdge> edges;

  friend bool operator==(const LinkGraph&, const LinkGraph&) = default;
};

LinkGraph link(std::span<const GeometricSquare> squares);

// Index of a cross pair (x horizontal, y vertical) in row-major order; the
// index order is the pair order used by the enumerator and diagnostics.
constexpr int pair_index(Letter h, Letter v, int beta) {
  return h.dense() * (2 * beta) + v.dense();
}

// Why a square set fails the link condition. The reported pair is the least
// violated one under the pair order.
struct LinkFault {
  enum class Kind {
    WrongSquareCount,  // |S| != alpha*beta
    OutOfAmbient,      // a letter index exceeds alpha/beta
    RepeatedCorner,    // a square of shape [xyxy]
    PairNotOnce,       // some cross pair covered != exactly once
  };

  Kind kind;
  std::size_t expected = 0;
  std::size_t got = 0;
  std::optional<LinkEdge> pair;
  std::optional<GeometricSquare> square;

  std::string describe() const;
};

// True iff |squares| = alpha*beta and the corner edges cover every cross pair
// of K_{2alpha,2beta} exactly once.
bool validate_relation(std::span<const GeometricSquare> squares, int alpha,
                       int beta);
std::optional<LinkFault> diagnose_relation(
    std::span<const GeometricSquare> squares, int alpha, int beta);

// A set of alpha*beta geometric squares whose link is K_{2alpha,2beta}.
// Squares are kept sorted; comparison is (alpha, beta, squares).
class BMRelation {
 public:
  BMRelation() = default;

  // Validates the link condition; throws std::invalid_argument on failure.
  static BMRelation checked(std::vector<GeometricSquare> squares, int alpha,
                            int beta);
  // Caller guarantees validity (enumerator output, expansion children).
  static BMRelation unchecked(std::vector<GeometricSquare> squares, int alpha,
                              int beta);

  int alpha() const { return alpha_; }
  int beta() const { return beta_; }
  const std::vector<GeometricSquare>& squares() const { return squares_; }

  friend bool operator==(const BMRelation&, const BMRelation&) = default;
  friend auto operator<=>(const BMRelation&, const BMRelation&) = default;

 private:
  int alpha_ = 0;
  int beta_ = 0;
  std::vector<GeometricSquare> squares_;
};

// The unique square of r with a representative starting (a, b, ., .), plus
// that representative's closing letters. Throws CorruptRelation when zero or
// multiple squares match (possible only for data that bypassed validation).
struct CornerLookup {
  GeometricSquare square;
  Letter a_out;
  Letter b_out;
};
CornerLookup lookup_square(const BMRelation& r, Letter a, Letter b);

std::string to_string(const BMRelation& r);  // "a1 b1 A1 B1; a1 b2 A1 B2"
BMRelation parse_relation(std::string_view line, int alpha, int beta,
                          bool validate = true);

}  // namespace bm
