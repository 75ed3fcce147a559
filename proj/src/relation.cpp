#include "bm/relation.hpp"

#include <algorithm>
#include <stdexcept>

#include "bm/errors.hpp"

namespace bm {

LinkGraph link(std::span<const GeometricSquare> squares) {
  LinkGraph g;
  g.edges.reserve(squares.size() * 4);
  for (const auto& s : squares)
    for (const auto& e : corner_edges(s)) g.edges.push_back(e);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::string LinkFault::describe() const {
  switch (kind) {
    case Kind::WrongSquareCount:
      return "expected " + std::to_string(expected) + " squares, got " +
             std::to_string(got);
    case Kind::OutOfAmbient:
      return "square '" + to_string(*square) + "' uses letters outside the ambient";
    case Kind::RepeatedCorner:
      return "square '" + to_string(*square) + "' has repeated corner edges";
    case Kind::PairNotOnce:
      return "pair {" + to_string(pair->h) + "," + to_string(pair->v) +
             "} covered " + std::to_string(got) + " times, expected once";
  }
  return "unknown fault";
}

std::optional<LinkFault> diagnose_relation(
    std::span<const GeometricSquare> squares, int alpha, int beta) {
  const std::size_t want = std::size_t(alpha) * std::size_t(beta);
  if (squares.size() != want)
    return LinkFault{LinkFault::Kind::WrongSquareCount, want, squares.size(),
                     {}, {}};
  for (const auto& s : squares) {
    if (!in_ambient(s, alpha, beta))
      return LinkFault{LinkFault::Kind::OutOfAmbient, 0, 0, {}, s};
    if (s.has_repeated_corner())
      return LinkFault{LinkFault::Kind::RepeatedCorner, 0, 0, {}, s};
  }
  std::vector<int> count(std::size_t(4) * alpha * beta, 0);
  for (const auto& s : squares)
    for (const auto& e : corner_edges(s)) ++count[pair_index(e.h, e.v, beta)];
  for (int h = 0; h < 2 * alpha; ++h) {
    for (int v = 0; v < 2 * beta; ++v) {
      int idx = h * 2 * beta + v;
      if (count[idx] != 1) {
        LinkEdge e{Letter::horizontal(h / 2 + 1, h % 2 != 0),
                   Letter::vertical(v / 2 + 1, v % 2 != 0)};
        return LinkFault{LinkFault::Kind::PairNotOnce, 1,
                         std::size_t(count[idx]), e, {}};
      }
    }
  }
  return std::nullopt;
}

bool validate_relation(std::span<const GeometricSquare> squares, int alpha,
                       int beta) {
  return !diagnose_relation(squares, alpha, beta).has_value();
}

BMRelation BMRelation::unchecked(std::vector<GeometricSquare> squares,
                                 int alpha, int beta) {
  BMRelation r;
  r.alpha_ = alpha;
  r.beta_ = beta;
  r.squares_ = std::move(squares);
  std::sort(r.squares_.begin(), r.squares_.end());
  return r;
}

BMRelation BMRelation::checked(std::vector<GeometricSquare> squares, int alpha,
                               int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("alpha and beta must be >= 1");
  BMRelation r = unchecked(std::move(squares), alpha, beta);
  if (auto fault = diagnose_relation(r.squares_, alpha, beta))
    throw std::invalid_argument("not a BM relation: " + fault->describe());
  return r;
}

CornerLookup lookup_square(const BMRelation& r, Letter a, Letter b) {
  if (!a.is_horizontal() || !b.is_vertical())
    throw std::invalid_argument("lookup_square wants (horizontal, vertical)");
  std::optional<CornerLookup> found;
  for (const auto& s : r.squares()) {
    for (const auto& rep : s.representatives()) {
      if (rep.a == a && rep.b == b) {
        if (found)
          throw CorruptRelation("multiple squares start (" + to_string(a) +
                                ", " + to_string(b) + ")");
        found = CornerLookup{s, rep.a2, rep.b2};
      }
    }
  }
  if (!found)
    throw CorruptRelation("no square starts (" + to_string(a) + ", " +
                          to_string(b) + ")");
  return *found;
}

std::string to_string(const BMRelation& r) {
  std::string out;
  for (std::size_t i = 0; i < r.squares().size(); ++i) {
    if (i != 0) out += "; ";
    out += to_string(r.squares()[i]);
  }
  return out;
}

BMRelation parse_relation(std::string_view line, int alpha, int beta,
                          bool validate) {
  std::vector<GeometricSquare> squares;
  std::size_t start = 0;
  while (start <= line.size()) {
    std::size_t sep = line.find(';', start);
    std::string_view part = (sep == std::string_view::npos)
                                ? line.substr(start)
                                : line.substr(start, sep - start);
    squares.push_back(parse_square(part));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (validate) return BMRelation::checked(std::move(squares), alpha, beta);
  return BMRelation::unchecked(std::move(squares), alpha, beta);
}

}  // namespace bm
