#include "bm/square.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "bm/errors.hpp"

namespace bm {

std::array<SquareQuad, 4> GeometricSquare::identified_quads(const SquareQuad& q) {
  const Letter a = q.a, b = q.b, a2 = q.a2, b2 = q.b2;
  return {
      SquareQuad{a, b, a2, b2},
      SquareQuad{a2, b2, a, b},
      SquareQuad{a.inverse(), b2.inverse(), a2.inverse(), b.inverse()},
      SquareQuad{a2.inverse(), b.inverse(), a.inverse(), b2.inverse()},
  };
}

GeometricSquare::GeometricSquare(const SquareQuad& q) {
  if (!q.well_formed())
    throw std::invalid_argument(
        "square positions must alternate horizontal/vertical");
  const auto orbit = identified_quads(q);
  canon_ = *std::min_element(orbit.begin(), orbit.end());
}

std::vector<SquareQuad> GeometricSquare::representatives() const {
  auto orbit = identified_quads(canon_);
  std::vector<SquareQuad> reps(orbit.begin(), orbit.end());
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  return reps;
}

bool GeometricSquare::has_repeated_corner() const {
  return canon_.a == canon_.a2 && canon_.b == canon_.b2;
}

GeometricSquare canonicalize(const SquareQuad& q) { return GeometricSquare(q); }

std::array<LinkEdge, 4> corner_edges_of_quad(const SquareQuad& q) {
  return {
      LinkEdge{q.a.inverse(), q.b},
      LinkEdge{q.a2, q.b.inverse()},
      LinkEdge{q.a2.inverse(), q.b2},
      LinkEdge{q.a, q.b2.inverse()},
  };
}

std::array<LinkEdge, 4> corner_edges(const GeometricSquare& s) {
  return corner_edges_of_quad(s.quad());
}

std::vector<GeometricSquare> all_squares(int alpha, int beta) {
  if (alpha < 1 || beta < 1)
    throw std::invalid_argument("alpha and beta must be >= 1");
  std::vector<Letter> hs, vs;
  for (int i = 1; i <= alpha; ++i)
    for (bool inv : {false, true}) hs.push_back(Letter::horizontal(i, inv));
  for (int i = 1; i <= beta; ++i)
    for (bool inv : {false, true}) vs.push_back(Letter::vertical(i, inv));

  std::vector<GeometricSquare> out;
  out.reserve(hs.size() * vs.size() * hs.size() * vs.size());
  for (Letter a : hs)
    for (Letter b : vs)
      for (Letter a2 : hs)
        for (Letter b2 : vs) out.push_back(canonicalize({a, b, a2, b2}));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const SquareQuad& q) {
  return to_string(q.a) + " " + to_string(q.b) + " " + to_string(q.a2) + " " +
         to_string(q.b2);
}

std::string to_string(const GeometricSquare& s) { return to_string(s.quad()); }

SquareQuad parse_quad(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tok;
  std::array<Letter, 4> letters;
  for (int i = 0; i < 4; ++i) {
    if (!(in >> tok))
      throw ParseError("square '" + std::string(text) + "': expected 4 letters");
    letters[i] = parse_letter(tok);
  }
  if (in >> tok)
    throw ParseError("square '" + std::string(text) + "': trailing token '" +
                     tok + "'");
  SquareQuad q{letters[0], letters[1], letters[2], letters[3]};
  if (!q.well_formed())
    throw ParseError("square '" + std::string(text) +
                     "': letters must alternate a.../b...");
  return q;
}

GeometricSquare parse_square(std::string_view text) {
  return canonicalize(parse_quad(text));
}

}  // namespace bm
