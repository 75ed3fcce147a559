#include "bm/extension.hpp"

#include <algorithm>
#include <stdexcept>

#include "bm/errors.hpp"

namespace bm {

SquareSplit split_square_from(const SquareQuad& rep, int beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  if (!in_ambient(rep, 1, beta))
    throw AmbientMismatch("square '" + to_string(rep) +
                          "' is not in GS_{1," + std::to_string(beta) + "}");
  const Letter fresh = Letter::vertical(beta + 1);
  std::array<GeometricSquare, 2> first{
      canonicalize({rep.a, fresh, rep.a2, rep.b2}),
      canonicalize({rep.a, rep.b, rep.a2, fresh.inverse()})};
  std::array<GeometricSquare, 2> second{
      canonicalize({rep.a, fresh.inverse(), rep.a2, rep.b2}),
      canonicalize({rep.a, rep.b, rep.a2, fresh})};
  SquareSplit out{{first, second}};
  for (auto& pair : out.pairs)
    if (pair[1] < pair[0]) std::swap(pair[0], pair[1]);
  if (out.pairs[1] < out.pairs[0]) std::swap(out.pairs[0], out.pairs[1]);
  return out;
}

SquareSplit split_square(const GeometricSquare& s, int beta) {
  return split_square_from(s.quad(), beta);
}

namespace {

void require_tall_ambient(const BMRelation& r) {
  if (r.alpha() != 1)
    throw AmbientMismatch("extension is defined for (1,beta) relations only");
}

}  // namespace

std::vector<BMRelation> append_extensions(const BMRelation& r) {
  require_tall_ambient(r);
  const int beta = r.beta();
  const Letter h = Letter::horizontal(1);
  const Letter f = Letter::vertical(beta + 1);
  const std::array<GeometricSquare, 3> fresh_squares{
      canonicalize({h, f, h.inverse(), f.inverse()}),
      canonicalize({h, f, h, f.inverse()}),
      canonicalize({h, f, h.inverse(), f}),
  };
  std::vector<BMRelation> out;
  out.reserve(3);
  for (const auto& s : fresh_squares) {
    std::vector<GeometricSquare> squares = r.squares();
    squares.push_back(s);
    out.push_back(BMRelation::unchecked(std::move(squares), 1, beta + 1));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BMRelation> split_extensions(const BMRelation& r) {
  require_tall_ambient(r);
  const int beta = r.beta();
  std::vector<BMRelation> out;
  out.reserve(2 * std::size_t(beta));
  for (std::size_t i = 0; i < r.squares().size(); ++i) {
    const SquareSplit split = split_square(r.squares()[i], beta);
    for (const auto& pair : split.pairs) {
      std::vector<GeometricSquare> squares;
      squares.reserve(r.squares().size() + 1);
      for (std::size_t j = 0; j < r.squares().size(); ++j)
        if (j != i) squares.push_back(r.squares()[j]);
      squares.push_back(pair[0]);
      squares.push_back(pair[1]);
      out.push_back(BMRelation::unchecked(std::move(squares), 1, beta + 1));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<BMRelation> all_extensions(const BMRelation& r) {
  std::vector<BMRelation> out = append_extensions(r);
  std::vector<BMRelation> split = split_extensions(r);
  out.insert(out.end(), std::make_move_iterator(split.begin()),
             std::make_move_iterator(split.end()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RelationLevel first_level() {
  const Letter a = Letter::horizontal(1);
  const Letter b = Letter::vertical(1);
  std::vector<BMRelation> relations{
      BMRelation::unchecked({canonicalize({a, b, a.inverse(), b.inverse()})}, 1, 1),
      BMRelation::unchecked({canonicalize({a, b, a, b.inverse()})}, 1, 1),
      BMRelation::unchecked({canonicalize({a, b, a.inverse(), b})}, 1, 1),
  };
  std::sort(relations.begin(), relations.end());
  return RelationLevel{1, std::move(relations)};
}

RelationLevel build_next_level(const RelationLevel& level) {
  const int beta = level.beta;
  if (beta < 1) throw std::invalid_argument("level beta must be >= 1");
  if (beta + 1 >= 8)
    throw BudgetExceeded(
        "refusing to materialize level " + std::to_string(beta + 1) +
        " (34M+ relations); use a count-only run");
  RelationLevel next;
  next.beta = beta + 1;
  const std::size_t factor = std::size_t(3 + 2 * beta);
  next.relations.reserve(factor * level.relations.size());
  for (const auto& r : level.relations) {
    auto children = all_extensions(r);
    next.relations.insert(next.relations.end(),
                          std::make_move_iterator(children.begin()),
                          std::make_move_iterator(children.end()));
  }
  std::sort(next.relations.begin(), next.relations.end());
  const bool collision =
      std::adjacent_find(next.relations.begin(), next.relations.end()) !=
      next.relations.end();
  if (collision || next.relations.size() != factor * level.relations.size())
    throw LevelError(
        "extension union is not disjoint with the expected cardinality; "
        "input was not a complete valid level");
  return next;
}

unsigned __int128 closed_form_count(int beta) {
  if (beta < 1) throw std::invalid_argument("beta must be >= 1");
  constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
  unsigned __int128 n = 1;
  for (int i = 1; i <= beta; ++i) {
    const unsigned __int128 factor = 2 * i + 1;
    if (n > kMax / factor)
      throw std::overflow_error("closed_form_count overflows 128 bits");
    n *= factor;
  }
  return n;
}

std::string to_decimal(unsigned __int128 value) {
  if (value == 0) return "0";
  std::string out;
  while (value != 0) {
    out.push_back(char('0' + int(value % 10)));
    value /= 10;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

}  // namespace bm
