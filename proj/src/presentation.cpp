#include "bm/presentation.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "bm/errors.hpp"

namespace bm {

BMPresentation BMPresentation::from_relation(BMRelation r) {
  BMPresentation p;
  const int alpha = r.alpha();
  const int beta = r.beta();
  const std::size_t slots = std::size_t(4) * alpha * beta;
  p.table_.assign(slots, {Letter{}, Letter{}});
  std::vector<bool> filled(slots, false);
  for (const auto& s : r.squares()) {
    // Each identified square x1 y1 x2 y2 = 1 gives the rule y1 x2 -> x1^-1 y2^-1.
    for (const auto& q : GeometricSquare::identified_quads(s.quad())) {
      if (!in_ambient(q, alpha, beta))
        throw CorruptRelation("square '" + to_string(q) +
                              "' outside the ambient");
      const std::size_t key =
          std::size_t(q.b.dense()) * (2 * alpha) + q.a2.dense();
      if (filled[key])
        throw CorruptRelation("duplicate rewriting rule for (" +
                              to_string(q.b) + ", " + to_string(q.a2) + ")");
      filled[key] = true;
      p.table_[key] = {q.a.inverse(), q.b2.inverse()};
    }
  }
  if (std::find(filled.begin(), filled.end(), false) != filled.end())
    throw CorruptRelation("rewriting table incomplete");
  p.relation_ = std::move(r);
  return p;
}

std::pair<Letter, Letter> BMPresentation::rewrite(Letter v, Letter h) const {
  if (!v.is_vertical() || !h.is_horizontal() ||
      !in_ambient(v, alpha(), beta()) || !in_ambient(h, alpha(), beta()))
    throw AmbientMismatch("rewrite wants (vertical, horizontal) in ambient");
  return table_[std::size_t(v.dense()) * (2 * alpha()) + h.dense()];
}

Word BMPresentation::normal_form(Word w) const {
  for (Letter x : w)
    if (!in_ambient(x, alpha(), beta()))
      throw AmbientMismatch("word uses letter '" + to_string(x) +
                            "' outside the presentation's alphabet");
  free_reduce(w);
  for (;;) {
    std::size_t i = 0;
    bool found = false;
    for (; i + 1 < w.size(); ++i) {
      if (w[i].is_vertical() && w[i + 1].is_horizontal()) {
        found = true;
        break;
      }
    }
    if (!found) break;
    const auto [h, v] = rewrite(w[i], w[i + 1]);
    w[i] = h;
    w[i + 1] = v;
    free_reduce(w);
  }
  return w;
}

std::vector<Letter> BMPresentation::generators() const {
  std::vector<Letter> out;
  for (int i = 1; i <= alpha(); ++i) out.push_back(Letter::horizontal(i));
  for (int i = 1; i <= beta(); ++i) out.push_back(Letter::vertical(i));
  return out;
}

std::vector<Word> BMPresentation::relator_words() const {
  std::vector<Word> out;
  out.reserve(relation_.squares().size());
  for (const auto& s : relation_.squares()) {
    const SquareQuad& q = s.quad();
    out.push_back(Word{q.a, q.b, q.a2, q.b2});
  }
  return out;
}

Word parse_compact_word(std::string_view text) {
  Word out;
  for (char c : text) {
    if (c == ' ' || c == '\t') continue;
    switch (c) {
      case 'a': out.push_back(Letter::horizontal(1)); break;
      case 'A': out.push_back(Letter::horizontal(1, true)); break;
      case 'b': out.push_back(Letter::horizontal(2)); break;
      case 'B': out.push_back(Letter::horizontal(2, true)); break;
      case 'c': out.push_back(Letter::vertical(1)); break;
      case 'C': out.push_back(Letter::vertical(1, true)); break;
      case 'd': out.push_back(Letter::vertical(2)); break;
      case 'D': out.push_back(Letter::vertical(2, true)); break;
      default:
        throw ParseError("compact word '" + std::string(text) +
                         "': unknown letter '" + std::string(1, c) + "'");
    }
  }
  return out;
}

namespace {

struct PresetDef {
  const char* name;
  std::array<const char*, 4> relators;
};

// The four (2,2) groups under study, relators over a,b,c,d = a1,a2,b1,b2.
constexpr PresetDef kPresets[] = {
    {"gamma4", {"acaC", "adaD", "bcbd", "bCbD"}},
    {"gamma30", {"acad", "aCaD", "bcbd", "bCbD"}},
    {"gamma5", {"acaC", "adaD", "bcBc", "bdBd"}},
    {"gamma10", {"acaC", "adAd", "bcbC", "bdBD"}},
};

const PresetDef* find_preset(std::string_view name) {
  for (const auto& def : kPresets)
    if (name == def.name) return &def;
  return nullptr;
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& def : kPresets) out.emplace_back(def.name);
    return out;
  }();
  return names;
}

bool is_preset_name(std::string_view name) { return find_preset(name) != nullptr; }

BMPresentation preset_presentation(std::string_view name) {
  const PresetDef* def = find_preset(name);
  if (def == nullptr)
    throw std::invalid_argument("unknown preset '" + std::string(name) +
                                "'; expected one of gamma4, gamma30, gamma5, gamma10");
  std::vector<GeometricSquare> squares;
  for (const char* relator : def->relators) {
    const Word w = parse_compact_word(relator);
    squares.push_back(canonicalize({w[0], w[1], w[2], w[3]}));
  }
  return BMPresentation::from_relation(
      BMRelation::checked(std::move(squares), 2, 2));
}

}  // namespace bm
