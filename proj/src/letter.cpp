#include "bm/letter.hpp"

#include <cctype>

#include "bm/errors.hpp"

namespace bm {

std::string to_string(Letter x) {
  char initial = x.is_horizontal() ? 'a' : 'b';
  if (x.inverted()) initial = static_cast<char>(std::toupper(initial));
  return initial + std::to_string(x.index());
}

Letter parse_letter(std::string_view text) {
  if (text.empty()) throw ParseError("empty letter");
  char c = text[0];
  Axis axis;
  bool inverted;
  switch (c) {
    case 'a': axis = Axis::Horizontal; inverted = false; break;
    case 'A': axis = Axis::Horizontal; inverted = true; break;
    case 'b': axis = Axis::Vertical; inverted = false; break;
    case 'B': axis = Axis::Vertical; inverted = true; break;
    default:
      throw ParseError("bad letter '" + std::string(text) +
                       "': must start with a/A/b/B");
  }
  if (text.size() < 2)
    throw ParseError("bad letter '" + std::string(text) + "': missing index");
  int index = 0;
  for (std::size_t i = 1; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("bad letter '" + std::string(text) +
                       "': index must be decimal digits");
    index = index * 10 + (text[i] - '0');
    if (index > Letter::kMaxIndex)
      throw ParseError("bad letter '" + std::string(text) + "': index too large");
  }
  if (index < 1)
    throw ParseError("bad letter '" + std::string(text) + "': index must be >= 1");
  return Letter(axis, index, inverted);
}

}  // namespace bm
