#include "bm/word.hpp"

#include <sstream>

namespace bm {

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

void free_reduce(Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  }
  w = std::move(out);
}

Word freely_reduced(Word w) {
  free_reduce(w);
  return w;
}

Word concat(const Word& u, const Word& v) {
  Word out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i != 0) out += ' ';
    out += to_string(w[i]);
  }
  return out;
}

Word parse_word(std::string_view text) {
  std::istringstream in{std::string(text)};
  Word out;
  std::string tok;
  while (in >> tok) out.push_back(parse_letter(tok));
  return out;
}

}  // namespace bm
