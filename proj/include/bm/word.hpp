#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bm/letter.hpp"

namespace bm {

// A word in the generators and their inverses; empty = identity.
using Word = std::vector<Letter>;

Word inverse(const Word& w);
void free_reduce(Word& w);  // cancel adjacent x x^-1, in place
Word freely_reduced(Word w);
Word concat(const Word& u, const Word& v);

std::string to_string(const Word& w);  // space-separated letters; "" when empty
Word parse_word(std::string_view text);  // whitespace-separated letter tokens

}  // namespace bm
