#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bm/relation.hpp"
#include "bm/word.hpp"

namespace bm {

// Group presentation <a_1..a_alpha, b_1..b_beta | R> together with its
// rewriting table: the entry for (v, h) is the unique pair (h', v') with
// v h = h' v' in the group. Totality of the table is exactly the link
// condition on R.
class BMPresentation {
 public:
  // Builds the table from the four identified squares of each relator.
  // Throws CorruptRelation on a duplicate or missing key, which can only
  // happen when r bypassed validation.
  static BMPresentation from_relation(BMRelation r);

  int alpha() const { return relation_.alpha(); }
  int beta() const { return relation_.beta(); }
  const BMRelation& relation() const { return relation_; }

  // v vertical, h horizontal; returns (h', v') with v h = h' v'.
  std::pair<Letter, Letter> rewrite(Letter v, Letter h) const;

  // The unique representative of w: a freely reduced horizontal word followed
  // by a freely reduced vertical word. Computed by rewriting the leftmost
  // vertical-before-horizontal adjacency through the table, interleaved with
  // free reduction; each rewrite moves a horizontal letter strictly left, so
  // this terminates. Throws AmbientMismatch when w uses foreign letters.
  Word normal_form(Word w) const;

  std::vector<Letter> generators() const;   // a1..a_alpha, b1..b_beta
  std::vector<Word> relator_words() const;  // one 4-letter word per square

 private:
  BMPresentation() = default;

  BMRelation relation_;
  std::vector<std::pair<Letter, Letter>> table_;  // v.dense()*2alpha + h.dense()
};

// Named (2,2) presentations used throughout: gamma4, gamma30, gamma5, gamma10.
// Their relators are written over the compact alphabet a,b,c,d standing for
// a1,a2,b1,b2, with uppercase marking the inverse.
const std::vector<std::string>& preset_names();
bool is_preset_name(std::string_view name);
BMPresentation preset_presentation(std::string_view name);

// Parses a compact word like "acaC" into a1 b1 a1 B1.
Word parse_compact_word(std::string_view text);

}  // namespace bm
