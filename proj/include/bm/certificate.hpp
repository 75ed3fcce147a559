#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>

#include "bm/presentation.hpp"

namespace bm {

// Generator images defining a candidate homomorphism source -> target.
// Exactly one image per positive source generator.
struct GeneratorMap {
  BMPresentation source;
  BMPresentation target;
  std::map<Letter, Word> images;

  // Letter-wise substitution; inverted letters map to the inverse image.
  Word apply(const Word& w) const;
};

// True iff the image of every source relator is trivial in the target.
bool check_homomorphism(const GeneratorMap& m);
// Description of the first failing relator image, if any.
std::optional<std::string> homomorphism_failure(const GeneratorMap& m);

// A pair of generator maps in opposite directions. Verifying it proves the
// two groups isomorphic: both maps are homomorphisms and both compositions
// fix every generator.
struct IsoCertificate {
  GeneratorMap forward;
  GeneratorMap backward;
};

bool verify_isomorphism(const IsoCertificate& cert);
// The first failing check, if any, in a fixed order: forward homomorphism,
// backward homomorphism, backward∘forward on source generators,
// forward∘backward on target generators.
std::optional<std::string> isomorphism_failure(const IsoCertificate& cert);

// Certificate text format:
//   source: <preset name | level file with exactly one relation>
//   target: <preset name | level file>
//   fwd <gen> = <word>     (one per source generator)
//   bwd <gen> = <word>     (one per target generator)
// Generators may be written compactly (a, b, c, d) or indexed (a1, b2);
// words use the indexed letter syntax. '#' starts a comment.
IsoCertificate parse_certificate(std::istream& in);
IsoCertificate load_certificate(const std::string& path);

}  // namespace bm
