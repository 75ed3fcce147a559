#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bm/relation.hpp"

namespace bm {

// Relation files: a header line "#bm α=<α> β=<β> count=<n>", then one
// relation per line, squares joined by "; ". UTF-8, LF-terminated.
struct LevelFile {
  int alpha = 1;
  int beta = 1;
  std::vector<BMRelation> relations;  // in file order
};

std::string level_header(int alpha, int beta, std::uint64_t count);

void write_level(std::ostream& out, int alpha, int beta,
                 std::span<const BMRelation> relations);
void write_level_file(const std::string& path, int alpha, int beta,
                      std::span<const BMRelation> relations);
std::string serialize_level(int alpha, int beta,
                            std::span<const BMRelation> relations);

// Parses and checks the header count against the number of relation lines;
// with validate set, every relation must pass the link condition. Throws
// ParseError with the offending line number.
LevelFile read_level(std::istream& in, bool validate);
LevelFile read_level_file(const std::string& path, bool validate);

std::uint64_t fnv1a64(std::string_view bytes);
std::string file_digest_hex(const std::string& path);

}  // namespace bm
