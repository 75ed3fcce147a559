#include "bm/level_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bm/errors.hpp"

namespace bm {

std::string level_header(int alpha, int beta, std::uint64_t count) {
  return "#bm α=" + std::to_string(alpha) + " β=" + std::to_string(beta) +
         " count=" + std::to_string(count);
}

void write_level(std::ostream& out, int alpha, int beta,
                 std::span<const BMRelation> relations) {
  out << level_header(alpha, beta, relations.size()) << '\n';
  for (const auto& r : relations) out << to_string(r) << '\n';
}

std::string serialize_level(int alpha, int beta,
                            std::span<const BMRelation> relations) {
  std::ostringstream out;
  write_level(out, alpha, beta, relations);
  return out.str();
}

void write_level_file(const std::string& path, int alpha, int beta,
                      std::span<const BMRelation> relations) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  write_level(out, alpha, beta, relations);
  out.flush();
  if (!out) throw std::runtime_error("short write to '" + path + "'");
}

namespace {

// Consumes "<key>=<integer>" from text after the given prefix.
std::uint64_t parse_header_field(std::string_view& text, std::string_view key) {
  if (!text.starts_with(key))
    throw ParseError("malformed header: expected '" + std::string(key) + "'", 1);
  text.remove_prefix(key.size());
  std::uint64_t value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data())
    throw ParseError("malformed header: bad number after '" + std::string(key) +
                     "'", 1);
  text.remove_prefix(std::size_t(ptr - text.data()));
  return value;
}

}  // namespace

LevelFile read_level(std::istream& in, bool validate) {
  std::string raw;
  if (!std::getline(in, raw)) throw ParseError("empty input", 1);
  if (!raw.empty() && raw.back() == '\r') raw.pop_back();
  std::string_view header = raw;
  const std::uint64_t alpha = parse_header_field(header, "#bm α=");
  const std::uint64_t beta = parse_header_field(header, " β=");
  const std::uint64_t count = parse_header_field(header, " count=");
  if (!header.empty()) throw ParseError("malformed header: trailing text", 1);
  if (alpha < 1 || beta < 1 || alpha > 64 || beta > 64)
    throw ParseError("header ambient out of range", 1);

  LevelFile level;
  level.alpha = int(alpha);
  level.beta = int(beta);
  std::size_t line_no = 1;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    try {
      level.relations.push_back(
          parse_relation(raw, level.alpha, level.beta, validate));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), line_no);
    }
  }
  if (level.relations.size() != count)
    throw ParseError("header count " + std::to_string(count) +
                     " does not match " + std::to_string(level.relations.size()) +
                     " relation lines");
  return level;
}

LevelFile read_level_file(const std::string& path, bool validate) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_level(in, validate);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::string file_digest_hex(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string data = buf.str();
  const std::uint64_t h = fnv1a64(data);
  char out[17];
  std::snprintf(out, sizeof(out), "%016llx", static_cast<unsigned long long>(h));
  return std::string(out);
}

}  // namespace bm
