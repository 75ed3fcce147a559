#include "bm/certificate.hpp"

#include <fstream>
#include <sstream>

#include "bm/errors.hpp"
#include "bm/level_io.hpp"

namespace bm {

Word GeneratorMap::apply(const Word& w) const {
  Word out;
  for (Letter x : w) {
    auto it = images.find(x.positive());
    if (it == images.end())
      throw AmbientMismatch("no image for generator '" +
                            to_string(x.positive()) + "'");
    if (x.inverted()) {
      const Word inv = inverse(it->second);
      out.insert(out.end(), inv.begin(), inv.end());
    } else {
      out.insert(out.end(), it->second.begin(), it->second.end());
    }
  }
  return out;
}

std::optional<std::string> homomorphism_failure(const GeneratorMap& m) {
  for (const auto& relator : m.source.relator_words()) {
    const Word image = m.apply(relator);
    const Word nf = m.target.normal_form(image);
    if (!nf.empty())
      return "image of relator '" + to_string(relator) + "' reduces to '" +
             to_string(nf) + "', not the empty word";
  }
  return std::nullopt;
}

bool check_homomorphism(const GeneratorMap& m) {
  return !homomorphism_failure(m).has_value();
}

std::optional<std::string> isomorphism_failure(const IsoCertificate& cert) {
  if (auto fail = homomorphism_failure(cert.forward))
    return "forward map: " + *fail;
  if (auto fail = homomorphism_failure(cert.backward))
    return "backward map: " + *fail;
  for (Letter g : cert.forward.source.generators()) {
    const Word round = cert.backward.apply(cert.forward.apply(Word{g}));
    const Word nf = cert.forward.source.normal_form(round);
    if (nf != Word{g})
      return "backward(forward(" + to_string(g) + ")) = '" + to_string(nf) +
             "', not the generator";
  }
  for (Letter g : cert.backward.source.generators()) {
    const Word round = cert.forward.apply(cert.backward.apply(Word{g}));
    const Word nf = cert.backward.source.normal_form(round);
    if (nf != Word{g})
      return "forward(backward(" + to_string(g) + ")) = '" + to_string(nf) +
             "', not the generator";
  }
  return std::nullopt;
}

bool verify_isomorphism(const IsoCertificate& cert) {
  return !isomorphism_failure(cert).has_value();
}

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
  const auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

BMPresentation resolve_presentation(const std::string& ref, std::size_t line_no) {
  if (is_preset_name(ref)) return preset_presentation(ref);
  LevelFile level;
  try {
    level = read_level_file(ref, /*validate=*/true);
  } catch (const ParseError& e) {
    throw ParseError("presentation '" + ref + "': " + e.what(), line_no);
  } catch (const std::exception& e) {
    throw ParseError("presentation '" + ref + "' is neither a preset nor a "
                     "readable level file (" + e.what() + ")", line_no);
  }
  if (level.relations.size() != 1)
    throw ParseError("presentation file '" + ref + "' must contain exactly one "
                     "relation, found " + std::to_string(level.relations.size()),
                     line_no);
  return BMPresentation::from_relation(level.relations.front());
}

// Generator tokens come compact ("a".."d") or indexed ("a1", "b2").
Letter parse_generator(const std::string& tok, const BMPresentation& pres,
                       std::size_t line_no) {
  Letter g;
  try {
    if (tok.size() == 1) {
      const Word w = parse_compact_word(tok);
      g = w.at(0);
    } else {
      g = parse_letter(tok);
    }
  } catch (const std::exception&) {
    throw ParseError("bad generator token '" + tok + "'", line_no);
  }
  if (g.inverted() || !in_ambient(g, pres.alpha(), pres.beta()))
    throw ParseError("'" + tok + "' is not a generator of the presentation",
                     line_no);
  return g;
}

Word parse_image(const std::string& text, const BMPresentation& pres,
                 std::size_t line_no) {
  Word w;
  try {
    w = parse_word(text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line_no);
  }
  for (Letter x : w)
    if (!in_ambient(x, pres.alpha(), pres.beta()))
      throw ParseError("image word uses unknown generator '" + to_string(x) +
                       "'", line_no);
  return w;
}

}  // namespace

IsoCertificate parse_certificate(std::istream& in) {
  std::optional<BMPresentation> source, target;
  std::map<Letter, Word> fwd, bwd;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = strip(raw);
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string head;
    fields >> head;
    if (head == "source:" || head == "target:") {
      std::string ref;
      fields >> ref;
      if (ref.empty()) throw ParseError("missing presentation name", line_no);
      auto& slot = (head == "source:") ? source : target;
      if (slot) throw ParseError("duplicate " + head.substr(0, 6) + " line", line_no);
      slot = resolve_presentation(ref, line_no);
    } else if (head == "fwd" || head == "bwd") {
      if (!source || !target)
        throw ParseError("source: and target: must come before the maps",
                         line_no);
      std::string gen, eq;
      fields >> gen >> eq;
      if (eq != "=") throw ParseError("expected '<gen> = <word>'", line_no);
      std::string rest;
      std::getline(fields, rest);
      const bool is_fwd = head == "fwd";
      const BMPresentation& dom = is_fwd ? *source : *target;
      const BMPresentation& cod = is_fwd ? *target : *source;
      const Letter g = parse_generator(gen, dom, line_no);
      const Word image = parse_image(rest, cod, line_no);
      auto& images = is_fwd ? fwd : bwd;
      if (!images.emplace(g, image).second)
        throw ParseError("duplicate image for generator '" + gen + "'", line_no);
    } else {
      throw ParseError("unrecognized line '" + line + "'", line_no);
    }
  }
  if (!source || !target) throw ParseError("missing source: or target: line");
  for (Letter g : source->generators())
    if (!fwd.contains(g))
      throw ParseError("missing fwd image for generator '" + to_string(g) + "'");
  for (Letter g : target->generators())
    if (!bwd.contains(g))
      throw ParseError("missing bwd image for generator '" + to_string(g) + "'");
  IsoCertificate cert{GeneratorMap{*source, *target, std::move(fwd)},
                      GeneratorMap{*target, *source, std::move(bwd)}};
  return cert;
}

IsoCertificate load_certificate(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open certificate file '" + path + "'");
  return parse_certificate(in);
}

}  // namespace bm
