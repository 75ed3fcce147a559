// Command-line surface over the bm library: enumeration, level building,
// file verification, normal forms, abelianization and certificate checks.
//
// Exit codes: 0 success/VERIFIED, 1 verification failure, 2 usage or parse
// error, 3 resource budget exceeded.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "bm/abelian.hpp"
#include "bm/certificate.hpp"
#include "bm/enumerate.hpp"
#include "bm/errors.hpp"
#include "bm/extension.hpp"
#include "bm/level_io.hpp"
#include "bm/presentation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_ms(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                               start)
      .count();
}

// One stable machine-readable line per command, on stderr so stdout stays
// golden-testable.
void report(const std::string& cmd, int alpha, int beta, int jobs,
            std::int64_t ms, std::uint64_t count,
            const std::optional<std::string>& out_path) {
  std::cerr << "# report cmd=" << cmd << " ambient=(" << alpha << "," << beta
            << ") jobs=" << jobs << " elapsed_ms=" << ms << " count=" << count;
  if (out_path)
    std::cerr << " out=" << *out_path
              << " digest=" << bm::file_digest_hex(*out_path);
  std::cerr << '\n';
}

struct GsArgs {
  int alpha = 1, beta = 1;
};

int run_gs(const GsArgs& args) {
  for (const auto& s : bm::all_squares(args.alpha, args.beta))
    std::cout << bm::to_string(s) << '\n';
  return kExitOk;
}

struct EnumArgs {
  int alpha = 1, beta = 1;
  bool count_only = false;
  std::optional<std::string> out_path;
  int jobs = 0;
  std::optional<std::uint64_t> max_solutions;
};

int run_enum(const EnumArgs& args) {
  const auto start = Clock::now();
  bm::EnumConfig config{args.jobs, args.max_solutions};
  const int jobs = bm::resolve_jobs(config.jobs);
  if (args.count_only) {
    const std::uint64_t n = bm::count_relations(args.alpha, args.beta, config);
    std::cout << "R(" << args.alpha << "," << args.beta << ") = " << n << '\n';
    report("enum", args.alpha, args.beta, jobs, elapsed_ms(start), n, {});
    return kExitOk;
  }
  const auto relations = bm::enumerate_relations(args.alpha, args.beta, config);
  if (args.out_path) {
    bm::write_level_file(*args.out_path, args.alpha, args.beta, relations);
  } else {
    bm::write_level(std::cout, args.alpha, args.beta, relations);
  }
  report("enum", args.alpha, args.beta, jobs, elapsed_ms(start),
         relations.size(), args.out_path);
  return kExitOk;
}

struct PsiArgs {
  int from_beta = 1;
  int to_beta = 2;
  std::optional<std::string> in_path;
  std::string out_dir = ".";
  bool count_only = false;
  int jobs = 0;
};

std::string level_path(const std::string& dir, int beta) {
  return (std::filesystem::path(dir) / ("r1_" + std::to_string(beta) + ".bm"))
      .string();
}

int run_psi(const PsiArgs& args) {
  if (args.to_beta <= args.from_beta)
    throw CLI::ValidationError("psi", "--to must exceed --from");

  if (args.count_only) {
    // Recurrence arithmetic only; seeded from the input file's header count
    // when one is given, else from the closed form at the base level.
    unsigned __int128 count;
    if (args.in_path) {
      const auto level = bm::read_level_file(*args.in_path, /*validate=*/true);
      if (level.alpha != 1 || level.beta != args.from_beta)
        throw bm::ParseError("input level is (" + std::to_string(level.alpha) +
                             "," + std::to_string(level.beta) +
                             "), expected (1," + std::to_string(args.from_beta) +
                             ")");
      count = level.relations.size();
    } else {
      count = bm::closed_form_count(args.from_beta);
    }
    std::cout << "|R(1," << args.from_beta << ")| = " << bm::to_decimal(count)
              << '\n';
    for (int b = args.from_beta; b < args.to_beta; ++b) {
      const unsigned __int128 next = count * (3 + 2 * static_cast<unsigned>(b));
      std::cout << "|R(1," << b + 1 << ")| = (3+2*" << b << ")*|R(1," << b
                << ")| = " << (3 + 2 * b) << "*" << bm::to_decimal(count)
                << " = " << bm::to_decimal(next) << '\n';
      count = next;
    }
    return kExitOk;
  }

  const auto start = Clock::now();
  bm::RelationLevel level;
  if (args.in_path) {
    const auto file = bm::read_level_file(*args.in_path, /*validate=*/true);
    if (file.alpha != 1 || file.beta != args.from_beta)
      throw bm::ParseError("input level is (" + std::to_string(file.alpha) +
                           "," + std::to_string(file.beta) + "), expected (1," +
                           std::to_string(args.from_beta) + ")");
    level.beta = file.beta;
    level.relations = file.relations;
    std::sort(level.relations.begin(), level.relations.end());
    if (std::adjacent_find(level.relations.begin(), level.relations.end()) !=
        level.relations.end())
      throw bm::ParseError("input level contains duplicate relations");
    if (static_cast<unsigned __int128>(level.relations.size()) !=
        bm::closed_form_count(level.beta))
      throw bm::ParseError("input level is incomplete: " +
                           std::to_string(level.relations.size()) + " of " +
                           bm::to_decimal(bm::closed_form_count(level.beta)) +
                           " relations");
  } else if (args.from_beta == 1) {
    level = bm::first_level();
  } else {
    level.beta = args.from_beta;
    level.relations = bm::enumerate_relations(
        1, args.from_beta, bm::EnumConfig{args.jobs, std::nullopt});
  }

  auto write = [&](const bm::RelationLevel& lvl) {
    const std::string path = level_path(args.out_dir, lvl.beta);
    bm::write_level_file(path, 1, lvl.beta, lvl.relations);
    report("psi", 1, lvl.beta, bm::resolve_jobs(args.jobs), elapsed_ms(start),
           lvl.relations.size(), path);
  };

  std::cout << "|R(1," << level.beta << ")| = " << level.relations.size()
            << '\n';
  write(level);
  for (int b = args.from_beta; b < args.to_beta; ++b) {
    const std::size_t before = level.relations.size();
    level = bm::build_next_level(level);
    std::cout << "|R(1," << b + 1 << ")| = (3+2*" << b << ")*|R(1," << b
              << ")| = " << (3 + 2 * b) << "*" << before << " = "
              << level.relations.size() << '\n';
    write(level);
  }
  return kExitOk;
}

int run_verify(const std::string& path) {
  try {
    const auto level = bm::read_level_file(path, /*validate=*/true);
    std::cout << "VERIFIED " << path << ": " << level.relations.size()
              << " relations, ambient (" << level.alpha << "," << level.beta
              << ")\n";
    return kExitOk;
  } catch (const bm::ParseError& e) {
    std::cout << "FAIL " << path << ": " << e.what() << '\n';
    return kExitVerifyFailed;
  } catch (const std::invalid_argument& e) {
    std::cout << "FAIL " << path << ": " << e.what() << '\n';
    return kExitVerifyFailed;
  }
}

bm::BMPresentation presentation_from_flags(const std::string& preset,
                                           const std::string& file,
                                           std::size_t index) {
  if (!preset.empty()) return bm::preset_presentation(preset);
  const auto level = bm::read_level_file(file, /*validate=*/true);
  if (index >= level.relations.size())
    throw bm::ParseError("relation index " + std::to_string(index + 1) +
                         " out of range: file has " +
                         std::to_string(level.relations.size()) + " relations");
  return bm::BMPresentation::from_relation(level.relations[index]);
}

struct NfArgs {
  std::string preset;
  std::string file;
  std::size_t line = 1;
  std::string word;
};

int run_nf(const NfArgs& args) {
  const auto pres = presentation_from_flags(args.preset, args.file, args.line - 1);
  const bm::Word w = bm::parse_word(args.word);
  std::cout << bm::to_string(pres.normal_form(w)) << '\n';
  return kExitOk;
}

struct AbelArgs {
  std::string preset;
  std::string file;
};

int run_abelianize(const AbelArgs& args) {
  if (!args.preset.empty()) {
    const auto pres = bm::preset_presentation(args.preset);
    std::cout << bm::abelianization(pres).to_string() << '\n';
    return kExitOk;
  }
  const auto level = bm::read_level_file(args.file, /*validate=*/true);
  for (const auto& r : level.relations) {
    const auto pres = bm::BMPresentation::from_relation(r);
    std::cout << bm::abelianization(pres).to_string() << '\n';
  }
  return kExitOk;
}

int run_check_iso(const std::string& path) {
  const auto cert = bm::load_certificate(path);
  if (const auto failure = bm::isomorphism_failure(cert)) {
    std::cout << "FAILED: " << *failure << '\n';
    return kExitVerifyFailed;
  }
  std::cout << "VERIFIED\n";
  return kExitOk;
}

struct ClassifyArgs {
  int alpha = 2, beta = 2;
  std::string invariant = "abelianization";
  int jobs = 0;
};

int run_classify(const ClassifyArgs& args) {
  if (args.invariant != "abelianization")
    throw CLI::ValidationError("classify",
                               "only --invariant abelianization is supported");
  const auto relations = bm::enumerate_relations(
      args.alpha, args.beta, bm::EnumConfig{args.jobs, std::nullopt});
  const auto classes = bm::classify_by_abelianization(relations);
  std::cout << "classes: " << classes.size() << '\n';
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    std::cout << c.invariants.to_string() << ": " << c.count << '\n';
    total += c.count;
  }
  std::cout << "total: " << total << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"(alpha,beta)-BM relations: enumeration, level building and "
               "group invariants"};
  app.require_subcommand(1);

  GsArgs gs;
  auto* gs_cmd = app.add_subcommand("gs", "print all geometric squares");
  gs_cmd->add_option("alpha", gs.alpha, "horizontal generators")
      ->required()
      ->check(CLI::PositiveNumber);
  gs_cmd->add_option("beta", gs.beta, "vertical generators")
      ->required()
      ->check(CLI::PositiveNumber);

  EnumArgs en;
  auto* enum_cmd =
      app.add_subcommand("enum", "enumerate or count (alpha,beta)-BM relations");
  enum_cmd->add_option("alpha", en.alpha)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_option("beta", en.beta)->required()->check(CLI::PositiveNumber);
  enum_cmd->add_flag("--count-only", en.count_only, "print the count only");
  enum_cmd->add_option("--out", en.out_path, "write the level file here");
  enum_cmd->add_option("--jobs", en.jobs,
                       "worker count (default: BM_JOBS or all cores)");
  enum_cmd->add_option("--max-solutions", en.max_solutions,
                       "abort when more solutions appear");

  PsiArgs psi;
  auto* psi_cmd = app.add_subcommand(
      "psi", "build levels R(1,beta) -> R(1,beta+1) by square splitting");
  psi_cmd->add_option("--from", psi.from_beta)->check(CLI::PositiveNumber);
  psi_cmd->add_option("--to", psi.to_beta)->required()->check(CLI::PositiveNumber);
  psi_cmd->add_option("--in", psi.in_path, "start from this level file");
  psi_cmd->add_option("--out-dir", psi.out_dir, "directory for r1_<beta>.bm files");
  psi_cmd->add_flag("--count-only", psi.count_only,
                    "recurrence arithmetic only, no files");
  psi_cmd->add_option("--jobs", psi.jobs);

  std::string verify_path;
  auto* verify_cmd = app.add_subcommand("verify", "check a level file");
  verify_cmd->add_option("file", verify_path)->required();

  NfArgs nf;
  auto* nf_cmd = app.add_subcommand("nf", "normal form of a word");
  nf_cmd->add_option("--preset", nf.preset, "preset presentation name");
  nf_cmd->add_option("--file", nf.file, "level file with the relation");
  nf_cmd->add_option("--line", nf.line, "1-based relation index in --file");
  nf_cmd->add_option("--word", nf.word, "word, e.g. \"a1 b1 A1\"")->required();

  AbelArgs ab;
  auto* ab_cmd = app.add_subcommand("abelianize", "abelianization invariants");
  ab_cmd->add_option("--preset", ab.preset);
  ab_cmd->add_option("--file", ab.file,
                     "level file; one output line per relation");

  std::string cert_path;
  auto* iso_cmd =
      app.add_subcommand("check-iso", "verify an isomorphism certificate");
  iso_cmd->add_option("file", cert_path)->required();

  ClassifyArgs cl;
  auto* cl_cmd = app.add_subcommand("classify", "partition relations by invariant");
  cl_cmd->add_option("alpha", cl.alpha)->required()->check(CLI::PositiveNumber);
  cl_cmd->add_option("beta", cl.beta)->required()->check(CLI::PositiveNumber);
  cl_cmd->add_option("--invariant", cl.invariant);
  cl_cmd->add_option("--jobs", cl.jobs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (gs_cmd->parsed()) return run_gs(gs);
    if (enum_cmd->parsed()) return run_enum(en);
    if (psi_cmd->parsed()) return run_psi(psi);
    if (verify_cmd->parsed()) return run_verify(verify_path);
    if (nf_cmd->parsed()) {
      if (nf.preset.empty() == nf.file.empty())
        throw CLI::ValidationError("nf", "give exactly one of --preset/--file");
      return run_nf(nf);
    }
    if (ab_cmd->parsed()) {
      if (ab.preset.empty() == ab.file.empty())
        throw CLI::ValidationError("abelianize",
                                   "give exactly one of --preset/--file");
      return run_abelianize(ab);
    }
    if (iso_cmd->parsed()) return run_check_iso(cert_path);
    if (cl_cmd->parsed()) return run_classify(cl);
  } catch (const bm::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const bm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitUsage;
}
