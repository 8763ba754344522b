#pragma once

// CLI invocations with checked-in reports. Each case runs in a scratch
// directory holding copies of the fixtures, so reports echo bare file names.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace hammock::testing {

struct GoldenCase {
  std::string name;  // golden file stem; empty for exit-code-only cases
  std::vector<std::string> args;
  int exit_code;
  std::string extension = "json";
  std::string side_file;  // file the command writes, compared as <name>.<side_file>
};

inline void PrintTo(const GoldenCase& c, std::ostream* os) {
  for (const auto& a : c.args) *os << a << ' ';
}

inline std::vector<GoldenCase> golden_cases() {
  using V = std::vector<std::string>;
  const V json{"--emit", "json", "--no-timings"};
  auto with = [&](V args, const V& extra) {
    args.insert(args.end(), extra.begin(), extra.end());
    return args;
  };
  return {
      {"validate_weq", with({"validate", "weq.spec"}, json), 0},
      {"validate_idemfix", with({"validate", "idemfix.spec"}, json), 0},
      {"validate_cylfix", with({"validate", "cylfix.spec"}, json), 0},
      {"validate_idemp", with({"validate", "idemp.spec"}, json), 1},
      {"validate_badcomp", with({"validate", "badcomp.spec"}, json), 1},
      {"hom_arr", with({"hom", "arr.spec", "--from", "X", "--to", "Y", "--stage", "3"}, json), 0},
      {"hom_cylfix", with({"hom", "cylfix.spec", "--from", "A", "--to", "B", "--stage", "3"}, json), 0},
      {"hom_weq_dot", {"hom", "weq.spec", "--from", "X", "--to", "Y", "--stage", "3", "--emit", "dot"}, 0, "dot"},
      {"pi0_weq", with({"pi0", "weq.spec", "--from", "X", "--to", "X", "--max-stage", "5"}, json), 0},
      {"pi0_weq_text", {"pi0", "weq.spec", "--from", "X", "--to", "X", "--max-stage", "5", "--no-timings"}, 0, "txt"},
      {"pi0_weq_assume", with({"pi0", "weq.spec", "--from", "Y", "--to", "X", "--max-stage", "3", "--assume-model"}, json),
       0},
      {"pi0_para_ab", with({"pi0", "para.spec", "--from", "A", "--to", "B", "--max-stage", "7"}, json), 2},
      {"pi0_para_ba", with({"pi0", "para.spec", "--from", "B", "--to", "A"}, json), 2},
      {"oracle_weq", with({"oracle", "weq.spec", "--from", "Y", "--to", "X"}, json), 0},
      {"oracle_para", with({"oracle", "para.spec", "--from", "A", "--to", "A", "--bound", "6"}, json), 2},
      {"oracle_para_text", {"oracle", "para.spec", "--from", "A", "--to", "A", "--bound", "6", "--no-timings"}, 2,
       "txt"},
      {"verify_thm31", with({"verify", "thm31", "cylfix.spec", "--object", "A", "--max-stage", "5"}, json), 0},
      {"verify_thm31_pre", with({"verify", "thm31", "cylfix.spec", "--pre", "--object", "B", "--max-stage", "3"}, json),
       0},
      {"verify_thm32", with({"verify", "thm32", "pt_arr.spec", "--max-stage", "5"}, json), 0},
      {"verify_thm32_ell", with({"verify", "thm32", "idemfix.spec", "--nat", "ell", "--x", "X", "--y", "Y",
                                  "--max-stage", "3"},
                                 json),
       0},
      {"verify_rmk33", with({"verify", "rmk33", "weq.spec", "--x", "X", "--y", "Y", "--max-stage", "3"}, json), 0},
      {"verify_rmk33_pair", with({"verify", "rmk33", "cylfix.spec", "--x", "A", "--y", "B", "--max-stage", "5",
                                  "--pos-i", "0", "--pos-j", "3"},
                                 json),
       0},
      {"verify_lemma53", with({"verify", "lemma53", "idemfix.spec", "--x", "X", "--y", "Y", "--max-stage", "5"}, json),
       0},
      {"verify_lemma53_idemp", with({"verify", "lemma53", "idemp.spec", "--max-stage", "3"}, json), 1},
      {"verify_hoalg", with({"verify", "hoalg", "idemfix.spec", "--morphism", "w", "--max-stage", "5"}, json), 0},
      {"verify_prop52", with({"verify", "prop52", "idemfix.spec", "--morphism", "w", "--object", "X"}, json), 0},
      {"export_dot", with({"export-dot", "cylfix.spec", "--from", "A", "--to", "A", "--stage", "3", "-o", "stage.dot"},
                          json),
       0, "json", "stage.dot"},
      {"", {"validate", "missing.spec"}, 3},
      {"", {"hom", "weq.spec", "--from", "X", "--to", "Q"}, 3},
      {"", {"hom", "weq.spec", "--from", "X", "--to", "Y", "--stage", "4"}, 3},
      {"", {"pi0", "weq.spec", "--from", "X", "--to", "Y", "--bogus"}, 3},
      {"", {"oracle", "weq.spec", "--from", "X"}, 3},
      {"", {"frobnicate"}, 3},
      {"", {"verify", "thm31", "weq.spec"}, 3},
      {"", {"verify", "hoalg", "idemfix.spec", "--morphism", "nope"}, 3},
      {"", {"validate", "syntax.spec"}, 3},
  };
}

struct GoldenOutcome {
  int exit_code = 0;
  std::string out;
  std::string err;
  std::string side;
};

/// Scratch directory under the build tree with every fixture copied in.
inline std::filesystem::path golden_workdir() {
  namespace fs = std::filesystem;
  fs::path dir = fs::path(HAMMOCK_GOLDEN_WORK_DIR);
  fs::create_directories(dir);
  for (const auto& entry : fs::directory_iterator(HAMMOCK_FIXTURE_DIR)) {
    fs::copy_file(entry.path(), dir / entry.path().filename(), fs::copy_options::overwrite_existing);
  }
  std::ofstream(dir / "syntax.spec") << "category C\nobject X\narrow f X -> X\n";
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline GoldenOutcome run_golden(const GoldenCase& c) {
  namespace fs = std::filesystem;
  auto dir = golden_workdir();
  auto previous = fs::current_path();
  fs::current_path(dir);
  if (!c.side_file.empty()) fs::remove(c.side_file);
  std::ostringstream out;
  std::ostringstream err;
  GoldenOutcome o;
  o.exit_code = cli::run_cli(c.args, out, err);
  o.out = out.str();
  o.err = err.str();
  if (!c.side_file.empty()) o.side = slurp(c.side_file);
  fs::current_path(previous);
  return o;
}

inline std::filesystem::path golden_path(const GoldenCase& c) {
  return std::filesystem::path(HAMMOCK_GOLDEN_DIR) / (c.name + "." + c.extension);
}

inline std::filesystem::path side_golden_path(const GoldenCase& c) {
  return std::filesystem::path(HAMMOCK_GOLDEN_DIR) / (c.name + "." + c.side_file);
}

inline bool update_goldens() {
  const char* v = std::getenv("HAMMOCK_UPDATE_GOLDEN");
  return v && std::string(v) == "1";
}

}  // namespace hammock::testing
