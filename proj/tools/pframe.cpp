// pframe: construct Parseval frames of piecewise constant functions from
// admissible coefficient matrices, analyze/synthesize signals against them,
// and build and verify the dilation to an orthonormal basis on the square.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pframe/dilation.hpp"
#include "pframe/errors.hpp"
#include "pframe/io.hpp"
#include "pframe/operators.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace pframe;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCondition = 1;  // a mathematical condition failed
constexpr int kExitInput = 2;      // parse/IO/configuration failure
constexpr int kDefaultMaxLevel = 6;

struct CommonOptions {
  std::string matrix_file;
  double tolerance = 1e-10;
  int level = 2;
  std::string out;
  std::string format = "json";
  bool force = false;
};

void check_level_cap(int level, bool force) {
  if (level < 0) throw ParseError("--level must be nonnegative");
  if (level > kDefaultMaxLevel && !force) {
    throw ParseError("--level " + std::to_string(level) +
                     " exceeds the default cap of " +
                     std::to_string(kDefaultMaxLevel) +
                     " (memory grows as N^k); pass --force to override");
  }
}

FrameMatrix load_matrix(const std::string& path, double tolerance) {
  FrameMatrix m = io::read_frame_matrix(path);
  m.tolerance = tolerance;
  return m;
}

int run_validate(const CommonOptions& opt) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  const ValidationReport report = validate(matrix);
  if (report.ok()) return kExitOk;
  for (const auto& issue : report.issues) {
    if (opt.format == "csv") {
      std::printf("%s,%.17g\n", issue.condition.c_str(), issue.deviation);
    } else {
      std::cout << json{{"condition", issue.condition},
                        {"deviation", issue.deviation}}
                << '\n';
    }
  }
  return kExitCondition;
}

int run_build(const std::string& psi_file, int n, const CommonOptions& opt) {
  const auto psi = io::read_psi_rows(psi_file);
  const FrameMatrix matrix = build_from_complement(psi, n, opt.tolerance);
  io::write_frame_matrix(opt.out, matrix);
  return kExitOk;
}

Word parse_word_spec(const std::string& spec, int alphabet) {
  Word w;
  if (spec == "e" || spec.empty()) return w;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    std::size_t next = spec.find(',', pos);
    if (next == std::string::npos) next = spec.size();
    try {
      w.digits.push_back(std::stoi(spec.substr(pos, next - pos)));
    } catch (const std::exception&) {
      throw ParseError("--words: bad digit in \"" + spec + "\"");
    }
    pos = next + 1;
  }
  for (int d : w.digits) {
    if (d < 0 || d >= alphabet)
      throw ParseError("--words: digit out of range in \"" + spec + "\"");
  }
  if (!w.canonical())
    throw ParseError("--words: \"" + spec + "\" ends in 0 (not canonical)");
  return w;
}

int run_frame(const CommonOptions& opt,
              const std::vector<std::string>& word_specs) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  const ValidationReport report = validate(matrix);
  if (!report.ok()) {
    std::cerr << "matrix invalid: " << report.issues.front().condition
              << " (deviation " << report.issues.front().deviation << ")\n";
    return kExitCondition;
  }
  check_level_cap(opt.level, opt.force);

  std::vector<Word> words;
  if (word_specs.empty()) {
    words = enumerate_words(matrix.rows, opt.level);
  } else {
    for (const auto& spec : word_specs) {
      Word w = parse_word_spec(spec, matrix.rows);
      if (static_cast<int>(w.length()) > opt.level)
        throw ParseError("--words: \"" + spec + "\" longer than --level");
      words.push_back(std::move(w));
    }
  }

  fs::create_directories(opt.out);
  json index_words = json::array();
  for (std::size_t i = 0; i < words.size(); ++i) {
    char name[32];
    std::snprintf(name, sizeof name, "frame_%04zu.csv", i);
    io::write_grid_csv(fs::path(opt.out) / name,
                       refine(frame_element(matrix, words[i]), opt.level));
    index_words.push_back(
        {{"index", i}, {"word", words[i].digits}, {"file", name}});
  }
  const json index{{"M", matrix.rows},
                   {"N", matrix.cols},
                   {"level", opt.level},
                   {"count", words.size()},
                   {"words", std::move(index_words)}};
  std::ofstream out(fs::path(opt.out) / "index.json");
  out << index.dump(2) << '\n';
  std::cout << json{{"files", words.size()}, {"dir", opt.out}} << '\n';
  return kExitOk;
}

int run_analyze(const CommonOptions& opt, const std::string& signal_file) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  const GridFunction1D f = io::read_grid_csv(signal_file);
  check_level_cap(f.level, opt.force);
  const CoefficientSet coeffs = analyze(matrix, f);
  const double energy = norm(f) * norm(f);
  const double residual = std::abs(coeffs.sum_sq() - energy);
  io::write_coefficients(opt.out, coeffs, residual);
  std::cout << json{{"source_level", coeffs.source_level},
                    {"words", coeffs.coeffs.size()},
                    {"parseval_residual", residual}}
            << '\n';
  return kExitOk;
}

int run_synthesize(const CommonOptions& opt, const std::string& coeffs_file,
                   const std::string& reference_file) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  const CoefficientSet coeffs = io::read_coefficients(coeffs_file);
  const GridFunction1D f = synthesize(matrix, coeffs);
  io::write_grid_csv(opt.out, f);
  json meta{{"level", f.level}, {"cells", f.coeffs.size()}};
  if (!reference_file.empty()) {
    const GridFunction1D reference = io::read_grid_csv(reference_file);
    meta["roundtrip_residual"] = l2_distance(f, reference);
  }
  std::cout << meta << '\n';
  return kExitOk;
}

int run_dilate(const CommonOptions& opt, std::optional<int> nprime) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  const DilationSystem sys = build_dilation(matrix, nprime);
  io::write_dilation(opt.out, sys);
  std::cout << json{{"Nprime", sys.nprime}, {"dim", sys.big_base()}} << '\n';
  return kExitOk;
}

int run_check(const CommonOptions& opt, std::optional<int> nprime) {
  const FrameMatrix matrix = load_matrix(opt.matrix_file, opt.tolerance);
  check_level_cap(opt.level, opt.force);
  const int k = std::max(opt.level, 1);

  std::string first_failure;
  auto emit = [&](const std::string& condition, double deviation) {
    if (opt.format == "csv") {
      std::printf("%s,%.17g\n", condition.c_str(), deviation);
    } else {
      std::cout << json{{"condition", condition}, {"deviation", deviation}}
                << '\n';
    }
    if (deviation > opt.tolerance && first_failure.empty())
      first_failure = condition;
  };

  const ValidationReport report = validate(matrix);
  emit("validate", report.max_deviation());
  if (!report.ok()) {
    std::cerr << "first failing condition: validate\n";
    return kExitCondition;
  }

  emit("resolution_of_identity", resolution_of_identity_check(matrix, k));
  emit("level_parseval", level_parseval_deviation(matrix, k));

  const DilationSystem sys = build_dilation(matrix, nprime);
  emit("dilation_unitarity", unitarity_deviation(sys));
  emit("dilation_first_row", first_row_deviation(sys));
  emit("dilation_averaging", averaging_deviation(sys));
  emit("cuntz", cuntz_check(sys, k));
  emit("compatibility", compatibility_check(sys, k));
  emit("orthonormal_basis", orthonormal_basis_check(sys, k));
  emit("nu_normalization", nu_normalization_deviation(sys));

  if (!first_failure.empty()) {
    std::cerr << "first failing condition: " << first_failure << '\n';
    return kExitCondition;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parseval frames of piecewise constant functions"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string psi_file, signal_file, coeffs_file, reference_file;
  std::vector<std::string> word_specs;
  int build_n = 2;
  std::optional<int> nprime;

  auto add_tolerance = [&](CLI::App* cmd) {
    cmd->add_option("--tolerance", opt.tolerance,
                    "admissibility tolerance (default 1e-10)")
        ->envname("PFRAME_TOLERANCE");
  };
  auto add_matrix = [&](CLI::App* cmd) {
    cmd->add_option("matrix", opt.matrix_file, "FrameMatrix JSON file")
        ->required();
  };

  CLI::App* validate_cmd =
      app.add_subcommand("validate", "check the two admissibility conditions");
  add_matrix(validate_cmd);
  add_tolerance(validate_cmd);
  validate_cmd->add_option("--format", opt.format, "json|csv");

  CLI::App* build_cmd = app.add_subcommand(
      "build",
      "build an admissible matrix from a lower-dimensional Parseval frame");
  build_cmd->add_option("--psi", psi_file, "Parseval frame rows JSON")
      ->required();
  build_cmd->add_option("-N,--cols", build_n, "target column count N")
      ->required();
  build_cmd->add_option("--out", opt.out, "output matrix JSON")->required();
  add_tolerance(build_cmd);

  CLI::App* frame_cmd = app.add_subcommand(
      "frame", "emit the frame elements as CSV step functions");
  add_matrix(frame_cmd);
  frame_cmd->add_option("--level,-k", opt.level, "max word length")->required();
  frame_cmd->add_option("--out", opt.out, "output directory")->required();
  frame_cmd->add_option(
      "--words", word_specs,
      "restrict to these words (comma-separated digits, e for empty)");
  frame_cmd->add_flag("--force", opt.force, "allow levels above the cap of 6");
  add_tolerance(frame_cmd);

  CLI::App* analyze_cmd =
      app.add_subcommand("analyze", "frame coefficients of a signal");
  add_matrix(analyze_cmd);
  analyze_cmd->add_option("--signal", signal_file, "signal CSV")->required();
  analyze_cmd->add_option("--out", opt.out, "coefficients JSON")->required();
  analyze_cmd->add_flag("--force", opt.force,
                        "allow levels above the cap of 6");
  add_tolerance(analyze_cmd);

  CLI::App* synth_cmd = app.add_subcommand(
      "synthesize", "reconstruct a signal from coefficients");
  add_matrix(synth_cmd);
  synth_cmd->add_option("--coeffs", coeffs_file, "coefficients JSON")
      ->required();
  synth_cmd->add_option("--out", opt.out, "output signal CSV")->required();
  synth_cmd->add_option("--reference", reference_file,
                        "report the residual against this signal CSV");
  add_tolerance(synth_cmd);

  CLI::App* dilate_cmd =
      app.add_subcommand("dilate", "dilate the matrix to a unitary on B x B'");
  add_matrix(dilate_cmd);
  dilate_cmd->add_option("--nprime", nprime, "override N' (default ceil(M/N))");
  dilate_cmd->add_option("--out", opt.out, "output DilationSystem JSON")
      ->required();
  add_tolerance(dilate_cmd);

  CLI::App* check_cmd =
      app.add_subcommand("check", "run the full verification battery");
  add_matrix(check_cmd);
  check_cmd->add_option("--level,-k", opt.level, "check level (default 2)");
  check_cmd->add_option("--nprime", nprime, "override N'");
  check_cmd->add_option("--format", opt.format, "json|csv");
  check_cmd->add_flag("--force", opt.force, "allow levels above the cap of 6");
  add_tolerance(check_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (validate_cmd->parsed()) return run_validate(opt);
    if (build_cmd->parsed()) return run_build(psi_file, build_n, opt);
    if (frame_cmd->parsed()) return run_frame(opt, word_specs);
    if (analyze_cmd->parsed()) return run_analyze(opt, signal_file);
    if (synth_cmd->parsed())
      return run_synthesize(opt, coeffs_file, reference_file);
    if (dilate_cmd->parsed()) return run_dilate(opt, nprime);
    if (check_cmd->parsed()) return run_check(opt, nprime);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const InvalidNprime& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const NotParsevalInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCondition;
  } catch (const InvalidSource& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCondition;
  } catch (const BaseMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCondition;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitOk;
}
