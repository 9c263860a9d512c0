// expann: sample exponential sums, detect frequencies, apply annihilators and
// run the refinement demo from the command line.
//
// Exit status: 0 success, 2 input error, 3 detection inconsistent,
// 4 numerical failure.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "expann/detection.hpp"
#include "expann/expspace.hpp"
#include "expann/io.hpp"
#include "expann/operators.hpp"
#include "expann/oracle.hpp"
#include "expann/subdivision.hpp"

namespace {

using namespace expann;
using io::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInconsistent = 3;
constexpr int kExitNumerical = 4;

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DenominatorZero:
    case ErrorKind::InvalidCosh:
    case ErrorKind::InvalidParameter:
    case ErrorKind::SingularRule:
      return kExitNumerical;
    default:
      return kExitInput;
  }
}

std::string read_text(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json read_json(const std::string& path) {
  const std::string text = read_text(path);
  try {
    return json::parse(text);
  } catch (const json::parse_error& err) {
    throw Error(ErrorKind::InvalidArgument, path + ": " + err.what());
  }
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path.string());
  out << text;
}

FrequencyVector parse_gamma(const std::vector<std::string>& parts) {
  return {io::parse_frequency(parts.at(0)), io::parse_frequency(parts.at(1))};
}

oracle::FrequencyKind parse_kind(const std::string& kind) {
  if (kind == "real") return oracle::FrequencyKind::Real;
  if (kind == "imaginary") return oracle::FrequencyKind::Imaginary;
  if (kind == "mixed") return oracle::FrequencyKind::Mixed;
  return oracle::FrequencyKind::Any;
}

json instance_to_json(const oracle::RandomInstance& inst, std::uint64_t seed) {
  return json{{"seed", seed},
              {"gamma", io::frequency_to_json(inst.gamma)},
              {"sum", io::sum_to_json(inst.sum)},
              {"grid", io::grid_to_json(inst.grid)}};
}

Index2 default_alpha(const GridSamples& s) { return s.origin() + Index2{1, 1}; }

// Samples the instance along z2 = 0 for the univariate refinement demo; every
// member of the symmetric space restricts to span{1, e^{g1 z}, e^{-g1 z}} there.
Sequence instance_row(const oracle::RandomInstance& inst, int length) {
  Sequence seq{inst.grid.level(), 0, {}};
  const double h = grid_spacing(seq.level);
  for (int n = 0; n < length; ++n) seq.values.push_back(inst.sum.evaluate({h * n, 0.0}));
  return seq;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Annihilation operators and frequency detection for bivariate exponential spaces"};
  app.require_subcommand(1);

  // sample
  auto* sample_cmd = app.add_subcommand("sample", "Sample a sum file on a grid window");
  std::string sum_path;
  int level = 0;
  std::vector<int> origin{0, 0};
  int width = 8;
  int height = 8;
  sample_cmd->add_option("sumfile", sum_path, "Sum JSON file ('-' for stdin)")->required();
  sample_cmd->add_option("--level", level, "Dyadic level k")->check(CLI::NonNegativeNumber);
  sample_cmd->add_option("--origin", origin, "Window origin i j")->expected(2);
  sample_cmd->add_option("--width", width, "Window width")->check(CLI::PositiveNumber);
  sample_cmd->add_option("--height", height, "Window height")->check(CLI::PositiveNumber);

  // detect
  auto* detect_cmd = app.add_subcommand("detect", "Detect the symmetric-space frequency of a grid");
  std::string grid_path;
  std::vector<int> alpha;
  std::string mode = "single";
  DetectionOptions options;
  detect_cmd->add_option("gridfile", grid_path, "Grid JSON file ('-' for stdin)")->required();
  detect_cmd->add_option("--alpha", alpha, "Base index i j (default origin + (1, 1))")->expected(2);
  detect_cmd->add_option("--mode", mode, "single or robust")
      ->check(CLI::IsMember({"single", "robust"}));
  detect_cmd->add_option("--tol-den", options.tol_den, "Relative zero-denominator tolerance");
  detect_cmd->add_option("--tol-res", options.tol_res, "Relative residual acceptance threshold");
  detect_cmd->add_option("--tol-im", options.tol_im, "Admissible imaginary part of cosh");

  // annihilate
  auto* ann_cmd = app.add_subcommand("annihilate", "Apply the three-factor annihilator to a grid");
  std::string ann_grid;
  std::vector<std::string> gamma_parts;
  std::vector<int> extra{1, 1};
  std::string axis_name = "x";
  std::string residual_out;
  ann_cmd->add_option("gridfile", ann_grid, "Grid JSON file ('-' for stdin)")->required();
  ann_cmd->add_option("--gamma", gamma_parts, "Frequency components, e.g. 0.8 0.3i")
      ->expected(2)
      ->required();
  ann_cmd->add_option("--extra-step", extra, "Step dx dy of the zero-frequency factor")->expected(2);
  ann_cmd->add_option("--axis", axis_name, "x or y")->check(CLI::IsMember({"x", "y"}));
  ann_cmd->add_option("--out", residual_out, "Write the residual grid to this file");

  // refine
  auto* refine_cmd = app.add_subcommand("refine", "Refine 1-D data with the exponential four-point rule");
  std::string seq_path;
  int rounds = 1;
  bool auto_gamma = false;
  std::string fixed_gamma;
  refine_cmd->add_option("datafile", seq_path, "Sequence JSON file ('-' for stdin)")->required();
  refine_cmd->add_option("--rounds", rounds, "Refinement rounds")->check(CLI::NonNegativeNumber);
  auto* auto_flag = refine_cmd->add_flag("--auto", auto_gamma, "Detect gamma from the data");
  auto* gamma_opt = refine_cmd->add_option("--gamma", fixed_gamma, "Use this frequency, e.g. 0.5 or 1.2i");
  auto_flag->excludes(gamma_opt);
  refine_cmd->add_option("--tol-den", options.tol_den, "Relative zero-denominator tolerance");

  // instance
  auto* inst_cmd = app.add_subcommand("instance", "Print a seeded random test instance");
  std::uint64_t seed = 0;
  std::string kind = "any";
  inst_cmd->add_option("--seed", seed, "Generator seed");
  inst_cmd->add_option("--level", level, "Sampling level")->check(CLI::NonNegativeNumber);
  inst_cmd->add_option("--kind", kind, "any, real, imaginary or mixed")
      ->check(CLI::IsMember({"any", "real", "imaginary", "mixed"}));

  // golden
  auto* golden_cmd = app.add_subcommand("golden", "Write seeded instance, report and refinement files");
  std::string out_dir;
  golden_cmd->add_option("--seed", seed, "Generator seed");
  golden_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*sample_cmd) {
      const ExponentialSum sum = io::sum_from_text(read_text(sum_path));
      const GridSamples grid = sample(sum, level, Window{{origin[0], origin[1]}, width, height});
      std::cout << io::dump(io::grid_to_json(grid));
      return kExitOk;
    }

    if (*detect_cmd) {
      options.mode = mode == "robust" ? DetectionMode::Robust : DetectionMode::Single;
      const GridSamples grid = io::grid_from_json(read_json(grid_path));
      const Index2 base = alpha.empty() ? default_alpha(grid) : Index2{alpha[0], alpha[1]};
      const DetectionReport report = detect(grid, base, options);
      std::cout << io::dump(io::report_to_json(report));
      return report.classification == Classification::Inconsistent ? kExitInconsistent : kExitOk;
    }

    if (*ann_cmd) {
      const GridSamples grid = io::grid_from_json(read_json(ann_grid));
      const Axis axis = axis_name == "y" ? Axis::Y : Axis::X;
      const FrequencyVector gamma = parse_gamma(gamma_parts);
      const AnnihilatorChain chain =
          reduced_chain_for_symmetric_set(gamma, axis, IntegerStep(extra[0], extra[1]));
      const GridSamples out = chain_apply(chain, grid);
      const double scale = grid.max_abs();
      json report{{"gamma", io::frequency_to_json(gamma)},
                  {"axis", axis_name},
                  {"extra_step", {extra[0], extra[1]}},
                  {"residual", scale == 0.0 ? 0.0 : out.max_abs() / scale},
                  {"window", {{"origin", {out.origin().i, out.origin().j}},
                              {"width", out.width()},
                              {"height", out.height()}}}};
      if (!residual_out.empty()) write_text(residual_out, io::dump(io::grid_to_json(out)));
      std::cout << io::dump(report);
      return kExitOk;
    }

    if (*refine_cmd) {
      const Sequence data = io::sequence_from_json(read_json(seq_path));
      if (!auto_gamma && fixed_gamma.empty()) {
        throw Error(ErrorKind::InvalidArgument, "refine needs --auto or --gamma");
      }
      const AutoRefineResult result =
          auto_gamma ? auto_refine(data, rounds, options.tol_den)
                     : refine_with_frequency(data, io::parse_frequency(fixed_gamma), rounds);
      std::cerr << json{{"gamma", io::complex_to_json(result.gamma.value())}}.dump() << "\n";
      std::cout << io::dump(io::sequence_to_json(result.data));
      return kExitOk;
    }

    if (*inst_cmd) {
      oracle::RandomSpec spec;
      spec.seed = seed;
      spec.level = level;
      spec.kind = parse_kind(kind);
      std::cout << io::dump(instance_to_json(oracle::random_instance(spec), seed));
      return kExitOk;
    }

    if (*golden_cmd) {
      oracle::RandomSpec spec;
      spec.seed = seed;
      const oracle::RandomInstance inst = oracle::random_instance(spec);
      const DetectionReport report = detect(inst.grid, default_alpha(inst.grid));
      const AutoRefineResult refined = auto_refine(instance_row(inst, 10), 3);
      const std::filesystem::path dir(out_dir);
      std::filesystem::create_directories(dir);
      write_text(dir / "instance.json", io::dump(instance_to_json(inst, seed)));
      write_text(dir / "report.json", io::dump(io::report_to_json(report)));
      json refined_doc = io::sequence_to_json(refined.data);
      refined_doc["gamma"] = io::complex_to_json(refined.gamma.value());
      write_text(dir / "refined.json", io::dump(refined_doc));
      return kExitOk;
    }
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return exit_code_for(err.kind());
  } catch (const json::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
