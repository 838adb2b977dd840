#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gss/cases.hpp"
#include "gss/closure/io.hpp"
#include "gss/closure/iso.hpp"
#include "gss/closure/transforms.hpp"
#include "gss/suite.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    out << text;
  }
}

std::string render(const gss::report::Report& rep, const std::string& format, bool timings) {
  if (format == "structured") return gss::report::render_structured(rep, timings);
  return gss::report::render_text(rep, timings);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite closure spaces and geometric structure spaces"};
  app.require_subcommand(1);

  gss::report::RunConfig config;
  std::string mode = "exact";
  std::string format = "text";
  std::string out_path;
  double tol_override = 0.0;
  app.add_option("--seed", config.seed, "seed recorded in every report");
  app.add_option("--mode", mode, "exact|float")->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", tol_override, "float-mode decision tolerance override");
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--format", format, "text|structured")
      ->check(CLI::IsMember({"text", "structured"}));
  app.add_flag("--timings", config.timings, "include per-record timings (non-reproducible)");

  auto* case_cmd = app.add_subcommand("case", "run a named case study");
  std::string case_name;
  case_cmd->add_option("name", case_name, "case study name")->required();
  case_cmd->add_option("--algebra", config.algebra, "block list for fdim-spectra, e.g. 2+3");
  case_cmd->add_option("--trials", config.reconstruction_trials, "seeded trial count");

  auto* suite_cmd = app.add_subcommand("suite", "run the full property suite");
  suite_cmd->add_option("--lift-pairs", config.lift_pairs, "homeomorphic pair count");
  suite_cmd->add_option("--tie-pairs", config.tie_pairs, "tie pairs per block size");
  suite_cmd->add_option("--torus-pairs", config.torus_pairs, "complex ell1 pair count");
  suite_cmd->add_option("--trials", config.batch_trials, "seeded batch size");

  auto* space_cmd = app.add_subcommand("space", "closure-space file operations");
  space_cmd->require_subcommand(1);
  std::string space_file;
  auto* check_cmd = space_cmd->add_subcommand("check", "validate a space file");
  check_cmd->add_option("file", space_file, "space file")->required();
  auto* transform_cmd = space_cmd->add_subcommand("transform", "emit both transforms");
  transform_cmd->add_option("file", space_file, "space file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (mode == "float") config.mode = gss::report::RunConfig::Mode::floating;
  if (tol_override > 0.0) config.tol.decide_tol = tol_override;

  try {
    if (*case_cmd) {
      gss::report::Report rep = gss::cases::run_case_study(case_name, config);
      emit(render(rep, format, config.timings), out_path);
      return rep.exit_code();
    }
    if (*suite_cmd) {
      gss::report::Report rep = gss::suite::run_property_suite(config);
      emit(render(rep, format, config.timings), out_path);
      return rep.exit_code();
    }
    if (*space_cmd) {
      gss::closure::Space space = gss::closure::read_space(slurp(space_file));
      if (*check_cmd) {
        gss::report::Report rep;
        rep.seed = config.seed;
        rep.mode = config.mode_name();
        rep.add("space/valid", true,
                "points=" + std::to_string(space.size()) +
                    " closed-sets=" + std::to_string(space.closed_family().size()));
        rep.add("space/topologizable", gss::closure::is_topologizable(space));
        auto flags = gss::closure::separation_flags(space);
        rep.add("space/t0", flags.t0);
        rep.add("space/t1", flags.t1);
        emit(render(rep, format, config.timings), out_path);
        return 0;  // separation flags are facts, not failures
      }
      gss::closure::TransformResult tr = gss::closure::transforms(space);
      std::string text;
      text += "# g-transform\n" + gss::closure::write_space(tr.g_space);
      text += "# p-transform\n" + gss::closure::write_space(tr.p_space);
      text += "# delta\n" + gss::closure::write_map_table(tr.delta);
      emit(text, out_path);
      return 0;
    }
  } catch (const gss::cases::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gss::closure::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
