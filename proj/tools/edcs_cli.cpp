// Command-line front end for the EDCS approximation-ratio toolkit.
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 operational error.
#include <CLI11.hpp>

#include <edcs/lp.hpp>
#include <edcs/roundtrip.hpp>
#include <edcs/simplex.hpp>
#include <edcs/sweep.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace edcs;

namespace {

void write_file(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw OperationalError("cannot open '" + path + "' for writing");
  out << content;
  if (!out.flush())
    throw OperationalError("short write to '" + path + "'");
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OperationalError("cannot open '" + path + "'");
  return nlohmann::json::parse(in);  // throws with line/column on error
}

struct ModeFlags {
  bool exact = false;
  bool use_float = false;

  // Default: exact up to beta = 12, float above.
  bool pick_exact(int beta) const {
    if (exact && use_float)
      throw CLI::ValidationError("--exact and --float are mutually exclusive");
    if (exact) return true;
    if (use_float) return false;
    return beta <= 12;
  }
};

void add_mode_flags(CLI::App* cmd, ModeFlags& mode) {
  cmd->add_flag("--exact", mode.exact, "force exact rational arithmetic");
  cmd->add_flag("--float", mode.use_float, "force double-precision solves");
}

int cmd_ratio(int beta, int beta_minus, const ModeFlags& mode) {
  Params p{beta, beta_minus};
  require_valid(p);
  LinearProgram lp = build_lp(p);
  if (mode.pick_exact(beta)) {
    auto r = solve_exact(lp);
    if (r.status != SolveStatus::Optimal)
      throw OperationalError("exact solve did not reach an optimum");
    Rational ratio = Rational(1) / r.objective;
    ratio.canonicalize();
    std::cout << "ratio(" << beta << "," << beta_minus
              << ") = " << rational_to_string(ratio) << " = "
              << decimal_string(ratio, 10) << "\n";
  } else {
    auto r = solve_float(lp);
    if (r.status != SolveStatus::Optimal)
      throw OperationalError("float solve did not reach an optimum");
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10f", 1.0 / r.objective);
    std::cout << "ratio(" << beta << "," << beta_minus << ") ~= " << buf
              << " (float)\n";
  }
  return 0;
}

int cmd_sweep(int max_beta, const ModeFlags& mode,
              const std::vector<int>& diagonals, const std::string& out,
              const std::string& format) {
  int cutoff = 12;
  if (mode.exact) cutoff = max_beta;
  if (mode.use_float) cutoff = 0;
  RatioTable t = sweep(max_beta, diagonals, cutoff);
  if (format == "csv")
    write_file(out, table_to_csv(t));
  else if (format == "json")
    write_file(out, table_to_json(t).dump(2) + "\n");
  else if (format == "svg")
    write_file(out, table_to_svg(t));
  else
    throw CLI::ValidationError("sweep supports --format csv, json, or svg");
  return 0;
}

int cmd_construct(int beta, int beta_minus, long min_scale,
                  const std::string& out) {
  Params p{beta, beta_minus};
  require_valid(p);
  auto r = solve_exact(build_lp(p));
  if (r.status != SolveStatus::Optimal)
    throw OperationalError("exact solve did not reach an optimum");
  EdcsInstance inst = solution_to_instance(p, r, min_scale);
  VerificationReport rep = verify_instance(inst, p);
  if (!rep.all_pass()) {
    std::cerr << report_to_json(rep).dump(2) << "\n";
    return 1;
  }
  write_file(out, instance_to_json(inst).dump(2) + "\n");
  std::cerr << "ratio " << rational_to_string(rep.ratio) << " (mu_g "
            << rep.mu_g << ", mu_h " << rep.mu_h << "), verified\n";
  return 0;
}

int cmd_verify(const std::string& path) {
  EdcsInstance inst = instance_from_json(read_json(path));
  VerificationReport rep = verify_instance(inst, inst.params);
  std::cout << report_to_json(rep).dump(2) << "\n";
  return rep.all_pass() ? 0 : 1;
}

int cmd_export_lp(int beta, int beta_minus, const std::string& format,
                  const std::string& out) {
  Params p{beta, beta_minus};
  require_valid(p);
  LinearProgram lp = build_lp(p);
  if (format == "lp")
    write_file(out, export_lp_text(lp));
  else if (format == "json")
    write_file(out, lp_to_json(lp).dump(2) + "\n");
  else
    throw CLI::ValidationError("export-lp supports --format lp or json");
  return 0;
}

int cmd_tight_example(int k, int n, const std::string& out) {
  EdcsInstance inst = tight_example(k, n);
  write_file(out, instance_to_json(inst).dump(2) + "\n");
  return 0;
}

int cmd_dump_profiles(int beta, int beta_minus, const std::string& out) {
  Params p{beta, beta_minus};
  require_valid(p);
  auto vps = enumerate_vertex_profiles(p);
  auto eps = enumerate_edge_profiles(p, vps);
  nlohmann::json j;
  j["beta"] = beta;
  j["beta_minus"] = beta_minus;
  j["vertex_profiles"] = nlohmann::json::array();
  for (const auto& v : vps) {
    nlohmann::json e = v;
    e["label"] = v.label();
    j["vertex_profiles"].push_back(std::move(e));
  }
  j["edge_profiles"] = nlohmann::json::array();
  for (const auto& ep : eps) {
    nlohmann::json e = ep;
    e["label"] = ep.label();
    j["edge_profiles"].push_back(std::move(e));
  }
  write_file(out, j.dump(2) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation ratios of (beta, beta-)-EDCS matching "
               "sparsifiers via a factor-revealing LP"};
  app.require_subcommand(1);

  int beta = 0, beta_minus = 0, max_beta = 12, k = 1, n = 1;
  long min_scale = 1;
  std::string out, path;
  std::string sweep_format = "csv", export_format = "lp";
  std::vector<int> diagonals;
  ModeFlags mode;

  auto* ratio = app.add_subcommand("ratio", "solve one (beta, beta-) cell");
  ratio->add_option("beta", beta)->required();
  ratio->add_option("beta_minus", beta_minus)->required();
  add_mode_flags(ratio, mode);

  auto* sw = app.add_subcommand("sweep", "solve a grid of cells");
  sw->add_option("--max-beta", max_beta, "largest beta (default 12)");
  sw->add_option("--diagonal", diagonals,
                 "restrict to beta_minus = beta - c for these c")
      ->delimiter(',');
  sw->add_option("--out", out, "output path (default stdout)");
  sw->add_option("--format", sweep_format, "csv (default), json, or svg");
  add_mode_flags(sw, mode);

  auto* con = app.add_subcommand(
      "construct", "build a verified tight instance (exact mode)");
  con->add_option("beta", beta)->required();
  con->add_option("beta_minus", beta_minus)->required();
  con->add_option("--min-scale", min_scale, "scale multiplier (default 1)");
  con->add_option("--out", out, "output path (default stdout)");

  auto* ver = app.add_subcommand("verify", "check an instance file");
  ver->add_option("file", path)->required()->check(CLI::ExistingFile);

  auto* exp = app.add_subcommand("export-lp", "write the LP model");
  exp->add_option("beta", beta)->required();
  exp->add_option("beta_minus", beta_minus)->required();
  exp->add_option("--format", export_format, "lp (default) or json");
  exp->add_option("--out", out, "output path (default stdout)");

  auto* tight = app.add_subcommand("tight-example",
                                   "write a figure-family instance");
  tight->add_option("k", k)->required();
  tight->add_option("n", n)->required();
  tight->add_option("--out", out, "output path (default stdout)");

  auto* dump = app.add_subcommand("dump-profiles",
                                  "list all vertex and edge profiles");
  dump->add_option("beta", beta)->required();
  dump->add_option("beta_minus", beta_minus)->required();
  dump->add_option("--out", out, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(ratio)) return cmd_ratio(beta, beta_minus, mode);
    if (app.got_subcommand(sw))
      return cmd_sweep(max_beta, mode, diagonals, out, sweep_format);
    if (app.got_subcommand(con))
      return cmd_construct(beta, beta_minus, min_scale, out);
    if (app.got_subcommand(ver)) return cmd_verify(path);
    if (app.got_subcommand(exp))
      return cmd_export_lp(beta, beta_minus, export_format, out);
    if (app.got_subcommand(tight)) return cmd_tight_example(k, n, out);
    if (app.got_subcommand(dump))
      return cmd_dump_profiles(beta, beta_minus, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const ContractViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
