#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "oka/blowup.hpp"
#include "oka/integrate.hpp"
#include "oka/invariants.hpp"
#include "oka/parser.hpp"
#include "oka/verify.hpp"

namespace {

// Exit codes: 0 pass, 1 check failure, 2 usage error.
constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

int cmd_verify(const std::string& suite, const std::string& out_path,
               std::uint64_t seed) {
  oka::VerificationReport rep = oka::verify_suite(suite, seed);
  write_output(out_path, rep.to_json());
  if (!rep.all_passed()) {
    const oka::Check* f = rep.first_failure();
    std::cerr << "FAIL " << f->check_id << ": " << f->witness << "\n";
    return kExitFail;
  }
  return kExitPass;
}

int cmd_decompose(const std::string& input_path, const std::string& out_path) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "cannot open input file: " << input_path << "\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();

  oka::Polynomial p;
  try {
    p = oka::parse_polynomial(buf.str());
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitFail;
  }

  const bool has_w = p.depends_on(oka::vars::w());
  const bool has_xi = p.depends_on(oka::vars::xi());
  if (has_w && has_xi) {
    std::cerr << "expression mixes w and xi; use one of the two forms\n";
    return kExitUsage;
  }

  oka::InvariantDecomposition decomp;
  try {
    if (has_xi) {
      // Already on the (z, xi) side: decide even/odd by the defect sign.
      oka::RationalFunction img = oka::invariants::apply_tau(p);
      if ((img - oka::RationalFunction(p)).is_zero()) {
        decomp.even_coeffs = oka::invariants::decompose_even(p);
      } else {
        decomp.odd_coeffs = oka::invariants::decompose_odd(p);
      }
    } else {
      auto split = oka::invariants::even_odd_split(p);
      decomp.even_coeffs = oka::invariants::decompose_even(
          oka::invariants::even_part_to_F(split.plus));
      decomp.odd_coeffs = oka::invariants::decompose_odd(
          oka::invariants::odd_part_to_G(split.minus));
    }
  } catch (const oka::invariance_error& e) {
    std::cerr << "invariance check failed; witness: "
              << e.witness.to_string() << "\n";
    return kExitFail;
  }

  nlohmann::json out;
  out["even"] = nlohmann::json::array();
  out["odd"] = nlohmann::json::array();
  for (const auto& f : decomp.even_coeffs) out["even"].push_back(f.to_string());
  for (const auto& g : decomp.odd_coeffs) out["odd"].push_back(g.to_string());
  out["M"] = decomp.M();
  out["N"] = decomp.N();
  write_output(out_path, out.dump(2));
  return kExitPass;
}

int cmd_integrate(double t0, double t1, double x0, double y0,
                  const oka::IntegratorConfig& cfg,
                  const std::string& traj_path,
                  const std::string& poles_path) {
  if (t0 == t1) {
    // Zero-length interval: empty outputs.
    write_output(traj_path, "t,chart,c1,c2,branch\n");
    write_output(poles_path, "[]");
    return kExitPass;
  }
  oka::Trajectory traj = oka::integrate(t0, t1, x0, y0, cfg);
  std::vector<oka::PoleRecord> poles = oka::detect_poles(traj);
  write_output(traj_path, oka::trajectory_csv(traj));
  write_output(poles_path, oka::pole_report_json(poles));
  return kExitPass;
}

int cmd_blowup_audit(const std::string& dot_path,
                     const std::string& log_path) {
  oka::Construction c = oka::run_construction();
  oka::VerificationReport rep;
  rep.merge(c.report());
  rep.merge(c.singular_point_report());
  rep.merge(oka::check_curve_graph(c));
  if (!dot_path.empty())
    write_output(dot_path, oka::curve_graph_dot(c.curve_graph()));
  if (!log_path.empty()) write_output(log_path, c.log_json());
  if (dot_path.empty() && log_path.empty())
    write_output("", c.log_json());
  if (!rep.all_passed()) {
    const oka::Check* f = rep.first_failure();
    std::cerr << "FAIL " << f->check_id << ": " << f->witness << "\n";
    return kExitFail;
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "okatlas: machine verification of the orbifold polynomial Hamiltonian "
      "structure of the Painleve I space of initial conditions, and "
      "pole-crossing numerical integration"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string out_path;
  std::uint64_t seed = 0;
  auto* verify =
      app.add_subcommand("verify", "run the exact verification suites");
  verify->add_option("--suite", suite,
                     "one of all|atlas|hamiltonian|invariants|blowup")
      ->check(CLI::IsMember({"all", "atlas", "hamiltonian", "invariants",
                             "blowup"}));
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_option("--seed", seed, "seed for the randomized spot suites");

  std::string input_path;
  std::string decompose_out;
  auto* decompose = app.add_subcommand(
      "decompose", "decompose an invariant over E and Delta");
  decompose->add_option("--input", input_path, "expression file")
      ->required();
  decompose->add_option("--out", decompose_out, "output JSON path");

  double t0 = 0.0, t1 = 10.0, x0 = 0.0, y0 = 0.0;
  oka::IntegratorConfig cfg;
  std::string traj_path, poles_path;
  auto* integrate = app.add_subcommand(
      "integrate", "integrate Painleve I across poles by chart switching");
  integrate->add_option("--t0", t0, "start time");
  integrate->add_option("--t1", t1, "end time");
  integrate->add_option("--x0", x0, "initial x");
  integrate->add_option("--y0", y0, "initial y = dx/dt");
  integrate->add_option("--rtol", cfg.rtol, "relative tolerance");
  integrate->add_option("--atol", cfg.atol, "absolute tolerance");
  integrate->add_option("--switch-radius", cfg.switch_radius,
                        "|x| threshold for switching to a pole chart");
  integrate->add_option("--max-step", cfg.max_step, "maximal step size");
  std::string branch = "continuous";
  integrate
      ->add_option("--branch", branch, "continuous|fixed-plus|fixed-minus")
      ->check(CLI::IsMember({"continuous", "fixed-plus", "fixed-minus"}));
  integrate->add_option("--out", traj_path, "trajectory CSV path");
  integrate->add_option("--poles", poles_path, "pole report JSON path");

  std::string dot_path, log_path;
  auto* audit = app.add_subcommand(
      "blowup-audit", "replay the surface construction and emit its ledger");
  audit->add_option("--emit-dot", dot_path,
                    "write the vertical-leaf graph in DOT form");
  audit->add_option("--emit-log", log_path,
                    "write the construction log as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (app.got_subcommand(verify)) return cmd_verify(suite, out_path, seed);
    if (app.got_subcommand(decompose))
      return cmd_decompose(input_path, decompose_out);
    if (app.got_subcommand(integrate)) {
      if (branch == "fixed-plus")
        cfg.branch_policy = oka::BranchPolicy::FixedPlus;
      else if (branch == "fixed-minus")
        cfg.branch_policy = oka::BranchPolicy::FixedMinus;
      else
        cfg.branch_policy = oka::BranchPolicy::Continuous;
      return cmd_integrate(t0, t1, x0, y0, cfg, traj_path, poles_path);
    }
    if (app.got_subcommand(audit)) return cmd_blowup_audit(dot_path, log_path);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFail;
  }
  return kExitUsage;
}
