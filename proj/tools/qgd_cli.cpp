// Command line front end: experiment orchestration and CSV/report emission.
//
// Subcommands
//   run         iterate to convergence, write trajectory.csv / summary.json
//   compare     side-by-side iteration of this scheme and the
//               Hadamard-disposal baseline (optionally VQE)
//   analyze     spectrum, learning-rate interval, measurement-count bounds
//   table1      depolarizing-noise sweep at a fixed read-out step
//   vqsp-train  train the ancilla-preparation circuit on its own
//
// Exit codes: 0 success, 2 configuration error, 3 non-convergence
// (artifacts are still written). Options may come from a config file with
// section-prefixed keys (run.model=deuteron); command line flags win.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qgd/analysis.hpp"
#include "qgd/baselines.hpp"
#include "qgd/errors.hpp"
#include "qgd/models.hpp"
#include "qgd/qgd.hpp"
#include "qgd/vqsp.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 2;
constexpr int kExitNotConverged = 3;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

fs::path output_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("QGD_OUTPUT_DIR"); env && *env)
    return env;
  return ".";
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qgd::Error("cannot open " + path.string() + " for writing");
  out << text;
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    values.push_back(std::stod(item));
  }
  return values;
}

// Everything a subcommand needs to know about the system under study.
struct Problem {
  std::string label;
  qgd::PauliHamiltonian hamiltonian;
  qgd::StateVector initial_state;
  std::vector<double> identity_split;
  std::optional<qgd::AnsatzSpec> ansatz;
};

struct CommonOptions {
  std::string model;
  std::string hamiltonian_file;
  std::string initial_ry;
  std::string split;
  double mu = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::string out;

  bool has_mu = false;
  bool has_epsilon = false;
  bool has_seed = false;
};

void add_problem_flags(CLI::App* cmd, CommonOptions& o, bool need_seed) {
  cmd->add_option("--model", o.model,
                  "Preset: deuteron | heisenberg2 | heisenberg4 | heisenberg8");
  cmd->add_option("--hamiltonian", o.hamiltonian_file,
                  "Pauli Hamiltonian text file instead of a preset");
  cmd->add_option("--initial-ry", o.initial_ry,
                  "Comma list of per-site Ry angles for the initial state "
                  "(file mode)");
  cmd->add_option("--split", o.split, "Identity split weights, comma list");
  auto* mu_opt = cmd->add_option("--mu", o.mu, "Learning rate");
  auto* eps_opt =
      cmd->add_option("--epsilon", o.epsilon,
                      "First-order precision; sets mu = sqrt(epsilon)/2");
  mu_opt->excludes(eps_opt);
  auto* seed_opt = cmd->add_option("--seed", o.seed, "Random seed");
  if (need_seed) seed_opt->required();
  cmd->add_option("--out", o.out,
                  "Output directory (default $QGD_OUTPUT_DIR or .)");
  cmd->callback([&o, cmd] {
    o.has_mu = cmd->count("--mu") > 0;
    o.has_epsilon = cmd->count("--epsilon") > 0;
    o.has_seed = cmd->count("--seed") > 0;
  });
}

Problem resolve_problem(const CommonOptions& o) {
  Problem p;
  if (!o.model.empty() && !o.hamiltonian_file.empty())
    throw qgd::InvalidInput("--model and --hamiltonian are mutually exclusive");
  if (!o.model.empty()) {
    auto preset = qgd::model_by_name(o.model);
    if (!preset) throw qgd::InvalidInput("unknown model '" + o.model + "'");
    p.label = preset->name;
    p.hamiltonian = preset->hamiltonian;
    p.initial_state = preset->initial_state();
    p.identity_split = preset->identity_split;
    p.ansatz = preset->ansatz;
  } else if (!o.hamiltonian_file.empty()) {
    std::ifstream in(o.hamiltonian_file);
    if (!in)
      throw qgd::InvalidInput("cannot read '" + o.hamiltonian_file + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    p.label = "file:" + o.hamiltonian_file;
    p.hamiltonian = qgd::parse_hamiltonian(buf.str());
    if (!o.initial_ry.empty()) {
      p.initial_state = qgd::heisenberg_initial_state(
          p.hamiltonian.num_qubits(), parse_number_list(o.initial_ry));
    } else {
      p.initial_state =
          qgd::StateVector::zero_state(p.hamiltonian.num_qubits());
    }
  } else {
    throw qgd::InvalidInput("one of --model / --hamiltonian is required");
  }
  if (!o.split.empty()) p.identity_split = parse_number_list(o.split);
  return p;
}

double resolve_mu(const CommonOptions& o) {
  if (o.has_mu == o.has_epsilon)
    throw qgd::InvalidInput("exactly one of --mu / --epsilon is required");
  return o.has_mu ? o.mu : qgd::rate_from_precision(o.epsilon).mu;
}

std::string trajectory_csv(const qgd::Trajectory& t) {
  std::string csv = "step,energy,fidelity,local_prob,global_prob\n";
  for (const auto& r : t.records) {
    csv += std::to_string(r.step) + ',' + fmt(r.energy) + ',' +
           fmt(r.fidelity) + ',' + fmt(r.local_prob) + ',' +
           fmt(r.global_prob) + '\n';
  }
  return csv;
}

std::string csv_to_gnuplot(const std::string& csv) {
  std::string dat;
  bool first = true;
  std::stringstream ss(csv);
  std::string line;
  while (std::getline(ss, line)) {
    for (auto& c : line)
      if (c == ',') c = ' ';
    dat += (first ? "# " : "") + line + '\n';
    first = false;
  }
  return dat;
}

std::string vqsp_csv(const qgd::VqspResult& v) {
  std::string csv = "iteration,cost\n";
  for (std::size_t i = 0; i < v.cost_history.size(); ++i)
    csv += std::to_string(i) + ',' + fmt(v.cost_history[i]) + '\n';
  return csv;
}

json interval_json(const qgd::RateInterval& iv) {
  json j;
  j["unbounded"] = iv.unbounded;
  if (iv.unbounded)
    j["upper"] = nullptr;
  else
    j["upper"] = iv.upper;
  switch (iv.case_tag) {
    case qgd::RateCase::AllNonNegative: j["case"] = "all_nonnegative"; break;
    case qgd::RateCase::AllNonPositive: j["case"] = "all_nonpositive"; break;
    case qgd::RateCase::MixedUnbounded: j["case"] = "mixed_unbounded"; break;
    case qgd::RateCase::MixedBounded: j["case"] = "mixed_bounded"; break;
  }
  j["degenerate_ground"] = iv.degenerate_ground;
  return j;
}

json summary_json(const Problem& p, const qgd::Trajectory& t, double mu,
                  std::optional<double> epsilon, double beta,
                  std::uint64_t seed) {
  const auto interval = qgd::learning_rate_interval(t.spectrum);
  json j;
  j["model"] = p.label;
  j["mu"] = mu;
  if (epsilon)
    j["epsilon"] = *epsilon;
  else
    j["epsilon"] = nullptr;
  j["normalizer"] = t.lcu.normalizer();
  j["branches"] = t.lcu.branch_count();
  j["ancilla_qubits"] = t.lcu.ancilla_qubits();
  j["converged"] = t.converged;
  j["steps"] = t.steps_executed;
  j["final_energy"] = t.final_energy;
  j["final_fidelity"] = t.final_fidelity;
  j["final_fidelity_sq"] = t.final_fidelity_sq;
  j["ground_energy"] = t.spectrum.ground_energy();
  j["energy_rel_error"] = (t.final_energy - t.spectrum.ground_energy()) /
                          std::abs(t.spectrum.ground_energy());
  j["initial_overlap_sq"] =
      t.records.front().fidelity * t.records.front().fidelity;
  j["rate_interval"] = interval_json(interval);
  j["mu_inside_interval"] = interval.contains(mu);
  j["noise_beta"] = beta;
  j["seed"] = seed;
  if (t.vqsp) {
    j["vqsp"] = {{"final_cost", t.vqsp->final_cost},
                 {"prepared_fidelity", t.vqsp->prepared_fidelity},
                 {"reached_tolerance", t.vqsp->reached_tolerance},
                 {"restarts_used", t.vqsp->restarts_used}};
  }
  return j;
}

struct RunOptions {
  CommonOptions common;
  int max_steps = 500;
  double conv_eps = 1e-6;
  double beta = 0.0;
  std::string ancilla = "vqsp";
  std::string noise_placement = "before";
  double vqsp_eps_prime = 1e-9;
  int vqsp_restarts = 10;
  long vqsp_budget = 50000;
  long shots = 0;
  bool plot = false;
};

qgd::QgdConfig make_config(const Problem& p, const RunOptions& r) {
  qgd::QgdConfig cfg;
  cfg.hamiltonian = p.hamiltonian;
  cfg.initial_state = p.initial_state;
  if (r.common.has_mu)
    cfg.mu = r.common.mu;
  else
    cfg.epsilon = r.common.epsilon;
  cfg.identity_split = p.identity_split;
  cfg.max_steps = r.max_steps;
  cfg.convergence_epsilon = r.conv_eps;
  cfg.noise_beta = r.beta;
  if (r.noise_placement == "before")
    cfg.noise_placement = qgd::NoisePlacement::BeforePostSelection;
  else if (r.noise_placement == "after")
    cfg.noise_placement = qgd::NoisePlacement::AfterPostSelection;
  else
    throw qgd::InvalidInput("--noise-placement must be before|after");
  if (r.ancilla == "vqsp")
    cfg.ancilla_source = qgd::AncillaSource::Vqsp;
  else if (r.ancilla == "exact")
    cfg.ancilla_source = qgd::AncillaSource::Exact;
  else
    throw qgd::InvalidInput("--ancilla must be vqsp|exact");
  cfg.ansatz = p.ansatz;
  cfg.seed = r.common.seed;
  cfg.vqsp.epsilon_prime = r.vqsp_eps_prime;
  cfg.vqsp.restarts = r.vqsp_restarts;
  cfg.vqsp.max_evaluations = r.vqsp_budget;
  cfg.vqsp.shots = r.shots;
  cfg.vqsp.seed = r.common.seed;
  return cfg;
}

void add_run_flags(CLI::App* cmd, RunOptions& r) {
  cmd->add_option("--max-steps", r.max_steps, "Largest iteration count");
  cmd->add_option("--conv-eps", r.conv_eps,
                  "Energy-difference convergence threshold");
  cmd->add_option("--beta", r.beta, "Depolarizing strength (0 = noiseless)");
  cmd->add_option("--ancilla", r.ancilla, "Ancilla source: vqsp | exact");
  cmd->add_option("--noise-placement", r.noise_placement,
                  "Channel position: before | after post-selection");
  cmd->add_option("--eps-prime", r.vqsp_eps_prime,
                  "VQSP termination threshold");
  cmd->add_option("--restarts", r.vqsp_restarts, "VQSP restart count");
  cmd->add_option("--budget", r.vqsp_budget,
                  "VQSP evaluation budget per restart");
  cmd->add_option("--shots", r.shots,
                  "Measurement shots for VQSP probabilities (0 = exact)");
  cmd->add_flag("--plot", r.plot, "Also write gnuplot-ready .dat companions");
}

int cmd_run(const RunOptions& r) {
  const Problem p = resolve_problem(r.common);
  const fs::path dir = output_dir(r.common.out);
  fs::create_directories(dir);

  const qgd::QgdConfig cfg = make_config(p, r);
  const qgd::Trajectory t = qgd::run(cfg);

  const std::string csv = trajectory_csv(t);
  write_text(dir / "trajectory.csv", csv);
  if (r.plot) write_text(dir / "trajectory.dat", csv_to_gnuplot(csv));
  if (t.vqsp) write_text(dir / "vqsp.csv", vqsp_csv(*t.vqsp));

  const double mu = cfg.mu ? *cfg.mu : qgd::rate_from_precision(*cfg.epsilon).mu;
  json summary = summary_json(p, t, mu, cfg.epsilon, r.beta, r.common.seed);
  write_text(dir / "summary.json", summary.dump(2) + "\n");

  std::cout << "model " << p.label << ": " << (t.converged ? "converged" : "did not converge")
            << " after " << t.steps_executed << " steps, E = "
            << fmt(t.final_energy) << ", fidelity = " << fmt(t.final_fidelity)
            << "\n";
  return t.converged ? kExitOk : kExitNotConverged;
}

int cmd_compare(const RunOptions& r, const std::vector<int>& vqe_depths) {
  Problem p = resolve_problem(r.common);
  const fs::path dir = output_dir(r.common.out);
  fs::create_directories(dir);

  qgd::QgdConfig cfg = make_config(p, r);
  cfg.ancilla_source = qgd::AncillaSource::Exact;  // deterministic comparison
  const qgd::Trajectory t = qgd::run(cfg);
  const double mu = cfg.mu ? *cfg.mu : qgd::rate_from_precision(*cfg.epsilon).mu;

  std::string csv = "method,step,energy,prob\n";
  for (const auto& rec : t.records)
    csv += "qgd," + std::to_string(rec.step) + ',' + fmt(rec.energy) + ',' +
           fmt(rec.local_prob) + '\n';

  const qgd::GradientLcu lcu =
      qgd::GradientLcu::build(p.hamiltonian, mu, p.identity_split);
  qgd::StateVector phi = p.initial_state;
  csv += "fqe,0," + fmt(qgd::expectation(phi, p.hamiltonian)) + ",1\n";
  for (int s = 1; s <= t.steps_executed; ++s) {
    qgd::FqeStepResult step = qgd::fqe_step(phi, lcu);
    phi = std::move(step.state);
    csv += "fqe," + std::to_string(s) + ',' +
           fmt(qgd::expectation(phi, p.hamiltonian)) + ',' +
           fmt(step.prob_tilde) + '\n';
  }

  for (int depth : vqe_depths) {
    qgd::VqeOptions vo;
    vo.depth = depth;
    vo.seed = r.common.seed;
    const qgd::VqeResult v = qgd::vqe_run(p.hamiltonian, vo);
    for (std::size_t i = 0; i < v.energy_history.size(); ++i)
      csv += "vqe" + std::to_string(depth) + ',' + std::to_string(i) + ',' +
             fmt(v.energy_history[i]) + ",\n";
  }

  write_text(dir / "compare.csv", csv);
  if (r.plot) write_text(dir / "compare.dat", csv_to_gnuplot(csv));
  std::cout << "wrote " << (dir / "compare.csv").string() << "\n";
  return kExitOk;
}

int cmd_analyze(const CommonOptions& o) {
  const Problem p = resolve_problem(o);
  const double mu = resolve_mu(o);

  const qgd::SpectrumReport s = qgd::spectrum(p.hamiltonian, mu);
  const qgd::RateInterval interval = qgd::learning_rate_interval(s);
  const qgd::GradientLcu lcu =
      qgd::GradientLcu::build(p.hamiltonian, mu, p.identity_split);

  std::printf("model %s: n = %zu qubits, K+1 = %zu branches, k~ = %zu\n",
              p.label.c_str(), p.hamiltonian.num_qubits(), lcu.branch_count(),
              lcu.ancilla_qubits());
  std::printf("mu = %s, N_y = %s\n", fmt(mu).c_str(),
              fmt(lcu.normalizer()).c_str());
  std::printf("%4s %16s %16s\n", "i", "E_i", "|lambda_i|");
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
    std::printf("%4zu %16s %16s\n", i, fmt(s.eigenvalues[i]).c_str(),
                fmt(s.gradient_magnitudes[i]).c_str());
  std::printf("dominant index: %zu\n", s.dominant_index);
  if (interval.unbounded)
    std::printf("learning-rate interval: (0, +inf)\n");
  else
    std::printf("learning-rate interval: (0, %s)\n",
                fmt(interval.upper).c_str());
  std::printf("mu inside interval: %s\n",
              interval.contains(mu) ? "yes" : "no");

  // measurement-count bound vs the exact 1/P(1) for the preset initial state
  std::vector<double> overlaps_sq(s.eigenvalues.size());
  for (std::size_t i = 0; i < s.eigenvalues.size(); ++i) {
    std::complex<double> ov = 0.0;
    for (std::size_t w = 0; w < p.initial_state.dim(); ++w)
      ov += std::conj(s.eigenvectors(w, i)) * p.initial_state.amplitude(w);
    overlaps_sq[i] = std::norm(ov);
  }
  const auto probs = qgd::closed_form_probability(
      s.gradient_magnitudes, overlaps_sq, lcu.normalizer(), 1);
  const double c0 = std::sqrt(overlaps_sq[0]);
  if (c0 > 0.0) {
    const auto bound = qgd::sampling_bound(
        lcu, c0, s.gradient_magnitudes[0]);
    std::printf("1/P(1): exact = %s, bound N_y^2-form = %s, "
                "bound as printed (N_y) = %s\n",
                fmt(1.0 / probs[0]).c_str(), fmt(bound.squared).c_str(),
                fmt(bound.printed).c_str());
  }

  const auto cost = qgd::gate_cost_estimate(
      p.hamiltonian.locality(), lcu.branch_count() - 1, lcu.ancilla_qubits());
  const long long d1 =
      p.ansatz ? static_cast<long long>(p.ansatz->layers) : 3;
  const auto depth = qgd::lcu_depth_comparison(d1, cost.t_total);
  std::printf("gate cost: T_total = l*(K+1)*k~^2 = %lld (c = 1)\n",
              cost.t_total);
  std::printf("depth: inverse-disposal 2*D1+D2 = %lld, "
              "Hadamard-disposal D1+D2 = %lld (D1 = %lld layers)\n",
              depth.inverse_disposal, depth.hadamard_disposal, d1);
  return kExitOk;
}

int cmd_table1(const RunOptions& r, const std::string& betas_text) {
  Problem p = resolve_problem(r.common);
  if (!r.common.has_epsilon)
    throw qgd::InvalidInput("table1 needs --epsilon (read-out rule depends on it)");
  const fs::path dir = output_dir(r.common.out);
  fs::create_directories(dir);

  std::vector<double> betas = parse_number_list(
      betas_text.empty() ? "0,0.02,0.04,0.06,0.08,0.1" : betas_text);
  for (double b : betas)
    if (b < 0.0 || b > 1.0)
      throw qgd::InvalidInput("beta values must lie in [0, 1]");

  // Noiseless reference run fixes the read-out step and, if requested,
  // the trained ancilla circuit reused across the sweep.
  qgd::QgdConfig base = make_config(p, r);
  base.noise_beta = 0.0;
  const qgd::Trajectory noiseless = qgd::run(base);
  const int readout = qgd::noise_readout_step(noiseless, r.common.epsilon);

  qgd::QgdConfig sweep = base;
  if (noiseless.vqsp) sweep.ancilla_theta = noiseless.vqsp->theta_opt;
  sweep.max_steps = readout;
  sweep.convergence_epsilon = 1e-300;  // run exactly `readout` steps

  auto run_beta = [&](double beta) {
    qgd::QgdConfig cfg = sweep;
    cfg.noise_beta = beta;
    return qgd::run(cfg);
  };
  std::vector<std::future<qgd::Trajectory>> jobs;
  jobs.reserve(betas.size());
  for (double beta : betas)
    jobs.push_back(std::async(std::launch::async, run_beta, beta));

  const double e0 = noiseless.spectrum.ground_energy();
  std::string csv = "beta,energy_rel_error,fidelity,fidelity_sq\n";
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const qgd::Trajectory t = jobs[i].get();
    const double rel = (t.final_energy - e0) / std::abs(e0);
    csv += fmt(betas[i]) + ',' + fmt(rel) + ',' + fmt(t.final_fidelity) +
           ',' + fmt(t.final_fidelity_sq) + '\n';
  }
  write_text(dir / "table1.csv", csv);
  if (r.plot) write_text(dir / "table1.dat", csv_to_gnuplot(csv));
  std::cout << "read-out step " << readout << ", wrote "
            << (dir / "table1.csv").string() << "\n";
  return kExitOk;
}

int cmd_vqsp_train(const RunOptions& r) {
  const Problem p = resolve_problem(r.common);
  const double mu = resolve_mu(r.common);
  const fs::path dir = output_dir(r.common.out);
  fs::create_directories(dir);

  const qgd::GradientLcu lcu =
      qgd::GradientLcu::build(p.hamiltonian, mu, p.identity_split);
  qgd::AnsatzSpec spec =
      p.ansatz ? *p.ansatz
               : qgd::AnsatzSpec{lcu.ancilla_qubits(), 3,
                                 lcu.ancilla_qubits() <= 3
                                     ? qgd::AnsatzPattern::RyCz
                                     : qgd::AnsatzPattern::RyCry};
  qgd::VqspOptions opts;
  opts.epsilon_prime = r.vqsp_eps_prime;
  opts.restarts = r.vqsp_restarts;
  opts.max_evaluations = r.vqsp_budget;
  opts.shots = r.shots;
  opts.seed = r.common.seed;

  const qgd::VqspResult v = qgd::train(spec, lcu.amplitude_vector(), opts);
  write_text(dir / "vqsp.csv", vqsp_csv(v));

  json j;
  j["model"] = p.label;
  j["mu"] = mu;
  j["final_cost"] = v.final_cost;
  j["prepared_fidelity"] = v.prepared_fidelity;
  j["reached_tolerance"] = v.reached_tolerance;
  j["restarts_used"] = v.restarts_used;
  j["evaluations"] = v.evaluations;
  j["theta_opt"] = v.theta_opt;
  write_text(dir / "vqsp_result.json", j.dump(2) + "\n");

  std::cout << "final cost " << fmt(v.final_cost) << ", fidelity "
            << fmt(v.prepared_fidelity) << " (" << v.restarts_used
            << " restarts)\n";
  return v.reached_tolerance ? kExitOk : kExitNotConverged;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iterative ground-state preparation by projected gradient "
               "iteration"};
  app.require_subcommand(1);
  app.set_config("--config")->description(
      "Config file with section-prefixed keys (run.model=deuteron)");

  RunOptions run_opts;
  auto* run_cmd = app.add_subcommand("run", "Iterate and write trajectory");
  add_problem_flags(run_cmd, run_opts.common, /*need_seed=*/true);
  add_run_flags(run_cmd, run_opts);

  RunOptions cmp_opts;
  std::vector<int> vqe_depths;
  auto* cmp_cmd =
      app.add_subcommand("compare", "Side-by-side baseline comparison");
  add_problem_flags(cmp_cmd, cmp_opts.common, /*need_seed=*/true);
  add_run_flags(cmp_cmd, cmp_opts);
  cmp_cmd->add_option("--vqe-depth", vqe_depths,
                      "Also run the VQE baseline at these ansatz depths");

  CommonOptions analyze_opts;
  auto* analyze_cmd =
      app.add_subcommand("analyze", "Spectrum and learning-rate report");
  add_problem_flags(analyze_cmd, analyze_opts, /*need_seed=*/false);

  RunOptions table_opts;
  std::string betas_text;
  auto* table_cmd =
      app.add_subcommand("table1", "Depolarizing-noise sweep");
  add_problem_flags(table_cmd, table_opts.common, /*need_seed=*/true);
  add_run_flags(table_cmd, table_opts);
  table_cmd->add_option("--betas", betas_text,
                        "Comma list of noise strengths "
                        "(default 0,0.02,0.04,0.06,0.08,0.1)");

  RunOptions vqsp_opts;
  auto* vqsp_cmd =
      app.add_subcommand("vqsp-train", "Train the ancilla circuit");
  add_problem_flags(vqsp_cmd, vqsp_opts.common, /*need_seed=*/true);
  add_run_flags(vqsp_cmd, vqsp_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;  // help/version exit 0
  }

  try {
    if (run_cmd->parsed()) return cmd_run(run_opts);
    if (cmp_cmd->parsed()) return cmd_compare(cmp_opts, vqe_depths);
    if (analyze_cmd->parsed()) return cmd_analyze(analyze_opts);
    if (table_cmd->parsed()) return cmd_table1(table_opts, betas_text);
    if (vqsp_cmd->parsed()) return cmd_vqsp_train(vqsp_opts);
  } catch (const qgd::InvalidInput& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const qgd::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitConfigError;
}
