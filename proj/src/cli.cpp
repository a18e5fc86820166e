#include "randmaj/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "randmaj/experiments.hpp"
#include "randmaj/kernels.hpp"
#include "randmaj/sampling.hpp"
#include "randmaj/stats.hpp"

namespace randmaj::cli {
namespace {

using json = nlohmann::ordered_json;

// Stream layout: pair experiments at dimension n use stream indices
// (n << 32) + chunk, so fig2/fig3/fig4 share samples at equal n and seed.
// The chain experiments start at index 0.
RngStream pair_stream(std::uint64_t seed, std::size_t n) {
  return RngStream(seed, static_cast<std::uint64_t>(n) << 32);
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct Defaults {
  std::vector<std::size_t> n_list;
  std::uint64_t samples;
  std::size_t k_max;
};

Defaults defaults_for(Experiment e) {
  switch (e) {
    case Experiment::Fig2: {
      std::vector<std::size_t> ns;
      for (std::size_t n = 2; n <= 1024; n *= 2) ns.push_back(n);
      return {ns, 1000000, 10000};
    }
    case Experiment::Fig3: return {{32}, 100000, 10000};
    case Experiment::Fig4: return {{8, 64, 1024}, 500000, 10000};
    case Experiment::Persistence: return {{}, 100000, 1000};
    case Experiment::Sample: return {{3}, 1, 1};
  }
  return {{}, 1, 1};
}

// Collects CSV text; LF line endings.
class Csv {
 public:
  explicit Csv(std::initializer_list<std::string> header) {
    row(std::vector<std::string>(header));
  }
  void row(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) body_ << ',';
      body_ << cells[i];
    }
    body_ << '\n';
  }
  std::string str() const { return body_.str(); }

 private:
  std::ostringstream body_;
};

struct Output {
  std::string csv;
  json results;
};

ParallelOptions parallel(const RunConfig& c) { return {c.threads, c.chunk_size}; }

Output run_fig2(const RunConfig& c) {
  Csv csv({"n", "p_hat", "std_err"});
  std::vector<PowerLawPoint> all, asymptotic;
  json rows = json::array();
  for (std::size_t n : c.n_list) {
    const auto e = estimate_convertibility(n, c.samples, pair_stream(c.master_seed, n),
                                           parallel(c), DirichletParam(c.alpha));
    csv.row({std::to_string(n), fmt17(e.value), fmt17(e.std_error)});
    rows.push_back({{"n", n}, {"p_hat", e.value}, {"std_err", e.std_error}});
    if (e.value > 0.0) {
      all.push_back({static_cast<double>(n), e.value, e.std_error});
      if (n >= c.fit_min_n) asymptotic.push_back(all.back());
    }
  }
  json results = {{"points", rows}};
  auto fit_json = [](const PowerLawFit& f, std::size_t m) {
    return json{{"amplitude_b", f.amplitude_b},
                {"theta", f.exponent_theta},
                {"sigma_theta", f.sigma_theta},
                {"points", m}};
  };
  if (all.size() >= 3) {
    results["fit_all_points"] = fit_json(fit_power_law(all), all.size());
  }
  const auto& used = asymptotic.size() >= 3 ? asymptotic : all;
  if (used.size() >= 3) {
    const PowerLawFit f = fit_power_law(used);
    results["fit"] = fit_json(f, used.size());
    results["fit"]["min_n"] = static_cast<std::size_t>(used.front().n);
    // trailing row: n = "fit", p_hat = amplitude b, std_err = theta
    csv.row({"fit", fmt17(f.amplitude_b), fmt17(f.exponent_theta)});
  }
  return {csv.str(), results};
}

Output run_fig3(const RunConfig& c) {
  Csv csv({"t", "empirical_cdf", "arcsine_cdf"});
  json per_n = json::array();
  for (std::size_t n : c.n_list) {
    const EmpiricalCdf cdf = occupation_time_experiment(
        n, c.samples, pair_stream(c.master_seed, n), parallel(c), DirichletParam(c.alpha));
    std::vector<double> lattice;
    for (std::size_t j = 0; j <= n; ++j) {
      const double t = static_cast<double>(j) / static_cast<double>(n);
      lattice.push_back(t);
      csv.row({fmt17(t), fmt17(cdf(t)), fmt17(arcsine_cdf(t))});
    }
    per_n.push_back({{"n", n},
                     {"ks_lattice", ks_distance_at(cdf, arcsine_cdf, lattice)},
                     {"ks_continuous", ks_distance(cdf, arcsine_cdf)}});
  }
  return {csv.str(), {{"occupation_time", per_n}}};
}

Output run_fig4(const RunConfig& c) {
  std::vector<EmpiricalCdf> finite;
  for (std::size_t n : c.n_list) {
    finite.push_back(pi_distribution_experiment(n, c.samples, pair_stream(c.master_seed, n),
                                                parallel(c), DirichletParam(c.alpha)));
  }
  const PiLimitResult limit = pi_limit_experiment(c.samples, c.k_max, RngStream(c.master_seed, 0),
                                                  parallel(c), c.early_stop);

  std::vector<std::string> header{"p"};
  for (std::size_t n : c.n_list) header.push_back("F_" + std::to_string(n));
  header.push_back("F_inf");
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  // p on a uniform grid of step 0.005
  constexpr int kGrid = 200;
  for (int i = 0; i <= kGrid; ++i) {
    const double p = static_cast<double>(i) / kGrid;
    out << fmt17(p);
    for (const auto& f : finite) out << ',' << fmt17(f(p));
    out << ',' << fmt17(limit.clamped(p)) << '\n';
  }

  json sup = json::array();
  for (std::size_t i = 0; i < c.n_list.size(); ++i) {
    sup.push_back({{"n", c.n_list[i]},
                   {"sup_distance_to_limit", ks_distance(finite[i], limit.clamped)},
                   {"mass_at_one", finite[i].mass_at(1.0)}});
  }
  std::size_t above_one = 0;
  double raw_max = 0.0;
  for (double r : limit.raw) {
    above_one += r > 1.0 ? 1 : 0;
    raw_max = std::max(raw_max, r);
  }
  json results = {{"finite_n", sup},
                  {"limit",
                   {{"k_max", c.k_max},
                    {"early_stop", c.early_stop},
                    {"early_stopped_samples", limit.early_stopped},
                    {"raw_values_above_one", above_one},
                    {"raw_max", raw_max},
                    {"mass_at_one_after_clamp", limit.clamped.mass_at(1.0)}}}};
  return {out.str(), results};
}

Output run_persistence(const RunConfig& c) {
  Csv csv({"k", "p_k", "std_err"});
  const auto p = persistence_irw(c.k_max, c.samples, RngStream(c.master_seed, 0), parallel(c));
  for (std::size_t k = 0; k < p.size(); ++k) {
    csv.row({std::to_string(k + 1), fmt17(p[k].value), fmt17(p[k].std_error)});
  }
  return {csv.str(),
          {{"p_1", p.front().value}, {"p_k_max", p.back().value}, {"k_max", c.k_max}}};
}

Output run_sample(const RunConfig& c, std::ostream& out) {
  Csv csv({"sample", "component", "value"});
  json points = json::array();
  const std::size_t n = c.n_list.front();
  RngStream rng(c.master_seed, 0);
  for (std::uint64_t s = 0; s < c.samples; ++s) {
    const ProbVector x = sample_dirichlet(n, DirichletParam(c.alpha), rng);
    json point = json::array();
    for (std::size_t i = 0; i < n; ++i) {
      csv.row({std::to_string(s), std::to_string(i), fmt17(x[i])});
      out << (i ? "," : "") << fmt17(x[i]);
      point.push_back(x[i]);
    }
    out << '\n';
    points.push_back(point);
  }
  return {csv.str(), {{"points", points}}};
}

void validate(const RunConfig& c) {
  if (c.samples < 1) throw UsageError("--samples must be at least 1");
  if (c.k_max < 1) throw UsageError("--kmax must be at least 1");
  if (c.chunk_size < 1) throw UsageError("--chunk-size must be at least 1");
  if (c.threads < 1) throw UsageError("--threads must be at least 1");
  if (!(c.alpha > 0.0)) throw UsageError("--alpha must be positive");
  const bool needs_n = c.experiment != Experiment::Persistence;
  if (needs_n && c.n_list.empty()) throw UsageError("--n is required");
  for (std::size_t n : c.n_list) {
    if (n < 1) throw UsageError("--n values must be at least 1");
    if (c.experiment == Experiment::Fig4 && n < 2) throw UsageError("fig4 needs --n >= 2");
  }
}

json config_json(const RunConfig& c) {
  return {{"experiment", experiment_name(c.experiment)},
          {"n_list", c.n_list},
          {"samples", c.samples},
          {"k_max", c.k_max},
          {"alpha", c.alpha},
          {"master_seed", c.master_seed},
          {"chunk_size", c.chunk_size},
          {"threads", c.threads},
          {"output_dir", c.output_dir},
          {"fit_min_n", c.fit_min_n},
          {"early_stop", c.early_stop}};
}

bool write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) return false;
  f << text;
  f.close();
  return static_cast<bool>(f);
}

}  // namespace

std::string experiment_name(Experiment e) {
  switch (e) {
    case Experiment::Fig2: return "fig2";
    case Experiment::Fig3: return "fig3";
    case Experiment::Fig4: return "fig4";
    case Experiment::Persistence: return "persistence";
    case Experiment::Sample: return "sample";
  }
  return "unknown";
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args,
                                    std::ostream& help_out) {
  CLI::App app{"Monte Carlo experiments on majorization of random simplex points", "randmaj"};
  app.set_help_flag("-h,--help", "Print this help message and exit");

  std::string experiment;
  std::vector<std::size_t> n_list;
  std::uint64_t samples = 0;
  std::size_t k_max = 0;
  RunConfig c;
  std::size_t threads = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("experiment", experiment, "fig2 | fig3 | fig4 | persistence | sample")
      ->required()
      ->check(CLI::IsMember({"fig2", "fig3", "fig4", "persistence", "sample"}));
  app.add_option("--seed", c.master_seed, "Master seed (64-bit unsigned)");
  auto* samples_opt = app.add_option("--samples", samples, "Samples per estimate")
                          ->check(CLI::PositiveNumber);
  auto* n_opt = app.add_option("--n", n_list, "Dimension; repeatable")
                    ->check(CLI::PositiveNumber);
  auto* kmax_opt = app.add_option("--kmax", k_max, "Truncation / horizon for chain experiments")
                       ->check(CLI::PositiveNumber);
  app.add_option("--alpha", c.alpha, "Dirichlet concentration of the simplex sampler")
      ->check(CLI::PositiveNumber);
  app.add_option("--chunk-size", c.chunk_size, "Samples per RNG stream chunk")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads (does not affect results)")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", c.output_dir, "Output directory");
  app.add_option("--fit-min-n", c.fit_min_n, "Smallest n used in the fig2 power-law fit")
      ->check(CLI::PositiveNumber);
  app.add_flag("--early-stop", c.early_stop,
               "fig4: stop a limit chain once both prefix sums exceed 1e3 and the infimum is below 0.9");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    help_out << app.help();
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (experiment == "fig2") c.experiment = Experiment::Fig2;
  else if (experiment == "fig3") c.experiment = Experiment::Fig3;
  else if (experiment == "fig4") c.experiment = Experiment::Fig4;
  else if (experiment == "persistence") c.experiment = Experiment::Persistence;
  else c.experiment = Experiment::Sample;

  const Defaults d = defaults_for(c.experiment);
  c.n_list = n_opt->count() ? n_list : d.n_list;
  c.samples = samples_opt->count() ? samples : d.samples;
  c.k_max = kmax_opt->count() ? k_max : d.k_max;
  c.threads = threads;
  validate(c);
  return c;
}

RunConfig parse_args(const std::vector<std::string>& args) {
  std::ostringstream help;
  auto c = parse_args(args, help);
  if (!c) throw UsageError(help.str());
  return *c;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    validate(config);
  } catch (const UsageError& e) {
    err << "randmaj: " << e.what() << '\n';
    return e.exit_code();
  }
  namespace fs = std::filesystem;
  const fs::path dir(config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) {
    err << "randmaj: cannot create output directory " << dir << '\n';
    return 1;
  }

  const auto start = std::chrono::steady_clock::now();
  Output o;
  try {
    switch (config.experiment) {
      case Experiment::Fig2: o = run_fig2(config); break;
      case Experiment::Fig3: o = run_fig3(config); break;
      case Experiment::Fig4: o = run_fig4(config); break;
      case Experiment::Persistence: o = run_persistence(config); break;
      case Experiment::Sample: o = run_sample(config, out); break;
    }
  } catch (const std::invalid_argument& e) {
    err << "randmaj: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "randmaj: " << e.what() << '\n';
    return 2;
  }
  const double wall =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const std::string name = experiment_name(config.experiment);
  json manifest = {{"tool", "randmaj"},
                   {"experiment", name},
                   {"master_seed", config.master_seed},
                   {"config", config_json(config)},
                   {"kernel_backend", std::string(kernels::backend_name(kernels::active_backend()))},
                   {"wall_time_seconds", wall},
                   {"csv", name + ".csv"},
                   {"results", o.results}};
  if (!write_file(dir / (name + ".csv"), o.csv) ||
      !write_file(dir / "manifest.json", manifest.dump(2) + "\n")) {
    err << "randmaj: failed to write output in " << dir << '\n';
    return 1;
  }
  return 0;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  try {
    auto config = parse_args(args, out);
    if (!config) return 0;
    return run(*config, out, err);
  } catch (const UsageError& e) {
    err << "randmaj: " << e.what() << '\n';
    return e.exit_code();
  }
}

}  // namespace randmaj::cli
