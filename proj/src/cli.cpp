#include "wigner/cli.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wigner/chaos.hpp"
#include "wigner/kernel_io.hpp"
#include "wigner/pairings.hpp"
#include "wigner/presets.hpp"
#include "wigner/report.hpp"
#include "wigner/stein.hpp"

namespace wigner::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr double kMomentIdentityRelTol = 1e-10;
constexpr double kUnitNormTol = 1e-10;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

json config_json(const RunConfig& cfg) {
  json j;
  j["command"] = command_name(cfg.command);
  switch (cfg.command) {
    case Command::pairings:
      j["points"] = cfg.points;
      return j;
    case Command::verify:
      j["family"] = cfg.family;
      j["ks"] = cfg.ks;
      break;
    default:
      if (cfg.kernel_path) j["kernel"] = *cfg.kernel_path;
      if (cfg.preset) j["preset"] = *cfg.preset;
  }
  if (cfg.cells) j["cells"] = cfg.cells;
  j["width"] = cfg.width;
  if (cfg.command == Command::moments) j["k"] = cfg.k;
  if (cfg.command == Command::simulate || cfg.command == Command::verify) {
    j["dim"] = cfg.dim;
    j["trials"] = cfg.trials;
    j["seed"] = cfg.seed;
  }
  j["budget"] = cfg.budget;
  return j;
}

Kernel load_kernel(const RunConfig& cfg) {
  if (cfg.kernel_path.has_value() == cfg.preset.has_value())
    throw ShapeError("exactly one of --kernel or --preset is required");
  if (cfg.kernel_path) return read_kernel(*cfg.kernel_path);
  const auto spec = parse_preset(*cfg.preset);
  const Index cells = cfg.cells ? cfg.cells : preset_default_cells(spec);
  return preset_kernel(spec, GridSpec(cells, cfg.width));
}

void write_report(const RunConfig& cfg, std::ostream& out, const std::string& text) {
  if (cfg.output_path) {
    std::ofstream file(*cfg.output_path);
    if (!file) throw ShapeError("cannot write " + *cfg.output_path);
    file << text;
  } else {
    out << text;
  }
}

int do_pairings(const RunConfig& cfg, std::string& text) {
  const auto counts = count_pairings(cfg.points);
  json j;
  j["points"] = counts.points;
  j["all"] = counts.all;
  j["noncrossing"] = counts.noncrossing;
  j["config"] = config_json(cfg);
  text = j.dump() + "\n";
  return kExitOk;
}

int do_moments(const RunConfig& cfg, std::string& text) {
  if (cfg.k < 1) throw ShapeError("--k must be >= 1");
  const auto f = load_kernel(cfg);
  const auto F = ChaosElement::from_kernel(f);
  json moments = json::array();
  double max_imag = 0;
  std::vector<double> values;
  for (int i = 1; i <= cfg.k; ++i) {
    const auto m = moment(F, i, cfg.budget);
    values.push_back(m.real());
    moments.push_back(m.real());
    max_imag = std::max(max_imag, std::abs(m.imag()));
  }
  json j;
  j["moments"] = std::move(moments);
  j["moments_max_imag"] = max_imag;
  int status = kExitOk;
  const bool unit = f.order() >= 1 && std::abs(f.norm() - 1.0) <= kUnitNormTol;
  if (unit) {
    const double deficit = fourth_moment_deficit(f, kUnitNormTol);
    j["deficit"] = deficit;
    if (cfg.k >= 4 && is_mirror_symmetric(f, 1e-12)) {
      const double err = std::abs(values[3] - 2.0 - deficit);
      j["identity_error"] = err;
      if (err > kMomentIdentityRelTol * std::max(1.0, std::abs(values[3]))) status = kExitViolation;
    }
  } else {
    j["deficit"] = nullptr;
  }
  j["tolerances"] = {{"fourth_moment_identity_rel", kMomentIdentityRelTol}, {"unit_norm", kUnitNormTol}};
  j["config"] = config_json(cfg);
  text = j.dump() + "\n";
  return status;
}

int do_deficit(const RunConfig& cfg, std::string& text) {
  const auto f = load_kernel(cfg);
  json j;
  j["deficit"] = fourth_moment_deficit(f, kUnitNormTol);
  j["order"] = f.order();
  j["mirror_symmetric"] = is_mirror_symmetric(f, 1e-12);
  j["tolerances"] = {{"unit_norm", kUnitNormTol}};
  j["config"] = config_json(cfg);
  text = j.dump() + "\n";
  return kExitOk;
}

int do_stein(const RunConfig& cfg, std::string& text) {
  const auto f = load_kernel(cfg);
  const auto rep = stein_discrepancy_sq(f);
  bool ok = rep.delta_sq <= rep.bound_rhs + kSteinBoundSlack;
  json terms = json::array();
  for (const auto& t : rep.per_term) {
    const bool term_ok = t.norm_sq <= t.contraction_norm + kSteinBoundSlack;
    ok = ok && term_ok;
    terms.push_back({{"k", t.k}, {"p", t.p}, {"norm_sq", t.norm_sq}, {"contraction_norm", t.contraction_norm},
                     {"within_bound", term_ok}});
  }
  json j;
  j["order"] = rep.order;
  j["delta_sq"] = rep.delta_sq;
  j["deficit"] = rep.deficit;
  j["bound_rhs"] = rep.bound_rhs;
  j["discrepancy_bound"] = rep.discrepancy_bound;
  j["theorem_w2_bound"] = rep.theorem_w2_bound;
  j["bound_satisfied"] = ok;
  j["per_term"] = std::move(terms);
  j["tolerances"] = {{"bound_slack", kSteinBoundSlack}, {"unit_norm", kSteinNormTol}};
  j["config"] = config_json(cfg);
  text = j.dump() + "\n";
  return ok ? kExitOk : kExitViolation;
}

SimulationConfig simulation_config(const RunConfig& cfg) {
  SimulationConfig sim;
  sim.dim = cfg.dim;
  sim.trials = cfg.trials;
  sim.seed = cfg.seed;
  sim.threads = cfg.threads;
  sim.epsilon_n = cfg.epsilon_n;
  return sim;
}

json report_json(const InequalityReport& rep) {
  json j;
  j["order"] = rep.order;
  j["w2_est"] = rep.w2_est;
  j["w2_spread"] = rep.w2_spread;
  j["entropy_est"] = rep.entropy_est;
  j["deficit"] = rep.deficit;
  j["delta_sq"] = rep.delta_sq;
  j["sigma_upper"] = rep.sigma_upper;
  j["talagrand_rhs"] = rep.talagrand_rhs;
  j["ws_rhs"] = rep.ws_rhs;
  j["wsh_rhs"] = rep.wsh_rhs;
  j["theorem_rhs"] = rep.theorem_rhs;
  j["violation"] = rep.violation;
  json trials = json::array();
  for (const auto& t : rep.trials)
    trials.push_back({{"seed", t.seed}, {"w2", t.w2}, {"entropy", t.entropy}, {"jittered", t.jittered}});
  j["trials"] = std::move(trials);
  j["tolerances"] = {{"epsilon_n", rep.epsilon_n}};
  return j;
}

int do_simulate(const RunConfig& cfg, std::string& text) {
  const auto f = load_kernel(cfg);
  const auto rep = inequality_report(f, simulation_config(cfg));
  auto j = report_json(rep);
  j["config"] = config_json(cfg);
  text = j.dump() + "\n";
  return rep.violation ? kExitViolation : kExitOk;
}

int do_verify(const RunConfig& cfg, std::string& text, Format format) {
  if (cfg.family != "diagonal") throw ShapeError("verify: unknown family '" + cfg.family + "'");
  if (cfg.ks.empty()) throw ShapeError("verify: --ks is empty");
  std::vector<std::pair<Index, InequalityReport>> rows;
  bool violation = false;
  for (Index k : cfg.ks) {
    const GridSpec grid(cfg.cells ? cfg.cells : k, cfg.width);
    const auto rep = inequality_report(diagonal_family(grid, k), simulation_config(cfg));
    violation = violation || rep.violation;
    rows.emplace_back(k, rep);
  }
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& [k, rep] : rows) {
      auto j = report_json(rep);
      j["k"] = k;
      arr.push_back(std::move(j));
    }
    json j;
    j["rows"] = std::move(arr);
    j["violation"] = violation;
    j["config"] = config_json(cfg);
    text = j.dump() + "\n";
  } else {
    std::ostringstream os;
    os << "# family=" << cfg.family << " dim=" << cfg.dim << " trials=" << cfg.trials << " seed=" << cfg.seed
       << " epsilon_n=" << format_double(cfg.epsilon_n) << '\n';
    os << "k,deficit,delta_sq,theorem_rhs,w2_est,w2_spread,entropy_est\n";
    for (const auto& [k, rep] : rows)
      os << k << ',' << format_double(rep.deficit) << ',' << format_double(rep.delta_sq) << ','
         << format_double(rep.theorem_rhs) << ',' << format_double(rep.w2_est) << ','
         << format_double(rep.w2_spread) << ',' << format_double(rep.entropy_est) << '\n';
    text = os.str();
  }
  return violation ? kExitViolation : kExitOk;
}

}  // namespace

const char* command_name(Command c) {
  switch (c) {
    case Command::pairings: return "pairings";
    case Command::moments: return "moments";
    case Command::deficit: return "deficit";
    case Command::stein: return "stein";
    case Command::simulate: return "simulate";
    case Command::verify: return "verify";
  }
  return "?";
}

void apply_environment(RunConfig& cfg) {
  if (const char* v = std::getenv("WIGNER_COEFF_BUDGET")) {
    Index budget = 0;
    const std::string s(v);
    const auto res = std::from_chars(s.data(), s.data() + s.size(), budget);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || budget <= 0)
      throw ShapeError("WIGNER_COEFF_BUDGET must be a positive integer");
    cfg.budget = budget;
  }
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Format format = cfg.format.value_or(cfg.command == Command::verify ? Format::csv : Format::json);
  try {
    if (format == Format::csv && cfg.command != Command::verify)
      throw ShapeError(std::string(command_name(cfg.command)) + ": only json output is supported");
    std::string text;
    int status = kExitOk;
    switch (cfg.command) {
      case Command::pairings: status = do_pairings(cfg, text); break;
      case Command::moments: status = do_moments(cfg, text); break;
      case Command::deficit: status = do_deficit(cfg, text); break;
      case Command::stein: status = do_stein(cfg, text); break;
      case Command::simulate: status = do_simulate(cfg, text); break;
      case Command::verify: status = do_verify(cfg, text, format); break;
    }
    write_report(cfg, out, text);
    if (status == kExitViolation) err << "wigner " << command_name(cfg.command) << ": tolerance exceeded\n";
    return status;
  } catch (const std::exception& e) {
    err << "wigner " << command_name(cfg.command) << ": " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace wigner::cli
