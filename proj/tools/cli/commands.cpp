#include "cli/commands.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "astau/calibration.hpp"
#include "astau/errors.hpp"
#include "astau/symbolic.hpp"
#include "cli/run_config.hpp"
#include "selftest/acceptance.hpp"

namespace astau::cli {

namespace {

namespace fs = std::filesystem;

struct Overrides {
  std::optional<std::string> method;
  std::optional<double> s, kappa, s_min, s_max, step, eps, truncation, fd_step;
  std::optional<int> quad_order, max_weight, n_cut;
  bool json = false;
  std::string out;
  std::string filter;
  std::string config_path = "astau.cfg";
};

template <class T>
void apply(T& dst, const std::optional<T>& src) {
  if (src) dst = *src;
}

RunConfig resolve(const Overrides& o) {
  RunConfig cfg;
  if (fs::exists(o.config_path)) cfg = load_config(o.config_path);
  apply(cfg.method, o.method);
  apply(cfg.s, o.s);
  apply(cfg.kappa, o.kappa);
  apply(cfg.s_min, o.s_min);
  apply(cfg.s_max, o.s_max);
  apply(cfg.step, o.step);
  apply(cfg.eps, o.eps);
  apply(cfg.truncation, o.truncation);
  apply(cfg.fd_step, o.fd_step);
  apply(cfg.quad_order, o.quad_order);
  apply(cfg.max_weight, o.max_weight);
  apply(cfg.n_cut, o.n_cut);
  if (o.json) cfg.format = "json";
  validate(cfg);
  return cfg;
}

nlohmann::json to_json(const TauResult& r) {
  nlohmann::json j;
  j["value"] = r.value;
  j["imag_residual"] = r.imag_residual;
  j["method"] = to_string(r.method);
  j["s"] = r.s;
  j["kappa"] = r.kappa;
  j["error_estimate"] = r.error_estimate;
  j["config"] = {{"quad_order", r.config.quad_order}, {"truncation", r.config.truncation},
                 {"eps", r.config.eps},               {"tail_tol", r.config.tail_tol},
                 {"max_weight", r.config.max_weight}, {"n_cut", r.config.n_cut},
                 {"calibration", r.config.calibration}};
  j["warnings"] = r.warnings;
  return j;
}

// Writes through a sibling temporary file; the target only appears once complete.
void write_atomically(const std::string& path, const std::string& body) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw ArgumentError("cannot open " + tmp + " for writing");
    f << body;
    f.flush();
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw ArgumentError("write to " + tmp + " failed");
    }
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ArgumentError("cannot rename " + tmp + " to " + path);
  }
}

int cmd_tau(const RunConfig& cfg, std::ostream& out) {
  const auto r = evaluate_tau(parse_method(cfg.method), cfg.s, cfg.kappa, to_pipeline(cfg));
  if (cfg.format == "json") {
    out << to_json(r).dump(2) << "\n";
    return exit_ok;
  }
  out << "value          " << format_double(r.value) << "\n"
      << "error_estimate " << format_double(r.error_estimate) << "\n"
      << "imag_residual  " << format_double(r.imag_residual) << "\n"
      << "method         " << to_string(r.method) << "\n"
      << "s              " << format_double(r.s) << "\n"
      << "kappa          " << format_double(r.kappa) << "\n";
  for (const auto& w : r.warnings) out << "warning        " << w << "\n";
  return exit_ok;
}

std::vector<double> scan_grid(const RunConfig& cfg) {
  const auto n = static_cast<std::size_t>(std::floor((cfg.s_max - cfg.s_min) / cfg.step + 1e-9)) + 1;
  if (n > 1000000) throw ArgumentError("scan grid has more than 1e6 points");
  std::vector<double> grid(n);
  for (std::size_t i = 0; i < n; ++i) grid[i] = cfg.s_min + static_cast<double>(i) * cfg.step;
  return grid;
}

int cmd_scan(const RunConfig& cfg, const std::string& out_path, std::ostream& out) {
  const Method method = parse_method(cfg.method);
  const PipelineConfig pipe = to_pipeline(cfg);
  const auto grid = scan_grid(cfg);
  std::vector<TauResult> rows(grid.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = evaluate_tau(method, grid[i], cfg.kappa, pipe);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = grid.size();
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), grid.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (failure) {
    std::error_code ec;
    if (!out_path.empty()) fs::remove(out_path + ".tmp", ec);
    std::rethrow_exception(failure);
  }

  std::ostringstream csv;
  csv << "s,tau,err_est,method\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv << format_double(grid[i]) << ',' << format_double(rows[i].value) << ','
        << format_double(rows[i].error_estimate) << ',' << to_string(method) << '\n';
  }
  if (out_path.empty()) {
    out << csv.str();
  } else {
    write_atomically(out_path, csv.str());
  }
  return exit_ok;
}

int cmd_u(const RunConfig& cfg, std::ostream& out) {
  const Method method = parse_method(cfg.method);
  if (method != Method::airy && !(cfg.calibration > 0)) {
    throw ArgumentError("method " + cfg.method + " needs a calibration constant; run `astau calibrate` first");
  }
  const PipelineConfig pipe = to_pipeline(cfg);
  ode::OdeConfig oc;
  oc.s_end = std::min(oc.s_end, cfg.s - 1.0);
  oc.s_start = std::max(oc.s_start, cfg.s + 1.0);
  const auto sol = ode::solve_pii(cfg.kappa, oc);
  const double u = sol.u_at(cfg.s);
  const double d2 = log_tau_dds2(cfg.s, cfg.kappa, cfg.fd_step, method, pipe);
  const double residual = std::abs(u * u + d2);
  if (cfg.format == "json") {
    nlohmann::json j{{"s", cfg.s},           {"kappa", cfg.kappa}, {"method", cfg.method}, {"u_ode", u},
                     {"log_tau_dds2", d2}, {"residual", residual}, {"fd_step", cfg.fd_step}};
    out << j.dump(2) << "\n";
  } else {
    out << "u_ode          " << format_double(u) << "\n"
        << "u_ode^2        " << format_double(u * u) << "\n"
        << "-(log tau)''   " << format_double(-d2) << "\n"
        << "residual       " << format_double(residual) << "\n";
  }
  return exit_ok;
}

int cmd_coeffs(const RunConfig& cfg, std::ostream& out) {
  const int pole = to_pipeline(cfg).minor.pole;
  const int max_order = std::min(cfg.n_cut, 12);
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format != "json") out << "m,n,symbolic,quadrature,rel_err,expression\n";
  for (int k = 0; k <= max_order; ++k) {
    for (int m = 0; m <= k; ++m) {
      const int n = k - m;
      const auto c = sym::coeff_alpha(m, n, pole);
      const double symv = cfg.kappa * sym::eval_symfn(c.sym, cfg.s);
      const double quadv = sym::alpha_quadrature_oracle(m, n, cfg.s, cfg.kappa, pole, cfg.eps);
      const double rel = quadv != 0 ? std::abs(symv - quadv) / std::abs(quadv) : std::abs(symv);
      if (cfg.format == "json") {
        rows.push_back({{"m", m}, {"n", n}, {"symbolic", symv}, {"quadrature", quadv}, {"rel_err", rel},
                        {"expression", c.sym.to_string()}});
      } else {
        out << m << ',' << n << ',' << format_double(symv) << ',' << format_double(quadv) << ','
            << format_double(rel) << ",\"" << c.sym.to_string() << "\"\n";
      }
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << "\n";
  return exit_ok;
}

std::string positions(const std::vector<minor::HalfInt>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(v[i].twice) + "/2";
  }
  return s;
}

int cmd_maya(const RunConfig& cfg, std::ostream& out) {
  minor::MinorConfig mc = to_pipeline(cfg).minor;
  const auto table = minor::coefficient_table(cfg.s, cfg.kappa, mc);
  const auto terms = minor::minor_terms(table, cfg.max_weight);
  nlohmann::json rows = nlohmann::json::array();
  if (cfg.format != "json") out << "weight,particles,holes,young,value\n";
  for (const auto& t : terms) {
    const auto young = minor::maya_to_young(t.diagram);
    std::string rows_text;
    for (std::size_t i = 0; i < young.rows.size(); ++i) rows_text += (i ? " " : "") + std::to_string(young.rows[i]);
    if (cfg.format == "json") {
      rows.push_back({{"weight", t.diagram.weight()},
                      {"particles", positions(t.diagram.particles)},
                      {"holes", positions(t.diagram.holes)},
                      {"young", young.rows},
                      {"value", t.value}});
    } else {
      out << format_double(t.diagram.weight()) << ",\"" << positions(t.diagram.particles) << "\",\""
          << positions(t.diagram.holes) << "\",\"" << rows_text << "\"," << format_double(t.value) << "\n";
    }
  }
  if (cfg.format == "json") out << rows.dump(2) << "\n";
  return exit_ok;
}

int cmd_calibrate(RunConfig cfg, const std::string& config_path, std::ostream& out) {
  // at kappa = 0 every candidate is exact; calibrate where the determinants differ from 1
  const double kappa = cfg.kappa == 0.0 ? 0.5 : cfg.kappa;
  const auto res = calibrate(to_pipeline(cfg), kappa);
  cfg.calibration = res.c;
  save_config(config_path, cfg);
  for (const auto& cand : res.candidates) {
    out << "candidate " << format_double(cand.c) << " residual " << format_double(cand.residual) << "\n";
  }
  out << "calibration " << format_double(res.c) << "\n"
      << "residual    " << format_double(res.residual) << "\n"
      << "saved to    " << config_path << "\n";
  return exit_ok;
}

int cmd_selftest(const std::string& filter, std::ostream& out) {
  const auto results = selftest::run_acceptance(filter);
  selftest::print_report(out, results);
  return selftest::all_passed(results) ? exit_ok : exit_selftest_failed;
}

void add_common(CLI::App* app, Overrides& o) {
  app->add_option("--method", o.method, "airy, widom or minor");
  app->add_option("--s", o.s, "evaluation point");
  app->add_option("--kappa", o.kappa, "coupling, |kappa| <= 1");
  app->add_option("--quad-order", o.quad_order, "quadrature nodes");
  app->add_option("--eps", o.eps, "contour shift");
  app->add_option("--truncation", o.truncation, "half-line length for the Airy kernel");
  app->add_option("--max-weight", o.max_weight, "Maya diagram weight cutoff");
  app->add_option("--n-cut", o.n_cut, "coefficient matrix size");
  app->add_option("--fd-step", o.fd_step, "finite-difference step");
  app->add_flag("--json", o.json, "JSON output");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Airy-kernel Fredholm determinants by three independent routes", "astau"};
  app.require_subcommand(1);
  Overrides o;
  app.add_option("--config", o.config_path, "key=value run configuration")->capture_default_str();

  auto* tau = app.add_subcommand("tau", "evaluate tau(s, kappa)");
  add_common(tau, o);
  auto* scan = app.add_subcommand("scan", "tau on a grid of s values, as CSV");
  add_common(scan, o);
  scan->add_option("--s-min", o.s_min);
  scan->add_option("--s-max", o.s_max);
  scan->add_option("--step", o.step);
  scan->add_option("--out", o.out, "output CSV file (stdout if absent)");
  auto* u = app.add_subcommand("u", "Painleve II solution against -(log tau)''");
  add_common(u, o);
  auto* coeffs = app.add_subcommand("coeffs", "symbolic coefficients against quadrature");
  add_common(coeffs, o);
  auto* maya = app.add_subcommand("maya", "terms of the minor expansion by Maya diagram");
  add_common(maya, o);
  auto* cal = app.add_subcommand("calibrate", "fit and store the s-axis calibration constant");
  add_common(cal, o);
  auto* self = app.add_subcommand("selftest", "run the acceptance suite");
  self->add_option("--filter", o.filter, "comma-separated criterion ids or groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "astau: " << e.what() << "\n";
    return exit_argument_error;
  }

  try {
    if (self->parsed()) return cmd_selftest(o.filter, out);
    const RunConfig cfg = resolve(o);
    if (tau->parsed()) return cmd_tau(cfg, out);
    if (scan->parsed()) return cmd_scan(cfg, o.out, out);
    if (u->parsed()) return cmd_u(cfg, out);
    if (coeffs->parsed()) return cmd_coeffs(cfg, out);
    if (maya->parsed()) return cmd_maya(cfg, out);
    if (cal->parsed()) return cmd_calibrate(cfg, o.config_path, out);
  } catch (const ArgumentError& e) {
    err << "astau: " << e.what() << "\n";
    return exit_argument_error;
  } catch (const NumericalError& e) {
    err << "astau: numerical failure: " << e.what() << "\n";
    return exit_numerical_failure;
  } catch (const std::exception& e) {
    err << "astau: " << e.what() << "\n";
    return exit_numerical_failure;
  }
  return exit_argument_error;
}

}  // namespace astau::cli
