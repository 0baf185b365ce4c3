#include "cli/run_config.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "astau/errors.hpp"

namespace astau::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string serialize(const RunConfig& c) {
  std::ostringstream os;
  os << "method=" << c.method << "\n"
     << "s=" << format_double(c.s) << "\n"
     << "kappa=" << format_double(c.kappa) << "\n"
     << "quad_order=" << c.quad_order << "\n"
     << "eps=" << format_double(c.eps) << "\n"
     << "truncation=" << format_double(c.truncation) << "\n"
     << "max_weight=" << c.max_weight << "\n"
     << "n_cut=" << c.n_cut << "\n"
     << "fd_step=" << format_double(c.fd_step) << "\n"
     << "calibration=" << format_double(c.calibration) << "\n"
     << "format=" << c.format << "\n"
     << "s_min=" << format_double(c.s_min) << "\n"
     << "s_max=" << format_double(c.s_max) << "\n"
     << "step=" << format_double(c.step) << "\n";
  return os.str();
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double to_double(const std::string& key, const std::string& v) {
  double out = 0.0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ArgumentError("config: key '" + key + "' expects a number, got '" + v + "'");
  }
  return out;
}

int to_int(const std::string& key, const std::string& v) {
  int out = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
  if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
    throw ArgumentError("config: key '" + key + "' expects an integer, got '" + v + "'");
  }
  return out;
}

}  // namespace

RunConfig parse_config(const std::string& text, RunConfig c) {
  std::istringstream in(text);
  std::string line;
  std::set<std::string> seen;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos) throw ArgumentError("config line " + std::to_string(lineno) + ": expected key=value");
    const std::string key = trim(t.substr(0, eq));
    const std::string val = trim(t.substr(eq + 1));
    if (!seen.insert(key).second) throw ArgumentError("config: duplicate key '" + key + "'");
    if (key == "method") c.method = val;
    else if (key == "s") c.s = to_double(key, val);
    else if (key == "kappa") c.kappa = to_double(key, val);
    else if (key == "quad_order") c.quad_order = to_int(key, val);
    else if (key == "eps") c.eps = to_double(key, val);
    else if (key == "truncation") c.truncation = to_double(key, val);
    else if (key == "max_weight") c.max_weight = to_int(key, val);
    else if (key == "n_cut") c.n_cut = to_int(key, val);
    else if (key == "fd_step") c.fd_step = to_double(key, val);
    else if (key == "calibration") c.calibration = to_double(key, val);
    else if (key == "format") c.format = val;
    else if (key == "s_min") c.s_min = to_double(key, val);
    else if (key == "s_max") c.s_max = to_double(key, val);
    else if (key == "step") c.step = to_double(key, val);
    else throw ArgumentError("config: unknown key '" + key + "'");
  }
  return c;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), base);
}

void save_config(const std::string& path, const RunConfig& cfg) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ArgumentError("cannot write config file '" + path + "'");
    out << serialize(cfg);
    if (!out) throw ArgumentError("error writing config file '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

void validate(const RunConfig& c) {
  parse_method(c.method);
  auto finite = [](double v) { return std::isfinite(v); };
  if (!finite(c.s) || std::abs(c.s) > 50) throw ArgumentError("s must be finite with |s| <= 50");
  if (!finite(c.kappa) || std::abs(c.kappa) > 1) throw ArgumentError("kappa must satisfy |kappa| <= 1");
  if (c.quad_order < 2 || c.quad_order > 2000) throw ArgumentError("quad_order must lie in [2, 2000]");
  if (!(c.eps > 0) || c.eps == 1.0 || !finite(c.eps)) throw ArgumentError("eps must be positive and != 1");
  if (!(c.truncation > 0) || !finite(c.truncation)) throw ArgumentError("truncation must be positive");
  if (c.max_weight < 0) throw ArgumentError("max_weight must be nonnegative");
  if (c.n_cut < 1 || c.n_cut > 21) throw ArgumentError("n_cut must lie in [1, 21]");
  if (!(c.fd_step >= 1e-4 && c.fd_step <= 1e-1)) throw ArgumentError("fd_step must lie in [1e-4, 1e-1]");
  if (!finite(c.calibration) || c.calibration < 0) throw ArgumentError("calibration must be a nonnegative number");
  if (c.format != "text" && c.format != "json") throw ArgumentError("format must be text or json");
  if (!finite(c.s_min) || !finite(c.s_max) || c.s_min > c.s_max) throw ArgumentError("need s_min <= s_max");
  if (!(c.step > 0) || !finite(c.step)) throw ArgumentError("step must be positive");
}

PipelineConfig to_pipeline(const RunConfig& c) {
  PipelineConfig p;
  p.airy.order = c.quad_order;
  p.airy.truncation = c.truncation;
  p.widom.order = c.quad_order;
  p.widom.eps = c.eps;
  p.minor.n_cut = c.n_cut;
  p.minor.max_weight = c.max_weight;
  p.minor.seeds.eps = c.eps;
  p.calibration = c.calibration;
  return p;
}

}  // namespace astau::cli
