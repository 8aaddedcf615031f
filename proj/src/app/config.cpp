#include "evanescent/app/config.hpp"

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "evanescent/app/units.hpp"

namespace evanescent::app {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("setting '" + key + "' is not a number: '" + text + "'");
  }
  if (trim(text.substr(used)) != "" || !std::isfinite(v)) {
    throw std::invalid_argument("setting '" + key + "' is not a number: '" + text + "'");
  }
  return v;
}

int parse_int(const std::string& key, const std::string& text) {
  const double v = parse_number(key, text);
  if (v != std::floor(v)) throw std::invalid_argument("setting '" + key + "' must be an integer");
  return static_cast<int>(v);
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "material", "omega_p", "gamma", "v_fermi", "v_tr_factor", "model", "height",
      "z", "m0", "freq", "x", "grid", "axis", "separation_um", "temperature",
      "units", "out", "quantity", "rel_tol", "abs_tol", "max_subdivisions",
      "tail_decades", "threads"};
  return keys;
}

}  // namespace

Settings parse_settings(const std::string& text) {
  Settings out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + " has no '='");
    }
    const std::string key = trim(line.substr(0, eq));
    if (key.empty()) {
      throw std::invalid_argument("config line " + std::to_string(line_no) + " has an empty key");
    }
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

Settings load_settings_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_settings(buffer.str());
}

void merge_settings(Settings& base, const Settings& overrides) {
  for (const auto& [k, v] : overrides) base[k] = v;
}

void Grid::validate() const {
  if (count < 2) throw std::invalid_argument("sweep grid needs at least 2 points");
  if (!std::isfinite(min) || !std::isfinite(max) || !(max > min)) {
    throw std::invalid_argument("sweep grid needs min < max");
  }
  if (log && !(min > 0.0)) throw std::invalid_argument("log grid needs min > 0");
}

std::vector<double> Grid::points() const {
  validate();
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double t = static_cast<double>(i) / (count - 1);
    out[static_cast<std::size_t>(i)] =
        log ? std::exp(std::log(min) + t * (std::log(max) - std::log(min))) : min + t * (max - min);
  }
  out.front() = min;
  out.back() = max;
  return out;
}

Grid parse_grid(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(trim(item));
  if (parts.size() != 3 && parts.size() != 4) {
    throw std::invalid_argument("grid must be min:max:count[:log|lin], got '" + text + "'");
  }
  Grid g;
  g.min = parse_number("grid", parts[0]);
  g.max = parse_number("grid", parts[1]);
  g.count = parse_int("grid", parts[2]);
  if (parts.size() == 4) {
    if (parts[3] == "log") {
      g.log = true;
    } else if (parts[3] != "lin") {
      throw std::invalid_argument("grid spacing must be 'log' or 'lin'");
    }
  }
  g.validate();
  return g;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_number("list", item));
  }
  if (out.empty()) throw std::invalid_argument("empty list '" + text + "'");
  return out;
}

RunConfig build_config(const Settings& settings) {
  for (const auto& [k, v] : settings) {
    if (!known_keys().count(k)) throw std::invalid_argument("unknown setting '" + k + "'");
  }
  auto get = [&](const std::string& key) -> std::optional<std::string> {
    const auto it = settings.find(key);
    if (it == settings.end()) return std::nullopt;
    return it->second;
  };

  RunConfig cfg;
  if (auto v = get("material")) cfg.material = *v;
  cfg.params = material_preset(cfg.material);
  if (auto v = get("omega_p")) cfg.params.omega_p = parse_number("omega_p", *v);
  if (auto v = get("gamma")) cfg.params.gamma = parse_number("gamma", *v);
  if (auto v = get("v_fermi")) cfg.params.v_fermi = parse_number("v_fermi", *v);
  if (auto v = get("v_tr_factor")) cfg.params.v_tr_factor = parse_number("v_tr_factor", *v);
  cfg.params.validate();

  if (auto v = get("model")) {
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item == "all") {
        cfg.models.clear();
        break;
      }
      cfg.models.push_back(parse_response_model(item));
    }
  }
  for (const auto kind : cfg.models) {
    if (kind == ResponseModel::Nonlocal && !cfg.params.v_fermi) {
      throw std::invalid_argument("nonlocal model needs v_fermi for material '" + cfg.material + "'");
    }
  }

  if (auto v = get("height")) cfg.height = parse_number("height", *v);
  if (!(cfg.height > 0.0)) throw std::invalid_argument("height must be > 0");
  if (auto v = get("z")) {
    cfg.z = parse_number("z", *v);
    if (!(*cfg.z > 0.0)) throw std::invalid_argument("z must be > 0");
  }
  if (auto v = get("m0")) {
    cfg.m0 = parse_number("m0", *v);
    if (!(*cfg.m0 > 0.0)) throw std::invalid_argument("m0 must be > 0");
  }
  if (auto v = get("freq")) cfg.frequencies = parse_list(*v);
  for (const double f : cfg.frequencies) {
    if (!(f > 0.0)) throw std::invalid_argument("frequencies must be > 0");
  }
  if (auto v = get("x")) cfg.positions = parse_list(*v);
  if (auto v = get("grid")) cfg.grid = parse_grid(*v);
  if (auto v = get("axis")) {
    cfg.axis = *v;
    if (cfg.axis != "x" && cfg.axis != "omega") {
      throw std::invalid_argument("axis must be 'x' or 'omega'");
    }
  }
  if (auto v = get("separation_um")) cfg.separations_um = parse_list(*v);
  for (const double a : cfg.separations_um) {
    if (!(a > 0.0)) throw std::invalid_argument("separations must be > 0");
  }
  if (auto v = get("temperature")) cfg.temperatures = parse_list(*v);
  for (const double t : cfg.temperatures) {
    if (!(t > 0.0)) throw std::invalid_argument("temperatures must be > 0");
  }
  if (auto v = get("units")) {
    cfg.units = *v;
    if (!is_known_unit(cfg.units)) throw std::invalid_argument("unknown unit '" + cfg.units + "'");
  }
  if (auto v = get("out")) cfg.out = *v;
  if (auto v = get("quantity")) cfg.quantity = *v;
  if (auto v = get("rel_tol")) cfg.quadrature.rel_tol = parse_number("rel_tol", *v);
  if (auto v = get("abs_tol")) cfg.quadrature.abs_tol = parse_number("abs_tol", *v);
  if (auto v = get("max_subdivisions")) {
    cfg.quadrature.max_subdivisions = parse_int("max_subdivisions", *v);
  }
  if (auto v = get("tail_decades")) cfg.quadrature.tail_decades = parse_int("tail_decades", *v);
  cfg.quadrature.validate();
  if (auto v = get("threads")) {
    cfg.threads = parse_int("threads", *v);
    if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
  }
  return cfg;
}

std::string canonical_settings(const Settings& settings) {
  std::string out;
  for (const auto& [k, v] : settings) {
    // The output path and thread count do not change the numbers.
    if (k == "out" || k == "threads") continue;
    out += k + "=" + v + "\n";
  }
  return out;
}

std::string fingerprint(const Settings& settings) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (const unsigned char c : canonical_settings(settings)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

}  // namespace evanescent::app
