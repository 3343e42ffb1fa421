#include "qlbm/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "qlbm/errors.hpp"

namespace qlbm {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ValidationError("config key '" + std::string(key) + "': cannot parse '" +
                          std::string(text) + "'");
  }
  return value;
}

double parse_real(std::string_view key, std::string_view text) {
  // Accept simple fractions such as 1/6 for viscosities.
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_number<double>(key, trim(text.substr(0, slash)));
    const double den = parse_number<double>(key, trim(text.substr(slash + 1)));
    if (den == 0.0) throw ValidationError("config key '" + std::string(key) + "': division by zero");
    return num / den;
  }
  return parse_number<double>(key, text);
}

std::vector<double> parse_list(std::string_view key, std::string_view text) {
  std::vector<double> values;
  while (!text.empty()) {
    const auto comma = text.find(',');
    values.push_back(parse_real(key, trim(text.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (values.empty()) throw ValidationError("config key '" + std::string(key) + "' is empty");
  return values;
}

}  // namespace

std::string_view to_string(CaseKind kind) noexcept {
  switch (kind) {
    case CaseKind::discontinuity_1d:
      return "discontinuity_1d";
    case CaseKind::kolmogorov_2d:
      return "kolmogorov_2d";
    case CaseKind::resources:
      return "resources";
  }
  return "unknown";
}

std::string_view to_string(RunMode mode) noexcept {
  switch (mode) {
    case RunMode::classical_bgk:
      return "classical_bgk";
    case RunMode::classical_quadratic:
      return "classical_quadratic";
    case RunMode::quantum_emulated:
      return "quantum_emulated";
  }
  return "unknown";
}

CaseKind parse_case_kind(std::string_view text) {
  for (auto k : {CaseKind::discontinuity_1d, CaseKind::kolmogorov_2d, CaseKind::resources}) {
    if (text == to_string(k)) return k;
  }
  throw ValidationError("unknown case '" + std::string(text) +
                        "' (expected discontinuity_1d, kolmogorov_2d or resources)");
}

RunMode parse_run_mode(std::string_view text) {
  for (auto m : {RunMode::classical_bgk, RunMode::classical_quadratic, RunMode::quantum_emulated}) {
    if (text == to_string(m)) return m;
  }
  throw ValidationError("unknown mode '" + std::string(text) +
                        "' (expected classical_bgk, classical_quadratic or quantum_emulated)");
}

std::vector<double> log_spaced(double lo, double hi, int count) {
  if (count < 1 || !(lo > 0.0) || !(hi >= lo)) {
    throw ValidationError("log_spaced needs 0 < lo <= hi and count >= 1");
  }
  std::vector<double> out;
  out.reserve(count);
  for (int n = 0; n < count; ++n) {
    if (n == 0) {
      out.push_back(lo);
    } else if (n == count - 1) {
      out.push_back(hi);
    } else {
      const double t = static_cast<double>(n) / (count - 1);
      out.push_back(std::exp(std::log(lo) + t * (std::log(hi) - std::log(lo))));
    }
  }
  return out;
}

CaseConfig default_config(CaseKind kind) {
  CaseConfig c;
  c.case_kind = kind;
  c.output_dir = "out";
  switch (kind) {
    case CaseKind::discontinuity_1d:
      c.lattice = LatticeKind::D1Q3;
      c.nx = 500;
      c.ny = 1;
      c.steps = 200;
      c.delta_rho = 5e-5;
      c.viscosity = {1.0 / 6.0};
      break;
    case CaseKind::kolmogorov_2d:
      c.lattice = LatticeKind::D2Q9;
      c.nx = 32;
      c.ny = 32;
      c.steps = 100;
      c.viscosity = log_spaced(0.0088, 1.0 / 6.0, 8);
      c.A_x = 0.3;
      c.A_y = 0.2;
      c.k_x = 1;
      c.k_y = 4;
      break;
    case CaseKind::resources:
      c.lattice = LatticeKind::D2Q9;
      break;
  }
  return c;
}

CaseConfig parse_config(std::istream& in, std::optional<CaseKind> case_override) {
  std::map<std::string, std::string, std::less<>> entries;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = line;
    if (const auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
    view = trim(view);
    if (view.empty()) continue;
    const auto eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key(trim(view.substr(0, eq)));
    const std::string value(trim(view.substr(eq + 1)));
    if (key.empty()) throw ValidationError("config line " + std::to_string(line_no) + ": empty key");
    if (!entries.emplace(key, value).second) {
      throw ValidationError("config line " + std::to_string(line_no) + ": repeated key '" + key + "'");
    }
  }

  CaseKind kind{};
  if (case_override) {
    kind = *case_override;
  } else if (const auto it = entries.find("case"); it != entries.end()) {
    kind = parse_case_kind(it->second);
  } else {
    throw ValidationError("config does not name a case (key 'case')");
  }

  CaseConfig c = default_config(kind);
  for (const auto& [key, value] : entries) {
    if (key == "case") {
      if (!case_override) c.case_kind = parse_case_kind(value);
    } else if (key == "lattice") {
      c.lattice = parse_lattice_kind(value);
    } else if (key == "nx") {
      c.nx = parse_number<int>(key, value);
    } else if (key == "ny") {
      c.ny = parse_number<int>(key, value);
    } else if (key == "steps") {
      c.steps = parse_number<long>(key, value);
    } else if (key == "delta_rho") {
      c.delta_rho = parse_real(key, value);
    } else if (key == "viscosity") {
      c.viscosity = parse_list(key, value);
    } else if (key == "A_x") {
      c.A_x = parse_real(key, value);
    } else if (key == "A_y") {
      c.A_y = parse_real(key, value);
    } else if (key == "k_x") {
      c.k_x = parse_number<int>(key, value);
    } else if (key == "k_y") {
      c.k_y = parse_number<int>(key, value);
    } else if (key == "variant") {
      c.variant = parse_variant(value);
    } else if (key == "mode") {
      c.mode = parse_run_mode(value);
    } else if (key == "output_dir") {
      c.output_dir = value;
    } else if (key == "seed") {
      c.seed = parse_number<std::uint64_t>(key, value);
    } else {
      throw ValidationError("unknown config key '" + key + "'");
    }
  }
  validate(c);
  return c;
}

CaseConfig load_config(const std::filesystem::path& path, std::optional<CaseKind> case_override) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open config file " + path.string());
  return parse_config(in, case_override);
}

void validate(const CaseConfig& c) {
  if (c.steps < 0) throw ValidationError("steps must be >= 0");
  if (c.nx <= 0 || c.ny <= 0) throw ValidationError("nx and ny must be positive");
  for (double nu : c.viscosity) {
    if (!(nu > 0.0) || !std::isfinite(nu)) throw ValidationError("viscosities must be positive");
  }
  switch (c.case_kind) {
    case CaseKind::discontinuity_1d:
      if (c.lattice != LatticeKind::D1Q3) throw ValidationError("discontinuity_1d needs D1Q3");
      if (c.ny != 1) throw ValidationError("discontinuity_1d needs ny = 1");
      if (c.viscosity.size() != 1) throw ValidationError("discontinuity_1d takes one viscosity");
      if (!(c.delta_rho > -1.0)) throw ValidationError("delta_rho must keep the density positive");
      break;
    case CaseKind::kolmogorov_2d:
      if (c.lattice != LatticeKind::D2Q9) throw ValidationError("kolmogorov_2d needs D2Q9");
      if (c.viscosity.empty()) throw ValidationError("kolmogorov_2d needs at least one viscosity");
      break;
    case CaseKind::resources:
      break;
  }
}

}  // namespace qlbm
