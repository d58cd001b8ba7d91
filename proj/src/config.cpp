#include "helent/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "helent/version.hpp"

namespace helent {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double out = 0.0;
  try {
    out = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key '" + key + "' has a non-numeric value '" + value + "'");
  }
  if (pos != value.size() || !std::isfinite(out)) {
    throw std::invalid_argument("config: key '" + key + "' has a bad value '" + value + "'");
  }
  return out;
}

int parse_int(const std::string& key, const std::string& value) {
  const double d = parse_double(key, value);
  const int i = static_cast<int>(d);
  if (static_cast<double>(i) != d) {
    throw std::invalid_argument("config: key '" + key + "' must be an integer");
  }
  return i;
}

Helicity parse_helicity(const std::string& key, const std::string& value) {
  if (value == "+" || value == "+1/2") return Helicity::plus;
  if (value == "-" || value == "-1/2") return Helicity::minus;
  throw std::invalid_argument("config: key '" + key + "' must be '+' or '-'");
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> parts;
  std::string p;
  while (is >> p) parts.push_back(p);
  return parts;
}

std::vector<double> parse_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::string item;
  std::istringstream is(value);
  while (std::getline(is, item, ',')) {
    out.push_back(parse_double(key, trim(item)));
  }
  return out;
}

}  // namespace

double ScenarioConfig::max_width() const {
  double w = 0.0;
  switch (state) {
    case StateKind::product:
      w = std::max(epsilon_a, epsilon_b);
      break;
    case StateKind::correlated:
      w = std::max(epsilon_1, epsilon_2);
      break;
    case StateKind::custom:
      for (const auto& t : terms) {
        w = std::max({w, t.epsilon_a, t.epsilon_b});
      }
      break;
  }
  return w;
}

double ScenarioConfig::effective_cutoff() const {
  return cutoff > 0.0 ? cutoff : 8.0 * max_width();
}

ScenarioConfig parse_config(std::istream& in) {
  ScenarioConfig cfg;
  std::map<int, CustomTerm> terms;
  int term_count = -1;
  bool have_v_list = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not of the form 'key = value'");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " has an empty key or value");
    }

    if (key == "state") {
      if (value == "product") cfg.state = StateKind::product;
      else if (value == "correlated") cfg.state = StateKind::correlated;
      else if (value == "custom") cfg.state = StateKind::custom;
      else throw std::invalid_argument("config: unknown state '" + value + "'");
    } else if (key == "mode") {
      if (value == "helicity") cfg.mode = Mode::helicity;
      else if (value == "spin") cfg.mode = Mode::spin;
      else throw std::invalid_argument("config: unknown mode '" + value + "'");
    } else if (key == "epsilon") {
      cfg.epsilon_a = cfg.epsilon_b = parse_double(key, value);
      cfg.epsilon_1 = cfg.epsilon_2 = cfg.epsilon_a;
    } else if (key == "epsilon_a") {
      cfg.epsilon_a = parse_double(key, value);
    } else if (key == "epsilon_b") {
      cfg.epsilon_b = parse_double(key, value);
    } else if (key == "epsilon_1") {
      cfg.epsilon_1 = parse_double(key, value);
    } else if (key == "epsilon_2") {
      cfg.epsilon_2 = parse_double(key, value);
    } else if (key == "helicity_a") {
      cfg.helicity_a = parse_helicity(key, value);
    } else if (key == "helicity_b") {
      cfg.helicity_b = parse_helicity(key, value);
    } else if (key == "symmetrize") {
      if (value == "none") cfg.symmetrize = Symmetrization::none;
      else if (value == "symmetric") cfg.symmetrize = Symmetrization::symmetric;
      else if (value == "antisymmetric") cfg.symmetrize = Symmetrization::antisymmetric;
      else throw std::invalid_argument("config: unknown symmetrize '" + value + "'");
    } else if (key == "terms") {
      term_count = parse_int(key, value);
    } else if (key.rfind("term_", 0) == 0) {
      const int idx = parse_int(key, key.substr(5));
      // c_re c_im eps_a hel_a eps_b hel_b
      const auto parts = split_ws(value);
      if (parts.size() != 6) {
        throw std::invalid_argument("config: '" + key +
                                    "' needs 6 fields: c_re c_im eps_a hel_a eps_b hel_b");
      }
      CustomTerm t;
      t.coeff = {parse_double(key, parts[0]), parse_double(key, parts[1])};
      t.epsilon_a = parse_double(key, parts[2]);
      t.h_a = parse_helicity(key, parts[3]);
      t.epsilon_b = parse_double(key, parts[4]);
      t.h_b = parse_helicity(key, parts[5]);
      terms[idx] = t;
    } else if (key == "v_max") {
      cfg.v_max = parse_double(key, value);
    } else if (key == "v_count") {
      cfg.v_count = parse_int(key, value);
    } else if (key == "v_list") {
      cfg.speeds = parse_list(key, value);
      have_v_list = true;
    } else if (key == "n_radial") {
      cfg.n_radial = parse_int(key, value);
    } else if (key == "n_polar") {
      cfg.n_polar = parse_int(key, value);
    } else if (key == "n_azimuthal") {
      cfg.n_azimuthal = parse_int(key, value);
    } else if (key == "cutoff") {
      cfg.cutoff = parse_double(key, value);
    } else if (key == "refine") {
      cfg.refine = parse_double(key, value);
    } else if (key == "output") {
      cfg.output = value;
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  if (cfg.state == StateKind::custom) {
    if (term_count <= 0) {
      throw std::invalid_argument("config: custom state needs 'terms = N' with N >= 1");
    }
    for (int i = 1; i <= term_count; ++i) {
      const auto it = terms.find(i);
      if (it == terms.end()) {
        throw std::invalid_argument("config: missing 'term_" + std::to_string(i) + "'");
      }
      cfg.terms.push_back(it->second);
    }
  }

  if (!have_v_list) {
    if (cfg.v_count < 2) {
      throw std::invalid_argument("config: v_count must be >= 2");
    }
    if (!(cfg.v_max >= 0.0 && cfg.v_max < 1.0)) {
      throw std::invalid_argument("config: v_max must lie in [0, 1)");
    }
    cfg.speeds.resize(cfg.v_count);
    for (int i = 0; i < cfg.v_count; ++i) {
      cfg.speeds[i] = cfg.v_max * i / (cfg.v_count - 1);
    }
  }

  for (double v : cfg.speeds) {
    if (!(v >= 0.0 && v < 1.0)) {
      throw std::invalid_argument("config: every speed must lie in [0, 1)");
    }
  }
  std::sort(cfg.speeds.begin(), cfg.speeds.end());

  if (cfg.n_radial < 2 || cfg.n_polar < 2 || cfg.n_azimuthal < 2) {
    throw std::invalid_argument("config: grid resolutions must be >= 2");
  }
  const auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
  if (!positive(cfg.epsilon_a) || !positive(cfg.epsilon_b) ||
      !positive(cfg.epsilon_1) || !positive(cfg.epsilon_2)) {
    throw std::invalid_argument("config: packet widths must be positive");
  }
  for (const auto& t : cfg.terms) {
    if (!positive(t.epsilon_a) || !positive(t.epsilon_b)) {
      throw std::invalid_argument("config: packet widths must be positive");
    }
  }
  if (cfg.cutoff < 0.0 || !std::isfinite(cfg.cutoff)) {
    throw std::invalid_argument("config: cutoff must be >= 0");
  }
  if (!(cfg.refine >= 1.0) || !std::isfinite(cfg.refine)) {
    throw std::invalid_argument("config: refine must be >= 1");
  }
  return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("config: cannot open '" + path + "'");
  }
  return parse_config(in);
}

std::string config_echo(const ScenarioConfig& config) {
  std::ostringstream os;
  os << "state = ";
  switch (config.state) {
    case StateKind::product: os << "product"; break;
    case StateKind::correlated: os << "correlated"; break;
    case StateKind::custom: os << "custom"; break;
  }
  os << "\nmode = " << (config.mode == Mode::helicity ? "helicity" : "spin");
  const auto hel = [](Helicity h) { return h == Helicity::plus ? '+' : '-'; };
  if (config.state == StateKind::product) {
    os << "\nepsilon_a = " << config.epsilon_a
       << "\nepsilon_b = " << config.epsilon_b
       << "\nhelicity_a = " << hel(config.helicity_a)
       << "\nhelicity_b = " << hel(config.helicity_b);
  } else if (config.state == StateKind::correlated) {
    os << "\nepsilon_1 = " << config.epsilon_1
       << "\nepsilon_2 = " << config.epsilon_2;
  } else {
    os << "\nterms = " << config.terms.size();
    for (std::size_t i = 0; i < config.terms.size(); ++i) {
      const auto& t = config.terms[i];
      os << "\nterm_" << (i + 1) << " = " << t.coeff.real() << ' '
         << t.coeff.imag() << ' ' << t.epsilon_a << ' ' << hel(t.h_a) << ' '
         << t.epsilon_b << ' ' << hel(t.h_b);
    }
  }
  os << "\nsymmetrize = ";
  switch (config.symmetrize) {
    case Symmetrization::none: os << "none"; break;
    case Symmetrization::symmetric: os << "symmetric"; break;
    case Symmetrization::antisymmetric: os << "antisymmetric"; break;
  }
  os << "\nspeeds = " << config.speeds.size()
     << " in [" << (config.speeds.empty() ? 0.0 : config.speeds.front())
     << ", " << (config.speeds.empty() ? 0.0 : config.speeds.back()) << "]"
     << "\nn_radial = " << config.n_radial
     << "\nn_polar = " << config.n_polar
     << "\nn_azimuthal = " << config.n_azimuthal
     << "\ncutoff = " << config.effective_cutoff()
     << "\nrefine = " << config.refine
     << "\noutput = " << config.output << '\n';
  return os.str();
}

}  // namespace helent
