#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "tricenter/catalog.hpp"
#include "tricenter/errors.hpp"
#include "tricenter/inverse_design.hpp"

namespace tricenter::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream is(s);
  while (std::getline(is, part, sep)) out.push_back(trim(part));
  return out;
}

double to_number(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError(field + ": '" + text + "' is not a number");
  return v;
}

std::uint64_t to_count(const std::string& field, const std::string& text) {
  const std::string s = trim(text);
  std::uint64_t v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError(field + ": '" + text + "' is not a non-negative integer");
  return v;
}

}  // namespace

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "run.triangle", "run.center",     "run.centers",     "run.family", "run.target",
      "grid.tmin",    "grid.tmax",      "grid.samples",    "check.tol",  "check.seed",
      "check.triangles", "output.out", "output.format"};
  return keys;
}

Format parse_format(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "svg") return Format::Svg;
  if (s == "both") return Format::Both;
  throw ConfigError("format must be csv, svg or both, got '" + s + "'");
}

void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "run.triangle") cfg.triangle = value;
  else if (key == "run.center") cfg.center = value;
  else if (key == "run.centers") cfg.centers = value;
  else if (key == "run.family") cfg.family = value;
  else if (key == "run.target") cfg.target = value;
  else if (key == "grid.tmin") cfg.tmin = Real(to_number(key, value));
  else if (key == "grid.tmax") cfg.tmax = Real(to_number(key, value));
  else if (key == "grid.samples") cfg.samples = to_count(key, value);
  else if (key == "check.tol") cfg.tol = Real(to_number(key, value));
  else if (key == "check.seed") cfg.seed = to_count(key, value);
  else if (key == "check.triangles") cfg.triangles = to_count(key, value);
  else if (key == "output.out") cfg.out = value;
  else if (key == "output.format") cfg.format = parse_format(trim(value));
  else throw ConfigError("unknown config key '" + key + "'");
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  namespace pt = boost::property_tree;
  pt::ptree tree;
  try {
    pt::read_ini(path, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(e.filename() + ":" + std::to_string(e.line()) + ": " + e.message());
  }
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty())
      throw ConfigError(path + ": key '" + section + "' is outside a [section]");
    for (const auto& [key, value] : body) {
      try {
        apply_setting(cfg, section + "." + key, trim(value.data()));
      } catch (const ConfigError& e) {
        throw ConfigError(path + ": " + e.what());
      }
    }
  }
}

Triangle parse_triangle(const std::string& spec) {
  try {
    if (spec.find(';') != std::string::npos) {
      const auto pts = split(spec, ';');
      if (pts.size() != 3) throw ConfigError("triangle needs three vertices 'x,y;x,y;x,y'");
      std::vector<Point2> v;
      for (const auto& p : pts) {
        const auto xy = split(p, ',');
        if (xy.size() != 2) throw ConfigError("triangle vertex '" + p + "' must be 'x,y'");
        v.push_back({Real(to_number("triangle", xy[0])), Real(to_number("triangle", xy[1]))});
      }
      return Triangle::checked(v[0], v[1], v[2]);
    }
    const auto s = split(spec, ',');
    if (s.size() != 3) throw ConfigError("triangle '" + spec + "' must be 'a,b,c' or 'x,y;x,y;x,y'");
    const SideLengths sides{Real(to_number("triangle", s[0])), Real(to_number("triangle", s[1])),
                            Real(to_number("triangle", s[2]))};
    return canonical_placement(sides);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("triangle: ") + e.what());
  }
}

CenterFunction parse_center(const std::string& spec) {
  const std::string s = trim(spec);
  if (s.find(':') != std::string::npos) {
    try {
      return omega_center(OmegaSpec::parse(s));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("center: ") + e.what());
    }
  }
  return catalog_center(s);
}

std::vector<CenterFunction> parse_centers(const std::string& list) {
  std::vector<CenterFunction> out;
  for (const auto& item : split(list, ','))
    if (!item.empty()) out.push_back(parse_center(item));
  if (out.empty()) throw ConfigError("center list is empty");
  return out;
}

TriangleFamily parse_family(const std::string& spec) {
  const std::string s = trim(spec);
  try {
    if (s.rfind("target:", 0) == 0) return family_from_target(parse_target(s.substr(7)));
    if (s.find(';') != std::string::npos) return parse_polynomial_family(s);
    if (!s.empty() && s[0] == '@') {
      std::ifstream in(s.substr(1));
      if (!in) throw ConfigError("cannot open family file '" + s.substr(1) + "'");
      std::string line;
      while (std::getline(in, line)) {
        line = trim(line);
        if (!line.empty() && line[0] != '#') return parse_polynomial_family(line);
      }
      throw ConfigError("family file '" + s.substr(1) + "' is empty");
    }
    if (const auto star = s.find('*'); star != std::string::npos)
      return concat(parse_family(s.substr(0, star)), parse_family(s.substr(star + 1)));
    return builtin(s);
  } catch (const DomainError& e) {
    throw ConfigError("family '" + s + "': " + e.what());
  }
}

Grid grid_of(const RunConfig& cfg) {
  if (cfg.samples == 0) throw ConfigError("grid.samples must be positive");
  if (!(cfg.tmin < cfg.tmax) && cfg.samples > 1) throw ConfigError("grid.tmin must be below grid.tmax");
  return {cfg.tmin, cfg.tmax, cfg.samples};
}

}  // namespace tricenter::cli
