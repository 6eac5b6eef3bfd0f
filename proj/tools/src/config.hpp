#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tricenter/centers.hpp"
#include "tricenter/curves.hpp"
#include "tricenter/families.hpp"

namespace tricenter::cli {

enum class Format { Csv, Svg, Both };

// Every run setting. Defaults here, then the config file, then flags.
struct RunConfig {
  std::string triangle{"3,4,5"};
  std::string center;   // empty: X13 for single-center commands, suite defaults for verify
  std::string centers;  // comma-separated list for verify suites
  std::string family{"aliquot"};
  std::string target{"rose(1,4)"};
  Real tmin{-0.5};
  Real tmax{1.5};
  std::size_t samples{512};
  std::optional<Real> tol;
  std::uint64_t seed{0};
  std::size_t triangles{20};
  std::string out;
  Format format{Format::Csv};
};

// Config file keys, as "section.key".
const std::vector<std::string>& config_keys();

// Applies a single key (section.key) to cfg; throws ConfigError naming the field.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);

// Flat key=value file with [section] headers; ';' or '#' starts a comment.
void load_config_file(const std::string& path, RunConfig& cfg);

Format parse_format(const std::string& s);

// "a,b,c" side lengths or "x1,y1;x2,y2;x3,y3" vertices.
Triangle parse_triangle(const std::string& spec);
// Catalog label (X13) or omega spec (gamma:1:1[:sigma]).
CenterFunction parse_center(const std::string& spec);
std::vector<CenterFunction> parse_centers(const std::string& list);
// Builtin label, "label; p1; p2; p3", "@file" holding such a line,
// "target:<rose(a,n) | table file>", or two specs joined by '*' (concatenation).
TriangleFamily parse_family(const std::string& spec);

Grid grid_of(const RunConfig& cfg);

}  // namespace tricenter::cli
