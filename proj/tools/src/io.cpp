#include "io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "tricenter/errors.hpp"

namespace tricenter::cli {

namespace {

Real parse_real(const std::string& s, std::size_t line) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || s.empty())
    throw ConfigError("csv line " + std::to_string(line) + ": '" + s + "' is not a number");
#ifdef TRICENTER_EXTENDED_PRECISION
  if (std::isfinite(v)) return Real(s);
#endif
  return Real(v);
}

SampleFlag parse_flag(const std::string& s, std::size_t line) {
  if (s == "ok") return SampleFlag::Ok;
  if (s == "pole") return SampleFlag::Pole;
  if (s == "degenerate") return SampleFlag::Degenerate;
  throw ConfigError("csv line " + std::to_string(line) + ": unknown flag '" + s + "'");
}

}  // namespace

std::string format_number(const Real& x) {
  const double d = to_double(x);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
#ifdef TRICENTER_EXTENDED_PRECISION
  // every digit of the wider type, so extended runs round-trip too
  return x.str(std::numeric_limits<Real>::max_digits10);
#else
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
#endif
}

void write_csv(std::ostream& out, const TracedCurve& curve) {
  out << "t,x,y,flag\n";
  for (const auto& s : curve.samples)
    out << format_number(s.t) << ',' << format_number(s.p.x) << ',' << format_number(s.p.y) << ','
        << to_string(s.flag) << '\n';
}

std::vector<CurveSample> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != "t,x,y,flag") throw ConfigError("csv: missing header 't,x,y,flag'");
  std::vector<CurveSample> out;
  for (std::size_t n = 2; std::getline(in, line); ++n) {
    if (line.empty()) continue;
    std::vector<std::string> f;
    std::istringstream is(line);
    for (std::string part; std::getline(is, part, ',');) f.push_back(part);
    if (f.size() != 4) throw ConfigError("csv line " + std::to_string(n) + ": expected 4 fields");
    out.push_back({parse_real(f[0], n), {parse_real(f[1], n), parse_real(f[2], n)},
                   parse_flag(f[3], n)});
  }
  return out;
}

void write_svg(std::ostream& out, const TracedCurve& curve, const Triangle& T) {
  constexpr double W = 800, H = 600, margin = 0.05;
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin, ymin = xmin, ymax = -xmin;
  auto grow = [&](const Point2& p) {
    const double x = to_double(p.x), y = to_double(p.y);
    if (!std::isfinite(x) || !std::isfinite(y)) return;
    xmin = std::min(xmin, x);
    xmax = std::max(xmax, x);
    ymin = std::min(ymin, y);
    ymax = std::max(ymax, y);
  };
  for (const Point2& v : {T.A, T.B, T.C}) grow(v);
  for (const auto& s : curve.samples)
    if (s.flag == SampleFlag::Ok) grow(s.p);

  // uniform scale so shapes are not distorted
  const double span = std::max({xmax - xmin, (ymax - ymin) * W / H, 1e-300});
  const double k = W * (1 - 2 * margin) / span;
  const double cx = (xmin + xmax) / 2, cy = (ymin + ymax) / 2;
  auto px = [&](const Point2& p) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f,%.3f", W / 2 + k * (to_double(p.x) - cx), H / 2 - k * (to_double(p.y) - cy));
    return std::string(buf);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out << "<rect width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "<polygon points=\"" << px(T.A) << ' ' << px(T.B) << ' ' << px(T.C)
      << "\" fill=\"none\" stroke=\"#555\" stroke-width=\"1\"/>\n";
  std::string run;
  std::size_t run_len = 0;
  auto flush = [&] {
    if (run_len > 1)
      out << "<polyline points=\"" << run << "\" fill=\"none\" stroke=\"#c22\" stroke-width=\"1.5\"/>\n";
    run.clear();
    run_len = 0;
  };
  for (const auto& s : curve.samples) {
    if (s.flag != SampleFlag::Ok || !is_finite(s.p)) {
      flush();
      continue;
    }
    if (run_len) run += ' ';
    run += px(s.p);
    ++run_len;
  }
  flush();
  const std::string g = px(centroid(T));
  const auto comma = g.find(',');
  out << "<circle cx=\"" << g.substr(0, comma) << "\" cy=\"" << g.substr(comma + 1)
      << "\" r=\"3\" fill=\"#22c\"/>\n";
  out << "</svg>\n";
}

bool write_report(std::ostream& out, std::vector<ReportLine> lines) {
  std::stable_sort(lines.begin(), lines.end(), [](const ReportLine& a, const ReportLine& b) { return a.name < b.name; });
  std::size_t failed = 0;
  char buf[64];
  for (const auto& l : lines) {
    out << l.name << '\t';
    std::snprintf(buf, sizeof buf, "%.6e\t%.1e\t", to_double(l.residual), to_double(l.tol));
    out << buf << (l.pass ? "PASS" : "FAIL") << '\n';
    if (!l.pass) ++failed;
  }
  out << "SUMMARY\tpassed=" << lines.size() - failed << "\tfailed=" << failed << '\t'
      << (failed == 0 ? "PASS" : "FAIL") << '\n';
  return failed == 0;
}

}  // namespace tricenter::cli
