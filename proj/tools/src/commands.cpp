#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <set>

#include <CLI11.hpp>

#include "io.hpp"
#include "tricenter/catalog.hpp"
#include "tricenter/errors.hpp"
#include "tricenter/inverse_design.hpp"
#include "tricenter/sampling.hpp"

namespace tricenter::cli {

namespace {

std::string fmt(const Real& x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", to_double(x));
  return buf;
}

// "out", "out.csv" and "out.svg" all name the stem "out"
std::string stem_of(const std::string& out) {
  for (const char* ext : {".csv", ".svg"}) {
    const std::string e(ext);
    if (out.size() > e.size() && out.compare(out.size() - e.size(), e.size(), e) == 0)
      return out.substr(0, out.size() - e.size());
  }
  return out;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + path + "'");
  return f;
}

std::string center_or_default(const RunConfig& cfg) { return cfg.center.empty() ? "X13" : cfg.center; }

// --centers wins, then --center, then the suite default
std::vector<CenterFunction> suite_centers(const RunConfig& cfg, const std::vector<std::string>& fallback) {
  if (!cfg.centers.empty()) return parse_centers(cfg.centers);
  if (!cfg.center.empty()) return {parse_center(cfg.center)};
  std::vector<CenterFunction> out;
  for (const auto& l : fallback) out.push_back(parse_center(l));
  return out;
}

std::vector<Triangle> random_triangles(const RunConfig& cfg) {
  if (cfg.triangles < 2) throw ConfigError("check.triangles must be at least 2");
  Rng rng(cfg.seed);
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < cfg.triangles; ++i) out.push_back(random_non_equilateral_triangle(rng));
  return out;
}

bool likely_traceable(const CenterFunction& psi, std::uint64_t seed) {
  if (psi.traceability() == Traceability::Yes) return true;
  if (psi.traceability() == Traceability::No) return false;
  return traceability_report(psi, 10000, seed).verdict == TraceVerdict::LikelyTraceable;
}

Real abs_max(const Triple& v) {
  using std::abs;
  return std::max({abs(v[0]), abs(v[1]), abs(v[2])});
}

ReportLine line(std::string name, const Real& r, const Real& tol) { return {std::move(name), r, tol, r < tol}; }

std::vector<ReportLine> suite_group(const RunConfig& cfg, const Real& tol) {
  Rng rng(cfg.seed);
  std::vector<TriangleFamily> fams;
  for (int k = 0; k < 20; ++k) {
    std::array<Polynomial, 3> c;
    for (auto& p : c)
      for (int d = 0; d < 4; ++d) p.push_back(uniform(rng, -1, 1));
    fams.push_back(polynomial_family("cubic" + std::to_string(k), c));
  }
  const TriangleFamily I = builtin("identity");
  Real comm = 0, assoc = 0, ident = 0, inv = 0;
  for (std::size_t k = 0; k < fams.size(); ++k) {
    const auto& F = fams[k];
    const auto& G = fams[(k + 1) % fams.size()];
    const auto& H = fams[(k + 2) % fams.size()];
    const TriangleFamily FG = concat(F, G), GF = concat(G, F);
    const TriangleFamily FG_H = concat(FG, H), F_GH = concat(F, concat(G, H));
    const TriangleFamily FI = concat(F, I), FinvF = concat(F, inverse(F));
    for (int i = 0; i < 100; ++i) {
      const Real t = uniform(rng, -2, 3);
      const Triple f = F(t), fi = FinvF(t);
      const Real s = abs_max(f);
      // products that nearly vanish carry no projective information
      if (!(abs_max(FG(t)) > Real(1e-8) * s * abs_max(G(t))) ||
          !(abs_max(FG_H(t)) > Real(1e-8) * s * abs_max(G(t)) * abs_max(H(t))) ||
          !(abs_max(fi) > Real(1e-8) * s * s * s))
        continue;
      comm = std::max(comm, projective_distance(FG(t), GF(t)));
      assoc = std::max(assoc, projective_distance(FG_H(t), F_GH(t)));
      ident = std::max(ident, projective_distance(FI(t), f));
      inv = std::max(inv, projective_distance(fi, I(t)));
    }
  }

  const TriangleFamily A = builtin("aliquot"), N = builtin("nedian");
  const TriangleFamily Ainv = inverse(A), Ninv = inverse(N);
  Real ra = 0, rn = 0;
  for (int i = 0; i < 202; ++i) {
    const Real t = A.domain().lo + (A.domain().hi - A.domain().lo) * Real(i) / Real(201);
    using std::abs;
    if (abs(t - Real(0.5)) < Real(1e-3)) continue;
    const Real s = -t / (1 - 2 * t);
    ra = std::max(ra, projective_distance(Ainv(t), N(s)));
    rn = std::max(rn, projective_distance(Ninv(t), A(s)));
  }
  return {line("group.associativity", assoc, tol), line("group.commutativity", comm, tol),
          line("group.identity", ident, tol),      line("group.inverse", inv, tol),
          line("group.inverse_aliquot", ra, tol),  line("group.inverse_nedian", rn, tol)};
}

std::vector<ReportLine> suite_center_checks(const RunConfig& cfg, const Real& tol) {
  std::vector<ReportLine> out;
  const auto centers = suite_centers(cfg, CenterCatalog::instance().labels());
  const Triangle equilateral = canonical_placement({1, 1, 1});
  for (const auto& psi : centers) {
    out.push_back(line("centers." + psi.id() + ".bisymmetry", bisymmetry_residual(psi, 256, cfg.seed), tol));
    if (psi.degree())
      out.push_back(line("centers." + psi.id() + ".homogeneity", homogeneity_residual(psi, 256, cfg.seed), tol));
    if (likely_traceable(psi, cfg.seed))
      out.push_back(line("centers." + psi.id() + ".equilateral",
                         distance(center_point(psi, equilateral), centroid(equilateral)), tol));
  }

  // closed-form traces
  using std::abs;
  Rng rng(cfg.seed);
  std::map<std::string, Real> worst;
  for (int i = 0; i < 100; ++i) {
    const SideLengths s = sample_shape(rng).scaled(uniform(rng, 0.5, 3.0));
    const Real A4 = four_area(s.a, s.b, s.c);
    const std::pair<const char*, Real> expected[] = {
        {"X1", s.a + s.b + s.c}, {"X2", Real(3)}, {"X3", A4 * A4}, {"X6", s.a * s.a + s.b * s.b + s.c * s.c}};
    for (const auto& [label, want] : expected)
      worst[label] = std::max(worst[label], Real(abs(trace(catalog_center(label), s) - want) / abs(want)));
  }
  for (const auto& psi : centers)
    if (worst.count(psi.id())) out.push_back(line("centers." + psi.id() + ".trace", worst[psi.id()], tol));
  return out;
}

std::vector<ReportLine> suite_local(const RunConfig& cfg, const Real& tol) {
  std::vector<std::string> fallback;
  for (const auto& psi : CenterCatalog::instance().entries())
    if (likely_traceable(psi, cfg.seed)) fallback.push_back(psi.id());
  static const char* names[] = {"interpolation", "reflected_midpoint", "mirrored_thirds", "nedian_collapse"};
  const auto tris = random_triangles(cfg);
  std::vector<ReportLine> out;
  for (const auto& psi : suite_centers(cfg, fallback)) {
    std::array<Real, 4> worst{};
    for (const auto& T : tris) {
      const auto rep = local_property_suite(psi, T, tol);
      for (std::size_t k = 0; k < 4; ++k) worst[k] = std::max(worst[k], rep.residual[k]);
    }
    for (std::size_t k = 0; k < 4; ++k) out.push_back(line("local." + psi.id() + "." + names[k], worst[k], tol));
  }
  return out;
}

std::vector<ReportLine> suite_semi(const RunConfig& cfg, const Real& tol, std::ostream& err) {
  const TriangleFamily F = parse_family(cfg.family);
  const auto tris = random_triangles(cfg);
  const Grid grid = grid_of(cfg);
  std::vector<ReportLine> out;
  for (const auto& psi : suite_centers(cfg, {"X13"})) {
    const auto rep = verify_semi_invariance(psi, F, tris, grid, tol);
    err << "# semi " << psi.id() << " along " << F.label() << ": p99 " << fmt(rep.worst_p99) << ", max "
        << fmt(rep.worst_max) << '\n';
    out.push_back({"semi." + psi.id() + "." + F.label(), rep.worst_p99, tol, rep.pass});
  }
  return out;
}

std::vector<ReportLine> suite_invariant(const RunConfig& cfg, const Real& tol) {
  const auto tris = random_triangles(cfg);
  const TriangleFamily A = builtin("aliquot");
  std::vector<ReportLine> out;
  for (const auto& psi : suite_centers(cfg, {"X13", "X14", "X15", "X16"})) {
    const auto rep = verify_invariance(psi, tris, tol, false);
    const auto semi = verify_semi_invariance(psi, A, tris, grid_of(cfg), tol);
    out.push_back(line("invariant." + psi.id() + ".orthogonality", rep.worst_orthogonality, tol));
    out.push_back(line("invariant." + psi.id() + ".ratio", rep.worst_ratio, tol));
    out.push_back({"invariant." + psi.id() + ".semi", semi.worst_p99, tol, semi.pass});
  }
  return out;
}

Real proportionality(const CenterFunction& p, const CenterFunction& q, const std::vector<SideLengths>& sides) {
  Real worst = 0;
  for (const auto& s : sides)
    worst = std::max(worst, projective_distance(as_triple(center_trilinears(p, s)), as_triple(center_trilinears(q, s))));
  return worst;
}

std::vector<ReportLine> suite_brocard(const RunConfig& cfg, const Real& tol) {
  Rng rng(cfg.seed);
  std::vector<SideLengths> sides;
  for (int i = 0; i < 100; ++i) sides.push_back(sample_shape(rng).scaled(uniform(rng, 0.5, 3.0)));
  const auto rows = brocard_coefficient_rows();
  auto row_of = [&](const std::string& label) {
    const auto it = std::find_if(rows.begin(), rows.end(), [&](const BrocardRow& r) { return r.label == label; });
    if (it == rows.end()) throw ConfigError("no Brocard row for " + label);
    return *it;
  };
  std::vector<ReportLine> out;
  for (const auto& row : rows)
    out.push_back(line("brocard.row." + row.label,
                       proportionality(brocard_span_member(row, 1, 1), catalog_center(row.label), sides), tol));
  for (const auto& id : brocard_identities())
    out.push_back(line("brocard.identity." + to_string(id),
                       proportionality(brocard_span_member(row_of(id.from), id.l0, id.l1), catalog_center(id.to), sides),
                       tol));
  // entries that differ from the tabulated ones
  const BrocardRow fixed = brocard_row_52_corrected();
  out.push_back(line("brocard.corrected.row." + fixed.label,
                     proportionality(brocard_span_member(fixed, 1, 1), catalog_center(fixed.label), sides), tol));
  const auto tabulated = brocard_identities();
  for (const auto& id : brocard_identities_corrected()) {
    const bool changed = std::none_of(tabulated.begin(), tabulated.end(), [&](const BrocardIdentity& o) {
      return o.from == id.from && o.to == id.to && o.l0 == id.l0 && o.l1 == id.l1;
    });
    if (changed)
      out.push_back(line("brocard.corrected.identity." + to_string(id),
                         proportionality(brocard_span_member(row_of(id.from), id.l0, id.l1), catalog_center(id.to),
                                         sides),
                         tol));
  }
  return out;
}

PolarTarget checked_target(const std::string& spec) {
  try {
    return parse_target(spec);
  } catch (const DomainError& e) {
    throw ConfigError(std::string("target: ") + e.what());
  }
}

Grid target_grid(const PolarTarget& target, const RunConfig& cfg) {
  if (cfg.samples < 2) throw ConfigError("grid.samples must be at least 2");
  return {target.domain.lo, target.domain.hi, cfg.samples};
}

std::vector<ReportLine> suite_inverse(const RunConfig& cfg, const Real& tol) {
  const PolarTarget target = checked_target(cfg.target);
  const Triangle T = parse_triangle(cfg.triangle);
  std::vector<ReportLine> out;
  for (const auto& psi : suite_centers(cfg, {"X13", "X3", "X6"})) {
    const auto rep = verify_target_reproduction(psi, target, T, target_grid(target, cfg));
    out.push_back(line("inverse." + psi.id() + "." + target.label, rep.residual, tol));
  }
  return out;
}

void emit_curve(const TracedCurve& curve, const Triangle& T, const RunConfig& cfg, std::ostream& out) {
  const bool csv = cfg.format != Format::Svg, svg = cfg.format != Format::Csv;
  if (cfg.out.empty()) {
    if (csv && svg) throw ConfigError("--format both needs --out");
    if (csv) write_csv(out, curve);
    if (svg) write_svg(out, curve, T);
    return;
  }
  const std::string stem = stem_of(cfg.out);
  if (csv) {
    auto f = open_output(stem + ".csv");
    write_csv(f, curve);
  }
  if (svg) {
    auto f = open_output(stem + ".svg");
    write_svg(f, curve, T);
  }
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> s{"group", "centers", "local", "semi", "invariant", "brocard", "inverse"};
  return s;
}

Real default_tolerance(const std::string& suite) {
  static const std::map<std::string, double> tol{{"group", 1e-9}, {"centers", 1e-10}, {"local", 1e-10},
                                                 {"semi", 1e-9},  {"invariant", 1e-9}, {"brocard", 1e-9},
                                                 {"inverse", 1e-8}};
  const auto it = tol.find(suite);
  if (it == tol.end()) throw ConfigError("unknown verify suite '" + suite + "'");
  return Real(it->second);
}

int cmd_trace(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Triangle T = parse_triangle(cfg.triangle);
  const CenterFunction psi = parse_center(center_or_default(cfg));
  const TriangleFamily F = parse_family(cfg.family);
  const TracedCurve curve = trace_center(T, psi, F, grid_of(cfg));
  emit_curve(curve, T, cfg, out);
  std::size_t poles = 0, degenerate = 0;
  for (const auto& s : curve.samples) {
    poles += s.flag == SampleFlag::Pole;
    degenerate += s.flag == SampleFlag::Degenerate;
  }
  if (poles || degenerate)
    err << "# " << poles << " poled and " << degenerate << " degenerate samples of " << curve.samples.size() << '\n';
  return kPass;
}

int cmd_verify(const std::string& suite, const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const Real tol = cfg.tol.value_or(default_tolerance(suite));
  std::vector<ReportLine> lines;
  if (suite == "group") lines = suite_group(cfg, tol);
  else if (suite == "centers") lines = suite_center_checks(cfg, tol);
  else if (suite == "local") lines = suite_local(cfg, tol);
  else if (suite == "semi") lines = suite_semi(cfg, tol, err);
  else if (suite == "invariant") lines = suite_invariant(cfg, tol);
  else if (suite == "brocard") lines = suite_brocard(cfg, tol);
  else if (suite == "inverse") lines = suite_inverse(cfg, tol);
  else throw ConfigError("unknown verify suite '" + suite + "'");
  return write_report(out, std::move(lines)) ? kPass : kCheckFailed;
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const TriangleFamily F = parse_family(cfg.family);
  const Grid grid = grid_of(cfg);
  const DecomposabilityReport dr = decomposability_report(F);
  if (!dr.decomposable)
    throw NonDecomposableError("family '" + F.label() + "' is not decomposable: delta vanishes at t=" +
                                   format_number(*dr.witness) + " with unequal components",
                               to_double(*dr.witness));
  const FamilyDecomposition d = decompose(F);
  out << "t,sigma,tau,residual,flag\n";
  std::size_t singular = 0;
  for (std::size_t i = 0; i < grid.n; ++i) {
    const Real t = grid.at(i);
    using std::abs;
    const bool near_singular = std::any_of(d.singular_ts.begin(), d.singular_ts.end(),
                                           [&](const Real& s) { return abs(t - s) < Real(1e-3); });
    if (F.near_pole(t)) {
      out << format_number(t) << ",nan,nan,nan,pole\n";
      continue;
    }
    const Real sigma = d.sigma(t), tau = d.tau(t);
    if (near_singular || !is_finite(sigma) || !is_finite(tau)) {
      ++singular;
      out << format_number(t) << ',' << format_number(sigma) << ",nan,nan,singular\n";
      continue;
    }
    const Real r = projective_distance(scaling_aliquot_triple(sigma, tau), F(t));
    out << format_number(t) << ',' << format_number(sigma) << ',' << format_number(tau) << ',' << format_number(r)
        << ",ok\n";
  }
  for (const Real& s : d.singular_ts) err << "# delta vanishes at t=" << format_number(s) << '\n';
  (void)singular;
  return kPass;
}

int cmd_inverse_design(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const PolarTarget target = checked_target(cfg.target);
  const Triangle T = parse_triangle(cfg.triangle);
  const CenterFunction psi = parse_center(center_or_default(cfg));
  const Grid grid = target_grid(target, cfg);
  const Real tol = cfg.tol.value_or(default_tolerance("inverse"));

  const TriangleFamily F = family_from_target(target);
  const SigmaTau st = sigma_tau_from_target(target);
  std::set<double> branch_poles;
  std::ostringstream family_csv;
  family_csv << "t,psi1,psi2,psi3,sigma,tau,flag\n";
  for (std::size_t i = 0; i < grid.n; ++i) {
    const Real t = grid.at(i);
    const Triple v = F(t);
    family_csv << format_number(t) << ',' << format_number(v[0]) << ',' << format_number(v[1]) << ','
               << format_number(v[2]) << ',' << format_number(st.sigma(t)) << ',';
    try {
      family_csv << format_number(st.tau(t)) << (target.active(t) ? ",ok\n" : ",small_radius\n");
    } catch (const BranchPoleError& e) {
      branch_poles.insert(e.at);
      family_csv << "nan,branch_pole\n";
    }
  }
  for (const Real& t : tricenter::branch_poles(target, grid)) branch_poles.insert(to_double(t));
  for (double t : branch_poles) err << "warning: branch pole at t=" << format_number(t) << '\n';

  const auto rep = verify_target_reproduction(psi, target, T, grid);
  if (!cfg.out.empty()) {
    const std::string stem = stem_of(cfg.out);
    auto f = open_output(stem + ".family.csv");
    f << family_csv.str();
    emit_curve(rep.curve, T, cfg, out);
  }
  err << "# " << (rep.registration == Registration::Similarity ? "similarity" : "affine") << " registration on "
      << rep.used << " samples, " << rep.skipped << " skipped\n";
  return write_report(out, {line("inverse_design." + psi.id() + "." + target.label, rep.residual, tol)})
             ? kPass
             : kCheckFailed;
}

int cmd_catalog(std::ostream& out) {
  out << "label\tdegree\ttraceable\tformula\n";
  for (const auto& psi : CenterCatalog::instance().entries())
    out << psi.id() << '\t' << (psi.degree() ? std::to_string(*psi.degree()) : "?") << '\t'
        << to_string(psi.traceability()) << '\t' << psi.formula() << '\n';
  return kPass;
}

namespace {

struct FlagSet {
  std::string config;
  std::map<std::string, std::string> values;  // config key -> raw flag text
  std::vector<std::pair<std::string, CLI::Option*>> options;  // every subcommand's copy
};

void add_run_flags(CLI::App* app, FlagSet& flags) {
  app->add_option("--config", flags.config, "key=value config file with [run] [grid] [check] [output] sections");
  const std::pair<const char*, const char*> keys[] = {
      {"--triangle", "run.triangle"}, {"--center", "run.center"},   {"--centers", "run.centers"},
      {"--family", "run.family"},     {"--target", "run.target"},   {"--tmin", "grid.tmin"},
      {"--tmax", "grid.tmax"},        {"--samples", "grid.samples"}, {"--tol", "check.tol"},
      {"--seed", "check.seed"},       {"--triangles", "check.triangles"}, {"--out", "output.out"},
      {"--format", "output.format"}};
  for (const auto& [flag, key] : keys) flags.options.emplace_back(key, app->add_option(flag, flags.values[key], key));
}

RunConfig resolve(const FlagSet& flags) {
  RunConfig cfg;
  if (!flags.config.empty()) load_config_file(flags.config, cfg);
  for (const auto& [key, opt] : flags.options)
    if (opt->count()) apply_setting(cfg, key, flags.values.at(key));
  return cfg;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Triangle centers along triangle families", "tricenter"};
  app.require_subcommand(1);
  FlagSet flags;

  auto* trace = app.add_subcommand("trace", "trace a center along a family; CSV and/or SVG");
  add_run_flags(trace, flags);
  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(verify_suites()));
  add_run_flags(verify, flags);
  auto* decomp = app.add_subcommand("decompose", "sigma/tau decomposition of a family");
  add_run_flags(decomp, flags);
  auto* inv = app.add_subcommand("inverse-design", "family whose center curves are sheared copies of a target");
  add_run_flags(inv, flags);
  auto* catalog = app.add_subcommand("catalog", "list catalog centers");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (catalog->parsed()) return cmd_catalog(out);
    const RunConfig cfg = resolve(flags);
    if (trace->parsed()) return cmd_trace(cfg, out, err);
    if (verify->parsed()) return cmd_verify(suite, cfg, out, err);
    if (decomp->parsed()) return cmd_decompose(cfg, out, err);
    if (inv->parsed()) return cmd_inverse_design(cfg, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const NonDecomposableError& e) {
    err << "math error: " << e.what() << " (witness t=" << format_number(e.witness) << ")\n";
    return kMathError;
  } catch (const BranchPoleError& e) {
    err << "math error: " << e.what() << " (t=" << format_number(e.at) << ")\n";
    return kMathError;
  } catch (const MathError& e) {
    err << "math error: " << e.what() << '\n';
    return kMathError;
  }
  return kConfigError;
}

}  // namespace tricenter::cli
