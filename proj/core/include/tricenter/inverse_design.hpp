#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "tricenter/curves.hpp"
#include "tricenter/families.hpp"

namespace tricenter {

// Polar curve t -> r(t) (cos theta(t), sin theta(t)). Samples with
// |r| <= rmin are outside the usable subdomain.
struct PolarTarget {
  std::function<Real(const Real&)> r;
  std::function<Real(const Real&)> theta;
  Interval domain;
  Real rmin{0.05};
  std::string label;

  bool active(const Real& t) const;
  Point2 point(const Real& t) const;
};

// Throws DomainError if the domain or theta leaves (-3pi/2, 3pi/2).
void validate_target(const PolarTarget& target, std::size_t n_samples = 1024);

// Largest symmetric domain inside (-3pi/2, 3pi/2) used by default.
Interval default_target_domain();

PolarTarget rose_target(const Real& amp, int n, Interval domain = default_target_domain());
PolarTarget tabulated_target(std::vector<std::array<Real, 3>> rows, std::string label = "table");
// whitespace/comma separated "t r theta" rows, '#' comments
PolarTarget load_tabulated_target(const std::string& path);
// "rose(amp,n)" or a path to a table
PolarTarget parse_target(const std::string& spec);

Triple polar_triple(const Real& r, const Real& theta);
TriangleFamily family_from_target(const PolarTarget& target);
TriangleFamily rose_family(const Real& amp, int n);

struct SigmaTau {
  std::function<Real(const Real&)> sigma;
  std::function<Real(const Real&)> tau;  // throws BranchPoleError on the branch pole
};
SigmaTau sigma_tau_from_target(const PolarTarget& target);
// Parameters on or between grid samples where tau has its branch pole.
std::vector<Real> branch_poles(const PolarTarget& target, const Grid& grid);

enum class Registration { Auto, Affine, Similarity };

struct ReproductionReport {
  Real residual{0};  // relative to max |P - X2| of the traced curve
  Registration registration{Registration::Affine};
  std::size_t used{0};
  std::size_t skipped{0};
  TracedCurve curve;
};
ReproductionReport verify_target_reproduction(const CenterFunction& psi, const PolarTarget& target, const Triangle& T,
                                              const Grid& grid, Registration reg = Registration::Auto);

}  // namespace tricenter
