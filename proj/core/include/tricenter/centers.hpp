#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "tricenter/geom_core.hpp"

namespace tricenter {

using Evaluator = std::function<Real(const Real&, const Real&, const Real&)>;

enum class Traceability { Yes, No, Unknown };
const char* to_string(Traceability t);

// psi(a,b,c) with the metadata the algebra needs: homogeneity degree (if
// known) and known traceability. Immutable; cheap to copy.
class CenterFunction {
 public:
  CenterFunction(std::string id, Evaluator f, std::optional<int> degree, Traceability traceable,
                 std::string formula = {});

  Real operator()(const Real& a, const Real& b, const Real& c) const { return (*f_)(a, b, c); }

  const std::string& id() const { return id_; }
  const std::optional<int>& degree() const { return degree_; }
  Traceability traceability() const { return traceable_; }
  const std::string& formula() const { return formula_; }

  CenterFunction relabeled(std::string id) const;

 private:
  std::string id_;
  std::shared_ptr<const Evaluator> f_;
  std::optional<int> degree_;
  Traceability traceable_;
  std::string formula_;
};

// A nowhere-vanishing function invariant under cyclic permutation of (a,b,c).
struct CyclicFactor {
  Evaluator f;
  std::optional<int> degree;
  std::string name;

  Real operator()(const Real& a, const Real& b, const Real& c) const { return f(a, b, c); }
  static CyclicFactor constant(const Real& v);
};

// Sample check of the CyclicFactor contract (cyclic, non-vanishing). Semi-decision.
bool sampled_cyclic_factor_ok(const CyclicFactor& w, std::size_t n_samples = 256, std::uint64_t seed = 0);

// max(a,b,c)^degree, or the largest cyclic |psi| when the degree is unknown.
Real center_scale(const CenterFunction& psi, const SideLengths& s);

Trilinear center_trilinears(const CenterFunction& psi, const SideLengths& s);
Barycentric center_barycentrics(const CenterFunction& psi, const SideLengths& s);
Point2 center_point(const CenterFunction& psi, const Triangle& T);

Real trace(const CenterFunction& psi, const SideLengths& s);

CenterFunction normalize(const CenterFunction& psi);

enum class TraceVerdict { LikelyTraceable, NotTraceable };
struct TraceabilityReport {
  Real min_abs{0};
  Real max_abs{0};
  SideLengths argmin;
  bool sign_change{false};
  TraceVerdict verdict{TraceVerdict::LikelyTraceable};
  std::size_t evaluated{0};
};
TraceabilityReport traceability_report(const CenterFunction& psi, std::size_t n_samples = 10000,
                                       std::uint64_t seed = 0);

CenterFunction isogonal_conjugate(const CenterFunction& psi);
CenterFunction cyclic_affine(const CenterFunction& psi0, const CenterFunction& psi1, const CyclicFactor& w0,
                             const CyclicFactor& w1);
CenterFunction constant_affine(const CenterFunction& psi0, const CenterFunction& psi1, const Real& l0,
                               const Real& l1);
CenterFunction scaled_center(const CenterFunction& psi, const Real& sigma);

std::pair<Real, Real> cyclic_coefficients_of_collinear(const CenterFunction& psi0, const CenterFunction& psi1,
                                                       const CenterFunction& psi2, const SideLengths& s);

enum class DifferenceVerdict { LikelyDifferent, NotDifferent };
struct EssentialDifferenceReport {
  Real min_ratio{1};
  SideLengths witness;
  DifferenceVerdict verdict{DifferenceVerdict::LikelyDifferent};
};
EssentialDifferenceReport essential_difference_report(const CenterFunction& psi0, const CenterFunction& psi1,
                                                      std::size_t n_samples = 10000, std::uint64_t seed = 0);

// Sampled property checks used by the catalog invariants.
Real bisymmetry_residual(const CenterFunction& psi, std::size_t n_samples = 256, std::uint64_t seed = 0);
Real homogeneity_residual(const CenterFunction& psi, std::size_t n_samples = 256, std::uint64_t seed = 0);

}  // namespace tricenter
