#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tricenter/geom_core.hpp"

namespace tricenter {

using Generator = std::function<Triple(const Real&)>;
using Polynomial = std::vector<Real>;  // ascending degree

Real eval_polynomial(const Polynomial& p, const Real& t);

// Concatenation and inverse on generating triples.
Triple concat_triples(const Triple& u, const Triple& v);
Triple inverse_triple(const Triple& u);

struct Interval {
  Real lo{-2};
  Real hi{3};
};

class TriangleFamily {
 public:
  TriangleFamily(std::string label, Generator gen, Interval domain = {}, std::vector<Real> poles = {});

  Triple operator()(const Real& t) const { return (*gen_)(t); }
  const std::string& label() const { return label_; }
  const Interval& domain() const { return domain_; }
  // Parameters where the weight sum vanishes; samples within 1e-3 are skipped.
  const std::vector<Real>& poles() const { return poles_; }
  bool near_pole(const Real& t, const Real& radius = Real(1e-3)) const;

  // Polynomial families keep their coefficients for serialization.
  const std::optional<std::array<Polynomial, 3>>& coefficients() const { return coeffs_; }
  TriangleFamily with_coefficients(std::array<Polynomial, 3> c) const;

 private:
  std::string label_;
  std::shared_ptr<const Generator> gen_;
  Interval domain_;
  std::vector<Real> poles_;
  std::optional<std::array<Polynomial, 3>> coeffs_;
};

// Checks the family invariants on 256 samples of its domain and records sign
// changes of the weight sum as poles. Throws DomainError on violation.
TriangleFamily validated(TriangleFamily F, std::size_t n_samples = 256);

TriangleFamily make_family(const std::string& label, Generator gen, Interval domain = {});
TriangleFamily builtin(const std::string& label);
TriangleFamily polynomial_family(const std::string& label, const std::array<Polynomial, 3>& coeffs);
// "label; p1; p2; p3", coefficients ascending, separated by commas or blanks.
TriangleFamily parse_polynomial_family(const std::string& text);
std::string format_polynomial_family(const TriangleFamily& F);

struct FamilyTriangle {
  Triangle triangle;
  bool degenerate{false};
};
FamilyTriangle family_triangle(const Triangle& T, const TriangleFamily& F, const Real& t);

TriangleFamily concat(const TriangleFamily& F, const TriangleFamily& G);
TriangleFamily inverse(const TriangleFamily& F);
Real delta(const TriangleFamily& F, const Real& t);

struct DecomposabilityReport {
  bool decomposable{true};
  std::optional<Real> witness;   // t with delta = 0 but unequal components
  std::vector<Real> delta_roots;  // every located root of delta
};
DecomposabilityReport decomposability_report(const TriangleFamily& F, std::size_t n_samples = 4096);

struct FamilyDecomposition {
  std::function<Real(const Real&)> sigma;
  std::function<Real(const Real&)> tau;  // NaN where delta vanishes
  std::vector<Real> singular_ts;
};
FamilyDecomposition decompose(const TriangleFamily& F);
// Phi_S(sigma) o Phi_A(tau)
Triple scaling_aliquot_triple(const Real& sigma, const Real& tau);

}  // namespace tricenter
