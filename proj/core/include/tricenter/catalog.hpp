#pragma once

#include <string>
#include <vector>

#include "tricenter/centers.hpp"

namespace tricenter {

// 4 * area from side lengths (Heron), clamped at zero for slivers.
Real four_area(const Real& a, const Real& b, const Real& c);

// Named centers in side-length form. Read-only after first use.
class CenterCatalog {
 public:
  static const CenterCatalog& instance();

  const CenterFunction& get(const std::string& label) const;
  bool contains(const std::string& label) const;
  const std::vector<CenterFunction>& entries() const { return entries_; }
  std::vector<std::string> labels() const;

 private:
  CenterCatalog();
  std::vector<CenterFunction> entries_;
};

inline const CenterFunction& catalog_center(const std::string& label) {
  return CenterCatalog::instance().get(label);
}

// Coefficients w3, w6 with phi_i = w3 * phi3 + w6 * phi6 for centers on the
// Brocard axis, as tabulated in the literature.
struct BrocardRow {
  std::string label;
  CyclicFactor w3;
  CyclicFactor w6;
};
std::vector<BrocardRow> brocard_coefficient_rows();
// X52 with the coefficient that actually reproduces phi52.
BrocardRow brocard_row_52_corrected();

// psi_{i; l0:l1} = l0 * w3_i * phi3 + l1 * w6_i * phi6
CenterFunction brocard_span_member(const BrocardRow& row, const Real& l0, const Real& l1);

// psi_{i; l0:l1} ~ phi_j
struct BrocardIdentity {
  std::string from;
  double l0;
  double l1;
  std::string to;
};
std::vector<BrocardIdentity> brocard_identities();
std::vector<BrocardIdentity> brocard_identities_corrected();
std::string to_string(const BrocardIdentity& id);

}  // namespace tricenter
