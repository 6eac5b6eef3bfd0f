#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "tricenter/curves.hpp"

namespace tricenter::cli {

// 17 significant digits (max_digits10 of Real in extended builds); round-trips exactly.
std::string format_number(const Real& x);

// header t,x,y,flag
void write_csv(std::ostream& out, const TracedCurve& curve);
std::vector<CurveSample> read_csv(std::istream& in);

// 800x600, auto-scaled with a 5% margin; poles break the polyline.
void write_svg(std::ostream& out, const TracedCurve& curve, const Triangle& T);

struct ReportLine {
  std::string name;
  Real residual{0};
  Real tol{0};
  bool pass{false};
};
// NAME<TAB>RESIDUAL<TAB>TOL<TAB>PASS|FAIL per line, sorted by name, summary last.
// Returns true iff every line passed.
bool write_report(std::ostream& out, std::vector<ReportLine> lines);

}  // namespace tricenter::cli
