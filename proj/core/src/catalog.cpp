#include "tricenter/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tricenter/errors.hpp"

namespace tricenter {

namespace {

// (4A)^2 as a polynomial; exact for integer sides
Real sixteen_area_sq(const Real& a, const Real& b, const Real& c) {
  return (a + b + c) * (-a + b + c) * (a - b + c) * (a + b - c);
}

Real phi15(const Real& a, const Real& b, const Real& c) {
  return a * (sqrt3() * (-a * a + b * b + c * c) + four_area(a, b, c));
}

Real phi16(const Real& a, const Real& b, const Real& c) {
  return a * (sqrt3() * (-a * a + b * b + c * c) - four_area(a, b, c));
}

Real phi11(const Real& a, const Real& b, const Real& c) { return (b + c - a) * (b - c) * (b - c); }

Real w50_6(const Real& a, const Real& b, const Real& c) {
  const Real a2 = a * a, b2 = b * b, c2 = c * c;
  return Real(-2) * a2 * b2 * c2 - (-a2 + b2 + c2) * (a2 - b2 + c2) * (a2 + b2 - c2);
}

CenterFunction make(const char* id, Evaluator f, int degree, Traceability t, const char* formula) {
  return CenterFunction(id, std::move(f), degree, t, formula);
}

using T = Traceability;

}  // namespace

Real four_area(const Real& a, const Real& b, const Real& c) {
  using std::sqrt;
  const Real r = sixteen_area_sq(a, b, c);
  return r > 0 ? Real(sqrt(r)) : Real(0);
}

CenterCatalog::CenterCatalog() {
  using R = const Real&;
  entries_ = {
      make("X1", [](R, R, R) { return Real(1); }, 0, T::Yes, "1"),
      make("X2", [](R a, R, R) { return Real(1) / a; }, -1, T::Yes, "1/a"),
      make("X3", [](R a, R b, R c) { return a * (-a * a + b * b + c * c); }, 3, T::Yes, "a(-a^2+b^2+c^2)"),
      make("X6", [](R a, R, R) { return a; }, 1, T::Yes, "a"),
      make("X11", [](R a, R b, R c) { return phi11(a, b, c); }, 3, T::No, "(b+c-a)(b-c)^2"),
      // Products of the other two cyclic slots: proportional to 1/phi15 (1/phi16)
      // without the poles where one slot vanishes.
      make("X13", [](R a, R b, R c) { return phi15(b, c, a) * phi15(c, a, b); }, 6, T::Yes,
           "phi15(b,c,a)*phi15(c,a,b)"),
      make("X14", [](R a, R b, R c) { return phi16(b, c, a) * phi16(c, a, b); }, 6, T::No,
           "phi16(b,c,a)*phi16(c,a,b)"),
      make("X15", [](R a, R b, R c) { return phi15(a, b, c); }, 3, T::Yes, "a(sqrt3(-a^2+b^2+c^2)+4A)"),
      make("X16", [](R a, R b, R c) { return phi16(a, b, c); }, 3, T::No, "a(sqrt3(-a^2+b^2+c^2)-4A)"),
      make("X32", [](R a, R, R) { return Real(2) * a * a * a; }, 3, T::Unknown, "2a^3"),
      make("X39", [](R a, R b, R c) { return Real(2) * a * (b * b + c * c); }, 3, T::Unknown, "2a(b^2+c^2)"),
      make("X50",
           [](R a, R b, R c) {
             const Real a2 = a * a, b2 = b * b, c2 = c * c;
             return Real(2) * a * a2 * (a2 * a2 + b2 * b2 + c2 * c2 - Real(2) * a2 * (b2 + c2) + b2 * c2);
           },
           7, T::Unknown, "2a^3(a^4+b^4+c^4-2a^2(b^2+c^2)+b^2c^2)"),
      make("X52",
           [](R a, R b, R c) {
             const Real a2 = a * a, b2 = b * b, c2 = c * c;
             return Real(2) * a * (a2 * a2 + b2 * b2 + c2 * c2 - Real(2) * a2 * (b2 + c2)) *
                    ((b2 - c2) * (b2 - c2) - a2 * (b2 + c2));
           },
           9, T::Unknown, "2a(a^4+b^4+c^4-2a^2(b^2+c^2))((b^2-c^2)^2-a^2(b^2+c^2))"),
      make("X58", [](R a, R b, R c) { return Real(2) * a * (a + b) * (a + c); }, 3, T::Unknown, "2a(a+b)(a+c)"),
      make("X59", [](R a, R b, R c) { return phi11(b, c, a) * phi11(c, a, b); }, 6, T::No,
           "phi11(b,c,a)*phi11(c,a,b)"),
      make("X61", [](R a, R b, R c) { return a * (-a * a + b * b + c * c + sqrt3() * four_area(a, b, c)); }, 3,
           T::Unknown, "a(-a^2+b^2+c^2+4sqrt3 A)"),
      make("X62", [](R a, R b, R c) { return a * (-a * a + b * b + c * c - sqrt3() * four_area(a, b, c)); }, 3,
           T::Unknown, "a(-a^2+b^2+c^2-4sqrt3 A)"),
  };
}

const CenterCatalog& CenterCatalog::instance() {
  static const CenterCatalog catalog;
  return catalog;
}

const CenterFunction& CenterCatalog::get(const std::string& label) const {
  for (const auto& e : entries_)
    if (e.id() == label) return e;
  throw UnknownLabelError("unknown center label '" + label + "'");
}

bool CenterCatalog::contains(const std::string& label) const {
  return std::any_of(entries_.begin(), entries_.end(), [&](const auto& e) { return e.id() == label; });
}

std::vector<std::string> CenterCatalog::labels() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.id());
  return out;
}

namespace {

CyclicFactor factor(Evaluator f, int degree, const char* name) { return {std::move(f), degree, name}; }

CyclicFactor constant_factor(double v, const char* name) {
  return factor([v](const Real&, const Real&, const Real&) { return Real(v); }, 0, name);
}

CyclicFactor four_area_factor(double k, const char* name) {
  return factor([k](const Real& a, const Real& b, const Real& c) { return Real(k) * four_area(a, b, c); }, 2,
                name);
}

CyclicFactor sum_sq_factor() {
  return factor([](const Real& a, const Real& b, const Real& c) { return a * a + b * b + c * c; }, 2,
                "a^2+b^2+c^2");
}

CyclicFactor w50_6_factor() { return factor(w50_6, 6, "-2a^2b^2c^2-(-a^2+b^2+c^2)(a^2-b^2+c^2)(a^2+b^2-c^2)"); }

CyclicFactor area_sq_factor() { return factor(sixteen_area_sq, 4, "(4A)^2"); }

CyclicFactor area_quartic_factor() {
  return factor(
      [](const Real& a, const Real& b, const Real& c) {
        const Real s = sixteen_area_sq(a, b, c);
        return s * s;
      },
      8, "(4A)^4");
}

}  // namespace

std::vector<BrocardRow> brocard_coefficient_rows() {
  const Real r3 = sqrt3();
  return {
      {"X15", factor([r3](const Real&, const Real&, const Real&) { return r3; }, 0, "sqrt3"),
       four_area_factor(1, "4A")},
      {"X16", factor([r3](const Real&, const Real&, const Real&) { return r3; }, 0, "sqrt3"),
       four_area_factor(-1, "-4A")},
      {"X32", constant_factor(-1, "-1"), sum_sq_factor()},
      {"X39", constant_factor(1, "1"), sum_sq_factor()},
      {"X50", area_sq_factor(), w50_6_factor()},
      {"X52", w50_6_factor(), area_quartic_factor()},
      {"X58", constant_factor(-1, "-1"),
       factor([](const Real& a, const Real& b, const Real& c) { return (a + b + c) * (a + b + c); }, 2,
              "(a+b+c)^2")},
      {"X61", constant_factor(1, "1"), four_area_factor(std::sqrt(3.0), "4sqrt3 A")},
      {"X62", constant_factor(1, "1"), four_area_factor(-std::sqrt(3.0), "-4sqrt3 A")},
  };
}

BrocardRow brocard_row_52_corrected() {
  return {"X52",
          factor([](const Real& a, const Real& b, const Real& c) { return w50_6(a, b, c) - Real(2) * a * a * b * b * c * c; },
                 6, "w50_6-2a^2b^2c^2"),
          area_quartic_factor()};
}

CenterFunction brocard_span_member(const BrocardRow& row, const Real& l0, const Real& l1) {
  CyclicFactor w3 = row.w3;
  CyclicFactor w6 = row.w6;
  w3.f = [f = row.w3.f, l0](const Real& a, const Real& b, const Real& c) { return l0 * f(a, b, c); };
  w6.f = [f = row.w6.f, l1](const Real& a, const Real& b, const Real& c) { return l1 * f(a, b, c); };
  std::ostringstream id;
  id << "psi(" << row.label << ";" << l0 << ":" << l1 << ")";
  return cyclic_affine(catalog_center("X3"), catalog_center("X6"), w3, w6).relabeled(id.str());
}

std::vector<BrocardIdentity> brocard_identities() {
  return {
      {"X15", -1, 1, "X16"}, {"X15", 1, 3, "X61"},  {"X15", -1, 3, "X62"}, {"X16", -1, 1, "X15"},
      {"X16", -1, 3, "X61"}, {"X16", 1, 3, "X62"},  {"X32", -1, 1, "X39"}, {"X39", -1, 1, "X32"},
      {"X61", 3, 1, "X15"},  {"X61", -1, 3, "X16"}, {"X61", -1, 1, "X62"}, {"X62", -3, 1, "X15"},
      {"X62", 1, 3, "X16"},  {"X62", -1, 1, "X61"},
  };
}

std::vector<BrocardIdentity> brocard_identities_corrected() {
  auto ids = brocard_identities();
  for (auto& id : ids) {
    if (id.from == "X61" && id.to == "X16") id = {"X61", -3, 1, "X16"};
    if (id.from == "X62" && id.to == "X16") id = {"X62", 3, 1, "X16"};
  }
  return ids;
}

std::string to_string(const BrocardIdentity& id) {
  std::ostringstream os;
  os << "psi(" << id.from << ";" << id.l0 << ":" << id.l1 << ")~" << id.to;
  return os.str();
}

}  // namespace tricenter
