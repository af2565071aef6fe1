#include "cmred/cmclass.hpp"

#include <algorithm>

#include "cmred/error.hpp"

namespace cmred {

std::string_view to_string(JClass jc) {
  switch (jc) {
    case JClass::Zero: return "zero";
    case JClass::J1728: return "j1728";
    case JClass::Generic: return "generic";
  }
  return "?";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::NotCovered: return "NOT_COVERED";
  }
  return "?";
}

JClass classify_j(const FieldElement& j) {
  if (j.is_zero()) return JClass::Zero;
  if (j == FieldElement(1728)) return JClass::J1728;
  return JClass::Generic;
}

int mu_of_imaginary_quadratic(const QuadraticField& field) {
  if (!field.is_imaginary()) {
    throw Error(ErrorKind::NotImaginary, field.to_string() + " is not imaginary quadratic");
  }
  if (field.d() == -1) return 4;
  if (field.d() == -3) return 6;
  return 2;
}

CMSpec make_cm_spec(const QuadraticField& field, bool defined_over_base, bool order_is_maximal) {
  return {field, mu_of_imaginary_quadratic(field), order_is_maximal, defined_over_base};
}

std::optional<std::vector<KodairaType>> allowed_types_cm(long p, long vp, JClass jc) {
  using K = KodairaType;
  switch (jc) {
    case JClass::Generic:
      if (p != 2) return std::vector{K::I(0), K::IStar(0)};
      if (vp == 1) return std::vector{K::I(0), K::IStar(4), K::IStar(8), K::II(), K::IIStar()};
      return std::nullopt;
    case JClass::J1728:
      if (p != 2) return std::vector{K::I(0), K::III(), K::IIIStar(), K::IStar(0)};
      return std::nullopt;
    case JClass::Zero:
      if (p != 3) return std::vector{K::I(0), K::II(), K::IIStar(), K::IV(), K::IVStar(), K::IStar(0)};
      return std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::vector<KodairaType>> allowed_types_potential_cm(long p, long vp, JClass jc) {
  using K = KodairaType;
  switch (jc) {
    case JClass::Generic:
      if (p != 2) return std::vector{K::I(0), K::III(), K::IIIStar(), K::IStar(0)};
      return std::nullopt;
    case JClass::J1728:
      if (p != 2) return std::vector{K::I(0), K::III(), K::IIIStar(), K::IStar(0)};
      if (vp == 1) return std::vector{K::I(0), K::II(), K::III(), K::IIIStar(), K::IStar(2), K::IStar(3)};
      return std::nullopt;
    case JClass::Zero:
      if (p != 3) return std::vector{K::I(0), K::II(), K::IIStar(), K::IV(), K::IVStar(), K::IStar(0)};
      return std::nullopt;
  }
  return std::nullopt;
}

ConformanceReport check_curve(const WeierstrassModel& model, const LocalPlace& place, const CMSpec& spec,
                              const ResidueLimits& limits) {
  if (spec.mu != mu_of_imaginary_quadratic(spec.field)) {
    throw Error(ErrorKind::InvalidMu, "mu " + std::to_string(spec.mu) + " does not match " + spec.field.to_string());
  }
  if (spec.mu != 2 && !spec.order_is_maximal) {
    throw Error(ErrorKind::HypothesisNotMet, "tables for " + spec.field.to_string() + " need the maximal order");
  }
  if (spec.defined_over_base && model.field() != spec.field) {
    throw Error(ErrorKind::HypothesisNotMet,
                "CM by " + spec.field.to_string() + " cannot be defined over " + model.field().to_string());
  }

  const long p = place.p();
  const long vp = place.e_abs();
  const JClass jc = classify_j(model.derived().j);
  auto allowed = spec.defined_over_base ? allowed_types_cm(p, vp, jc) : allowed_types_potential_cm(p, vp, jc);
  if (!allowed) {
    throw Error(ErrorKind::HypothesisNotMet, "no table row for p=" + std::to_string(p) + ", v(p)=" +
                                                 std::to_string(vp) + ", j " + std::string(to_string(jc)));
  }

  LocalData local = tate_algorithm(model, place, limits);
  ConformanceReport report(std::move(local));
  report.jclass = jc;
  report.allowed = *allowed;
  report.member = std::find(allowed->begin(), allowed->end(), report.local.kodaira) != allowed->end();

  using Kind = KodairaType::Kind;
  const Kind kind = report.local.kodaira.kind;
  if (jc == JClass::J1728 && p != 2) report.mod3 = report.local.v_delta_min % 3 == 0;
  if (jc == JClass::Zero && p != 3) report.mod2 = report.local.v_delta_min % 2 == 0;
  if (jc == JClass::J1728 && p == 2) report.excluded_types = kind != Kind::IV && kind != Kind::IVStar;
  if (jc == JClass::Zero && p == 3 && vp % 2 == 0) {
    report.excluded_types = kind != Kind::III && kind != Kind::IIIStar;
  }
  if (spec.defined_over_base) {
    const AbelianGroupDescriptor& phi = report.local.geometric_component_group;
    if (p != 2 && spec.mu == 2 && jc == JClass::Generic) {
      report.phi_trivial_or_klein = phi.factors.empty() || phi == AbelianGroupDescriptor{{2, 2}};
    }
    report.phi_killed_by_mu = phi.killed_by(spec.mu);
  }

  bool ok = report.member;
  for (const auto& check :
       {report.mod3, report.mod2, report.excluded_types, report.phi_trivial_or_klein, report.phi_killed_by_mu}) {
    if (check && !*check) ok = false;
  }
  report.verdict = ok ? Verdict::Pass : Verdict::Fail;
  return report;
}

}  // namespace cmred
