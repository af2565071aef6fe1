#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmred/kodaira.hpp"
#include "cmred/localfield.hpp"
#include "cmred/tate.hpp"
#include "cmred/weierstrass.hpp"

namespace cmred {

enum class JClass { Zero, J1728, Generic };

std::string_view to_string(JClass jc);
JClass classify_j(const FieldElement& j);

// Number of roots of unity in an imaginary quadratic field. Throws
// NotImaginary for Q and real fields.
int mu_of_imaginary_quadratic(const QuadraticField& field);

/// Caller-asserted CM data for an elliptic curve. Use make_cm_spec to get a
/// consistent mu.
struct CMSpec {
  QuadraticField field;
  int mu = 2;
  bool order_is_maximal = true;
  bool defined_over_base = false;  // CM over the base field (vs potential CM)
};

CMSpec make_cm_spec(const QuadraticField& field, bool defined_over_base, bool order_is_maximal = true);

// Reduction types permitted for CM defined over the base field, in table
// order; nullopt when no row covers (p, v(p), j).
std::optional<std::vector<KodairaType>> allowed_types_cm(long p, long vp, JClass jc);

// Same for potential CM.
std::optional<std::vector<KodairaType>> allowed_types_potential_cm(long p, long vp, JClass jc);

enum class Verdict { Pass, Fail, NotCovered };

std::string_view to_string(Verdict v);

struct ConformanceReport {
  explicit ConformanceReport(LocalData data) : local(std::move(data)) {}

  LocalData local;
  JClass jclass = JClass::Generic;
  std::vector<KodairaType> allowed;
  bool member = false;
  // 3 | v(D_min) for j = 1728, p != 2; 2 | v(D_min) for j = 0, p != 3.
  std::optional<bool> mod3;
  std::optional<bool> mod2;
  // No IV / IV* at p = 2 with j = 1728; no III / III* at p = 3, j = 0, v(3) even.
  std::optional<bool> excluded_types;
  // Component group is 0 or Z/2 x Z/2 (p != 2, mu = 2, CM over the base, generic j).
  std::optional<bool> phi_trivial_or_klein;
  // Component group killed by mu (CM over the base).
  std::optional<bool> phi_killed_by_mu;
  Verdict verdict = Verdict::Pass;
};

// Throws HypothesisNotMet when the tables do not cover the place, when CM over
// the base is asserted but the base is not the CM field, or when Q(i) or
// Q(sqrt(-3)) comes without a maximal order.
ConformanceReport check_curve(const WeierstrassModel& model, const LocalPlace& place, const CMSpec& spec,
                              const ResidueLimits& limits = {});

}  // namespace cmred
