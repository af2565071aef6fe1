#pragma once

#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmred {

/// Namikawa-Ueno / Liu reduction types for genus 2 as canonical ASCII.
///
/// Grammar: elliptic components "I_0", "I_0*", "II", "II*", "III", "III*",
/// "IV", "IV*" joined by "-"; a leading "2" marks a doubled component
/// ("2I_0*", "2IV"); elementary types are "I_0-0-0", "I_0-0-0*", "III", "VI",
/// "VIII-2", ... A parametric family appends "-" and its parameter, either
/// the expression "(d-2)/2" / "d" / "r", or its value once instantiated.

struct QuarticCMSpec {
  int mu = 2;
  std::string label;
};

bool valid_quartic_mu(int mu);

// (var - offset) / divisor
struct ParamExpr {
  char var = 'd';  // 'd' or 'r'
  long offset = 0;
  long divisor = 1;

  // Value at x when it is a nonnegative integer.
  std::optional<long> evaluate(long x) const;
  std::string to_string() const;

  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
};

struct NUTypeInstance {
  std::string base;
  std::optional<ParamExpr> param;
  std::optional<long> value;

  // Same family: same base and parameter expression.
  bool same_family(const NUTypeInstance& other) const { return base == other.base && param == other.param; }
  bool instantiated() const { return value.has_value(); }
  std::string symbol() const;

  friend bool operator==(const NUTypeInstance&, const NUTypeInstance&) = default;
};

struct Genus2Context {
  QuarticCMSpec spec;
  bool potentially_good = true;
  bool special_fiber_excluded_C0_C1 = false;
  std::optional<long> d;
  std::optional<long> r;
  std::optional<bool> v_J2_odd;
};

// Throw InvalidMu outside {2, 4, 6, 8, 10, 12}.
std::vector<NUTypeInstance> allowed_potentially_good(int mu);
// Only mu = 8 or 10; the stable fibre is neither y^2 = x^5 - 1 nor y^2 = x^5 - x.
std::vector<NUTypeInstance> allowed_potentially_good_restricted(int mu);
// Uninstantiated families of the mu row.
std::vector<NUTypeInstance> not_potentially_good_families(int mu);
// Families instantiated at ctx.d / ctx.r, keeping nonnegative integer
// parameters; a family whose variable is absent stays uninstantiated.
// Throws MissingInvariant when neither d nor r is given.
std::vector<NUTypeInstance> allowed_not_potentially_good(const Genus2Context& ctx);

// Dispatches on ctx.potentially_good and the C0/C1 hypothesis.
std::vector<NUTypeInstance> allowed_types(const Genus2Context& ctx);

std::vector<NUTypeInstance> excluded_cm_types();
bool is_excluded(const NUTypeInstance& t);

struct SingularityData {
  long v_J2 = 0;
  long v_J10 = 0;
  long extension_degree = 1;
  mpq_class d_L;
  mpq_class d;
  bool admissible = false;  // d is a positive integer
};

// Throws InvalidDegree for extension_degree < 1.
SingularityData degree_of_singularity(long v_J2, long v_J10, long extension_degree);

enum class ConstraintVerdict { VJ2MustBeOdd, NoConstraint };

std::string to_string(ConstraintVerdict v);

// Throws InvalidDegree unless extension_degree is 6 or 12.
ConstraintVerdict j2_parity_constraint(int mu, long extension_degree, const std::vector<NUTypeInstance>& types);

// The five families exempt from the parity constraint.
std::vector<NUTypeInstance> j2_parity_exceptions();

bool semistability_degree_check(int mu, long degree);

}  // namespace cmred
