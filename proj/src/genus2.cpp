#include "cmred/genus2.hpp"

#include <algorithm>

#include "cmred/error.hpp"

namespace cmred {

namespace {

NUTypeInstance elem(std::string base) { return {std::move(base), std::nullopt, std::nullopt}; }

NUTypeInstance fam(std::string base, char var, long offset, long divisor) {
  return {std::move(base), ParamExpr{var, offset, divisor}, std::nullopt};
}

void require_mu(int mu) {
  if (!valid_quartic_mu(mu)) throw Error(ErrorKind::InvalidMu, "mu must be 2, 4, 6, 8, 10 or 12 (got " + std::to_string(mu) + ")");
}

const std::vector<NUTypeInstance>& families_iii() {
  static const std::vector<NUTypeInstance> kRows = {
      fam("III-III", 'd', 2, 4), fam("III-III*", 'd', 4, 4), fam("III*-III*", 'd', 6, 4), fam("2I_0*", 'r', 1, 2)};
  return kRows;
}

const std::vector<NUTypeInstance>& families_iv() {
  static const std::vector<NUTypeInstance> kRows = {
      fam("IV-IV", 'd', 2, 3),    fam("IV-IV*", 'd', 3, 3),    fam("IV*-IV*", 'd', 4, 3),
      fam("II-II", 'd', 2, 6),    fam("II-II*", 'd', 6, 6),    fam("II*-II*", 'd', 10, 6),
      fam("I_0*-II", 'd', 4, 6),  fam("I_0*-II*", 'd', 8, 6),  fam("2IV", 'r', 1, 3),
      fam("2IV*", 'r', 2, 3)};
  return kRows;
}

}  // namespace

bool valid_quartic_mu(int mu) { return mu == 2 || mu == 4 || mu == 6 || mu == 8 || mu == 10 || mu == 12; }

std::optional<long> ParamExpr::evaluate(long x) const {
  long num = x - offset;
  if (num < 0 || num % divisor != 0) return std::nullopt;
  return num / divisor;
}

std::string ParamExpr::to_string() const {
  std::string v(1, var);
  if (offset == 0 && divisor == 1) return v;
  return "(" + v + "-" + std::to_string(offset) + ")/" + std::to_string(divisor);
}

std::string NUTypeInstance::symbol() const {
  if (!param) return base;
  return base + "-" + (value ? std::to_string(*value) : param->to_string());
}

std::vector<NUTypeInstance> allowed_potentially_good(int mu) {
  require_mu(mu);
  std::vector<NUTypeInstance> out = {elem("I_0-0-0"), elem("I_0-0-0*")};
  switch (mu) {
    case 4:
      out.push_back(elem("VI"));
      break;
    case 6:
      out.insert(out.end(), {elem("III"), elem("IV")});
      break;
    case 8:
      out.insert(out.end(), {elem("VI"), elem("VII"), elem("VII*")});
      break;
    case 10:
      for (const char* base : {"IX-1", "IX-2", "IX-3", "IX-4", "VIII-1", "VIII-2", "VIII-3", "VIII-4"}) {
        out.push_back(elem(base));
      }
      break;
    case 12:
      out.insert(out.end(), {elem("III"), elem("IV"), elem("VI")});
      break;
    default:
      break;
  }
  return out;
}

std::vector<NUTypeInstance> allowed_potentially_good_restricted(int mu) {
  if (mu == 8) return {elem("I_0-0-0"), elem("I_0-0-0*"), elem("VI")};
  if (mu == 10) return {elem("I_0-0-0"), elem("I_0-0-0*")};
  throw Error(ErrorKind::InvalidMu, "the restricted tables cover mu = 8 and 10 only (got " + std::to_string(mu) + ")");
}

std::vector<NUTypeInstance> not_potentially_good_families(int mu) {
  require_mu(mu);
  std::vector<NUTypeInstance> out = {fam("I_0*-I_0*", 'd', 2, 2)};
  auto append = [&out](const std::vector<NUTypeInstance>& rows) { out.insert(out.end(), rows.begin(), rows.end()); };
  switch (mu) {
    case 4:
      append(families_iii());
      break;
    case 6:
      append(families_iv());
      break;
    case 8:
      append(families_iii());
      append({fam("2III", 'r', 1, 4), fam("2III*", 'r', 3, 4)});
      break;
    case 12:
      append(families_iii());
      append(families_iv());
      append({fam("2II", 'r', 1, 6), fam("2II*", 'r', 5, 6)});
      break;
    default:
      break;
  }
  return out;
}

std::vector<NUTypeInstance> allowed_not_potentially_good(const Genus2Context& ctx) {
  require_mu(ctx.spec.mu);
  if (ctx.potentially_good) {
    throw Error(ErrorKind::InvalidArgument, "context describes potentially good reduction");
  }
  if (!ctx.d && !ctx.r) throw Error(ErrorKind::MissingInvariant, "instantiation needs d or r");
  std::vector<NUTypeInstance> out;
  for (NUTypeInstance t : not_potentially_good_families(ctx.spec.mu)) {
    const std::optional<long>& x = t.param->var == 'd' ? ctx.d : ctx.r;
    if (!x) {
      out.push_back(t);
      continue;
    }
    if (auto value = t.param->evaluate(*x)) {
      t.value = value;
      out.push_back(t);
    }
  }
  return out;
}

std::vector<NUTypeInstance> allowed_types(const Genus2Context& ctx) {
  if (!ctx.potentially_good) return allowed_not_potentially_good(ctx);
  if (ctx.d || ctx.r) throw Error(ErrorKind::InvalidArgument, "d and r only apply without potentially good reduction");
  if (ctx.special_fiber_excluded_C0_C1 && (ctx.spec.mu == 8 || ctx.spec.mu == 10)) {
    return allowed_potentially_good_restricted(ctx.spec.mu);
  }
  return allowed_potentially_good(ctx.spec.mu);
}

std::vector<NUTypeInstance> excluded_cm_types() {
  return {elem("II"),
          elem("V"),
          elem("V*"),
          fam("I_0-I_0", 'd', 0, 1),
          fam("I_0-I_0*", 'd', 1, 2),
          fam("2I_0", 'r', 0, 1),
          fam("I_0-IV", 'd', 1, 3),
          fam("I_0-IV*", 'd', 2, 3),
          fam("I_0-III", 'd', 1, 4),
          fam("I_0-III*", 'd', 3, 4),
          fam("I_0*-III*", 'd', 5, 4),
          fam("I_0*-III", 'd', 3, 4),
          fam("2IV", 'r', 1, 3),
          fam("2IV*", 'r', 2, 3),
          fam("I_0-II", 'd', 1, 6),
          fam("I_0-II*", 'd', 5, 6),
          fam("I_0*-IV*", 'd', 7, 6),
          fam("I_0*-IV", 'd', 5, 6),
          fam("II*-IV", 'd', 7, 6),
          fam("II-IV", 'd', 3, 6),
          fam("II-IV*", 'd', 5, 6),
          fam("II*-IV*", 'd', 9, 6)};
}

bool is_excluded(const NUTypeInstance& t) {
  const auto excluded = excluded_cm_types();
  return std::any_of(excluded.begin(), excluded.end(), [&t](const NUTypeInstance& e) { return e.same_family(t); });
}

SingularityData degree_of_singularity(long v_J2, long v_J10, long extension_degree) {
  if (extension_degree < 1) {
    throw Error(ErrorKind::InvalidDegree, "extension degree must be positive (got " + std::to_string(extension_degree) + ")");
  }
  SingularityData s{v_J2, v_J10, extension_degree, mpq_class(v_J10 - 5 * v_J2, 12), 0, false};
  s.d_L.canonicalize();
  s.d = s.d_L * extension_degree;
  s.admissible = s.d.get_den() == 1 && s.d > 0;
  return s;
}

std::string to_string(ConstraintVerdict v) {
  return v == ConstraintVerdict::VJ2MustBeOdd ? "v_L(J2) must be odd" : "no parity constraint";
}

std::vector<NUTypeInstance> j2_parity_exceptions() {
  return {fam("II-II", 'd', 2, 6), fam("II-II*", 'd', 6, 6), fam("II*-II*", 'd', 10, 6), fam("I_0*-II", 'd', 4, 6),
          fam("I_0*-II*", 'd', 8, 6)};
}

ConstraintVerdict j2_parity_constraint(int mu, long extension_degree, const std::vector<NUTypeInstance>& types) {
  require_mu(mu);
  if (extension_degree != 6 && extension_degree != 12) {
    throw Error(ErrorKind::InvalidDegree, "parity constraint needs degree 6 or 12 (got " + std::to_string(extension_degree) + ")");
  }
  const auto exceptions = j2_parity_exceptions();
  bool all_exempt = std::all_of(types.begin(), types.end(), [&](const NUTypeInstance& t) {
    return std::any_of(exceptions.begin(), exceptions.end(), [&t](const NUTypeInstance& e) { return e.same_family(t); });
  });
  return all_exempt && !types.empty() ? ConstraintVerdict::NoConstraint : ConstraintVerdict::VJ2MustBeOdd;
}

bool semistability_degree_check(int mu, long degree) {
  if (degree < 1) throw Error(ErrorKind::InvalidDegree, "degree must be positive (got " + std::to_string(degree) + ")");
  return mu % degree == 0 && degree <= 10;
}

}  // namespace cmred
