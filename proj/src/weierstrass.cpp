#include "cmred/weierstrass.hpp"

#include <algorithm>

#include "cmred/error.hpp"

namespace cmred {

DerivedQuantities derived_unchecked(const std::array<FieldElement, 5>& a) {
  const auto& [a1, a2, a3, a4, a6] = a;
  DerivedQuantities d;
  d.b2 = a1 * a1 + 4 * a2;
  d.b4 = a1 * a3 + 2 * a4;
  d.b6 = a3 * a3 + 4 * a6;
  d.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  d.c4 = d.b2 * d.b2 - 24 * d.b4;
  d.c6 = -d.b2 * d.b2 * d.b2 + 36 * d.b2 * d.b4 - 216 * d.b6;
  d.discriminant = -d.b2 * d.b2 * d.b8 - 8 * d.b4 * d.b4 * d.b4 - 27 * d.b6 * d.b6 + 9 * d.b2 * d.b4 * d.b6;
  if (!d.discriminant.is_zero()) d.j = d.c4.pow(3) / d.discriminant;
  return d;
}

WeierstrassModel::WeierstrassModel(const QuadraticField& field, const std::array<FieldElement, 5>& ainvs)
    : field_(field) {
  for (std::size_t i = 0; i < 5; ++i) a_[i] = ainvs[i].in_field(field);
  derived_ = derived_unchecked(a_);
  if (derived_.discriminant.is_zero()) throw Error(ErrorKind::SingularModel, to_string() + " is singular");
}

std::string WeierstrassModel::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < 5; ++i) {
    if (i > 0) s += ",";
    s += a_[i].to_string();
  }
  return s + "]";
}

Transform Transform::compose(const Transform& then) const {
  return {u * then.u, r + u * u * then.r, s + u * then.s, t + u * u * s * then.r + u * u * u * then.t};
}

Transform Transform::inverse() const {
  if (u.is_zero()) throw Error(ErrorKind::ZeroScale, "transform with u = 0 has no inverse");
  FieldElement ui = u.inverse();
  return {ui, -r * ui * ui, -s * ui, (r * s - t) * ui * ui * ui};
}

WeierstrassModel apply_transform(const WeierstrassModel& model, const Transform& tr) {
  if (tr.u.is_zero()) throw Error(ErrorKind::ZeroScale, "transform with u = 0");
  const auto& [a1, a2, a3, a4, a6] = model.ainvs();
  const FieldElement& r = tr.r;
  const FieldElement& s = tr.s;
  const FieldElement& t = tr.t;
  FieldElement ui = tr.u.inverse();
  FieldElement ui2 = ui * ui;
  FieldElement ui3 = ui2 * ui;
  return WeierstrassModel(
      model.field(),
      {(a1 + 2 * s) * ui, (a2 - s * a1 + 3 * r - s * s) * ui2, (a3 + r * a1 + 2 * t) * ui3,
       (a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t) * ui2 * ui2,
       (a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1) * ui3 * ui3});
}

Integralized integralize(const WeierstrassModel& model, const LocalPlace& place) {
  static constexpr long kWeights[5] = {1, 2, 3, 4, 6};
  long k = 0;
  for (std::size_t i = 0; i < 5; ++i) {
    long v = valuation(place, model.ainvs()[i]);
    if (v == kInfiniteValuation || v >= 0) continue;
    k = std::max(k, (-v + kWeights[i] - 1) / kWeights[i]);
  }
  if (k == 0) return {model, Transform::identity()};
  Transform tr;
  tr.u = place.uniformizer().in_field(model.field()).pow(-k);
  return {apply_transform(model, tr), tr};
}

WeierstrassModel quadratic_twist(const WeierstrassModel& model, const FieldElement& d) {
  if (d.is_zero()) throw Error(ErrorKind::ZeroTwist, "twist by zero");
  FieldElement a2 = model.a2();
  FieldElement a4 = model.a4();
  FieldElement a6 = model.a6();
  if (!model.a1().is_zero() || !model.a3().is_zero()) {
    const DerivedQuantities& q = model.derived();
    a2 = q.b2 / 4;
    a4 = q.b4 / 2;
    a6 = q.b6 / 4;
  }
  return WeierstrassModel(model.field(), {0, d * a2, 0, d * d * a4, d * d * d * a6});
}

}  // namespace cmred
