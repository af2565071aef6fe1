#pragma once

#include <array>
#include <string>

#include "cmred/localfield.hpp"
#include "cmred/number_field.hpp"

namespace cmred {

struct DerivedQuantities {
  FieldElement b2, b4, b6, b8;
  FieldElement c4, c6;
  FieldElement discriminant;
  FieldElement j;
};

// Invariants straight from the coefficients; no nonsingularity check, so
// j is left at zero when the discriminant vanishes.
DerivedQuantities derived_unchecked(const std::array<FieldElement, 5>& a);

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 over a common field.
/// Construction rejects singular equations.
class WeierstrassModel {
 public:
  WeierstrassModel(const QuadraticField& field, const std::array<FieldElement, 5>& ainvs);

  const QuadraticField& field() const { return field_; }
  const std::array<FieldElement, 5>& ainvs() const { return a_; }
  const FieldElement& a1() const { return a_[0]; }
  const FieldElement& a2() const { return a_[1]; }
  const FieldElement& a3() const { return a_[2]; }
  const FieldElement& a4() const { return a_[3]; }
  const FieldElement& a6() const { return a_[4]; }

  const DerivedQuantities& derived() const { return derived_; }

  std::string to_string() const;

  friend bool operator==(const WeierstrassModel& x, const WeierstrassModel& y) {
    return x.field_ == y.field_ && x.a_ == y.a_;
  }

 private:
  QuadraticField field_;
  std::array<FieldElement, 5> a_;
  DerivedQuantities derived_;
};

inline const DerivedQuantities& derived(const WeierstrassModel& model) { return model.derived(); }

/// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t.
struct Transform {
  FieldElement u = 1;
  FieldElement r = 0;
  FieldElement s = 0;
  FieldElement t = 0;

  static Transform identity() { return {}; }

  // `then` applied after this one.
  Transform compose(const Transform& then) const;
  Transform inverse() const;

  friend bool operator==(const Transform&, const Transform&) = default;
};

// Throws ZeroScale when u = 0.
WeierstrassModel apply_transform(const WeierstrassModel& model, const Transform& t);

struct Integralized {
  WeierstrassModel model;
  Transform transform;
};

// Smallest scaling u = pi^-k making every a_i integral at the place.
Integralized integralize(const WeierstrassModel& model, const LocalPlace& place);

// Model of the twist by d, via y^2 = x^3 + (b2/4) x^2 + (b4/2) x + b6/4 when
// a1 or a3 is nonzero. Throws ZeroTwist for d = 0.
WeierstrassModel quadratic_twist(const WeierstrassModel& model, const FieldElement& d);

}  // namespace cmred
