#pragma once

#include <optional>

#include "cmred/kodaira.hpp"
#include "cmred/localfield.hpp"
#include "cmred/weierstrass.hpp"

namespace cmred {

struct LocalData {
  KodairaType kodaira;
  long v_delta_min = 0;
  WeierstrassModel minimal_model;
  Transform transform;  // input model -> minimal model
  long local_component_order = 1;
  AbelianGroupDescriptor geometric_component_group;
  // Ogg: v(D_min) - (components - 1); reported for residue characteristic >= 5 only.
  std::optional<long> conductor_exponent;
};

// Tate's algorithm at a place of the base field. Accepts non-integral and
// non-minimal models. Throws UnsupportedPlace when the residue field exceeds
// `limits`.
LocalData tate_algorithm(const WeierstrassModel& model, const LocalPlace& place, const ResidueLimits& limits = {});

Integralized minimal_model(const WeierstrassModel& model, const LocalPlace& place, const ResidueLimits& limits = {});

}  // namespace cmred
