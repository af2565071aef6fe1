#pragma once

// Helpers shared by the unit tests and the acceptance binary: small field
// constructors and seeded generators for elements, models and transforms.

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cmred/localfield.hpp"
#include "cmred/number_field.hpp"
#include "cmred/weierstrass.hpp"

namespace cmred::testing {

inline QuadraticField Q() { return QuadraticField::rational(); }
inline QuadraticField QD(long d) { return QuadraticField(d); }

// x + y w in the ring of integers.
inline FieldElement integral(const QuadraticField& k, long x, long y) {
  if (k.is_rational()) return FieldElement(x);
  return FieldElement(x) + FieldElement(y) * FieldElement::omega(k);
}

inline WeierstrassModel model(const QuadraticField& k, std::array<FieldElement, 5> a) {
  for (auto& c : a) c = c.in_field(k);
  return WeierstrassModel(k, a);
}

inline WeierstrassModel rational_model(long a1, long a2, long a3, long a4, long a6) {
  return WeierstrassModel(Q(), {a1, a2, a3, a4, a6});
}

inline FieldElement power(const FieldElement& x, long k) {
  FieldElement r = 1;
  for (long i = 0; i < k; ++i) r *= x;
  return r;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  template <class T>
  const T& pick(const std::vector<T>& xs) {
    return xs[static_cast<std::size_t>(range(0, static_cast<long>(xs.size()) - 1))];
  }

  FieldElement small(const QuadraticField& k, long bound = 6) {
    long y = k.is_rational() ? 0 : range(-bound, bound);
    return integral(k, range(-bound, bound), y);
  }

  FieldElement nonzero(const QuadraticField& k, long bound = 6) {
    for (;;) {
      FieldElement x = small(k, bound);
      if (!x.is_zero()) return x;
    }
  }

  // Random integral element scaled by a random power of the uniformizer.
  FieldElement scaled(const LocalPlace& place, long max_k) {
    return small(place.field()) * power(place.uniformizer(), range(0, max_k));
  }

  // Integral, possibly far from minimal.
  WeierstrassModel integral_model(const LocalPlace& place, long max_k = 4) {
    for (;;) {
      std::array<FieldElement, 5> a;
      for (auto& c : a) c = scaled(place, max_k);
      try {
        return model(place.field(), a);
      } catch (const std::exception&) {
      }
    }
  }

  Transform transform(const QuadraticField& k, const LocalPlace* place = nullptr) {
    Transform t;
    FieldElement u = nonzero(k, 3);
    if (place && coin(0.5)) u *= place->uniformizer().pow(range(-2, 2));
    t.u = u;
    t.r = small(k, 4) / FieldElement(range(1, 3));
    t.s = small(k, 4);
    t.t = small(k, 4) / FieldElement(range(1, 2));
    return t;
  }

  // y^2 = x^3 + A x under a random coordinate change.
  WeierstrassModel j1728_model(const LocalPlace& place, bool disguise = true) {
    FieldElement a = nonzero(place.field()) * power(place.uniformizer(), range(0, 6));
    WeierstrassModel m = model(place.field(), {0, 0, 0, a, 0});
    return disguise && coin(0.7) ? apply_transform(m, transform(place.field())) : m;
  }

  // y^2 = x^3 + B under a random coordinate change.
  WeierstrassModel j0_model(const LocalPlace& place, bool disguise = true) {
    FieldElement b = nonzero(place.field()) * power(place.uniformizer(), range(0, 8));
    WeierstrassModel m = model(place.field(), {0, 0, 0, 0, b});
    return disguise && coin(0.7) ? apply_transform(m, transform(place.field())) : m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Every place above p for a handful of fields, for property sweeps.
inline std::vector<LocalPlace> places_over(const std::vector<long>& ds, const std::vector<long>& ps) {
  std::vector<LocalPlace> out;
  for (long d : ds) {
    QuadraticField k = d == 1 ? Q() : QD(d);
    for (long p : ps)
      for (auto& pl : factor_prime(k, p)) out.push_back(pl);
  }
  return out;
}

}  // namespace cmred::testing
