#include "cmred/tate.hpp"

#include <array>

#include "cmred/error.hpp"

namespace cmred {

namespace {

// Residue-field helpers bound to one place, in the vocabulary of the
// classical formulation of the algorithm.
class Local {
 public:
  explicit Local(const LocalPlace& place) : place_(place), k_(place.residue_field()) {}

  long p() const { return place_.p(); }
  long v(const FieldElement& x) const { return valuation(place_, x); }
  bool divides(const FieldElement& x) const { return x.is_zero() || v(x) > 0; }
  ResidueElement red(const FieldElement& x) const { return reduce(place_, x); }
  FieldElement lift(const ResidueElement& x) const { return cmred::lift(place_, x); }
  FieldElement preduce(const FieldElement& x) const { return lift(red(x)); }
  FieldElement pinv(const FieldElement& x) const { return lift(k_.inv(red(x))); }

  // Inverse of Frobenius; the residue field is perfect.
  FieldElement proot(const FieldElement& x) const {
    auto q = static_cast<std::uint64_t>(k_.cardinality());
    return lift(k_.pow(red(x), q / static_cast<std::uint64_t>(p())));
  }

  // Does a T^2 + b T + c have a root in the residue field?
  bool quadroots(const FieldElement& a, const FieldElement& b, const FieldElement& c) const {
    std::array<ResidueElement, 3> coeffs{red(c), red(b), red(a)};
    if (k_.is_zero(coeffs[2])) return !k_.is_zero(coeffs[1]) || k_.is_zero(coeffs[0]);
    return !residue_solve(k_, coeffs).roots.empty();
  }

  // Number of distinct residue-field roots of T^3 + b T^2 + c T + d.
  long cubicroots(const FieldElement& b, const FieldElement& c, const FieldElement& d) const {
    std::array<ResidueElement, 4> coeffs{red(d), red(c), red(b), k_.one()};
    return static_cast<long>(residue_solve(k_, coeffs).roots.size());
  }

 private:
  const LocalPlace& place_;
  const ResidueField& k_;
};

struct Coefficients {
  FieldElement a1, a2, a3, a4, a6, b2, b4, b6, b8;

  explicit Coefficients(const WeierstrassModel& m)
      : a1(m.a1()),
        a2(m.a2()),
        a3(m.a3()),
        a4(m.a4()),
        a6(m.a6()),
        b2(m.derived().b2),
        b4(m.derived().b4),
        b6(m.derived().b6),
        b8(m.derived().b8) {}
};

}  // namespace

LocalData tate_algorithm(const WeierstrassModel& input, const LocalPlace& place, const ResidueLimits& limits) {
  if (input.field() != place.field()) {
    throw Error(ErrorKind::InvalidArgument, "model over " + input.field().to_string() + " but place of " +
                                                place.field().to_string());
  }
  if (!limits.admits(place)) {
    throw Error(ErrorKind::UnsupportedPlace, "residue field at " + place.to_string() + " exceeds the configured bound");
  }

  const Local L(place);
  const long p = place.p();
  const FieldElement pi = place.uniformizer();
  const FieldElement pi2 = pi * pi;
  const FieldElement pi3 = pi2 * pi;

  auto [C, total] = integralize(input, place);
  bool scaled = !(total.u == FieldElement(1));
  auto change = [&](const FieldElement& r, const FieldElement& s, const FieldElement& t) {
    Transform step{1, r, s, t};
    C = apply_transform(C, step);
    total = total.compose(step);
  };

  for (;;) {
    Coefficients e(C);
    const DerivedQuantities& q = C.derived();
    const long vD = L.v(q.discriminant);

    auto finish = [&](KodairaType kodaira, long cp) {
      LocalData data{kodaira, vD, C, total, cp, geometric_component_group(kodaira), std::nullopt};
      if (!scaled) {
        // Input was integral and minimal: report it untouched.
        data.minimal_model = input;
        data.transform = Transform::identity();
      }
      if (p >= 5) data.conductor_exponent = vD - (kodaira.components() - 1);
      return data;
    };

    if (vD == 0) return finish(KodairaType::I(0), 1);
    const bool multiplicative = !L.divides(q.c4);

    // Move the singular point to (0, 0).
    FieldElement r, t;
    if (p == 2) {
      if (L.divides(e.b2)) {
        r = L.proot(e.a4);
        t = L.proot(((r + e.a2) * r + e.a4) * r + e.a6);
      } else {
        FieldElement inv = L.pinv(e.a1);
        r = inv * e.a3;
        t = inv * (e.a4 + r * r);
      }
    } else if (p == 3) {
      r = L.divides(e.b2) ? L.proot(-e.b6) : -L.pinv(e.b2) * e.b4;
      t = e.a1 * r + e.a3;
    } else {
      r = !multiplicative ? -L.pinv(12) * e.b2 : -L.pinv(12 * q.c4) * (q.c6 + e.b2 * q.c4);
      t = -L.pinv(2) * (e.a1 * r + e.a3);
    }
    change(L.preduce(r), 0, L.preduce(t));
    e = Coefficients(C);

    if (multiplicative) {
      // Multiplicative; split iff the tangents at (0, 0) are rational.
      long cp = L.quadroots(1, e.a1, -e.a2) ? vD : (vD % 2 == 0 ? 2 : 1);
      return finish(KodairaType::I(static_cast<int>(vD)), cp);
    }

    if (L.v(e.a6) < 2) return finish(KodairaType::II(), 1);
    if (L.v(e.b8) < 3) return finish(KodairaType::III(), 2);
    if (L.v(e.b6) < 3) return finish(KodairaType::IV(), L.quadroots(1, e.a3 / pi, -e.a6 / pi2) ? 3 : 1);

    // Now arrange p | a1, a2; p^2 | a3, a4; p^3 | a6.
    FieldElement s;
    if (p == 2) {
      s = L.proot(e.a2);
      t = pi * L.proot(e.a6 / pi2);
    } else if (p == 3) {
      s = e.a1;
      t = e.a3;
    } else {
      s = -e.a1 / 2;
      t = -e.a3 / 2;
    }
    change(0, s, t);
    e = Coefficients(C);

    // Roots of T^3 + b T^2 + c T + d mod p.
    const FieldElement b = e.a2 / pi;
    const FieldElement c = e.a4 / pi2;
    const FieldElement d = e.a6 / pi3;
    const FieldElement w = 27 * d * d - b * b * c * c + 4 * b * b * b * d - 18 * b * c * d + 4 * c * c * c;
    const FieldElement x = 3 * c - b * b;
    const int roots_shape = !L.divides(w) ? 1 : (!L.divides(x) ? 2 : 3);

    if (roots_shape == 1) return finish(KodairaType::IStar(0), 1 + L.cubicroots(b, c, d));

    if (roots_shape == 2) {
      // Move the double root to T = 0.
      if (p == 2) {
        r = L.proot(c);
      } else if (p == 3) {
        r = c * L.pinv(b);
      } else {
        r = (b * c - 9 * d) * L.pinv(2 * x);
      }
      change(pi * L.preduce(r), 0, 0);
      e = Coefficients(C);

      long ix = 3;
      long iy = 3;
      FieldElement mx = pi2;
      FieldElement my = pi2;
      long cp = 0;
      while (cp == 0) {
        FieldElement a2t = e.a2 / pi;
        FieldElement a3t = e.a3 / my;
        FieldElement a4t = e.a4 / (pi * mx);
        FieldElement a6t = e.a6 / (mx * my);
        if (!L.divides(a3t * a3t + 4 * a6t)) {
          cp = L.quadroots(1, a3t, -a6t) ? 4 : 2;
          break;
        }
        t = p == 2 ? my * L.proot(a6t) : my * L.preduce(-a3t / 2);
        change(0, 0, t);
        e = Coefficients(C);
        my *= pi;
        ++iy;
        a2t = e.a2 / pi;
        a3t = e.a3 / my;
        a4t = e.a4 / (pi * mx);
        a6t = e.a6 / (mx * my);
        if (!L.divides(a4t * a4t - 4 * a6t * a2t)) {
          cp = L.quadroots(a2t, a4t, a6t) ? 4 : 2;
          break;
        }
        r = p == 2 ? mx * L.proot(a6t * L.pinv(a2t)) : mx * L.preduce(-a4t * L.pinv(2 * a2t));
        change(r, 0, 0);
        e = Coefficients(C);
        mx *= pi;
        ++ix;
      }
      return finish(KodairaType::IStar(static_cast<int>(ix + iy - 5)), cp);
    }

    // Triple root: move it to T = 0.
    if (p == 2) {
      r = b;
    } else if (p == 3) {
      r = L.proot(-d);
    } else {
      r = -b * L.pinv(3);
    }
    change(pi * L.preduce(r), 0, 0);
    e = Coefficients(C);

    const FieldElement pi4 = pi2 * pi2;
    const FieldElement x3t = e.a3 / pi2;
    const FieldElement x6t = e.a6 / pi4;
    if (!L.divides(x3t * x3t + 4 * x6t)) {
      return finish(KodairaType::IVStar(), L.quadroots(1, x3t, -x6t) ? 3 : 1);
    }
    t = p == 2 ? pi2 * L.proot(x6t) : pi2 * L.preduce(-x3t / 2);
    change(0, 0, t);
    e = Coefficients(C);

    if (L.v(e.a4) < 4) return finish(KodairaType::IIIStar(), 2);
    if (L.v(e.a6) < 6) return finish(KodairaType::IIStar(), 1);

    // Not minimal: divide out by pi and start again.
    Transform scale{pi, 0, 0, 0};
    C = apply_transform(C, scale);
    total = total.compose(scale);
    scaled = true;
  }
}

Integralized minimal_model(const WeierstrassModel& model, const LocalPlace& place, const ResidueLimits& limits) {
  LocalData data = tate_algorithm(model, place, limits);
  return {data.minimal_model, data.transform};
}

}  // namespace cmred
