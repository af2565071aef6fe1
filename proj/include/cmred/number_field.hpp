#pragma once

#include <compare>
#include <string>

#include <gmpxx.h>

namespace cmred {

/// The base field: either Q or Q(sqrt(D)) with D squarefree, D != 0, 1.
///
/// Q is stored with D = 1 so that the arithmetic below needs no special case;
/// `is_rational()` is the tag that distinguishes it.
class QuadraticField {
 public:
  QuadraticField() = default;
  explicit QuadraticField(long d);

  static QuadraticField rational() { return QuadraticField(); }

  bool is_rational() const { return d_ == 1; }
  bool is_imaginary() const { return d_ < 0; }
  long d() const { return d_; }

  // D if D = 1 (mod 4), else 4D. Q reports 1.
  long discriminant() const;

  // Integral basis {1, w} of the ring of integers: w = (1 + sqrt(D))/2 when
  // D = 1 (mod 4), else w = sqrt(D). Its minimal polynomial is
  // x^2 + omega_linear() x + omega_constant().
  bool omega_is_half_integral() const;
  long omega_linear() const;
  long omega_constant() const;

  std::string to_string() const;

  auto operator<=>(const QuadraticField&) const = default;

 private:
  long d_ = 1;
};

/// An element (a + b sqrt(D)) / c of a QuadraticField, kept in lowest terms:
/// c > 0 and gcd(a, b, c) = 1. Elements of Q have b = 0.
///
/// Binary operations accept one operand from Q and the other from Q(sqrt(D));
/// the result lives in Q(sqrt(D)). Mixing two different quadratic fields
/// throws.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(long n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  FieldElement(const mpz_class& n) : a_(n) {}  // NOLINT(google-explicit-constructor)
  explicit FieldElement(const mpq_class& q);
  FieldElement(const QuadraticField& field, mpz_class a, mpz_class b = 0, mpz_class c = 1);

  // The generator w of the ring of integers (see QuadraticField).
  static FieldElement omega(const QuadraticField& field);
  static FieldElement sqrt_d(const QuadraticField& field);

  const QuadraticField& field() const { return field_; }
  const mpz_class& a() const { return a_; }
  const mpz_class& b() const { return b_; }
  const mpz_class& c() const { return c_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  // Same value, re-tagged as an element of `field` (which must contain it).
  FieldElement in_field(const QuadraticField& field) const;

  FieldElement conjugate() const;
  mpq_class norm() const;
  mpq_class trace() const;
  FieldElement inverse() const;
  FieldElement pow(long e) const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement& operator*=(const FieldElement& rhs);
  FieldElement& operator/=(const FieldElement& rhs);

  friend FieldElement operator+(FieldElement lhs, const FieldElement& rhs) { return lhs += rhs; }
  friend FieldElement operator-(FieldElement lhs, const FieldElement& rhs) { return lhs -= rhs; }
  friend FieldElement operator*(FieldElement lhs, const FieldElement& rhs) { return lhs *= rhs; }
  friend FieldElement operator/(FieldElement lhs, const FieldElement& rhs) { return lhs /= rhs; }

  // Value equality; an element with b = 0 equals the same rational in any field.
  friend bool operator==(const FieldElement& x, const FieldElement& y);

  std::string to_string() const;

 private:
  void normalize();
  static QuadraticField common_field(const FieldElement& x, const FieldElement& y);

  QuadraticField field_;
  mpz_class a_ = 0;
  mpz_class b_ = 0;
  mpz_class c_ = 1;
};

/// Coordinates of x in the integral basis: x = (alpha + beta w) / delta with
/// delta > 0 and gcd(alpha, beta, delta) = 1.
struct BasisCoordinates {
  mpz_class alpha;
  mpz_class beta;
  mpz_class delta;
};

BasisCoordinates to_basis(const FieldElement& x);

// p-adic valuation of a nonzero integer.
long vp(const mpz_class& n, long p);

}  // namespace cmred
