#include "cmred/localfield.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "cmred/error.hpp"

namespace cmred {

// ---------------------------------------------------------------------------
// QuadraticField

namespace {

__extension__ typedef __int128 i128;

bool is_squarefree(long d) {
  unsigned long n = static_cast<unsigned long>(d < 0 ? -d : d);
  for (unsigned long q = 2; q * q <= n; ++q) {
    if (n % (q * q) == 0) return false;
    while (n % q == 0) n /= q;
  }
  return true;
}

long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

QuadraticField::QuadraticField(long d) : d_(d) {
  if (d == 0 || d == 1 || !is_squarefree(d)) {
    throw Error(ErrorKind::InvalidArgument,
                "quadratic field needs squarefree D != 0, 1 (got " + std::to_string(d) + ")");
  }
}

bool QuadraticField::omega_is_half_integral() const { return !is_rational() && mod_floor(d_, 4) == 1; }

long QuadraticField::discriminant() const {
  if (is_rational()) return 1;
  return omega_is_half_integral() ? d_ : 4 * d_;
}

long QuadraticField::omega_linear() const { return omega_is_half_integral() ? -1 : 0; }

long QuadraticField::omega_constant() const { return omega_is_half_integral() ? (1 - d_) / 4 : -d_; }

std::string QuadraticField::to_string() const {
  if (is_rational()) return "Q";
  if (d_ == -1) return "Q(i)";
  return "Q(sqrt(" + std::to_string(d_) + "))";
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(const mpq_class& q) : a_(q.get_num()), c_(q.get_den()) { normalize(); }

FieldElement::FieldElement(const QuadraticField& field, mpz_class a, mpz_class b, mpz_class c)
    : field_(field), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (c_ == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  if (field_.is_rational() && b_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "element of Q with a sqrt(D) part");
  }
  normalize();
}

FieldElement FieldElement::omega(const QuadraticField& field) {
  if (field.is_rational()) throw Error(ErrorKind::InvalidArgument, "Q has no quadratic generator");
  return field.omega_is_half_integral() ? FieldElement(field, 1, 1, 2) : FieldElement(field, 0, 1, 1);
}

FieldElement FieldElement::sqrt_d(const QuadraticField& field) {
  if (field.is_rational()) throw Error(ErrorKind::InvalidArgument, "Q has no quadratic generator");
  return FieldElement(field, 0, 1, 1);
}

void FieldElement::normalize() {
  if (c_ < 0) {
    a_ = -a_;
    b_ = -b_;
    c_ = -c_;
  }
  if (a_ == 0 && b_ == 0) {
    c_ = 1;
    return;
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a_.get_mpz_t(), b_.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c_.get_mpz_t());
  if (g != 1) {
    mpz_divexact(a_.get_mpz_t(), a_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(b_.get_mpz_t(), b_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(c_.get_mpz_t(), c_.get_mpz_t(), g.get_mpz_t());
  }
}

QuadraticField FieldElement::common_field(const FieldElement& x, const FieldElement& y) {
  if (x.field_ == y.field_) return x.field_;
  if (x.field_.is_rational()) return y.field_;
  if (y.field_.is_rational()) return x.field_;
  throw Error(ErrorKind::InvalidArgument,
              "mixing elements of " + x.field_.to_string() + " and " + y.field_.to_string());
}

FieldElement FieldElement::in_field(const QuadraticField& field) const {
  if (field == field_) return *this;
  if (!field_.is_rational() || (field.is_rational() && b_ != 0)) {
    throw Error(ErrorKind::InvalidArgument, "cannot move " + to_string() + " into " + field.to_string());
  }
  FieldElement out = *this;
  out.field_ = field;
  return out;
}

FieldElement FieldElement::conjugate() const {
  FieldElement out = *this;
  out.b_ = -b_;
  return out;
}

mpq_class FieldElement::norm() const {
  mpq_class n(a_ * a_ - field_.d() * b_ * b_, c_ * c_);
  n.canonicalize();
  return n;
}

mpq_class FieldElement::trace() const {
  mpq_class t(2 * a_, c_);
  t.canonicalize();
  return t;
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  // 1/x = c * conj(a + b sqrt D) / (a^2 - D b^2)
  mpz_class n = a_ * a_ - field_.d() * b_ * b_;
  return FieldElement(field_, c_ * a_, -c_ * b_, n);
}

FieldElement FieldElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  FieldElement result = FieldElement(1).in_field(field_);
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

FieldElement FieldElement::operator-() const {
  FieldElement out = *this;
  out.a_ = -a_;
  out.b_ = -b_;
  return out;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  field_ = common_field(*this, rhs);
  if (c_ == rhs.c_) {
    a_ += rhs.a_;
    b_ += rhs.b_;
  } else {
    a_ = a_ * rhs.c_ + rhs.a_ * c_;
    b_ = b_ * rhs.c_ + rhs.b_ * c_;
    c_ *= rhs.c_;
  }
  normalize();
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) { return *this += -rhs; }

FieldElement& FieldElement::operator*=(const FieldElement& rhs) {
  field_ = common_field(*this, rhs);
  mpz_class a = a_ * rhs.a_ + field_.d() * b_ * rhs.b_;
  mpz_class b = a_ * rhs.b_ + b_ * rhs.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  c_ *= rhs.c_;
  normalize();
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& rhs) { return *this *= rhs.inverse(); }

bool operator==(const FieldElement& x, const FieldElement& y) {
  if (x.a_ != y.a_ || x.b_ != y.b_ || x.c_ != y.c_) return false;
  return x.b_ == 0 || x.field_ == y.field_;
}

std::string FieldElement::to_string() const {
  std::string s;
  if (b_ == 0) {
    s = a_.get_str();
  } else {
    std::string root = field_.d() == -1 ? "i" : "sqrt(" + std::to_string(field_.d()) + ")";
    std::string coeff = b_ == 1 ? "" : b_ == -1 ? "-" : b_.get_str() + "*";
    if (a_ == 0) {
      s = coeff + root;
    } else {
      s = a_.get_str() + (b_ > 0 ? "+" : "") + coeff + root;
    }
    if (c_ != 1) s = "(" + s + ")";
  }
  if (c_ != 1) s += "/" + c_.get_str();
  return s;
}

BasisCoordinates to_basis(const FieldElement& x) {
  BasisCoordinates out{x.a(), x.b(), x.c()};
  if (x.field().omega_is_half_integral()) {
    // sqrt(D) = 2w - 1
    out.alpha = x.a() - x.b();
    out.beta = 2 * x.b();
  }
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), out.alpha.get_mpz_t(), out.beta.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.delta.get_mpz_t());
  if (g > 1) {
    out.alpha /= g;
    out.beta /= g;
    out.delta /= g;
  }
  return out;
}

long vp(const mpz_class& n, long p) {
  if (n == 0) return kInfiniteValuation;
  mpz_class rest;
  mpz_class prime(p);
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), prime.get_mpz_t()));
}

// ---------------------------------------------------------------------------
// Places

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

long powmod(long base, long e, long m) {
  mpz_class r;
  mpz_class b(base), ee(e), mm(m);
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), ee.get_mpz_t(), mm.get_mpz_t());
  return r.get_si();
}

long invmod(long a, long m) {
  mpz_class r;
  mpz_class aa(mod_floor(a, m)), mm(m);
  if (mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), mm.get_mpz_t()) == 0) {
    throw Error(ErrorKind::InvalidArgument, "not invertible mod " + std::to_string(m));
  }
  return r.get_si();
}

// Square root of a nonzero quadratic residue n modulo an odd prime p (Tonelli-Shanks).
long sqrt_mod(long n, long p) {
  n = mod_floor(n, p);
  long q = p - 1;
  long s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  long z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  i128 m = s;
  i128 c = powmod(z, q, p);
  i128 t = powmod(n, q, p);
  i128 r = powmod(n, (q + 1) / 2, p);
  while (t != 1) {
    long i = 0;
    i128 tt = t;
    while (tt != 1) {
      tt = tt * tt % p;
      ++i;
    }
    i128 b = c;
    for (long k = 0; k < m - i - 1; ++k) b = b * b % p;
    m = i;
    c = b * b % p;
    t = t * c % p;
    r = r * b % p;
  }
  return static_cast<long>(r);
}

// Value of the minimal polynomial of w at an integer.
mpz_class omega_poly(const QuadraticField& field, const mpz_class& x) {
  return x * x + field.omega_linear() * x + field.omega_constant();
}

}  // namespace

std::string_view to_string(Splitting s) {
  switch (s) {
    case Splitting::Rational: return "rational";
    case Splitting::Split: return "split";
    case Splitting::Inert: return "inert";
    case Splitting::Ramified: return "ramified";
  }
  return "?";
}

std::string LocalPlace::to_string() const {
  std::string s = field_.to_string() + " at p=" + std::to_string(p_) + " (" +
                  std::string(cmred::to_string(splitting_));
  if (splitting_ == Splitting::Split) s += ", index " + std::to_string(index_);
  return s + ")";
}

LocalPlace::LocalPlace(QuadraticField field, long p, Splitting splitting, int index, long omega_residue,
                       std::optional<long> sqrt_root)
    : field_(field),
      p_(p),
      splitting_(splitting),
      index_(index),
      e_abs_(splitting == Splitting::Ramified ? 2 : 1),
      f_(splitting == Splitting::Inert ? 2 : 1),
      omega_residue_(omega_residue),
      sqrt_root_(sqrt_root),
      uniformizer_(FieldElement(p).in_field(field)),
      residue_field_(ResidueField::prime(p)) {
  if (splitting == Splitting::Inert) {
    residue_field_ = ResidueField::quadratic(p, mod_floor(field.omega_linear(), p),
                                             mod_floor(field.omega_constant(), p));
  } else if (splitting == Splitting::Split || splitting == Splitting::Ramified) {
    // w - s has valuation v_p(g(s)) at this place (the conjugate place sees a
    // unit when split); move s by p once if that is not exactly 1.
    mpz_class s = omega_residue;
    if (vp(omega_poly(field, s), p) != 1) s += p;
    uniformizer_ = FieldElement::omega(field) - FieldElement(s);
  }
}

std::vector<LocalPlace> factor_prime(const QuadraticField& field, long p) {
  if (!is_prime(p)) throw Error(ErrorKind::InvalidArgument, std::to_string(p) + " is not prime");
  if (field.is_rational()) return {LocalPlace(field, p, Splitting::Rational, 0, 0, std::nullopt)};

  const long disc = field.discriminant();
  if (disc % p == 0) {
    // g(x) = (x - s)^2 mod p
    long s = 0;
    while (omega_poly(field, s) % p != 0) ++s;
    return {LocalPlace(field, p, Splitting::Ramified, 0, s, std::nullopt)};
  }

  if (p == 2) {
    if (mod_floor(field.d(), 8) == 5) return {LocalPlace(field, p, Splitting::Inert, 0, 0, std::nullopt)};
    // D = 1 (mod 8): g(x) = x^2 - x + (1-D)/4 has roots 0 and 1 mod 2.
    return {LocalPlace(field, p, Splitting::Split, 0, 0, 1), LocalPlace(field, p, Splitting::Split, 1, 1, 1)};
  }

  const long d = mod_floor(field.d(), p);
  if (powmod(d, (p - 1) / 2, p) != 1) return {LocalPlace(field, p, Splitting::Inert, 0, 0, std::nullopt)};

  long r = sqrt_mod(d, p);
  r = std::min(r, p - r);
  std::vector<LocalPlace> places;
  int index = 0;
  for (long root : {r, p - r}) {
    long s = field.omega_is_half_integral() ? mod_floor((1 + root) * invmod(2, p), p) : root;
    places.push_back(LocalPlace(field, p, Splitting::Split, index++, s, root));
  }
  return places;
}

LocalPlace place_at(const QuadraticField& field, long p, int index) {
  auto places = factor_prime(field, p);
  if (index < 0 || static_cast<std::size_t>(index) >= places.size()) {
    throw Error(ErrorKind::InvalidArgument, "place index " + std::to_string(index) + " out of range: " +
                                                std::to_string(places.size()) + " place(s) above " +
                                                std::to_string(p));
  }
  return places[static_cast<std::size_t>(index)];
}

bool ResidueLimits::admits(const LocalPlace& place) const {
  if (max_cardinality) {
    mpz_class q = place.p();
    if (place.f() == 2) q *= place.p();
    return q <= *max_cardinality;
  }
  return place.p() <= (place.f() == 1 ? max_p_degree1 : max_p_degree2);
}

mpz_class LocalPlace::omega_root_lift(long digits) const {
  // Newton iteration on g from the simple root s mod p.
  mpz_class modulus;
  mpz_class prime(p_);
  mpz_pow_ui(modulus.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(digits));
  mpz_class w = omega_residue_;
  for (long precision = 1; precision < digits; precision *= 2) {
    mpz_class g = omega_poly(field_, w);
    mpz_class dg = 2 * w + field_.omega_linear();
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), dg.get_mpz_t(), modulus.get_mpz_t());
    w = w - g * inv;
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), modulus.get_mpz_t());
  }
  mpz_mod(w.get_mpz_t(), w.get_mpz_t(), modulus.get_mpz_t());
  return w;
}

long valuation(const LocalPlace& place, const FieldElement& x) {
  if (x.is_zero()) return kInfiniteValuation;
  const long p = place.p();
  switch (place.splitting()) {
    case Splitting::Rational:
      return vp(x.a(), p) - vp(x.c(), p);
    case Splitting::Inert:
    case Splitting::Ramified: {
      mpq_class n = x.norm();
      long v = vp(n.get_num(), p) - vp(n.get_den(), p);
      return place.splitting() == Splitting::Inert ? v / 2 : v;
    }
    case Splitting::Split: {
      // v_P(y) + v_P'(y) = v_p(N(y)) for the integral numerator y, so
      // v_p(N(y)) + 1 digits of the embedding determine v_P(y) exactly.
      BasisCoordinates bc = to_basis(x);
      mpz_class norm = bc.alpha * bc.alpha - place.field().omega_linear() * bc.alpha * bc.beta +
                       place.field().omega_constant() * bc.beta * bc.beta;
      // N(alpha + beta w) = alpha^2 - tr(w) alpha beta + N(w) beta^2 with tr(w) = -g1.
      long digits = vp(norm, p) + 1;
      mpz_class modulus;
      mpz_class prime(p);
      mpz_pow_ui(modulus.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(digits));
      mpz_class image = bc.alpha + bc.beta * place.omega_root_lift(digits);
      mpz_mod(image.get_mpz_t(), image.get_mpz_t(), modulus.get_mpz_t());
      return vp(image, p) - vp(bc.delta, p);
    }
  }
  return 0;
}

ResidueElement reduce(const LocalPlace& place, const FieldElement& x) {
  const ResidueField& rf = place.residue_field();
  if (x.is_zero()) return rf.zero();
  long v = valuation(place, x);
  if (v < 0) {
    throw Error(ErrorKind::NegativeValuation,
                x.to_string() + " has valuation " + std::to_string(v) + " at " + place.to_string());
  }
  if (v > 0) return rf.zero();

  const long p = place.p();
  if (place.splitting() == Splitting::Rational) {
    return rf.mul(rf.from_integer(x.a()), rf.inv(rf.from_integer(x.c())));
  }

  BasisCoordinates bc = to_basis(x);
  switch (place.splitting()) {
    case Splitting::Split: {
      long k = vp(bc.delta, p);
      mpz_class prime(p);
      mpz_class pk;
      mpz_pow_ui(pk.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(k));
      mpz_class image = bc.alpha + bc.beta * place.omega_root_lift(k + 1);
      mpz_mod(image.get_mpz_t(), image.get_mpz_t(), mpz_class(pk * p).get_mpz_t());
      mpz_divexact(image.get_mpz_t(), image.get_mpz_t(), pk.get_mpz_t());
      mpz_class unit = bc.delta / pk;
      return rf.mul(rf.from_integer(image), rf.inv(rf.from_integer(unit)));
    }
    case Splitting::Ramified: {
      ResidueElement num = rf.add(rf.from_integer(bc.alpha),
                                  rf.mul(rf.from_integer(bc.beta), rf.from_integer(place.omega_residue())));
      return rf.mul(num, rf.inv(rf.from_integer(bc.delta)));
    }
    case Splitting::Inert: {
      ResidueElement num = rf.add(rf.from_integer(bc.alpha), rf.mul(rf.from_integer(bc.beta), rf.generator()));
      return rf.mul(num, rf.inv(rf.from_integer(bc.delta)));
    }
    case Splitting::Rational:
      break;
  }
  return rf.zero();
}

FieldElement lift(const LocalPlace& place, const ResidueElement& r) {
  FieldElement out = FieldElement(r.c0).in_field(place.field());
  if (r.c1 != 0) out += FieldElement(r.c1) * FieldElement::omega(place.field());
  return out;
}

}  // namespace cmred
