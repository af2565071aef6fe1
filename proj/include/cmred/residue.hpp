#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cmred {

/// c0 + c1 t in F_p[t]/(m(t)); prime fields only use c0.
struct ResidueElement {
  std::int64_t c0 = 0;
  std::int64_t c1 = 0;

  auto operator<=>(const ResidueElement&) const = default;
};

/// F_p, or F_{p^2} presented as F_p[t]/(t^2 + m1 t + m0) with the quadratic
/// irreducible mod p.
class ResidueField {
 public:
  static ResidueField prime(long p);
  static ResidueField quadratic(long p, long m1, long m0);

  long characteristic() const { return p_; }
  int degree() const { return degree_; }
  std::int64_t cardinality() const { return degree_ == 1 ? p_ : p_ * p_; }

  ResidueElement zero() const { return {}; }
  ResidueElement one() const { return {1, 0}; }
  ResidueElement generator() const;
  ResidueElement from_integer(const mpz_class& n) const;
  ResidueElement from_integer(long n) const;

  // Elements in a fixed order, index in [0, cardinality()).
  ResidueElement element(std::int64_t index) const;

  bool is_zero(const ResidueElement& x) const { return x.c0 == 0 && x.c1 == 0; }
  ResidueElement add(const ResidueElement& x, const ResidueElement& y) const;
  ResidueElement sub(const ResidueElement& x, const ResidueElement& y) const;
  ResidueElement neg(const ResidueElement& x) const;
  ResidueElement mul(const ResidueElement& x, const ResidueElement& y) const;
  ResidueElement inv(const ResidueElement& x) const;
  ResidueElement pow(ResidueElement x, std::uint64_t e) const;

  std::string to_string(const ResidueElement& x) const;

 private:
  long p_ = 2;
  int degree_ = 1;
  long m1_ = 0;
  long m0_ = 0;
};

struct ResidueRoot {
  ResidueElement value;
  int multiplicity = 1;
};

struct RootReport {
  std::vector<ResidueRoot> roots;  // roots lying in the field
  bool distinct = true;            // no repeated root over the algebraic closure
};

// Roots of sum coeffs[i] x^i. Throws ZeroPolynomial when every coefficient
// vanishes.
RootReport residue_solve(const ResidueField& k, std::span<const ResidueElement> coeffs);

}  // namespace cmred
