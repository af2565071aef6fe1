#pragma once

#include <climits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "cmred/number_field.hpp"
#include "cmred/residue.hpp"

namespace cmred {

inline constexpr long kInfiniteValuation = LONG_MAX;

enum class Splitting { Rational, Split, Inert, Ramified };

std::string_view to_string(Splitting s);

/// A prime P of the base field above the rational prime p, with its
/// completion data. Built only by factor_prime.
///
/// Split places are ordered by the residue of sqrt(D): index 0 has
/// sqrt(D) = r with r < p - r. Over p = 2 both residues are 1, so there index 0
/// is the place where w = 0.
class LocalPlace {
 public:
  const QuadraticField& field() const { return field_; }
  long p() const { return p_; }
  Splitting splitting() const { return splitting_; }
  int index() const { return index_; }
  int e_abs() const { return e_abs_; }
  int f() const { return f_; }
  std::optional<long> sqrt_root() const { return sqrt_root_; }
  // w mod P for split and ramified places.
  long omega_residue() const { return omega_residue_; }
  const FieldElement& uniformizer() const { return uniformizer_; }
  const ResidueField& residue_field() const { return residue_field_; }

  // Image of w in Z_p modulo p^digits (split places only).
  mpz_class omega_root_lift(long digits) const;

  std::string to_string() const;

  friend bool operator==(const LocalPlace& x, const LocalPlace& y) {
    return x.field_ == y.field_ && x.p_ == y.p_ && x.index_ == y.index_;
  }

 private:
  friend std::vector<LocalPlace> factor_prime(const QuadraticField& field, long p);
  LocalPlace(QuadraticField field, long p, Splitting splitting, int index, long omega_residue,
             std::optional<long> sqrt_root);

  QuadraticField field_;
  long p_;
  Splitting splitting_;
  int index_;
  int e_abs_;
  int f_;
  long omega_residue_;
  std::optional<long> sqrt_root_;
  FieldElement uniformizer_;
  ResidueField residue_field_;
};

std::vector<LocalPlace> factor_prime(const QuadraticField& field, long p);
LocalPlace place_at(const QuadraticField& field, long p, int index = 0);

// kInfiniteValuation for zero.
long valuation(const LocalPlace& place, const FieldElement& x);

// Throws NegativeValuation when v(x) < 0.
ResidueElement reduce(const LocalPlace& place, const FieldElement& x);
FieldElement lift(const LocalPlace& place, const ResidueElement& r);

/// Largest residue fields the reduction algorithm will enumerate. When
/// max_cardinality is set it replaces both per-degree caps by a cap on q.
struct ResidueLimits {
  long max_p_degree1 = 1'000'000;
  long max_p_degree2 = 10'000;
  std::optional<mpz_class> max_cardinality;

  bool admits(const LocalPlace& place) const;
};

}  // namespace cmred
