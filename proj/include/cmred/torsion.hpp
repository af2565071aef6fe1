#pragma once

#include <array>

#include <gmpxx.h>

namespace cmred {

struct TorsionInput {
  long g = 1;      // dimension
  long p = 2;      // residue characteristic
  mpz_class q = 2; // residue field cardinality, a power of p
  long e = 1;      // absolute ramification index
  long mu = 2;     // roots of unity in the CM field
};

// Throws InvalidArgument on malformed input.
void validate(const TorsionInput& in);

// floor(log_p(p m / (p - 1))): the largest k with p^k (p - 1) <= p m.
long gamma_p(long p, const mpz_class& m);

// floor((1 + sqrt(q))^2) = q + 1 + floor(2 sqrt(q)).
mpz_class hasse_floor(const mpz_class& q);

struct TorsionBound {
  mpz_class bound;
  std::array<mpz_class, 2> branches;  // mu p^(2g gamma(e mu)), hasse^g p^(2g gamma(e))
};

TorsionBound torsion_bound(const TorsionInput& in);

// First branch alone, for varieties without good reduction.
mpz_class bad_reduction_bound(long g, long p, long e, long mu);

}  // namespace cmred
