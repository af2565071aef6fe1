#include "cmred/torsion.hpp"

#include <string>

#include "cmred/error.hpp"

namespace cmred {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class n(p);
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

mpz_class ipow(long base, long e) {
  mpz_class out;
  mpz_class b(base);
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(e));
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::InvalidArgument, what);
}

}  // namespace

void validate(const TorsionInput& in) {
  require(in.g >= 1, "g must be positive");
  require(is_prime(in.p), "p must be prime");
  require(in.e >= 1, "e must be positive");
  require(in.mu >= 2, "mu must be at least 2");
  mpz_class q = in.q;
  require(q >= in.p, "q must be a positive power of p");
  mpz_class prime(in.p);
  while (q % prime == 0) q /= prime;
  require(q == 1, "q must be a power of p");
}

long gamma_p(long p, const mpz_class& m) {
  require(is_prime(p), "p must be prime");
  require(m >= 1, "m must be positive");
  const mpz_class limit = p * m;
  mpz_class lhs = p - 1;  // p^k (p - 1)
  long k = 0;
  while (lhs * p <= limit) {
    lhs *= p;
    ++k;
  }
  return k;
}

mpz_class hasse_floor(const mpz_class& q) {
  require(q >= 2, "q must be at least 2");
  mpz_class four_q = 4 * q;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), four_q.get_mpz_t());
  return q + 1 + root;
}

mpz_class bad_reduction_bound(long g, long p, long e, long mu) {
  require(g >= 1 && e >= 1 && mu >= 2, "g, e must be positive and mu at least 2");
  return mu * ipow(p, 2 * g * gamma_p(p, mpz_class(e) * mu));
}

TorsionBound torsion_bound(const TorsionInput& in) {
  validate(in);
  TorsionBound out;
  out.branches[0] = bad_reduction_bound(in.g, in.p, in.e, in.mu);
  mpz_class h = hasse_floor(in.q);
  mpz_class hg;
  mpz_pow_ui(hg.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(in.g));
  out.branches[1] = hg * ipow(in.p, 2 * in.g * gamma_p(in.p, in.e));
  out.bound = out.branches[0] >= out.branches[1] ? out.branches[0] : out.branches[1];
  return out;
}

}  // namespace cmred
