#include <doctest.h>

#include <cmath>
#include <vector>

#include "cmred/error.hpp"
#include "cmred/torsion.hpp"

using namespace cmred;

namespace {

std::vector<long> primes_up_to(long n) {
  std::vector<bool> comp(static_cast<std::size_t>(n) + 1, false);
  std::vector<long> out;
  for (long i = 2; i <= n; ++i) {
    if (comp[static_cast<std::size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j <= n; j += i) comp[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

// floor(log_p(p m / (p - 1))) in long double. Off an exact power of p the
// logarithm is at least ~1/(p m ln p) away from an integer, far above the
// nudge.
long gamma_float(long p, long m) {
  long double x = static_cast<long double>(p) * m / (p - 1);
  return static_cast<long>(std::floor(std::log(x) / std::log(static_cast<long double>(p)) + 1e-12L));
}

mpz_class ipow(long b, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(b), e);
  return r;
}

}  // namespace

TEST_CASE("gamma_p examples") {
  CHECK(gamma_p(2, 1) == 1);
  CHECK(gamma_p(3, 1) == 0);
  CHECK(gamma_p(2, 4) == 3);
  CHECK(gamma_p(7, 2) == 0);
  CHECK(gamma_p(11, 10) == 1);
  CHECK(gamma_p(3, 6) == 2);
}

TEST_CASE("gamma_p against floating logarithms, p m <= 10^5") {
  for (long p : primes_up_to(100000))
    for (long m = 1; p * m <= 100000; ++m) REQUIRE(gamma_p(p, m) == gamma_float(p, m));
}

TEST_CASE("gamma_p is monotone") {
  for (long p : {2L, 3L, 5L, 7L, 13L}) {
    long prev = gamma_p(p, 1);
    CHECK(prev >= 0);
    for (long m = 2; m < 3000; ++m) {
      long g = gamma_p(p, m);
      CHECK(g >= prev);
      prev = g;
    }
  }
  // huge m stays exact
  mpz_class m = ipow(2, 200);
  CHECK(gamma_p(2, m) == 201);
  CHECK(gamma_p(2, m - 1) == 200);
}

TEST_CASE("hasse_floor") {
  CHECK(hasse_floor(4) == 9);
  CHECK(hasse_floor(2) == 5);
  CHECK(hasse_floor(9) == 16);
  CHECK(hasse_floor(7) == 13);
  CHECK(hasse_floor(11) == 18);
  for (long q = 2; q < 5000; ++q) {
    mpz_class h = hasse_floor(q);
    CHECK(h >= q + 1);
    CHECK(h * h >= mpz_class(q - 1) * (q - 1));
    // (1 + sqrt q)^2 lies in [h, h + 1)
    long double s = 1.0L + std::sqrt(static_cast<long double>(q));
    CHECK(h.get_si() == static_cast<long>(std::floor(s * s)));
  }
}

TEST_CASE("torsion bounds") {
  TorsionBound b = torsion_bound({1, 2, 2, 1, 4});
  CHECK(b.bound == 256);
  CHECK(b.branches[0] == 256);
  CHECK(b.branches[1] == 20);
  CHECK(torsion_bound({1, 7, 7, 1, 2}).bound == 13);
  CHECK(torsion_bound({2, 11, 11, 1, 10}).bound == 146410);
  CHECK(bad_reduction_bound(1, 2, 1, 4) == 256);
  CHECK(bad_reduction_bound(1, 7, 1, 2) == 2);
  CHECK(bad_reduction_bound(2, 3, 1, 6) == 39366);
}

TEST_CASE("torsion bound against a direct evaluation") {
  for (long g = 1; g <= 3; ++g)
    for (long p : {2L, 3L, 5L, 7L})
      for (unsigned long f = 1; f <= 3; ++f)
        for (long e = 1; e <= 4; ++e)
          for (long mu : {2L, 4L, 6L, 8L, 10L, 12L}) {
            mpz_class q = ipow(p, f);
            mpz_class first = mu * ipow(p, static_cast<unsigned long>(2 * g * gamma_float(p, e * mu)));
            mpz_class h = hasse_floor(q);
            mpz_class hg;
            mpz_pow_ui(hg.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(g));
            mpz_class second = hg * ipow(p, static_cast<unsigned long>(2 * g * gamma_float(p, e)));
            TorsionBound b = torsion_bound({g, p, q, e, mu});
            CHECK(b.branches[0] == first);
            CHECK(b.branches[1] == second);
            CHECK(b.bound == (first > second ? first : second));
            CHECK(b.bound >= bad_reduction_bound(g, p, e, mu));
            CHECK(bad_reduction_bound(g, p, e, mu) == first);
          }
}

TEST_CASE("invalid torsion input") {
  for (TorsionInput in : {TorsionInput{0, 2, 2, 1, 2}, TorsionInput{1, 4, 4, 1, 2}, TorsionInput{1, 2, 6, 1, 2},
                          TorsionInput{1, 3, 3, 0, 2}, TorsionInput{1, 3, 3, 1, 1}, TorsionInput{1, 3, 1, 1, 2}}) {
    bool threw = false;
    try {
      torsion_bound(in);
    } catch (const Error& e) {
      threw = true;
      CHECK(e.kind() == ErrorKind::InvalidArgument);
    }
    CHECK(threw);
  }
}
