#include <doctest.h>

#include <algorithm>
#include <vector>

#include "cmred/error.hpp"
#include "cmred/localfield.hpp"
#include "cmred/residue.hpp"
#include "support.hpp"

using namespace cmred;
using namespace cmred::testing;

// ============================================================
// Field arithmetic
// ============================================================

TEST_CASE("field elements normalize and compare by value") {
  QuadraticField k = QD(-7);
  FieldElement x(k, 2, 4, 4);
  CHECK(x.a() == 1);
  CHECK(x.b() == 2);
  CHECK(x.c() == 2);
  CHECK(FieldElement(k, 6, 0, 3) == FieldElement(2));
  CHECK(FieldElement(k, -3, 0, -6) == FieldElement(mpq_class(1, 2)));
  CHECK_THROWS_AS(QuadraticField(4), Error);
  CHECK_THROWS_AS(QuadraticField(0), Error);
}

TEST_CASE("omega, norm and trace") {
  QuadraticField k = QD(-7);
  FieldElement w = FieldElement::omega(k);
  // w^2 - w + 2 = 0
  CHECK((w * w - w + FieldElement(2)).is_zero());
  CHECK(w.norm() == 2);
  CHECK(w.trace() == 1);
  CHECK(k.discriminant() == -7);
  CHECK(QD(-1).discriminant() == -4);
  CHECK(QD(-1).to_string() == "Q(i)");
  CHECK(QD(-7).to_string() == "Q(sqrt(-7))");
  CHECK(Q().to_string() == "Q");
}

TEST_CASE("field axioms on random elements") {
  Gen g(11);
  for (long d : {-1L, -3L, -7L, 5L, 2L}) {
    QuadraticField k = QD(d);
    for (int i = 0; i < 200; ++i) {
      FieldElement x = g.small(k), y = g.small(k), z = g.nonzero(k);
      CHECK((x + y) * z == x * z + y * z);
      CHECK((x * y).norm() == x.norm() * y.norm());
      CHECK(z * z.inverse() == FieldElement(1));
      CHECK((x / z) * z == x);
      CHECK(x.conjugate().conjugate() == x);
    }
  }
}

TEST_CASE("basis coordinates") {
  QuadraticField k = QD(-7);
  BasisCoordinates b = to_basis(integral(k, 3, -5) / FieldElement(4));
  CHECK(b.alpha == 3);
  CHECK(b.beta == -5);
  CHECK(b.delta == 4);
  BasisCoordinates c = to_basis(FieldElement(k, 1, 1, 2));
  CHECK(c.alpha == 0);
  CHECK(c.beta == 1);
  CHECK(c.delta == 1);
}

// ============================================================
// Places
// ============================================================

TEST_CASE("factor_prime splitting types") {
  auto split = factor_prime(QD(-7), 2);
  REQUIRE(split.size() == 2);
  for (auto& pl : split) {
    CHECK(pl.splitting() == Splitting::Split);
    CHECK(pl.e_abs() == 1);
    CHECK(pl.f() == 1);
  }

  auto ram = factor_prime(QD(-1), 2);
  REQUIRE(ram.size() == 1);
  CHECK(ram[0].splitting() == Splitting::Ramified);
  CHECK(ram[0].e_abs() == 2);
  CHECK(ram[0].f() == 1);

  auto inert = factor_prime(QD(-11), 2);
  REQUIRE(inert.size() == 1);
  CHECK(inert[0].splitting() == Splitting::Inert);
  CHECK(inert[0].f() == 2);
  CHECK(inert[0].residue_field().cardinality() == 4);

  auto rat = factor_prime(Q(), 7);
  REQUIRE(rat.size() == 1);
  CHECK(rat[0].splitting() == Splitting::Rational);

  CHECK(factor_prime(QD(-3), 3)[0].splitting() == Splitting::Ramified);
  CHECK(factor_prime(QD(5), 5)[0].splitting() == Splitting::Ramified);
  CHECK(factor_prime(QD(5), 2)[0].splitting() == Splitting::Inert);
  CHECK(factor_prime(QD(2), 7).size() == 2);
  CHECK_THROWS_AS(factor_prime(Q(), 9), Error);
  CHECK_THROWS_AS(place_at(QD(-7), 2, 2), Error);
}

TEST_CASE("split place ordering") {
  // Over 2 the place (a), a = (1 + sqrt(-7))/2, comes first.
  QuadraticField k = QD(-7);
  FieldElement a = FieldElement::omega(k);
  CHECK(valuation(place_at(k, 2, 0), a) == 1);
  CHECK(valuation(place_at(k, 2, 1), a) == 0);
  CHECK(valuation(place_at(k, 2, 0), FieldElement(2)) == 1);
  CHECK(valuation(place_at(k, 2, 1), FieldElement(2)) == 1);

  // Odd p: sqrt(D) = r mod P with r < p - r first.
  for (long d : {-1L, 2L, -7L, -11L, 5L}) {
    QuadraticField kd = QD(d);
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 29L}) {
      auto pls = factor_prime(kd, p);
      if (pls.size() != 2) continue;
      long r = *pls[0].sqrt_root();
      CHECK(r < p - r);
      CHECK(*pls[1].sqrt_root() == p - r);
      CHECK(valuation(pls[0], FieldElement::sqrt_d(kd) - FieldElement(r)) >= 1);
    }
  }
}

TEST_CASE("valuation basics") {
  CHECK(valuation(place_at(Q(), 7), FieldElement(98)) == 2);
  CHECK(valuation(place_at(Q(), 7), FieldElement(mpq_class(3, 49))) == -2);
  CHECK(valuation(place_at(Q(), 7), FieldElement(0)) == kInfiniteValuation);
  // Ramified: v(2) = 2 in Q(i).
  CHECK(valuation(place_at(QD(-1), 2), FieldElement(2)) == 2);
  CHECK(valuation(place_at(QD(-1), 2), integral(QD(-1), 1, 1)) == 1);
  // Inert.
  CHECK(valuation(place_at(QD(-11), 2), FieldElement(12)) == 2);
  for (auto& pl : places_over({1, -1, -3, -7, -11, 5, 2}, {2, 3, 5, 7}))
    CHECK(valuation(pl, pl.uniformizer()) == 1);
}

namespace {

// Brute-force oracle for a split place with e = f = 1: O/P^k is Z/p^k with w
// sent to the unique root s_k of the minimal polynomial lifting w mod P.
long split_valuation_oracle(const LocalPlace& pl, const FieldElement& x) {
  const QuadraticField& k = pl.field();
  BasisCoordinates b = to_basis(x);
  long p = pl.p();
  long shift = vp(b.delta, p);
  long v = 0;
  long pk = 1;
  for (long n = 1; n <= 8; ++n) {
    pk *= p;
    long s = -1;
    for (long c = pl.omega_residue(); c < pk; c += p) {
      mpz_class g = mpz_class(c) * c + k.omega_linear() * c + k.omega_constant();
      if (g % pk == 0) {
        s = c;
        break;
      }
    }
    REQUIRE(s >= 0);
    mpz_class y = b.alpha + b.beta * s;
    if (y % pk != 0) break;
    v = n;
  }
  return v - shift;
}

}  // namespace

TEST_CASE("split valuation against brute-force ideal membership") {
  Gen g(7);
  for (auto& pl : places_over({-7, -1, 2, -2, 17, -23, 5}, {2, 3, 5, 7, 11})) {
    if (pl.splitting() != Splitting::Split) continue;
    for (int i = 0; i < 60; ++i) {
      FieldElement x = g.nonzero(pl.field(), 40) * power(pl.uniformizer(), g.range(0, 3));
      if (g.coin(0.2)) x /= FieldElement(pl.p());
      long v = valuation(pl, x);
      if (v > 6) continue;  // oracle depth
      CHECK(v == split_valuation_oracle(pl, x));
    }
  }
}

TEST_CASE("valuation is multiplicative and ultrametric") {
  Gen g(3);
  for (auto& pl : places_over({1, -1, -3, -7, -11, -15, 2, 5, 13}, {2, 3, 5, 7, 13})) {
    for (int i = 0; i < 40; ++i) {
      FieldElement x = g.nonzero(pl.field(), 30) * power(pl.uniformizer(), g.range(0, 3));
      FieldElement y = g.nonzero(pl.field(), 30) / power(pl.uniformizer(), g.range(0, 2));
      long vx = valuation(pl, x), vy = valuation(pl, y);
      CHECK(valuation(pl, x * y) == vx + vy);
      FieldElement s = x + y;
      if (s.is_zero()) continue;
      long vs = valuation(pl, s);
      CHECK(vs >= std::min(vx, vy));
      if (vx != vy) CHECK(vs == std::min(vx, vy));
    }
  }
}

TEST_CASE("valuations above p sum to the valuation of the norm") {
  Gen g(5);
  for (long d : {-7L, -1L, 2L, -2L, 17L, -23L, -3L, -11L, 5L}) {
    QuadraticField k = QD(d);
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
      auto pls = factor_prime(k, p);
      for (int i = 0; i < 30; ++i) {
        FieldElement x = g.nonzero(k, 50) * FieldElement(g.range(1, 30));
        mpq_class n = x.norm();
        long vn = vp(n.get_num(), p) - vp(n.get_den(), p);
        long sum = 0;
        for (auto& pl : pls) sum += valuation(pl, x) * pl.f();
        CHECK(sum == vn);
      }
    }
  }
}

// ============================================================
// Reduction and lifting
// ============================================================

TEST_CASE("reduce and lift") {
  Gen g(9);
  for (auto& pl : places_over({1, -1, -3, -7, -11, 2, 5}, {2, 3, 5, 7})) {
    const ResidueField& k = pl.residue_field();
    for (std::int64_t i = 0; i < k.cardinality(); ++i) {
      ResidueElement r = k.element(i);
      CHECK(reduce(pl, lift(pl, r)) == r);
    }
    for (int i = 0; i < 50; ++i) {
      FieldElement x = g.small(pl.field(), 25), y = g.small(pl.field(), 25);
      if (g.coin(0.3)) {
        FieldElement den = g.nonzero(pl.field(), 9);
        if (valuation(pl, den) == 0) x /= den;
      }
      CHECK(reduce(pl, x * y) == k.mul(reduce(pl, x), reduce(pl, y)));
      CHECK(reduce(pl, x + y) == k.add(reduce(pl, x), reduce(pl, y)));
    }
    CHECK(k.is_zero(reduce(pl, pl.uniformizer())));
    CHECK_THROWS_AS(reduce(pl, pl.uniformizer().inverse()), Error);
  }
}

TEST_CASE("reduce raises NegativeValuation") {
  try {
    reduce(place_at(Q(), 5), FieldElement(mpq_class(1, 5)));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NegativeValuation);
  }
}

TEST_CASE("residue limits") {
  ResidueLimits lim;
  CHECK(lim.admits(place_at(Q(), 999983)));
  CHECK(lim.admits(place_at(QD(-1), 9967)));   // inert, q = 9967^2
  CHECK_FALSE(lim.admits(place_at(QD(-1), 10007)));
  lim.max_cardinality = mpz_class(50);
  CHECK(lim.admits(place_at(QD(-11), 7)));     // q = 49
  CHECK_FALSE(lim.admits(place_at(Q(), 53)));
}

// ============================================================
// Residue fields
// ============================================================

namespace {

std::vector<ResidueElement> poly_mul(const ResidueField& k, const std::vector<ResidueElement>& f,
                                     const std::vector<ResidueElement>& g) {
  std::vector<ResidueElement> h(f.size() + g.size() - 1, k.zero());
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = 0; j < g.size(); ++j) h[i + j] = k.add(h[i + j], k.mul(f[i], g[j]));
  return h;
}

std::vector<std::int64_t> root_indices(const ResidueField& k, const RootReport& rep) {
  std::vector<std::int64_t> out;
  for (auto& r : rep.roots)
    for (std::int64_t i = 0; i < k.cardinality(); ++i)
      if (k.element(i) == r.value) out.push_back(i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("residue_solve examples") {
  ResidueField f7 = ResidueField::prime(7);
  std::vector<ResidueElement> c = {f7.from_integer(-2), f7.zero(), f7.one()};
  RootReport rep = residue_solve(f7, c);
  REQUIRE(rep.roots.size() == 2);
  std::vector<long> roots;
  for (auto& r : rep.roots) roots.push_back(static_cast<long>(r.value.c0));
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<long>{3, 4});
  CHECK(rep.distinct);

  ResidueField f2 = ResidueField::prime(2);
  std::vector<ResidueElement> irr = {f2.one(), f2.one(), f2.one()};
  CHECK(residue_solve(f2, irr).roots.empty());
  CHECK(residue_solve(f2, irr).distinct);

  ResidueField f4 = ResidueField::quadratic(2, 1, 1);
  RootReport r4 = residue_solve(f4, irr);
  REQUIRE(r4.roots.size() == 2);
  for (auto& r : r4.roots) CHECK(r.value.c1 != 0);

  std::vector<ResidueElement> zero = {f7.zero(), f7.zero()};
  try {
    residue_solve(f7, zero);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroPolynomial);
  }
}

TEST_CASE("residue_solve recovers planted roots and multiplicities") {
  Gen g(21);
  struct Spec {
    ResidueField k;
    std::vector<ResidueElement> irreducible;  // monic quadratic without roots, or empty
  };
  std::vector<Spec> specs;
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    ResidueField k = ResidueField::prime(p);
    // x^2 - n for a non-residue n (x^2 + x + 1 over F_2)
    long n = 2;
    while (p > 2) {
      bool square = false;
      for (long x = 0; x < p; ++x) square |= (x * x) % p == n % p;
      if (!square) break;
      ++n;
    }
    std::vector<ResidueElement> q = p == 2 ? std::vector<ResidueElement>{k.one(), k.one(), k.one()}
                                           : std::vector<ResidueElement>{k.from_integer(-n), k.zero(), k.one()};
    specs.push_back({k, q});
  }
  specs.push_back({ResidueField::quadratic(2, 1, 1), {}});
  specs.push_back({ResidueField::quadratic(3, 0, 1), {}});
  specs.push_back({ResidueField::quadratic(5, 0, 2), {}});

  for (auto& s : specs) {
    const ResidueField& k = s.k;
    for (int trial = 0; trial < 80; ++trial) {
      std::vector<ResidueElement> f = {k.element(g.range(1, k.cardinality() - 1))};
      std::vector<std::int64_t> planted;
      std::vector<int> mult;
      int nroots = static_cast<int>(g.range(0, 3));
      for (int i = 0; i < nroots; ++i) {
        std::int64_t idx = g.range(0, k.cardinality() - 1);
        if (std::find(planted.begin(), planted.end(), idx) != planted.end()) continue;
        int m = static_cast<int>(g.range(1, 3));
        planted.push_back(idx);
        mult.push_back(m);
        for (int j = 0; j < m; ++j) f = poly_mul(k, f, {k.neg(k.element(idx)), k.one()});
      }
      bool with_quad = !s.irreducible.empty() && g.coin();
      if (with_quad) f = poly_mul(k, f, s.irreducible);
      if (f.size() == 1) continue;

      RootReport rep = residue_solve(k, f);
      std::vector<std::int64_t> want = planted;
      std::sort(want.begin(), want.end());
      CHECK(root_indices(k, rep) == want);
      for (auto& r : rep.roots) {
        for (std::size_t i = 0; i < planted.size(); ++i)
          if (k.element(planted[i]) == r.value) CHECK(r.multiplicity == mult[i]);
      }
      bool distinct = std::all_of(mult.begin(), mult.end(), [](int m) { return m == 1; });
      CHECK(rep.distinct == distinct);
      int total = 0;
      for (auto& r : rep.roots) total += r.multiplicity;
      CHECK(total <= static_cast<int>(f.size()) - 1);
    }
  }
}

TEST_CASE("residue_solve flags a squared irreducible factor") {
  ResidueField f3 = ResidueField::prime(3);
  std::vector<ResidueElement> q = {f3.one(), f3.zero(), f3.one()};  // x^2 + 1
  std::vector<ResidueElement> sq = poly_mul(f3, q, q);
  RootReport rep = residue_solve(f3, sq);
  CHECK(rep.roots.empty());
  CHECK_FALSE(rep.distinct);
}

TEST_CASE("residue field arithmetic") {
  for (auto k : {ResidueField::prime(13), ResidueField::quadratic(3, 0, 1), ResidueField::quadratic(7, 0, 1),
                 ResidueField::quadratic(2, 1, 1)}) {
    std::int64_t q = k.cardinality();
    for (std::int64_t i = 0; i < q; ++i) {
      ResidueElement x = k.element(i);
      CHECK(k.pow(x, static_cast<std::uint64_t>(q)) == x);
      if (!k.is_zero(x)) CHECK(k.mul(x, k.inv(x)) == k.one());
      CHECK(k.add(x, k.neg(x)) == k.zero());
    }
  }
  CHECK_THROWS_AS(ResidueField::quadratic(3, 0, 2), Error);  // t^2 + 2 = (t-1)(t+1) mod 3
}
