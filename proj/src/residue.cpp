#include "cmred/residue.hpp"

#include "cmred/error.hpp"

namespace cmred {

namespace {

__extension__ typedef __int128 i128;

std::int64_t mod(i128 a, long p) {
  auto r = static_cast<std::int64_t>(a % p);
  return r < 0 ? r + p : r;
}

using Poly = std::vector<ResidueElement>;

void trim(const ResidueField& k, Poly& f) {
  while (!f.empty() && k.is_zero(f.back())) f.pop_back();
}

// Remainder of f modulo g (g monic or not, nonzero).
Poly poly_rem(const ResidueField& k, Poly f, const Poly& g) {
  ResidueElement lead_inv = k.inv(g.back());
  trim(k, f);
  while (f.size() >= g.size()) {
    ResidueElement q = k.mul(f.back(), lead_inv);
    std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] = k.sub(f[shift + i], k.mul(q, g[i]));
    trim(k, f);
  }
  return f;
}

Poly poly_gcd(const ResidueField& k, Poly f, Poly g) {
  trim(k, f);
  trim(k, g);
  while (!g.empty()) {
    Poly r = poly_rem(k, f, g);
    f = std::move(g);
    g = std::move(r);
  }
  return f;
}

// Divides f by (x - r) in place; returns the remainder.
ResidueElement synthetic_division(const ResidueField& k, Poly& f, const ResidueElement& r) {
  ResidueElement carry = k.zero();
  for (std::size_t i = f.size(); i-- > 0;) {
    ResidueElement next = k.add(f[i], k.mul(carry, r));
    f[i] = carry;
    carry = next;
  }
  f.pop_back();
  return carry;
}

}  // namespace

ResidueField ResidueField::prime(long p) {
  ResidueField k;
  k.p_ = p;
  return k;
}

ResidueField ResidueField::quadratic(long p, long m1, long m0) {
  ResidueField k;
  k.p_ = p;
  k.degree_ = 2;
  k.m1_ = mod(m1, p);
  k.m0_ = mod(m0, p);
  for (long x = 0; x < p; ++x) {
    if (mod(static_cast<i128>(x) * x + static_cast<i128>(k.m1_) * x + k.m0_, p) == 0)
      throw Error(ErrorKind::InvalidArgument, "t^2 + m1 t + m0 has a root mod " + std::to_string(p));
  }
  return k;
}

ResidueElement ResidueField::generator() const {
  if (degree_ == 1) throw Error(ErrorKind::InvalidArgument, "prime field has no quadratic generator");
  return {0, 1};
}

ResidueElement ResidueField::from_integer(const mpz_class& n) const {
  mpz_class r;
  mpz_class p(p_);
  mpz_mod(r.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return {r.get_si(), 0};
}

ResidueElement ResidueField::from_integer(long n) const { return {mod(n, p_), 0}; }

ResidueElement ResidueField::element(std::int64_t index) const {
  if (degree_ == 1) return {index, 0};
  return {index % p_, index / p_};
}

ResidueElement ResidueField::add(const ResidueElement& x, const ResidueElement& y) const {
  return {mod(static_cast<i128>(x.c0) + y.c0, p_), mod(static_cast<i128>(x.c1) + y.c1, p_)};
}

ResidueElement ResidueField::sub(const ResidueElement& x, const ResidueElement& y) const {
  return {mod(static_cast<i128>(x.c0) - y.c0, p_), mod(static_cast<i128>(x.c1) - y.c1, p_)};
}

ResidueElement ResidueField::neg(const ResidueElement& x) const { return sub(zero(), x); }

ResidueElement ResidueField::mul(const ResidueElement& x, const ResidueElement& y) const {
  i128 c0 = static_cast<i128>(x.c0) * y.c0;
  if (degree_ == 1) return {mod(c0, p_), 0};
  i128 c1 = static_cast<i128>(x.c0) * y.c1 + static_cast<i128>(x.c1) * y.c0;
  std::int64_t c2 = mod(static_cast<i128>(x.c1) * y.c1, p_);
  // t^2 = -m1 t - m0
  c0 -= static_cast<i128>(c2) * m0_;
  c1 -= static_cast<i128>(c2) * m1_;
  return {mod(c0, p_), mod(c1, p_)};
}

ResidueElement ResidueField::inv(const ResidueElement& x) const {
  if (is_zero(x)) throw Error(ErrorKind::InvalidArgument, "inverse of zero in residue field");
  auto scalar_inv = [this](std::int64_t a) {
    mpz_class r;
    mpz_class aa(static_cast<long>(a)), p(p_);
    mpz_invert(r.get_mpz_t(), aa.get_mpz_t(), p.get_mpz_t());
    return static_cast<std::int64_t>(r.get_si());
  };
  if (degree_ == 1) return {scalar_inv(x.c0), 0};
  // conj(t) = -m1 - t; N(x) = x0^2 - m1 x0 x1 + m0 x1^2
  ResidueElement conj{mod(static_cast<i128>(x.c0) - static_cast<i128>(m1_) * x.c1, p_), mod(-x.c1, p_)};
  i128 n = static_cast<i128>(x.c0) * x.c0 - mod(static_cast<i128>(m1_) * x.c0, p_) * static_cast<i128>(x.c1) +
               mod(static_cast<i128>(m0_) * x.c1, p_) * static_cast<i128>(x.c1);
  std::int64_t ninv = scalar_inv(mod(n, p_));
  return mul(conj, {ninv, 0});
}

ResidueElement ResidueField::pow(ResidueElement x, std::uint64_t e) const {
  ResidueElement r = one();
  while (e > 0) {
    if (e & 1U) r = mul(r, x);
    x = mul(x, x);
    e >>= 1U;
  }
  return r;
}

std::string ResidueField::to_string(const ResidueElement& x) const {
  if (degree_ == 1 || x.c1 == 0) return std::to_string(x.c0);
  std::string s = x.c1 == 1 ? "t" : std::to_string(x.c1) + "*t";
  return x.c0 == 0 ? s : std::to_string(x.c0) + "+" + s;
}

RootReport residue_solve(const ResidueField& k, std::span<const ResidueElement> coeffs) {
  Poly f(coeffs.begin(), coeffs.end());
  trim(k, f);
  if (f.empty()) throw Error(ErrorKind::ZeroPolynomial, "every coefficient reduces to zero");

  RootReport report;
  if (f.size() == 1) return report;

  Poly derivative;
  for (std::size_t i = 1; i < f.size(); ++i) {
    derivative.push_back(k.mul(k.from_integer(static_cast<long>(i)), f[i]));
  }
  Poly g = poly_gcd(k, f, derivative);
  report.distinct = g.size() == 1;

  for (std::int64_t i = 0; i < k.cardinality(); ++i) {
    ResidueElement r = k.element(i);
    ResidueElement value = k.zero();
    for (std::size_t j = f.size(); j-- > 0;) value = k.add(k.mul(value, r), f[j]);
    if (!k.is_zero(value)) continue;
    Poly q = f;
    int multiplicity = 0;
    while (q.size() > 1) {
      Poly trial = q;
      if (!k.is_zero(synthetic_division(k, trial, r))) break;
      q = std::move(trial);
      ++multiplicity;
    }
    if (multiplicity > 0) report.roots.push_back({r, multiplicity});
  }
  return report;
}

}  // namespace cmred
