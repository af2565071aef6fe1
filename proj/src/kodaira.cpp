#include "cmred/kodaira.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>

#include "cmred/error.hpp"

namespace cmred {

KodairaType KodairaType::parse(std::string_view symbol) {
  static const std::map<std::string_view, KodairaType> kNamed = {
      {"II", II()}, {"III", III()}, {"IV", IV()}, {"IV*", IVStar()}, {"III*", IIIStar()}, {"II*", IIStar()}};
  if (auto it = kNamed.find(symbol); it != kNamed.end()) return it->second;

  std::string_view rest = symbol;
  bool star = false;
  if (rest.size() >= 2 && rest.front() == 'I' && rest.back() == '*') {
    star = true;
    rest = rest.substr(1, rest.size() - 2);
  } else if (rest.size() >= 2 && rest.front() == 'I') {
    rest = rest.substr(1);
  } else {
    throw Error(ErrorKind::ParseError, "not a Kodaira symbol: '" + std::string(symbol) + "'");
  }
  int n = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), n);
  if (ec != std::errc() || ptr != rest.data() + rest.size() || n < 0 || (rest.size() > 1 && rest[0] == '0')) {
    throw Error(ErrorKind::ParseError, "not a Kodaira symbol: '" + std::string(symbol) + "'");
  }
  return star ? IStar(n) : I(n);
}

std::string KodairaType::to_string() const {
  switch (kind) {
    case Kind::I: return "I" + std::to_string(n);
    case Kind::IStar: return "I" + std::to_string(n) + "*";
    case Kind::II: return "II";
    case Kind::III: return "III";
    case Kind::IV: return "IV";
    case Kind::IVStar: return "IV*";
    case Kind::IIIStar: return "III*";
    case Kind::IIStar: return "II*";
  }
  return "?";
}

int KodairaType::components() const {
  switch (kind) {
    case Kind::I: return std::max(n, 1);
    case Kind::IStar: return n + 5;
    case Kind::II: return 1;
    case Kind::III: return 2;
    case Kind::IV: return 3;
    case Kind::IVStar: return 7;
    case Kind::IIIStar: return 8;
    case Kind::IIStar: return 9;
  }
  return 1;
}

AbelianGroupDescriptor AbelianGroupDescriptor::cyclic(long n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "cyclic group of order " + std::to_string(n));
  return from_cyclic_orders({n});
}

AbelianGroupDescriptor AbelianGroupDescriptor::from_cyclic_orders(std::vector<long> orders) {
  // Smith normal form of a diagonal matrix: repeatedly replace (x, y) by
  // (gcd, lcm) until the list is a divisibility chain.
  std::erase_if(orders, [](long d) { return d == 1; });
  for (long d : orders) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "cyclic factor " + std::to_string(d));
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      long g = std::gcd(orders[i], orders[j]);
      long l = orders[i] / g * orders[j];
      orders[i] = g;
      orders[j] = l;
    }
  }
  std::erase_if(orders, [](long d) { return d == 1; });
  return {orders};
}

long AbelianGroupDescriptor::order() const {
  return std::accumulate(factors.begin(), factors.end(), 1L, std::multiplies<>());
}

long AbelianGroupDescriptor::exponent() const { return factors.empty() ? 1 : factors.back(); }

std::string AbelianGroupDescriptor::to_string() const {
  if (factors.empty()) return "0";
  std::string s;
  for (long d : factors) {
    if (!s.empty()) s += " x ";
    s += "Z/" + std::to_string(d);
  }
  return s;
}

AbelianGroupDescriptor geometric_component_group(const KodairaType& k) {
  using Kind = KodairaType::Kind;
  switch (k.kind) {
    case Kind::I: return k.n <= 1 ? AbelianGroupDescriptor::trivial() : AbelianGroupDescriptor::cyclic(k.n);
    case Kind::IStar: return k.n % 2 == 0 ? AbelianGroupDescriptor{{2, 2}} : AbelianGroupDescriptor::cyclic(4);
    case Kind::II:
    case Kind::IIStar: return AbelianGroupDescriptor::trivial();
    case Kind::III:
    case Kind::IIIStar: return AbelianGroupDescriptor::cyclic(2);
    case Kind::IV:
    case Kind::IVStar: return AbelianGroupDescriptor::cyclic(3);
  }
  return {};
}

}  // namespace cmred
