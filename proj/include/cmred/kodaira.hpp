#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace cmred {

struct KodairaType {
  enum class Kind { I, II, III, IV, IStar, IIStar, IIIStar, IVStar };

  Kind kind = Kind::I;
  int n = 0;  // only for I_n and I_n*

  static KodairaType I(int n) { return {Kind::I, n}; }
  static KodairaType IStar(int n) { return {Kind::IStar, n}; }
  static KodairaType II() { return {Kind::II, 0}; }
  static KodairaType III() { return {Kind::III, 0}; }
  static KodairaType IV() { return {Kind::IV, 0}; }
  static KodairaType IVStar() { return {Kind::IVStar, 0}; }
  static KodairaType IIIStar() { return {Kind::IIIStar, 0}; }
  static KodairaType IIStar() { return {Kind::IIStar, 0}; }

  // Canonical ASCII: "I0", "I3", "I0*", "I4*", "II", ..., "II*". Throws ParseError.
  static KodairaType parse(std::string_view symbol);
  std::string to_string() const;

  // Number of irreducible components of the special fibre of the minimal
  // regular model (I0 counts one).
  int components() const;
  bool good() const { return kind == Kind::I && n == 0; }
  bool multiplicative() const { return kind == Kind::I && n > 0; }

  auto operator<=>(const KodairaType&) const = default;
};

/// Finite abelian group as its invariant factors d1 | d2 | ... (each >= 2).
struct AbelianGroupDescriptor {
  std::vector<long> factors;

  static AbelianGroupDescriptor trivial() { return {}; }
  static AbelianGroupDescriptor cyclic(long n);
  // Normalizes an arbitrary list of cyclic orders into invariant factors.
  static AbelianGroupDescriptor from_cyclic_orders(std::vector<long> orders);

  long order() const;
  long exponent() const;
  bool killed_by(long m) const { return m % exponent() == 0; }
  std::string to_string() const;

  auto operator<=>(const AbelianGroupDescriptor&) const = default;
};

AbelianGroupDescriptor geometric_component_group(const KodairaType& k);

}  // namespace cmred
