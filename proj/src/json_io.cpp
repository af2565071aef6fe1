#include "cmred/json_io.hpp"

#include <algorithm>
#include <vector>

#include "cmred/error.hpp"

namespace cmred {

namespace {

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

mpz_class parse_integer(const std::string& s, std::string_view what) {
  mpz_class n;
  std::string t = s;
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  if (t.empty() || n.set_str(t, 10) != 0) {
    throw Error(ErrorKind::ParseError, "bad integer '" + s + "' in " + std::string(what));
  }
  return n;
}

}  // namespace

json to_json(const mpz_class& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

mpz_class integer_from_json(const json& j, std::string_view what) {
  if (j.is_number_integer()) return mpz_class(j.get<long>());
  if (j.is_string()) return parse_integer(j.get<std::string>(), what);
  throw Error(ErrorKind::ParseError, std::string(what) + " must be an integer");
}

json to_json(const QuadraticField& field) {
  if (field.is_rational()) return {{"type", "Q"}};
  return {{"type", "quadratic"}, {"D", field.d()}};
}

QuadraticField field_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type")) throw Error(ErrorKind::ParseError, "field must be an object with a type");
  const std::string type = j.at("type").get<std::string>();
  if (type == "Q") {
    require_keys(j, {"type"}, "field");
    return QuadraticField::rational();
  }
  if (type == "quadratic") {
    require_keys(j, {"type", "D"}, "field");
    if (!j.contains("D")) throw Error(ErrorKind::ParseError, "quadratic field needs D");
    return QuadraticField(j.at("D").get<long>());
  }
  throw Error(ErrorKind::ParseError, "unknown field type '" + type + "'");
}

json to_json(const FieldElement& x) {
  json out = {{"a", to_json(x.a())}};
  if (x.b() != 0) out["b"] = to_json(x.b());
  if (x.c() != 1) out["c"] = to_json(x.c());
  return out;
}

FieldElement element_from_json(const json& j, const QuadraticField& field) {
  if (j.is_number_integer() || j.is_string()) return FieldElement(integer_from_json(j, "coefficient")).in_field(field);
  if (!j.is_object()) throw Error(ErrorKind::ParseError, "coefficient must be an object {a, b, c}");
  require_keys(j, {"a", "b", "c"}, "coefficient");
  mpz_class a = j.contains("a") ? integer_from_json(j.at("a"), "coefficient a") : mpz_class(0);
  mpz_class b = j.contains("b") ? integer_from_json(j.at("b"), "coefficient b") : mpz_class(0);
  mpz_class c = j.contains("c") ? integer_from_json(j.at("c"), "coefficient c") : mpz_class(1);
  if (b != 0 && field.is_rational()) throw Error(ErrorKind::ParseError, "coefficient b given over Q");
  if (c == 0) throw Error(ErrorKind::ParseError, "coefficient with c = 0");
  return FieldElement(field, a, b, c);
}

FieldElement parse_coefficient(std::string_view text, const QuadraticField& field) {
  auto parts = split(text, '/');
  switch (parts.size()) {
    case 1:
      return FieldElement(parse_integer(parts[0], "coefficient")).in_field(field);
    case 2: {
      mpz_class c = parse_integer(parts[1], "coefficient");
      if (c == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
      return FieldElement(field, parse_integer(parts[0], "coefficient"), 0, c);
    }
    case 3: {
      if (field.is_rational()) {
        throw Error(ErrorKind::ParseError, "a/b/c coefficient '" + std::string(text) + "' needs a quadratic field");
      }
      mpz_class c = parse_integer(parts[2], "coefficient");
      if (c == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
      return FieldElement(field, parse_integer(parts[0], "coefficient"), parse_integer(parts[1], "coefficient"), c);
    }
    default:
      throw Error(ErrorKind::ParseError, "bad coefficient '" + std::string(text) + "'");
  }
}

std::array<FieldElement, 5> parse_ainvs(std::string_view text, const QuadraticField& field) {
  auto parts = split(text, ',');
  if (parts.size() != 5) throw Error(ErrorKind::ParseError, "expected five comma-separated coefficients");
  std::array<FieldElement, 5> out;
  for (std::size_t i = 0; i < 5; ++i) out[i] = parse_coefficient(parts[i], field);
  return out;
}

json to_json(const WeierstrassModel& model) {
  json ainvs = json::array();
  for (const auto& a : model.ainvs()) ainvs.push_back(to_json(a));
  return {{"field", to_json(model.field())}, {"ainvs", ainvs}};
}

json to_json(const Transform& t) {
  return {{"u", to_json(t.u)}, {"r", to_json(t.r)}, {"s", to_json(t.s)}, {"t", to_json(t.t)}};
}

json to_json(const AbelianGroupDescriptor& g) { return json(g.factors); }

json to_json(const LocalData& data) {
  json out = {{"kodaira", data.kodaira.to_string()},
              {"v_delta_min", data.v_delta_min},
              {"c_local", data.local_component_order},
              {"phi_geom", to_json(data.geometric_component_group)}};
  out["conductor_exponent"] = data.conductor_exponent ? json(*data.conductor_exponent) : json(nullptr);
  out["minimal_model"] = to_json(data.minimal_model)["ainvs"];
  out["transform"] = to_json(data.transform);
  return out;
}

json to_json(const ConformanceReport& report) {
  std::vector<std::string> allowed;
  for (const auto& k : report.allowed) allowed.push_back(k.to_string());
  std::sort(allowed.begin(), allowed.end());
  json divisibility = json::object();
  if (report.mod3) divisibility["mod3"] = *report.mod3;
  if (report.mod2) divisibility["mod2"] = *report.mod2;
  json out = {{"computed", report.local.kodaira.to_string()},
              {"allowed", allowed},
              {"verdict", std::string(to_string(report.verdict))},
              {"j_class", std::string(to_string(report.jclass))},
              {"v_delta_min", report.local.v_delta_min},
              {"c_local", report.local.local_component_order},
              {"divisibility", divisibility},
              {"phi_geom", to_json(report.local.geometric_component_group)}};
  json checks = json::object();
  checks["member"] = report.member;
  if (report.excluded_types) checks["excluded_types"] = *report.excluded_types;
  if (report.phi_trivial_or_klein) checks["phi_trivial_or_klein"] = *report.phi_trivial_or_klein;
  if (report.phi_killed_by_mu) checks["phi_killed_by_mu"] = *report.phi_killed_by_mu;
  out["checks"] = checks;
  return out;
}

json to_json(const SingularityData& s) {
  return {{"v_J2", s.v_J2},
          {"v_J10", s.v_J10},
          {"extension_degree", s.extension_degree},
          {"d_L", s.d_L.get_str()},
          {"d", s.d.get_str()},
          {"admissible", s.admissible}};
}

json to_json(const TorsionBound& b) {
  return {{"bound", to_json(b.bound)}, {"branches", {to_json(b.branches[0]), to_json(b.branches[1])}}};
}

void require_keys(const json& object, std::initializer_list<std::string_view> allowed, std::string_view where) {
  if (!object.is_object()) throw Error(ErrorKind::ParseError, std::string(where) + " must be an object");
  for (const auto& [key, value] : object.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      throw Error(ErrorKind::ParseError, "unknown key '" + key + "' in " + std::string(where));
    }
  }
}

}  // namespace cmred
