#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "cmred/cmclass.hpp"
#include "cmred/genus2.hpp"
#include "cmred/kodaira.hpp"
#include "cmred/localfield.hpp"
#include "cmred/tate.hpp"
#include "cmred/torsion.hpp"
#include "cmred/weierstrass.hpp"

namespace cmred {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become JSON numbers, larger ones strings.
json to_json(const mpz_class& n);
mpz_class integer_from_json(const json& j, std::string_view what);

json to_json(const QuadraticField& field);
QuadraticField field_from_json(const json& j);

// {"a":..,"b":..,"c":..} for (a + b sqrt(D)) / c; b and c are omitted when 0 and 1.
json to_json(const FieldElement& x);
FieldElement element_from_json(const json& j, const QuadraticField& field);

// "a", "a/c" or "a/b/c" (the last meaning (a + b sqrt(D)) / c).
FieldElement parse_coefficient(std::string_view text, const QuadraticField& field);
std::array<FieldElement, 5> parse_ainvs(std::string_view text, const QuadraticField& field);

json to_json(const WeierstrassModel& model);
json to_json(const Transform& t);
json to_json(const AbelianGroupDescriptor& g);
json to_json(const LocalData& data);
json to_json(const ConformanceReport& report);
json to_json(const SingularityData& s);
json to_json(const TorsionBound& b);

// Rejects keys outside `allowed`, naming the first offender.
void require_keys(const json& object, std::initializer_list<std::string_view> allowed, std::string_view where);

}  // namespace cmred
