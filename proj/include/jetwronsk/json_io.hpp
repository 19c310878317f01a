#ifndef JETWRONSK_JSON_IO_HPP
#define JETWRONSK_JSON_IO_HPP

#include <json.hpp>

#include "jetwronsk/family.hpp"
#include "jetwronsk/grassmann.hpp"
#include "jetwronsk/jet.hpp"
#include "jetwronsk/verify.hpp"

namespace jetwronsk {

using json = nlohmann::json;

// {"z1": "p/q", "z1'": ..., "z1''": ...}; primes encode the derivative order.
json jet_point_to_json(const JetPoint& w);
JetPoint jet_point_from_json(const JetContext& ctx, const json& j);

// {"(i0,...,iN)-tuple": "p/q"} keyed by tuples of ambient multi-indices.
json plucker_to_json(const PluckerVector& v);

// {"n":..,"N":..,"k":..,"delta":..,"r":..,"tau":[expr],"a":{"(i0,...,iN)":expr}}
FamilySpec family_from_json(const json& j);
json family_to_json(const FamilySpec& spec);

json curve_to_json(const CurveGerm& germ);

json suite_result_to_json(const SuiteResult& res);

}  // namespace jetwronsk

#endif
