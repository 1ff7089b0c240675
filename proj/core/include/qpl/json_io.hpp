#pragma once

#include <json.hpp>

#include "qpl/normal_form.hpp"
#include "qpl/toeplitz.hpp"

namespace qpl {

// Wire formats (stable, sorted keys):
//   extended natural   int or "inf"
//   arrow              {"l":..,"m":..,"p":..,"q":..}
//   scalar             {"im":"num/den","re":"num/den"}
//   element            {"slices":[{"axis1":{"tail":..,"values":[..]},
//                                  "axis2":{...},"corner":..,"l":..,"m":..}]}
//   class              {"type":"rank0","m":..,"l":..} |
//                      {"type":"positive","n":..,"j":..} |
//                      {"type":"deficient","n":..,"k":..}
//   K0 class           {"a":..,"b":..,"basis":["e11+0","Itilde"]}
//   block spec         {"entries":[{"kind":"finite"|"cofinite","m":..,"l":..}]}
//   certificate        [{"type":"permute","targets":[..]} |
//                       {"type":"swap","entry_a":..,"leg_a":..,
//                        "entry_b":..,"leg_b":..,"size":..} |
//                       {"type":"shift","entry_x":..,"entry_y":..,
//                        "power":..,"orientation":"forward"|"adjoint"}]
//   truncated operator {"n":..,"matrix":[[re,im],..]}  (row-major)

using json = nlohmann::json;

json to_json(const ExtendedNat& value);
ExtendedNat extended_nat_from_json(const json& j);

json to_json(const Arrow& arrow);
Arrow arrow_from_json(const json& j);

json to_json(const Scalar& value);
Scalar scalar_from_json(const json& j);

json to_json(const AlgebraElement& element);
AlgebraElement element_from_json(const json& j);

json to_json(const ProjClass& c);
ProjClass proj_class_from_json(const json& j);

json to_json(const K0Class& k);
K0Class k0_from_json(const json& j);

std::string to_string(Geometry g);
Geometry geometry_from_string(const std::string& name);

json to_json(const BlockSpec& spec);
BlockSpec block_spec_from_json(const json& j);

json to_json(const Certificate& cert);
Certificate certificate_from_json(const json& j);

json to_json(const TruncatedOperator& op);

}  // namespace qpl
