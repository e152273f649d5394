#pragma once
// Declarative presentations: graded objects and maps described as JSON trees.
//
//   family  := { "offset": deg?, "offset_label": str?, "gens": [gen...], "relations": [poly...]? }
//            | { "span": { "ambient": key, "family": idx, "generators": [{name, image, domain?, degree?}] } }
//   gen     := { "name": str, "degree": deg, "domain": "natural"|"positive"|"integer"|"negative"|"nonpositive" }
//   deg     := [c1, a0, a1, b] | "c1+a0*A0+a1*A1+b*B"
//   object  := { "key", "provenance", "families": [family...] } | { "key", "provenance", "sum_of": [key...] }
//   map     := { "key", "source", "target", "shift": deg?, "families": [{"zero": true} | {"target_family", "images": {gen: poly}, "unit": poly?}] }

#include <functional>
#include <memory>
#include <string>

#include <json.hpp>

#include "k4/graded.hpp"

namespace k4 {

using ObjectLookup = std::function<std::shared_ptr<const GradedObject>(const std::string&)>;

PresentedFamily parse_family(const nlohmann::json& j);
std::shared_ptr<GradedObject> parse_object(const nlohmann::json& j, const ObjectLookup& lookup);
std::shared_ptr<RingMap> parse_map(const nlohmann::json& j, const ObjectLookup& lookup);
RODegree parse_degree(const nlohmann::json& j);

}  // namespace k4
