#pragma once

#include "json.hpp"
#include "sphrect/families.hpp"
#include "sphrect/netgraph.hpp"
#include "sphrect/sc_limit.hpp"

namespace sphrect {

nlohmann::json to_json(const AngleQuadruple& q);
AngleQuadruple angles_from_json(const nlohmann::json& j);

nlohmann::json to_json(const NetParams& p);
NetParams netparams_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CountReport& r);
nlohmann::json to_json(const NetGraph& g);
nlohmann::json to_json(const UnitaryRoot& r);
nlohmann::json to_json(const FamilyPoint& p);
nlohmann::json to_json(const FamilyCurve& c);
nlohmann::json to_json(const LimitResult& r);
nlohmann::json to_json(const ScSolution& s);

}  // namespace sphrect
