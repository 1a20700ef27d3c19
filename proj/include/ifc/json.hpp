#pragma once

#include <json.hpp>

#include "ifc/calculus.hpp"
#include "ifc/ifn.hpp"

namespace ifc {

/// x rounded to 15 significant digits; serialises as at most 15 digits.
double round15(double x);

void to_json(nlohmann::json& j, const Pair& p);
void to_json(nlohmann::json& j, const IFN& a);
void to_json(nlohmann::json& j, const DerivativeValue& d);
void to_json(nlohmann::json& j, const MeanValueResult& r);
void to_json(nlohmann::json& j, const CmvtReport& r);

/// {"u": number, "v": number}; throws DomainError on missing fields or a
/// pair that is not an IFN.
IFN ifn_from_json(const nlohmann::json& j);

}  // namespace ifc
