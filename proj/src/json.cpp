#include "ifc/json.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ifc/errors.hpp"

namespace ifc {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

void to_json(nlohmann::json& j, const Pair& p) {
  j = nlohmann::json{{"u", round15(p.u)}, {"v", round15(p.v)}};
}

void to_json(nlohmann::json& j, const IFN& a) { to_json(j, a.pair()); }

void to_json(nlohmann::json& j, const DerivativeValue& d) {
  j = nlohmann::json{{"value", d.value}, {"is_valid_ifn", d.is_valid_ifn}, {"kind", to_string(d.kind)}};
}

void to_json(nlohmann::json& j, const MeanValueResult& r) {
  j = nlohmann::json{{"point", r.point},
                     {"residual_mu", round15(r.residual_mu)},
                     {"residual_v", round15(r.residual_v)},
                     {"iterations_mu", r.iterations_mu},
                     {"iterations_v", r.iterations_v}};
}

void to_json(nlohmann::json& j, const CmvtReport& r) {
  j = nlohmann::json{{"lhs", r.lhs},
                     {"rhs", r.rhs},
                     {"max_component_gap", round15(r.max_component_gap)},
                     {"passed", r.passed}};
  if (r.factor_is_valid_ifn) j["factor_is_valid_ifn"] = *r.factor_is_valid_ifn;
}

IFN ifn_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("u") || !j.contains("v") || !j["u"].is_number() ||
      !j["v"].is_number()) {
    throw DomainError("IFN JSON must be an object {\"u\": number, \"v\": number}");
  }
  return IFN(j["u"].get<double>(), j["v"].get<double>());
}

}  // namespace ifc
