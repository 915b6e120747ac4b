#pragma once

#include <json.hpp>

#include "catena/catenary.hpp"
#include "catena/experiments.hpp"
#include "catena/factorization.hpp"
#include "catena/families.hpp"
#include "catena/monoid.hpp"

// ADL serializers so nlohmann::json can absorb the library types directly.
namespace catena {

inline void to_json(nlohmann::json& j, const Factorization& z) { j = z.coeffs(); }

inline void to_json(nlohmann::json& j, const LengthProfile& p) {
  j = {{"lengths", p.lengths},
       {"min_length", p.min_length},
       {"max_length", p.max_length},
       {"delta", p.delta}};
}

inline void to_json(nlohmann::json& j, const FactorizationSet& fs) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& z : fs.all()) rows.push_back(nlohmann::json{{"coeffs", z.coeffs()}, {"length", z.length()}});
  nlohmann::json by_length = nlohmann::json::object();
  for (const auto& [len, idx] : fs.by_length()) by_length[std::to_string(len)] = idx;
  j = {{"element", fs.element()}, {"count", fs.size()}, {"factorizations", rows}, {"by_length", by_length}};
}

inline void to_json(nlohmann::json& j, const InvariantReport& r) {
  j = {{"value", r.value},
       {"exactness", to_string(r.exactness)},
       {"method", to_string(r.method)},
       {"scan_bound", r.scan_bound ? nlohmann::json(*r.scan_bound) : nlohmann::json()},
       {"heuristic_bound", r.heuristic_bound}};
}

inline void to_json(nlohmann::json& j, const ChainWitness& w) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& z : w.steps) steps.push_back(z.coeffs());
  j = {{"steps", steps},
       {"bottleneck", w.bottleneck},
       {"monotone", w.monotone_flag},
       {"equal_length", w.equal_length_flag}};
}

inline void to_json(nlohmann::json& j, const BettiScan& b) {
  j = {{"elements", b.elements},
       {"scan_bound", b.bound},
       {"coefficients", b.coefficients},
       {"heuristic_bound", b.heuristic}};
}

inline void to_json(nlohmann::json& j, const ElementInvariants& e) {
  j = {{"element", e.element},
       {"profile", e.profile},
       {"count", e.factorization_count},
       {"catenary", e.catenary},
       {"equivalent", e.equivalent},
       {"adjacent", e.adjacent},
       {"monotone", e.monotone}};
  auto put = [&](const char* key, const std::optional<ChainWitness>& w) {
    if (w) j[key] = *w;
  };
  put("catenary_witness", e.catenary_witness);
  put("equivalent_witness", e.equivalent_witness);
  put("adjacent_witness", e.adjacent_witness);
  put("monotone_witness", e.monotone_witness);
}

inline void to_json(nlohmann::json& j, const SetInvariants& s) {
  j = {{"catenary", s.catenary},
       {"equivalent", s.equivalent},
       {"adjacent", s.adjacent},
       {"monotone", s.monotone},
       {"betti", s.betti},
       {"frobenius", s.frobenius}};
}

}  // namespace catena

namespace catena::experiments {

inline void to_json(nlohmann::json& j, const PointResult& p) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : p.params) params[name] = value;
  nlohmann::json values = nlohmann::json::object();
  for (const auto& [name, value] : p.values) values[name] = value;
  j = {{"params", params}, {"values", values}, {"ok", p.ok}};
}

inline void to_json(nlohmann::json& j, const Counterexample& c) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [name, value] : c.params) params[name] = value;
  j = {{"params", params},
       {"element", c.element},
       {"claim", c.claim},
       {"expected", c.expected},
       {"actual", c.actual}};
}

inline void to_json(nlohmann::json& j, const SweepReport& r) {
  nlohmann::json summary = nlohmann::json::object();
  for (const auto& [name, value] : r.summary) summary[name] = value;
  j = {{"id", r.id},
       {"param_columns", r.param_columns},
       {"value_columns", r.value_columns},
       {"points", r.points},
       {"counterexamples", r.counterexamples},
       {"summary", summary},
       {"points_total", r.points_total()},
       {"points_failed", r.points_failed()},
       {"support_ratio", r.support_ratio()}};
}

inline void to_json(nlohmann::json& j, const FigureRow& r) {
  j = {{"a", r.a},         {"catenary", r.c},          {"monotone", r.c_mon},
       {"gap", r.gap},     {"catenary_closed", r.c_closed}, {"monotone_closed", r.c_mon_closed}};
}

}  // namespace catena::experiments
