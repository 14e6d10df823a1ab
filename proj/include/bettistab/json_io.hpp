#pragma once

#include <json.hpp>

#include "betti_table.hpp"

namespace bettistab {

/// BettiTable <-> {"entries": [[i, j, multiplicity], ...]}, sorted by (i, j).
inline nlohmann::ordered_json betti_table_to_json(const BettiTable& B) {
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (const auto& [ij, mult] : B.entries())
    entries.push_back({ij.first, ij.second, mult});
  return nlohmann::ordered_json{{"entries", std::move(entries)}};
}

inline BettiTable betti_table_from_json(const nlohmann::json& j) {
  BettiTable t;
  for (const auto& e : j.at("entries"))
    t.add(e.at(0).get<int>(), e.at(1).get<std::int64_t>(), e.at(2).get<std::int64_t>());
  return t;
}

}  // namespace bettistab
