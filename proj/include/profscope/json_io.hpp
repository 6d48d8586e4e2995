#pragma once

// Cayley-table JSON: {"order": n, "table": [[...], ...], "label": "..."}
// Rows are listed in element order; entries are element indices 0..n-1.

#include <string>
#include <vector>

#include "json.hpp"
#include "profscope/group.hpp"

namespace profscope {

inline nlohmann::ordered_json group_to_json(const FiniteGroup& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (Element a = 0; a < g.order(); ++a) {
    auto row = g.row(a);
    rows.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  j["table"] = std::move(rows);
  j["label"] = g.label();
  return j;
}

template <class Json>
FiniteGroup group_from_json(const Json& j, const ValidationOptions& opts = {}) {
  if (!j.is_object()) throw InvalidArgument("group: expected an object");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (it.key() != "order" && it.key() != "table" && it.key() != "label")
      throw InvalidArgument("group: unknown field '" + it.key() + "'");
  if (!j.contains("order") || !j.contains("table"))
    throw InvalidArgument("group: 'order' and 'table' are required");
  if (!j["order"].is_number_unsigned()) throw InvalidArgument("group: 'order' must be a positive integer");
  const auto n = j["order"].template get<std::size_t>();
  if (n == 0) throw InvalidArgument("group: 'order' must be positive");
  if (n > kMaxGroupOrder) throw BudgetExceeded("group order", n, kMaxGroupOrder);
  const auto& rows = j["table"];
  if (!rows.is_array() || rows.size() != n) throw InvalidArgument("group: 'table' must have 'order' rows");
  std::vector<Element> table;
  table.reserve(n * n);
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != n) throw InvalidArgument("group: every row must have 'order' entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() || v.template get<std::size_t>() >= n)
        throw InvalidArgument("group: table entries must be integers in 0..order-1");
      table.push_back(v.template get<Element>());
    }
  }
  std::string label = "G";
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw InvalidArgument("group: 'label' must be a string");
    label = j["label"].template get<std::string>();
  }
  return FiniteGroup::from_table(std::move(table), std::move(label), opts);
}

}  // namespace profscope
