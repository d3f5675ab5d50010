#pragma once

// JSON renderings: one object per skew brace (JSON-lines), an enumeration
// summary, and Cayley tables {"n": n, "table": [[...], ...]}.

#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "cayley.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "json.hpp"

namespace skewbrace {

using nlohmann::ordered_json;

inline ordered_json to_json(const GroupSpec& s) {
  return ordered_json{{"family", to_string(s.family)}, {"p", s.p}, {"q", s.q}, {"t", s.t}};
}

inline ordered_json to_json(const SkewBraceRecord& r) {
  ordered_json j;
  j["group"] = to_json(r.gamma.context().spec);
  j["gamma"] = r.gamma.table();
  j["circle_type"] = to_string(r.circle_type);
  j["kernel_size"] = r.kernel.size();
  j["orbit_id"] = r.orbit_id;
  return j;
}

inline ordered_json fingerprint_json(const Fingerprint& fp) {
  return ordered_json{{"order", fp.order},
                      {"p", fp.p},
                      {"q", fp.q},
                      {"abelian", fp.abelian},
                      {"cyclic", fp.cyclic},
                      {"has_element_of_order_p2", fp.has_element_of_order_p2},
                      {"center_size", fp.center_size},
                      {"normal_sylow_p", fp.normal_sylow_p},
                      {"normal_sylow_q", fp.normal_sylow_q}};
}

/// {"group", "method", "total", "counts": {type: n}, "orbits": [{"length", "circle_type", "size"}]}
/// where "size" is the kernel order shared by every brace of the orbit.
inline ordered_json summary_json(const EnumerationResult& r) {
  ordered_json j;
  j["group"] = to_json(r.spec());
  j["method"] = to_string(r.method);
  j["total"] = r.braces.size();
  ordered_json counts = ordered_json::object();
  for (auto [type, n] : r.counts_by_type())
    counts[to_string(type)] = n;
  j["counts"] = counts;
  ordered_json orbits = ordered_json::array();
  for (const auto& o : r.orbits)
    orbits.push_back({{"length", o.length}, {"circle_type", to_string(o.circle_type)}, {"size", o.kernel_size}});
  j["orbits"] = orbits;
  return j;
}

/// One record per line, then the summary object on the last line.
inline void write_jsonl(std::ostream& out, const EnumerationResult& r) {
  for (const auto& b : r.braces)
    out << to_json(b).dump() << '\n';
  out << ordered_json{{"summary", summary_json(r)}}.dump() << '\n';
}

inline ordered_json to_json(const CayleyTable& t) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < t.size(); ++i) {
    std::vector<int> row(t.data().begin() + static_cast<std::ptrdiff_t>(i) * t.size(),
                         t.data().begin() + static_cast<std::ptrdiff_t>(i + 1) * t.size());
    rows.push_back(row);
  }
  return ordered_json{{"n", t.size()}, {"table", rows}};
}

inline CayleyTable cayley_from_json(const nlohmann::json& j) {
  try {
    const int n = j.at("n").get<int>();
    const auto& rows = j.at("table");
    if (n < 1 || !rows.is_array() || static_cast<int>(rows.size()) != n)
      throw InvalidInput("malformed-table", "\"table\" must have n rows");
    std::vector<int> data;
    data.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw InvalidInput("malformed-table", "every row must have n entries");
      for (const auto& x : row)
        data.push_back(x.get<int>());
    }
    return CayleyTable(n, std::move(data));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed-table", e.what());
  }
}

inline CayleyTable read_cayley(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput("malformed-table", e.what());
  }
  return cayley_from_json(j);
}

} // namespace skewbrace
