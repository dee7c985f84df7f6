#pragma once

// JSON wire formats.
//
//   set:     {"l": L, "m": M, "n": N, "k": K, "arrays": [[["r^1", ...], ...], ...]}
//   report:  {"verdict": "pass"|"fail", "mode", "rho", "sigma", "mu"?, "delta1"?,
//             "delta2"?, "failures": [...]}
//   verdict: {"status", "justification", "l", "m", "n", "k", "detail"}
//   search:  {"result", "nodes_visited", "solutions_count"?, "set"?}

#include <magrect/designs.hpp>
#include <magrect/dihedral.hpp>
#include <magrect/feasibility.hpp>
#include <magrect/search.hpp>
#include <magrect/verify.hpp>

#include "json.hpp"

#include <string>
#include <vector>

namespace magrect {

using json = nlohmann::json;

class schema_error : public parse_error {
 public:
  using parse_error::parse_error;
};

inline json to_json(const RectangleSet& set) {
  json arrays = json::array();
  for (const auto& a : set.arrays()) {
    json rows = json::array();
    for (std::size_t i = 0; i < a.rows(); ++i) {
      json row = json::array();
      for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(format(a.at(i, j)));
      rows.push_back(std::move(row));
    }
    arrays.push_back(std::move(rows));
  }
  return {{"l", set.group().value()}, {"m", set.m()}, {"n", set.n()}, {"k", set.k()}, {"arrays", arrays}};
}

inline std::string serialize(const RectangleSet& set) { return to_json(set).dump(); }

struct LoadedSet {
  RectangleSet set;
  CoverReport cover;  // violations are reported, not rejected
};

inline LoadedSet from_json(const json& j) {
  if (!j.is_object()) throw schema_error("top level: expected an object");
  auto field = [&](const char* name) -> std::int64_t {
    if (!j.contains(name)) throw schema_error(std::string("missing field '") + name + "'");
    const auto& v = j.at(name);
    if (!v.is_number_integer()) throw schema_error(std::string("field '") + name + "' must be an integer");
    const auto x = v.get<std::int64_t>();
    if (x < 1) throw schema_error(std::string("field '") + name + "' must be positive");
    return x;
  };
  const auto l_raw = field("l");
  const auto m = static_cast<std::size_t>(field("m"));
  const auto n = static_cast<std::size_t>(field("n"));
  const auto k = static_cast<std::size_t>(field("k"));
  if (l_raw > kMaxGroupOrder) throw schema_error("field 'l' exceeds " + std::to_string(kMaxGroupOrder));
  const GroupOrder l(l_raw);

  if (!j.contains("arrays") || !j.at("arrays").is_array()) throw schema_error("missing array list 'arrays'");
  const auto& arrays = j.at("arrays");
  if (arrays.size() != k) {
    throw schema_error("'arrays' holds " + std::to_string(arrays.size()) + " arrays, k = " + std::to_string(k));
  }
  std::vector<Rectangle> out;
  out.reserve(k);
  for (std::size_t p = 0; p < k; ++p) {
    const auto& rows = arrays[p];
    const std::string where = "array " + std::to_string(p);
    if (!rows.is_array() || rows.size() != m) {
      throw schema_error(where + ": expected " + std::to_string(m) + " rows");
    }
    Rectangle a(m, n);
    for (std::size_t i = 0; i < m; ++i) {
      const auto& row = rows[i];
      if (!row.is_array() || row.size() != n) {
        throw schema_error(where + ", row " + std::to_string(i + 1) + ": expected " + std::to_string(n) + " cells");
      }
      for (std::size_t jj = 0; jj < n; ++jj) {
        const std::string cell = describe(CellRef{p, i, jj});
        if (!row[jj].is_string()) throw schema_error(cell + ": expected a string token");
        try {
          a.at(i, jj) = parse(row[jj].get<std::string>(), l);
        } catch (const parse_error& e) {
          throw schema_error(cell + ": " + e.what());
        }
      }
    }
    out.push_back(std::move(a));
  }
  RectangleSet set(l, std::move(out));
  auto cover = validate_cover(set);
  return {std::move(set), std::move(cover)};
}

inline LoadedSet deserialize(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw schema_error(std::string("invalid JSON: ") + e.what());
  }
  return from_json(j);
}

inline json to_json(const CoverReport& r) {
  json dups = json::array();
  for (const auto& d : r.duplicates) {
    json cells = json::array();
    for (const auto& c : d.cells) cells.push_back({{"array", c.array}, {"row", c.row + 1}, {"column", c.col + 1}});
    dups.push_back({{"element", format(d.element)}, {"cells", cells}});
  }
  json missing = json::array();
  for (const auto& e : r.missing) missing.push_back(format(e));
  return {{"ok", r.ok()},
          {"expected_cells", r.expected_cells},
          {"actual_cells", r.actual_cells},
          {"duplicates", dups},
          {"missing", missing}};
}

inline json to_json(const VerificationReport& r) {
  json j;
  j["verdict"] = r.pass() ? "pass" : "fail";
  j["mode"] = to_string(r.mode);
  auto put = [&](const char* key, const std::optional<DihedralElement>& e) {
    j[key] = e ? json(format(*e)) : json(nullptr);
  };
  put("rho", r.rho);
  put("sigma", r.sigma);
  if (r.mu) put("mu", r.mu);
  if (r.delta1) put("delta1", r.delta1);
  if (r.delta2) put("delta2", r.delta2);
  json failures = json::array();
  for (const auto& f : r.failures) {
    json achieved = json::array();
    for (const auto& e : f.achieved) achieved.push_back(format(e));
    json item = {{"kind", to_string(f.kind)}, {"achieved", achieved}, {"note", f.note}};
    if (f.kind == LineKind::row || f.kind == LineKind::column) {
      item["array"] = f.array;
      item["index"] = f.index + 1;
    }
    failures.push_back(std::move(item));
  }
  j["failures"] = std::move(failures);
  return j;
}

inline json to_json(const FeasibilityVerdict& v, std::uint64_t m, std::uint64_t n, std::uint64_t k) {
  return {{"status", to_string(v.status)},
          {"justification", to_string(v.justification)},
          {"l", v.l},
          {"m", m},
          {"n", n},
          {"k", k},
          {"detail", v.detail}};
}

inline json to_json(const SearchOutcome& o) {
  json j = {{"result", to_string(o.result)}, {"nodes_visited", o.nodes_visited}};
  if (o.solutions_count) j["solutions_count"] = *o.solutions_count;
  if (o.set) j["set"] = to_json(*o.set);
  return j;
}

}  // namespace magrect
