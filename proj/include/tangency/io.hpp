// SPDX-License-Identifier: Apache-2.0
//
// JSON encodings. Rationals are strings "p/q" (integers as "p"), polynomials
// are arrays of such strings, lowest degree first. No floats anywhere.

#pragma once

#include "tangency/errors.hpp"
#include "tangency/relgw.hpp"
#include "tangency/scalar.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tangency {

using json = nlohmann::json;

inline json to_json_value(const Rational& q) { return to_string(q); }

inline json to_json_value(const PolyQ& p) {
  json arr = json::array();
  for (const auto& c : p.coefficients()) arr.push_back(to_string(c));
  return arr;
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw QueryError("malformed_rational", "rationals must be strings or integers");
}

inline PolyQ poly_from_json(const json& j) {
  if (!j.is_array()) throw QueryError("malformed_polynomial", "expected an array");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(rational_from_json(x));
  return PolyQ(std::move(c));
}

inline json points_to_json(const std::vector<RelPoint>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({p.m, p.a, p.b});
  return arr;
}

inline std::vector<RelPoint> points_from_json(const json& j) {
  if (!j.is_array())
    throw QueryError("malformed_points", "points must be an array of [m, a, b]");
  std::vector<RelPoint> out;
  for (const auto& p : j) {
    if (!p.is_array() || p.size() != 3)
      throw QueryError("malformed_points", "each point must be [m, a, b]");
    for (const auto& x : p)
      if (!x.is_number_integer() || x.get<long>() < 0)
        throw QueryError("malformed_points", "point entries must be non-negative integers");
    RelPoint rp{p[0].get<int>(), p[1].get<int>(), p[2].get<int>()};
    if (rp.a > 2) throw QueryError("malformed_points", "a must be 0, 1 or 2");
    out.push_back(rp);
  }
  return out;
}

/// A CLI request in transport form.
struct QueryEnvelope {
  std::string command;
  std::optional<int> e;
  std::vector<RelPoint> points;
  std::optional<long> d;
  bool symbolic = false;
  std::optional<long> series_terms;  // N
  std::optional<std::pair<long, long>> range;
  std::string format = "text";

  friend bool operator==(const QueryEnvelope&, const QueryEnvelope&) = default;
};

inline json to_json_value(const QueryEnvelope& q) {
  json j;
  j["command"] = q.command;
  if (q.e) j["e"] = *q.e;
  j["points"] = points_to_json(q.points);
  if (q.symbolic)
    j["d"] = "symbolic";
  else if (q.d)
    j["d"] = *q.d;
  if (q.series_terms) j["N"] = *q.series_terms;
  if (q.range) j["range"] = {q.range->first, q.range->second};
  j["format"] = q.format;
  return j;
}

inline QueryEnvelope envelope_from_json(const json& j) {
  if (!j.is_object()) throw QueryError("malformed_query", "query must be a JSON object");
  QueryEnvelope q;
  q.command = j.value("command", std::string("invariant"));
  if (j.contains("e")) {
    if (!j["e"].is_number_integer())
      throw QueryError("invalid_degree", "e must be an integer");
    q.e = j["e"].get<int>();
  }
  if (j.contains("points")) q.points = points_from_json(j["points"]);
  if (j.contains("d")) {
    const auto& d = j["d"];
    if (d.is_string() && d.get<std::string>() == "symbolic")
      q.symbolic = true;
    else if (d.is_number_integer())
      q.d = d.get<long>();
    else
      throw QueryError("malformed_query", "d must be an integer or \"symbolic\"");
  }
  if (j.contains("N")) q.series_terms = j["N"].get<long>();
  if (j.contains("range")) {
    const auto& r = j["range"];
    if (!r.is_array() || r.size() != 2)
      throw QueryError("malformed_query", "range must be [d_min, d_max]");
    q.range = std::pair{r[0].get<long>(), r[1].get<long>()};
  }
  q.format = j.value("format", std::string("text"));
  return q;
}

}  // namespace tangency
