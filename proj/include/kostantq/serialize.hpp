#pragma once

// JSON encodings. Exact values travel as decimal strings.
//   QPolynomial          {"2": "2", "1": "1"}                 q-exponent -> coefficient
//   DecompositionTable   [{"weight": "6,3,0", "mult": "2"}, ...]
//   GTDiagram            [[2,0],[1]]                          top row first
//   ChamberPolynomial    {"1,0": {"3": "1"}, ...}             a-exponents -> q-exponent -> coefficient

#include "kostantq/branching_gt.hpp"
#include "kostantq/chamber.hpp"
#include "kostantq/lie_core.hpp"
#include "kostantq/multiplicity.hpp"
#include "kostantq/numeric.hpp"
#include "kostantq/qpolynomial.hpp"
#include "kostantq/symmetric_fn.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace kostantq {

using Json = nlohmann::ordered_json;

inline Json to_json(const QPolynomial& p) {
  Json j = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    j[std::to_string(it->first)] = to_string(it->second);
  return j;
}

inline QPolynomial qpolynomial_from_json(const Json& j) {
  QPolynomial p;
  for (const auto& [key, value] : j.items()) p.add_term(std::stoi(key), BigInt(value.get<std::string>()));
  return p;
}

inline Json to_json(const DecompositionTable& table) {
  Json j = Json::array();
  for (auto it = table.rbegin(); it != table.rend(); ++it)
    j.push_back(Json{{"weight", format_weight(it->first)}, {"mult", to_string(it->second)}});
  return j;
}

inline DecompositionTable decomposition_from_json(const Json& j) {
  DecompositionTable t;
  for (const auto& e : j) t.emplace(parse_weight(e.at("weight").get<std::string>()), BigInt(e.at("mult").get<std::string>()));
  return t;
}

inline Json to_json(const GTDiagram& d) { return Json(d.rows()); }

inline Json to_json(const ChamberPolynomial& p) {
  Json j = Json::object();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json q = Json::object();
    for (auto qt = it->second.rbegin(); qt != it->second.rend(); ++qt)
      q[std::to_string(qt->first)] = to_string(qt->second);
    j[format_weight(Weight(it->first))] = std::move(q);
  }
  return j;
}

inline ChamberPolynomial chamber_polynomial_from_json(const Json& j, std::size_t nvars) {
  ChamberPolynomial p(nvars);
  for (const auto& [key, q] : j.items())
    for (const auto& [qe, c] : q.items()) p.add(parse_int_list(key), std::stoi(qe), Rational(c.get<std::string>()));
  return p;
}

inline Json to_json(const Signature& sig) {
  Json j = Json::array();
  for (const auto& e : sig) j.push_back(to_string(e.membership));
  return j;
}

inline Json to_json(const CharacterPoly& chi) {
  Json j = Json::array();
  for (auto it = chi.terms().rbegin(); it != chi.terms().rend(); ++it)
    j.push_back(Json{{"exponent", format_weight(Weight(it->first))}, {"coeff", to_string(it->second)}});
  return j;
}

}  // namespace kostantq
