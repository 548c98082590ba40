#pragma once

// JSON documents for classification records, Cayley tables and verification
// reports, plus DOT export of generating graphs. Object keys are emitted in
// sorted order, so output is byte-stable.

#include <sstream>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "twogen/arith.hpp"
#include "twogen/group.hpp"
#include "twogen/verifier.hpp"

namespace twogen {

using Json = nlohmann::json;

inline Json to_json(const FailureReason& r) {
  switch (r.kind) {
    case FailureKind::None:
      return Json{{"kind", "None"}};
    case FailureKind::NotCubeFree:
      return Json{{"kind", "NotCubeFree"}, {"p", r.p}};
    case FailureKind::BadPair:
      return Json{{"kind", "BadPair"}, {"p", r.p}, {"q", r.q}};
  }
  return Json{{"kind", "None"}};
}

inline FailureReason failure_reason_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "None") return {};
  if (kind == "NotCubeFree") return {FailureKind::NotCubeFree, j.at("p").get<std::uint64_t>(), 0};
  if (kind == "BadPair")
    return {FailureKind::BadPair, j.at("p").get<std::uint64_t>(), j.at("q").get<std::uint64_t>()};
  throw std::invalid_argument("unknown failure kind '" + kind + "'");
}

inline Json to_json(const ClassificationRecord& r) {
  return Json{{"n", r.n},
              {"cube_free", r.cube_free},
              {"square_free", r.square_free},
              {"nilpotent_factorization", r.nilpotent_factorization},
              {"cyclic_number", r.cyclic_number},
              {"abelian_number", r.abelian_number},
              {"nilpotent_number", r.nilpotent_number},
              {"two_generated_number", r.two_generated_number},
              {"failure_reason", to_json(r.failure_reason)}};
}

inline ClassificationRecord classification_from_json(const Json& j) {
  ClassificationRecord r;
  r.n = j.at("n").get<std::uint64_t>();
  r.cube_free = j.at("cube_free").get<bool>();
  r.square_free = j.at("square_free").get<bool>();
  r.nilpotent_factorization = j.at("nilpotent_factorization").get<bool>();
  r.cyclic_number = j.at("cyclic_number").get<bool>();
  r.abelian_number = j.at("abelian_number").get<bool>();
  r.nilpotent_number = j.at("nilpotent_number").get<bool>();
  r.two_generated_number = j.at("two_generated_number").get<bool>();
  r.failure_reason = failure_reason_from_json(j.at("failure_reason"));
  return r;
}

inline Json to_json(const OrderSpectrum& s) {
  Json j = Json::object();
  for (const auto& [order, count] : s) j[std::to_string(order)] = count;
  return j;
}

inline OrderSpectrum spectrum_from_json(const Json& j) {
  OrderSpectrum s;
  for (const auto& [key, value] : j.items()) s[std::stoull(key)] = value.get<std::uint64_t>();
  return s;
}

/// Cayley table document: {"order", "recipe", "table"} with the table row-major.
inline Json to_json(const Group& g) {
  Json table = Json::array();
  for (auto v : g.table()) table.push_back(v);
  return Json{{"order", g.order()}, {"recipe", g.recipe()}, {"table", std::move(table)}};
}

inline Group group_from_json(const Json& j) {
  const auto order = j.at("order").get<std::size_t>();
  const auto& table = j.at("table");
  if (!table.is_array() || table.size() != order * order)
    throw std::invalid_argument("group document: table must hold order^2 entries");
  std::vector<std::uint16_t> entries;
  entries.reserve(table.size());
  for (const auto& v : table) {
    const auto x = v.get<std::uint64_t>();
    if (x >= order) throw std::invalid_argument("group document: table entry out of range");
    entries.push_back(static_cast<std::uint16_t>(x));
  }
  return Group(order, std::move(entries), j.at("recipe").get<std::string>());
}

inline Json to_json(const GroupSummary& s) {
  return Json{{"recipe", s.recipe}, {"d_min", s.d_min}, {"spectrum", to_json(s.spectrum)}, {"center", s.center}};
}

inline Json to_json(const VerificationReport& r) {
  Json groups = Json::array();
  for (const auto& g : r.groups) groups.push_back(to_json(g));
  return Json{{"n", r.n},
              {"predicate_verdict", r.predicate_verdict},
              {"failure_reason", to_json(r.failure_reason)},
              {"groups", std::move(groups)},
              {"oracle_verdict", r.oracle_verdict},
              {"completeness", to_string(r.completeness)},
              {"agree", r.agree},
              {"basis", r.basis}};
}

inline VerificationReport report_from_json(const Json& j) {
  VerificationReport r;
  r.n = j.at("n").get<std::uint64_t>();
  r.predicate_verdict = j.at("predicate_verdict").get<bool>();
  r.failure_reason = failure_reason_from_json(j.at("failure_reason"));
  for (const auto& g : j.at("groups"))
    r.groups.push_back({g.at("recipe").get<std::string>(), g.at("d_min").get<unsigned>(),
                        spectrum_from_json(g.at("spectrum")), g.at("center").get<std::size_t>()});
  r.oracle_verdict = j.at("oracle_verdict").get<bool>();
  const std::string tier = j.at("completeness").get<std::string>();
  if (tier != "FULL" && tier != "SAMPLE") throw std::invalid_argument("unknown completeness '" + tier + "'");
  r.completeness = tier == "FULL" ? Completeness::Full : Completeness::Sample;
  r.agree = j.at("agree").get<bool>();
  r.basis = j.at("basis").get<std::string>();
  return r;
}

/// Undirected DOT graph; every element is a vertex, the recipe goes in a comment.
inline std::string to_dot(const GeneratingGraph& graph, const std::string& recipe) {
  std::ostringstream out;
  out << "// generating graph of " << recipe << "\n";
  out << "graph G {\n";
  for (std::size_t v = 0; v < graph.order; ++v) out << "  " << v << ";\n";
  for (const auto& [a, b] : graph.edges) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace twogen
