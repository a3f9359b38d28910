#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "mkdv/miura.hpp"

namespace mkdv {

using Json = nlohmann::ordered_json;

/// One flow index inside a verify report.
struct FlowRecord {
  int r = 1;
  DiagVec flow;
  std::vector<Rat> gamma;
  bool residual_zero = false;
  bool a1_a2_agree = false;
  bool kdv_compatible = false;

  friend bool operator==(const FlowRecord&, const FlowRecord&) = default;
};

struct Report {
  std::string command;
  int n = 2;
  GenSequence sequence;
  std::vector<Rat> c;
  std::vector<int> r;
  std::optional<unsigned long long> seed;
  std::string status = "ok";  // ok | falsified | error
  std::string message;
  std::optional<PolyTuple<Rat>> tuple;
  std::vector<Rat> epsilons;
  std::optional<DiagVec> oper;
  std::vector<FlowRecord> flows;
  std::optional<double> seconds;

  friend bool operator==(const Report&, const Report&) = default;
};

Json to_json(const Rat& q);
Json to_json(const Poly<Rat>& p);
Json to_json(const Fn& f);
Json to_json(const DiagVec& v);
Json to_json(const PolyTuple<Rat>& y);
Json to_json(const MiuraOper& op);
Json to_json(const Report& rep);

/// Parsers raise SchemaError on any malformed or out-of-contract input,
/// including non-monic tuples and opers that break the twisted symmetry.
Rat rat_from_json(const Json& j);
Poly<Rat> poly_from_json(const Json& j);
Fn fn_from_json(const Json& j);
DiagVec diag_from_json(const Json& j);
PolyTuple<Rat> tuple_from_json(const Json& j);
MiuraOper oper_from_json(const Json& j);
Report report_from_json(const Json& j);

/// Human-readable rendering; one "key: value" line per field.
std::string to_text(const Report& rep);

/// A stored object: {"kind": "tuple" | "oper" | "report", "data": ...}.
std::string export_document(const Json& data, const std::string& kind);
struct Document {
  std::string kind;
  Json data;
};
Document parse_document(const std::string& text);

}  // namespace mkdv
