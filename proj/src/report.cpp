#include "mkdv/report.hpp"

#include <sstream>

namespace mkdv {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T, class F>
std::vector<T> array_of(const Json& j, F&& item, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array");
  std::vector<T> out;
  for (const auto& e : j) out.push_back(item(e));
  return out;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw SchemaError(std::string(what) + " must be an integer");
  return j.get<int>();
}

bool bool_from_json(const Json& j, const char* what) {
  if (!j.is_boolean()) throw SchemaError(std::string(what) + " must be a boolean");
  return j.get<bool>();
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <class T, class F>
std::string join_map(const std::vector<T>& xs, F&& f, const char* sep = ",") {
  std::vector<std::string> parts;
  for (const auto& x : xs) parts.push_back(f(x));
  return join(parts, sep);
}

}  // namespace

Json to_json(const Rat& q) { return q.to_string(); }

Json to_json(const Poly<Rat>& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Fn& f) { return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const DiagVec& v) {
  Json out = Json::array();
  for (const auto& f : v) out.push_back(to_json(f));
  return out;
}

Json to_json(const PolyTuple<Rat>& y) {
  Json polys = Json::array();
  for (const auto& p : y.y) polys.push_back(to_json(p));
  return Json{{"n", y.n()}, {"y", polys}};
}

Json to_json(const MiuraOper& op) { return Json{{"n", op.dims().n()}, {"v", to_json(op.v())}}; }

Json to_json(const Report& rep) {
  Json out;
  out["command"] = rep.command;
  out["inputs"] = Json{{"n", rep.n}, {"J", rep.sequence}, {"c", Json::array()}, {"r", rep.r}};
  for (const auto& c : rep.c) out["inputs"]["c"].push_back(to_json(c));
  if (rep.seed) out["inputs"]["seed"] = *rep.seed;
  out["status"] = rep.status;
  if (!rep.message.empty()) out["message"] = rep.message;
  Json outputs = Json::object();
  if (rep.tuple) {
    outputs["tuple"] = to_json(*rep.tuple);
    outputs["degrees"] = rep.tuple->degrees();
  }
  if (!rep.epsilons.empty()) {
    outputs["epsilon"] = Json::array();
    for (const auto& e : rep.epsilons) outputs["epsilon"].push_back(to_json(e));
  }
  if (rep.oper) outputs["oper"] = to_json(*rep.oper);
  if (!rep.flows.empty()) {
    outputs["flows"] = Json::array();
    for (const auto& f : rep.flows) {
      Json g = Json::array();
      for (const auto& x : f.gamma) g.push_back(to_json(x));
      outputs["flows"].push_back(Json{{"r", f.r},
                                      {"flow", to_json(f.flow)},
                                      {"gamma", g},
                                      {"residual_zero", f.residual_zero},
                                      {"a1_a2_agree", f.a1_a2_agree},
                                      {"kdv_compatible", f.kdv_compatible}});
    }
  }
  out["outputs"] = outputs;
  if (rep.seconds) out["timing"] = *rep.seconds;
  return out;
}

Rat rat_from_json(const Json& j) {
  if (!j.is_string()) throw SchemaError("rational must be a \"p/q\" string");
  return Rat::parse(j.get<std::string>());
}

Poly<Rat> poly_from_json(const Json& j) {
  auto coeffs = array_of<Rat>(j, rat_from_json, "polynomial");
  if (!coeffs.empty() && coeffs.back().is_zero()) throw SchemaError("polynomial has a zero leading coefficient");
  return Poly<Rat>(std::move(coeffs));
}

Fn fn_from_json(const Json& j) {
  const Poly<Rat> num = poly_from_json(field(j, "num"));
  const Poly<Rat> den = poly_from_json(field(j, "den"));
  if (den.is_zero()) throw SchemaError("rational function with zero denominator");
  const Fn f(num, den);
  if (!(f.num() == num) || !(f.den() == den)) throw SchemaError("rational function is not in canonical form");
  return f;
}

DiagVec diag_from_json(const Json& j) { return array_of<Fn>(j, fn_from_json, "diagonal vector"); }

PolyTuple<Rat> tuple_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  if (n < 2) throw SchemaError("rank n must be at least 2");
  PolyTuple<Rat> y{array_of<Poly<Rat>>(field(j, "y"), poly_from_json, "tuple")};
  if (y.n() != n) throw SchemaError("tuple must have n+1 polynomials");
  for (const auto& p : y.y) {
    if (p.is_zero() || !p.is_monic()) throw SchemaError("tuple polynomials must be monic");
  }
  return y;
}

MiuraOper oper_from_json(const Json& j) {
  const int n = int_from_json(field(j, "n"), "n");
  if (n < 2) throw SchemaError("rank n must be at least 2");
  DiagVec v = diag_from_json(field(j, "v"));
  if (static_cast<int>(v.size()) != 2 * n + 1) throw SchemaError("oper potential must have 2n+1 entries");
  try {
    return MiuraOper(AlgebraDims(n), std::move(v));
  } catch (const DomainError& e) {
    throw SchemaError(std::string("invalid oper: ") + e.what());
  }
}

Report report_from_json(const Json& j) {
  Report rep;
  const Json& cmd = field(j, "command");
  if (!cmd.is_string()) throw SchemaError("command must be a string");
  rep.command = cmd.get<std::string>();
  const Json& in = field(j, "inputs");
  rep.n = int_from_json(field(in, "n"), "n");
  rep.sequence = array_of<int>(field(in, "J"), [](const Json& e) { return int_from_json(e, "J entry"); }, "J");
  rep.c = array_of<Rat>(field(in, "c"), rat_from_json, "c");
  rep.r = array_of<int>(field(in, "r"), [](const Json& e) { return int_from_json(e, "r entry"); }, "r");
  if (in.contains("seed")) {
    if (!in.at("seed").is_number_unsigned()) throw SchemaError("seed must be a nonnegative integer");
    rep.seed = in.at("seed").get<unsigned long long>();
  }
  const Json& st = field(j, "status");
  if (!st.is_string()) throw SchemaError("status must be a string");
  rep.status = st.get<std::string>();
  if (rep.status != "ok" && rep.status != "falsified" && rep.status != "error") throw SchemaError("unknown status");
  if (j.contains("message")) rep.message = j.at("message").get<std::string>();
  const Json& out = field(j, "outputs");
  if (out.contains("tuple")) {
    rep.tuple = tuple_from_json(out.at("tuple"));
    if (out.contains("degrees") && out.at("degrees") != Json(rep.tuple->degrees())) {
      throw SchemaError("degree vector does not match the tuple");
    }
  }
  if (out.contains("epsilon")) rep.epsilons = array_of<Rat>(out.at("epsilon"), rat_from_json, "epsilon");
  if (out.contains("oper")) rep.oper = oper_from_json(Json{{"n", rep.n}, {"v", out.at("oper")}}).v();
  if (out.contains("flows")) {
    rep.flows = array_of<FlowRecord>(
        out.at("flows"),
        [](const Json& e) {
          FlowRecord f;
          f.r = int_from_json(field(e, "r"), "r");
          f.flow = diag_from_json(field(e, "flow"));
          f.gamma = array_of<Rat>(field(e, "gamma"), rat_from_json, "gamma");
          f.residual_zero = bool_from_json(field(e, "residual_zero"), "residual_zero");
          f.a1_a2_agree = bool_from_json(field(e, "a1_a2_agree"), "a1_a2_agree");
          f.kdv_compatible = bool_from_json(field(e, "kdv_compatible"), "kdv_compatible");
          return f;
        },
        "flows");
  }
  if (j.contains("timing")) {
    if (!j.at("timing").is_number()) throw SchemaError("timing must be a number");
    rep.seconds = j.at("timing").get<double>();
  }
  return rep;
}

std::string to_text(const Report& rep) {
  std::ostringstream os;
  auto rat = [](const Rat& q) { return q.to_string(); };
  auto num = [](int v) { return std::to_string(v); };
  os << "command: " << rep.command << "\n";
  os << "n: " << rep.n << "\n";
  os << "J: " << join_map(rep.sequence, num) << "\n";
  os << "c: " << join_map(rep.c, rat) << "\n";
  if (!rep.r.empty()) os << "r: " << join_map(rep.r, num) << "\n";
  if (rep.seed) os << "seed: " << *rep.seed << "\n";
  os << "status: " << rep.status << "\n";
  if (!rep.message.empty()) os << "message: " << rep.message << "\n";
  if (rep.tuple) {
    for (size_t i = 0; i < rep.tuple->y.size(); ++i) os << "y" << i << ": " << rep.tuple->y[i].to_string() << "\n";
    os << "degrees: " << join_map(rep.tuple->degrees(), num) << "\n";
  }
  if (!rep.epsilons.empty()) os << "epsilon: " << join_map(rep.epsilons, rat) << "\n";
  if (rep.oper) {
    for (size_t k = 0; k < rep.oper->size(); ++k) os << "v" << k + 1 << ": " << (*rep.oper)[k].to_string() << "\n";
  }
  for (const auto& f : rep.flows) {
    os << "flow r=" << f.r << ":";
    for (const auto& x : f.flow) os << " " << x.to_string() << ";";
    os << "\n";
    os << "  gamma: " << (f.gamma.empty() ? std::string("none") : join_map(f.gamma, rat)) << "\n";
    os << "  residual_zero: " << (f.residual_zero ? "yes" : "no") << "\n";
    os << "  a1_a2_agree: " << (f.a1_a2_agree ? "yes" : "no") << "\n";
    os << "  kdv_compatible: " << (f.kdv_compatible ? "yes" : "no") << "\n";
  }
  if (rep.seconds) os << "timing: " << *rep.seconds << "\n";
  return os.str();
}

std::string export_document(const Json& data, const std::string& kind) {
  return Json{{"kind", kind}, {"data", data}}.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("malformed document: ") + e.what());
  }
  const Json& kind = field(j, "kind");
  if (!kind.is_string()) throw SchemaError("kind must be a string");
  const std::string k = kind.get<std::string>();
  if (k != "tuple" && k != "oper" && k != "report") throw SchemaError("unknown document kind '" + k + "'");
  return {k, field(j, "data")};
}

}  // namespace mkdv
