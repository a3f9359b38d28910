// Command-line front end: generate cells, verify flows and tangency, and move
// tuples/opers/reports through the exact text format.
//
// Exit codes: 0 ok, 1 usage or format, 2 mathematical precondition violated,
// 3 identity falsified.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mkdv/commands.hpp"

namespace {

using namespace mkdv;

constexpr int kExitUsage = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitFalsified = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw UsageError("empty entry in list '" + s + "'");
    out.push_back(item);
  }
  return out;
}

std::vector<int> int_list(const std::string& s) {
  std::vector<int> out;
  for (const auto& item : split_list(s)) {
    size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + item + "'");
    }
    if (pos != item.size()) throw UsageError("not an integer: '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rat> rat_list(const std::string& s) {
  std::vector<Rat> out;
  for (const auto& item : split_list(s)) out.push_back(Rat::parse(item));
  return out;
}

struct Options {
  int n = 2;
  std::string seq;
  std::string c;
  std::string r;
  std::optional<int> depth;
  std::optional<unsigned long long> seed;
  std::string out;
  std::string format = "text";
  std::string what = "tuple";
  std::string path;
  bool timing = false;
};

void emit(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + opt.out + "'");
  f << text;
}

std::string render(const Options& opt, const Report& rep) {
  if (opt.format == "structured") return to_json(rep).dump(2) + "\n";
  return to_text(rep);
}

// Parameters from -c, or drawn from --seed when -c is absent.
std::vector<Rat> parameters(const Options& opt, size_t m, std::optional<unsigned long long>& seed_used) {
  if (!opt.c.empty()) {
    auto c = rat_list(opt.c);
    if (c.size() != m) throw UsageError("-c needs one value per entry of -J");
    return c;
  }
  if (m == 0) return {};
  if (!opt.seed) throw UsageError("either -c or --seed is required");
  seed_used = opt.seed;
  return sample_parameters(*opt.seed, m);
}

GenSequence sequence(const Options& opt) {
  if (opt.seq.empty()) return {};
  return int_list(opt.seq);
}

int finish(const Options& opt, Report rep, std::chrono::steady_clock::time_point start) {
  if (opt.timing) rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  emit(opt, render(opt, rep));
  return rep.status == "ok" ? 0 : kExitFalsified;
}

int cmd_generate(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const GenSequence seq = sequence(opt);
  std::optional<unsigned long long> seed;
  const auto c = parameters(opt, seq.size(), seed);
  Report rep = run_generate(opt.n, seq, c);
  rep.seed = seed;
  return finish(opt, std::move(rep), start);
}

int cmd_verify(const Options& opt) {
  const auto start = std::chrono::steady_clock::now();
  const GenSequence seq = sequence(opt);
  if (opt.r.empty()) throw UsageError("-r is required");
  const auto rs = int_list(opt.r);
  for (int r : rs) {
    if (!admissible_flow(opt.n, r)) {
      throw UsageError("flow index " + std::to_string(r) + " is not admissible (needs r odd, r > 0, r != 2n+1 mod 4n+2)");
    }
  }
  if (opt.depth) {
    for (int r : rs) {
      if (*opt.depth < r) throw UsageError("--depth must be at least every r");
    }
  }
  std::optional<unsigned long long> seed;
  const auto c = parameters(opt, seq.size(), seed);
  Report rep = run_verify(opt.n, seq, c, rs, opt.depth);
  rep.seed = seed;
  return finish(opt, std::move(rep), start);
}

int cmd_export(const Options& opt) {
  const GenSequence seq = sequence(opt);
  std::optional<unsigned long long> seed;
  const auto c = parameters(opt, seq.size(), seed);
  const Report rep = run_generate(opt.n, seq, c);
  std::string text;
  if (opt.what == "tuple") {
    text = export_document(to_json(*rep.tuple), "tuple");
  } else if (opt.what == "oper") {
    text = export_document(to_json(MiuraOper(AlgebraDims(opt.n), *rep.oper)), "oper");
  } else {
    Report r = rep;
    r.seed = seed;
    text = export_document(to_json(r), "report");
  }
  emit(opt, text);
  return 0;
}

int cmd_import(const Options& opt) {
  std::ifstream f(opt.path, std::ios::binary);
  if (!f) throw UsageError("cannot read '" + opt.path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  const Document doc = parse_document(ss.str());
  std::string text;
  if (doc.kind == "tuple") {
    const PolyTuple<Rat> y = tuple_from_json(doc.data);
    if (opt.format == "structured") {
      text = export_document(to_json(y), "tuple");
    } else {
      for (size_t i = 0; i < y.y.size(); ++i) text += "y" + std::to_string(i) + ": " + y.y[i].to_string() + "\n";
      text += std::string("generic: ") + (is_generic(y) ? "yes" : "no") + "\n";
      if (is_generic(y)) text += std::string("fertile: ") + (fertility_identity(y) ? "yes" : "no") + "\n";
    }
  } else if (doc.kind == "oper") {
    const MiuraOper op = oper_from_json(doc.data);
    if (opt.format == "structured") {
      text = export_document(to_json(op), "oper");
    } else {
      for (size_t k = 0; k < op.v().size(); ++k) text += "v" + std::to_string(k + 1) + ": " + op.v()[k].to_string() + "\n";
    }
  } else {
    const Report rep = report_from_json(doc.data);
    text = opt.format == "structured" ? export_document(to_json(rep), "report") : to_text(rep);
  }
  emit(opt, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact A(2)_2n mKdV cells, Miura opers and flows"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub, bool flows) {
    sub->add_option("-n", opt.n, "rank n (>= 2)")->check(CLI::Range(2, 64));
    sub->add_option("-J", opt.seq, "generation directions, comma separated");
    sub->add_option("-c", opt.c, "generation parameters p/q, comma separated");
    sub->add_option("--seed", opt.seed, "draw -c from this seed when -c is absent");
    sub->add_option("--out", opt.out, "write to this file instead of stdout");
    if (flows) {
      sub->add_option("-r", opt.r, "flow indices, comma separated");
      sub->add_option("--depth", opt.depth, "dressing depth (default: r)");
    }
  };

  auto* gen = app.add_subcommand("generate", "tuple, degrees and oper of a generated cell point");
  common(gen, false);
  auto* ver = app.add_subcommand("verify", "flows, tangency and Miura/KdV compatibility");
  common(ver, true);
  for (auto* sub : {gen, ver}) {
    sub->add_option("--format", opt.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
    sub->add_flag("--timing", opt.timing, "record wall time in the report");
  }
  auto* exp = app.add_subcommand("export", "write a tuple, oper or report document");
  common(exp, false);
  exp->add_option("--what", opt.what, "tuple, oper or report")->check(CLI::IsMember({"tuple", "oper", "report"}));
  auto* imp = app.add_subcommand("import", "read and validate a document");
  imp->add_option("path", opt.path, "document to read")->required();
  imp->add_option("--format", opt.format, "text or structured")->check(CLI::IsMember({"text", "structured"}));
  imp->add_option("--out", opt.out, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*gen) return cmd_generate(opt);
    if (*ver) return cmd_verify(opt);
    if (*exp) return cmd_export(opt);
    return cmd_import(opt);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SchemaError& e) {
    std::cerr << "format error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kExitPrecondition;
  } catch (const IdentityViolation& e) {
    std::cerr << "identity falsified: " << e.what() << "\n";
    return kExitFalsified;
  }
}
