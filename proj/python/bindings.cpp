// Python bindings: commands take and return documents as JSON text; the
// package layer turns them into dicts and Fractions.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mkdv/commands.hpp"

namespace py = pybind11;
using namespace mkdv;

namespace {

std::vector<Rat> parse_rats(const std::vector<std::string>& c) {
  std::vector<Rat> out;
  for (const auto& s : c) out.push_back(Rat::parse(s));
  return out;
}

// Validates a stored document and returns it re-serialized in canonical form.
std::pair<std::string, std::string> read_document(const std::string& text) {
  const Document doc = parse_document(text);
  if (doc.kind == "tuple") return {doc.kind, to_json(tuple_from_json(doc.data)).dump()};
  if (doc.kind == "oper") return {doc.kind, to_json(oper_from_json(doc.data)).dump()};
  return {doc.kind, to_json(report_from_json(doc.data)).dump()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact A(2)_2n mKdV cells, Miura opers and flows";

  auto base = py::register_exception<Error>(m, "Error");
  auto pre = py::register_exception<PreconditionError>(m, "PreconditionError", base.ptr());
  py::register_exception<IdentityViolation>(m, "IdentityViolation", base.ptr());
  py::register_exception<SchemaError>(m, "SchemaError", base.ptr());
  (void)pre;

  m.def("admissible_flow", &admissible_flow, py::arg("n"), py::arg("r"));
  m.def(
      "sample_parameters",
      [](unsigned long long seed, size_t count) {
        std::vector<std::string> out;
        for (const auto& q : sample_parameters(seed, count)) out.push_back(q.to_string());
        return out;
      },
      py::arg("seed"), py::arg("count"));
  m.def(
      "generate",
      [](int n, const GenSequence& seq, const std::vector<std::string>& c) {
        const auto rats = parse_rats(c);
        py::gil_scoped_release release;
        return to_json(run_generate(n, seq, rats)).dump();
      },
      py::arg("n"), py::arg("J"), py::arg("c"));
  m.def(
      "verify",
      [](int n, const GenSequence& seq, const std::vector<std::string>& c, const std::vector<int>& rs,
         std::optional<int> depth) {
        const auto rats = parse_rats(c);
        py::gil_scoped_release release;
        return to_json(run_verify(n, seq, rats, rs, depth)).dump();
      },
      py::arg("n"), py::arg("J"), py::arg("c"), py::arg("r"), py::arg("depth") = py::none());
  m.def(
      "export_document", [](const std::string& data, const std::string& kind) {
        return export_document(Json::parse(data), kind);
      },
      py::arg("data"), py::arg("kind"));
  m.def("read_document", &read_document, py::arg("text"));
}
