#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qburst/codec.hpp"
#include "qburst/dense.hpp"
#include "qburst/errors.hpp"
#include "qburst/harness.hpp"
#include "qburst/params.hpp"
#include "qburst/pattern.hpp"

namespace py = pybind11;
using namespace qburst;

namespace {

Word to_word(const std::vector<int>& symbols, int q) {
  std::vector<Symbol> s;
  s.reserve(symbols.size());
  for (int v : symbols) {
    if (v < 0 || v >= q) throw InvalidArgument("symbol " + std::to_string(v) + " outside alphabet");
    s.push_back(static_cast<Symbol>(v));
  }
  return Word(q, std::move(s));
}

std::vector<int> from_word(const Word& w) { return {w.begin(), w.end()}; }

}  // namespace

PYBIND11_MODULE(_qburst, m) {
  m.doc() = "Codes correcting a single burst of at most t deletions";

  auto& error = py::register_exception<Error>(m, "Error");
  py::register_exception<DecodeFailure>(m, "DecodeFailure", error.ptr());
  py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
  py::register_exception<InfeasibleParameters>(m, "InfeasibleParameters", PyExc_ValueError);

  py::class_<Params>(m, "Params")
      .def_readonly("q", &Params::q)
      .def_readonly("t", &Params::t)
      .def_readonly("n", &Params::n)
      .def_readonly("delta", &Params::delta)
      .def_readonly("rho", &Params::rho)
      .def_readonly("sketch_width", &Params::sketch_width)
      .def_readonly("redundancy", &Params::redundancy)
      .def_property_readonly("codeword_length", &Params::codeword_length)
      .def_property_readonly("mode", [](const Params& p) { return to_string(p.mode); })
      .def_property_readonly("sketch_mode", [](const Params& p) { return to_string(p.sketch_mode); })
      .def("to_text", &Params::to_text)
      .def("to_json", [](const Params& p) { return params_json(p); })
      .def("__repr__", [](const Params& p) {
        return "Params(q=" + std::to_string(p.q) + ", t=" + std::to_string(p.t) +
               ", n=" + std::to_string(p.n) + ", delta=" + std::to_string(p.delta) +
               ", redundancy=" + std::to_string(p.redundancy) + ")";
      });

  m.def(
      "derive_params",
      [](int q, int t, std::int64_t n, const std::string& mode, const std::string& sketch_mode) {
        return derive_params(q, t, n, parse_param_mode(mode), parse_sketch_mode(sketch_mode));
      },
      py::arg("q"), py::arg("t"), py::arg("n"), py::arg("mode") = "compact",
      py::arg("sketch_mode") = "compressed");
  m.def("parse_params", [](const std::string& text) { return parse_params_text(text); });
  m.def("smallest_feasible_n", &smallest_feasible_n, py::arg("q"), py::arg("t"));

  m.def("encode", [](const std::vector<int>& u, const Params& p) {
    py::gil_scoped_release release;
    return from_word(encode(to_word(u, p.q), p));
  });
  m.def("decode", [](const std::vector<int>& y, const Params& p) {
    py::gil_scoped_release release;
    return from_word(decode(to_word(y, p.q), p));
  });
  m.def("enc_den", [](const std::vector<int>& u, const Params& p) {
    return from_word(enc_den(to_word(u, p.q), p));
  });
  m.def("dec_den", [](const std::vector<int>& x, const Params& p) {
    return from_word(dec_den(to_word(x, p.q), p));
  });
  m.def("is_dense", [](const std::vector<int>& x, const Params& p) {
    return is_dense(to_word(x, p.q), p);
  });
  m.def("delete_burst", [](const std::vector<int>& x, std::int64_t pos, std::int64_t len) {
    int q = 2;
    for (int v : x) q = std::max(q, v + 1);
    return from_word(delete_burst(to_word(x, q), pos, len));
  });

  m.def(
      "run_campaign",
      [](const Params& p, std::uint64_t seed, std::int64_t messages, const std::string& bursts,
         int threads, bool inject_fault, bool with_timings) {
        CampaignSpec spec;
        spec.params = p;
        spec.seed = seed;
        spec.messages = messages;
        spec.bursts = BurstCoverage::parse(bursts);
        spec.threads = threads;
        spec.inject_fault = inject_fault;
        py::gil_scoped_release release;
        return report_json(run_campaign(spec), with_timings);
      },
      py::arg("params"), py::arg("seed") = 1, py::arg("messages") = 10,
      py::arg("bursts") = "exhaustive", py::arg("threads") = 1, py::arg("inject_fault") = false,
      py::arg("with_timings") = true);
}
