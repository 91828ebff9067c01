#include "zimin/avoidance.hpp"
#include "zimin/borders.hpp"
#include "zimin/core.hpp"
#include "zimin/error.hpp"
#include "zimin/fibonacci.hpp"
#include "zimin/oracle.hpp"
#include "zimin/pattern_search.hpp"

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace zimin;

namespace {

py::dict occurrence_dict(const Occurrence& occ) {
  py::dict d;
  d["start"] = occ.start;
  d["end"] = occ.end;
  d["rank"] = occ.rank;
  d["morphism"] = occ.witness.images;
  return d;
}

}  // namespace

PYBIND11_MODULE(_zimin, m) {
  m.doc() = "Zimin types, Zimin pattern search, Fibonacci-word queries and avoidance bounds";

  auto error = py::register_exception<Error>(m, "ZiminError", PyExc_RuntimeError);
  py::register_exception<InvalidArgument>(m, "InvalidArgument", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<BorderTracker>(m, "BorderTracker")
      .def(py::init<>())
      .def("push",
           [](BorderTracker& t, const std::string& c) {
             if (c.size() != 1) throw InvalidArgument("push expects a single symbol");
             const auto s = t.push(c[0]);
             return py::make_tuple(s.border, s.short_border, s.ztype);
           })
      .def("reset", &BorderTracker::reset)
      .def("__len__", &BorderTracker::size)
      .def_property_readonly("ztype", py::overload_cast<>(&BorderTracker::ztype, py::const_))
      .def_property_readonly("increments", &BorderTracker::increments)
      .def_property_readonly("decrements", &BorderTracker::decrements);

  m.def("border_array", &border_array, py::arg("word"));
  m.def("short_border_array", &short_border_array, py::arg("word"));

  m.def("ztype", &ztype, py::arg("word"));
  m.def("ztype_prefixes", &ztype_prefixes, py::arg("word"));
  m.def("zimin_word", [](int k) { return zimin_word(k).symbols; }, py::arg("k"));
  m.def("decompose", [](const std::string& w, int k) { return decompose(w, k).images; }, py::arg("word"),
        py::arg("k"));
  m.def(
      "apply_morphism",
      [](const std::vector<int>& pattern, const std::vector<Word>& images) {
        return apply_morphism(pattern, Morphism{images});
      },
      py::arg("pattern"), py::arg("images"));
  m.def("max_sequence_value", &max_sequence_value, py::arg("i"));

  m.def(
      "search_zimin",
      [](const std::string& w, int k) -> py::object {
        const auto occ = search_zimin(w, k);
        return occ ? py::object(occurrence_dict(*occ)) : py::none();
      },
      py::arg("word"), py::arg("k"));
  m.def(
      "max_factor_ztype",
      [](const std::string& w) {
        const auto r = max_factor_ztype(w);
        return py::make_tuple(r.rank, r.occurrence ? py::object(occurrence_dict(*r.occurrence)) : py::none());
      },
      py::arg("word"));

  m.def("zeckendorf", [](std::uint64_t n) { return zeckendorf(n).digits(); }, py::arg("n"));
  m.def("from_fib", &from_fib, py::arg("digits"));
  m.def("psi", [](const std::string& digits) { return psi(FibRep::parse(digits)); }, py::arg("digits"));
  m.def("zfib", [](std::uint64_t n) { return zfib(n); }, py::arg("n"));
  m.def("sb_fib", &sb_fib, py::arg("n"));
  m.def("fib_prefix", [](std::size_t n) { return fib_prefix(n); }, py::arg("length"));
  m.def(
      "zfib_array",
      [](std::size_t n) {
        const auto a = zfib_array(n);
        return std::vector<int>(a.begin(), a.end());
      },
      py::arg("n"));
  m.def(
      "fib_embedding",
      [](std::uint64_t n) {
        const auto e = fib_embedding(n);
        return py::make_tuple(e.rank, e.word_index);
      },
      py::arg("n"));
  m.def("fib_ratio", &fib_ratio, py::arg("n"));

  m.def("is_minimal", &is_minimal, py::arg("word"), py::arg("n"));
  m.def(
      "enumerate_minimal",
      [](int n, int k, unsigned threads) {
        SearchLimits lim;
        lim.threads = threads;
        std::vector<Word> words;
        enumerate_minimal(n, k, [&](std::string_view w) { words.emplace_back(w); }, lim);
        return words;
      },
      py::arg("n"), py::arg("k"), py::arg("threads") = 1);
  m.def(
      "f_exact",
      [](int n, int k, unsigned threads) {
        SearchLimits lim;
        lim.threads = threads;
        const auto s = f_exact(n, k, lim);
        return py::make_tuple(s.f_value, s.witness.value_or(""));
      },
      py::arg("n"), py::arg("k"), py::arg("threads") = 1);
  m.def("m2_formula", &m2_formula, py::arg("k"));
  m.def("f_upper_bound", &f_upper_bound, py::arg("n_next"), py::arg("f_prev"), py::arg("m_prev"));
  m.def("f3_general_bound", &f3_general_bound, py::arg("r"));
  m.def(
      "f_bound",
      [](int n, int k) {
        const auto s = f_bound(n, k);
        py::dict d;
        d["f"] = s.f_value;
        d["exact"] = s.exact;
        d["method"] = to_string(s.method);
        return d;
      },
      py::arg("n"), py::arg("k"));

  m.def("ztype_brute", &oracle::ztype_brute, py::arg("word"));
  m.def("embeds_zimin_brute", &oracle::embeds_zimin_brute, py::arg("word"), py::arg("k"));
}
