#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "altperm/decompose.hpp"
#include "altperm/enumerate.hpp"
#include "altperm/formulas.hpp"
#include "altperm/perm_core.hpp"

namespace py = pybind11;
using namespace pybind11::literals;

// Permutations cross the boundary as lists of ints, counts as Python ints.
namespace pybind11::detail {

template <>
struct type_caster<altperm::Permutation> {
  PYBIND11_TYPE_CASTER(altperm::Permutation, const_name("list[int]"));

  bool load(handle src, bool convert) {
    make_caster<std::vector<int>> values;
    if (!values.load(src, convert)) return false;
    value = altperm::Permutation(cast_op<std::vector<int>&&>(std::move(values)));
    return true;
  }

  static handle cast(const altperm::Permutation& w, return_value_policy, handle) {
    py::list out;
    for (int v : w.entries()) out.append(v);
    return out.release();
  }
};

template <>
struct type_caster<altperm::BigCount> {
  PYBIND11_TYPE_CASTER(altperm::BigCount, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = altperm::BigCount(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const altperm::BigCount& v, return_value_policy, handle) {
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};

}  // namespace pybind11::detail

namespace {

using namespace altperm;

AlternationClass to_class(const std::string& text) { return parse_class(text); }

Pattern to_pattern(const Permutation& letters) { return Pattern(letters); }

Statistic to_statistic(const std::string& text) {
  if (text == "total") return Statistic::Total;
  if (text == "ends_in_largest") return Statistic::EndsInLargest;
  if (text == "begins_with_smallest") return Statistic::BeginsWithSmallest;
  throw std::invalid_argument("unknown statistic '" + text + "'");
}

CandidateRole to_role(const std::string& text) {
  if (text == "u_candidate") return CandidateRole::UCandidate;
  if (text == "v_candidate") return CandidateRole::VCandidate;
  throw std::invalid_argument("unknown role '" + text + "'");
}

GenerationFilter make_filter(const std::string& cls, std::size_t n,
                             std::optional<Permutation> avoid,
                             std::optional<std::pair<Permutation, std::uint64_t>> exactly,
                             std::optional<bool> ends_in_largest,
                             std::optional<bool> begins_with_smallest) {
  GenerationFilter f;
  f.alternation = to_class(cls);
  f.length = n;
  if (avoid) f.avoid = Pattern(*avoid);
  if (exactly) f.exact_occurrences = OccurrenceConstraint{Pattern(exactly->first), exactly->second};
  f.ends_in_largest = ends_in_largest;
  f.begins_with_smallest = begins_with_smallest;
  return f;
}

std::vector<std::string> class_list(const ClassSet& s) {
  std::vector<std::string> out;
  if (s.up_down) out.emplace_back("UD");
  if (s.down_up) out.emplace_back("DU");
  return out;
}

}  // namespace

PYBIND11_MODULE(_altperm, m) {
  m.doc() = "Alternating permutations containing 321 or 123 exactly once";

  py::register_exception<OutOfValidityRange>(m, "OutOfValidityRange", PyExc_ValueError);
  py::register_exception<NotExactlyOne>(m, "NotExactlyOne", PyExc_ValueError);
  py::register_exception<NotAlternating>(m, "NotAlternating", PyExc_ValueError);
  py::register_exception<InvalidRecord>(m, "InvalidRecord", PyExc_ValueError);
  py::register_exception<InvariantViolation>(m, "InvariantViolation", PyExc_RuntimeError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);

  // perm_core
  m.def("classify", [](const Permutation& w) { return class_list(classify(w)); }, "w"_a);
  m.def("count_occurrences",
        [](const Permutation& w, const Permutation& p) { return count_occurrences(w, to_pattern(p)); },
        "w"_a, "pattern"_a);
  m.def(
      "find_occurrences",
      [](const Permutation& w, const Permutation& p, std::optional<std::size_t> limit) {
        std::vector<std::vector<std::size_t>> out;
        for (auto& occ : find_occurrences(w, to_pattern(p), limit.value_or(kUnlimited)))
          out.push_back(std::move(occ.positions));
        return out;
      },
      "w"_a, "pattern"_a, "limit"_a = py::none());
  m.def("reverse", &reverse, "w"_a);
  m.def("complement", &complement, "w"_a);
  m.def("standardize", [](const std::vector<int>& values) { return standardize(values); },
        "values"_a);
  m.def(
      "boundary_statistics",
      [](const Permutation& w) {
        const auto s = boundary_statistics(w);
        return py::dict("ends_in_largest"_a = s.ends_in_largest,
                        "begins_with_smallest"_a = s.begins_with_smallest);
      },
      "w"_a);

  // enumerate
  py::class_<PermutationStream>(m, "PermutationStream")
      .def("__iter__", [](PermutationStream& s) -> PermutationStream& { return s; })
      .def("__next__", [](PermutationStream& s) {
        auto w = s.next();
        if (!w) throw py::stop_iteration();
        return *w;
      });
  m.def(
      "generate",
      [](const std::string& cls, std::size_t n, std::optional<Permutation> avoid,
         std::optional<std::pair<Permutation, std::uint64_t>> exactly, std::optional<bool> e,
         std::optional<bool> b) { return generate(make_filter(cls, n, avoid, exactly, e, b)); },
      "alternation"_a, "n"_a, "avoid"_a = py::none(), "exactly"_a = py::none(),
      "ends_in_largest"_a = py::none(), "begins_with_smallest"_a = py::none());
  m.def(
      "count",
      [](const std::string& cls, std::size_t n, std::optional<Permutation> avoid,
         std::optional<std::pair<Permutation, std::uint64_t>> exactly, std::optional<bool> e,
         std::optional<bool> b) {
        const auto f = make_filter(cls, n, avoid, exactly, e, b);
        py::gil_scoped_release release;
        return count(f);
      },
      "alternation"_a, "n"_a, "avoid"_a = py::none(), "exactly"_a = py::none(),
      "ends_in_largest"_a = py::none(), "begins_with_smallest"_a = py::none());
  m.def("euler_zigzag", &euler_zigzag, "n"_a);
  m.def(
      "table1_oracle",
      [](const std::string& cls, std::size_t n, const std::string& stat) {
        return table1_oracle(to_class(cls), n, to_statistic(stat));
      },
      "alternation"_a, "n"_a, "statistic"_a);

  // formulas
  m.def("catalan", &catalan, "index"_a);
  m.def(
      "table1_formula",
      [](const std::string& cls, std::size_t n, const std::string& stat) {
        return table1_formula(to_class(cls), n, to_statistic(stat));
      },
      "alternation"_a, "n"_a, "statistic"_a);
  m.def(
      "boundary_count",
      [](const std::string& cls, std::size_t n, const std::string& role) {
        return boundary_count(to_class(cls), n, to_role(role));
      },
      "alternation"_a, "n"_a, "role"_a);
  m.def("closed_form_even_321", &closed_form_even_321, "m"_a);
  m.def("closed_form_even_123", &closed_form_even_123, "m"_a);
  m.def("closed_form_odd", &closed_form_odd, "m"_a);
  m.def("convolution_even_321", &convolution_even_321, "m"_a);
  m.def("convolution_odd_321", &convolution_odd_321, "m"_a);
  m.def(
      "decomposition_sum",
      [](std::size_t n, const std::string& cls) { return decomposition_sum(n, to_class(cls)); },
      "n"_a, "alternation"_a);
  m.def(
      "exactly_once_count",
      [](const std::string& pattern, const std::string& cls, std::size_t n) {
        return exactly_once_count({parse_sequence_pattern(pattern), to_class(cls)}, n);
      },
      "pattern"_a, "alternation"_a, "n"_a);

  // decompose
  py::class_<DecompositionRecord>(m, "DecompositionRecord")
      .def(py::init([](std::size_t n, const std::string& cls, std::size_t j, const Permutation& u,
                       const Permutation& v) {
             return DecompositionRecord{n, to_class(cls), j, u, v};
           }),
           "n"_a, "alternation"_a, "j"_a, "u"_a, "v"_a)
      .def_readonly("n", &DecompositionRecord::n)
      .def_property_readonly("alternation",
                             [](const DecompositionRecord& r) {
                               return std::string(class_name(r.alternation));
                             })
      .def_readonly("j", &DecompositionRecord::j)
      .def_readonly("u", &DecompositionRecord::u)
      .def_readonly("v", &DecompositionRecord::v)
      .def_static("parse", [](const std::string& text) { return parse_record(text); }, "text"_a)
      .def("__str__", &format_record)
      .def("__repr__",
           [](const DecompositionRecord& r) { return "DecompositionRecord('" + format_record(r) + "')"; })
      .def(py::self == py::self);
  m.def(
      "locate_unique_321",
      [](const Permutation& w) { return locate_unique_321(w).positions; }, "w"_a);
  m.def("split", &split, "w"_a);
  m.def("reconstruct", &reconstruct, "record"_a);
  py::class_<DecompositionStream>(m, "DecompositionStream")
      .def("__iter__", [](DecompositionStream& s) -> DecompositionStream& { return s; })
      .def("__next__", [](DecompositionStream& s) {
        auto w = s.next();
        if (!w) throw py::stop_iteration();
        return *w;
      });
  m.def(
      "enumerate_by_decomposition",
      [](std::size_t n, const std::string& cls) { return enumerate_by_decomposition(n, to_class(cls)); },
      "n"_a, "alternation"_a);
}
