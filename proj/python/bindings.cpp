#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "probminhash/errors.hpp"
#include "probminhash/estimate.hpp"
#include "probminhash/harness.hpp"
#include "probminhash/sketch.hpp"

namespace py = pybind11;
namespace pmh = probminhash;

namespace {

pmh::Algorithm to_algorithm(const std::string& name) {
  if (auto a = pmh::parse_algorithm(name)) return *a;
  throw pmh::InvalidParamsError("unknown algorithm '" + name + "'");
}

pmh::WeightedSet to_set(const std::vector<std::pair<std::uint64_t, double>>& items) {
  pmh::WeightedSet set;
  set.reserve(items.size());
  for (const auto& [id, w] : items) set.push_back({id, w});
  return set;
}

pmh::WeightPairMultiset to_pairs(const std::vector<std::pair<double, double>>& items) {
  pmh::WeightPairMultiset pairs;
  pairs.reserve(items.size());
  for (const auto& [a, b] : items) pairs.push_back({a, b});
  return pairs;
}

py::dict stats_dict(const pmh::SketchStats& s) {
  py::dict d;
  d["points_generated"] = s.points_generated;
  d["max_buffer_size"] = s.max_buffer_size;
  d["tree_node_writes"] = s.tree_node_writes;
  d["late_pass_updates"] = s.late_pass_updates;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "ProbMinHash sketches for the probability Jaccard similarity";

  py::register_exception<pmh::EmptyInputError>(m, "EmptyInputError", PyExc_ValueError);
  py::register_exception<pmh::InvalidParamsError>(m, "InvalidParamsError", PyExc_ValueError);
  py::register_exception<pmh::RandomnessFailure>(m, "RandomnessFailure", PyExc_RuntimeError);

  m.def("algorithms", [] {
    std::vector<std::string> names;
    for (const auto a : pmh::all_algorithms()) names.emplace_back(pmh::algorithm_name(a));
    return names;
  });

  py::class_<pmh::Sketcher>(m, "Sketcher")
      .def(py::init([](const std::string& algorithm, std::uint32_t size) {
             return pmh::Sketcher(to_algorithm(algorithm), size);
           }),
           py::arg("algorithm"), py::arg("m"))
      .def("sketch",
           [](pmh::Sketcher& self, const std::vector<std::pair<std::uint64_t, double>>& items) {
             const auto set = to_set(items);
             py::gil_scoped_release release;
             return self.compute(set).signature;
           },
           py::arg("items"), "Signature of a weighted set given as (id, weight) pairs.")
      .def("sketch_unweighted",
           [](pmh::Sketcher& self, const std::vector<std::uint64_t>& ids) {
             py::gil_scoped_release release;
             return self.compute_unweighted(ids).signature;
           },
           py::arg("ids"))
      .def("sketch_with_stats",
           [](pmh::Sketcher& self, const std::vector<std::pair<std::uint64_t, double>>& items) {
             const auto r = self.compute(to_set(items));
             return py::make_tuple(r.signature, stats_dict(r.stats));
           },
           py::arg("items"))
      .def_property_readonly("m", &pmh::Sketcher::size)
      .def_property_readonly("algorithm", [](const pmh::Sketcher& self) {
        return std::string(pmh::algorithm_name(self.algorithm()));
      });

  m.def(
      "sketch",
      [](const std::string& algorithm, const std::vector<std::pair<std::uint64_t, double>>& items,
         std::uint32_t size) { return pmh::sketch(to_algorithm(algorithm), to_set(items), size).signature; },
      py::arg("algorithm"), py::arg("items"), py::arg("m"));
  m.def(
      "sketch_unweighted",
      [](const std::string& algorithm, const std::vector<std::uint64_t>& ids, std::uint32_t size) {
        return pmh::sketch_unweighted(to_algorithm(algorithm), ids, size).signature;
      },
      py::arg("algorithm"), py::arg("ids"), py::arg("m"));

  m.def("estimate_similarity", [](const std::vector<std::uint64_t>& a,
                                  const std::vector<std::uint64_t>& b) {
    return pmh::estimate_similarity(a, b);
  });
  m.def("bbit_reduce", [](const std::vector<std::uint64_t>& s, int bits) {
    return pmh::bbit_reduce(s, bits).components;
  });
  m.def("estimate_similarity_bbit", [](const std::vector<std::uint16_t>& a,
                                       const std::vector<std::uint16_t>& b, int bits) {
    return pmh::estimate_similarity_bbit({a, bits}, {b, bits});
  });

  m.def("jaccard", [](const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
    return pmh::jaccard_exact(a, b);
  });
  m.def("jaccard_p", [](const std::vector<std::pair<double, double>>& v) {
    return pmh::jaccard_p_exact(to_pairs(v));
  }, "Probability Jaccard similarity of a list of (w_a, w_b) pairs.");
  m.def("jaccard_w", [](const std::vector<std::pair<double, double>>& v) {
    return pmh::jaccard_w_exact(to_pairs(v));
  });
  m.def("jaccard_n", [](const std::vector<std::pair<double, double>>& v) {
    return pmh::jaccard_n_exact(to_pairs(v));
  });
  m.def("improvement_factor", &pmh::improvement_factor, py::arg("m"), py::arg("u"));

  m.def(
      "fixture",
      [](const std::string& spec) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : pmh::harness::parse_fixture(spec).pairs) out.emplace_back(p.a, p.b);
        return out;
      },
      py::arg("spec"));
}
