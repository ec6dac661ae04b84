#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "depi/bounds.hpp"
#include "depi/explorer.hpp"
#include "depi/pmf.hpp"
#include "depi/random.hpp"
#include "depi/verify.hpp"

namespace py = pybind11;

namespace {

std::string bound_value_repr(const depi::BoundValue& v) {
  std::ostringstream os;
  os << "BoundValue(value=" << v.value << ", minimizer_x=" << v.minimizer_x;
  if (v.minimizer_y) os << ", minimizer_y=" << *v.minimizer_y;
  if (v.minimizer_delta) os << ", minimizer_delta=" << *v.minimizer_delta;
  os << ")";
  return os.str();
}

std::string suite_report_json(const depi::SuiteReport& report) {
  std::ostringstream os;
  depi::write_suite_report(os, report);
  return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Entropy gap bounds for sums of independent integer-valued random "
            "variables, with a randomized verification engine";

  py::class_<depi::Pmf>(m, "Pmf")
      .def(py::init<std::int64_t, std::vector<double>>(), py::arg("offset"),
           py::arg("weights"))
      .def_static("point_mass", &depi::Pmf::point_mass, py::arg("site"))
      .def_static("uniform", &depi::Pmf::uniform, py::arg("first"), py::arg("last"))
      .def_static("normalized", &depi::Pmf::normalized, py::arg("offset"),
                  py::arg("weights"))
      .def_property_readonly("offset", &depi::Pmf::offset)
      .def_property_readonly("weights", &depi::Pmf::weights)
      .def("at", &depi::Pmf::at, py::arg("k"))
      .def("cdf", &depi::Pmf::cdf, py::arg("k"))
      .def("to_json", &depi::Pmf::to_json_string)
      .def("__len__", &depi::Pmf::size)
      .def("__eq__", [](const depi::Pmf& a, const depi::Pmf& b) { return a == b; })
      .def("__repr__", [](const depi::Pmf& p) {
        return "Pmf(offset=" + std::to_string(p.offset()) + ", size=" +
               std::to_string(p.size()) + ")";
      });

  py::class_<depi::SplitResult>(m, "SplitResult")
      .def_readonly("lower", &depi::SplitResult::lower)
      .def_readonly("upper", &depi::SplitResult::upper)
      .def_readonly("lower_mass", &depi::SplitResult::lower_mass);

  py::class_<depi::ConditionalPair>(m, "ConditionalPair")
      .def(py::init<std::vector<double>, std::vector<depi::Pmf>>(),
           py::arg("label_weights"), py::arg("conditionals"))
      .def_property_readonly("label_weights", &depi::ConditionalPair::label_weights)
      .def_property_readonly("conditionals", &depi::ConditionalPair::conditionals)
      .def("to_json", &depi::ConditionalPair::to_json_string);

  m.def("entropy", &depi::entropy, py::arg("p"), "Shannon entropy in bits");
  m.def("convolve", &depi::convolve, py::arg("p"), py::arg("q"),
        py::arg("support_cap") = depi::kDefaultSupportCap,
        "Distribution of the sum of independent draws");
  m.def("linf", &depi::linf, py::arg("p"));
  m.def("l1_dist", &depi::l1_dist, py::arg("p"), py::arg("q"));
  m.def("split_at", &depi::split_at, py::arg("p"), py::arg("n"));
  m.def("find_split_point", &depi::find_split_point, py::arg("p"), py::arg("alpha"));
  m.def("shift", &depi::shift, py::arg("p"), py::arg("k"));
  m.def("spread", &depi::spread, py::arg("q"), py::arg("factor"),
        py::arg("support_cap") = depi::kDefaultSupportCap);
  m.def("conditional_entropy", &depi::conditional_entropy, py::arg("cp"));

  py::class_<depi::BoundValue>(m, "BoundValue")
      .def_readonly("value", &depi::BoundValue::value)
      .def_readonly("minimizer_x", &depi::BoundValue::minimizer_x)
      .def_readonly("minimizer_y", &depi::BoundValue::minimizer_y)
      .def_readonly("minimizer_delta", &depi::BoundValue::minimizer_delta)
      .def_readonly("oracle_gap", &depi::BoundValue::oracle_gap)
      .def("__repr__", &bound_value_repr);

  m.def("h2", &depi::h2, py::arg("x"), "Binary entropy in bits");
  m.def("nonspiky_term", &depi::nonspiky_term, py::arg("x"));
  m.def("l_xy", &depi::l_xy, py::arg("x"), py::arg("y"));
  m.def("l_xy_grid_oracle", &depi::l_xy_grid_oracle, py::arg("x"), py::arg("y"),
        py::arg("step") = 1e-4);
  m.def("g_iid", &depi::g_iid, py::arg("c"),
        "Gap bound for a sum of two iid variables with entropy c");
  m.def("g_iid_grid_oracle", &depi::g_iid_grid_oracle, py::arg("c"),
        py::arg("step") = 1e-6);
  m.def("g_niid", &depi::g_niid, py::arg("c"), py::arg("d"));
  m.def("g_niid_grid_oracle", &depi::g_niid_grid_oracle, py::arg("c"), py::arg("d"),
        py::arg("step") = 1e-4);
  m.def("g_cond", &depi::g_cond, py::arg("c"));
  m.def("g_cond_grid_oracle", &depi::g_cond_grid_oracle, py::arg("c"),
        py::arg("step") = 1e-7);

  py::class_<depi::RandomSource>(m, "RandomSource")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform01", &depi::RandomSource::uniform01)
      .def("uniform_int", &depi::RandomSource::uniform_int, py::arg("lo"), py::arg("hi"));

  py::enum_<depi::GeneratorFamily>(m, "GeneratorFamily")
      .value("FLAT_RANDOM", depi::GeneratorFamily::kFlatRandom)
      .value("SPIKY_MIXTURE", depi::GeneratorFamily::kSpikyMixture)
      .value("TWO_CLUSTER", depi::GeneratorFamily::kTwoCluster)
      .value("SPREAD_COMPOSITE", depi::GeneratorFamily::kSpreadComposite);

  py::class_<depi::GeneratorParams>(m, "GeneratorParams")
      .def(py::init<>())
      .def_readwrite("support_max", &depi::GeneratorParams::support_max)
      .def_readwrite("support_min", &depi::GeneratorParams::support_min)
      .def_readwrite("spike_mass", &depi::GeneratorParams::spike_mass)
      .def_readwrite("max_offset", &depi::GeneratorParams::max_offset)
      .def_readwrite("spread_max", &depi::GeneratorParams::spread_max);

  m.def("random_pmf", &depi::random_pmf, py::arg("gen"), py::arg("family"),
        py::arg("params") = depi::GeneratorParams{});

  py::class_<depi::TrialReport>(m, "TrialReport")
      .def_readonly("check_name", &depi::TrialReport::check_name)
      .def_readonly("seed", &depi::TrialReport::seed)
      .def_readonly("input_digest", &depi::TrialReport::input_digest)
      .def_readonly("lhs", &depi::TrialReport::lhs)
      .def_readonly("rhs", &depi::TrialReport::rhs)
      .def_readonly("margin", &depi::TrialReport::margin)
      .def_readonly("passed", &depi::TrialReport::pass);

  py::class_<depi::SuiteConfig>(m, "SuiteConfig")
      .def(py::init<>())
      .def_readwrite("seed", &depi::SuiteConfig::seed)
      .def_readwrite("trials_per_check", &depi::SuiteConfig::trials_per_check)
      .def_readwrite("support_max", &depi::SuiteConfig::support_max)
      .def_readwrite("slack", &depi::SuiteConfig::slack);

  py::class_<depi::SuiteReport>(m, "SuiteReport")
      .def_readonly("trials", &depi::SuiteReport::trials)
      .def_readonly("failures", &depi::SuiteReport::failures)
      .def_readonly("per_check_min_margin", &depi::SuiteReport::per_check_min_margin)
      .def("to_json", &suite_report_json);

  m.def("check_theorem1", &depi::check_theorem1, py::arg("p"),
        py::arg("slack") = depi::kDefaultSlack,
        py::arg("conv_cap") = depi::kDefaultSupportCap);
  m.def("check_theorem2", &depi::check_theorem2, py::arg("p"), py::arg("q"),
        py::arg("slack") = depi::kDefaultSlack,
        py::arg("conv_cap") = depi::kDefaultSupportCap);
  m.def("check_theorem3", &depi::check_theorem3, py::arg("cp_a"), py::arg("cp_b"),
        py::arg("slack") = depi::kDefaultSlack,
        py::arg("conv_cap") = depi::kDefaultSupportCap);
  m.def("run_suite", &depi::run_suite, py::arg("config") = depi::SuiteConfig{},
        py::call_guard<py::gil_scoped_release>());

  m.def("boundary_construction", &depi::boundary_construction, py::arg("h_p"),
        py::arg("h_q"));
  m.def("pmf_with_entropy", &depi::pmf_with_entropy, py::arg("target"),
        py::arg("support"));
  m.def("sample_entropy_set",
        [](depi::RandomSource& gen, int n, const depi::GeneratorParams& params) {
          std::vector<py::tuple> out;
          for (const depi::EntropyPoint& pt : depi::sample_entropy_set(gen, n, params)) {
            out.push_back(py::make_tuple(pt.h_sum, pt.h_p, pt.h_q, pt.generator));
          }
          return out;
        },
        py::arg("gen"), py::arg("n"), py::arg("params") = depi::GeneratorParams{});

#ifdef DEPI_VERSION
  m.attr("__version__") = DEPI_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
