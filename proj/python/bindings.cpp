#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "parfair/cc_reduce.hpp"
#include "parfair/const_agents.hpp"
#include "parfair/efk_alloc.hpp"
#include "parfair/errors.hpp"
#include "parfair/generators.hpp"
#include "parfair/graph_alloc.hpp"
#include "parfair/hypergraph_alloc.hpp"
#include "parfair/io.hpp"
#include "parfair/matching_alloc.hpp"
#include "parfair/round_robin.hpp"
#include "parfair/two_agent.hpp"

namespace py = pybind11;
using namespace parfair;

namespace {

AgentOrder make_order(const std::optional<std::vector<Agent>>& order, std::size_t n) {
  return order ? AgentOrder(*order, n) : AgentOrder::identity(n);
}

// Runs `f` with a live meter and returns (allocation, work, depth).
template <class F>
py::tuple metered(F&& f) {
  par::Meter meter;
  Allocation a = f(meter);
  return py::make_tuple(a, meter.metrics().work, meter.metrics().depth);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Parallel EF1 and EF(k) allocation of indivisible goods";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Instance>(m, "Instance")
      .def(py::init(&Instance::from_rows), py::arg("rows"))
      .def_property_readonly("n", &Instance::n)
      .def_property_readonly("m", &Instance::m)
      .def("value", &Instance::value, py::arg("agent"), py::arg("good"))
      .def("rows", [](const Instance& inst) {
        std::vector<std::vector<Value>> rows(inst.n());
        for (Agent i = 0; i < inst.n(); ++i) rows[i].assign(inst.row(i).begin(), inst.row(i).end());
        return rows;
      })
      .def("padded", &pad_instance)
      .def("digest", &io::digest)
      .def("to_text", [](const Instance& inst) { return io::to_string(inst); })
      .def_static("from_text", [](const std::string& text) {
        std::istringstream in(text);
        return io::read_instance(in);
      })
      .def(py::self == py::self)
      .def("__repr__", [](const Instance& inst) {
        return "<Instance n=" + std::to_string(inst.n()) + " m=" + std::to_string(inst.m()) + ">";
      });

  py::class_<Allocation>(m, "Allocation")
      .def(py::init<std::vector<std::vector<Good>>>(), py::arg("bundles"))
      .def_property_readonly("n", &Allocation::n)
      .def_property_readonly("bundles", &Allocation::bundles)
      .def("bundle", &Allocation::bundle, py::arg("agent"))
      .def("is_complete", &Allocation::is_complete, py::arg("m"))
      .def("to_text", [](const Allocation& a, std::size_t m) { return io::to_string(a, m); },
           py::arg("m"))
      .def(py::self == py::self)
      .def("__repr__", [](const Allocation& a) {
        return "<Allocation n=" + std::to_string(a.n()) + " goods=" + std::to_string(a.size()) + ">";
      });

  py::class_<EnvyReport>(m, "EnvyReport")
      .def_readonly("overall_k", &EnvyReport::overall_k)
      .def("count", &EnvyReport::count, py::arg("i"), py::arg("j"))
      .def("is_efk", &EnvyReport::is_efk, py::arg("k"))
      .def("is_ef1", &EnvyReport::is_ef1);

  m.def("verify_efk", &verify_efk, py::arg("instance"), py::arg("allocation"));
  m.def("envy_count", &envy_count, py::arg("instance"), py::arg("allocation"), py::arg("i"),
        py::arg("j"));

  // Each solver returns (allocation, work, depth).
  m.def("solve_two_agent", [](const Instance& inst) {
    return metered([&](par::Meter& mt) { return solve_two_agent(inst, mt); });
  }, py::arg("instance"));
  m.def("solve_graph", [](const Instance& inst) {
    return metered([&](par::Meter& mt) { return solve_graph(inst, mt); });
  }, py::arg("instance"));
  m.def("round_robin", [](const Instance& inst, std::optional<std::vector<Agent>> order) {
    return metered([&](par::Meter& mt) {
      return fixed_order_round_robin(inst, make_order(order, inst.n()), mt);
    });
  }, py::arg("instance"), py::arg("order") = py::none());
  m.def("solve_const_agents",
        [](const Instance& inst, std::optional<std::vector<Agent>> order, std::uint64_t budget) {
          return metered([&](par::Meter& mt) {
            return solve_const_agents(inst, make_order(order, inst.n()), mt, budget);
          });
        },
        py::arg("instance"), py::arg("order") = py::none(),
        py::arg("node_budget") = kDefaultNodeBudget);
  m.def("solve_hypergraph",
        [](const Instance& inst, std::size_t max_rank, std::uint64_t budget) {
          HypergraphOptions opts;
          opts.max_rank = max_rank;
          opts.node_budget = budget;
          return metered([&](par::Meter& mt) { return solve_hypergraph(inst, opts, mt); });
        },
        py::arg("instance"), py::arg("max_rank") = 4, py::arg("node_budget") = kDefaultNodeBudget);
  m.def("solve_matching_rounds", [](const Instance& inst) {
    return metered([&](par::Meter& mt) { return solve_matching_rounds(inst, mt); });
  }, py::arg("instance"));
  m.def("solve_ef_sqrt", [](const Instance& inst, std::uint64_t seed) {
    return metered([&](par::Meter& mt) { return solve_ef_sqrt(inst, seed, mt); });
  }, py::arg("instance"), py::arg("seed"));
  m.def("solve_ef_eps", [](const Instance& inst, std::size_t k) {
    return metered([&](par::Meter& mt) { return solve_ef_eps(inst, k, mt); });
  }, py::arg("instance"), py::arg("k"));

  m.def("ef_sqrt_bound", &ef_sqrt_bound, py::arg("m"), py::arg("n"));
  m.def("ef_eps_bound", &ef_eps_bound, py::arg("m"), py::arg("n"), py::arg("k"));
  m.def("sample_permutation",
        [](std::size_t n, std::uint64_t seed) { return sample_permutation(n, Rng(seed)); },
        py::arg("n"), py::arg("seed"));

  m.def("max_weight_matching",
        [](const std::vector<std::vector<std::int64_t>>& w) {
          const std::size_t n = w.size(), k = n ? w[0].size() : 0;
          std::vector<std::int64_t> flat;
          for (const auto& row : w) {
            if (row.size() != k) throw InputError("ragged weight matrix");
            flat.insert(flat.end(), row.begin(), row.end());
          }
          const auto r = max_weight_perfect_matching(n, k, flat);
          return py::make_tuple(r.assignment, r.weight);
        },
        py::arg("weights"));

  m.def("reduce_to_stable_matching",
        [](const Instance& inst, std::optional<std::vector<Agent>> order) {
          const auto smi = reduce_to_stable_matching(inst, make_order(order, inst.n()));
          std::ostringstream out;
          write_stable_matching(out, smi);
          return out.str();
        },
        py::arg("instance"), py::arg("order") = py::none());
  m.def("round_robin_via_stable_matching",
        [](const Instance& inst, std::optional<std::vector<Agent>> order) {
          const auto smi = reduce_to_stable_matching(inst, make_order(order, inst.n()));
          const auto matching = gale_shapley(smi);
          return py::make_tuple(allocation_from_matching(smi, matching),
                                blocking_pairs(smi, matching).size());
        },
        py::arg("instance"), py::arg("order") = py::none());

  auto g = m.def_submodule("gen", "Seeded instance generators");
  g.def("dense", &gen::dense, py::arg("n"), py::arg("m"), py::arg("max_value") = 100,
        py::arg("seed") = 0);
  g.def("graph", &gen::graph, py::arg("n"), py::arg("m"), py::arg("max_value") = 100,
        py::arg("seed") = 0);
  g.def("hypergraph", &gen::hypergraph, py::arg("n"), py::arg("m"), py::arg("rank") = 3,
        py::arg("delta") = 4, py::arg("max_value") = 100, py::arg("seed") = 0);
  g.def("sparse", &gen::sparse, py::arg("n"), py::arg("m"), py::arg("budget") = 4,
        py::arg("max_value") = 100, py::arg("seed") = 0);

  m.def("set_threads", [](unsigned t) { par::Executor::global().set_threads(t); },
        py::arg("threads"));
}
