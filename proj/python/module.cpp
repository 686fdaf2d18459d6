#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dijoins/chordal.hpp"
#include "dijoins/dicut.hpp"
#include "dijoins/errors.hpp"
#include "dijoins/generators.hpp"
#include "dijoins/graph.hpp"
#include "dijoins/io.hpp"
#include "dijoins/oracle.hpp"
#include "dijoins/packing.hpp"
#include "dijoins/types.hpp"

namespace py = pybind11;
using namespace dijoins;

namespace {

std::string describe_graph(const WeightedDigraph& g) {
  std::ostringstream out;
  out << "WeightedDigraph(nodes=" << g.node_count()
      << ", arcs=" << g.arc_count() << ", total_weight=" << g.total_weight()
      << ")";
  return out.str();
}

std::string describe_packing(const Packing& p) {
  std::ostringstream out;
  out << "Packing(tau=";
  if (p.tau)
    out << *p.tau;
  else
    out << "None";
  out << ", entries=" << p.entries.size() << ")";
  return out.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Dijoin packing in weighted digraphs with chordal structure";

  // exception hierarchy: error -> {invalid_input, not_chordal,
  // resource_limit, verification_failure}
  static py::exception<error> exc_error(m, "Error");
  static py::exception<invalid_input> exc_invalid(m, "InvalidInput",
                                                  exc_error);
  static py::exception<not_chordal> exc_not_chordal(m, "NotChordal",
                                                    exc_error);
  static py::exception<resource_limit> exc_limit(m, "ResourceLimit",
                                                 exc_error);
  static py::exception<verification_failure> exc_verify(
      m, "VerificationFailure", exc_error);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const not_chordal& e) {
      py::object type =
          py::reinterpret_borrow<py::object>(exc_not_chordal.ptr());
      py::object inst = type(e.what());
      inst.attr("chordless_cycle") = py::cast(e.chordless_cycle());
      PyErr_SetObject(exc_not_chordal.ptr(), inst.ptr());
    } catch (const invalid_input& e) {
      exc_invalid(e.what());
    } catch (const resource_limit& e) {
      exc_limit(e.what());
    } catch (const verification_failure& e) {
      exc_verify(e.what());
    } catch (const error& e) {
      exc_error(e.what());
    }
  });

  py::class_<Arc>(m, "Arc")
      .def_readonly("id", &Arc::id)
      .def_readonly("tail", &Arc::tail)
      .def_readonly("head", &Arc::head)
      .def_readonly("weight", &Arc::weight)
      .def("__repr__", [](const Arc& a) {
        std::ostringstream out;
        out << "Arc(id=" << a.id << ", tail=" << a.tail << ", head=" << a.head
            << ", weight=" << a.weight << ")";
        return out.str();
      });

  py::class_<WeightedDigraph>(m, "WeightedDigraph")
      .def(py::init<>())
      .def("add_node", &WeightedDigraph::add_node, py::arg("node"))
      .def("add_arc", &WeightedDigraph::add_arc, py::arg("tail"),
           py::arg("head"), py::arg("weight"))
      .def("add_arc_with_id", &WeightedDigraph::add_arc_with_id, py::arg("id"),
           py::arg("tail"), py::arg("head"), py::arg("weight"))
      .def_property_readonly(
          "nodes", [](const WeightedDigraph& g) { return g.nodes(); })
      .def_property_readonly(
          "arcs", [](const WeightedDigraph& g) { return g.arcs(); })
      .def("node_count", &WeightedDigraph::node_count)
      .def("arc_count", &WeightedDigraph::arc_count)
      .def("has_node", &WeightedDigraph::has_node, py::arg("node"))
      .def("has_arc", &WeightedDigraph::has_arc, py::arg("id"))
      .def("arc", &WeightedDigraph::arc, py::arg("id"),
           py::return_value_policy::copy)
      .def("weight", &WeightedDigraph::weight, py::arg("id"))
      .def("set_weight", &WeightedDigraph::set_weight, py::arg("id"),
           py::arg("weight"))
      .def("total_weight", &WeightedDigraph::total_weight)
      .def("out_arcs", &WeightedDigraph::out_arcs, py::arg("node"))
      .def("in_arcs", &WeightedDigraph::in_arcs, py::arg("node"))
      .def("__repr__", &describe_graph);

  py::class_<PackingEntry>(m, "PackingEntry")
      .def_readonly("arcs", &PackingEntry::arcs)
      .def_readonly("multiplicity", &PackingEntry::multiplicity)
      .def("__repr__", [](const PackingEntry& e) {
        std::ostringstream out;
        out << "PackingEntry(arcs=" << e.arcs.size()
            << ", multiplicity=" << e.multiplicity << ")";
        return out.str();
      });

  py::class_<Packing>(m, "Packing")
      .def(py::init<>())
      .def_readonly("tau", &Packing::tau)
      .def_readonly("entries", &Packing::entries)
      .def("total_multiplicity", &Packing::total_multiplicity)
      .def("__repr__", &describe_packing);

  py::class_<PackOptions>(m, "PackOptions")
      .def(py::init<>())
      .def_readwrite("verify_steps", &PackOptions::verify_steps)
      .def_readwrite("enumeration_bound", &PackOptions::enumeration_bound);

  py::class_<PackStats>(m, "PackStats")
      .def(py::init<>())
      .def_readonly("condensed_nodes", &PackStats::condensed_nodes)
      .def_readonly("condensed_arcs", &PackStats::condensed_arcs)
      .def_readonly("elimination_steps", &PackStats::elimination_steps)
      .def_readonly("reversals", &PackStats::reversals)
      .def_readonly("support_condensed", &PackStats::support_condensed)
      .def_readonly("steps_verified", &PackStats::steps_verified);

  py::class_<PackingInvariantReport>(m, "PackingInvariantReport")
      .def_readonly("tau_matches_min_dicut",
                    &PackingInvariantReport::tau_matches_min_dicut)
      .def_readonly("multiplicities_sum_to_tau",
                    &PackingInvariantReport::multiplicities_sum_to_tau)
      .def_readonly("entries_distinct",
                    &PackingInvariantReport::entries_distinct)
      .def_readonly("all_entries_are_dijoins",
                    &PackingInvariantReport::all_entries_are_dijoins)
      .def_readonly("capacities_respected",
                    &PackingInvariantReport::capacities_respected)
      .def_readonly("support_within_bound",
                    &PackingInvariantReport::support_within_bound)
      .def_readonly("detail", &PackingInvariantReport::detail)
      .def("ok", &PackingInvariantReport::ok);

  py::class_<Dicut>(m, "Dicut")
      .def_readonly("shore", &Dicut::shore)
      .def_readonly("arcs", &Dicut::arcs)
      .def_readonly("weight", &Dicut::weight);

  py::class_<MinDicutResult>(m, "MinDicutResult")
      .def_readonly("weight", &MinDicutResult::weight)
      .def_readonly("shore", &MinDicutResult::shore)
      .def_readonly("arcs", &MinDicutResult::arcs);

  py::class_<OracleOptions>(m, "OracleOptions")
      .def(py::init<>())
      .def_readwrite("budget", &OracleOptions::budget)
      .def_readwrite("enumeration_bound", &OracleOptions::enumeration_bound);

  py::class_<OracleResult>(m, "OracleResult")
      .def_readonly("feasible", &OracleResult::feasible)
      .def_readonly("dijoins", &OracleResult::dijoins);

  py::class_<ChordalParams>(m, "ChordalParams")
      .def(py::init<>())
      .def_readwrite("n", &ChordalParams::n)
      .def_readwrite("density", &ChordalParams::density)
      .def_readwrite("max_weight", &ChordalParams::max_weight)
      .def_readwrite("seed", &ChordalParams::seed)
      .def_readwrite("unweighted", &ChordalParams::unweighted);

  py::class_<Fixture>(m, "Fixture")
      .def_readonly("name", &Fixture::name)
      .def_readonly("graph", &Fixture::graph)
      .def_readonly("min_dicut", &Fixture::min_dicut)
      .def_readonly("max_packing", &Fixture::max_packing);

  m.def(
      "pack_dijoins",
      [](const WeightedDigraph& g, const PackOptions& options) {
        PackStats stats;
        Packing packing = pack_dijoins(g, options, &stats);
        return py::make_tuple(packing, stats);
      },
      py::arg("graph"), py::arg("options") = PackOptions{},
      "Packs tau dijoins; returns (packing, stats).");
  m.def("validate_packing", &validate_packing, py::arg("graph"),
        py::arg("packing"), py::arg("enumeration_bound") = 24);
  m.def(
      "min_dicut_weight",
      [](const WeightedDigraph& g, int bound) {
        return min_dicut_weight(g, bound);
      },
      py::arg("graph"), py::arg("bound") = 24);
  m.def(
      "enumerate_dicuts",
      [](const WeightedDigraph& g, int bound) {
        return enumerate_dicuts(g, bound);
      },
      py::arg("graph"), py::arg("bound") = 24);
  m.def(
      "is_dijoin",
      [](const WeightedDigraph& g, const std::vector<ArcId>& arcs) {
        return is_dijoin(g, arcs);
      },
      py::arg("graph"), py::arg("arcs"));
  m.def(
      "is_chordal",
      [](const WeightedDigraph& g) {
        return is_chordal(underlying_adjacency(g));
      },
      py::arg("graph"),
      "Whether the underlying undirected graph is chordal.");
  m.def(
      "find_chordless_cycle",
      [](const WeightedDigraph& g) {
        return find_chordless_cycle(underlying_adjacency(g));
      },
      py::arg("graph"),
      "A chordless cycle of length >= 4, or [] when chordal.");
  m.def("can_pack", &can_pack, py::arg("graph"), py::arg("k"),
        py::arg("options") = OracleOptions{});
  m.def("max_packing_size", &max_packing_size, py::arg("graph"),
        py::arg("options") = OracleOptions{});
  m.def("random_chordal_digraph", &random_chordal_digraph, py::arg("params"));
  m.def("fixture_names", [] { return fixture_names(); });
  m.def("load_fixture", &load_fixture, py::arg("name"));
  m.def(
      "graph_from_json",
      [](const std::string& text) { return parse_graph_json(text).graph; },
      py::arg("text"),
      "Parses the versioned graph document; node names become ids 0, 1, ...");
  m.def(
      "graph_to_json",
      [](const WeightedDigraph& g) { return write_graph_json(name_by_id(g)); },
      py::arg("graph"),
      "Canonical serialization with nodes named after their ids.");
  m.def("packing_from_json", &parse_packing_json, py::arg("text"));
  m.def("packing_to_json", &write_packing_json, py::arg("packing"));
}
