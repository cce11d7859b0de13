#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "riverput/ballots.hpp"
#include "riverput/graph.hpp"
#include "riverput/oracle.hpp"
#include "riverput/putcheck.hpp"
#include "riverput/river.hpp"
#include "riverput/semiriver.hpp"

namespace py = pybind11;
using namespace riverput;

namespace {

py::list edge_list(const std::vector<MarginEdge>& edges) {
  py::list out;
  for (const MarginEdge& e : edges)
    out.append(py::make_tuple(e.from, e.to, e.margin));
  return out;
}

py::list diagram_edges(const MarginGraph& g, const std::vector<EdgeId>& ids) {
  std::vector<MarginEdge> edges;
  for (EdgeId id : ids) edges.push_back(g.edges.at(id));
  return edge_list(edges);
}

py::dict diagram_dict(const MarginGraph& g, const RiverDiagram& d) {
  py::dict out;
  out["root"] = d.root;
  out["edges"] = diagram_edges(g, d.edges);
  return out;
}

py::dict certificate_dict(const MarginGraph& g, const PutCertificate& cert) {
  py::dict out;
  out["alternative"] = cert.alternative;
  out["verdict"] = cert.verdict;
  out["ordering"] = diagram_edges(g, cert.ordering);
  out["diagram"] = diagram_dict(g, cert.diagram);
  out["tree"] = diagram_edges(g, cert.tree_edges);
  return out;
}

}  // namespace

PYBIND11_MODULE(_riverput, m) {
  m.doc() =
      "River voting: margin graphs, fast river diagrams, and polynomial "
      "parallel-universe tie-breaking with certificates";
  m.attr("__version__") = "0.1.0";

  py::register_exception<ParseError>(m, "ProfileParseError", PyExc_ValueError);
  py::register_exception<TooManyOrderingsError>(m, "TooManyOrderingsError",
                                                PyExc_RuntimeError);

  py::class_<PreferenceProfile>(m, "PreferenceProfile")
      .def_property_readonly("num_alternatives",
                             &PreferenceProfile::num_alternatives)
      .def_property_readonly("num_voters", &PreferenceProfile::num_voters)
      .def("labels", &PreferenceProfile::labels)
      .def("label", &PreferenceProfile::label, py::arg("id"))
      .def("index_of", &PreferenceProfile::index_of, py::arg("label"));

  py::class_<MarginGraph>(m, "MarginGraph")
      .def_readonly("n", &MarginGraph::n)
      .def("edges", [](const MarginGraph& g) { return edge_list(g.edges); });

  m.def("parse_profile",
        [](const std::string& text) { return parse_profile(text); },
        py::arg("text"), "Parse a ballot file; raises ProfileParseError");
  m.def("margin", &margin, py::arg("profile"), py::arg("x"), py::arg("y"));
  m.def("margin_graph", &margin_graph, py::arg("profile"));
  m.def("condorcet_winner", &condorcet_winner, py::arg("margin_graph"));
  m.def("plurality_scores", &plurality_scores, py::arg("profile"));
  m.def("borda_scores", &borda_scores, py::arg("profile"));

  m.def(
      "river",
      [](const MarginGraph& g, const std::string& tiebreak,
         std::uint64_t seed) {
        if (tiebreak != "lex" && tiebreak != "shuffle")
          throw std::invalid_argument("tiebreak must be 'lex' or 'shuffle'");
        DescendingOrdering o = tiebreak == "lex" ? lex_ordering(g)
                                                 : shuffled_ordering(g, seed);
        return diagram_dict(g, river_fast(g, o));
      },
      py::arg("margin_graph"), py::arg("tiebreak") = "lex",
      py::arg("seed") = 0,
      "Winner diagram for one descending ordering as {'root', 'edges'}");

  m.def(
      "semi_river",
      [](const MarginGraph& g) {
        SemiRiverDiagram d = semi_river(g);
        std::vector<MarginEdge> edges;
        for (const DigraphEdge& e : d.digraph().edges())
          edges.push_back({e.from, e.to, e.weight});
        return edge_list(edges);
      },
      py::arg("margin_graph"),
      "Edges that can appear in some river diagram (superset)");

  m.def(
      "constructive_check",
      [](const MarginGraph& g, int w) {
        return certificate_dict(g, constructive_check(g, w));
      },
      py::arg("margin_graph"), py::arg("alternative"),
      "Polynomial check whether one alternative wins in some universe");

  m.def(
      "river_put_winners",
      [](const MarginGraph& g, bool condorcet_shortcut) {
        PutResult r = river_put_winners(g, condorcet_shortcut);
        py::list certs;
        for (const PutCertificate& c : r.certificates)
          certs.append(certificate_dict(g, c));
        py::dict out;
        out["winners"] = r.winners;
        out["certificates"] = certs;
        out["condorcet_shortcut_used"] = r.condorcet_shortcut_used;
        return out;
      },
      py::arg("margin_graph"), py::arg("condorcet_shortcut") = false);

  m.def(
      "put_winners_bruteforce",
      [](const MarginGraph& g, std::uint64_t cap) {
        OracleReport r = put_winners_bruteforce(g, cap);
        py::dict out;
        out["winners"] = r.winners;
        out["ordering_count"] = r.ordering_count;
        return out;
      },
      py::arg("margin_graph"), py::arg("cap") = kDefaultOrderingCap,
      "Exhaustive cross-check; raises TooManyOrderingsError over the cap");
}
