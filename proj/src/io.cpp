#include "riverput/io.hpp"

#include <algorithm>
#include <sstream>

namespace riverput {

namespace {

std::string quoted(const std::string& label) {
  std::string out = "\"";
  for (char c : label) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string edges_to_dot(const std::vector<MarginEdge>& edges, int n,
                         const std::vector<std::string>& labels) {
  std::ostringstream out;
  out << "digraph {\n";
  for (int v = 0; v < n; ++v) out << "  " << quoted(labels.at(v)) << ";\n";
  for (const MarginEdge& e : edges)
    out << "  " << quoted(labels.at(e.from)) << " -> " << quoted(labels.at(e.to))
        << " [label=" << e.margin << "];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json edge_json(const MarginEdge& e,
                         const std::vector<std::string>& labels) {
  return {{"from", labels.at(e.from)},
          {"to", labels.at(e.to)},
          {"margin", e.margin}};
}

std::vector<MarginEdge> diagram_edges(const MarginGraph& g,
                                      const RiverDiagram& d) {
  std::vector<MarginEdge> edges;
  edges.reserve(d.edges.size());
  for (EdgeId id : d.edges) edges.push_back(g.edges.at(id));
  return edges;
}

std::vector<MarginEdge> semiriver_edges(const SemiRiverDiagram& d) {
  std::vector<MarginEdge> edges;
  edges.reserve(d.digraph().edges().size());
  for (const DigraphEdge& e : d.digraph().edges())
    edges.push_back({e.from, e.to, e.weight});
  return edges;
}

}  // namespace

std::string to_dot(const MarginGraph& g, const RiverDiagram& d,
                   const std::vector<std::string>& labels) {
  return edges_to_dot(diagram_edges(g, d), d.n, labels);
}

std::string to_dot(const SemiRiverDiagram& d,
                   const std::vector<std::string>& labels) {
  return edges_to_dot(semiriver_edges(d), d.num_vertices(), labels);
}

nlohmann::json diagram_to_json(const MarginGraph& g, const RiverDiagram& d,
                               const std::vector<std::string>& labels) {
  nlohmann::json edges = nlohmann::json::array();
  for (const MarginEdge& e : diagram_edges(g, d))
    edges.push_back(edge_json(e, labels));
  return {{"root", labels.at(d.root)},
          {"vertices", labels},
          {"edges", std::move(edges)}};
}

nlohmann::json semiriver_to_json(const SemiRiverDiagram& d,
                                 const std::vector<std::string>& labels) {
  nlohmann::json edges = nlohmann::json::array();
  for (const MarginEdge& e : semiriver_edges(d))
    edges.push_back(edge_json(e, labels));
  return {{"vertices", labels}, {"edges", std::move(edges)}};
}

nlohmann::json certificate_to_json(const MarginGraph& g,
                                   const PutCertificate& cert,
                                   const std::vector<std::string>& labels) {
  nlohmann::json ordering = nlohmann::json::array();
  for (EdgeId id : cert.ordering)
    ordering.push_back(edge_json(g.edges.at(id), labels));
  nlohmann::json tree = nlohmann::json::array();
  for (EdgeId id : cert.tree_edges)
    tree.push_back(edge_json(g.edges.at(id), labels));
  return {{"alternative", labels.at(cert.alternative)},
          {"verdict", cert.verdict},
          {"ordering", std::move(ordering)},
          {"diagram", diagram_to_json(g, cert.diagram, labels)},
          {"tree", std::move(tree)}};
}

DiagramData diagram_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("root") || !j.contains("vertices") ||
      !j.contains("edges"))
    throw std::invalid_argument("diagram JSON missing root/vertices/edges");
  DiagramData data;
  try {
    data.root = j.at("root").get<std::string>();
    for (const nlohmann::json& v : j.at("vertices"))
      data.vertices.push_back(v.get<std::string>());
    for (const nlohmann::json& e : j.at("edges"))
      data.edges.emplace_back(e.at("from").get<std::string>(),
                              e.at("to").get<std::string>(),
                              e.at("margin").get<long long>());
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("bad diagram JSON: ") + err.what());
  }
  return data;
}

DiagramData diagram_data(const MarginGraph& g, const RiverDiagram& d,
                         const std::vector<std::string>& labels) {
  DiagramData data;
  data.root = labels.at(d.root);
  data.vertices = labels;
  for (const MarginEdge& e : diagram_edges(g, d))
    data.edges.emplace_back(labels.at(e.from), labels.at(e.to), e.margin);
  return data;
}

bool operator==(const DiagramData& a, const DiagramData& b) {
  return a.root == b.root && a.vertices == b.vertices && a.edges == b.edges;
}

}  // namespace riverput
