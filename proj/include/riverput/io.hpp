#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "riverput/ballots.hpp"
#include "riverput/putcheck.hpp"
#include "riverput/river.hpp"
#include "riverput/semiriver.hpp"

namespace riverput {

// Graphviz rendering: one node per alternative, edges annotated with their
// margins. Labels are quoted and escaped.
std::string to_dot(const MarginGraph& g, const RiverDiagram& d,
                   const std::vector<std::string>& labels);
std::string to_dot(const SemiRiverDiagram& d,
                   const std::vector<std::string>& labels);

nlohmann::json diagram_to_json(const MarginGraph& g, const RiverDiagram& d,
                               const std::vector<std::string>& labels);
nlohmann::json semiriver_to_json(const SemiRiverDiagram& d,
                                 const std::vector<std::string>& labels);
nlohmann::json certificate_to_json(const MarginGraph& g,
                                   const PutCertificate& cert,
                                   const std::vector<std::string>& labels);

// Label-level view of a serialized diagram, for round-trip checks.
struct DiagramData {
  std::string root;
  std::vector<std::string> vertices;
  std::vector<std::tuple<std::string, std::string, long long>> edges;
};

// Inverse of diagram_to_json. Throws std::invalid_argument on missing or
// ill-typed fields.
DiagramData diagram_from_json(const nlohmann::json& j);

DiagramData diagram_data(const MarginGraph& g, const RiverDiagram& d,
                         const std::vector<std::string>& labels);

bool operator==(const DiagramData& a, const DiagramData& b);

}  // namespace riverput
