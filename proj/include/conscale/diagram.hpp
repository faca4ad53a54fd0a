#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conscale/closure_family.hpp"
#include "conscale/context.hpp"
#include "conscale/scale_measure.hpp"

namespace conscale {

struct DiagramNode {
  ObjectSet extent;
  /// Intent in the base context.
  AttributeSet intent;
  /// Reduced labelling: objects whose object concept is this node.
  std::vector<std::string> object_labels;
  /// Reduced labelling: attributes whose attribute concept is this node.
  std::vector<std::string> attribute_labels;
  /// Conjunction of the base intent, set for scale-measure diagrams.
  std::string cnf_label;
};

/// Hasse diagram of a closure family; edges are (lower, upper) node indices.
struct LatticeDiagram {
  std::vector<DiagramNode> nodes;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Concept lattice of the context, nodes in lectic order of extents.
LatticeDiagram concept_lattice_diagram(const FormalContext& context);

/// Lattice of the extents reflected by `sm`, labelled over the base context.
/// Attribute labels name scale attributes; CNF labels are filled when asked.
LatticeDiagram scale_lattice_diagram(const ScaleMeasure& sm, bool with_cnf = true);

std::string to_dot(const LatticeDiagram& diagram, const std::string& graph_name = "lattice");
nlohmann::json to_json(const LatticeDiagram& diagram, const FormalContext& base);

}  // namespace conscale
