#include "conscale/diagram.hpp"

#include <algorithm>
#include <sstream>

#include "conscale/closure.hpp"

namespace conscale {

namespace {

LatticeDiagram skeleton(const FormalContext& base, const ClosureFamily& family) {
  LatticeDiagram d;
  const auto& members = family.members();
  for (const auto& e : members) d.nodes.push_back({e, base.intent_of(e), {}, {}, {}});
  auto index = [&](const ObjectSet& s) {
    return static_cast<std::size_t>(std::lower_bound(members.begin(), members.end(), s, lectic_less) - members.begin());
  };
  for (std::size_t i = 0; i < members.size(); ++i)
    for (const auto& up : family.upper_covers(members[i])) d.edges.emplace_back(i, index(up));
  std::sort(d.edges.begin(), d.edges.end());
  for (std::size_t g = 0; g < base.object_count(); ++g) {
    ObjectSet single = base.no_objects();
    single.set(g);
    d.nodes[index(family.close(single))].object_labels.push_back(base.objects()[g]);
  }
  return d;
}

}  // namespace

LatticeDiagram concept_lattice_diagram(const FormalContext& context) {
  const auto family = ClosureFamily::of_extents(context);
  auto d = skeleton(context, family);
  for (auto& node : d.nodes)
    for (std::size_t m = 0; m < context.attribute_count(); ++m)
      if (context.column(m) == node.extent) node.attribute_labels.push_back(context.attributes()[m]);
  return d;
}

LatticeDiagram scale_lattice_diagram(const ScaleMeasure& sm, bool with_cnf) {
  const auto family = reflected_extents(sm);
  auto d = skeleton(sm.base, family);
  for (auto& node : d.nodes) {
    for (std::size_t m = 0; m < sm.scale.attribute_count(); ++m)
      if (sm.preimage(sm.scale.column(m)) == node.extent) node.attribute_labels.push_back(sm.scale.attributes()[m]);
    if (with_cnf) node.cnf_label = conjunction_label(sm.base, node.intent);
  }
  return d;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

}  // namespace

std::string to_dot(const LatticeDiagram& diagram, const std::string& graph_name) {
  std::ostringstream out;
  out << "digraph \"" << dot_escape(graph_name) << "\" {\n  rankdir=BT;\n  node [shape=box, fontsize=10];\n";
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const auto& n = diagram.nodes[i];
    std::vector<std::string> lines;
    if (!n.attribute_labels.empty()) lines.push_back(join(n.attribute_labels, ", "));
    if (!n.cnf_label.empty()) lines.push_back(n.cnf_label);
    if (!n.object_labels.empty()) lines.push_back(join(n.object_labels, ", "));
    out << "  n" << i << " [label=\"" << dot_escape(join(lines, "\n")) << "\"];\n";
  }
  for (const auto& [lo, hi] : diagram.edges) out << "  n" << lo << " -> n" << hi << " [dir=none];\n";
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const LatticeDiagram& diagram, const FormalContext& base) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const auto& n = diagram.nodes[i];
    nlohmann::json node = {{"id", i},
                           {"extent", base.object_names(n.extent)},
                           {"intent", base.attribute_names(n.intent)},
                           {"object_labels", n.object_labels},
                           {"attribute_labels", n.attribute_labels}};
    if (!n.cnf_label.empty()) node["cnf"] = n.cnf_label;
    nodes.push_back(std::move(node));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [lo, hi] : diagram.edges) edges.push_back({{"lower", lo}, {"upper", hi}});
  return {{"nodes", nodes}, {"edges", edges}};
}

}  // namespace conscale
