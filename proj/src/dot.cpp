#include "tiedbracket/dot.hpp"

#include <string>
#include <vector>

namespace tiedbracket {

namespace {

std::string quote(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

DotStats write_tree_dot(std::ostream& out, const TiedDiagram& d, Strategy& strategy,
                        std::size_t max_nodes) {
  validate(d);
  DotStats stats;
  std::vector<std::string> paths;
  out << "digraph resolution {\n";
  out << "  node [shape=ellipse, fontname=\"monospace\"];\n";
  walk_tree(d, strategy, [&](const TreeNode& node) {
    if (stats.nodes >= max_nodes) {
      stats.truncated = true;
      return false;
    }
    ++stats.nodes;
    std::string path = node.parent ? paths[*node.parent] : std::string();
    if (node.via) {
      if (!path.empty()) path += ' ';
      path += std::to_string(node.via_origin) + ':' + to_string(*node.via);
    }
    paths.push_back(path);

    std::string label = "(" + std::to_string(node.complexity.total) + "," +
                        std::to_string(node.complexity.illegal) + ")";
    label += "\\n" + (path.empty() ? std::string("root") : path);
    if (node.leaf) {
      label += "\\nk=" + std::to_string(component_count(*node.diagram)) +
               " gamma=" + std::to_string(node.diagram->color_count());
    }
    out << "  n" << node.id << " [label=" << quote(label);
    if (node.leaf) out << ", shape=box";
    out << "];\n";
    if (node.parent) {
      out << "  n" << *node.parent << " -> n" << node.id << " [label=" << quote(label_text(*node.via))
          << "];\n";
    }
    return true;
  });
  if (stats.truncated) {
    out << "  truncated [shape=note, label="
        << quote("output truncated after " + std::to_string(max_nodes) + " nodes") << "];\n";
  }
  out << "}\n";
  return stats;
}

}  // namespace tiedbracket
