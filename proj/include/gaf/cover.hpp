#pragma once

// Truncated incidence tree of the universal cover: geodesic nodes are lifts
// of axis circles, chamber nodes are lifts of chambers, and a chamber node
// is joined to the geodesic lifts of its boundary circles.
//
// Every boundary circle of a chamber lift has infinitely many lifts in the
// cover; the tree keeps `fanout` of them per boundary slot (fanout - 1 extra
// through the slot leading back to the parent), and stops at `depth` levels
// with the root geodesic at level 1.

#include <string>
#include <vector>

#include "gaf/diagram.hpp"

namespace gaf {

enum class NodeKind { geodesic, chamber };

struct CoverNode {
  int id = 0;
  NodeKind kind = NodeKind::geodesic;
  std::string label;  // axis name or chamber name
  int parent = -1;    // -1 for the root
  int level = 1;
  /// Boundary slot of the chamber node that this node hangs off (for
  /// geodesics) or that leads to its parent geodesic (for chambers); -1 at the root.
  int slot = -1;
  std::vector<int> children;
};

class CoverTree {
 public:
  CoverTree(std::vector<CoverNode> nodes, int depth, int fanout)
      : nodes_(std::move(nodes)), depth_(depth), fanout_(fanout) {}

  const std::vector<CoverNode>& nodes() const { return nodes_; }
  const CoverNode& node(int id) const;
  int depth() const { return depth_; }
  int fanout() const { return fanout_; }
  std::size_t size() const { return nodes_.size(); }

  /// Parent first, then children in construction order.
  std::vector<int> neighbors(int id) const;

  std::string to_dot() const;
  std::string to_json() const;

 private:
  std::vector<CoverNode> nodes_;
  int depth_;
  int fanout_;
};

/// Breadth-first, children in slot order then lift index. Throws
/// InvalidDiagram, UnknownIdentifier for the root axis, PreconditionError for
/// depth < 1 or fanout < 1.
CoverTree build_cover_tree(const Diagram& d, const std::string& root_axis, int depth, int fanout);

/// Distinct geodesic nodes with a common chamber neighbour. Throws
/// UnknownIdentifier for ids outside the tree and PreconditionError for
/// chamber nodes.
bool adjacent(const CoverTree& t, int g1, int g2);

/// Maximal cliques of the adjacency relation on geodesic nodes, each sorted,
/// the list sorted.
std::vector<std::vector<int>> maximal_transitive_sets(const CoverTree& t);

/// Geodesic neighbours of a chamber node, sorted.
std::vector<int> chamber_neighbor_set(const CoverTree& t, int chamber_node);

/// Connected components of the tree with node n removed.
int components_after_removal(const CoverTree& t, int n);

}  // namespace gaf
