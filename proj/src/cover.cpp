#include "gaf/cover.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <sstream>

#include "gaf/diagram_index.hpp"
#include "json.hpp"

namespace gaf {

const CoverNode& CoverTree::node(int id) const {
  if (id < 0 || id >= static_cast<int>(nodes_.size()))
    throw UnknownIdentifier("unknown cover node " + std::to_string(id));
  return nodes_[id];
}

std::vector<int> CoverTree::neighbors(int id) const {
  const auto& n = node(id);
  std::vector<int> out;
  if (n.parent >= 0) out.push_back(n.parent);
  out.insert(out.end(), n.children.begin(), n.children.end());
  return out;
}

std::string CoverTree::to_dot() const {
  std::ostringstream out;
  out << "graph cover {\n";
  for (const auto& n : nodes_)
    out << "  n" << n.id << " [shape=" << (n.kind == NodeKind::geodesic ? "circle" : "box") << ", label=\""
        << n.label << "\"];\n";
  for (const auto& n : nodes_)
    if (n.parent >= 0) out << "  n" << n.parent << " -- n" << n.id << ";\n";
  out << "}\n";
  return out.str();
}

std::string CoverTree::to_json() const {
  using nlohmann::json;
  json doc;
  doc["depth"] = depth_;
  doc["fanout"] = fanout_;
  doc["nodes"] = json::array();
  for (const auto& n : nodes_) {
    json entry = {{"id", n.id},
                  {"kind", n.kind == NodeKind::geodesic ? "geodesic" : "chamber"},
                  {"label", n.label},
                  {"level", n.level}};
    entry["parent"] = n.parent >= 0 ? json(n.parent) : json(nullptr);
    doc["nodes"].push_back(std::move(entry));
  }
  return doc.dump(2) + "\n";
}

CoverTree build_cover_tree(const Diagram& d, const std::string& root_axis, int depth, int fanout) {
  require_valid(d);
  if (depth < 1) throw PreconditionError("cover tree depth must be >= 1");
  if (fanout < 1) throw PreconditionError("cover tree fanout must be >= 1");
  const DiagramIndex index(d);
  const int root = index.axis_index(root_axis);
  if (root < 0) throw UnknownIdentifier("unknown axis " + root_axis);

  // Per node: the base vertex index, and for geodesics the position of the
  // entry edge in axis_ends (-1 at the root).
  struct Origin {
    int base;
    int entry;
  };
  std::vector<CoverNode> nodes;
  std::vector<Origin> origin;
  auto add = [&](NodeKind kind, int base, int entry, int parent, int slot) {
    CoverNode n;
    n.id = static_cast<int>(nodes.size());
    n.kind = kind;
    n.label = kind == NodeKind::geodesic ? index.axis_name(base) : index.chamber_name(base);
    n.parent = parent;
    n.level = parent < 0 ? 1 : nodes[parent].level + 1;
    n.slot = slot;
    if (parent >= 0) nodes[parent].children.push_back(n.id);
    nodes.push_back(std::move(n));
    origin.push_back({base, entry});
  };

  add(NodeKind::geodesic, root, -1, -1, -1);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].level >= depth) continue;
    const int id = static_cast<int>(i);
    const auto [base, entry] = origin[i];
    if (nodes[i].kind == NodeKind::geodesic) {
      const auto& ends = index.axis_ends(base);
      for (int k = 0; k < static_cast<int>(ends.size()); ++k)
        if (k != entry) add(NodeKind::chamber, ends[k].chamber, -1, id, ends[k].slot);
    } else {
      const auto& slots = index.slots(base);
      const int parent_slot = nodes[i].slot;
      for (int j = 0; j < static_cast<int>(slots.size()); ++j) {
        const int axis = slots[j].axis;
        const auto& ends = index.axis_ends(axis);
        int entry_end = 0;
        while (ends[entry_end].chamber != base || ends[entry_end].slot != j) ++entry_end;
        const int lifts = j == parent_slot ? fanout - 1 : fanout;
        for (int lift = 0; lift < lifts; ++lift) add(NodeKind::geodesic, axis, entry_end, id, j);
      }
    }
  }
  return CoverTree(std::move(nodes), depth, fanout);
}

namespace {

const CoverNode& geodesic_node(const CoverTree& t, int id) {
  const auto& n = t.node(id);
  if (n.kind != NodeKind::geodesic)
    throw PreconditionError("cover node " + std::to_string(id) + " is not a geodesic node");
  return n;
}

}  // namespace

std::vector<int> chamber_neighbor_set(const CoverTree& t, int chamber_node) {
  if (t.node(chamber_node).kind != NodeKind::chamber)
    throw PreconditionError("cover node " + std::to_string(chamber_node) + " is not a chamber node");
  auto out = t.neighbors(chamber_node);
  std::sort(out.begin(), out.end());
  return out;
}

bool adjacent(const CoverTree& t, int g1, int g2) {
  geodesic_node(t, g1);
  geodesic_node(t, g2);
  if (g1 == g2) return false;
  const auto n1 = t.neighbors(g1);
  const auto n2 = t.neighbors(g2);
  return std::any_of(n1.begin(), n1.end(),
                     [&](int c) { return std::find(n2.begin(), n2.end(), c) != n2.end(); });
}

std::vector<std::vector<int>> maximal_transitive_sets(const CoverTree& t) {
  std::vector<int> geodesics;
  for (const auto& n : t.nodes())
    if (n.kind == NodeKind::geodesic) geodesics.push_back(n.id);

  std::vector<std::set<int>> adj(t.size());
  for (const auto& n : t.nodes()) {
    if (n.kind != NodeKind::chamber) continue;
    const auto around = t.neighbors(n.id);
    for (int x : around)
      for (int y : around)
        if (x != y) adj[x].insert(y);
  }

  // Bron-Kerbosch with pivoting.
  std::vector<std::vector<int>> cliques;
  std::vector<int> current;
  std::function<void(std::set<int>, std::set<int>)> expand = [&](std::set<int> candidates,
                                                                 std::set<int> excluded) {
    if (candidates.empty() && excluded.empty()) {
      auto clique = current;
      std::sort(clique.begin(), clique.end());
      cliques.push_back(std::move(clique));
      return;
    }
    int pivot = candidates.empty() ? *excluded.begin() : *candidates.begin();
    std::size_t best = 0;
    for (const auto* pool : {&candidates, &excluded})
      for (int u : *pool) {
        std::size_t hits = 0;
        for (int v : candidates) hits += adj[u].count(v);
        if (hits > best) {
          best = hits;
          pivot = u;
        }
      }
    std::vector<int> branch;
    for (int v : candidates)
      if (!adj[pivot].count(v)) branch.push_back(v);
    for (int v : branch) {
      std::set<int> next_candidates, next_excluded;
      for (int u : candidates)
        if (adj[v].count(u)) next_candidates.insert(u);
      for (int u : excluded)
        if (adj[v].count(u)) next_excluded.insert(u);
      current.push_back(v);
      expand(std::move(next_candidates), std::move(next_excluded));
      current.pop_back();
      candidates.erase(v);
      excluded.insert(v);
    }
  };
  expand(std::set<int>(geodesics.begin(), geodesics.end()), {});
  std::sort(cliques.begin(), cliques.end());
  return cliques;
}

int components_after_removal(const CoverTree& t, int n) {
  t.node(n);
  std::vector<bool> seen(t.size(), false);
  seen[n] = true;
  int components = 0;
  for (int start = 0; start < static_cast<int>(t.size()); ++start) {
    if (seen[start]) continue;
    ++components;
    std::deque<int> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop_front();
      for (int y : t.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          queue.push_back(y);
        }
    }
  }
  return components;
}

}  // namespace gaf
