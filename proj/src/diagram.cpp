#include "gaf/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <tuple>

namespace gaf {

bool Diagram::has_axis(std::string_view name) const {
  return std::find(axes.begin(), axes.end(), name) != axes.end();
}

const Chamber* Diagram::find_chamber(std::string_view name) const {
  for (const auto& c : chambers)
    if (c.name == name) return &c;
  return nullptr;
}

bool same_up_to_order(const Diagram& a, const Diagram& b) {
  auto axes_a = a.axes, axes_b = b.axes;
  std::sort(axes_a.begin(), axes_a.end());
  std::sort(axes_b.begin(), axes_b.end());
  if (axes_a != axes_b) return false;

  auto key = [](const Chamber& c) {
    return std::tuple(c.name, c.data.rank, c.data.orientable);
  };
  auto ch_a = a.chambers, ch_b = b.chambers;
  auto by_key = [&](const Chamber& x, const Chamber& y) { return key(x) < key(y); };
  std::sort(ch_a.begin(), ch_a.end(), by_key);
  std::sort(ch_b.begin(), ch_b.end(), by_key);
  if (ch_a != ch_b) return false;

  auto ed_a = a.edges, ed_b = b.edges;
  std::sort(ed_a.begin(), ed_a.end());
  std::sort(ed_b.begin(), ed_b.end());
  return ed_a == ed_b;
}

bool ValidationReport::has_rule(std::string_view r) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.rule == r; });
}

namespace {

std::string summarize(const ValidationReport& report) {
  std::string s = "invalid diagram";
  for (std::size_t i = 0; i < report.violations.size(); ++i) {
    s += i == 0 ? ": " : "; ";
    s += report.violations[i].message;
  }
  return s;
}

}  // namespace

InvalidDiagram::InvalidDiagram(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

bool surface_realizable(int rank, int boundaries, bool orientable) {
  if (rank < 1 || boundaries < 1) return false;
  const int excess = rank - boundaries + 1;
  if (orientable) return excess >= 0 && excess % 2 == 0;
  return excess >= 1;
}

int surface_genus(int rank, int boundaries, bool orientable) {
  if (!surface_realizable(rank, boundaries, orientable))
    throw PreconditionError("surface not realizable (rank " + std::to_string(rank) +
                            ", b " + std::to_string(boundaries) + ", " +
                            (orientable ? "orientable" : "nonorientable") + ")");
  const int excess = rank - boundaries + 1;
  return orientable ? excess / 2 : excess;
}

ValidationReport validate(const Diagram& d, const ValidationOptions& options) {
  ValidationReport report;
  auto add = [&](std::string_view r, std::string message, std::string element) {
    report.violations.push_back({std::string(r), std::move(message), std::move(element)});
  };

  if (d.axes.empty() && d.chambers.empty()) {
    add(rule::empty, "diagram has no vertices", "");
  }

  // Vertex table. Names shared between an axis and a chamber are duplicates
  // too, since edges would be ambiguous.
  std::map<std::string, int> name_count;
  for (const auto& a : d.axes) ++name_count[a];
  for (const auto& c : d.chambers) ++name_count[c.name];
  for (const auto& [name, count] : name_count)
    if (count > 1) add(rule::duplicate_identifier, "duplicate identifier " + name, name);

  std::map<std::string, int> vertex_id;
  std::set<std::string> axis_set(d.axes.begin(), d.axes.end());
  std::map<std::string, const Chamber*> chamber_map;
  for (const auto& c : d.chambers) chamber_map.emplace(c.name, &c);
  for (const auto& [name, count] : name_count) {
    const int id = static_cast<int>(vertex_id.size());
    vertex_id.emplace(name, id);
  }

  std::vector<int> parent(vertex_id.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };

  std::map<std::string, int> axis_deg, chamber_deg;
  std::map<std::string, std::set<std::string>> axis_neighbors;
  std::set<Edge> dangling;
  for (const auto& e : d.edges) {
    const bool axis_ok = axis_set.count(e.axis) > 0;
    const bool chamber_ok = chamber_map.count(e.chamber) > 0;
    if (!axis_ok || !chamber_ok) {
      dangling.insert(e);
      continue;
    }
    ++axis_deg[e.axis];
    ++chamber_deg[e.chamber];
    axis_neighbors[e.axis].insert(e.chamber);
    parent[find(vertex_id.at(e.axis))] = find(vertex_id.at(e.chamber));
  }
  for (const auto& e : dangling) {
    std::string missing = !axis_set.count(e.axis) ? "axis " + e.axis : "chamber " + e.chamber;
    add(rule::dangling_reference, "edge " + e.axis + " " + e.chamber + " references unknown " + missing,
        e.axis + " " + e.chamber);
  }

  std::set<int> roots;
  for (const auto& [name, id] : vertex_id) roots.insert(find(id));
  if (roots.size() > 1)
    add(rule::connectivity,
        "diagram is disconnected (" + std::to_string(roots.size()) + " components)", "");

  for (const auto& a : std::set<std::string>(d.axes.begin(), d.axes.end())) {
    const int deg = axis_deg.count(a) ? axis_deg[a] : 0;
    const int distinct = static_cast<int>(axis_neighbors[a].size());
    if (deg < 3) {
      add(rule::axis_degree, "axis degree < 3 (axis " + a + ", degree " + std::to_string(deg) + ")", a);
    } else if (options.thickness == ThicknessMode::strict && distinct < 3) {
      add(rule::axis_thickness,
          "axis meets fewer than 3 distinct chambers (axis " + a + ", " + std::to_string(distinct) + ")",
          a);
    }
  }

  for (const auto& [name, chamber] : chamber_map) {
    const auto& data = chamber->data;
    const int b = chamber_deg.count(name) ? chamber_deg[name] : 0;
    if (data.rank < 2)
      add(rule::chamber_rank,
          "chamber rank < 2 (chamber " + name + ", rank " + std::to_string(data.rank) + ")", name);
    if (b == 0) add(rule::chamber_boundary, "chamber has no incident edge (chamber " + name + ")", name);
    if (b >= 1 && data.rank >= 1 && !surface_realizable(data.rank, b, data.orientable))
      add(rule::surface_realizability,
          "surface not realizable (rank " + std::to_string(data.rank) + ", b " + std::to_string(b) +
              ", " + (data.orientable ? "orientable" : "nonorientable") + ", chamber " + name + ")",
          name);
    if (options.orientable_only && !data.orientable)
      add(rule::nonorientable_chamber, "nonorientable chamber " + name, name);
  }

  std::sort(report.violations.begin(), report.violations.end(),
            [](const Violation& x, const Violation& y) {
              return std::tie(x.rule, x.element, x.message) < std::tie(y.rule, y.element, y.message);
            });
  report.violations.erase(std::unique(report.violations.begin(), report.violations.end()),
                          report.violations.end());
  report.valid = report.violations.empty();
  return report;
}

void require_valid(const Diagram& d, const ValidationOptions& options) {
  auto report = validate(d, options);
  if (!report.valid) throw InvalidDiagram(std::move(report));
}

int boundary_count(const Diagram& d, std::string_view chamber) {
  if (!d.find_chamber(chamber)) throw UnknownIdentifier("unknown chamber " + std::string(chamber));
  return static_cast<int>(std::count_if(d.edges.begin(), d.edges.end(),
                                        [&](const Edge& e) { return e.chamber == chamber; }));
}

int axis_degree(const Diagram& d, std::string_view axis) {
  if (!d.has_axis(axis)) throw UnknownIdentifier("unknown axis " + std::string(axis));
  return static_cast<int>(std::count_if(d.edges.begin(), d.edges.end(),
                                        [&](const Edge& e) { return e.axis == axis; }));
}

long euler_characteristic(const Diagram& d) {
  require_valid(d);
  long chi = 0;
  for (const auto& c : d.chambers) chi += 1 - c.data.rank;
  return chi;
}

}  // namespace gaf
