#pragma once

#include <map>
#include <string>
#include <vector>

#include "gaf/diagram.hpp"

namespace gaf {

/// Boundary slot of a chamber: the slot-th boundary component is glued to
/// `axis`, and it is the `occurrence`-th parallel edge of that pair.
struct Slot {
  int axis;
  int occurrence;
};

/// An edge seen from its axis, ordered by (chamber name, occurrence).
struct AxisEnd {
  int chamber;
  int occurrence;
  int slot;  // boundary slot at the chamber
};

/// Integer-indexed view of a structurally well-formed diagram (no dangling
/// references, no duplicate names). Indices follow storage order.
///
/// Slot convention: the edges at a chamber are sorted by (axis name,
/// occurrence) and numbered 0..b-1; every module that assigns boundary words
/// or attachments uses this order.
class DiagramIndex {
 public:
  explicit DiagramIndex(const Diagram& d);

  int axis_count() const { return static_cast<int>(axis_names_.size()); }
  int chamber_count() const { return static_cast<int>(chambers_.size()); }

  const std::string& axis_name(int a) const { return axis_names_[a]; }
  const std::string& chamber_name(int c) const { return chambers_[c].name; }
  const ChamberData& chamber_data(int c) const { return chambers_[c].data; }

  int axis_index(const std::string& name) const;     // -1 if absent
  int chamber_index(const std::string& name) const;  // -1 if absent

  int multiplicity(int a, int c) const { return mult_[a][c]; }
  int axis_degree(int a) const { return axis_degree_[a]; }
  int chamber_degree(int c) const { return static_cast<int>(slots_[c].size()); }

  const std::vector<Slot>& slots(int c) const { return slots_[c]; }
  const std::vector<AxisEnd>& axis_ends(int a) const { return axis_ends_[a]; }

  /// Indices sorted by name.
  const std::vector<int>& axes_by_name() const { return axes_by_name_; }
  const std::vector<int>& chambers_by_name() const { return chambers_by_name_; }

 private:
  std::vector<std::string> axis_names_;
  std::vector<Chamber> chambers_;
  std::map<std::string, int, std::less<>> axis_lookup_;
  std::map<std::string, int, std::less<>> chamber_lookup_;
  std::vector<std::vector<int>> mult_;
  std::vector<int> axis_degree_;
  std::vector<std::vector<Slot>> slots_;
  std::vector<std::vector<AxisEnd>> axis_ends_;
  std::vector<int> axes_by_name_;
  std::vector<int> chambers_by_name_;
};

}  // namespace gaf
