#include "gaf/diagram_index.hpp"

#include <algorithm>
#include <numeric>

namespace gaf {

DiagramIndex::DiagramIndex(const Diagram& d) : axis_names_(d.axes), chambers_(d.chambers) {
  for (int a = 0; a < axis_count(); ++a) axis_lookup_.emplace(axis_names_[a], a);
  for (int c = 0; c < chamber_count(); ++c) chamber_lookup_.emplace(chambers_[c].name, c);

  mult_.assign(axis_count(), std::vector<int>(chamber_count(), 0));
  axis_degree_.assign(axis_count(), 0);
  for (const auto& e : d.edges) {
    const int a = axis_index(e.axis);
    const int c = chamber_index(e.chamber);
    if (a < 0 || c < 0) throw UnknownIdentifier("edge " + e.axis + " " + e.chamber + " is dangling");
    ++mult_[a][c];
    ++axis_degree_[a];
  }

  axes_by_name_.resize(axis_count());
  std::iota(axes_by_name_.begin(), axes_by_name_.end(), 0);
  std::sort(axes_by_name_.begin(), axes_by_name_.end(),
            [&](int x, int y) { return axis_names_[x] < axis_names_[y]; });
  chambers_by_name_.resize(chamber_count());
  std::iota(chambers_by_name_.begin(), chambers_by_name_.end(), 0);
  std::sort(chambers_by_name_.begin(), chambers_by_name_.end(),
            [&](int x, int y) { return chambers_[x].name < chambers_[y].name; });

  slots_.assign(chamber_count(), {});
  for (int c = 0; c < chamber_count(); ++c)
    for (int a : axes_by_name_)
      for (int k = 0; k < mult_[a][c]; ++k) slots_[c].push_back({a, k});

  axis_ends_.assign(axis_count(), {});
  for (int a = 0; a < axis_count(); ++a)
    for (int c : chambers_by_name_)
      for (int k = 0; k < mult_[a][c]; ++k) {
        int slot = 0;
        while (slots_[c][slot].axis != a || slots_[c][slot].occurrence != k) ++slot;
        axis_ends_[a].push_back({c, k, slot});
      }
}

int DiagramIndex::axis_index(const std::string& name) const {
  auto it = axis_lookup_.find(name);
  return it == axis_lookup_.end() ? -1 : it->second;
}

int DiagramIndex::chamber_index(const std::string& name) const {
  auto it = chamber_lookup_.find(name);
  return it == chamber_lookup_.end() ? -1 : it->second;
}

}  // namespace gaf
