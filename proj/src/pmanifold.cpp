#include "gaf/pmanifold.hpp"

#include <set>

#include "gaf/diagram_index.hpp"
#include "gaf/limit_group.hpp"
#include "json.hpp"

namespace gaf {

std::string IncidenceStructure::to_json() const {
  using nlohmann::json;
  json doc;
  doc["circles"] = circles;
  doc["surface_pieces"] = json::array();
  for (const auto& p : pieces)
    doc["surface_pieces"].push_back(
        {{"name", p.name}, {"rank", p.rank}, {"orientable", p.orientable}, {"attachments", p.attachments}});
  return doc.dump(2) + "\n";
}

IncidenceStructure realize(const Diagram& d) {
  require_valid(d);
  const DiagramIndex index(d);
  IncidenceStructure s;
  s.circles = d.axes;
  for (int c = 0; c < index.chamber_count(); ++c) {
    SurfacePiece piece{index.chamber_name(c), index.chamber_data(c).rank, index.chamber_data(c).orientable, {}};
    for (const auto& slot : index.slots(c)) piece.attachments.push_back(index.axis_name(slot.axis));
    s.pieces.push_back(std::move(piece));
  }
  return s;
}

Diagram diagram_of(const IncidenceStructure& s) {
  const std::set<std::string> circles(s.circles.begin(), s.circles.end());
  Diagram d;
  d.axes = s.circles;
  for (const auto& p : s.pieces) {
    d.chambers.push_back({p.name, {p.rank, p.orientable}});
    for (const auto& circle : p.attachments) {
      if (!circles.count(circle))
        throw UnknownIdentifier("piece " + p.name + " is attached to unknown circle " + circle);
      d.edges.push_back({circle, p.name});
    }
  }
  require_valid(d);
  return d;
}

IntMatrix chamber_multiplicity_matrix(const Diagram& d) {
  require_valid(d);
  const DiagramIndex index(d);
  IntMatrix m(index.axis_count(), index.chamber_count());
  for (int a = 0; a < index.axis_count(); ++a)
    for (int c = 0; c < index.chamber_count(); ++c) m(a, c) = index.multiplicity(a, c);
  return m;
}

BettiNumbers betti_numbers(const Diagram& d) {
  const IntMatrix full = chamber_multiplicity_matrix(d);
  std::vector<std::size_t> orientable_cols;
  for (std::size_t c = 0; c < d.chambers.size(); ++c)
    if (d.chambers[c].data.orientable) orientable_cols.push_back(c);
  IntMatrix restricted(full.rows(), orientable_cols.size());
  for (std::size_t r = 0; r < full.rows(); ++r)
    for (std::size_t j = 0; j < orientable_cols.size(); ++j) restricted(r, j) = full(r, orientable_cols[j]);

  BettiNumbers b;
  b.b0 = 1;
  b.b1 = static_cast<long>(abelianization(d).free_rank);
  b.b2 = static_cast<long>(orientable_cols.size() - smith_normal_form(restricted).rank);
  return b;
}

}  // namespace gaf
