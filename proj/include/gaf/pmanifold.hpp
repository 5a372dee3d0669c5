#pragma once

// Combinatorial model of the 2-complex glued from the chamber surfaces along
// the axis circles, and its integral homology.

#include <string>
#include <vector>

#include "gaf/diagram.hpp"
#include "gaf/int_matrix.hpp"

namespace gaf {

struct SurfacePiece {
  std::string name;
  int rank = 2;
  bool orientable = true;
  /// attachments[j] is the circle glued to boundary slot j.
  std::vector<std::string> attachments;

  friend bool operator==(const SurfacePiece&, const SurfacePiece&) = default;
};

struct IncidenceStructure {
  std::vector<std::string> circles;
  std::vector<SurfacePiece> pieces;

  std::string to_json() const;
  friend bool operator==(const IncidenceStructure&, const IncidenceStructure&) = default;
};

/// One circle per axis, one piece per chamber, one attachment per edge in
/// the slot order used for boundary words.
IncidenceStructure realize(const Diagram& d);

/// Reads the diagram back off an incidence structure. Throws InvalidDiagram
/// when the structure is thin or has an unrealizable piece, and
/// UnknownIdentifier for attachments to undeclared circles.
Diagram diagram_of(const IncidenceStructure& s);

/// Rows are axes and columns chambers (storage order); entries count edges.
IntMatrix chamber_multiplicity_matrix(const Diagram& d);

struct BettiNumbers {
  long b0 = 0;
  long b1 = 0;
  long b2 = 0;

  friend bool operator==(const BettiNumbers&, const BettiNumbers&) = default;
};

/// b1 comes from the abelianization. b2 is the nullity of the multiplicity
/// matrix restricted to orientable chambers: a 2-cycle assigns one integer
/// to each orientable piece (its boundary classes sum to zero), every
/// nonorientable piece is forced to zero by its crosscap term, and each
/// circle must receive zero in total.
BettiNumbers betti_numbers(const Diagram& d);

}  // namespace gaf
