#pragma once

// Finite presentations of the direct limit of a diagram, and its
// abelianization.
//
// Surface conventions. An orientable chamber of genus g with b boundary
// circles has generators a1,b1,...,ag,bg,c1,...,c(b-1); its boundary words are
// c_j for j < b and ([a1,b1]...[ag,bg] c1...c(b-1))^-1 for the last one.
// A nonorientable chamber with k crosscaps uses x1,...,xk,c1,...,c(b-1) and
// last boundary word (x1^2...xk^2 c1...c(b-1))^-1. Commutators are
// [a,b] = a b a^-1 b^-1.
//
// In a limit presentation chamber generators are qualified by the chamber
// name ("w1.a1") and axis generators are named "z_<axis>".

#include <string>
#include <vector>

#include "gaf/diagram.hpp"
#include "gaf/int_matrix.hpp"

namespace gaf {

struct Letter {
  std::string generator;
  int exponent = 1;  // +1 or -1

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// A freely reduced word. Construction through the public API keeps it
/// reduced.
class Word {
 public:
  Word() = default;
  /// Freely reduces its input.
  explicit Word(std::vector<Letter> letters);

  static Word generator(std::string name, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }

  Word inverse() const;
  friend Word operator*(const Word& x, const Word& y);

  /// Letters separated by '*', inverses as "^-1", identity as "1".
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction of an arbitrary letter sequence.
std::vector<Letter> free_reduce(std::vector<Letter> letters);

/// True when `a` is a cyclic permutation of `b` or of b^-1 (after cyclic
/// reduction), i.e. both define the same relator up to conjugacy and inversion.
bool same_relator(const Word& a, const Word& b);

Word commutator(const Word& x, const Word& y);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  /// "< g1, g2 | r1, r2 >"
  std::string to_string() const;
  std::string to_json() const;
};

/// Boundary words of the standard surface with the chamber's type and `b`
/// boundary circles, in slot order, over unqualified generators. Throws
/// PreconditionError when the type is not realizable.
std::vector<Word> boundary_words(const ChamberData& chamber, int b);

/// Generators of that surface group, in the order listed above.
std::vector<std::string> surface_generators(const ChamberData& chamber, int b);

/// With keep_axes (eliminate_axes = false) there is one generator z_v per
/// axis and a relator z_v * w_e^-1 per edge. Otherwise the axis generators
/// are substituted away, leaving w_e1 * w_ej^-1 for j = 2..deg(v), where e1 is
/// the first edge at v ordered by (chamber name, occurrence).
///
/// When the underlying graph has cycles, edges outside a spanning tree carry
/// a stable letter t.<axis>.<chamber>.<occurrence>, and their relator becomes
/// t * z_v * t^-1 * w_e^-1. The tree holds every first edge, then the others
/// greedily in axis-name, end order. The result presents the fundamental
/// group of the glued complex.
Presentation limit_presentation(const Diagram& d, bool eliminate_axes = true);

/// Rows are relators, columns generators, entries exponent sums.
IntMatrix exponent_sum_matrix(const Presentation& p);

/// Smith normal form of the exponent-sum matrix of the axis-eliminated
/// presentation. free_rank is the first Betti number.
SNFResult abelianization(const Diagram& d);

}  // namespace gaf
