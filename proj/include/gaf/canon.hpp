#pragma once

// Canonical codes for decorated diagrams. Two valid diagrams get the same code
// exactly when some bijection of axes and chambers preserves chamber
// decorations (rank, orientability) and every axis-chamber edge multiplicity.
// For geometric amalgamations this decides isomorphism of the limit groups.
//
// Code layout (all integers big-endian u32 unless noted):
//   "GAFC" 0x01                      format tag and version
//   n_axes, n_chambers
//   n_chambers, then per chamber:    rank, orientable (u8, 1 = yes)
//   n_triples, then per triple:      axis index, chamber index, multiplicity
// Chambers appear in canonical order, which sorts decorations by
// (rank, orientable before nonorientable). Triples are sorted. Among all
// labelings reachable by refinement and individualization, the code is the
// lexicographically smallest.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gaf/diagram.hpp"

namespace gaf {

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  /// "gafc1:" followed by lowercase hex.
  std::string to_string() const;
  static CanonicalCode from_string(std::string_view text);

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct IsoWitness {
  std::map<std::string, std::string> axis_map;
  std::map<std::string, std::string> chamber_map;
};

CanonicalCode canonical_code(const Diagram& d);

/// Rebuilds a diagram from a code. Axes are named v0, v1, ... and chambers
/// w0, w1, ... in canonical order.
Diagram decode(const CanonicalCode& code);

bool are_isomorphic(const Diagram& d1, const Diagram& d2);

std::optional<IsoWitness> find_isomorphism(const Diagram& d1, const Diagram& d2);

/// Renames d's axes and chambers through the witness.
Diagram apply_witness(const Diagram& d, const IsoWitness& w);

/// True when the witness is a bijection that maps d1 onto d2 exactly,
/// decorations and edge multiplicities included.
bool verify_witness(const Diagram& d1, const Diagram& d2, const IsoWitness& w);

using BigCount = boost::multiprecision::cpp_int;

/// Number of decoration- and multiplicity-preserving vertex permutations.
BigCount automorphism_count(const Diagram& d);

inline constexpr std::size_t default_brute_force_bound = 12;

/// Exhaustive search over all decoration-respecting bijections. Throws
/// SizeBoundExceeded if either diagram has more than `max_vertices` vertices.
bool brute_force_isomorphic(const Diagram& d1, const Diagram& d2,
                            std::size_t max_vertices = default_brute_force_bound);

struct EnumerationBounds {
  int max_axes = 1;
  int max_chambers = 3;
  int max_rank = 2;
  bool orientable_only = false;
  /// Off by default: enumerated diagrams are simple bipartite graphs.
  bool allow_multi_edges = false;
};

/// One code per isomorphism class of valid diagrams within the bounds,
/// sorted, duplicate free.
std::vector<CanonicalCode> enumerate_diagrams(const EnumerationBounds& bounds);

std::vector<CanonicalCode> enumerate_diagrams(int max_axes, int max_chambers, int max_rank,
                                              bool orientable_only);

/// Deterministic in the seed; the result always validates. Throws
/// InfeasibleParameters when no valid diagram is found.
Diagram random_diagram(std::uint64_t seed, int axes, int chambers, int max_rank);

}  // namespace gaf
