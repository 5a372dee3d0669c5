#pragma once

// Data model of a geometric amalgamation of free groups: a finite bipartite
// multigraph whose axis vertices carry infinite cyclic groups and whose
// chamber vertices carry free groups realized by compact surfaces with
// boundary. Every edge glues one boundary component of a chamber to an axis.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaf/error.hpp"

namespace gaf {

struct ChamberData {
  int rank = 2;
  bool orientable = true;

  friend bool operator==(const ChamberData&, const ChamberData&) = default;
  friend auto operator<=>(const ChamberData&, const ChamberData&) = default;
};

struct Chamber {
  std::string name;
  ChamberData data;

  friend bool operator==(const Chamber&, const Chamber&) = default;
};

/// One boundary-component identification. Direction is always axis -> chamber.
struct Edge {
  std::string axis;
  std::string chamber;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Diagram {
  std::vector<std::string> axes;
  std::vector<Chamber> chambers;
  std::vector<Edge> edges;

  /// Storage-order equality. Use same_up_to_order for set semantics.
  friend bool operator==(const Diagram&, const Diagram&) = default;

  bool has_axis(std::string_view name) const;
  const Chamber* find_chamber(std::string_view name) const;
  std::size_t vertex_count() const { return axes.size() + chambers.size(); }
};

/// True when both diagrams list the same axes, chambers and edge multiset,
/// ignoring storage order.
bool same_up_to_order(const Diagram& a, const Diagram& b);

enum class ThicknessMode {
  strict,  // every axis meets >= 3 distinct chambers
  lax,     // every axis has edge-degree >= 3 (multi-edges count separately)
};

struct ValidationOptions {
  ThicknessMode thickness = ThicknessMode::strict;
  /// Restrict chambers to orientable surfaces.
  bool orientable_only = false;
};

namespace rule {
inline constexpr std::string_view empty = "empty-diagram";
inline constexpr std::string_view duplicate_identifier = "duplicate-identifier";
inline constexpr std::string_view dangling_reference = "dangling-reference";
inline constexpr std::string_view connectivity = "connectivity";
inline constexpr std::string_view axis_degree = "axis-degree";
inline constexpr std::string_view axis_thickness = "axis-thickness";
inline constexpr std::string_view chamber_rank = "chamber-rank";
inline constexpr std::string_view chamber_boundary = "chamber-boundary";
inline constexpr std::string_view surface_realizability = "surface-realizability";
inline constexpr std::string_view nonorientable_chamber = "nonorientable-chamber";
}  // namespace rule

struct Violation {
  std::string rule;
  std::string message;
  std::string element;

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;

  bool has_rule(std::string_view rule) const;
};

/// Thrown by operations whose precondition is a valid diagram.
class InvalidDiagram : public Error {
 public:
  explicit InvalidDiagram(ValidationReport report);
  const ValidationReport& report() const noexcept { return report_; }

 private:
  ValidationReport report_;
};

/// Whether a compact surface with `boundaries` boundary components, the given
/// orientability and free fundamental group of rank `rank` exists.
/// Orientable genus g: rank = 2g + b - 1. Nonorientable with c >= 1
/// crosscaps: rank = c + b - 1.
bool surface_realizable(int rank, int boundaries, bool orientable);

/// Genus (orientable) or crosscap number (nonorientable) of the realizing
/// surface. Throws PreconditionError if the type is not realizable.
int surface_genus(int rank, int boundaries, bool orientable);

/// Reports every violated rule; never throws.
ValidationReport validate(const Diagram& d, const ValidationOptions& options = {});

/// Throws InvalidDiagram when validate(d, options) is not valid.
void require_valid(const Diagram& d, const ValidationOptions& options = {});

/// Number of edges incident to chamber `chamber`.
int boundary_count(const Diagram& d, std::string_view chamber);

/// Number of edges incident to axis `axis`.
int axis_degree(const Diagram& d, std::string_view axis);

/// Euler characteristic of the associated 2-complex: sum over chambers of
/// (1 - rank). Circles contribute zero.
long euler_characteristic(const Diagram& d);

}  // namespace gaf
