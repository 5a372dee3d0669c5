#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gaf/diagram.hpp"

namespace gaf::testing {

inline Diagram tripod(std::vector<ChamberData> types) {
  Diagram d;
  d.axes = {"v"};
  for (std::size_t i = 0; i < types.size(); ++i) {
    const std::string name = "w" + std::to_string(i + 1);
    d.chambers.push_back({name, types[i]});
    d.edges.push_back({"v", name});
  }
  return d;
}

/// One axis, three once-punctured tori.
inline Diagram delta0() { return tripod({{2, true}, {2, true}, {2, true}}); }

/// One axis, three rank-2 nonorientable chambers with one boundary each.
inline Diagram nonorientable_tripod() { return tripod({{2, false}, {2, false}, {2, false}}); }

/// Two axes, three chambers each glued to both axes; ranks given per chamber.
inline Diagram theta(std::vector<int> ranks = {3, 3, 3}) {
  Diagram d;
  d.axes = {"u", "v"};
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    const std::string name = "w" + std::to_string(i + 1);
    d.chambers.push_back({name, {ranks[i], true}});
    d.edges.push_back({"u", name});
    d.edges.push_back({"v", name});
  }
  return d;
}

/// Renames every vertex and shuffles all three storage lists.
inline Diagram relabel(const Diagram& d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  auto shuffle = [&](auto& xs) {
    for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[draw(i)]);
  };
  std::vector<std::size_t> axis_perm(d.axes.size()), chamber_perm(d.chambers.size());
  for (std::size_t i = 0; i < axis_perm.size(); ++i) axis_perm[i] = i;
  for (std::size_t i = 0; i < chamber_perm.size(); ++i) chamber_perm[i] = i;
  shuffle(axis_perm);
  shuffle(chamber_perm);
  const std::string tag = std::to_string(seed % 1000);
  auto axis_name = [&](const std::string& old) {
    const auto i = std::find(d.axes.begin(), d.axes.end(), old) - d.axes.begin();
    return "ax" + tag + "_" + std::to_string(axis_perm[i]);
  };
  auto chamber_name = [&](const std::string& old) {
    std::size_t i = 0;
    while (d.chambers[i].name != old) ++i;
    return "ch" + tag + "_" + std::to_string(chamber_perm[i]);
  };
  Diagram out;
  for (const auto& a : d.axes) out.axes.push_back(axis_name(a));
  for (const auto& c : d.chambers) out.chambers.push_back({chamber_name(c.name), c.data});
  for (const auto& e : d.edges) out.edges.push_back({axis_name(e.axis), chamber_name(e.chamber)});
  shuffle(out.axes);
  shuffle(out.chambers);
  shuffle(out.edges);
  return out;
}

}  // namespace gaf::testing
