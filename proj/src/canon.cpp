#include "gaf/canon.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <map>
#include <set>
#include <tuple>
#include <utility>

#include "gaf/diagram_index.hpp"

namespace gaf {

namespace {

// Vertices 0..na-1 are axes, na..na+nc-1 chambers.
struct Graph {
  int na = 0;
  int nc = 0;
  std::vector<ChamberData> decoration;
  std::vector<std::vector<int>> mult;  // [axis][chamber]
  std::vector<int> color;
  std::vector<std::vector<std::pair<int, int>>> adj;

  int size() const { return na + nc; }
};

int decoration_color(const ChamberData& c) { return 1 + 2 * c.rank + (c.orientable ? 0 : 1); }

Graph make_graph(std::vector<ChamberData> decoration, std::vector<std::vector<int>> mult) {
  Graph g;
  g.na = static_cast<int>(mult.size());
  g.nc = static_cast<int>(decoration.size());
  g.decoration = std::move(decoration);
  g.mult = std::move(mult);
  g.color.assign(g.size(), 0);
  for (int c = 0; c < g.nc; ++c) g.color[g.na + c] = decoration_color(g.decoration[c]);
  g.adj.assign(g.size(), {});
  for (int a = 0; a < g.na; ++a)
    for (int c = 0; c < g.nc; ++c)
      if (int m = g.mult[a][c]; m > 0) {
        g.adj[a].push_back({g.na + c, m});
        g.adj[g.na + c].push_back({a, m});
      }
  return g;
}

Graph make_graph(const Diagram& d) {
  DiagramIndex index(d);
  std::vector<ChamberData> decoration;
  for (int c = 0; c < index.chamber_count(); ++c) decoration.push_back(index.chamber_data(c));
  std::vector<std::vector<int>> mult(index.axis_count(), std::vector<int>(index.chamber_count()));
  for (int a = 0; a < index.axis_count(); ++a)
    for (int c = 0; c < index.chamber_count(); ++c) mult[a][c] = index.multiplicity(a, c);
  return make_graph(std::move(decoration), std::move(mult));
}

using Cells = std::vector<std::vector<int>>;

Cells initial_cells(const Graph& g) {
  std::vector<int> order(g.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return g.color[x] < g.color[y]; });
  Cells cells;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i == 0 || g.color[order[i]] != g.color[order[i - 1]]) cells.emplace_back();
    cells.back().push_back(order[i]);
  }
  return cells;
}

// Splits cells by the multiset of (neighbour cell, multiplicity) until
// stable. Cells are identified by their start position and split cells keep
// their place, so the result commutes with relabeling.
void refine(const Graph& g, Cells& cells) {
  std::vector<int> cell_of(g.size());
  using Signature = std::vector<std::pair<int, int>>;
  std::vector<Signature> sig(g.size());
  for (;;) {
    int start = 0;
    for (const auto& cell : cells) {
      for (int v : cell) cell_of[v] = start;
      start += static_cast<int>(cell.size());
    }
    bool changed = false;
    Cells next;
    next.reserve(cells.size());
    for (auto& cell : cells) {
      if (cell.size() == 1) {
        next.push_back(std::move(cell));
        continue;
      }
      for (int v : cell) {
        sig[v].clear();
        for (auto [u, m] : g.adj[v]) sig[v].push_back({cell_of[u], m});
        std::sort(sig[v].begin(), sig[v].end());
      }
      std::sort(cell.begin(), cell.end(), [&](int x, int y) { return sig[x] < sig[y]; });
      std::size_t first = 0;
      for (std::size_t i = 1; i <= cell.size(); ++i) {
        if (i == cell.size() || sig[cell[i]] != sig[cell[first]]) {
          next.emplace_back(cell.begin() + first, cell.begin() + i);
          first = i;
        }
      }
      if (next.back().size() != cell.size()) changed = true;
    }
    cells = std::move(next);
    if (!changed) return;
  }
}

void individualize(Cells& cells, int v) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    auto it = std::find(cells[i].begin(), cells[i].end(), v);
    if (it == cells[i].end()) continue;
    if (cells[i].size() == 1) return;
    cells[i].erase(it);
    cells.insert(cells.begin() + i, std::vector<int>{v});
    return;
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

// Individualization-refinement search for the lexicographically smallest
// leaf certificate. `marks` are individualized first and their final
// positions are appended to the certificate, so certificates of searches
// with different marks compare as "same orbit under the mark-fixing group".
class Search {
 public:
  Search(const Graph& g, std::vector<int> marks) : g_(g), marks_(std::move(marks)) {
    std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> twin_ids;
    twin_.resize(g.size());
    for (int v = 0; v < g.size(); ++v) {
      auto row = g.adj[v];
      std::sort(row.begin(), row.end());
      twin_[v] = twin_ids.emplace(std::pair(g.color[v], std::move(row)), twin_ids.size()).first->second;
    }
  }

  void run() {
    Cells cells = initial_cells(g_);
    std::vector<int> prefix;
    for (int m : marks_) {
      refine(g_, cells);
      individualize(cells, m);
      prefix.push_back(m);
    }
    explore(std::move(cells), prefix);
  }

  const std::vector<std::uint32_t>& certificate() const { return best_cert_; }
  const std::vector<int>& labeling() const { return best_order_; }

 private:
  void explore(Cells cells, std::vector<int>& prefix) {
    refine(g_, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) {
      leaf(cells);
      return;
    }
    const std::size_t t = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> candidates = cells[t];
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty() && equivalent_to_explored(v, explored, candidates, prefix)) continue;
      explored.push_back(v);
      Cells child = cells;
      individualize(child, v);
      prefix.push_back(v);
      explore(std::move(child), prefix);
      prefix.pop_back();
    }
  }

  // v is skipped when an automorphism fixing the prefix maps an explored
  // candidate onto it: found automorphisms plus twin transpositions.
  bool equivalent_to_explored(int v, const std::vector<int>& explored,
                              const std::vector<int>& candidates, const std::vector<int>& prefix) {
    for (int u : explored)
      if (twin_[u] == twin_[v]) return true;
    UnionFind uf(g_.size());
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int x = 0; x < g_.size(); ++x) uf.unite(x, gamma[x]);
    }
    for (std::size_t i = 0; i < candidates.size(); ++i)
      for (std::size_t j = i + 1; j < candidates.size(); ++j)
        if (twin_[candidates[i]] == twin_[candidates[j]]) uf.unite(candidates[i], candidates[j]);
    const int root = uf.find(v);
    return std::any_of(explored.begin(), explored.end(), [&](int u) { return uf.find(u) == root; });
  }

  void leaf(const Cells& cells) {
    std::vector<int> order;
    order.reserve(g_.size());
    for (const auto& c : cells) order.push_back(c.front());
    std::vector<int> pos(g_.size());
    for (int i = 0; i < g_.size(); ++i) pos[order[i]] = i;

    std::vector<std::array<std::uint32_t, 3>> triples;
    for (int a = 0; a < g_.na; ++a)
      for (auto [u, m] : g_.adj[a])
        triples.push_back({static_cast<std::uint32_t>(pos[a]),
                           static_cast<std::uint32_t>(pos[u] - g_.na), static_cast<std::uint32_t>(m)});
    std::sort(triples.begin(), triples.end());
    std::vector<std::uint32_t> cert;
    cert.reserve(triples.size() * 3 + marks_.size());
    for (const auto& t : triples) cert.insert(cert.end(), t.begin(), t.end());
    for (int m : marks_) cert.push_back(static_cast<std::uint32_t>(pos[m]));

    if (best_order_.empty() || cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = std::move(order);
    } else if (cert == best_cert_) {
      std::vector<int> gamma(g_.size());
      for (int i = 0; i < g_.size(); ++i) gamma[best_order_[i]] = order[i];
      automorphisms_.push_back(std::move(gamma));
    }
  }

  const Graph& g_;
  std::vector<int> marks_;
  std::vector<int> twin_;
  std::vector<std::vector<int>> automorphisms_;
  std::vector<std::uint32_t> best_cert_;
  std::vector<int> best_order_;
};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t x) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(x >> shift));
}

constexpr std::uint8_t kTag[] = {'G', 'A', 'F', 'C', 0x01};

CanonicalCode encode(const Graph& g, const std::vector<int>& order) {
  CanonicalCode code;
  auto& out = code.bytes;
  out.assign(std::begin(kTag), std::end(kTag));
  put_u32(out, static_cast<std::uint32_t>(g.na));
  put_u32(out, static_cast<std::uint32_t>(g.nc));
  put_u32(out, static_cast<std::uint32_t>(g.nc));
  for (int i = g.na; i < g.size(); ++i) {
    const auto& dec = g.decoration[order[i] - g.na];
    put_u32(out, static_cast<std::uint32_t>(dec.rank));
    out.push_back(dec.orientable ? 1 : 0);
  }
  std::vector<int> pos(g.size());
  for (int i = 0; i < g.size(); ++i) pos[order[i]] = i;
  std::vector<std::array<std::uint32_t, 3>> triples;
  for (int a = 0; a < g.na; ++a)
    for (auto [u, m] : g.adj[a])
      triples.push_back({static_cast<std::uint32_t>(pos[a]), static_cast<std::uint32_t>(pos[u] - g.na),
                         static_cast<std::uint32_t>(m)});
  std::sort(triples.begin(), triples.end());
  put_u32(out, static_cast<std::uint32_t>(triples.size()));
  for (const auto& t : triples)
    for (auto x : t) put_u32(out, x);
  return code;
}

CanonicalCode canonical_code_of(const Graph& g) {
  Search s(g, {});
  s.run();
  return encode(g, s.labeling());
}

std::vector<std::uint32_t> marked_certificate(const Graph& g, std::vector<int> marks) {
  Search s(g, std::move(marks));
  s.run();
  return s.certificate();
}

bool connected(const std::vector<std::vector<int>>& mult, int na, int nc) {
  UnionFind uf(na + nc);
  for (int a = 0; a < na; ++a)
    for (int c = 0; c < nc; ++c)
      if (mult[a][c] > 0) uf.unite(a, na + c);
  const int root = uf.find(0);
  for (int v = 1; v < na + nc; ++v)
    if (uf.find(v) != root) return false;
  return true;
}

}  // namespace

std::string CanonicalCode::to_string() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s = "gafc1:";
  for (auto b : bytes) {
    s += digits[b >> 4];
    s += digits[b & 0xf];
  }
  return s;
}

CanonicalCode CanonicalCode::from_string(std::string_view text) {
  constexpr std::string_view prefix = "gafc1:";
  if (text.substr(0, prefix.size()) != prefix)
    throw ParseError(1, 1, "canonical code must start with gafc1:", "gafc1:<hex>");
  text.remove_prefix(prefix.size());
  if (text.size() % 2 != 0) throw ParseError(1, prefix.size() + text.size(), "odd hex length");
  auto nibble = [&](char ch, std::size_t at) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    throw ParseError(1, prefix.size() + at + 1, "invalid hex digit", "[0-9a-f]");
  };
  CanonicalCode code;
  for (std::size_t i = 0; i < text.size(); i += 2)
    code.bytes.push_back(static_cast<std::uint8_t>(nibble(text[i], i) * 16 + nibble(text[i + 1], i + 1)));
  return code;
}

CanonicalCode canonical_code(const Diagram& d) {
  require_valid(d);
  return canonical_code_of(make_graph(d));
}

Diagram decode(const CanonicalCode& code) {
  const auto& b = code.bytes;
  std::size_t at = 0;
  auto fail = [&](const char* what) -> void { throw ParseError(0, at, std::string("malformed canonical code: ") + what); };
  auto u8 = [&]() -> std::uint8_t {
    if (at >= b.size()) fail("truncated");
    return b[at++];
  };
  auto u32 = [&]() -> std::uint32_t {
    std::uint32_t x = 0;
    for (int i = 0; i < 4; ++i) x = (x << 8) | u8();
    return x;
  };
  for (auto t : kTag)
    if (u8() != t) fail("bad format tag");
  const std::uint32_t na = u32();
  const std::uint32_t nc = u32();
  if (u32() != nc) fail("decoration table size mismatch");
  if (na > 100000 || nc > 100000) fail("vertex count too large");

  Diagram d;
  for (std::uint32_t a = 0; a < na; ++a) d.axes.push_back("v" + std::to_string(a));
  for (std::uint32_t c = 0; c < nc; ++c) {
    const auto rank = u32();
    const auto orientable = u8();
    if (orientable > 1) fail("bad orientability byte");
    d.chambers.push_back({"w" + std::to_string(c), {static_cast<int>(rank), orientable == 1}});
  }
  const std::uint32_t triples = u32();
  for (std::uint32_t i = 0; i < triples; ++i) {
    const auto a = u32(), c = u32(), m = u32();
    if (a >= na || c >= nc || m == 0 || m > 100000) fail("bad edge triple");
    for (std::uint32_t k = 0; k < m; ++k) d.edges.push_back({d.axes[a], d.chambers[c].name});
  }
  if (at != b.size()) fail("trailing bytes");
  return d;
}

namespace {

// Sorted (decoration, degree) and axis degree profiles; unequal profiles rule
// out an isomorphism without running the search.
bool profiles_differ(const Diagram& d1, const Diagram& d2) {
  if (d1.axes.size() != d2.axes.size() || d1.chambers.size() != d2.chambers.size() ||
      d1.edges.size() != d2.edges.size())
    return true;
  auto profile = [](const Diagram& d) {
    std::map<std::string, int> axis_degree, chamber_degree;
    for (const auto& e : d.edges) {
      ++axis_degree[e.axis];
      ++chamber_degree[e.chamber];
    }
    std::vector<std::tuple<int, bool, int>> chambers;
    for (const auto& c : d.chambers) chambers.emplace_back(c.data.rank, c.data.orientable, chamber_degree[c.name]);
    std::vector<int> axes;
    for (const auto& [name, deg] : axis_degree) axes.push_back(deg);
    std::sort(chambers.begin(), chambers.end());
    std::sort(axes.begin(), axes.end());
    return std::pair(chambers, axes);
  };
  return profile(d1) != profile(d2);
}

}  // namespace

bool are_isomorphic(const Diagram& d1, const Diagram& d2) {
  require_valid(d1);
  require_valid(d2);
  if (profiles_differ(d1, d2)) return false;
  return canonical_code(d1) == canonical_code(d2);
}

std::optional<IsoWitness> find_isomorphism(const Diagram& d1, const Diagram& d2) {
  require_valid(d1);
  require_valid(d2);
  if (profiles_differ(d1, d2)) return std::nullopt;
  const Graph g1 = make_graph(d1), g2 = make_graph(d2);
  Search s1(g1, {}), s2(g2, {});
  s1.run();
  s2.run();
  if (encode(g1, s1.labeling()) != encode(g2, s2.labeling())) return std::nullopt;
  IsoWitness w;
  const auto& l1 = s1.labeling();
  const auto& l2 = s2.labeling();
  for (int i = 0; i < g1.size(); ++i) {
    if (l1[i] < g1.na)
      w.axis_map.emplace(d1.axes[l1[i]], d2.axes[l2[i]]);
    else
      w.chamber_map.emplace(d1.chambers[l1[i] - g1.na].name, d2.chambers[l2[i] - g2.na].name);
  }
  return w;
}

Diagram apply_witness(const Diagram& d, const IsoWitness& w) {
  Diagram out;
  for (const auto& a : d.axes) out.axes.push_back(w.axis_map.at(a));
  for (const auto& c : d.chambers) out.chambers.push_back({w.chamber_map.at(c.name), c.data});
  for (const auto& e : d.edges) out.edges.push_back({w.axis_map.at(e.axis), w.chamber_map.at(e.chamber)});
  return out;
}

bool verify_witness(const Diagram& d1, const Diagram& d2, const IsoWitness& w) {
  if (w.axis_map.size() != d1.axes.size() || w.chamber_map.size() != d1.chambers.size()) return false;
  std::set<std::string> axis_images, chamber_images;
  for (const auto& a : d1.axes) {
    auto it = w.axis_map.find(a);
    if (it == w.axis_map.end() || !d2.has_axis(it->second)) return false;
    axis_images.insert(it->second);
  }
  for (const auto& c : d1.chambers) {
    auto it = w.chamber_map.find(c.name);
    if (it == w.chamber_map.end()) return false;
    const Chamber* image = d2.find_chamber(it->second);
    if (!image || !(image->data == c.data)) return false;
    chamber_images.insert(it->second);
  }
  if (axis_images.size() != d2.axes.size() || chamber_images.size() != d2.chambers.size()) return false;
  return same_up_to_order(apply_witness(d1, w), d2);
}

BigCount automorphism_count(const Diagram& d) {
  require_valid(d);
  const Graph g = make_graph(d);
  BigCount count = 1;
  std::vector<int> marks;
  for (;;) {
    Cells cells = initial_cells(g);
    for (int m : marks) {
      refine(g, cells);
      individualize(cells, m);
    }
    refine(g, cells);
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) break;
    // Orbit of v under the stabilizer of the marks lies inside v's cell.
    std::vector<int> cell = *target;
    std::sort(cell.begin(), cell.end());
    const int v = cell.front();
    auto with = [&](int x) {
      auto m = marks;
      m.push_back(x);
      return marked_certificate(g, std::move(m));
    };
    const auto reference = with(v);
    long orbit = 1;
    for (std::size_t i = 1; i < cell.size(); ++i)
      if (with(cell[i]) == reference) ++orbit;
    count *= orbit;
    marks.push_back(v);
  }
  return count;
}

bool brute_force_isomorphic(const Diagram& d1, const Diagram& d2, std::size_t max_vertices) {
  if (d1.vertex_count() > max_vertices || d2.vertex_count() > max_vertices)
    throw SizeBoundExceeded("brute-force oracle limited to " + std::to_string(max_vertices) + " vertices");
  require_valid(d1);
  require_valid(d2);
  if (d1.axes.size() != d2.axes.size() || d1.chambers.size() != d2.chambers.size() ||
      d1.edges.size() != d2.edges.size())
    return false;

  std::map<std::pair<std::string, std::string>, int> m1, m2;
  for (const auto& e : d1.edges) ++m1[{e.axis, e.chamber}];
  for (const auto& e : d2.edges) ++m2[{e.axis, e.chamber}];

  const std::size_t na = d1.axes.size(), nc = d1.chambers.size();
  std::vector<std::size_t> axis_image(na), chamber_image(nc);
  std::vector<bool> axis_used(na, false), chamber_used(nc, false);

  auto matches = [&]() {
    for (std::size_t a = 0; a < na; ++a)
      for (std::size_t c = 0; c < nc; ++c) {
        auto k1 = std::pair(d1.axes[a], d1.chambers[c].name);
        auto k2 = std::pair(d2.axes[axis_image[a]], d2.chambers[chamber_image[c]].name);
        auto i1 = m1.find(k1);
        auto i2 = m2.find(k2);
        const int x1 = i1 == m1.end() ? 0 : i1->second;
        const int x2 = i2 == m2.end() ? 0 : i2->second;
        if (x1 != x2) return false;
      }
    return true;
  };

  std::function<bool(std::size_t)> assign_chamber = [&](std::size_t c) -> bool {
    if (c == nc) return matches();
    for (std::size_t t = 0; t < nc; ++t) {
      if (chamber_used[t] || !(d2.chambers[t].data == d1.chambers[c].data)) continue;
      chamber_used[t] = true;
      chamber_image[c] = t;
      if (assign_chamber(c + 1)) return true;
      chamber_used[t] = false;
    }
    return false;
  };
  std::function<bool(std::size_t)> assign_axis = [&](std::size_t a) -> bool {
    if (a == na) return assign_chamber(0);
    for (std::size_t t = 0; t < na; ++t) {
      if (axis_used[t]) continue;
      axis_used[t] = true;
      axis_image[a] = t;
      if (assign_axis(a + 1)) return true;
      axis_used[t] = false;
    }
    return false;
  };
  return assign_axis(0);
}

std::vector<CanonicalCode> enumerate_diagrams(const EnumerationBounds& bounds) {
  if (bounds.max_axes < 1 || bounds.max_chambers < 1 || bounds.max_rank < 1)
    throw PreconditionError("enumeration bounds must be >= 1");
  std::set<CanonicalCode> seen;
  const int max_b = bounds.max_rank + 1;

  std::vector<ChamberData> types;
  for (int r = 2; r <= bounds.max_rank; ++r) {
    types.push_back({r, true});
    if (!bounds.orientable_only) types.push_back({r, false});
  }

  for (int na = 1; na <= bounds.max_axes; ++na) {
    struct Option {
      std::vector<int> column;
      ChamberData type;
    };
    std::vector<Option> options;
    const int cap = bounds.allow_multi_edges ? max_b : 1;
    std::vector<int> column(na, 0);
    std::function<void(int, int)> columns = [&](int a, int sum) {
      if (a == na) {
        if (sum < 1) return;
        for (const auto& t : types)
          if (surface_realizable(t.rank, sum, t.orientable)) options.push_back({column, t});
        return;
      }
      for (int m = 0; m <= cap && sum + m <= max_b; ++m) {
        column[a] = m;
        columns(a + 1, sum + m);
      }
      column[a] = 0;
    };
    columns(0, 0);

    for (int nc = 3; nc <= bounds.max_chambers; ++nc) {
      std::vector<int> pick(nc);
      std::function<void(int, int)> choose = [&](int slot, int from) {
        if (slot == nc) {
          std::vector<std::vector<int>> mult(na, std::vector<int>(nc, 0));
          std::vector<ChamberData> decoration;
          for (int c = 0; c < nc; ++c) {
            const auto& opt = options[pick[c]];
            decoration.push_back(opt.type);
            for (int a = 0; a < na; ++a) mult[a][c] = opt.column[a];
          }
          for (int a = 0; a < na; ++a)
            if (std::count_if(mult[a].begin(), mult[a].end(), [](int m) { return m > 0; }) < 3) return;
          if (!connected(mult, na, nc)) return;
          seen.insert(canonical_code_of(make_graph(std::move(decoration), std::move(mult))));
          return;
        }
        for (int i = from; i < static_cast<int>(options.size()); ++i) {
          pick[slot] = i;
          choose(slot + 1, i);
        }
      };
      choose(0, 0);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<CanonicalCode> enumerate_diagrams(int max_axes, int max_chambers, int max_rank,
                                              bool orientable_only) {
  return enumerate_diagrams(EnumerationBounds{max_axes, max_chambers, max_rank, orientable_only, false});
}

Diagram random_diagram(std::uint64_t seed, int axes, int chambers, int max_rank) {
  if (axes < 1 || chambers < 3 || max_rank < 2)
    throw InfeasibleParameters("no valid diagram with " + std::to_string(axes) + " axes, " +
                               std::to_string(chambers) + " chambers, max rank " +
                               std::to_string(max_rank));
  // Each axis needs three edges and a chamber has at most max_rank + 1 boundaries.
  if (3 * static_cast<long>(axes) > static_cast<long>(chambers) * (max_rank + 1))
    throw InfeasibleParameters(std::to_string(axes) + " axes need more boundary slots than " +
                               std::to_string(chambers) + " chambers of rank <= " +
                               std::to_string(max_rank) + " provide");
  std::mt19937_64 rng(seed);
  // std::uniform_int_distribution is not portable across standard libraries.
  auto draw = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
  const int max_b = max_rank + 1;

  constexpr int kAttempts = 2000;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<std::vector<int>> mult(axes, std::vector<int>(chambers, 0));
    std::vector<int> degree(chambers, 0);
    std::vector<int> perm(chambers);
    for (int a = 0; a < axes; ++a) {
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = 0; i < 3; ++i) {
        std::swap(perm[i], perm[i + draw(chambers - i)]);
        ++mult[a][perm[i]];
        ++degree[perm[i]];
      }
    }
    std::vector<ChamberData> decoration(chambers);
    bool ok = true;
    for (int c = 0; c < chambers && ok; ++c) {
      struct Choice {
        ChamberData type;
        int b;
      };
      std::vector<Choice> choices;
      for (int r = 2; r <= max_rank; ++r)
        for (bool orientable : {true, false})
          for (int b = std::max(1, degree[c]); b <= max_b; ++b)
            if (surface_realizable(r, b, orientable)) choices.push_back({{r, orientable}, b});
      if (choices.empty()) {
        ok = false;
        break;
      }
      const auto choice = choices[draw(static_cast<int>(choices.size()))];
      decoration[c] = choice.type;
      for (int k = degree[c]; k < choice.b; ++k) ++mult[draw(axes)][c];
    }
    if (!ok || !connected(mult, axes, chambers)) continue;

    Diagram d;
    for (int a = 0; a < axes; ++a) d.axes.push_back("v" + std::to_string(a));
    for (int c = 0; c < chambers; ++c) d.chambers.push_back({"w" + std::to_string(c), decoration[c]});
    for (int a = 0; a < axes; ++a)
      for (int c = 0; c < chambers; ++c)
        for (int k = 0; k < mult[a][c]; ++k) d.edges.push_back({d.axes[a], d.chambers[c].name});
    if (validate(d).valid) return d;
  }
  throw InfeasibleParameters("no valid diagram found after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace gaf
