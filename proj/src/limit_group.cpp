#include "gaf/limit_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gaf/diagram_index.hpp"
#include "json.hpp"

namespace gaf {

std::vector<Letter> free_reduce(std::vector<Letter> letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  for (auto& l : letters) {
    if (l.exponent != 1 && l.exponent != -1) throw std::invalid_argument("letter exponent must be +1 or -1");
    if (!out.empty() && out.back().generator == l.generator && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(std::move(l));
  }
  return out;
}

Word::Word(std::vector<Letter> letters) : letters_(free_reduce(std::move(letters))) {}

Word Word::generator(std::string name, int exponent) { return Word({Letter{std::move(name), exponent}}); }

Word Word::inverse() const {
  Word w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back({it->generator, -it->exponent});
  return w;
}

Word operator*(const Word& x, const Word& y) {
  std::vector<Letter> letters = x.letters_;
  letters.insert(letters.end(), y.letters_.begin(), y.letters_.end());
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += letters_[i].generator;
    if (letters_[i].exponent < 0) s += "^-1";
  }
  return s;
}

Word commutator(const Word& x, const Word& y) { return x * y * x.inverse() * y.inverse(); }

namespace {

std::vector<Letter> cyclically_reduce(std::vector<Letter> w) {
  std::size_t lo = 0, hi = w.size();
  while (hi - lo >= 2 && w[lo].generator == w[hi - 1].generator && w[lo].exponent == -w[hi - 1].exponent) {
    ++lo;
    --hi;
  }
  return {w.begin() + lo, w.begin() + hi};
}

bool is_rotation(const std::vector<Letter>& a, const std::vector<Letter>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool equal = true;
    for (std::size_t i = 0; i < a.size() && equal; ++i) equal = a[(i + shift) % a.size()] == b[i];
    if (equal) return true;
  }
  return false;
}

}  // namespace

bool same_relator(const Word& a, const Word& b) {
  const auto ra = cyclically_reduce(a.letters());
  return is_rotation(ra, cyclically_reduce(b.letters())) ||
         is_rotation(ra, cyclically_reduce(b.inverse().letters()));
}

std::string Presentation::to_string() const {
  std::string s = "< ";
  for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? ", " : "") + generators[i];
  s += generators.empty() ? "| " : " | ";
  for (std::size_t i = 0; i < relators.size(); ++i) s += (i ? ", " : "") + relators[i].to_string();
  s += relators.empty() ? ">" : " >";
  return s;
}

std::string Presentation::to_json() const {
  using nlohmann::json;
  json doc;
  doc["generators"] = generators;
  doc["relators"] = json::array();
  for (const auto& r : relators) {
    json word = json::array();
    for (const auto& l : r.letters()) word.push_back({{"generator", l.generator}, {"exponent", l.exponent}});
    doc["relators"].push_back(std::move(word));
  }
  return doc.dump(2) + "\n";
}

std::vector<std::string> surface_generators(const ChamberData& chamber, int b) {
  const int genus = surface_genus(chamber.rank, b, chamber.orientable);
  std::vector<std::string> gens;
  for (int i = 1; i <= genus; ++i) {
    if (chamber.orientable) {
      gens.push_back("a" + std::to_string(i));
      gens.push_back("b" + std::to_string(i));
    } else {
      gens.push_back("x" + std::to_string(i));
    }
  }
  for (int j = 1; j < b; ++j) gens.push_back("c" + std::to_string(j));
  return gens;
}

std::vector<Word> boundary_words(const ChamberData& chamber, int b) {
  const int genus = surface_genus(chamber.rank, b, chamber.orientable);
  std::vector<Word> words;
  Word last;
  for (int i = 1; i <= genus; ++i) {
    if (chamber.orientable) {
      last = last * commutator(Word::generator("a" + std::to_string(i)), Word::generator("b" + std::to_string(i)));
    } else {
      const auto x = Word::generator("x" + std::to_string(i));
      last = last * x * x;
    }
  }
  for (int j = 1; j < b; ++j) {
    auto c = Word::generator("c" + std::to_string(j));
    words.push_back(c);
    last = last * c;
  }
  words.push_back(last.inverse());
  return words;
}

namespace {

Word qualify(const Word& w, const std::string& prefix) {
  std::vector<Letter> letters;
  for (const auto& l : w.letters()) letters.push_back({prefix + "." + l.generator, l.exponent});
  return Word(std::move(letters));
}

}  // namespace

Presentation limit_presentation(const Diagram& d, bool eliminate_axes) {
  require_valid(d);
  const DiagramIndex index(d);
  Presentation p;

  if (!eliminate_axes)
    for (int a : index.axes_by_name()) p.generators.push_back("z_" + index.axis_name(a));

  std::vector<std::vector<Word>> slot_words(index.chamber_count());
  for (int c : index.chambers_by_name()) {
    const auto& name = index.chamber_name(c);
    const auto& data = index.chamber_data(c);
    const int b = index.chamber_degree(c);
    for (const auto& g : surface_generators(data, b)) p.generators.push_back(name + "." + g);
    for (const auto& w : boundary_words(data, b)) slot_words[c].push_back(qualify(w, name));
  }

  // Spanning tree of the underlying graph, seeded with the first edge at
  // every axis. Each remaining edge closes a cycle and gets a stable letter.
  std::vector<int> root(index.axis_count() + index.chamber_count());
  std::iota(root.begin(), root.end(), 0);
  auto find = [&](int x) {
    while (root[x] != x) x = root[x] = root[root[x]];
    return x;
  };
  auto join = [&](int a, int c) {
    const int x = find(a), y = find(index.axis_count() + c);
    if (x == y) return false;
    root[x] = y;
    return true;
  };
  for (int a : index.axes_by_name()) join(a, index.axis_ends(a).front().chamber);

  for (int a : index.axes_by_name()) {
    const auto& ends = index.axis_ends(a);
    const Word z = eliminate_axes ? slot_words[ends.front().chamber][ends.front().slot]
                                  : Word::generator("z_" + index.axis_name(a));
    for (std::size_t j = eliminate_axes ? 1 : 0; j < ends.size(); ++j) {
      const auto& end = ends[j];
      const Word& w = slot_words[end.chamber][end.slot];
      if (j == 0 || join(a, end.chamber)) {
        p.relators.push_back(z * w.inverse());
        continue;
      }
      const std::string stable = "t." + index.axis_name(a) + "." + index.chamber_name(end.chamber) + "." +
                                 std::to_string(end.occurrence);
      p.generators.push_back(stable);
      const Word t = Word::generator(stable);
      p.relators.push_back(t * z * t.inverse() * w.inverse());
    }
  }
  return p;
}

IntMatrix exponent_sum_matrix(const Presentation& p) {
  std::map<std::string, std::size_t> column;
  for (std::size_t i = 0; i < p.generators.size(); ++i) column.emplace(p.generators[i], i);
  IntMatrix m(p.relators.size(), p.generators.size());
  for (std::size_t r = 0; r < p.relators.size(); ++r)
    for (const auto& l : p.relators[r].letters()) {
      auto it = column.find(l.generator);
      if (it == column.end()) throw std::invalid_argument("relator uses undeclared generator " + l.generator);
      m(r, it->second) += l.exponent;
    }
  return m;
}

SNFResult abelianization(const Diagram& d) {
  return smith_normal_form(exponent_sum_matrix(limit_presentation(d, true)));
}

}  // namespace gaf
