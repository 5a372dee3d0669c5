#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "gaf/canon.hpp"
#include "gaf/limit_group.hpp"
#include "support.hpp"

using namespace gaf;
using gaf::testing::delta0;
using gaf::testing::nonorientable_tripod;
using gaf::testing::relabel;
using gaf::testing::theta;

namespace {

Word parse_word(const std::string& spec) {
  // "a b A" -> a b a^-1 (uppercase is the inverse); letters must be single characters.
  std::vector<Letter> letters;
  for (char ch : spec) {
    if (ch == ' ') continue;
    const bool inverse = ch >= 'A' && ch <= 'Z';
    letters.push_back({std::string(1, static_cast<char>(inverse ? ch - 'A' + 'a' : ch)), inverse ? -1 : 1});
  }
  return Word(letters);
}

Word g(const std::string& name, int e = 1) { return Word::generator(name, e); }

}  // namespace

TEST_CASE("free reduction") {
  CHECK(parse_word("abBA").empty());
  CHECK(parse_word("abBc").to_string() == "a*c");
  const auto w = parse_word("aabAB");
  CHECK((w * w.inverse()).empty());
  CHECK(Word(w.letters()) == w);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<Letter> letters;
    const int len = static_cast<int>(rng() % 12);
    for (int i = 0; i < len; ++i) letters.push_back({std::string(1, static_cast<char>('a' + rng() % 3)), rng() % 2 ? 1 : -1});
    const auto once = free_reduce(letters);
    CHECK(free_reduce(once) == once);
    for (std::size_t i = 1; i < once.size(); ++i)
      CHECK_FALSE((once[i].generator == once[i - 1].generator && once[i].exponent == -once[i - 1].exponent));
    const Word word(letters);
    CHECK((word * word.inverse()).empty());
  }
  CHECK(Word().to_string() == "1");
  CHECK_THROWS_AS(free_reduce({{"a", 2}}), std::invalid_argument);
}

TEST_CASE("same_relator up to rotation and inversion") {
  const auto r = parse_word("abABcdCD");
  CHECK(same_relator(r, parse_word("bABcdCDa")));
  CHECK(same_relator(r, r.inverse()));
  CHECK(same_relator(parse_word("xabABX"), parse_word("abAB")));
  CHECK_FALSE(same_relator(r, parse_word("abABdcDC")));
}

TEST_CASE("boundary_words: worked conventions") {
  const auto torus = boundary_words({2, true}, 1);
  REQUIRE(torus.size() == 1);
  CHECK(torus[0] == g("b1") * g("a1") * g("b1", -1) * g("a1", -1));
  CHECK(torus[0] == commutator(g("a1"), g("b1")).inverse());

  const auto klein = boundary_words({2, false}, 1);
  REQUIRE(klein.size() == 1);
  CHECK(klein[0] == (g("x1") * g("x1") * g("x2") * g("x2")).inverse());

  const auto pants = boundary_words({2, true}, 3);
  REQUIRE(pants.size() == 3);
  CHECK(pants[0] == g("c1"));
  CHECK(pants[1] == g("c2"));
  CHECK(pants[2] == (g("c1") * g("c2")).inverse());

  CHECK(surface_generators({2, true}, 3) == std::vector<std::string>{"c1", "c2"});
  CHECK(surface_generators({3, false}, 2) == std::vector<std::string>{"x1", "x2", "c1"});
  CHECK_THROWS_AS(boundary_words({3, true}, 1), PreconditionError);
}

TEST_CASE("boundary words multiply to the surface relation") {
  // Product of all boundary words (last one inverted back) recovers the
  // standard relator, and the generator count equals the rank.
  for (int rank = 2; rank <= 6; ++rank)
    for (int b = 1; b <= rank + 1; ++b)
      for (bool orientable : {true, false}) {
        if (!surface_realizable(rank, b, orientable)) continue;
        const ChamberData chamber{rank, orientable};
        CHECK(static_cast<int>(surface_generators(chamber, b).size()) == rank);
        const auto words = boundary_words(chamber, b);
        CHECK(static_cast<int>(words.size()) == b);
        for (const auto& w : words)
          for (const auto& l : w.letters()) {
            const auto gens = surface_generators(chamber, b);
            CHECK(std::find(gens.begin(), gens.end(), l.generator) != gens.end());
          }
      }
}

TEST_CASE("limit_presentation of the tripod of tori") {
  const auto p = limit_presentation(delta0(), true);
  CHECK(p.generators == std::vector<std::string>{"w1.a1", "w1.b1", "w2.a1", "w2.b1", "w3.a1", "w3.b1"});
  REQUIRE(p.relators.size() == 2);
  const auto c1 = commutator(g("w1.a1"), g("w1.b1"));
  const auto c2 = commutator(g("w2.a1"), g("w2.b1"));
  const auto c3 = commutator(g("w3.a1"), g("w3.b1"));
  // w_e1 * w_ej^-1 with w_e = [a,b]^-1.
  CHECK(p.relators[0] == c1.inverse() * c2);
  CHECK(p.relators[1] == c1.inverse() * c3);
  CHECK(same_relator(p.relators[0], c1 * c2.inverse()));
  CHECK(same_relator(p.relators[1], c1 * c3.inverse()));

  const auto kept = limit_presentation(delta0(), false);
  CHECK(kept.generators.size() == 7);
  CHECK(kept.relators.size() == 3);
  CHECK(kept.generators.front() == "z_v");
  CHECK(kept.relators[0] == g("z_v") * c1);
}

TEST_CASE("limit_presentation counts") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 4, 3 + seed % 5, 2 + seed % 4);
    const auto p = limit_presentation(d, true);
    std::size_t rank_sum = 0, expected_relators = 0;
    for (const auto& c : d.chambers) rank_sum += c.data.rank;
    for (const auto& a : d.axes) expected_relators += axis_degree(d, a) - 1;
    // One stable letter per independent cycle of the underlying multigraph.
    const std::size_t cycles = d.edges.size() - d.axes.size() - d.chambers.size() + 1;
    CHECK(p.generators.size() == rank_sum + cycles);
    CHECK(p.relators.size() == expected_relators);
    const auto kept = limit_presentation(d, false);
    CHECK(kept.generators.size() == rank_sum + d.axes.size() + cycles);
    CHECK(kept.relators.size() == d.edges.size());
    CHECK(smith_normal_form(exponent_sum_matrix(kept)) .invariant_factors ==
          smith_normal_form(exponent_sum_matrix(p)).invariant_factors);
    CHECK(smith_normal_form(exponent_sum_matrix(kept)).free_rank ==
          smith_normal_form(exponent_sum_matrix(p)).free_rank);
  }
}

TEST_CASE("presentation text and JSON") {
  Presentation p{{"a", "b"}, {commutator(g("a"), g("b"))}};
  CHECK(p.to_string() == "< a, b | a*b*a^-1*b^-1 >");
  CHECK(Presentation{}.to_string() == "< | >");
  CHECK(p.to_json().find("\"exponent\": -1") != std::string::npos);
}

TEST_CASE("smith_normal_form: worked matrices") {
  const auto zero = smith_normal_form(IntMatrix(2, 6));
  CHECK(zero.invariant_factors.empty());
  CHECK(zero.free_rank == 6);

  const auto tripod = smith_normal_form(IntMatrix{{2, 2, -2, -2, 0, 0}, {2, 2, 0, 0, -2, -2}});
  CHECK(tripod.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(tripod.free_rank == 4);

  const auto diag = smith_normal_form(IntMatrix{{6, 0}, {0, 4}});
  CHECK(diag.invariant_factors == std::vector<std::int64_t>{2, 12});
  CHECK(diag.free_rank == 0);

  CHECK(smith_normal_form(IntMatrix()).free_rank == 0);
  CHECK(smith_normal_form(IntMatrix(0, 3)).free_rank == 3);
  CHECK(smith_normal_form(IntMatrix{{1, 0}, {0, 1}}).invariant_factors.empty());
}

TEST_CASE("smith_normal_form: invariants under row and column permutation, divisibility") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = rng() % 5, cols = rng() % 5;
    IntMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 13) - 6;
    const auto snf = smith_normal_form(m);
    for (std::size_t i = 1; i < snf.invariant_factors.size(); ++i)
      CHECK(snf.invariant_factors[i] % snf.invariant_factors[i - 1] == 0);

    IntMatrix t(cols, rows);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) t(c, r) = m(r, c);
    CHECK(smith_normal_form(t).invariant_factors == snf.invariant_factors);
    CHECK(smith_normal_form(t).rank == snf.rank);

    IntMatrix p(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) p(r, c) = m(rows - 1 - r, (c + 1) % cols);
    CHECK(smith_normal_form(p) == snf);
  }
}

TEST_CASE("smith_normal_form: product of factors equals gcd of maximal minors (2x2 case)") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix m(2, 2);
    for (std::size_t r = 0; r < 2; ++r)
      for (std::size_t c = 0; c < 2; ++c) m(r, c) = static_cast<std::int64_t>(rng() % 41) - 20;
    const std::int64_t det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const std::int64_t d1 = std::gcd(std::gcd(m(0, 0), m(0, 1)), std::gcd(m(1, 0), m(1, 1)));
    const auto snf = smith_normal_form(m);
    std::vector<std::int64_t> diagonal;
    if (d1 != 0) diagonal.push_back(d1);
    if (det != 0) diagonal.push_back(std::abs(det) / d1);
    std::vector<std::int64_t> nontrivial;
    for (auto x : diagonal)
      if (x >= 2) nontrivial.push_back(x);
    CHECK(snf.invariant_factors == nontrivial);
    CHECK(snf.rank == diagonal.size());
  }
}

TEST_CASE("abelianization") {
  const auto torus = abelianization(delta0());
  CHECK(torus.invariant_factors.empty());
  CHECK(torus.free_rank == 6);

  const auto klein = abelianization(nonorientable_tripod());
  CHECK(klein.invariant_factors == std::vector<std::int64_t>{2, 2});
  CHECK(klein.free_rank == 4);
  CHECK(exponent_sum_matrix(limit_presentation(nonorientable_tripod())) ==
        IntMatrix{{-2, -2, 2, 2, 0, 0}, {-2, -2, 0, 0, 2, 2}});

  const auto t = abelianization(theta());
  for (std::uint64_t seed = 0; seed < 20; ++seed) CHECK(abelianization(relabel(theta(), seed)) == t);
}

TEST_CASE("abelianization is an isomorphism invariant") {
  for (const auto& code : enumerate_diagrams({2, 4, 3, false, true})) {
    const auto d = decode(code);
    const auto reference = abelianization(d);
    CHECK(abelianization(relabel(d, code.bytes.size())) == reference);
  }
}

TEST_CASE("cycles of the underlying graph carry stable letters") {
  const auto p = limit_presentation(theta(), true);
  CHECK(p.generators.size() == 9 + 2);
  CHECK(std::count_if(p.generators.begin(), p.generators.end(),
                      [](const std::string& s) { return s.rfind("t.", 0) == 0; }) == 2);
  const auto h = abelianization(theta());
  CHECK(h.invariant_factors.empty());
  CHECK(h.free_rank == 9);
}
