#include <random>

#include "doctest.h"
#include "gaf/canon.hpp"
#include "gaf/gaf_io.hpp"
#include "json.hpp"
#include "support.hpp"

using namespace gaf;
using gaf::testing::delta0;
using gaf::testing::theta;

namespace {

constexpr const char* kDelta0Text =
    "axis v\nchamber w1 rank=2 orientable=yes\nchamber w2 rank=2 orientable=yes\n"
    "chamber w3 rank=2 orientable=yes\nedge v w1\nedge v w2\nedge v w3\n";

int count_lines_containing(const std::string& text, const std::string& needle) {
  int n = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    if (text.substr(pos, end - pos).find(needle) != std::string::npos) ++n;
    pos = end + 1;
  }
  return n;
}

}  // namespace

TEST_CASE("parse_gaf: defining instance") {
  const auto d = parse_gaf(kDelta0Text);
  CHECK(d == delta0());
}

TEST_CASE("parse_gaf: edge with undeclared names") {
  try {
    parse_gaf("edge v w1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.detail() == "undeclared name v");
    CHECK(e.line() == 1);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("parse_gaf: non-numeric rank is a located syntax error") {
  try {
    parse_gaf("chamber w rank=two orientable=yes");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 16);  // first byte after "rank="
    CHECK(e.expected() == "positive integer");
  }
}

TEST_CASE("parse_gaf: other errors") {
  CHECK_THROWS_WITH_AS(parse_gaf("chamber w rank=0 orientable=yes"), doctest::Contains("rank not a positive integer"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("axis v\naxis v\n"), doctest::Contains("duplicate declaration of name v"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("axis v\nchamber v rank=2 orientable=yes\n"), doctest::Contains("duplicate"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("chamber w rank=2 orientable=true"), doctest::Contains("yes or no"), ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("vertex v"), doctest::Contains("unknown statement"), ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("axis v extra"), doctest::Contains("unexpected token"), ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("axis v-1"), doctest::Contains("invalid character"), ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("chamber w rank=99999999999 orientable=yes"), doctest::Contains("out of range"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("axis v\nchamber w rank=2 orientable=yes\nedge w v\n"),
                       doctest::Contains("declared as a chamber"), ParseError);
  CHECK_THROWS_WITH_AS(parse_gaf("# gaf 2\naxis v\n"), doctest::Contains("unsupported gaf version"), ParseError);
}

TEST_CASE("parse_gaf: comments, blank lines, CRLF, any declaration order") {
  const std::string text =
      "# gaf 1\r\n\r\nedge v w3   # trailing comment\r\nedge v w2\nedge v w1\n"
      "chamber w3 rank=2 orientable=yes\n\tchamber w2 rank=2 orientable=yes\n"
      "chamber w1 rank=2 orientable=yes\naxis v\n";
  const auto d = parse_gaf(text);
  CHECK(same_up_to_order(d, delta0()));
  const auto doc = parse_gaf_document(text);
  REQUIRE(doc.statements.size() == 8);
  CHECK(std::holds_alternative<Comment>(doc.statements[0].body));
  for (std::size_t i = 1; i < doc.statements.size(); ++i)
    CHECK(doc.statements[i].line > doc.statements[i - 1].line);
}

TEST_CASE("parse_gaf: duplicate edges are multi-edges") {
  const auto d = parse_gaf("axis v\nchamber w rank=3 orientable=yes\nedge v w\nedge v w\n");
  CHECK(d.edges.size() == 2);
}

TEST_CASE("print_gaf") {
  CHECK(print_gaf(delta0()) == kDelta0Text);
  CHECK(print_gaf(Diagram{}).empty());
  const auto text = print_gaf(theta());
  CHECK(count_lines_containing(text, "axis ") == 2);
  CHECK(count_lines_containing(text, "chamber ") == 3);
  CHECK(count_lines_containing(text, "edge ") == 6);
  Diagram bad;
  bad.axes = {"has space"};
  CHECK_THROWS_AS(print_gaf(bad), PreconditionError);
}

TEST_CASE("parse(print(d)) keeps the canonical code and the validation report") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(seed, 1 + seed % 3, 3 + seed % 4, 2 + seed % 3);
    const auto back = parse_gaf(print_gaf(d));
    CHECK(same_up_to_order(back, d));
    CHECK(canonical_code(back) == canonical_code(d));
    CHECK(validate(back).violations == validate(d).violations);
  }
  // Invalid diagrams round-trip their report as well.
  auto broken = delta0();
  broken.chambers[0].data.rank = 3;
  CHECK(validate(parse_gaf(print_gaf(broken))).violations == validate(broken).violations);
}

TEST_CASE("parser never throws anything but ParseError on random bytes") {
  std::mt19937_64 rng(7);
  const std::string alphabet = "axis chamber edge rank= orientable=yes no # \n\t\r0123456789_wv=";
  for (int trial = 0; trial < 3000; ++trial) {
    std::string text;
    const int len = static_cast<int>(rng() % 80);
    for (int i = 0; i < len; ++i) {
      if (rng() % 4 == 0)
        text += static_cast<char>(rng() % 256);
      else
        text += alphabet[rng() % alphabet.size()];
    }
    try {
      parse_gaf(text);
    } catch (const ParseError& e) {
      CHECK(e.line() >= 1);
      CHECK(e.column() >= 1);
    }
  }
}

TEST_CASE("export_dot") {
  const auto dot = export_dot(delta0());
  CHECK(count_lines_containing(dot, "[shape=") == 4);
  CHECK(count_lines_containing(dot, "->") == 3);
  CHECK(dot.find("2,or") != std::string::npos);
  const auto theta_dot = export_dot(theta());
  CHECK(count_lines_containing(theta_dot, "[shape=") == 5);
  CHECK(count_lines_containing(theta_dot, "->") == 6);
  const auto multi = parse_gaf(
      "axis v\nchamber w rank=3 orientable=yes\nchamber x rank=2 orientable=no\nedge v w\nedge v w\nedge v x\n");
  CHECK(count_lines_containing(export_dot(multi), "\"v\" -> \"w\"") == 2);
}

TEST_CASE("export_json") {
  const auto doc = nlohmann::json::parse(export_json(delta0()));
  CHECK(doc["axes"].size() == 1);
  CHECK(doc["chambers"].size() == 3);
  CHECK(doc["edges"].size() == 3);
  CHECK(doc["chambers"][0]["rank"] == 2);
  CHECK(doc["chambers"][0]["orientable"] == true);

  const auto empty = nlohmann::json::parse(export_json(Diagram{}));
  CHECK(empty["axes"].empty());
  CHECK(empty["chambers"].empty());
  CHECK(empty["edges"].empty());

  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto d = random_diagram(1000 + seed, 1 + seed % 3, 3 + seed % 5, 2 + seed % 4);
    CHECK(import_json(export_json(d)) == d);
    CHECK(export_json(d) == export_json(d));
  }
  CHECK_THROWS_AS(import_json("{"), ParseError);
  CHECK_THROWS_AS(import_json("{\"axes\": 3}"), ParseError);
}
