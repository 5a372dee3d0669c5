#include "gaf/gaf_io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "json.hpp"

namespace gaf {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

bool ident_char(char ch) {
  return (ch >= 'A' && ch <= 'Z') || (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') ||
         ch == '_';
}

void check_name(const Token& t, std::size_t line) {
  for (std::size_t i = 0; i < t.text.size(); ++i)
    if (!ident_char(t.text[i]))
      throw ParseError(line, t.column + i, "invalid character in name", "[A-Za-z0-9_]");
}

int parse_rank(const Token& t, std::size_t line) {
  constexpr std::string_view prefix = "rank=";
  if (t.text.substr(0, prefix.size()) != prefix)
    throw ParseError(line, t.column, "expected rank attribute", "rank=<positive integer>");
  const auto value = t.text.substr(prefix.size());
  const std::size_t col = t.column + prefix.size();
  if (value.empty() || !std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw ParseError(line, col, "syntax error in rank= value", "positive integer");
  int rank = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), rank);
  if (ec != std::errc() || ptr != value.data() + value.size())
    throw ParseError(line, col, "rank out of range", "positive integer");
  if (rank <= 0) throw ParseError(line, col, "rank not a positive integer", "positive integer");
  return rank;
}

bool parse_orientable(const Token& t, std::size_t line) {
  constexpr std::string_view prefix = "orientable=";
  if (t.text.substr(0, prefix.size()) != prefix)
    throw ParseError(line, t.column, "expected orientable attribute", "orientable=<yes|no>");
  const auto value = t.text.substr(prefix.size());
  if (value == "yes") return true;
  if (value == "no") return false;
  throw ParseError(line, t.column + prefix.size(), "syntax error in orientable= value", "yes or no");
}

void expect_count(const std::vector<Token>& tokens, std::size_t count, std::size_t line,
                  std::size_t line_length, const char* what) {
  if (tokens.size() < count)
    throw ParseError(line, line_length + 1, "unexpected end of line", what);
  if (tokens.size() > count)
    throw ParseError(line, tokens[count].column, "unexpected token", "end of line");
}

}  // namespace

bool is_identifier(std::string_view name) {
  return !name.empty() && std::all_of(name.begin(), name.end(), ident_char);
}

GafDocument parse_gaf_document(std::string_view text) {
  GafDocument doc;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool seen_content = false;
  while (pos < text.size()) {
    ++line_no;
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::string_view comment;
    const std::size_t hash = line.find('#');
    std::string_view body = line.substr(0, hash);
    if (hash != std::string_view::npos) comment = line.substr(hash + 1);

    for (std::size_t i = 0; i < body.size(); ++i) {
      const auto ch = static_cast<unsigned char>(body[i]);
      if (ch != ' ' && ch != '\t' && (ch < 0x21 || ch > 0x7e))
        throw ParseError(line_no, i + 1, "invalid byte", "printable ASCII");
    }

    std::vector<Token> tokens;
    for (std::size_t i = 0; i < body.size();) {
      if (body[i] == ' ' || body[i] == '\t') {
        ++i;
        continue;
      }
      std::size_t j = i;
      while (j < body.size() && body[j] != ' ' && body[j] != '\t') ++j;
      tokens.push_back({body.substr(i, j - i), i + 1});
      i = j;
    }

    if (tokens.empty()) {
      if (hash == std::string_view::npos) continue;
      // Version tag: only honoured before any statement.
      if (!seen_content) {
        std::istringstream in{std::string(comment)};
        std::string tag, version, rest;
        if ((in >> tag >> version) && tag == "gaf" && !(in >> rest) && version != "1")
          throw ParseError(line_no, hash + 1, "unsupported gaf version " + version, "# gaf 1");
      }
      doc.statements.push_back({line_no, Comment{std::string(comment)}});
      continue;
    }
    seen_content = true;

    const auto keyword = tokens[0].text;
    const std::size_t body_len = body.size();
    if (keyword == "axis") {
      expect_count(tokens, 2, line_no, body_len, "axis name");
      check_name(tokens[1], line_no);
      doc.statements.push_back({line_no, AxisDecl{std::string(tokens[1].text), tokens[1].column}});
    } else if (keyword == "chamber") {
      if (tokens.size() < 2) throw ParseError(line_no, body_len + 1, "unexpected end of line", "chamber name");
      check_name(tokens[1], line_no);
      if (tokens.size() < 3)
        throw ParseError(line_no, body_len + 1, "unexpected end of line", "rank=<positive integer>");
      const int rank = parse_rank(tokens[2], line_no);
      if (tokens.size() < 4)
        throw ParseError(line_no, body_len + 1, "unexpected end of line", "orientable=<yes|no>");
      const bool orientable = parse_orientable(tokens[3], line_no);
      expect_count(tokens, 4, line_no, body_len, "end of line");
      doc.statements.push_back(
          {line_no, ChamberDecl{std::string(tokens[1].text), {rank, orientable}, tokens[1].column}});
    } else if (keyword == "edge") {
      if (tokens.size() < 2) throw ParseError(line_no, body_len + 1, "unexpected end of line", "axis name");
      check_name(tokens[1], line_no);
      if (tokens.size() < 3) throw ParseError(line_no, body_len + 1, "unexpected end of line", "chamber name");
      check_name(tokens[2], line_no);
      expect_count(tokens, 3, line_no, body_len, "end of line");
      doc.statements.push_back({line_no, EdgeDecl{std::string(tokens[1].text), std::string(tokens[2].text),
                                                  tokens[1].column, tokens[2].column}});
    } else {
      throw ParseError(line_no, tokens[0].column, "unknown statement", "axis, chamber, edge or #");
    }
  }
  return doc;
}

Diagram to_diagram(const GafDocument& doc) {
  enum class Kind { axis, chamber };
  std::map<std::string, Kind, std::less<>> declared;
  Diagram d;
  for (const auto& st : doc.statements) {
    if (const auto* a = std::get_if<AxisDecl>(&st.body)) {
      if (!declared.emplace(a->name, Kind::axis).second)
        throw ParseError(st.line, a->name_column, "duplicate declaration of name " + a->name);
      d.axes.push_back(a->name);
    } else if (const auto* c = std::get_if<ChamberDecl>(&st.body)) {
      if (!declared.emplace(c->name, Kind::chamber).second)
        throw ParseError(st.line, c->name_column, "duplicate declaration of name " + c->name);
      d.chambers.push_back({c->name, c->data});
    }
  }
  for (const auto& st : doc.statements) {
    const auto* e = std::get_if<EdgeDecl>(&st.body);
    if (!e) continue;
    auto check = [&](const std::string& name, std::size_t column, Kind want) {
      auto it = declared.find(name);
      if (it == declared.end()) throw ParseError(st.line, column, "undeclared name " + name);
      if (it->second != want)
        throw ParseError(st.line, column,
                         "name " + name + " is declared as " +
                             (it->second == Kind::axis ? "an axis" : "a chamber"),
                         want == Kind::axis ? "axis name" : "chamber name");
    };
    check(e->axis, e->axis_column, Kind::axis);
    check(e->chamber, e->chamber_column, Kind::chamber);
    d.edges.push_back({e->axis, e->chamber});
  }
  return d;
}

Diagram parse_gaf(std::string_view text) { return to_diagram(parse_gaf_document(text)); }

std::string print_gaf(const Diagram& d) {
  auto require_ident = [](const std::string& name) {
    if (!is_identifier(name)) throw PreconditionError("not a GAF identifier: '" + name + "'");
  };
  auto axes = d.axes;
  std::sort(axes.begin(), axes.end());
  auto chambers = d.chambers;
  std::sort(chambers.begin(), chambers.end(),
            [](const Chamber& x, const Chamber& y) { return x.name < y.name; });
  auto edges = d.edges;
  std::sort(edges.begin(), edges.end());

  std::string out;
  for (const auto& a : axes) {
    require_ident(a);
    out += "axis " + a + "\n";
  }
  for (const auto& c : chambers) {
    require_ident(c.name);
    out += "chamber " + c.name + " rank=" + std::to_string(c.data.rank) +
           " orientable=" + (c.data.orientable ? "yes" : "no") + "\n";
  }
  for (const auto& e : edges) {
    require_ident(e.axis);
    require_ident(e.chamber);
    out += "edge " + e.axis + " " + e.chamber + "\n";
  }
  return out;
}

namespace {

std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out += '\\';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Diagram& d) {
  std::ostringstream out;
  out << "digraph gaf {\n";
  for (const auto& a : d.axes) out << "  " << dot_quote(a) << " [shape=circle];\n";
  for (const auto& c : d.chambers)
    out << "  " << dot_quote(c.name) << " [shape=box, label="
        << dot_quote(c.name + "\\n" + std::to_string(c.data.rank) + "," +
                     (c.data.orientable ? "or" : "non"))
        << "];\n";
  for (const auto& e : d.edges) out << "  " << dot_quote(e.axis) << " -> " << dot_quote(e.chamber) << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_json(const Diagram& d) {
  using nlohmann::json;
  json doc;
  doc["axes"] = json::array();
  for (const auto& a : d.axes) doc["axes"].push_back(a);
  doc["chambers"] = json::array();
  for (const auto& c : d.chambers)
    doc["chambers"].push_back({{"name", c.name}, {"rank", c.data.rank}, {"orientable", c.data.orientable}});
  doc["edges"] = json::array();
  for (const auto& e : d.edges) doc["edges"].push_back({{"axis", e.axis}, {"chamber", e.chamber}});
  return doc.dump(2) + "\n";
}

Diagram import_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, e.byte, "malformed JSON", "JSON document");
  }
  try {
    Diagram d;
    for (const auto& a : doc.at("axes")) d.axes.push_back(a.get<std::string>());
    for (const auto& c : doc.at("chambers"))
      d.chambers.push_back({c.at("name").get<std::string>(),
                            {c.at("rank").get<int>(), c.at("orientable").get<bool>()}});
    for (const auto& e : doc.at("edges"))
      d.edges.push_back({e.at("axis").get<std::string>(), e.at("chamber").get<std::string>()});
    return d;
  } catch (const json::exception& e) {
    throw ParseError(0, 0, std::string("JSON does not match diagram schema: ") + e.what());
  }
}

}  // namespace gaf
