#include "gaf/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "gaf/canon.hpp"
#include "gaf/cover.hpp"
#include "gaf/diagram.hpp"
#include "gaf/gaf_io.hpp"
#include "gaf/limit_group.hpp"
#include "gaf/pmanifold.hpp"
#include "json.hpp"

namespace gaf::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

struct FileParseError : Error {
  FileParseError(const std::string& file, const ParseError& e)
      : Error(file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.detail() +
              (e.expected().empty() ? "" : " (expected " + e.expected() + ")")) {}
};

Diagram load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_gaf(buffer.str());
  } catch (const ParseError& e) {
    throw FileParseError(path, e);
  }
}

json report_json(const ValidationReport& r) {
  json v = json::array();
  for (const auto& x : r.violations) v.push_back({{"rule", x.rule}, {"message", x.message}, {"element", x.element}});
  return {{"valid", r.valid}, {"violations", v}};
}

template <typename T>
std::string join(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream out;
  for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? sep : "") << xs[i];
  return out.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometric amalgamations of free groups: validation, canonical forms and invariants", "gaf"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  bool as_json = false;
  std::string file, file2, root;
  bool lax = false, orientable_only = false, witness = false, keep_axes = false, dot = false,
       multi_edges = false;
  int axes = 0, chambers = 0, max_rank = 0, depth = 0, fanout = 0;
  std::uint64_t seed = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Check the axioms; exit 0 if valid, 1 if not");
  validate_cmd->add_option("file", file, "GAF file")->required();
  validate_cmd->add_flag("--lax", lax, "Only require axis degree >= 3 (multi-edges count)");
  validate_cmd->add_flag("--orientable-only", orientable_only, "Reject nonorientable chambers");

  auto* canon_cmd = app.add_subcommand("canon", "Print the canonical code");
  canon_cmd->add_option("file", file, "GAF file")->required();

  auto* iso_cmd = app.add_subcommand("iso", "Exit 0 if the diagrams are isomorphic, 1 if not");
  iso_cmd->add_option("file1", file, "GAF file")->required();
  iso_cmd->add_option("file2", file2, "GAF file")->required();
  iso_cmd->add_flag("--witness", witness, "Print an isomorphism");

  auto* present_cmd = app.add_subcommand("present", "Print a presentation of the limit group");
  present_cmd->add_option("file", file, "GAF file")->required();
  present_cmd->add_flag("--keep-axes", keep_axes, "Keep one generator per axis");

  auto* inv_cmd = app.add_subcommand("invariants", "Euler characteristic, Betti numbers, H1 and degree data");
  inv_cmd->add_option("file", file, "GAF file")->required();

  auto* enum_cmd = app.add_subcommand("enum", "One canonical code per isomorphism class");
  enum_cmd->add_option("--axes", axes, "Maximum number of axes")->required()->check(CLI::Range(1, 64));
  enum_cmd->add_option("--chambers", chambers, "Maximum number of chambers")->required()->check(CLI::Range(1, 64));
  enum_cmd->add_option("--max-rank", max_rank, "Maximum chamber rank")->required()->check(CLI::Range(1, 64));
  enum_cmd->add_flag("--orientable-only", orientable_only, "Only orientable chambers");
  enum_cmd->add_flag("--multi-edges", multi_edges, "Allow parallel edges");

  auto* cover_cmd = app.add_subcommand("cover", "Truncated universal-cover incidence tree");
  cover_cmd->add_option("file", file, "GAF file")->required();
  cover_cmd->add_option("--root", root, "Root axis")->required();
  cover_cmd->add_option("--depth", depth, "Number of levels")->required()->check(CLI::Range(1, 64));
  cover_cmd->add_option("--fanout", fanout, "Lifts kept per boundary slot")->required()->check(CLI::Range(1, 64));
  cover_cmd->add_flag("--dot", dot, "Graphviz output");

  auto* random_cmd = app.add_subcommand("random", "Print a seeded random valid diagram as GAF");
  random_cmd->add_option("--seed", seed, "Random seed")->required();
  random_cmd->add_option("--axes", axes, "Number of axes")->required()->check(CLI::Range(1, 1000));
  random_cmd->add_option("--chambers", chambers, "Number of chambers")->required()->check(CLI::Range(1, 1000));
  random_cmd->add_option("--max-rank", max_rank, "Maximum chamber rank")->required()->check(CLI::Range(1, 1000));

  for (auto* sub : app.get_subcommands({}))
    if (sub != random_cmd) sub->add_flag("--json", as_json, "Machine-readable output");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && !app.get_subcommand_no_throw(args[0])) {
    err << "usage error: unknown subcommand " << args[0] << "\n";
    return kExitError;
  }
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  std::ostringstream buf;
  int code = kExitOk;
  try {
    if (validate_cmd->parsed()) {
      ValidationOptions options;
      options.thickness = lax ? ThicknessMode::lax : ThicknessMode::strict;
      options.orientable_only = orientable_only;
      const auto report = validate(load(file), options);
      if (as_json) {
        buf << report_json(report).dump(2) << "\n";
      } else if (report.valid) {
        buf << "valid\n";
      } else {
        buf << "invalid\n";
        for (const auto& v : report.violations) buf << v.rule << ": " << v.message << "\n";
      }
      code = report.valid ? kExitOk : kExitNo;
    } else if (canon_cmd->parsed()) {
      const auto c = canonical_code(load(file));
      if (as_json)
        buf << json{{"code", c.to_string()}}.dump(2) << "\n";
      else
        buf << c.to_string() << "\n";
    } else if (iso_cmd->parsed()) {
      const Diagram d1 = load(file), d2 = load(file2);
      const auto w = find_isomorphism(d1, d2);
      code = w ? kExitOk : kExitNo;
      if (as_json) {
        json doc{{"isomorphic", w.has_value()}};
        if (w && witness) doc["witness"] = {{"axes", w->axis_map}, {"chambers", w->chamber_map}};
        buf << doc.dump(2) << "\n";
      } else {
        buf << (w ? "isomorphic\n" : "not isomorphic\n");
        if (w && witness) {
          for (const auto& [from, to] : w->axis_map) buf << "axis " << from << " -> " << to << "\n";
          for (const auto& [from, to] : w->chamber_map) buf << "chamber " << from << " -> " << to << "\n";
        }
      }
    } else if (present_cmd->parsed()) {
      const auto p = limit_presentation(load(file), !keep_axes);
      buf << (as_json ? p.to_json() : p.to_string() + "\n");
    } else if (inv_cmd->parsed()) {
      const Diagram d = load(file);
      const long chi = euler_characteristic(d);
      const auto betti = betti_numbers(d);
      const auto h1 = abelianization(d);
      std::vector<int> ranks;
      for (const auto& c : d.chambers) ranks.push_back(c.data.rank);
      std::sort(ranks.begin(), ranks.end());
      std::vector<int> axis_degrees, chamber_degrees;
      for (const auto& a : d.axes) axis_degrees.push_back(axis_degree(d, a));
      for (const auto& c : d.chambers) chamber_degrees.push_back(boundary_count(d, c.name));
      std::sort(axis_degrees.rbegin(), axis_degrees.rend());
      std::sort(chamber_degrees.rbegin(), chamber_degrees.rend());
      const auto automorphisms = automorphism_count(d).str();
      if (as_json) {
        json doc{{"chi", chi},
                 {"betti", {betti.b0, betti.b1, betti.b2}},
                 {"torsion", h1.invariant_factors},
                 {"free_rank", h1.free_rank},
                 {"ranks", ranks},
                 {"axis_degrees", axis_degrees},
                 {"chamber_degrees", chamber_degrees},
                 {"automorphisms", automorphisms}};
        buf << doc.dump(2) << "\n";
      } else {
        buf << "chi: " << chi << "\n"
            << "betti: " << betti.b0 << "," << betti.b1 << "," << betti.b2 << "\n"
            << "torsion: " << join(h1.invariant_factors) << "\n"
            << "free_rank: " << h1.free_rank << "\n"
            << "ranks: " << join(ranks) << "\n"
            << "axis_degrees: " << join(axis_degrees) << "\n"
            << "chamber_degrees: " << join(chamber_degrees) << "\n"
            << "automorphisms: " << automorphisms << "\n";
      }
    } else if (enum_cmd->parsed()) {
      const auto codes = enumerate_diagrams({axes, chambers, max_rank, orientable_only, multi_edges});
      if (as_json) {
        json list = json::array();
        for (const auto& c : codes) list.push_back(c.to_string());
        buf << json{{"codes", list}}.dump(2) << "\n";
      } else {
        for (const auto& c : codes) buf << c.to_string() << "\n";
      }
    } else if (cover_cmd->parsed()) {
      if (dot && as_json) throw CLI::ValidationError("--dot and --json are mutually exclusive");
      const auto tree = build_cover_tree(load(file), root, depth, fanout);
      if (dot) {
        buf << tree.to_dot();
      } else if (as_json) {
        buf << tree.to_json();
      } else {
        for (const auto& n : tree.nodes())
          buf << n.id << " " << (n.kind == NodeKind::geodesic ? "geodesic" : "chamber") << " " << n.label
              << " parent=" << (n.parent < 0 ? std::string("-") : std::to_string(n.parent)) << " level=" << n.level
              << "\n";
      }
    } else if (random_cmd->parsed()) {
      buf << print_gaf(random_diagram(seed, axes, chambers, max_rank));
    }
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const IoError& e) {
    err << "io error: " << e.what() << "\n";
    return kExitError;
  } catch (const FileParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitError;
  } catch (const InvalidDiagram& e) {
    err << e.what() << "\n";
    return kExitError;
  } catch (const UnknownIdentifier& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  out << buf.str();
  return code;
}

}  // namespace gaf::cli
