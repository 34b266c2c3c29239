#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "rosetree/bench.hpp"
#include "rosetree/document.hpp"
#include "rosetree/errors.hpp"
#include "rosetree/nav_cursor.hpp"
#include "rosetree/node_identity.hpp"
#include "rosetree/notation.hpp"

namespace rosetree::cli {

nlohmann::json to_json(const bench::Report& r) {
  return nlohmann::json{
      {"method", std::string(bench::to_string(r.method))},
      {"depth", r.depth},
      {"branch", r.branch},
      {"node_count", r.node_count},
      {"wall_time", r.wall_time},
      {"cell_ops", r.cell_ops},
  };
}

namespace {

std::string read_input(const std::string& path, std::istream& in) {
  if (path.empty() || path == "-") {
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return buf.str();
}

enum class Axis { following_sibling, preceding_sibling, ancestor, descendant_or_self };

// The axis named on the command line, relative to the node with id `id`.
template <class D>
NodeSet query_axis(const Tree<D>& source, Axis axis, std::uint64_t id) {
  const NumberedTree<D> numbered = number_tree(source);
  for (const auto& c : from_tree(numbered).descendants_or_self()) {
    if (node_id(c).value != id) continue;
    switch (axis) {
      case Axis::following_sibling: return collect_set(c.following_siblings());
      case Axis::preceding_sibling: return collect_set(c.preceding_siblings());
      case Axis::ancestor: return collect_set(c.ancestors());
      case Axis::descendant_or_self: return collect_set(c.descendants_or_self());
    }
  }
  throw std::out_of_range("no node with id " + std::to_string(id));
}

bool looks_like_document(const std::string& text) {
  auto it = std::find_if_not(text.begin(), text.end(),
                             [](unsigned char c) { return std::isspace(c) != 0; });
  return it != text.end() && *it == '<';
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Persistent rose-tree cursors: traversal benchmark and document tools",
               "rosetree"};
  app.require_subcommand(1);

  int depth = 10;
  int branch = 4;
  std::string method_name;
  bool verify = false;
  bool json = false;
  auto* bench_cmd = app.add_subcommand("bench", "Time one or all traversal methods");
  bench_cmd->add_option("--depth", depth, "Tree depth")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--branch", branch, "Children per inner node")
      ->check(CLI::PositiveNumber);
  bench_cmd
      ->add_option("--method", method_name,
                   "search_direct|search_cursor|list_direct|list_cursor (default: all)")
      ->check(CLI::IsMember({"search_direct", "search_cursor", "list_direct", "list_cursor"}));
  bench_cmd->add_flag("--verify", verify, "Check labels() and collect() agree");
  bench_cmd->add_flag("--json", json, "One JSON report per line");

  std::string unfont_file;
  auto* unfont_cmd = app.add_subcommand("unfont", "Replace every <font> element by its contents");
  unfont_cmd->add_option("file", unfont_file, "Input document (stdin if absent)");

  std::string axis_name;
  std::uint64_t id = 0;
  std::string query_file;
  auto* query_cmd = app.add_subcommand("query", "List the node ids on an axis, in document order");
  query_cmd->add_option("--axis", axis_name, "Axis")
      ->required()
      ->check(CLI::IsMember(
          {"following-sibling", "preceding-sibling", "ancestor", "descendant-or-self"}));
  query_cmd->add_option("--id", id, "Preorder id of the context node")->required();
  query_cmd->add_option("file", query_file, "Document or tree notation (stdin if absent)");

  std::string roundtrip_file;
  auto* roundtrip_cmd =
      app.add_subcommand("roundtrip", "Parse, serialize and re-parse a document");
  roundtrip_cmd->add_option("file", roundtrip_file, "Input document (stdin if absent)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (bench_cmd->parsed()) {
      std::vector<bench::Method> methods(std::begin(bench::all_methods),
                                         std::end(bench::all_methods));
      if (!method_name.empty()) methods = {*bench::parse_method(method_name)};
      for (bench::Method m : methods) {
        const bench::Report r = bench::run(depth, branch, m);
        if (json) {
          out << to_json(r).dump() << '\n';
        } else {
          out << bench::to_string(r.method) << ": depth=" << r.depth
              << " branch=" << r.branch << " nodes=" << r.node_count
              << " time=" << r.wall_time << "s cells=" << r.cell_ops << '\n';
        }
      }
      if (verify) {
        bench::verify_lists(depth, branch);
        if (!json) out << "verify: labels and collect agree\n";
      }
      return kOk;
    }

    if (unfont_cmd->parsed()) {
      const auto doc = doc::parse(read_input(unfont_file, in));
      out << doc::serialize(doc::unfont(doc)) << '\n';
      return kOk;
    }

    if (query_cmd->parsed()) {
      const Axis axis = axis_name == "following-sibling"   ? Axis::following_sibling
                        : axis_name == "preceding-sibling" ? Axis::preceding_sibling
                        : axis_name == "ancestor"          ? Axis::ancestor
                                                           : Axis::descendant_or_self;
      const std::string text = read_input(query_file, in);
      const NodeSet result = looks_like_document(text)
                                 ? query_axis(doc::parse(text), axis, id)
                                 : query_axis(parse_notation(text), axis, id);
      for (NodeId n : result.members()) out << n.value << '\n';
      return kOk;
    }

    if (roundtrip_cmd->parsed()) {
      const auto first = doc::parse(read_input(roundtrip_file, in));
      const auto second = doc::parse(doc::serialize(first));
      const bool same = first == second;
      out << (same ? "equal" : "unequal") << '\n';
      return same ? kOk : kFailure;
    }
  } catch (const std::out_of_range& e) {
    err << "rosetree: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "rosetree: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "rosetree: " << to_string(e.code()) << ": " << e.what() << '\n';
    return kFailure;
  } catch (const std::exception& e) {
    err << "rosetree: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace rosetree::cli
