// Command-line front end for grove arithmetic.

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "arithmetree/arithmetree.hpp"

namespace at = arithmetree;

namespace {

enum Exit : int { ok = 0, internal = 1, syntax = 2, semantic = 3, mismatch = 4 };

#ifndef ARITHMETREE_GOLDEN_DIR
#define ARITHMETREE_GOLDEN_DIR "data/golden"
#endif

constexpr const char* operator_help =
    "Operators, tightest first:\n"
    "  ~x        mirror\n"
    "  x * y     product\n"
    "  x <+ y    left sum   (also written as a left-pointing tack)\n"
    "  x +> y    right sum  (right-pointing tack)\n"
    "  x <+> y   middle sum (up tack; planar mode only)\n"
    "  x + y     sum\n"
    "  x u y     union\n"
    "Operands: names such as 1412 or [1,10,2], 0 for the leaf, groves {12, 21},\n"
    "total(n). deg(e) and card(e) print the degree and the number of trees.\n";

template <class Tree>
std::string json_grove(const at::Grove<Tree>& g) {
  nlohmann::json j;
  j["degree"] = g.degree();
  j["trees"] = nlohmann::json::array();
  for (const auto& t : g) j["trees"].push_back(at::render_name(t.name()));
  return j.dump();
}

std::string render(const at::AnyGrove& g, bool json) {
  return std::visit([&](const auto& x) { return json ? json_grove(x) : at::to_string(x); }, g);
}

struct Options {
  bool planar = false;
  bool json = false;
};

int run_eval(const std::string& text, const Options& opt) {
  const auto value = at::evaluate(text, opt.planar ? at::Flavor::planar : at::Flavor::binary);
  if (const auto* n = std::get_if<std::uint64_t>(&value)) {
    std::cout << (opt.json ? nlohmann::json{{"value", *n}}.dump() : std::to_string(*n)) << "\n";
  } else {
    std::cout << render(std::get<at::AnyGrove>(value), opt.json) << "\n";
  }
  return ok;
}

int run_enumerate(unsigned n, const Options& opt) {
  const auto g = at::total_grove(n, opt.planar ? at::Flavor::planar : at::Flavor::binary);
  if (opt.json) {
    std::cout << render(g, true) << "\n";
    return ok;
  }
  std::visit(
      [](const auto& grove) {
        for (const auto& t : grove) std::cout << at::render_name(t.name()) << "\n";
      },
      g);
  return ok;
}

struct TableOptions {
  std::string operation;
  unsigned max_degree = 3;
  bool check = false;
  std::string output;
  std::string golden_dir = ARITHMETREE_GOLDEN_DIR;
};

template <class Tree>
int table_for(const TableOptions& t) {
  const auto op = t.operation == "add" ? at::Operation::add : at::Operation::multiply;
  const auto tables = at::standard_tables<Tree>(op, t.max_degree);
  std::string text;
  for (const auto& table : tables) text += at::format_table(table);

  if (!t.output.empty()) {
    std::ofstream out(t.output, std::ios::binary);
    if (!out) throw at::Error("cannot write " + t.output);
    out << text;
  } else if (!t.check) {
    std::cout << text;
  }

  if (!t.check) return ok;
  const std::string path = t.golden_dir + "/" + at::golden_file_name(Tree::flavor, op);
  const auto golden = at::parse_golden<Tree>(at::read_file(path));
  const auto problems = at::compare_with_golden(tables, golden);
  std::size_t cells = 0;
  for (const auto& table : tables) cells += table.cells.size();
  for (const auto& p : problems) std::cout << "MISMATCH " << p << "\n";
  std::cout << (problems.empty() ? "ok" : "FAILED") << ": " << cells - problems.size() << "/" << cells
            << " cells match " << path << "\n";
  return problems.empty() ? ok : mismatch;
}

template <class Tree>
int factor_for(const std::string& text, const Options& opt) {
  const auto g = at::parse_grove<Tree>(text);
  const auto found = at::factor(g);
  auto operand = [](const at::Grove<Tree>& h) {
    std::string s;
    for (const auto& t : h) s += (s.empty() ? "" : ", ") + at::render_name(t.name());
    return "(" + s + ")";
  };
  if (opt.json) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& [a, b] : found) {
      j.push_back({{"left", nlohmann::json::parse(json_grove(a))}, {"right", nlohmann::json::parse(json_grove(b))}});
    }
    std::cout << j.dump() << "\n";
    return ok;
  }
  if (found.empty()) std::cout << "prime\n";
  for (const auto& [a, b] : found) std::cout << operand(a) << " x " << operand(b) << "\n";
  return ok;
}

int guarded(const std::function<int()>& body) {
  try {
    return body();
  } catch (const at::SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return syntax;
  } catch (const at::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return semantic;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return internal;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Arithmetic of planar binary trees, planar trees and groves"};
  app.footer(operator_help);
  app.require_subcommand(1);

  Options opt;
  app.add_flag("--planar", opt.planar, "Work with planar trees instead of planar binary trees");
  app.add_flag("--json", opt.json, "Emit JSON: {\"degree\": n, \"trees\": [...]}");

  std::string expression;
  auto* eval = app.add_subcommand("eval", "Evaluate a grove expression");
  eval->add_option("expression", expression, "Expression to evaluate")->required();
  eval->footer(operator_help);

  unsigned degree = 0;
  auto* enumerate = app.add_subcommand("enumerate", "List all trees of a degree in canonical order");
  enumerate->add_option("n", degree, "Degree")->required();

  TableOptions table_opt;
  auto* table = app.add_subcommand("table", "Emit or check the standard sum and product tables");
  table->add_option("operation", table_opt.operation, "add or mul")
      ->required()
      ->check(CLI::IsMember({"add", "mul"}));
  table->add_option("--max-degree", table_opt.max_degree, "Largest operand degree to include");
  table->add_flag("--check", table_opt.check, "Compare against the golden tables; exit 4 on mismatch");
  table->add_option("--output", table_opt.output, "Write the table to a file");
  table->add_option("--golden-dir", table_opt.golden_dir, "Directory holding the golden tables");

  std::string factor_text;
  auto* factor = app.add_subcommand("factor", "List all factorizations of a grove, or print prime");
  factor->add_option("grove", factor_text, "A name or a {name, ...} grove")->required();

  // Flags are accepted after the subcommand as well.
  for (auto* sub : {eval, enumerate, table, factor}) {
    sub->add_flag("--planar", opt.planar, "Work with planar trees");
    sub->add_flag("--json", opt.json, "Emit JSON");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : syntax;
  }

  return guarded([&] {
    if (*eval) return run_eval(expression, opt);
    if (*enumerate) return run_enumerate(degree, opt);
    if (*table) return opt.planar ? table_for<at::PTree>(table_opt) : table_for<at::PBTree>(table_opt);
    return opt.planar ? factor_for<at::PTree>(factor_text, opt) : factor_for<at::PBTree>(factor_text, opt);
  });
}
