#pragma once

// Arithmetic tables, golden-table text format, counting identities and
// total-grove checks.
//
// Golden-table format: one cell per line,
//   <row> <op> <col> = {name, name, ...}
// where <op> is '+' or '*', operands are names or brace-enclosed groves, and
// result names are in canonical order. Lines starting with '#' and blank
// lines are ignored.

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "arithmetree/binary_arith.hpp"
#include "arithmetree/config.hpp"
#include "arithmetree/enumerate.hpp"
#include "arithmetree/error.hpp"
#include "arithmetree/grove.hpp"
#include "arithmetree/notation.hpp"
#include "arithmetree/planar_arith.hpp"
#include "arithmetree/primes.hpp"

namespace arithmetree {

enum class Operation { add, multiply };

inline char operation_symbol(Operation op) { return op == Operation::add ? '+' : '*'; }

template <class Tree>
Grove<Tree> apply(Operation op, const Grove<Tree>& g, const Grove<Tree>& h, const Limits& limits = default_limits()) {
  return op == Operation::add ? sum(g, h) : multiply(g, h, limits);
}

// ---- grove text -------------------------------------------------------------

// A name or a brace-enclosed, comma-separated list of names.
template <class Tree>
Grove<Tree> parse_grove(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) throw InvalidName("empty grove");
  if (text.front() != '{') return Grove<Tree>(parse_tree<Tree>(text));
  if (text.back() != '}') throw InvalidName("unterminated grove '" + std::string(text) + "'");
  std::string_view body = text.substr(1, text.size() - 2);
  std::vector<Tree> trees;
  // Commas also separate bracket-name entries, so split only at depth 0.
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      trees.push_back(parse_tree<Tree>(body.substr(start, i - start)));
      start = i + 1;
    } else if (body[i] == '[') {
      ++depth;
    } else if (body[i] == ']') {
      --depth;
    }
  }
  return Grove<Tree>(std::move(trees));
}

// Operands print as a bare name when they are a single tree.
template <class Tree>
std::string operand_string(const Grove<Tree>& g) {
  return g.size() == 1 ? render_name(g.front().name()) : to_string(g);
}

// ---- tables -----------------------------------------------------------------

template <class Tree>
struct TableCell {
  Grove<Tree> row;
  Grove<Tree> col;
  Grove<Tree> result;
};

template <class Tree>
struct ArithmeticTable {
  Operation operation = Operation::add;
  std::vector<Grove<Tree>> rows;
  std::vector<Grove<Tree>> cols;
  std::vector<TableCell<Tree>> cells;  // row-major

  static constexpr Flavor flavor = Tree::flavor;
};

template <class Tree>
ArithmeticTable<Tree> build_table(Operation op, std::vector<Grove<Tree>> rows, std::vector<Grove<Tree>> cols,
                                  const Limits& limits = default_limits()) {
  ArithmeticTable<Tree> table{op, std::move(rows), std::move(cols), {}};
  for (const auto& r : table.rows) {
    for (const auto& c : table.cols) table.cells.push_back({r, c, apply(op, r, c, limits)});
  }
  return table;
}

template <class Tree>
std::string format_table(const ArithmeticTable<Tree>& table) {
  std::string out;
  for (const auto& cell : table.cells) {
    out += operand_string(cell.row) + " " + operation_symbol(table.operation) + " " + operand_string(cell.col) +
           " = " + to_string(cell.result) + "\n";
  }
  return out;
}

// The row and column operands of the standard tables.
struct TableLayout {
  std::vector<std::string> rows;
  std::vector<std::string> cols;
};

inline std::vector<TableLayout> standard_layout(Flavor flavor, Operation op) {
  if (flavor == Flavor::binary) {
    if (op == Operation::add) return {{{"1", "12", "21", "123", "213", "131", "312", "321"}, {"1", "12", "21"}}};
    return {{{"12", "21"}, {"12", "21", "{12, 21}", "123", "213", "131", "312", "321"}},
            {{"123", "213", "131"}, {"12", "21", "{12, 21}"}}};
  }
  if (op == Operation::add) return {{{"1", "12", "21", "22"}, {"1", "12", "21", "22"}}};
  return {{{"12", "21", "22"}, {"12", "21", "22", "{12, 21}", "123", "133"}}};
}

// The standard tables, restricted to operands of degree at most max_degree.
template <class Tree>
std::vector<ArithmeticTable<Tree>> standard_tables(Operation op, unsigned max_degree,
                                                   const Limits& limits = default_limits()) {
  const unsigned cap = Tree::flavor == Flavor::binary ? limits.binary_cap : limits.planar_cap;
  if (max_degree > cap) {
    throw ResourceLimit("table operand degree " + std::to_string(max_degree) + " exceeds the degree cap " +
                        std::to_string(cap));
  }
  std::vector<ArithmeticTable<Tree>> tables;
  for (const auto& layout : standard_layout(Tree::flavor, op)) {
    std::vector<Grove<Tree>> rows;
    std::vector<Grove<Tree>> cols;
    for (const auto& r : layout.rows) {
      auto g = parse_grove<Tree>(r);
      if (g.degree() <= max_degree) rows.push_back(std::move(g));
    }
    for (const auto& c : layout.cols) {
      auto g = parse_grove<Tree>(c);
      if (g.degree() <= max_degree) cols.push_back(std::move(g));
    }
    if (rows.empty() || cols.empty()) continue;
    tables.push_back(build_table(op, std::move(rows), std::move(cols), limits));
  }
  return tables;
}

// ---- golden files -----------------------------------------------------------

template <class Tree>
struct GoldenCell {
  Grove<Tree> row;
  char op = '+';
  Grove<Tree> col;
  Grove<Tree> result;
};

namespace detail {

// Reads one operand starting at `pos`: a brace group or a run of
// non-space characters.
inline std::string_view read_operand(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && line[pos] == ' ') ++pos;
  const std::size_t start = pos;
  if (pos < line.size() && line[pos] == '{') {
    auto close = line.find('}', pos);
    if (close == std::string_view::npos) throw InvalidName("unterminated grove in golden line");
    pos = close + 1;
  } else {
    while (pos < line.size() && line[pos] != ' ') ++pos;
  }
  return line.substr(start, pos - start);
}

}  // namespace detail

template <class Tree>
std::vector<GoldenCell<Tree>> parse_golden(std::string_view text) {
  std::vector<GoldenCell<Tree>> cells;
  std::size_t line_no = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      std::size_t pos = 0;
      auto row = detail::read_operand(line, pos);
      auto op = detail::read_operand(line, pos);
      auto col = detail::read_operand(line, pos);
      auto eq = detail::read_operand(line, pos);
      if ((op != "+" && op != "*") || eq != "=") throw InvalidName("malformed cell");
      auto result = line.substr(pos);
      cells.push_back({parse_grove<Tree>(row), op.front(), parse_grove<Tree>(col), parse_grove<Tree>(result)});
    } catch (const Error& e) {
      throw InvalidName("golden line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cells;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline std::string golden_file_name(Flavor flavor, Operation op) {
  return std::string(flavor_name(flavor)) + (op == Operation::add ? "_add.txt" : "_mul.txt");
}

// Differences between computed tables and golden cells, as readable lines.
// Cells are compared as sets. Golden cells whose operands are outside the
// computed tables are ignored, so a degree-restricted table can be checked
// against the full golden file.
template <class Tree>
std::vector<std::string> compare_with_golden(const std::vector<ArithmeticTable<Tree>>& tables,
                                             const std::vector<GoldenCell<Tree>>& golden) {
  std::map<std::pair<std::string, std::string>, const GoldenCell<Tree>*> index;
  for (const auto& cell : golden) index[{operand_string(cell.row), operand_string(cell.col)}] = &cell;
  std::vector<std::string> problems;
  for (const auto& table : tables) {
    for (const auto& cell : table.cells) {
      const auto key = std::make_pair(operand_string(cell.row), operand_string(cell.col));
      auto it = index.find(key);
      const std::string label = key.first + " " + operation_symbol(table.operation) + " " + key.second;
      if (it == index.end()) {
        problems.push_back(label + ": no golden cell");
        continue;
      }
      if (it->second->op != operation_symbol(table.operation)) {
        problems.push_back(label + ": golden cell has a different operation");
      } else if (!(it->second->result == cell.result)) {
        problems.push_back(label + ": computed " + to_string(cell.result) + ", golden " +
                           to_string(it->second->result));
      }
    }
  }
  return problems;
}

// ---- counting identities ----------------------------------------------------

// c_{x,y} = |x + y| over Y_n x Y_m.
inline std::map<std::pair<PBTree, PBTree>, std::size_t> pair_counts(unsigned n, unsigned m,
                                                                    const Limits& limits = default_limits()) {
  detail::check_cap(n + m, limits.binary_cap, "pair count");
  std::map<std::pair<PBTree, PBTree>, std::size_t> out;
  detail::Engine<PBTree> engine(limits);
  for (const auto& x : enumerate_binary(n, limits)) {
    for (const auto& y : enumerate_binary(m, limits)) out[{x, y}] = engine.sum(x.name(), y.name()).size();
  }
  return out;
}

// d_{x,m} = |x * total(m)| over Y_n.
inline std::map<PBTree, std::size_t> times_total_counts(unsigned n, unsigned m,
                                                        const Limits& limits = default_limits()) {
  detail::check_cap(n * m, limits.binary_cap, "product count");
  std::map<PBTree, std::size_t> out;
  const auto total = total_grove<PBTree>(m, limits);
  for (const auto& x : enumerate_binary(n, limits)) out[x] = multiply(BinaryGrove(x), total, limits).size();
  return out;
}

// total(n) op total(m) == total(n op m).
inline bool check_total_identity(unsigned n, unsigned m, Operation op, Flavor flavor,
                                 const Limits& limits = default_limits()) {
  const unsigned result = op == Operation::add ? n + m : n * m;
  if (flavor == Flavor::binary) {
    detail::check_cap(result, limits.binary_cap, "total grove identity");
    return apply(op, total_grove<PBTree>(n, limits), total_grove<PBTree>(m, limits), limits) ==
           total_grove<PBTree>(result, limits);
  }
  detail::check_cap(result, limits.planar_cap, "total grove identity");
  return apply(op, total_grove<PTree>(n, limits), total_grove<PTree>(m, limits), limits) ==
         total_grove<PTree>(result, limits);
}

inline std::vector<Factorization<PBTree>> solve_grove_factorization(const BinaryGrove& g,
                                                                    const Limits& limits = default_limits()) {
  return factor(g, limits);
}

}  // namespace arithmetree
