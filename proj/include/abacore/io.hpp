#pragma once

// Canonical text forms, the matching parsers, and the monospace renderers.
//
//   partition   7,5,4,1            []  when empty
//   β-set       {11,8,6,2,0}       {}  when empty
//   symbol      ({9,7,4,2}|{3,1,0})
//   data tuple  (0,1,2;3)          entries and modulus may be p/q
//
// Multisets print sorted ascending in braces. Grids use a uniform cell
// width, left-justified, single-space separators, no trailing blanks.

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abacore/hook_data.hpp"

namespace abacore {

std::string format(const Partition& lam);
std::string format(const BetaSet& x);
std::string format(const DSymbol& s);
std::string format(const DataTuple& delta);
std::string format(const SymbolHook& z);
std::string format(const Multiset<int>& m);
std::string format(const RationalMultiset& m);
std::string format(const std::vector<Partition>& components);  // ((3),(),(1,1))

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

Partition parse_partition(std::string_view text);
BetaSet parse_beta_set(std::string_view text);
DSymbol parse_symbol(std::string_view text);
DataTuple parse_data_tuple(std::string_view text);

using ParsedObject = std::variant<Partition, BetaSet, DSymbol>;

// dispatch on the leading character: '{' β-set, '(' symbol, else partition
ParsedObject parse_object(std::string_view text);

std::string render_grid(const std::vector<std::vector<std::string>>& rows);
std::string render_hook_diagram(const Partition& lam);
std::string render_residue_diagram(const Partition& lam, int d);

// δ-lengths of all hooks of s, placed in the diagram of p(s) through
// diagram_position; every cell is hit exactly once
std::string render_length_table(const DSymbol& s, const DataTuple& delta);

// diagram of the d-quotient partition of x with hook lengths adjusted by
// row/column offsets d*(row size of to_symbol(x,d)); offsets shown as
// headers, '.' in the corner
std::string render_adjusted_quotient_table(const BetaSet& x, int d);

}  // namespace abacore
