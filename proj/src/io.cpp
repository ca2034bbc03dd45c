#include "abacore/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace abacore {

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out.push_back(sep);
    out += parts[i];
  }
  return out;
}

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool consume(char c) {
    if (!eof() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  int parse_int() {
    skip_ws();
    const std::size_t start = pos;
    bool negative = consume('-');
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("expected an integer", pos);
    long long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1000000000LL) throw ParseError("integer too large", start);
      ++pos;
    }
    return static_cast<int>(negative ? -value : value);
  }

  Rational parse_rational_token() {
    skip_ws();
    const std::size_t start = pos;
    while (pos < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[pos])) ||
            text[pos] == '-' || text[pos] == '/'))
      ++pos;
    if (pos == start) throw ParseError("expected a rational", start);
    try {
      return parse_rational(std::string(text.substr(start, pos - start)));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  void finish() {
    if (!eof()) throw ParseError("unexpected trailing characters", pos);
  }
};

std::vector<int> parse_int_list(Cursor& cur, char close) {
  std::vector<int> out;
  if (cur.peek() == close) {
    ++cur.pos;
    return out;
  }
  out.push_back(cur.parse_int());
  while (cur.consume(',')) out.push_back(cur.parse_int());
  cur.expect(close);
  return out;
}

BetaSet parse_beta_body(Cursor& cur) {
  cur.expect('{');
  return BetaSet(parse_int_list(cur, '}'));
}

std::string pad(const std::string& cell, std::size_t width) {
  return cell + std::string(width - cell.size(), ' ');
}

}  // namespace

std::string format(const Partition& lam) {
  if (lam.empty()) return "[]";
  std::vector<std::string> parts;
  parts.reserve(lam.parts().size());
  for (int p : lam.parts()) parts.push_back(std::to_string(p));
  return join(parts, ',');
}

std::string format(const BetaSet& x) {
  std::vector<std::string> parts;
  parts.reserve(x.elements().size());
  for (int v : x.elements()) parts.push_back(std::to_string(v));
  return "{" + join(parts, ',') + "}";
}

std::string format(const DSymbol& s) {
  std::vector<std::string> rows;
  rows.reserve(s.rows().size());
  for (const BetaSet& row : s.rows()) rows.push_back(format(row));
  return "(" + join(rows, '|') + ")";
}

std::string format(const DataTuple& delta) {
  std::vector<std::string> parts;
  parts.reserve(delta.offsets().size());
  for (const Rational& c : delta.offsets())
    parts.push_back(rational_to_string(c));
  return "(" + join(parts, ',') + ";" + rational_to_string(delta.scale()) +
         ")";
}

std::string format(const SymbolHook& z) {
  return "(" + std::to_string(z.a) + "," + std::to_string(z.b) + "," +
         std::to_string(z.i) + "," + std::to_string(z.j) + ")";
}

std::string format(const Multiset<int>& m) {
  std::vector<std::string> parts;
  parts.reserve(m.values().size());
  for (int v : m.values()) parts.push_back(std::to_string(v));
  return "{" + join(parts, ',') + "}";
}

std::string format(const RationalMultiset& m) {
  std::vector<std::string> parts;
  parts.reserve(m.values().size());
  for (const Rational& v : m.values()) parts.push_back(rational_to_string(v));
  return "{" + join(parts, ',') + "}";
}

std::string format(const std::vector<Partition>& components) {
  std::vector<std::string> parts;
  parts.reserve(components.size());
  for (const Partition& comp : components) {
    std::vector<std::string> inner;
    inner.reserve(comp.parts().size());
    for (int p : comp.parts()) inner.push_back(std::to_string(p));
    parts.push_back("(" + join(inner, ',') + ")");
  }
  return "(" + join(parts, ',') + ")";
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

Partition parse_partition(std::string_view text) {
  Cursor cur{text};
  if (cur.peek() == '[') {
    ++cur.pos;
    cur.expect(']');
    cur.finish();
    return Partition();
  }
  std::vector<int> parts;
  parts.push_back(cur.parse_int());
  while (cur.consume(',')) parts.push_back(cur.parse_int());
  cur.finish();
  try {
    return Partition(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

BetaSet parse_beta_set(std::string_view text) {
  Cursor cur{text};
  try {
    BetaSet x = parse_beta_body(cur);
    cur.finish();
    return x;
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

DSymbol parse_symbol(std::string_view text) {
  Cursor cur{text};
  try {
    cur.expect('(');
    std::vector<BetaSet> rows;
    rows.push_back(parse_beta_body(cur));
    while (cur.consume('|')) rows.push_back(parse_beta_body(cur));
    cur.expect(')');
    cur.finish();
    return DSymbol(std::move(rows));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

DataTuple parse_data_tuple(std::string_view text) {
  Cursor cur{text};
  cur.expect('(');
  std::vector<Rational> offsets;
  offsets.push_back(cur.parse_rational_token());
  while (cur.consume(',')) offsets.push_back(cur.parse_rational_token());
  cur.expect(';');
  Rational scale = cur.parse_rational_token();
  cur.expect(')');
  cur.finish();
  try {
    return DataTuple(std::move(offsets), scale);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 0);
  }
}

ParsedObject parse_object(std::string_view text) {
  Cursor cur{text};
  switch (cur.peek()) {
    case '{':
      return parse_beta_set(text);
    case '(':
      return parse_symbol(text);
    default:
      return parse_partition(text);
  }
}

std::string render_grid(const std::vector<std::vector<std::string>>& rows) {
  std::size_t width = 1;
  for (const auto& row : rows)
    for (const auto& cell : row) width = std::max(width, cell.size());
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) line.push_back(' ');
      line += pad(row[c], width);
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out.push_back('\n');
  }
  return out;
}

std::string render_hook_diagram(const Partition& lam) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 1; r <= lam.length(); ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= lam.part(r); ++c)
      row.push_back(std::to_string(hook_length_at(lam, Node{r, c})));
    rows.push_back(std::move(row));
  }
  return render_grid(rows);
}

std::string render_residue_diagram(const Partition& lam, int d) {
  std::vector<std::vector<std::string>> rows;
  for (int r = 1; r <= lam.length(); ++r) {
    std::vector<std::string> row;
    for (int c = 1; c <= lam.part(r); ++c)
      row.push_back(std::to_string(residue(Node{r, c}, d)));
    rows.push_back(std::move(row));
  }
  return render_grid(rows);
}

std::string render_length_table(const DSymbol& s, const DataTuple& delta) {
  const Partition lam = partition_of(s);
  std::vector<std::vector<std::string>> rows(lam.length());
  for (int r = 1; r <= lam.length(); ++r)
    rows[r - 1].assign(lam.part(r), std::string());
  for (const SymbolHook& z : hooks(s)) {
    const PartitionHookRef ref = diagram_position(s, z);
    std::string& cell = rows[ref.corner.row - 1][ref.corner.col - 1];
    if (!cell.empty()) throw std::logic_error("length table cell hit twice");
    cell = rational_to_string(delta_length(delta, z));
  }
  for (const auto& row : rows)
    for (const auto& cell : row)
      if (cell.empty()) throw std::logic_error("length table missed a cell");
  return render_grid(rows);
}

std::string render_adjusted_quotient_table(const BetaSet& x, int d) {
  const Partition mu = d_quotient_partition(x, d);
  const std::vector<int> sizes = to_symbol(x, d).row_sizes();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"."};
  const int top = mu.empty() ? 0 : mu.part(1);
  for (int c = 1; c <= top; ++c) {
    const int foot = hand_foot_residues(mu, Node{1, c}, d).foot;
    header.push_back(std::to_string(d * sizes[(foot + d - 1) % d]));
  }
  rows.push_back(std::move(header));
  for (int r = 1; r <= mu.length(); ++r) {
    const int hand = hand_foot_residues(mu, Node{r, 1}, d).hand;
    std::vector<std::string> row{std::to_string(d * sizes[hand])};
    for (int c = 1; c <= mu.part(r); ++c) {
      const HandFoot hf = hand_foot_residues(mu, Node{r, c}, d);
      const int value = hook_length_at(mu, Node{r, c}) +
                        d * (sizes[hf.hand] - sizes[(hf.foot + d - 1) % d]);
      row.push_back(std::to_string(value));
    }
    rows.push_back(std::move(row));
  }
  return render_grid(rows);
}

}  // namespace abacore
