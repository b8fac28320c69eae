#include "linkpoly/conway.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <optional>

namespace linkpoly {

ConwayNode ConwayNode::integer(long n) {
  ConwayNode node;
  node.value.offset = n;
  return node;
}

ConwayNode ConwayNode::parameter(std::string name, int sign, long offset) {
  ConwayNode node;
  node.value.param = std::move(name);
  node.value.sign = sign;
  node.value.offset = offset;
  return node;
}

ConwayParseError::ConwayParseError(const std::string &message, std::string token, std::size_t position)
    : std::invalid_argument(message), token_(std::move(token)), position_(position) {}

int polyhedron_vertex_count(int base) {
  switch (base) {
  case 6:
  case 8:
  case 9:
    return base;
  default:
    throw std::invalid_argument("unsupported basic polyhedron " + std::to_string(base) + "*");
  }
}

namespace {

bool is_param_char(char c) { return c >= 'p' && c <= 't'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_separator(char c) { return c == '.' || c == ':'; }

class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  ConwayAst parse_symbol() {
    trim();
    if (pos_ == end_)
      fail("empty symbol");
    ConwayAst result = has_top_level_separator() ? parse_polyhedron() : parse_expr();
    skip_spaces();
    if (pos_ != end_)
      fail_here();
    return result;
  }

private:
  void trim() {
    while (pos_ < s_.size() && s_[pos_] == ' ')
      ++pos_;
    end_ = s_.size();
    while (end_ > pos_ && s_[end_ - 1] == ' ')
      --end_;
  }

  bool has_top_level_separator() const {
    int depth = 0;
    for (std::size_t i = pos_; i < end_; ++i) {
      char c = s_[i];
      if (c == '(')
        ++depth;
      else if (c == ')')
        --depth;
      else if (depth == 0 && (c == '*' || is_separator(c)))
        return true;
    }
    return false;
  }

  bool at_end() const { return pos_ >= end_; }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }

  void skip_spaces() {
    while (!at_end() && s_[pos_] == ' ')
      ++pos_;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ConwayParseError("conway: " + what + " at position " + std::to_string(pos_), "", pos_);
  }

  [[noreturn]] void fail_here() const {
    std::string token = at_end() ? std::string("end of input") : std::string(1, s_[pos_]);
    throw ConwayParseError("conway: unexpected '" + token + "' at position " + std::to_string(pos_), token, pos_);
  }

  bool atom_starts_here() const {
    char c = peek();
    return is_digit(c) || is_param_char(c) || c == '(' || c == '-';
  }

  ConwayNode parse_polyhedron() {
    ConwayNode node;
    node.kind = NodeKind::Polyhedron;
    node.polyhedron = 6;
    std::size_t save = pos_;
    if (is_digit(peek())) {
      long n = read_number();
      if (peek() == '*') {
        ++pos_;
        if (n != 6 && n != 8 && n != 9) {
          pos_ = save;
          throw ConwayParseError("conway: unsupported basic polyhedron '" + std::to_string(n) + "*' at position " +
                                     std::to_string(save),
                                 std::to_string(n) + "*", save);
        }
        node.polyhedron = static_cast<int>(n);
      } else {
        pos_ = save;
      }
    }
    const int vertices = polyhedron_vertex_count(node.polyhedron);
    int position = 1;
    bool expect_slot = true;
    while (!at_end()) {
      if (is_separator(peek())) {
        int step = 0;
        while (is_separator(peek())) {
          step += peek() == ':' ? 2 : 1;
          ++pos_;
        }
        position += step;
        expect_slot = true;
        continue;
      }
      if (!expect_slot)
        fail_here();
      if (position > vertices)
        fail("slot position " + std::to_string(position) + " exceeds " + std::to_string(node.polyhedron) + "*");
      node.children.push_back(parse_expr());
      node.positions.push_back(position);
      expect_slot = false;
    }
    if (expect_slot && !node.children.empty())
      fail("dangling separator");
    return node;
  }

  ConwayNode parse_expr() {
    ConwayNode base = parse_ramification();
    skip_spaces_before('+');
    while (peek() == '+') {
      ++pos_;
      skip_spaces_before_atom();
      ConwayNode plus;
      plus.kind = NodeKind::Plus;
      ConwayNode addend = atom_starts_here() ? parse_atom() : ConwayNode::integer(1);
      plus.children.push_back(std::move(base));
      plus.children.push_back(std::move(addend));
      base = std::move(plus);
      skip_spaces_before('+');
    }
    return base;
  }

  // Spaces are the product operator, so they are only skipped when the
  // next non-space character is one that cannot start an atom.
  void skip_spaces_before(char c) {
    std::size_t p = pos_;
    while (p < end_ && s_[p] == ' ')
      ++p;
    if (p < end_ && s_[p] == c)
      pos_ = p;
  }

  void skip_spaces_before_atom() {
    std::size_t p = pos_;
    while (p < end_ && s_[p] == ' ')
      ++p;
    pos_ = p;
  }

  ConwayNode parse_ramification() {
    std::vector<ConwayNode> items;
    items.push_back(parse_product());
    skip_spaces_before(',');
    while (peek() == ',') {
      ++pos_;
      skip_spaces();
      items.push_back(parse_product());
      skip_spaces_before(',');
    }
    if (items.size() == 1)
      return std::move(items.front());
    ConwayNode node;
    node.kind = NodeKind::Ramification;
    node.children = std::move(items);
    return node;
  }

  ConwayNode parse_product() {
    std::vector<ConwayNode> items;
    items.push_back(parse_atom());
    while (peek() == ' ') {
      std::size_t p = pos_;
      while (p < end_ && s_[p] == ' ')
        ++p;
      char next = p < end_ ? s_[p] : '\0';
      if (!(is_digit(next) || is_param_char(next) || next == '(' || next == '-'))
        break;
      pos_ = p;
      items.push_back(parse_atom());
    }
    if (items.size() == 1)
      return std::move(items.front());
    ConwayNode node;
    node.kind = NodeKind::Product;
    node.children = std::move(items);
    return node;
  }

  ConwayNode parse_atom() {
    ConwayNode node;
    if (peek() == '(') {
      if (auto offset = try_parenthesized_offset())
        return *offset;
      ++pos_;
      skip_spaces();
      node = parse_expr();
      skip_spaces();
      if (peek() != ')')
        fail_here();
      ++pos_;
    } else {
      int sign = 1;
      if (peek() == '-') {
        sign = -1;
        ++pos_;
      }
      if (is_digit(peek())) {
        node = ConwayNode::integer(sign * read_number());
      } else if (is_param_char(peek())) {
        node = ConwayNode::parameter(std::string(1, s_[pos_]), sign);
        ++pos_;
      } else {
        fail_here();
      }
    }
    char next = peek();
    if (!(at_end() || next == ' ' || next == ',' || next == '+' || next == ')' || is_separator(next)))
      fail_here();
    return node;
  }

  // "(p+1)" or "(p-2)": a parameter with an integer offset.
  std::optional<ConwayNode> try_parenthesized_offset() {
    std::size_t p = pos_ + 1;
    int sign = 1;
    if (p < end_ && s_[p] == '-') {
      sign = -1;
      ++p;
    }
    if (!(p < end_ && is_param_char(s_[p])))
      return std::nullopt;
    char name = s_[p++];
    if (!(p < end_ && (s_[p] == '+' || s_[p] == '-')))
      return std::nullopt;
    long dir = s_[p] == '-' ? -1 : 1;
    ++p;
    std::size_t digits = p;
    while (p < end_ && is_digit(s_[p]))
      ++p;
    if (digits == p || !(p < end_ && s_[p] == ')'))
      return std::nullopt;
    long k = std::strtol(std::string(s_.substr(digits, p - digits)).c_str(), nullptr, 10);
    pos_ = p + 1;
    return ConwayNode::parameter(std::string(1, name), sign, dir * k);
  }

  long read_number() {
    std::size_t start = pos_;
    while (is_digit(peek()))
      ++pos_;
    if (pos_ - start > 6)
      fail("integer too large");
    return std::strtol(std::string(s_.substr(start, pos_ - start)).c_str(), nullptr, 10);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t end_ = 0;
};

std::string render_integer(const IntegerValue &v) {
  if (v.is_literal())
    return std::to_string(v.offset);
  std::string out = (v.sign < 0 ? "-" : "") + v.param;
  if (v.offset == 0)
    return out;
  out += v.offset > 0 ? "+" : "-";
  out += std::to_string(std::labs(v.offset));
  return "(" + out + ")";
}

std::string render_node(const ConwayNode &n);

std::string render_wrapped(const ConwayNode &n, bool wrap) {
  std::string s = render_node(n);
  return wrap ? "(" + s + ")" : s;
}

std::string separator_for_gap(int gap) {
  std::string out;
  for (; gap >= 2; gap -= 2)
    out += ':';
  if (gap == 1)
    out += '.';
  return out;
}

std::string render_node(const ConwayNode &n) {
  switch (n.kind) {
  case NodeKind::Integer:
    return render_integer(n.value);
  case NodeKind::Product: {
    std::string out;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i)
        out += ' ';
      out += render_wrapped(n.children[i], n.children[i].kind != NodeKind::Integer);
    }
    return out;
  }
  case NodeKind::Ramification: {
    std::string out;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      if (i)
        out += ',';
      NodeKind k = n.children[i].kind;
      out += render_wrapped(n.children[i], k == NodeKind::Ramification || k == NodeKind::Plus);
    }
    return out;
  }
  case NodeKind::Plus: {
    const ConwayNode &addend = n.children[1];
    std::string out = render_node(n.children[0]) + "+";
    bool unit = addend.kind == NodeKind::Integer && addend.value.is_literal() && addend.value.offset == 1;
    if (!unit)
      out += render_wrapped(addend, addend.kind != NodeKind::Integer);
    return out;
  }
  case NodeKind::Polyhedron: {
    std::string out;
    bool first_at_one = !n.positions.empty() && n.positions.front() == 1;
    if (n.polyhedron != 6 || n.children.empty() || (first_at_one && n.children.size() == 1))
      out += std::to_string(n.polyhedron) + "*";
    int position = 1;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      out += separator_for_gap(n.positions[i] - position);
      position = n.positions[i];
      NodeKind k = n.children[i].kind;
      out += render_wrapped(n.children[i], k == NodeKind::Ramification || k == NodeKind::Plus);
    }
    return out;
  }
  }
  return {};
}

void collect_parameters(const ConwayNode &n, std::vector<std::string> &out) {
  if (n.kind == NodeKind::Integer) {
    if (!n.value.is_literal() && std::find(out.begin(), out.end(), n.value.param) == out.end())
      out.push_back(n.value.param);
    return;
  }
  for (const ConwayNode &c : n.children)
    collect_parameters(c, out);
}

} // namespace

ConwayAst parse_conway(std::string_view symbol) { return Parser(symbol).parse_symbol(); }

std::string render(const ConwayAst &ast) { return render_node(ast); }

std::vector<std::string> parameters(const ConwayAst &ast) {
  std::vector<std::string> out;
  collect_parameters(ast, out);
  return out;
}

bool is_concrete(const ConwayAst &ast) { return parameters(ast).empty(); }

bool is_algebraic(const ConwayAst &ast) {
  if (ast.kind == NodeKind::Polyhedron)
    return false;
  return std::all_of(ast.children.begin(), ast.children.end(), [](const ConwayNode &c) { return is_algebraic(c); });
}

ConwayAst bind(const ConwayAst &ast, const ParamBinding &params) {
  if (ast.kind == NodeKind::Integer) {
    if (ast.value.is_literal())
      return ast;
    auto it = params.find(ast.value.param);
    if (it == params.end())
      throw std::invalid_argument("conway: parameter '" + ast.value.param + "' is not bound");
    long n = ast.value.sign * it->second + ast.value.offset;
    if (std::labs(n) < 2)
      throw std::invalid_argument("conway: tangle " + render_integer(ast.value) + " = " + std::to_string(n) +
                                  " must have absolute value at least 2");
    return ConwayNode::integer(n);
  }
  ConwayAst out = ast;
  for (ConwayNode &c : out.children)
    c = linkpoly::bind(c, params);
  return out;
}

} // namespace linkpoly
