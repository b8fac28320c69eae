#include "linkpoly/families.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "linkpoly/tait.hpp"
#include "linkpoly/tutte.hpp"

namespace linkpoly {

extern const char *const kBuiltinCatalogText;

struct Formula::Node {
  enum class Kind { Number, X, Y, Param, Add, Sub, Mul, Div, Neg, Pow, Call, Ref, DualRef };
  Kind kind = Kind::Number;
  Integer number;
  std::string name;
  std::vector<std::shared_ptr<const Node>> args;
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;
using Kind = Formula::Node::Kind;

constexpr int kMaxDepth = 200;

NodePtr make(Kind kind, std::vector<NodePtr> args = {}, std::string name = {}) {
  auto n = std::make_shared<Formula::Node>();
  n->kind = kind;
  n->args = std::move(args);
  n->name = std::move(name);
  return n;
}

class FormulaParser {
public:
  explicit FormulaParser(std::string_view text) : s_(text) {}

  NodePtr parse() {
    NodePtr n = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return n;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c)
      return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c))
      fail(std::string("expected '") + c + "'");
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw CatalogError("formula: " + what + " at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make(Kind::Add, {lhs, term()});
      else if (accept('-'))
        lhs = make(Kind::Sub, {lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make(Kind::Mul, {lhs, unary()});
      else if (accept('/'))
        lhs = make(Kind::Div, {lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-'))
      return make(Kind::Neg, {unary()});
    NodePtr base = atom();
    if (accept('^'))
      return make(Kind::Pow, {base, unary()});
    return base;
  }

  std::string word() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::vector<NodePtr> call_args() {
    expect('(');
    std::vector<NodePtr> args;
    if (accept(')'))
      return args;
    do
      args.push_back(expr());
    while (accept(','));
    expect(')');
    return args;
  }

  NodePtr atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr n = expr();
      expect(')');
      return n;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      auto n = std::make_shared<Formula::Node>();
      n->kind = Kind::Number;
      n->number = Integer(std::string(s_.substr(start, pos_ - start)));
      return n;
    }
    std::size_t start = pos_;
    std::string w = word();
    if (w.empty())
      fail(c ? "unexpected '" + std::string(1, c) + "'" : std::string("unexpected end"));
    if (w == "x")
      return make(Kind::X);
    if (w == "y")
      return make(Kind::Y);
    if ((w == "T" || w == "D") && peek() == '[') {
      expect('[');
      std::size_t close = s_.find(']', pos_);
      if (close == std::string_view::npos)
        fail("unterminated reference");
      std::string id(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      return make(w == "T" ? Kind::Ref : Kind::DualRef, call_args(), id);
    }
    if (w.size() == 1)
      return make(Kind::Param, {}, w);
    if (w == "gx" || w == "gy" || w == "wheel") {
      auto args = call_args();
      if (args.size() != 1)
        fail(w + " takes one argument");
      return make(Kind::Call, std::move(args), w);
    }
    pos_ = start;
    fail("unknown name '" + w + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

long to_long(const LaurentPoly2 &p, const char *what) {
  if (p.is_zero())
    return 0;
  if (p.size() != 1 || p.terms().begin()->first != Exponent2{0, 0})
    throw CatalogError(std::string("formula: ") + what + " is not an integer constant: " + p.to_string());
  const Integer &c = p.terms().begin()->second;
  if (!c.fits_slong_p())
    throw CatalogError(std::string("formula: ") + what + " out of range");
  return c.get_si();
}

LaurentPoly2 power(const LaurentPoly2 &base, long k) {
  if (k >= 0)
    return base.pow(static_cast<unsigned>(k));
  if (base.size() == 1) {
    const auto &[e, c] = *base.terms().begin();
    if (c == 1 || c == -1) {
      Integer sign = (c == -1 && (-k) % 2 == 1) ? Integer(-1) : Integer(1);
      return LaurentPoly2::monomial(sign, static_cast<int>(e.x * k), static_cast<int>(e.y * k));
    }
  }
  throw CatalogError("formula: negative power of non-unit " + base.to_string());
}

void collect_refs(const NodePtr &n, std::vector<std::string> &out) {
  if (n->kind == Kind::Ref || n->kind == Kind::DualRef)
    if (std::find(out.begin(), out.end(), n->name) == out.end())
      out.push_back(n->name);
  for (const auto &a : n->args)
    collect_refs(a, out);
}

LaurentPoly2 evaluate_node(const NodePtr &n, const ParamBinding &params, const Catalog *catalog);

std::vector<long> integer_args(const NodePtr &n, const ParamBinding &params, const Catalog *catalog) {
  std::vector<long> args;
  for (const auto &a : n->args)
    args.push_back(to_long(evaluate_node(a, params, catalog), "reference argument"));
  return args;
}

thread_local int eval_depth = 0;

struct DepthGuard {
  DepthGuard() {
    if (++eval_depth > kMaxDepth) {
      --eval_depth;
      throw CatalogError("formula: reference depth exceeded");
    }
  }
  ~DepthGuard() { --eval_depth; }
  DepthGuard(const DepthGuard &) = delete;
  DepthGuard &operator=(const DepthGuard &) = delete;
};

LaurentPoly2 evaluate_node(const NodePtr &n, const ParamBinding &params, const Catalog *catalog) {
  auto arg = [&](std::size_t i) { return evaluate_node(n->args[i], params, catalog); };
  switch (n->kind) {
  case Kind::Number:
    return LaurentPoly2(n->number);
  case Kind::X:
    return LaurentPoly2::x();
  case Kind::Y:
    return LaurentPoly2::y();
  case Kind::Param: {
    auto it = params.find(n->name);
    if (it == params.end())
      throw CatalogError("formula: parameter '" + n->name + "' is not bound");
    return LaurentPoly2(it->second);
  }
  case Kind::Add:
    return arg(0) + arg(1);
  case Kind::Sub:
    return arg(0) - arg(1);
  case Kind::Mul:
    return arg(0) * arg(1);
  case Kind::Div:
    try {
      return divide_exact(arg(0), arg(1));
    } catch (const std::domain_error &e) {
      throw CatalogError(std::string("formula: ") + e.what());
    }
  case Kind::Neg:
    return -arg(0);
  case Kind::Pow:
    return power(arg(0), to_long(arg(1), "exponent"));
  case Kind::Call: {
    long k = to_long(arg(0), n->name.c_str());
    if (n->name == "gx")
      return geom_sum(Axis::X, static_cast<int>(k));
    if (n->name == "gy")
      return geom_sum(Axis::Y, static_cast<int>(k));
    if (k < 1 || k > 1000)
      throw CatalogError("formula: wheel(" + std::to_string(k) + ") out of range");
    return eval_wheel(static_cast<int>(k));
  }
  case Kind::Ref:
  case Kind::DualRef: {
    if (!catalog)
      throw CatalogError("formula: reference T[" + n->name + "] without a catalog");
    std::vector<long> args = integer_args(n, params, catalog);
    DepthGuard guard;
    LaurentPoly2 v = catalog->eval_positional(n->name, args);
    return n->kind == Kind::DualRef ? swap_xy(v) : v;
  }
  }
  return {};
}

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a])))
    ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1])))
    --b;
  return std::string(s.substr(a, b - a));
}

std::vector<std::string> split_words(const std::string &s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string w; in >> w;)
    out.push_back(w);
  return out;
}

std::string canonical_family_id(std::string_view id) {
  try {
    return render(parse_conway(id));
  } catch (const ConwayParseError &) {
    return std::string(id);
  }
}

} // namespace

Formula Formula::parse(std::string_view text) {
  Formula f;
  f.root_ = FormulaParser(text).parse();
  f.text_ = trim(text);
  return f;
}

LaurentPoly2 Formula::evaluate(const ParamBinding &params, const Catalog *catalog) const {
  if (!root_)
    throw CatalogError("formula: empty");
  return evaluate_node(root_, params, catalog);
}

std::vector<std::string> Formula::references() const {
  std::vector<std::string> out;
  if (root_)
    collect_refs(root_, out);
  return out;
}

Catalog Catalog::parse(std::string_view text) {
  Catalog cat;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  FamilyEntry current;
  bool open = false;
  std::string formula_text;
  bool have_params = false;
  std::string last_key;

  auto error = [&](const std::string &what) {
    throw CatalogError("catalog line " + std::to_string(line_no) + ": " + what);
  };

  auto finish = [&]() {
    if (formula_text.empty())
      error("entry '" + current.id + "' has no tutte formula");
    current.tutte = Formula::parse(formula_text);
    if (!current.auxiliary) {
      if (current.ordinal <= 0)
        error("family '" + current.id + "' has no ordinal");
    }
    if (!current.auxiliary && !have_params) {
      // The id is a Conway symbol; parameters and graph follow from it.
      ConwayAst ast = parse_conway(current.id);
      if (render(ast) != current.id)
        error("family id '" + current.id + "' is not in canonical form '" + render(ast) + "'");
      current.params = parameters(ast);
      if (current.graph.empty())
        current.graph = current.id;
    } else if (!have_params) {
      error("auxiliary entry '" + current.id + "' needs params");
    }
    if (cat.find(current.id))
      error("duplicate id '" + current.id + "'");
    cat.entries_.push_back(std::move(current));
    current = FamilyEntry{};
    formula_text.clear();
    have_params = false;
    open = false;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#')
      continue;
    if (std::isspace(static_cast<unsigned char>(line[0]))) {
      std::string cont = trim(line);
      if (cont.empty())
        continue;
      if (!open || last_key != "tutte")
        error("continuation line outside a tutte formula");
      formula_text += " " + cont;
      continue;
    }
    std::size_t sp = line.find(' ');
    std::string key = line.substr(0, sp);
    std::string value = sp == std::string::npos ? std::string() : trim(line.substr(sp + 1));
    last_key = key;
    if (key == "family" || key == "aux") {
      if (open)
        error("missing 'end' before '" + line + "'");
      open = true;
      current.auxiliary = key == "aux";
      current.id = value;
      if (value.empty())
        error("missing id");
      continue;
    }
    if (!open)
      error("'" + key + "' outside an entry");
    if (key == "end") {
      finish();
    } else if (key == "ordinal") {
      current.ordinal = std::stoi(value);
    } else if (key == "params") {
      current.params = split_words(value);
      have_params = true;
    } else if (key == "tutte") {
      formula_text = value;
    } else if (key == "graph") {
      current.graph = value;
    } else if (key == "dual") {
      current.dual = true;
    } else if (key == "note") {
      current.note += (current.note.empty() ? "" : " ") + value;
    } else {
      error("unknown key '" + key + "'");
    }
  }
  if (open)
    error("unterminated entry '" + current.id + "'");

  std::set<int> ordinals;
  for (const FamilyEntry &e : cat.entries_) {
    if (!e.auxiliary && !ordinals.insert(e.ordinal).second)
      throw CatalogError("catalog: duplicate ordinal " + std::to_string(e.ordinal));
    for (const std::string &ref : e.tutte.references()) {
      const FamilyEntry *target = cat.find(ref);
      if (!target)
        throw CatalogError("catalog: entry '" + e.id + "' references unknown '" + ref + "'");
    }
  }
  return cat;
}

const Catalog &Catalog::builtin() {
  static const Catalog catalog = Catalog::parse(kBuiltinCatalogText);
  return catalog;
}

const FamilyEntry *Catalog::find(std::string_view id) const {
  for (const FamilyEntry &e : entries_)
    if (e.id == id)
      return &e;
  std::string canon = canonical_family_id(id);
  if (canon != id)
    for (const FamilyEntry &e : entries_)
      if (e.id == canon)
        return &e;
  return nullptr;
}

bool Catalog::contains(std::string_view id) const { return find(id) != nullptr; }

const FamilyEntry &Catalog::entry(std::string_view id) const {
  if (const FamilyEntry *e = find(id))
    return *e;
  throw CatalogError("unknown family '" + std::string(id) + "'");
}

LaurentPoly2 Catalog::eval(std::string_view id, const ParamBinding &params) const {
  const FamilyEntry &e = entry(id);
  for (const std::string &p : e.params)
    if (!params.count(p))
      throw CatalogError("family '" + e.id + "' needs parameter '" + p + "'");
  for (const auto &[name, value] : params)
    if (std::find(e.params.begin(), e.params.end(), name) == e.params.end())
      throw CatalogError("family '" + e.id + "' has no parameter '" + name + "'");
  return e.tutte.evaluate(params, this);
}

LaurentPoly2 Catalog::eval_positional(std::string_view id, const std::vector<long> &args) const {
  const FamilyEntry &e = entry(id);
  if (args.size() != e.params.size())
    throw CatalogError("family '" + e.id + "' takes " + std::to_string(e.params.size()) + " parameters, got " +
                       std::to_string(args.size()));
  ParamBinding binding;
  for (std::size_t i = 0; i < args.size(); ++i)
    binding[e.params[i]] = args[i];
  return e.tutte.evaluate(binding, this);
}

std::vector<FamilyInfo> Catalog::list() const {
  std::vector<FamilyInfo> out;
  for (const FamilyEntry &e : entries_)
    if (!e.auxiliary)
      out.push_back({e.id, static_cast<int>(e.params.size()), e.ordinal});
  std::sort(out.begin(), out.end(), [](const FamilyInfo &a, const FamilyInfo &b) { return a.ordinal < b.ordinal; });
  return out;
}

LaurentPoly2 eval(std::string_view id, const ParamBinding &params) { return Catalog::builtin().eval(id, params); }

std::vector<FamilyInfo> list_families() { return Catalog::builtin().list(); }

LaurentPoly2 engine_tutte(const FamilyEntry &entry, const ParamBinding &params) {
  if (entry.graph.empty())
    throw CatalogError("entry '" + entry.id + "' has no graph");
  ParamBinding used;
  for (const std::string &p : parameters(parse_conway(entry.graph)))
    used[p] = params.at(p);
  LaurentPoly2 t = tutte(build_graph(linkpoly::bind(parse_conway(entry.graph), used)));
  return entry.dual ? swap_xy(t) : t;
}

LaurentPoly2 eval_wheel(int n) {
  if (n < 1)
    throw std::invalid_argument("eval_wheel: n must be at least 1");
  const LaurentPoly2 x = LaurentPoly2::x();
  const LaurentPoly2 y = LaurentPoly2::y();
  const LaurentPoly2 a = 1 + x + y;
  const LaurentPoly2 b = x * y;
  LaurentPoly2 prev = 2;
  LaurentPoly2 cur = a;
  for (int k = 2; k <= n; ++k) {
    LaurentPoly2 next = a * cur - b * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur + b - x - y - 1;
}

} // namespace linkpoly
