#include "doctest.h"

#include "linkpoly/conway.hpp"

using namespace linkpoly;

namespace {

ConwayNode I(long n) { return ConwayNode::integer(n); }
ConwayNode P(const char *name) { return ConwayNode::parameter(name); }

ConwayNode node(NodeKind kind, std::vector<ConwayNode> children) {
  ConwayNode n;
  n.kind = kind;
  n.children = std::move(children);
  return n;
}

} // namespace

TEST_CASE("parse examples") {
  CHECK(parse_conway("2 3 2") == node(NodeKind::Product, {I(2), I(3), I(2)}));
  CHECK(parse_conway("p,q,r+") ==
        node(NodeKind::Plus, {node(NodeKind::Ramification, {P("p"), P("q"), P("r")}), I(1)}));

  ConwayAst poly = parse_conway(".p:q 0");
  CHECK(poly.kind == NodeKind::Polyhedron);
  CHECK(poly.polyhedron == 6);
  CHECK(poly.positions == std::vector<int>{2, 4});
  CHECK(poly.children[0] == P("p"));
  CHECK(poly.children[1] == node(NodeKind::Product, {P("q"), I(0)}));
}

TEST_CASE("ramification binds looser than product") {
  ConwayAst a = parse_conway("p 1,q 1,r");
  REQUIRE(a.kind == NodeKind::Ramification);
  CHECK(a.children[0] == node(NodeKind::Product, {P("p"), I(1)}));
  CHECK(a.children[2] == P("r"));
}

TEST_CASE("plus forms") {
  ConwayAst a = parse_conway("p,q,r+s");
  REQUIRE(a.kind == NodeKind::Plus);
  CHECK(a.children[1] == P("s"));
  ConwayAst b = parse_conway("(p,q+r) (s,t)");
  REQUIRE(b.kind == NodeKind::Product);
  CHECK(b.children[0].kind == NodeKind::Plus);
  CHECK(parse_conway("(p+1) 1 1 1 2").children[0] == ConwayNode::parameter("p", 1, 1));
}

TEST_CASE("polyhedron prefixes and separators") {
  CHECK(parse_conway("8*p 0::q 0").positions == std::vector<int>{1, 5});
  CHECK(parse_conway("8*p:.q").positions == std::vector<int>{1, 4});
  CHECK(parse_conway("9*.p").positions == std::vector<int>{2});
  CHECK(parse_conway("9*p").positions == std::vector<int>{1});
  CHECK(parse_conway("p:q:r").positions == std::vector<int>{1, 3, 5});
  CHECK(parse_conway(".p.q.r.s").positions == std::vector<int>{2, 3, 4, 5});
  CHECK(parse_conway("6*").children.empty());
  ConwayAst nested = parse_conway(".(p,q).r 0");
  CHECK(nested.children[0].kind == NodeKind::Ramification);
}

TEST_CASE("parse errors name the token and position") {
  CHECK_THROWS_AS(parse_conway("p1q"), ConwayParseError);
  try {
    parse_conway("p1q");
  } catch (const ConwayParseError &e) {
    CHECK(e.token() == "1");
    CHECK(e.position() == 1);
  }
  CHECK_THROWS_AS(parse_conway("10*p"), ConwayParseError);
  CHECK_THROWS_AS(parse_conway(""), ConwayParseError);
  CHECK_THROWS_AS(parse_conway("p,,q"), ConwayParseError);
  CHECK_THROWS_AS(parse_conway("(p,q"), ConwayParseError);
  CHECK_THROWS_AS(parse_conway("x"), ConwayParseError);
  CHECK_THROWS_AS(parse_conway("p::::q"), ConwayParseError);
}

TEST_CASE("render canonicalizes and round-trips") {
  for (const char *s : {"p", "p q 1 r", "p,q,r+", "p,q,r+s", "(p,q) (r,s)", "(p,q+r) (s,t)", "(p,q),r,(s,t)",
                        ".p", ".p:q 0", "p.q.r 0.s 0", "8*p 0::q 0", "8*p:.q", "9*.p 0", ".(p,q+)", "6*",
                        "p 1,q 1,r 1+", "(p+1) 1 1 1 2", "-2 3", "p,q,-r"}) {
    ConwayAst a = parse_conway(s);
    CHECK_MESSAGE(render(a) == s, s);
    CHECK(parse_conway(render(a)) == a);
  }
  CHECK(render(parse_conway("p ,q , r +1")) == "p,q,r+");
  CHECK(render(parse_conway("6*p")) == "6*p");
}

TEST_CASE("parameters and bind") {
  ConwayAst a = parse_conway("p q 1 r");
  CHECK(parameters(a) == std::vector<std::string>{"p", "q", "r"});
  CHECK(render(linkpoly::bind(parse_conway("p q"), {{"p", 2}, {"q", 3}})) == "2 3");
  CHECK(render(linkpoly::bind(parse_conway("p,q,r"), {{"p", 2}, {"q", 2}, {"r", 2}})) == "2,2,2");
  CHECK_THROWS_AS(linkpoly::bind(parse_conway("p"), {{"p", 1}}), std::invalid_argument);
  CHECK_THROWS_AS(linkpoly::bind(parse_conway("p q"), {{"p", 2}}), std::invalid_argument);
  CHECK(render(linkpoly::bind(parse_conway("p,q,-r"), {{"p", 2}, {"q", 2}, {"r", 3}})) == "2,2,-3");
  CHECK(is_concrete(linkpoly::bind(a, {{"p", 2}, {"q", 2}, {"r", 2}})));
  CHECK(is_algebraic(a));
  CHECK_FALSE(is_algebraic(parse_conway(".p")));
}
