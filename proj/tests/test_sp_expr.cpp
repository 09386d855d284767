#include "doctest.h"
#include "jorb/ops.hpp"
#include "jorb/sp_expr.hpp"

#include <random>

using namespace jorb;

TEST_CASE("parsing the printed scheme notation") {
  auto e48 = parse_sp("(C1 p (R2 s (R1 p L1)))");
  CHECK(print_sp(e48) == "(C1 p (R2 s (R1 p L1)))");
  auto r9 = parse_sp("(((A s B) p A) s (A p B))");
  CHECK(print_sp(r9, false) == "(((A s B) p A) s (A p B))");
  CHECK(parse_sp("A s BA s BA s B") != nullptr);  // flat ladder chain
  CHECK_THROWS_AS(parse_sp("(A s)"), ParseError);
  CHECK_THROWS_AS(parse_sp("(A s B p C)"), ParseError);
  CHECK_THROWS_AS(parse_sp("(A s Q7)"), ParseError);
  CHECK_THROWS_AS(parse_sp("(A s abc)"), ParseError);  // odd literal
}

TEST_CASE("evaluation reproduces the worked circuit jorbs") {
  CHECK(eval_jorb(parse_sp("(A p (B s (C p A) s B))")).render_compact() == "BCABA");
  CHECK(eval_jorb(parse_sp("((A s B) p (B s (C p A)))")).render_compact() == "BACAB");
  CHECK(eval_jorb(parse_sp("((A s B) p (B s (C p A p ca)))")).render_lower() == "cbaa");
  CHECK(eval_jorb(parse_sp("((A s B) p (B s (C p A p ca)))")).render_compact() == "cbA");
  CHECK(eval_jorb(parse_sp("((((C1 s R1) p R2) s C2) p R3)")).render_compact() == "BABAB");
  CHECK(eval_jorb(parse_sp("(R2 p (R1 s L1) p C1)")).render_compact() == "BCBA");
  CHECK(eval_jorb(parse_sp("(C1 p (R2 s (R1 p L1)))")).render_compact() == "BCBA");
}

TEST_CASE("canonical form flattens, sorts and strips labels") {
  auto a = canonical_sp(parse_sp("(R2 p (R1 s L1) p C1)"));
  auto b = canonical_sp(parse_sp("(C1 p (R2 p (R1 s L1)))"));
  CHECK(print_sp(a, false) == print_sp(b, false));
  CHECK(print_sp(a, false) == "((B s C) p A p B)");

  // relabel depth-first
  auto labelled = assign_labels(canonical_sp(parse_sp("((((C9 s R7) p R3) s C2) p R1)")));
  CHECK(print_sp(labelled) == "((((C1 s R1) p R2) s C2) p R3)");
}

TEST_CASE("eval is invariant under canonicalization") {
  std::mt19937 rng(13);
  auto rand_expr = [&](auto&& self, int depth) -> SPExprPtr {
    if (depth == 0 || rng() % 3 == 0) {
      static const ElementKind kinds[] = {ElementKind::Capacitor, ElementKind::Resistor,
                                          ElementKind::Inductor};
      return SPExpr::element(kinds[rng() % 3]);
    }
    std::vector<SPExprPtr> children;
    size_t n = 2 + rng() % 2;
    for (size_t i = 0; i < n; ++i) children.push_back(self(self, depth - 1));
    return SPExpr::node(rng() % 2 ? SPExpr::Tag::Series : SPExpr::Tag::Parallel,
                        std::move(children));
  };
  for (int i = 0; i < 200; ++i) {
    SPExprPtr e = rand_expr(rand_expr, 3);
    CHECK(eval_jorb(e) == eval_jorb(canonical_sp(e)));
  }
}

TEST_CASE("element duality maps the evaluated jorb through D") {
  std::mt19937 rng(17);
  auto rand_expr = [&](auto&& self, int depth) -> SPExprPtr {
    if (depth == 0 || rng() % 3 == 0) {
      static const ElementKind kinds[] = {ElementKind::Capacitor, ElementKind::Resistor,
                                          ElementKind::Inductor};
      return SPExpr::element(kinds[rng() % 3]);
    }
    std::vector<SPExprPtr> children;
    size_t n = 2;
    for (size_t i = 0; i < n; ++i) children.push_back(self(self, depth - 1));
    return SPExpr::node(rng() % 2 ? SPExpr::Tag::Series : SPExpr::Tag::Parallel,
                        std::move(children));
  };
  for (int i = 0; i < 200; ++i) {
    SPExprPtr e = rand_expr(rand_expr, 3);
    CHECK(eval_jorb(dual_elements(e)) == zip_reduce(op_D(eval_jorb(e))));
  }
}

TEST_CASE("evaluated networks have nonnegative structural lengths") {
  std::mt19937 rng(19);
  auto rand_expr = [&](auto&& self, int depth) -> SPExprPtr {
    if (depth == 0 || rng() % 3 == 0) {
      static const ElementKind kinds[] = {ElementKind::Capacitor, ElementKind::Resistor,
                                          ElementKind::Inductor};
      return SPExpr::element(kinds[rng() % 3]);
    }
    std::vector<SPExprPtr> children{self(self, depth - 1), self(self, depth - 1)};
    return SPExpr::node(rng() % 2 ? SPExpr::Tag::Series : SPExpr::Tag::Parallel,
                        std::move(children));
  };
  for (int i = 0; i < 300; ++i) {
    Quadruple q = phi(eval_jorb(rand_expr(rand_expr, 3)));
    CHECK(q.ls >= 0);
    CHECK(q.lp >= 0);
    CHECK(q.vl >= -1);
    CHECK(q.vl <= 1);
  }
}
