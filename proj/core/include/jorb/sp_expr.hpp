#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jorb/word.hpp"

namespace jorb {

enum class ElementKind { Capacitor, Resistor, Inductor };

char element_letter(ElementKind k);       // A / B / C
char element_label_char(ElementKind k);   // C / R / L

/// Series-parallel expression tree. Leaves are typed elements (optionally
/// labelled, e.g. "R2") or 2n-letter jorb literals like `ca`. Nodes carry at
/// least two children.
class SPExpr;
using SPExprPtr = std::shared_ptr<const SPExpr>;

class SPExpr {
public:
  enum class Tag { Element, Literal, Series, Parallel };

  static SPExprPtr element(ElementKind kind, std::string label = {});
  static SPExprPtr literal(std::string text);
  static SPExprPtr node(Tag op, std::vector<SPExprPtr> children);

  Tag tag() const { return tag_; }
  bool is_leaf() const { return tag_ == Tag::Element || tag_ == Tag::Literal; }
  ElementKind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::string& literal_text() const { return label_; }
  const std::vector<SPExprPtr>& children() const { return children_; }

  int leaf_count() const;

  SPExpr() = default;

private:
  Tag tag_ = Tag::Element;
  ElementKind kind_ = ElementKind::Capacitor;
  std::string label_;  // element label or literal text
  std::vector<SPExprPtr> children_;
};

/// Grammar: expr := chain | atom ; chain := '(' expr (op expr)+ ')' with one
/// op per level; a top-level chain may omit the parentheses. atom := element
/// label (C/R/L + index), bare letter A/B/C, or a jorb literal.
SPExprPtr parse_sp(const std::string& text);

/// Canonical print: nodes fully parenthesized, children space-separated by
/// the op letter.
std::string print_sp(const SPExprPtr& e, bool with_labels = true);

/// Flatten nested same-op nodes, sort children by unlabelled print, strip
/// labels. Structural identity modulo commutativity, associativity and
/// same-kind relabelling.
SPExprPtr canonical_sp(const SPExprPtr& e);

/// Relabel element leaves depth-first per kind: C1, C2, ..., R1, ...
SPExprPtr assign_labels(const SPExprPtr& e);

/// Swap capacitor and inductor leaves.
SPExprPtr dual_elements(const SPExprPtr& e);

/// Fold to a reduced jorb: leaves map to atoms (C->aa, R->bb, L->cc),
/// literals parse as written, nodes fold left with reduced series/parallel.
MWord eval_jorb(const SPExprPtr& e, const AlphabetPtr& alphabet);
MWord eval_jorb(const SPExprPtr& e);  // gamma3

}  // namespace jorb
