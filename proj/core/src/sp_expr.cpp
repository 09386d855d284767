#include "jorb/sp_expr.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "jorb/compose.hpp"

namespace jorb {

char element_letter(ElementKind k) {
  switch (k) {
    case ElementKind::Capacitor: return 'A';
    case ElementKind::Resistor: return 'B';
    case ElementKind::Inductor: return 'C';
  }
  return '?';
}

char element_label_char(ElementKind k) {
  switch (k) {
    case ElementKind::Capacitor: return 'C';
    case ElementKind::Resistor: return 'R';
    case ElementKind::Inductor: return 'L';
  }
  return '?';
}

SPExprPtr SPExpr::element(ElementKind kind, std::string label) {
  auto e = std::make_shared<SPExpr>();
  e->tag_ = Tag::Element;
  e->kind_ = kind;
  e->label_ = std::move(label);
  return e;
}

SPExprPtr SPExpr::literal(std::string text) {
  auto e = std::make_shared<SPExpr>();
  e->tag_ = Tag::Literal;
  e->label_ = std::move(text);
  return e;
}

SPExprPtr SPExpr::node(Tag op, std::vector<SPExprPtr> children) {
  if (op != Tag::Series && op != Tag::Parallel)
    throw std::invalid_argument("SPExpr::node: op must be series or parallel");
  if (children.size() < 2) throw std::invalid_argument("SPExpr::node: needs >= 2 children");
  auto e = std::make_shared<SPExpr>();
  e->tag_ = op;
  e->children_ = std::move(children);
  return e;
}

int SPExpr::leaf_count() const {
  if (is_leaf()) return 1;
  int n = 0;
  for (const auto& c : children_) n += c->leaf_count();
  return n;
}

namespace {

struct Tokenizer {
  std::string text;
  size_t pos = 0;

  std::optional<std::string> next() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) return std::nullopt;
    char c = text[pos];
    if (c == '(' || c == ')') {
      ++pos;
      return std::string(1, c);
    }
    size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    return text.substr(start, pos - start);
  }
};

SPExprPtr atom_from_token(const std::string& tok) {
  if ((tok[0] == 'C' || tok[0] == 'R' || tok[0] == 'L') && tok.size() > 1 &&
      std::all_of(tok.begin() + 1, tok.end(),
                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    ElementKind k = tok[0] == 'C'   ? ElementKind::Capacitor
                    : tok[0] == 'R' ? ElementKind::Resistor
                                    : ElementKind::Inductor;
    return SPExpr::element(k, tok);
  }
  if (tok.size() == 1) {
    if (tok[0] == 'A') return SPExpr::element(ElementKind::Capacitor);
    if (tok[0] == 'B') return SPExpr::element(ElementKind::Resistor);
    if (tok[0] == 'C') return SPExpr::element(ElementKind::Inductor);
  }
  // anything else must parse as a jorb literal over gamma3
  MWord::parse(Alphabet::gamma3(), tok);
  return SPExpr::literal(tok);
}

class Parser {
public:
  explicit Parser(const std::string& text) : tz_{text} { advance(); }

  SPExprPtr parse_top() {
    SPExprPtr first = parse_expr();
    if (!cur_) return first;
    // unparenthesized top-level chain
    std::vector<SPExprPtr> children{first};
    std::optional<char> op;
    while (cur_) {
      char o = expect_op();
      if (op && *op != o) throw ParseError("mixed ops at one level without parentheses");
      op = o;
      children.push_back(parse_expr());
    }
    return SPExpr::node(*op == 's' ? SPExpr::Tag::Series : SPExpr::Tag::Parallel,
                        std::move(children));
  }

private:
  Tokenizer tz_;
  std::optional<std::string> cur_;

  void advance() { cur_ = tz_.next(); }

  char expect_op() {
    if (!cur_ || (*cur_ != "s" && *cur_ != "p"))
      throw ParseError("expected 's' or 'p', got " + (cur_ ? *cur_ : std::string("<end>")));
    char o = (*cur_)[0];
    advance();
    return o;
  }

  SPExprPtr parse_expr() {
    if (!cur_) throw ParseError("unexpected end of expression");
    if (*cur_ == "(") {
      advance();
      std::vector<SPExprPtr> children{parse_expr()};
      std::optional<char> op;
      while (cur_ && *cur_ != ")") {
        char o = expect_op();
        if (op && *op != o) throw ParseError("mixed ops at one level without parentheses");
        op = o;
        children.push_back(parse_expr());
      }
      if (!cur_) throw ParseError("missing ')'");
      advance();
      if (!op) throw ParseError("parenthesized group needs an operator");
      return SPExpr::node(*op == 's' ? SPExpr::Tag::Series : SPExpr::Tag::Parallel,
                          std::move(children));
    }
    if (*cur_ == ")" || *cur_ == "s" || *cur_ == "p")
      throw ParseError("expected atom, got " + *cur_);
    SPExprPtr a = atom_from_token(*cur_);
    advance();
    return a;
  }
};

}  // namespace

SPExprPtr parse_sp(const std::string& text) { return Parser(text).parse_top(); }

std::string print_sp(const SPExprPtr& e, bool with_labels) {
  switch (e->tag()) {
    case SPExpr::Tag::Element:
      if (with_labels && !e->label().empty()) return e->label();
      return std::string(1, element_letter(e->kind()));
    case SPExpr::Tag::Literal:
      return e->literal_text();
    default: {
      char op = e->tag() == SPExpr::Tag::Series ? 's' : 'p';
      std::ostringstream os;
      os << "(";
      for (size_t i = 0; i < e->children().size(); ++i) {
        if (i) os << " " << op << " ";
        os << print_sp(e->children()[i], with_labels);
      }
      os << ")";
      return os.str();
    }
  }
}

SPExprPtr canonical_sp(const SPExprPtr& e) {
  if (e->tag() == SPExpr::Tag::Element) return SPExpr::element(e->kind());
  if (e->tag() == SPExpr::Tag::Literal) return e;
  std::vector<SPExprPtr> flat;
  for (const auto& c : e->children()) {
    SPExprPtr cc = canonical_sp(c);
    if (cc->tag() == e->tag()) {
      flat.insert(flat.end(), cc->children().begin(), cc->children().end());
    } else {
      flat.push_back(cc);
    }
  }
  std::stable_sort(flat.begin(), flat.end(), [](const SPExprPtr& a, const SPExprPtr& b) {
    return print_sp(a, false) < print_sp(b, false);
  });
  return SPExpr::node(e->tag(), std::move(flat));
}

namespace {

SPExprPtr relabel(const SPExprPtr& e, std::map<ElementKind, int>& counters) {
  if (e->tag() == SPExpr::Tag::Element) {
    int idx = ++counters[e->kind()];
    return SPExpr::element(e->kind(), std::string(1, element_label_char(e->kind())) +
                                          std::to_string(idx));
  }
  if (e->tag() == SPExpr::Tag::Literal) return e;
  std::vector<SPExprPtr> children;
  children.reserve(e->children().size());
  for (const auto& c : e->children()) children.push_back(relabel(c, counters));
  return SPExpr::node(e->tag(), std::move(children));
}

}  // namespace

SPExprPtr assign_labels(const SPExprPtr& e) {
  std::map<ElementKind, int> counters;
  return relabel(e, counters);
}

SPExprPtr dual_elements(const SPExprPtr& e) {
  if (e->tag() == SPExpr::Tag::Element) {
    ElementKind k = e->kind();
    if (k == ElementKind::Capacitor) k = ElementKind::Inductor;
    else if (k == ElementKind::Inductor) k = ElementKind::Capacitor;
    return SPExpr::element(k, e->label());
  }
  if (e->tag() == SPExpr::Tag::Literal) {
    throw std::invalid_argument("dual_elements: literal leaves are not element-typed");
  }
  std::vector<SPExprPtr> children;
  for (const auto& c : e->children()) children.push_back(dual_elements(c));
  return SPExpr::node(e->tag(), std::move(children));
}

MWord eval_jorb(const SPExprPtr& e, const AlphabetPtr& alphabet) {
  switch (e->tag()) {
    case SPExpr::Tag::Element: {
      int idx = 0;
      switch (e->kind()) {
        case ElementKind::Capacitor: idx = 0; break;
        case ElementKind::Resistor: idx = 1; break;
        case ElementKind::Inductor: idx = 2; break;
      }
      if (idx >= alphabet->size())
        throw std::invalid_argument("eval_jorb: alphabet too small for element atoms");
      return MWord(alphabet, {static_cast<uint8_t>(idx), static_cast<uint8_t>(idx)});
    }
    case SPExpr::Tag::Literal:
      return zip_reduce(MWord::parse(alphabet, e->literal_text()));
    default: {
      MWord acc = eval_jorb(e->children().front(), alphabet);
      for (size_t i = 1; i < e->children().size(); ++i) {
        MWord rhs = eval_jorb(e->children()[i], alphabet);
        acc = e->tag() == SPExpr::Tag::Series ? series_reduced(acc, rhs)
                                              : parallel_reduced(acc, rhs);
      }
      return acc;
    }
  }
}

MWord eval_jorb(const SPExprPtr& e) { return eval_jorb(e, Alphabet::gamma3()); }

}  // namespace jorb
