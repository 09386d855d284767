#include "jorb/order.hpp"

#include <sstream>

#include "jorb/compose.hpp"

namespace jorb {

bool leq_q(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "leq_q");
  const Alphabet& a = *x.alphabet();
  return a.valuation(x.l_index()) >= a.valuation(y.l_index()) &&
         a.valuation(x.r_index()) <= a.valuation(y.r_index());
}

bool geq_q(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "geq_q");
  const Alphabet& a = *x.alphabet();
  return a.valuation(x.l_index()) <= a.valuation(y.l_index()) &&
         a.valuation(x.r_index()) >= a.valuation(y.r_index());
}

bool eq_q(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "eq_q");
  return x.l_index() == y.l_index() && x.r_index() == y.r_index();
}

std::string ShellClass::label() const {
  return std::string("[") + s.name() + t.name() + "]";
}

ShellClass class_of(const MWord& x) { return {x.l(), x.r()}; }

bool lideal_contains(const Symbol& s, const MWord& x) {
  require_same_alphabet(s.alphabet, x.alphabet(), "lideal");
  return x.l_index() == s.index;
}

bool rideal_contains(const Symbol& s, const MWord& x) {
  require_same_alphabet(s.alphabet, x.alphabet(), "rideal");
  return x.r_index() == s.index;
}

std::string hasse_dot(HasseKind kind, const AlphabetPtr& alphabet) {
  const int n = alphabet->size();
  auto node_label = [&](int i, int j) -> std::string {
    switch (kind) {
      case HasseKind::Classes:
        return std::string("[") + alphabet->name(i) + alphabet->name(j) + "]";
      case HasseKind::OmegaS: {
        MWord atom(alphabet, {static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
        return zip_reduce(s_shell(atom)).render_compact();
      }
      case HasseKind::OmegaP: {
        MWord atom(alphabet, {static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
        return zip_reduce(p_shell(atom)).render_compact();
      }
    }
    return {};
  };
  auto node_id = [&](int i, int j) {
    std::ostringstream os;
    os << "n" << i << "_" << j;
    return os.str();
  };

  std::ostringstream os;
  os << "graph hasse {\n";
  os << "  layout=neato;\n  node [shape=plaintext];\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      os << "  " << node_id(i, j) << " [label=\"" << node_label(i, j) << "\", pos=\""
         << (i + j) << "," << (j - i) << "!\"];\n";
  // solid: right ideals (fixed second letter), dashed: left ideals
  for (int j = 0; j < n; ++j)
    for (int i = 0; i + 1 < n; ++i)
      os << "  " << node_id(i, j) << " -- " << node_id(i + 1, j) << ";\n";
  for (int i = 0; i < n; ++i)
    for (int j = 0; j + 1 < n; ++j)
      os << "  " << node_id(i, j) << " -- " << node_id(i, j + 1) << " [style=dashed];\n";
  os << "}\n";
  return os.str();
}

}  // namespace jorb
