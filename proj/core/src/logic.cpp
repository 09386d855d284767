#include "jorb/logic.hpp"

#include <sstream>

namespace jorb {

namespace {

MWord make_shell(const MWord& x, int l, int r) {
  return MWord(x.alphabet(), {static_cast<uint8_t>(l), static_cast<uint8_t>(r)});
}

}  // namespace

MWord lnot(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  return make_shell(x, a.dual_index(x.l_index()), a.dual_index(x.r_index()));
}

MWord land_(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "land");
  const Alphabet& a = *x.alphabet();
  return make_shell(x, a.meet_index(x.l_index(), y.l_index()),
                    a.join_index(x.r_index(), y.r_index()));
}

MWord lor_(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "lor");
  const Alphabet& a = *x.alphabet();
  return make_shell(x, a.join_index(x.l_index(), y.l_index()),
                    a.meet_index(x.r_index(), y.r_index()));
}

MWord impl_p(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "impl_p");
  const Alphabet& a = *x.alphabet();
  return make_shell(x, a.join_index(a.dual_index(x.l_index()), y.l_index()),
                    a.meet_index(a.dual_index(x.r_index()), y.r_index()));
}

MWord impl_s(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "impl_s");
  const Alphabet& a = *x.alphabet();
  return make_shell(x, a.meet_index(a.dual_index(x.l_index()), y.l_index()),
                    a.join_index(a.dual_index(x.r_index()), y.r_index()));
}

MWord equiv_p(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "equiv_p");
  const Alphabet& a = *x.alphabet();
  int lx = x.l_index(), rx = x.r_index(), ly = y.l_index(), ry = y.r_index();
  int l = a.meet_index(a.join_index(a.dual_index(lx), ly),
                       a.join_index(lx, a.dual_index(ly)));
  int r = a.join_index(a.meet_index(a.dual_index(rx), ry),
                       a.meet_index(rx, a.dual_index(ry)));
  return make_shell(x, l, r);
}

MWord equiv_s(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "equiv_s");
  const Alphabet& a = *x.alphabet();
  int lx = x.l_index(), rx = x.r_index(), ly = y.l_index(), ry = y.r_index();
  int l = a.join_index(a.meet_index(a.dual_index(lx), ly),
                       a.meet_index(lx, a.dual_index(ly)));
  int r = a.meet_index(a.join_index(a.dual_index(rx), ry),
                       a.join_index(rx, a.dual_index(ry)));
  return make_shell(x, l, r);
}

LogicOp logic_op_from_name(const std::string& name) {
  if (name == "not") return LogicOp::Not;
  if (name == "and") return LogicOp::And;
  if (name == "or") return LogicOp::Or;
  if (name == "implp") return LogicOp::ImplP;
  if (name == "impls") return LogicOp::ImplS;
  if (name == "eqvp") return LogicOp::EqvP;
  if (name == "eqvs") return LogicOp::EqvS;
  throw std::invalid_argument("unknown logic op: " + name);
}

MWord apply_logic(LogicOp op, const MWord& x, const MWord& y) {
  switch (op) {
    case LogicOp::Not: return lnot(x);
    case LogicOp::And: return land_(x, y);
    case LogicOp::Or: return lor_(x, y);
    case LogicOp::ImplP: return impl_p(x, y);
    case LogicOp::ImplS: return impl_s(x, y);
    case LogicOp::EqvP: return equiv_p(x, y);
    case LogicOp::EqvS: return equiv_s(x, y);
  }
  throw std::logic_error("unreachable");
}

std::string truth_label(const MWord& w) {
  const Alphabet& a = *w.alphabet();
  const int n = a.size();
  auto first = [&](int i) -> std::string {
    if (i == 0) return "⊥";           // bottom
    if (i == n - 1) return "⊤";       // top
    return "∣";
  };
  auto second = [&](int i) -> std::string {
    if (i == 0) return "⊤";
    if (i == n - 1) return "⊥";
    return "∣";
  };
  return "[" + first(w.l_index()) + "," + second(w.r_index()) + "]";
}

TruthTable truth_table(LogicOp op, const AlphabetPtr& alphabet) {
  TruthTable t;
  const int n = alphabet->size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      t.values.emplace_back(alphabet,
                            std::vector<uint8_t>{static_cast<uint8_t>(i), static_cast<uint8_t>(j)});
  t.cells.resize(t.values.size());
  for (size_t i = 0; i < t.values.size(); ++i)
    for (size_t j = 0; j < t.values.size(); ++j)
      t.cells[i].push_back(apply_logic(op, t.values[i], t.values[j]));
  return t;
}

std::string TruthTable::csv(bool labels) const {
  std::ostringstream os;
  auto cell = [&](const MWord& w) {
    return labels ? truth_label(w) : w.render_lower();
  };
  os << "x\\y";
  for (const auto& v : values) os << "," << cell(v);
  os << "\n";
  for (size_t i = 0; i < values.size(); ++i) {
    os << cell(values[i]);
    for (size_t j = 0; j < values.size(); ++j) os << "," << cell(cells[i][j]);
    os << "\n";
  }
  return os.str();
}

}  // namespace jorb
