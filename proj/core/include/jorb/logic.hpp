#pragma once

#include <string>
#include <vector>

#include "jorb/word.hpp"

namespace jorb {

/// Logical values are shells; longer operands are shelled implicitly.
/// Closed forms:
///   not x        = l'_x r'_x
///   x and y      = (l_x ^ l_y)(r_x v r_y)      -- shell of x series y
///   x or y       = (l_x v l_y)(r_x ^ r_y)      -- shell of x parallel y
///   x ->p y      = (l'_x v l_y)(r'_x ^ r_y)
///   x ->s y      = (l'_x ^ l_y)(r'_x v r_y)
///   x <->p y     = ((l'_x v l_y) ^ (l_x v l'_y)) ((r'_x ^ r_y) v (r_x ^ r'_y))
///   x <->s y     = ((l'_x ^ l_y) v (l_x ^ l'_y)) ((r'_x v r_y) ^ (r_x v r'_y))
MWord lnot(const MWord& x);
MWord land_(const MWord& x, const MWord& y);
MWord lor_(const MWord& x, const MWord& y);
MWord impl_p(const MWord& x, const MWord& y);
MWord impl_s(const MWord& x, const MWord& y);
MWord equiv_p(const MWord& x, const MWord& y);
MWord equiv_s(const MWord& x, const MWord& y);

enum class LogicOp { Not, And, Or, ImplP, ImplS, EqvP, EqvS };

LogicOp logic_op_from_name(const std::string& name);
MWord apply_logic(LogicOp op, const MWord& x, const MWord& y);

/// Reading of a shell as paired truth symbols: first letter maps low->false
/// through high->true, second letter dually. For gamma3 this is the
/// nine-valued reading with values "⊥", "∣", "⊤" per endpoint.
std::string truth_label(const MWord& shell_word);

struct TruthTable {
  std::vector<MWord> values;              // all n^2 shells, row-major
  std::vector<std::vector<MWord>> cells;  // cells[i][j] = op(values[i], values[j])
  std::string csv(bool labels) const;
};

TruthTable truth_table(LogicOp op, const AlphabetPtr& alphabet);

}  // namespace jorb
