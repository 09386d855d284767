#pragma once

#include <string>

#include "jorb/word.hpp"

namespace jorb {

/// x <=_q y  iff  l_x >= l_y and r_x <= r_y (in the alphabet order).
bool leq_q(const MWord& x, const MWord& y);
/// x >=_q y  iff  l_x <= l_y and r_x >= r_y.
bool geq_q(const MWord& x, const MWord& y);
/// Shell equality.
bool eq_q(const MWord& x, const MWord& y);

/// The class [st] = { x : q(x) = st }, keyed by its shell.
struct ShellClass {
  Symbol s;
  Symbol t;
  std::string label() const;  // "[st]"
};

ShellClass class_of(const MWord& x);

bool lideal_contains(const Symbol& s, const MWord& x);
bool rideal_contains(const Symbol& s, const MWord& x);

enum class HasseKind { Classes, OmegaS, OmegaP };

/// DOT text for the n x n diamond grid. Nodes carry pinned positions
/// (x = i+j, y = j-i); edges within right ideals are solid, within left
/// ideals dashed.
std::string hasse_dot(HasseKind kind, const AlphabetPtr& alphabet);

}  // namespace jorb
