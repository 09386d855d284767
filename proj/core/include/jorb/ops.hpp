#pragma once

#include "jorb/word.hpp"

namespace jorb {

/// Letterwise dual. Involution; with E generates the Klein four-group.
MWord op_D(const MWord& x);

/// Full reversal.
MWord op_E(const MWord& x);

/// F = D . E = E . D.
MWord op_F(const MWord& x);

/// Negation: K(x) = l'_x x r'_x. Adds two letters.
MWord op_K(const MWord& x);

/// Padding: I(x) = l_x x r_x. Adds two letters.
MWord op_I(const MWord& x);

}  // namespace jorb
