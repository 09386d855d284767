#pragma once

#include <vector>

#include "jorb/word.hpp"

namespace jorb {

/// Series connection, raw 8-term concatenation:
///   (lx^ly)(lx^ly) x (rx v ly)(rx ^ ly) y (rx v ry)(rx v ry)
/// with ^ = meet and v = join.
MWord series(const MWord& x, const MWord& y);

/// Parallel connection, raw 8-term concatenation (joins and meets swapped).
MWord parallel(const MWord& x, const MWord& y);

MWord series_reduced(const MWord& x, const MWord& y);
MWord parallel_reduced(const MWord& x, const MWord& y);

/// omega.alpha — series identity ("ca" over gamma3).
MWord s_zero(const AlphabetPtr& alphabet);
/// alpha.omega — parallel identity ("ac" over gamma3).
MWord p_zero(const AlphabetPtr& alphabet);

/// J_s(x) = omega.alpha x omega.alpha, J_p(x) = alpha.omega x alpha.omega.
MWord s_core(const MWord& x);
MWord p_core(const MWord& x);
MWord s_core_reduced(const MWord& x);
MWord p_core_reduced(const MWord& x);

/// q_s(x) = l (l^r) (lvr) r, q_p(x) = l (lvr) (l^r) r. Depend only on the
/// shell.
MWord s_shell(const MWord& x);
MWord p_shell(const MWord& x);

/// The s-/p-bases: zip-reduced s-/p-shells of all n^2 shells, row-major by
/// (first letter, second letter).
std::vector<MWord> omega_s(const AlphabetPtr& alphabet);
std::vector<MWord> omega_p(const AlphabetPtr& alphabet);

}  // namespace jorb
