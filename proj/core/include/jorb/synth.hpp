#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jorb/sp_expr.hpp"
#include "jorb/word.hpp"

namespace jorb {

struct ElementBag {
  int capacitors = 0;
  int resistors = 0;
  int inductors = 0;
  int total() const { return capacitors + resistors + inductors; }
};

/// T_SP = N!/(i! j! k!) * C_{N-1} * 2^{N-1}: binary tree shapes times leaf
/// multiset arrangements times op labelings.
long long count_sp(const ElementBag& bag);

struct EnumerateOptions {
  bool dedup = true;
  int max_total = 7;
  int jobs = 1;
  /// Shell-based pruning against a target; exhaustive for the results that
  /// match the target (checked by tests against the unpruned run).
  std::optional<MWord> prune_target;
};

/// All SP expressions over the bag. Raw mode yields exactly count_sp(bag)
/// trees; dedup mode canonicalizes modulo commutativity, associativity and
/// same-kind relabelling. Deterministic order (sorted canonical prints).
std::vector<SPExprPtr> enumerate_sp(const ElementBag& bag, const EnumerateOptions& opts = {});

enum class MatchMode { Reduced, Phi };

/// Dedup enumeration filtered by eval_jorb equality with the target.
std::vector<SPExprPtr> synthesize(const MWord& target, const ElementBag& bag,
                                  MatchMode match, int jobs = 1);
std::vector<SPExprPtr> synthesize(const Quadruple& target, const ElementBag& bag, int jobs = 1);

enum class LadderForm { Cauer1, Cauer2, Foster1, Foster2 };
LadderForm ladder_form_from_name(const std::string& name);

enum class LadderVerdict { Exact, EImage, PhiEquivalent, Mismatch };
std::string to_string(LadderVerdict v);

struct LadderResult {
  SPExprPtr expr;
  std::string letters_text;  // e.g. "B s (A p (B s A))"
  std::string labels_text;   // e.g. "R1 s(C1* p(R2 s(L1* p(R3))))"
  MWord evaluated;
  LadderVerdict verdict;
};

/// Ladder emission for an alternating jorb in compact form. Cauer I walks
/// the word from the high-frequency end (last atom first), Cauer II from the
/// low-frequency end; both nest as X s (Y p (...)). Foster I/II require an
/// even-length two-letter alternating word and emit the flat section chains.
/// The emission is verified by eval_jorb and the verdict is part of the
/// result.
LadderResult ladder(const MWord& jorb, LadderForm form);

}  // namespace jorb
