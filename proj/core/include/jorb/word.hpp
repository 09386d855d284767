#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jorb/alphabet.hpp"

namespace jorb {

/// Even-length word over one alphabet. Immutable after construction.
class MWord {
public:
  MWord(AlphabetPtr alphabet, std::vector<uint8_t> letters);

  /// Text grammar: lowercase symbol chars stand for themselves, an uppercase
  /// char stands for its doubled lowercase symbol. The expansion must have
  /// even length.
  static MWord parse(const AlphabetPtr& alphabet, std::string_view text);

  const AlphabetPtr& alphabet() const { return alpha_; }
  int size() const { return static_cast<int>(letters_.size()); }
  uint8_t letter(int i) const { return letters_[static_cast<size_t>(i)]; }
  const std::vector<uint8_t>& letters() const { return letters_; }

  int l_index() const { return letters_.front(); }
  int r_index() const { return letters_.back(); }
  Symbol l() const { return {alpha_, l_index()}; }
  Symbol r() const { return {alpha_, r_index()}; }

  std::string render_lower() const;
  /// Greedily pairs identical adjacent letters into one uppercase char.
  std::string render_compact() const;

  bool operator==(const MWord& o) const {
    return alpha_ == o.alpha_ && letters_ == o.letters_;
  }
  bool operator!=(const MWord& o) const { return !(*this == o); }
  bool operator<(const MWord& o) const { return letters_ < o.letters_; }

private:
  AlphabetPtr alpha_;
  std::vector<uint8_t> letters_;
};

/// (v(l_x), lambda_s, lambda_p, v(r_x)). lambda_s - lambda_p = vl - vr.
struct Quadruple {
  int vl = 0;
  int ls = 0;
  int lp = 0;
  int vr = 0;

  bool operator==(const Quadruple&) const = default;
  std::string str() const;        // "(vl, ls, lp, vr)"
  std::string json() const;       // "[vl, ls, lp, vr]"
  std::string triplet_str() const;  // "(vl, ls, vr)"
};

MWord concat(const MWord& x, const MWord& y);

/// Alternated sum of adjacent-letter distances, first term negative.
long lambda(const MWord& x);

/// v(r_x) - v(l_x).
int defect(const MWord& x);

/// q(x) = l_x r_x.
MWord shell(const MWord& x);

/// Deterministic compression to an irreducible word. Rules, applied
/// leftmost-first with R1 preferred and a restart after every rewrite:
///   R1: p r p -> p at any position;
///   R2: p r s t -> p t at any position when
///       -d(p,r)+d(r,s)-d(s,t) = -d(p,t).
/// Both rules preserve endpoints and lambda, hence phi.
MWord zip_reduce(const MWord& x);

/// One compression step (leftmost, R1 first); nullopt when irreducible.
std::optional<MWord> zip_step(const MWord& x);

/// All words reachable from x by a single R1/R2 contraction.
std::vector<MWord> zip_successors(const MWord& x);

/// Inverse of R2: replace the 2-letter window starting at 1-based letter
/// position `at` by (p, r, s, t). Throws when the lambda equality fails.
MWord expand_pair(const MWord& x, int at, const Symbol& r, const Symbol& s);

struct ZipCanonicalOptions {
  int extra_length = 4;       // how far above the running minimum to expand
  size_t node_budget = 200000;
};

/// Best representative of the =zip class reachable within budget: minimal
/// length, then maximal number of doubled (uppercase) pairs, then
/// lexicographically least. Explores contractions and R2-inverse expansions.
MWord zip_canonical(const MWord& x, const ZipCanonicalOptions& opts = {});

/// Requires a symmetric valuation; (lambda - defect) must be even.
Quadruple phi(const MWord& x);

bool phi_equivalent(const MWord& x, const MWord& y);

}  // namespace jorb
