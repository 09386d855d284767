#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace jorb {

struct AlphabetMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered symbol alphabet with an integer valuation.
///
/// Alphabets are immutable registry objects: equality is identity, so values
/// built over different Alphabet instances never silently mix.
class Alphabet {
public:
  static AlphabetPtr make(std::string names, std::vector<int> valuation,
                          std::string tag = {});

  /// Built-ins. gamma2 = {a,b} valued {-1,1}; gamma3 = {a,b,c} valued
  /// {-1,0,1} (the CRL alphabet: A=aa capacitor, B=bb resistor, C=cc
  /// inductor); gamma5 = {1..5} valued {1..5}; gamma10 = {0..9} valued
  /// {0..9}.
  static AlphabetPtr gamma2();
  static AlphabetPtr gamma3();
  static AlphabetPtr gamma5();
  static AlphabetPtr gamma10();

  /// Lookup by the names accepted on the CLI (`--alphabet`).
  static AlphabetPtr by_name(const std::string& name);

  /// Definition file: one `<char> <valuation>` line per symbol.
  static AlphabetPtr from_file(const std::string& path);

  int size() const { return static_cast<int>(names_.size()); }
  char name(int i) const { return names_[static_cast<size_t>(i)]; }
  int valuation(int i) const { return valuation_[static_cast<size_t>(i)]; }
  const std::string& tag() const { return tag_; }

  /// Index of a symbol character, -1 when absent.
  int index_of(char c) const;

  /// a'_k = a_{n+1-k}
  int dual_index(int i) const { return size() - 1 - i; }

  /// delta(r,s) = |v(r) - v(s)|
  int delta(int i, int j) const;

  int meet_index(int i, int j) const { return valuation(i) < valuation(j) ? i : j; }
  int join_index(int i, int j) const { return valuation(i) < valuation(j) ? j : i; }

  int alpha_index() const { return 0; }
  int omega_index() const { return size() - 1; }

  /// Valuation symmetric about 0; required by phi.
  bool symmetric() const { return symmetric_; }
  /// Adjacent valuations differ by exactly 1.
  bool unit_spaced() const { return unit_spaced_; }

  Alphabet(const Alphabet&) = delete;
  Alphabet& operator=(const Alphabet&) = delete;

private:
  Alphabet(std::string names, std::vector<int> valuation, std::string tag);

  std::string names_;
  std::vector<int> valuation_;
  std::string tag_;
  bool symmetric_ = false;
  bool unit_spaced_ = false;
  int index_lut_[256];
};

/// A symbol bound to its alphabet. Cross-alphabet operations throw
/// AlphabetMismatch.
struct Symbol {
  AlphabetPtr alphabet;
  int index = 0;

  char name() const { return alphabet->name(index); }
  int valuation() const { return alphabet->valuation(index); }

  friend bool operator==(const Symbol& a, const Symbol& b) {
    return a.alphabet == b.alphabet && a.index == b.index;
  }
};

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b,
                           const char* what);

Symbol dual(const Symbol& a);
int delta(const Symbol& r, const Symbol& s);
Symbol meet(const Symbol& a, const Symbol& b);
Symbol join(const Symbol& a, const Symbol& b);

}  // namespace jorb
