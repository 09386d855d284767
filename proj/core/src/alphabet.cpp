#include "jorb/alphabet.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace jorb {

Alphabet::Alphabet(std::string names, std::vector<int> valuation, std::string tag)
    : names_(std::move(names)), valuation_(std::move(valuation)), tag_(std::move(tag)) {
  if (names_.size() < 2) throw std::invalid_argument("alphabet needs at least 2 symbols");
  if (names_.size() != valuation_.size())
    throw std::invalid_argument("alphabet names and valuation differ in length");
  std::fill(std::begin(index_lut_), std::end(index_lut_), -1);
  for (size_t i = 0; i < names_.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(names_[i]);
    if (index_lut_[c] != -1) throw std::invalid_argument("duplicate symbol in alphabet");
    index_lut_[c] = static_cast<int>(i);
  }
  for (size_t i = 1; i < valuation_.size(); ++i)
    if (valuation_[i] <= valuation_[i - 1])
      throw std::invalid_argument("alphabet valuation must be strictly increasing");

  symmetric_ = true;
  for (size_t i = 0, j = valuation_.size() - 1; i <= j; ++i, --j)
    if (valuation_[i] != -valuation_[j]) { symmetric_ = false; break; }
  unit_spaced_ = true;
  for (size_t i = 1; i < valuation_.size(); ++i)
    if (valuation_[i] - valuation_[i - 1] != 1) { unit_spaced_ = false; break; }
}

AlphabetPtr Alphabet::make(std::string names, std::vector<int> valuation, std::string tag) {
  return AlphabetPtr(new Alphabet(std::move(names), std::move(valuation), std::move(tag)));
}

AlphabetPtr Alphabet::gamma2() {
  static AlphabetPtr g = make("ab", {-1, 1}, "gamma2");
  return g;
}

AlphabetPtr Alphabet::gamma3() {
  static AlphabetPtr g = make("abc", {-1, 0, 1}, "gamma3");
  return g;
}

AlphabetPtr Alphabet::gamma5() {
  static AlphabetPtr g = make("12345", {1, 2, 3, 4, 5}, "gamma5");
  return g;
}

AlphabetPtr Alphabet::gamma10() {
  static AlphabetPtr g = make("0123456789", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9}, "gamma10");
  return g;
}

AlphabetPtr Alphabet::by_name(const std::string& name) {
  if (name == "gamma2") return gamma2();
  if (name == "gamma3") return gamma3();
  if (name == "gamma5") return gamma5();
  if (name == "gamma10") return gamma10();
  throw std::invalid_argument("unknown alphabet: " + name);
}

AlphabetPtr Alphabet::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open alphabet file: " + path);
  std::string names;
  std::vector<int> valuation;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string sym;
    int val;
    if (!(ls >> sym >> val) || sym.size() != 1)
      throw ParseError("bad alphabet line: " + line);
    names.push_back(sym[0]);
    valuation.push_back(val);
  }
  return make(std::move(names), std::move(valuation), path);
}

int Alphabet::index_of(char c) const {
  return index_lut_[static_cast<unsigned char>(c)];
}

int Alphabet::delta(int i, int j) const {
  return std::abs(valuation(i) - valuation(j));
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b, const char* what) {
  if (a != b) throw AlphabetMismatch(std::string(what) + ": operands use different alphabets");
}

Symbol dual(const Symbol& a) { return {a.alphabet, a.alphabet->dual_index(a.index)}; }

int delta(const Symbol& r, const Symbol& s) {
  require_same_alphabet(r.alphabet, s.alphabet, "delta");
  return r.alphabet->delta(r.index, s.index);
}

Symbol meet(const Symbol& a, const Symbol& b) {
  require_same_alphabet(a.alphabet, b.alphabet, "meet");
  return {a.alphabet, a.alphabet->meet_index(a.index, b.index)};
}

Symbol join(const Symbol& a, const Symbol& b) {
  require_same_alphabet(a.alphabet, b.alphabet, "join");
  return {a.alphabet, a.alphabet->join_index(a.index, b.index)};
}

}  // namespace jorb
