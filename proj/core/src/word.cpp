#include "jorb/word.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>
#include <sstream>

namespace jorb {

MWord::MWord(AlphabetPtr alphabet, std::vector<uint8_t> letters)
    : alpha_(std::move(alphabet)), letters_(std::move(letters)) {
  if (!alpha_) throw std::invalid_argument("MWord: null alphabet");
  if (letters_.size() < 2 || letters_.size() % 2 != 0)
    throw std::invalid_argument("MWord: length must be even and >= 2");
  for (uint8_t c : letters_)
    if (c >= alpha_->size()) throw std::invalid_argument("MWord: letter outside alphabet");
}

MWord MWord::parse(const AlphabetPtr& alphabet, std::string_view text) {
  std::vector<uint8_t> letters;
  letters.reserve(text.size() * 2);
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    int idx = alphabet->index_of(c);
    if (idx >= 0) {
      letters.push_back(static_cast<uint8_t>(idx));
      continue;
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    idx = alphabet->index_of(lower);
    if (idx < 0 || !std::isupper(static_cast<unsigned char>(c)))
      throw ParseError(std::string("unknown character '") + c + "' for this alphabet");
    letters.push_back(static_cast<uint8_t>(idx));
    letters.push_back(static_cast<uint8_t>(idx));
  }
  if (letters.empty()) throw ParseError("empty jorb text");
  if (letters.size() % 2 != 0)
    throw ParseError("jorb text expands to odd length " + std::to_string(letters.size()));
  return MWord(alphabet, std::move(letters));
}

std::string MWord::render_lower() const {
  std::string out;
  out.reserve(letters_.size());
  for (uint8_t c : letters_) out.push_back(alpha_->name(c));
  return out;
}

std::string MWord::render_compact() const {
  std::string out;
  size_t i = 0;
  while (i < letters_.size()) {
    char name = alpha_->name(letters_[i]);
    if (i + 1 < letters_.size() && letters_[i] == letters_[i + 1] &&
        std::islower(static_cast<unsigned char>(name))) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(name))));
      i += 2;
    } else {
      out.push_back(name);
      i += 1;
    }
  }
  return out;
}

std::string Quadruple::str() const {
  std::ostringstream os;
  os << "(" << vl << ", " << ls << ", " << lp << ", " << vr << ")";
  return os.str();
}

std::string Quadruple::json() const {
  std::ostringstream os;
  os << "[" << vl << ", " << ls << ", " << lp << ", " << vr << "]";
  return os.str();
}

std::string Quadruple::triplet_str() const {
  std::ostringstream os;
  os << "(" << vl << ", " << ls << ", " << vr << ")";
  return os.str();
}

MWord concat(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "concat");
  std::vector<uint8_t> letters = x.letters();
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return MWord(x.alphabet(), std::move(letters));
}

long lambda(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  long sum = 0;
  int sign = -1;
  for (int i = 0; i + 1 < x.size(); ++i) {
    sum += sign * a.delta(x.letter(i), x.letter(i + 1));
    sign = -sign;
  }
  return sum;
}

int defect(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  return a.valuation(x.r_index()) - a.valuation(x.l_index());
}

MWord shell(const MWord& x) {
  return MWord(x.alphabet(),
               {static_cast<uint8_t>(x.l_index()), static_cast<uint8_t>(x.r_index())});
}

namespace {

// R1 at i: letters i,i+1,i+2 with w[i]==w[i+2] collapse to w[i].
// R2 at i: letters i..i+3 collapse to (w[i], w[i+3]) under the lambda equality.
bool r1_applies(const Alphabet&, const std::vector<uint8_t>& w, size_t i) {
  return w[i] == w[i + 2];
}

bool r2_applies(const Alphabet& a, const std::vector<uint8_t>& w, size_t i) {
  int lhs = -a.delta(w[i], w[i + 1]) + a.delta(w[i + 1], w[i + 2]) - a.delta(w[i + 2], w[i + 3]);
  return lhs == -a.delta(w[i], w[i + 3]);
}

std::vector<uint8_t> apply_r1(const std::vector<uint8_t>& w, size_t i) {
  std::vector<uint8_t> out(w.begin(), w.begin() + static_cast<long>(i) + 1);
  out.insert(out.end(), w.begin() + static_cast<long>(i) + 3, w.end());
  return out;
}

std::vector<uint8_t> apply_r2(const std::vector<uint8_t>& w, size_t i) {
  std::vector<uint8_t> out(w.begin(), w.begin() + static_cast<long>(i) + 1);
  out.insert(out.end(), w.begin() + static_cast<long>(i) + 3, w.end());
  return out;
}

}  // namespace

std::optional<MWord> zip_step(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  const auto& w = x.letters();
  if (w.size() <= 2) return std::nullopt;
  for (size_t i = 0; i + 2 < w.size(); ++i)
    if (r1_applies(a, w, i)) return MWord(x.alphabet(), apply_r1(w, i));
  for (size_t i = 0; i + 3 < w.size(); ++i)
    if (r2_applies(a, w, i)) return MWord(x.alphabet(), apply_r2(w, i));
  return std::nullopt;
}

MWord zip_reduce(const MWord& x) {
  MWord cur = x;
  while (auto next = zip_step(cur)) cur = std::move(*next);
  return cur;
}

std::vector<MWord> zip_successors(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  const auto& w = x.letters();
  std::vector<MWord> out;
  if (w.size() <= 2) return out;
  for (size_t i = 0; i + 2 < w.size(); ++i)
    if (r1_applies(a, w, i)) out.emplace_back(x.alphabet(), apply_r1(w, i));
  for (size_t i = 0; i + 3 < w.size(); ++i)
    if (r2_applies(a, w, i)) out.emplace_back(x.alphabet(), apply_r2(w, i));
  return out;
}

MWord expand_pair(const MWord& x, int at, const Symbol& r, const Symbol& s) {
  require_same_alphabet(x.alphabet(), r.alphabet, "expand_pair");
  require_same_alphabet(x.alphabet(), s.alphabet, "expand_pair");
  if (at < 1 || at >= x.size())
    throw std::invalid_argument("expand_pair: window index out of range");
  const Alphabet& a = *x.alphabet();
  size_t i = static_cast<size_t>(at - 1);
  const auto& w = x.letters();
  uint8_t p = w[i], t = w[i + 1];
  int lhs = -a.delta(p, r.index) + a.delta(r.index, s.index) - a.delta(s.index, t);
  if (lhs != -a.delta(p, t))
    throw std::invalid_argument("expand_pair: insertion violates the lambda equality");
  std::vector<uint8_t> out(w.begin(), w.begin() + static_cast<long>(i) + 1);
  out.push_back(static_cast<uint8_t>(r.index));
  out.push_back(static_cast<uint8_t>(s.index));
  out.insert(out.end(), w.begin() + static_cast<long>(i) + 1, w.end());
  return MWord(x.alphabet(), std::move(out));
}

namespace {

int unpaired_count(const std::vector<uint8_t>& w) {
  int unpaired = 0;
  size_t i = 0;
  while (i < w.size()) {
    if (i + 1 < w.size() && w[i] == w[i + 1]) {
      i += 2;
    } else {
      ++unpaired;
      ++i;
    }
  }
  return unpaired;
}

struct CanonRank {
  size_t len;
  int unpaired;
  const std::vector<uint8_t>* word;
  bool better_than(const CanonRank& o) const {
    if (len != o.len) return len < o.len;
    if (unpaired != o.unpaired) return unpaired < o.unpaired;
    return *word < *o.word;
  }
};

}  // namespace

MWord zip_canonical(const MWord& x, const ZipCanonicalOptions& opts) {
  const Alphabet& a = *x.alphabet();
  const int n = a.size();

  std::set<std::vector<uint8_t>> seen;
  std::deque<std::vector<uint8_t>> frontier;
  std::vector<uint8_t> best = zip_reduce(x).letters();
  size_t min_len = best.size();

  frontier.push_back(x.letters());
  seen.insert(x.letters());
  size_t visited = 0;

  auto consider = [&](std::vector<uint8_t>&& w) {
    if (w.size() > min_len + static_cast<size_t>(opts.extra_length)) return;
    if (seen.size() >= opts.node_budget) return;
    auto [it, inserted] = seen.insert(std::move(w));
    if (inserted) frontier.push_back(*it);
  };

  while (!frontier.empty() && visited < opts.node_budget) {
    std::vector<uint8_t> w = std::move(frontier.front());
    frontier.pop_front();
    ++visited;

    CanonRank cur{w.size(), unpaired_count(w), &w};
    CanonRank best_rank{best.size(), unpaired_count(best), &best};
    if (cur.better_than(best_rank)) {
      best = w;
      min_len = std::min(min_len, w.size());
    }

    // contractions
    for (size_t i = 0; i + 2 < w.size(); ++i)
      if (r1_applies(a, w, i)) consider(apply_r1(w, i));
    for (size_t i = 0; i + 3 < w.size(); ++i)
      if (r2_applies(a, w, i)) consider(apply_r2(w, i));

    // R2-inverse expansions
    if (w.size() + 2 <= min_len + static_cast<size_t>(opts.extra_length)) {
      for (size_t i = 0; i + 1 < w.size(); ++i) {
        uint8_t p = w[i], t = w[i + 1];
        int target = -a.delta(p, t);
        for (int r = 0; r < n; ++r) {
          for (int s = 0; s < n; ++s) {
            if (-a.delta(p, r) + a.delta(r, s) - a.delta(s, t) != target) continue;
            std::vector<uint8_t> out(w.begin(), w.begin() + static_cast<long>(i) + 1);
            out.push_back(static_cast<uint8_t>(r));
            out.push_back(static_cast<uint8_t>(s));
            out.insert(out.end(), w.begin() + static_cast<long>(i) + 1, w.end());
            consider(std::move(out));
          }
        }
      }
    }
  }
  return MWord(x.alphabet(), std::move(best));
}

Quadruple phi(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  if (!a.symmetric())
    throw std::invalid_argument("phi: alphabet valuation is not symmetric about 0");
  long lam = lambda(x);
  int def = defect(x);
  if ((lam - def) % 2 != 0)
    throw std::invalid_argument("phi: lambda - defect is odd for this word");
  Quadruple q;
  q.vl = a.valuation(x.l_index());
  q.vr = a.valuation(x.r_index());
  q.ls = static_cast<int>((lam - def) / 2);
  q.lp = static_cast<int>((lam + def) / 2);
  return q;
}

bool phi_equivalent(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "phi_equivalent");
  return phi(x) == phi(y);
}

}  // namespace jorb
