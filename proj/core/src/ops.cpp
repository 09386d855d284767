#include "jorb/ops.hpp"

#include <algorithm>

namespace jorb {

MWord op_D(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(x.size()));
  for (uint8_t c : x.letters()) out.push_back(static_cast<uint8_t>(a.dual_index(c)));
  return MWord(x.alphabet(), std::move(out));
}

MWord op_E(const MWord& x) {
  std::vector<uint8_t> out(x.letters().rbegin(), x.letters().rend());
  return MWord(x.alphabet(), std::move(out));
}

MWord op_F(const MWord& x) { return op_D(op_E(x)); }

MWord op_K(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(x.size()) + 2);
  out.push_back(static_cast<uint8_t>(a.dual_index(x.l_index())));
  out.insert(out.end(), x.letters().begin(), x.letters().end());
  out.push_back(static_cast<uint8_t>(a.dual_index(x.r_index())));
  return MWord(x.alphabet(), std::move(out));
}

MWord op_I(const MWord& x) {
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(x.size()) + 2);
  out.push_back(static_cast<uint8_t>(x.l_index()));
  out.insert(out.end(), x.letters().begin(), x.letters().end());
  out.push_back(static_cast<uint8_t>(x.r_index()));
  return MWord(x.alphabet(), std::move(out));
}

}  // namespace jorb
