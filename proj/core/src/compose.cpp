#include "jorb/compose.hpp"

namespace jorb {

namespace {

MWord splice(const MWord& x, const MWord& y, int e1, int m1, int m2, int e2) {
  std::vector<uint8_t> out;
  out.reserve(static_cast<size_t>(x.size() + y.size()) + 6);
  out.push_back(static_cast<uint8_t>(e1));
  out.push_back(static_cast<uint8_t>(e1));
  out.insert(out.end(), x.letters().begin(), x.letters().end());
  out.push_back(static_cast<uint8_t>(m1));
  out.push_back(static_cast<uint8_t>(m2));
  out.insert(out.end(), y.letters().begin(), y.letters().end());
  out.push_back(static_cast<uint8_t>(e2));
  out.push_back(static_cast<uint8_t>(e2));
  return MWord(x.alphabet(), std::move(out));
}

}  // namespace

MWord series(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "series");
  const Alphabet& a = *x.alphabet();
  int lx = x.l_index(), rx = x.r_index(), ly = y.l_index(), ry = y.r_index();
  return splice(x, y, a.meet_index(lx, ly), a.join_index(rx, ly), a.meet_index(rx, ly),
                a.join_index(rx, ry));
}

MWord parallel(const MWord& x, const MWord& y) {
  require_same_alphabet(x.alphabet(), y.alphabet(), "parallel");
  const Alphabet& a = *x.alphabet();
  int lx = x.l_index(), rx = x.r_index(), ly = y.l_index(), ry = y.r_index();
  return splice(x, y, a.join_index(lx, ly), a.meet_index(rx, ly), a.join_index(rx, ly),
                a.meet_index(rx, ry));
}

MWord series_reduced(const MWord& x, const MWord& y) { return zip_reduce(series(x, y)); }
MWord parallel_reduced(const MWord& x, const MWord& y) { return zip_reduce(parallel(x, y)); }

MWord s_zero(const AlphabetPtr& alphabet) {
  return MWord(alphabet, {static_cast<uint8_t>(alphabet->omega_index()),
                          static_cast<uint8_t>(alphabet->alpha_index())});
}

MWord p_zero(const AlphabetPtr& alphabet) {
  return MWord(alphabet, {static_cast<uint8_t>(alphabet->alpha_index()),
                          static_cast<uint8_t>(alphabet->omega_index())});
}

MWord s_core(const MWord& x) {
  MWord z = s_zero(x.alphabet());
  return concat(concat(z, x), z);
}

MWord p_core(const MWord& x) {
  MWord z = p_zero(x.alphabet());
  return concat(concat(z, x), z);
}

MWord s_core_reduced(const MWord& x) { return zip_reduce(s_core(x)); }
MWord p_core_reduced(const MWord& x) { return zip_reduce(p_core(x)); }

MWord s_shell(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  int l = x.l_index(), r = x.r_index();
  return MWord(x.alphabet(),
               {static_cast<uint8_t>(l), static_cast<uint8_t>(a.meet_index(l, r)),
                static_cast<uint8_t>(a.join_index(l, r)), static_cast<uint8_t>(r)});
}

MWord p_shell(const MWord& x) {
  const Alphabet& a = *x.alphabet();
  int l = x.l_index(), r = x.r_index();
  return MWord(x.alphabet(),
               {static_cast<uint8_t>(l), static_cast<uint8_t>(a.join_index(l, r)),
                static_cast<uint8_t>(a.meet_index(l, r)), static_cast<uint8_t>(r)});
}

namespace {

std::vector<MWord> basis(const AlphabetPtr& alphabet, MWord (*shell_fn)(const MWord&)) {
  std::vector<MWord> out;
  int n = alphabet->size();
  out.reserve(static_cast<size_t>(n) * static_cast<size_t>(n));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      MWord atom(alphabet, {static_cast<uint8_t>(s), static_cast<uint8_t>(t)});
      out.push_back(zip_reduce(shell_fn(atom)));
    }
  return out;
}

}  // namespace

std::vector<MWord> omega_s(const AlphabetPtr& alphabet) { return basis(alphabet, &s_shell); }
std::vector<MWord> omega_p(const AlphabetPtr& alphabet) { return basis(alphabet, &p_shell); }

}  // namespace jorb
