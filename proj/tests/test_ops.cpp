#include "doctest.h"
#include "jorb/compose.hpp"
#include "jorb/ops.hpp"
#include "jorb/word.hpp"

#include <functional>
#include <random>

using namespace jorb;

namespace {
MWord w3(const std::string& text) { return MWord::parse(Alphabet::gamma3(), text); }
}

TEST_CASE("D E F on the four-cycle") {
  CHECK(op_D(w3("ABAB")).render_compact() == "CBCB");
  CHECK(op_E(w3("ABAB")).render_compact() == "BABA");
  CHECK(op_E(w3("CBCB")).render_compact() == "BCBC");
  CHECK(op_F(w3("ABAB")).render_compact() == "BCBC");
  CHECK(op_D(w3("BACB")).render_compact() == "BCAB");
  CHECK(op_E(w3("BACB")).render_compact() == "BCAB");
  CHECK(op_F(w3("BACB")).render_compact() == "BACB");
  CHECK(op_F(w3("BCAB")).render_compact() == "BCAB");
}

TEST_CASE("Klein four-group table on all gamma3 words of length <= 6") {
  auto g3 = Alphabet::gamma3();
  using Op = std::function<MWord(const MWord&)>;
  Op ident = [](const MWord& w) { return w; };
  Op d = [](const MWord& w) { return op_D(w); };
  Op e = [](const MWord& w) { return op_E(w); };
  Op f = [](const MWord& w) { return op_F(w); };
  std::vector<Op> ops{ident, d, e, f};
  // Cayley table: indices into ops
  int table[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};

  std::vector<MWord> words;
  for (int len : {2, 4, 6}) {
    std::vector<uint8_t> letters(static_cast<size_t>(len), 0);
    for (;;) {
      words.emplace_back(g3, letters);
      int pos = len - 1;
      while (pos >= 0 && letters[static_cast<size_t>(pos)] == 2) {
        letters[static_cast<size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
      ++letters[static_cast<size_t>(pos)];
    }
  }
  CHECK(words.size() == 9 + 81 + 729);
  for (const auto& w : words)
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(ops[static_cast<size_t>(i)](ops[static_cast<size_t>(j)](w)) ==
              ops[static_cast<size_t>(table[i][j])](w));
}

TEST_CASE("K and I add exactly two letters; D E F preserve length") {
  std::mt19937 rng(3);
  auto g3 = Alphabet::gamma3();
  std::uniform_int_distribution<int> letter(0, 2);
  for (int i = 0; i < 200; ++i) {
    std::vector<uint8_t> letters;
    int pairs = 1 + static_cast<int>(rng() % 5);
    for (int k = 0; k < 2 * pairs; ++k) letters.push_back(static_cast<uint8_t>(letter(rng)));
    MWord w(g3, letters);
    CHECK(op_D(w).size() == w.size());
    CHECK(op_E(w).size() == w.size());
    CHECK(op_F(w).size() == w.size());
    CHECK(op_K(w).size() == w.size() + 2);
    CHECK(op_I(w).size() == w.size() + 2);
  }
}

TEST_CASE("K flips endpoint duals") {
  auto g2 = Alphabet::gamma2();
  MWord ab = MWord::parse(g2, "ab");
  CHECK(shell(op_K(ab)).render_lower() == "ba");
  CHECK(shell(op_K(w3("bb"))).render_lower() == "bb");
  std::mt19937 rng(9);
  auto g3 = Alphabet::gamma3();
  std::uniform_int_distribution<int> letter(0, 2);
  for (int i = 0; i < 100; ++i) {
    std::vector<uint8_t> letters;
    int pairs = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < 2 * pairs; ++k) letters.push_back(static_cast<uint8_t>(letter(rng)));
    MWord w(g3, letters);
    CHECK(shell(op_K(op_K(w))) == shell(w));
  }
}

TEST_CASE("I interacts with composition per the shell identities") {
  CHECK(op_I(w3("ab")).render_lower() == "aabb");
  std::mt19937 rng(17);
  auto g3 = Alphabet::gamma3();
  std::uniform_int_distribution<int> letter(0, 2);
  for (int i = 0; i < 200; ++i) {
    std::vector<uint8_t> letters;
    int pairs = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < 2 * pairs; ++k) letters.push_back(static_cast<uint8_t>(letter(rng)));
    MWord w(g3, letters);
    CHECK(series_reduced(w, op_I(w)) == zip_reduce(p_shell(w)));
    CHECK(parallel_reduced(w, op_I(w)) == zip_reduce(s_shell(w)));
  }
}

TEST_CASE("phi transforms under E by swapping ends and lengths") {
  std::mt19937 rng(29);
  auto g3 = Alphabet::gamma3();
  std::uniform_int_distribution<int> letter(0, 2);
  for (int i = 0; i < 500; ++i) {
    std::vector<uint8_t> letters;
    int pairs = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < 2 * pairs; ++k) letters.push_back(static_cast<uint8_t>(letter(rng)));
    MWord w(g3, letters);
    Quadruple q = phi(w);
    Quadruple qe = phi(op_E(w));
    CHECK(qe.vl == q.vr);
    CHECK(qe.vr == q.vl);
    CHECK(qe.ls == q.lp);
    CHECK(qe.lp == q.ls);
  }
}
