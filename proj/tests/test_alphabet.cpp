#include "doctest.h"
#include "jorb/alphabet.hpp"

#include <fstream>

using namespace jorb;

namespace {
Symbol sym(const AlphabetPtr& a, char c) { return {a, a->index_of(c)}; }
}  // namespace

TEST_CASE("duality mirrors positions") {
  auto g5 = Alphabet::gamma5();
  CHECK(dual(sym(g5, '2')).name() == '4');
  CHECK(dual(sym(g5, '1')).name() == '5');
  CHECK(dual(sym(g5, '3')).name() == '3');

  auto g3 = Alphabet::gamma3();
  CHECK(dual(sym(g3, 'b')).name() == 'b');

  auto g2 = Alphabet::make("bp", {-1, 1});  // beta/psi stand-ins
  CHECK(dual(sym(g2, 'b')).name() == 'p');

  for (int i = 0; i < g5->size(); ++i) {
    Symbol s{g5, i};
    CHECK(dual(dual(s)) == s);
  }
}

TEST_CASE("dual negates the valuation on symmetric alphabets") {
  auto g3 = Alphabet::gamma3();
  for (int i = 0; i < g3->size(); ++i)
    CHECK(dual(Symbol{g3, i}).valuation() == -Symbol{g3, i}.valuation());
}

TEST_CASE("delta distance") {
  auto g3 = Alphabet::gamma3();
  CHECK(delta(sym(g3, 'c'), sym(g3, 'a')) == 2);
  auto g5 = Alphabet::gamma5();
  CHECK(delta(sym(g5, '2'), sym(g5, '5')) == 3);
  CHECK(delta(sym(g5, '4'), sym(g5, '4')) == 0);

  // triangle inequality
  for (int i = 0; i < g5->size(); ++i)
    for (int j = 0; j < g5->size(); ++j)
      for (int k = 0; k < g5->size(); ++k)
        CHECK(g5->delta(i, k) <= g5->delta(i, j) + g5->delta(j, k));
}

TEST_CASE("meet and join follow the valuation order") {
  auto g2 = Alphabet::gamma2();
  CHECK(join(sym(g2, 'b'), sym(g2, 'a')).name() == 'b');
  CHECK(meet(sym(g2, 'b'), sym(g2, 'a')).name() == 'a');

  auto g3 = Alphabet::gamma3();
  CHECK(join(sym(g3, 'a'), sym(g3, 'c')).name() == 'c');
  CHECK(meet(sym(g3, 'b'), sym(g3, 'c')).name() == 'b');

  auto g5 = Alphabet::gamma5();
  CHECK(join(sym(g5, '2'), sym(g5, '4')).name() == '4');
  CHECK(meet(sym(g5, '2'), sym(g5, '4')).name() == '2');

  // absorption
  for (int i = 0; i < g3->size(); ++i)
    for (int j = 0; j < g3->size(); ++j) {
      Symbol a{g3, i}, b{g3, j};
      CHECK(meet(a, join(a, b)) == a);
      CHECK(join(a, meet(a, b)) == a);
    }
}

TEST_CASE("cross-alphabet operations fail loudly") {
  auto g3 = Alphabet::gamma3();
  auto g5 = Alphabet::gamma5();
  CHECK_THROWS_AS(delta(sym(g3, 'a'), sym(g5, '1')), AlphabetMismatch);
  CHECK_THROWS_AS(meet(sym(g3, 'a'), sym(g5, '1')), AlphabetMismatch);
}

TEST_CASE("constructor validation") {
  CHECK_THROWS(Alphabet::make("a", {0}));
  CHECK_THROWS(Alphabet::make("aa", {0, 1}));
  CHECK_THROWS(Alphabet::make("ab", {1, 0}));
  CHECK_THROWS(Alphabet::make("ab", {1, 1}));

  auto asym = Alphabet::make("abc", {1, 2, 3});
  CHECK_FALSE(asym->symmetric());
  CHECK(asym->unit_spaced());

  auto g2 = Alphabet::gamma2();
  CHECK(g2->symmetric());
  CHECK_FALSE(g2->unit_spaced());
}

TEST_CASE("alphabet definition file") {
  std::string path = "test_alpha.txt";
  {
    std::ofstream out(path);
    out << "# three symbols\n";
    out << "x -1\n";
    out << "y 0\n";
    out << "z 1\n";
  }
  auto a = Alphabet::from_file(path);
  CHECK(a->size() == 3);
  CHECK(a->symmetric());
  CHECK(a->name(2) == 'z');
  std::remove(path.c_str());
}
