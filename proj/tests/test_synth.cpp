#include "doctest.h"
#include "jorb/enumerate.hpp"
#include "jorb/ops.hpp"
#include "jorb/synth.hpp"

#include <fstream>
#include <set>

using namespace jorb;

namespace {

MWord w3(const std::string& text) { return MWord::parse(Alphabet::gamma3(), text); }

std::set<std::string> canonical_set(const std::vector<SPExprPtr>& exprs) {
  std::set<std::string> out;
  for (const auto& e : exprs) out.insert(print_sp(canonical_sp(e), false));
  return out;
}

std::set<std::string> canonical_set(const std::vector<std::string>& texts) {
  std::set<std::string> out;
  for (const auto& t : texts) out.insert(print_sp(canonical_sp(parse_sp(t)), false));
  return out;
}

}  // namespace

TEST_CASE("count_sp closed form") {
  CHECK(count_sp({2, 3, 1}) == 80640);
  CHECK(count_sp({1, 0, 0}) == 1);
  CHECK(count_sp({1, 1, 0}) == 4);
}

TEST_CASE("raw enumeration count equals the closed form for small bags") {
  std::vector<ElementBag> bags = {{1, 1, 0}, {2, 1, 0}, {1, 1, 1}, {2, 2, 0},
                                  {2, 1, 1}, {2, 2, 1}, {3, 1, 1}, {1, 3, 1}};
  for (const auto& bag : bags) {
    if (bag.total() > 5) continue;
    EnumerateOptions opts;
    opts.dedup = false;
    CHECK(static_cast<long long>(enumerate_sp(bag, opts).size()) == count_sp(bag));
  }
}

TEST_CASE("pruned synthesis stays exhaustive") {
  // filtering the unpruned enumeration must equal the pruned run
  for (const auto& [bag, target] : std::vector<std::pair<ElementBag, std::string>>{
           {{2, 2, 0}, "ABAB"}, {{1, 2, 1}, "BCBA"}, {{2, 2, 1}, "BACAB"}}) {
    MWord t = w3(target);
    EnumerateOptions plain;
    plain.dedup = true;
    std::vector<SPExprPtr> unpruned;
    for (const auto& e : enumerate_sp(bag, plain))
      if (eval_jorb(e) == t) unpruned.push_back(e);
    auto pruned = synthesize(t, bag, MatchMode::Reduced);
    CHECK(canonical_set(pruned) == canonical_set(unpruned));
  }
}

TEST_CASE("the ten ABABA realizations") {
  auto found = synthesize(w3("ABABA"), ElementBag{3, 2, 0}, MatchMode::Reduced);
  std::vector<std::string> printed = {
      "(((A s B) p A p B) s A)", "(((A p B) s A s B) p A)", "((A s B) p (A s B) p A)",
      "((A p B) s (A p B) s A)", "((((A s B) p A) s B) p A)", "((((A p B) s A) p B) s A)",
      "((((A s B) p B) s A) p A)", "((((A p B) s B) p A) s A)", "(((A s B) p A) s (A p B))",
      "(((A p B) s A) p (A s B))"};
  CHECK(found.size() == 10);
  CHECK(canonical_set(found) == canonical_set(printed));
}

TEST_CASE("table of BABAB and BCBCB realizations") {
  auto babab = synthesize(w3("BABAB"), ElementBag{2, 3, 0}, MatchMode::Reduced);
  std::vector<std::string> babab_printed = {
      "((((C1 s R1) p R2) s C2) p R3)", "(((C1 s R1) p C2 p R2) s R3)",
      "(((C1 p R1) s C2 s R2) p R3)",   "((((C1 p R1) s R2) p C2) s R3)",
      "((C1 s R1) p (C2 s R2) p R3)",   "((C1 p R1) s (C2 p R2) s R3)",
      "((((C1 s R1) p C2) s R2) p R3)", "((((C1 p R1) s C2) p R2) s R3)",
      "(((C1 p R1) s R2) p (C2 s R3))", "(((C1 s R1) p R2) s (C2 p R3))"};
  CHECK(babab.size() == 10);
  CHECK(canonical_set(babab) == canonical_set(babab_printed));

  auto bcbcb = synthesize(w3("BCBCB"), ElementBag{0, 3, 2}, MatchMode::Reduced);
  std::vector<std::string> bcbcb_printed = {
      "((((R1 s L1) p R2) s L2) p R3)", "(((R1 s L1) p R2 p L2) s R3)",
      "(((R1 p L1) s R2 s L2) p R3)",   "((((R1 p L1) s R2) p L2) s R3)",
      "((R1 s L1) p (R2 s L2) p R3)",   "((R1 p L1) s (R2 p L2) s R3)",
      "((((R1 s L1) p L2) s R2) p R3)", "((((R1 p L1) s L2) p R2) s R3)",
      "(((R1 p L1) s R2) p (R3 s L2))", "(((R1 s L1) p R2) s (R3 p L2))"};
  CHECK(bcbcb.size() == 10);
  CHECK(canonical_set(bcbcb) == canonical_set(bcbcb_printed));

  // leaf-wise duality pairs the two columns
  std::set<std::string> dual_of_babab;
  for (const auto& e : babab)
    dual_of_babab.insert(print_sp(canonical_sp(dual_elements(e)), false));
  CHECK(dual_of_babab == canonical_set(bcbcb));
  for (const auto& e : babab)
    CHECK(eval_jorb(dual_elements(e)) == zip_reduce(op_D(eval_jorb(e))));
}

TEST_CASE("synthesize by quadruple and impossible targets") {
  auto hits = synthesize(w3("ABAB"), ElementBag{2, 2, 0}, MatchMode::Phi);
  CHECK(!hits.empty());
  auto nothing = synthesize(Quadruple{5, 0, 0, 5}, ElementBag{1, 1, 1});
  CHECK(nothing.empty());
  auto bcba = synthesize(w3("BCBA"), ElementBag{1, 2, 1}, MatchMode::Reduced);
  auto set = canonical_set(bcba);
  CHECK(set.count(print_sp(canonical_sp(parse_sp("(R2 p (R1 s L1) p C1)")), false)) == 1);
  CHECK(set.count(print_sp(canonical_sp(parse_sp("(C1 p (R2 s (R1 p L1)))")), false)) == 1);
}

TEST_CASE("bag bound is enforced") {
  EnumerateOptions opts;
  CHECK_THROWS(enumerate_sp(ElementBag{5, 5, 5}, opts));
}

TEST_CASE("cauer ladders") {
  auto c1 = ladder(w3("ABABAB"), LadderForm::Cauer1);
  CHECK(c1.letters_text == "B s (A p (B s (A p (B s A))))");
  CHECK(c1.evaluated.render_compact() == "ABABAB");
  CHECK(c1.verdict == LadderVerdict::Exact);

  auto c2 = ladder(w3("ABABAB"), LadderForm::Cauer2);
  CHECK(c2.letters_text == "A s (B p (A s (B p (A s B))))");
  CHECK(c2.evaluated.render_compact() == "ABABAB");
  CHECK(c2.verdict == LadderVerdict::Exact);

  // the boxed label form appears on the low-frequency walk
  auto b2 = ladder(w3("BABCB"), LadderForm::Cauer2);
  CHECK(b2.labels_text == "R1 s(C1* p(R2 s(L1* p(R3))))");
  auto b1 = ladder(w3("BABCB"), LadderForm::Cauer1);
  CHECK(b1.labels_text == "R1 s(L1* p(R2 s(C1* p(R3))))");
  CHECK(b1.evaluated.render_compact() == "BCBAB");
  CHECK(b1.verdict == LadderVerdict::EImage);
  CHECK(phi_equivalent(b1.evaluated, w3("BABCB")));
  CHECK(b2.evaluated.render_compact() == "BABCB");
  CHECK(b2.verdict == LadderVerdict::Exact);
}

TEST_CASE("foster ladders") {
  auto f1 = ladder(w3("ABABAB"), LadderForm::Foster1);
  CHECK(f1.letters_text == "A s BA s BA s B");
  CHECK(f1.evaluated.render_compact() == "ABABAB");
  CHECK(f1.verdict == LadderVerdict::Exact);

  auto f2 = ladder(w3("ABABAB"), LadderForm::Foster2);
  CHECK(f2.letters_text == "AB p AB p AB");
  CHECK(f2.evaluated.render_compact() == "ABABAB");
  CHECK(f2.verdict == LadderVerdict::Exact);

  CHECK_THROWS(ladder(w3("BABCB"), LadderForm::Foster1));  // three distinct letters
  CHECK_THROWS(ladder(w3("ABA"), LadderForm::Foster2));    // odd atom count
}

TEST_CASE("cauer verification stays phi-faithful on alternating words") {
  for (const auto& alpha : {Alphabet::gamma3()}) {
    for (int n = 1; n <= 3; ++n) {
      for (const auto& jorb : generate(alpha, n)) {
        auto r = ladder(jorb, LadderForm::Cauer1);
        CHECK(phi_equivalent(r.evaluated, jorb));
        CHECK(r.verdict != LadderVerdict::Mismatch);
      }
    }
  }
}
