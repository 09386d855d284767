#include "jorb/synth.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "jorb/compose.hpp"
#include "jorb/ops.hpp"

namespace jorb {

namespace {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long catalan(int n) {
  // C_n = binom(2n, n) / (n + 1)
  long long c = 1;
  for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

}  // namespace

long long count_sp(const ElementBag& bag) {
  int n = bag.total();
  if (n < 1) throw std::invalid_argument("count_sp: empty bag");
  long long arrangements = factorial(n) / (factorial(bag.capacitors) * factorial(bag.resistors) *
                                           factorial(bag.inductors));
  long long ops = 1LL << (n - 1);
  return arrangements * catalan(n - 1) * ops;
}

namespace {

struct BuiltTree {
  SPExprPtr expr;
  MWord jorb;
};

// All binary s/p trees over the leaf kind sequence [lo, hi). Results carry
// the evaluated jorb so pruning and filtering need no re-evaluation.
void build_trees(const std::vector<ElementKind>& seq, size_t lo, size_t hi,
                 const AlphabetPtr& alpha, const std::optional<Quadruple>& prune,
                 std::vector<BuiltTree>& out) {
  out.clear();
  if (hi - lo == 1) {
    SPExprPtr leaf = SPExpr::element(seq[lo]);
    out.push_back({leaf, eval_jorb(leaf, alpha)});
    return;
  }
  for (size_t mid = lo + 1; mid < hi; ++mid) {
    std::vector<BuiltTree> left, right;
    build_trees(seq, lo, mid, alpha, prune, left);
    build_trees(seq, mid, hi, alpha, prune, right);
    for (const auto& l : left) {
      for (const auto& r : right) {
        MWord s = series_reduced(l.jorb, r.jorb);
        MWord p = parallel_reduced(l.jorb, r.jorb);
        auto keep = [&](const MWord& w) {
          if (!prune) return true;
          Quadruple q = phi(w);
          return q.ls <= prune->ls && q.lp <= prune->lp;
        };
        if (keep(s))
          out.push_back({SPExpr::node(SPExpr::Tag::Series, {l.expr, r.expr}), s});
        if (keep(p))
          out.push_back({SPExpr::node(SPExpr::Tag::Parallel, {l.expr, r.expr}), p});
      }
    }
  }
}

std::vector<std::vector<ElementKind>> leaf_sequences(const ElementBag& bag) {
  std::vector<ElementKind> seq;
  seq.insert(seq.end(), static_cast<size_t>(bag.capacitors), ElementKind::Capacitor);
  seq.insert(seq.end(), static_cast<size_t>(bag.resistors), ElementKind::Resistor);
  seq.insert(seq.end(), static_cast<size_t>(bag.inductors), ElementKind::Inductor);
  std::sort(seq.begin(), seq.end());
  std::vector<std::vector<ElementKind>> all;
  do {
    all.push_back(seq);
  } while (std::next_permutation(seq.begin(), seq.end()));
  return all;
}

}  // namespace

std::vector<SPExprPtr> enumerate_sp(const ElementBag& bag, const EnumerateOptions& opts) {
  int n = bag.total();
  if (n < 1) throw std::invalid_argument("enumerate_sp: empty bag");
  if (n > opts.max_total)
    throw std::invalid_argument("enumerate_sp: bag exceeds configured bound " +
                                std::to_string(opts.max_total));
  AlphabetPtr alpha = Alphabet::gamma3();
  std::optional<Quadruple> prune;
  if (opts.prune_target) prune = phi(*opts.prune_target);

  auto sequences = leaf_sequences(bag);
  int jobs = std::max(1, opts.jobs);
  jobs = std::min<int>(jobs, static_cast<int>(sequences.size()));

  auto run_chunk = [&](size_t begin, size_t end) {
    std::vector<std::pair<std::string, SPExprPtr>> local;
    std::vector<BuiltTree> trees;
    for (size_t i = begin; i < end; ++i) {
      build_trees(sequences[i], 0, sequences[i].size(), alpha, prune, trees);
      for (const auto& t : trees) {
        if (opts.dedup) {
          SPExprPtr c = canonical_sp(t.expr);
          local.emplace_back(print_sp(c, false), c);
        } else {
          local.emplace_back(print_sp(t.expr, false), t.expr);
        }
      }
    }
    return local;
  };

  std::vector<std::pair<std::string, SPExprPtr>> merged;
  if (jobs == 1) {
    merged = run_chunk(0, sequences.size());
  } else {
    std::vector<std::future<std::vector<std::pair<std::string, SPExprPtr>>>> futures;
    size_t chunk = (sequences.size() + static_cast<size_t>(jobs) - 1) / static_cast<size_t>(jobs);
    for (int j = 0; j < jobs; ++j) {
      size_t b = static_cast<size_t>(j) * chunk;
      size_t e = std::min(sequences.size(), b + chunk);
      if (b >= e) break;
      futures.push_back(std::async(std::launch::async, run_chunk, b, e));
    }
    for (auto& f : futures) {
      auto part = f.get();
      merged.insert(merged.end(), part.begin(), part.end());
    }
  }

  std::vector<SPExprPtr> out;
  if (opts.dedup) {
    std::sort(merged.begin(), merged.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::string last;
    for (auto& [key, expr] : merged) {
      if (key == last) continue;
      last = key;
      out.push_back(expr);
    }
  } else {
    out.reserve(merged.size());
    for (auto& [key, expr] : merged) out.push_back(expr);
  }
  return out;
}

std::vector<SPExprPtr> synthesize(const MWord& target, const ElementBag& bag, MatchMode match,
                                  int jobs) {
  EnumerateOptions opts;
  opts.dedup = true;
  opts.jobs = jobs;
  MWord reduced_target = zip_reduce(target);
  if (match == MatchMode::Reduced) opts.prune_target = reduced_target;
  std::vector<SPExprPtr> out;
  for (const auto& e : enumerate_sp(bag, opts)) {
    MWord j = eval_jorb(e);
    bool ok = match == MatchMode::Reduced ? j == reduced_target
                                          : phi_equivalent(j, reduced_target);
    if (ok) out.push_back(e);
  }
  return out;
}

std::vector<SPExprPtr> synthesize(const Quadruple& target, const ElementBag& bag, int jobs) {
  EnumerateOptions opts;
  opts.dedup = true;
  opts.jobs = jobs;
  std::vector<SPExprPtr> out;
  for (const auto& e : enumerate_sp(bag, opts))
    if (phi(eval_jorb(e)) == target) out.push_back(e);
  return out;
}

LadderForm ladder_form_from_name(const std::string& name) {
  if (name == "cauer1") return LadderForm::Cauer1;
  if (name == "cauer2") return LadderForm::Cauer2;
  if (name == "foster1") return LadderForm::Foster1;
  if (name == "foster2") return LadderForm::Foster2;
  throw std::invalid_argument("unknown ladder form: " + name);
}

std::string to_string(LadderVerdict v) {
  switch (v) {
    case LadderVerdict::Exact: return "exact";
    case LadderVerdict::EImage: return "e-image";
    case LadderVerdict::PhiEquivalent: return "phi-equivalent";
    case LadderVerdict::Mismatch: return "mismatch";
  }
  return "?";
}

namespace {

std::vector<int> atoms_of(const MWord& jorb) {
  std::vector<int> atoms;
  if (jorb.size() % 2 != 0) throw std::invalid_argument("ladder: malformed word");
  for (int i = 0; i < jorb.size(); i += 2) {
    if (jorb.letter(i) != jorb.letter(i + 1))
      throw std::invalid_argument("ladder: jorb is not in compact atom form");
    if (!atoms.empty() && atoms.back() == jorb.letter(i))
      throw std::invalid_argument("ladder: adjacent atoms repeat");
    atoms.push_back(jorb.letter(i));
  }
  return atoms;
}

ElementKind kind_of_atom(int idx) {
  switch (idx) {
    case 0: return ElementKind::Capacitor;
    case 1: return ElementKind::Resistor;
    case 2: return ElementKind::Inductor;
  }
  throw std::invalid_argument("ladder: atom outside the CRL range");
}

std::string cauer_letters(const std::vector<int>& atoms, const AlphabetPtr& alpha) {
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    char letter = static_cast<char>(std::toupper(alpha->name(atoms[i])));
    if (i + 1 == atoms.size()) {
      out += letter;
      break;
    }
    out += letter;
    out += i % 2 == 0 ? " s " : " p ";
    if (i + 2 != atoms.size()) out += "(";
  }
  out.append(atoms.size() >= 2 ? atoms.size() - 2 : 0, ')');
  return out;
}

std::string cauer_labels(const std::vector<int>& atoms) {
  std::map<ElementKind, int> counters;
  std::string out;
  size_t opened = 0;
  for (size_t i = 0; i < atoms.size(); ++i) {
    ElementKind k = kind_of_atom(atoms[i]);
    std::string label = std::string(1, element_label_char(k)) +
                        std::to_string(++counters[k]);
    if (i % 2 == 1) label += "*";  // admittance slot
    out += label;
    if (i + 1 == atoms.size()) break;
    out += i % 2 == 0 ? " s(" : " p(";
    ++opened;
  }
  out.append(opened, ')');
  return out;
}

SPExprPtr cauer_expr(const std::vector<int>& atoms) {
  SPExprPtr tail = SPExpr::element(kind_of_atom(atoms.back()));
  for (size_t i = atoms.size() - 1; i-- > 0;) {
    SPExpr::Tag op = i % 2 == 0 ? SPExpr::Tag::Series : SPExpr::Tag::Parallel;
    tail = SPExpr::node(op, {SPExpr::element(kind_of_atom(atoms[i])), tail});
  }
  return tail;
}

void require_two_letter_alternation(const std::vector<int>& atoms) {
  if (atoms.size() < 2 || atoms.size() % 2 != 0)
    throw std::invalid_argument("ladder: Foster forms need an even atom count");
  for (size_t i = 0; i < atoms.size(); ++i)
    if (atoms[i] != atoms[i % 2])
      throw std::invalid_argument("ladder: Foster forms need a two-letter alternating jorb");
}

}  // namespace

LadderResult ladder(const MWord& jorb, LadderForm form) {
  AlphabetPtr alpha = jorb.alphabet();
  std::vector<int> atoms = atoms_of(jorb);
  auto upper = [&](int idx) {
    return std::string(1, static_cast<char>(std::toupper(alpha->name(idx))));
  };

  LadderResult res{nullptr, "", "", jorb, LadderVerdict::Mismatch};
  switch (form) {
    case LadderForm::Cauer1: {
      std::vector<int> rev(atoms.rbegin(), atoms.rend());
      res.expr = cauer_expr(rev);
      res.letters_text = cauer_letters(rev, alpha);
      res.labels_text = cauer_labels(rev);
      break;
    }
    case LadderForm::Cauer2: {
      res.expr = cauer_expr(atoms);
      res.letters_text = cauer_letters(atoms, alpha);
      res.labels_text = cauer_labels(atoms);
      break;
    }
    case LadderForm::Foster1: {
      require_two_letter_alternation(atoms);
      std::vector<SPExprPtr> sections{SPExpr::element(kind_of_atom(atoms.front()))};
      std::string text = upper(atoms.front());
      for (size_t i = 1; i + 1 < atoms.size(); i += 2) {
        std::string pair = upper(atoms[i]) + upper(atoms[i + 1]);
        sections.push_back(SPExpr::literal(pair));
        text += " s " + pair;
      }
      sections.push_back(SPExpr::element(kind_of_atom(atoms.back())));
      text += " s " + upper(atoms.back());
      res.expr = SPExpr::node(SPExpr::Tag::Series, std::move(sections));
      res.letters_text = text;
      res.labels_text = text;
      break;
    }
    case LadderForm::Foster2: {
      require_two_letter_alternation(atoms);
      std::vector<SPExprPtr> sections;
      std::string text;
      for (size_t i = 0; i < atoms.size(); i += 2) {
        std::string pair = upper(atoms[i]) + upper(atoms[i + 1]);
        sections.push_back(SPExpr::literal(pair));
        if (!text.empty()) text += " p ";
        text += pair;
      }
      res.expr = SPExpr::node(SPExpr::Tag::Parallel, std::move(sections));
      res.letters_text = text;
      res.labels_text = text;
      break;
    }
  }

  res.evaluated = eval_jorb(res.expr, alpha);
  if (res.evaluated == zip_reduce(jorb)) {
    res.verdict = LadderVerdict::Exact;
  } else if (res.evaluated == zip_reduce(op_E(jorb))) {
    res.verdict = LadderVerdict::EImage;
  } else if (phi_equivalent(res.evaluated, jorb)) {
    res.verdict = LadderVerdict::PhiEquivalent;
  } else {
    res.verdict = LadderVerdict::Mismatch;
  }
  return res;
}

}  // namespace jorb
