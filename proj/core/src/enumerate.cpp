#include "jorb/enumerate.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <cstdio>
#include <sstream>

namespace jorb {

std::vector<MWord> generate(const AlphabetPtr& alphabet, int n, std::optional<int> start,
                            std::optional<int> end) {
  if (n < 1) throw std::invalid_argument("generate: n must be >= 1");
  const int k = alphabet->size();
  std::vector<MWord> out;
  std::vector<uint8_t> atoms;
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      if (end && atoms.back() != *end) return;
      std::vector<uint8_t> letters;
      letters.reserve(static_cast<size_t>(n) * 2);
      for (uint8_t a : atoms) {
        letters.push_back(a);
        letters.push_back(a);
      }
      out.emplace_back(alphabet, std::move(letters));
      return;
    }
    for (int a = 0; a < k; ++a) {
      if (!atoms.empty() && atoms.back() == a) continue;
      if (depth == 0 && start && a != *start) continue;
      atoms.push_back(static_cast<uint8_t>(a));
      self(self, depth + 1);
      atoms.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<std::pair<std::string, Quadruple>> tabulate(const std::vector<MWord>& words) {
  std::vector<std::pair<std::string, Quadruple>> out;
  out.reserve(words.size());
  for (const auto& w : words) out.emplace_back(w.render_compact(), phi(w));
  return out;
}

std::pair<int, int> reactive_count(const MWord& x) {
  std::string compact = zip_reduce(x).render_compact();
  int a = 0, c = 0;
  for (char ch : compact) {
    if (ch == 'A') ++a;
    if (ch == 'C') ++c;
  }
  return {a, c};
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') {
      quoted = !quoted;
    } else if (c == ',' && !quoted) {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(cur);
  return fields;
}

Quadruple quad_from_json(const std::string& text) {
  Quadruple q;
  if (std::sscanf(text.c_str(), " [ %d , %d , %d , %d ]", &q.vl, &q.ls, &q.lp, &q.vr) != 4)
    throw ParseError("bad quadruple: " + text);
  return q;
}

}  // namespace

std::vector<CatalogueRow> load_catalogue(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open catalogue: " + path);
  std::vector<CatalogueRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line.rfind("jorb,", 0) == 0) continue;  // header
    auto fields = split_csv_line(line);
    if (fields.size() != 3) throw ParseError("bad catalogue line: " + line);
    CatalogueRow row;
    row.jorb = fields[0];
    row.quad = quad_from_json(fields[1]);
    std::istringstream ss(fields[2]);
    std::string id;
    while (ss >> id) row.schemes.push_back(id);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string catalogue_csv(const std::vector<CatalogueRow>& rows) {
  std::ostringstream os;
  os << "jorb,quadruple,schemes\n";
  for (const auto& r : rows) {
    os << r.jorb << ",\"" << r.quad.json() << "\",\"";
    for (size_t i = 0; i < r.schemes.size(); ++i) {
      if (i) os << " ";
      os << r.schemes[i];
    }
    os << "\"\n";
  }
  return os.str();
}

std::vector<std::pair<std::string, SPExprPtr>> load_schemes(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open scheme file: " + path);
  std::vector<std::pair<std::string, SPExprPtr>> out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ss(line);
    std::string id;
    if (!(ss >> id)) continue;
    std::string expr;
    std::getline(ss, expr);
    out.emplace_back(id, parse_sp(expr));
  }
  return out;
}

std::vector<CatalogueRow> classify(const std::vector<std::pair<std::string, SPExprPtr>>& schemes) {
  std::map<std::string, CatalogueRow> by_jorb;
  for (const auto& [id, expr] : schemes) {
    MWord j = eval_jorb(expr);
    std::string key = j.render_compact();
    auto it = by_jorb.find(key);
    if (it == by_jorb.end()) {
      CatalogueRow row;
      row.jorb = key;
      row.quad = phi(j);
      row.schemes.push_back(id);
      by_jorb.emplace(key, std::move(row));
    } else {
      it->second.schemes.push_back(id);
    }
  }
  std::vector<CatalogueRow> rows;
  rows.reserve(by_jorb.size());
  for (auto& [key, row] : by_jorb) rows.push_back(std::move(row));
  return rows;
}

}  // namespace jorb
