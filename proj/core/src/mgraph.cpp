#include "jorb/mgraph.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "jorb/compose.hpp"
#include "jorb/ops.hpp"
#include "jorb/order.hpp"

namespace jorb {

MGraph::MGraph(std::vector<GraphEdge> edges, std::pair<std::string, std::string> terminals)
    : edges_(std::move(edges)), terminals_(std::move(terminals)) {
  if (edges_.empty()) throw std::invalid_argument("MGraph: no edges");
  for (const auto& e : edges_)
    require_same_alphabet(edges_.front().label.alphabet(), e.label.alphabet(), "MGraph");
}

MGraph MGraph::from_text(const AlphabetPtr& alphabet, const std::string& text) {
  std::vector<GraphEdge> edges;
  std::optional<std::pair<std::string, std::string>> terminals;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string a, b, c;
    if (!(ls >> a)) continue;
    if (a == "terminals") {
      if (!(ls >> b >> c)) throw ParseError("graph: bad terminals line");
      terminals = {b, c};
      continue;
    }
    if (!(ls >> b >> c)) throw ParseError("graph: bad edge line: " + line);
    edges.push_back({a, b, MWord::parse(alphabet, c)});
  }
  if (!terminals) throw ParseError("graph: missing terminals line");
  return MGraph(std::move(edges), *terminals);
}

MGraph MGraph::from_file(const AlphabetPtr& alphabet, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return from_text(alphabet, buf.str());
}

std::vector<std::string> MGraph::vertices() const {
  std::set<std::string> vs{terminals_.first, terminals_.second};
  for (const auto& e : edges_) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return {vs.begin(), vs.end()};
}

int MGraph::degree(const std::string& v) const {
  int d = 0;
  for (const auto& e : edges_) {
    if (e.u == v) ++d;
    if (e.v == v) ++d;
  }
  return d;
}

bool MGraph::is_terminal(const std::string& v) const {
  return v == terminals_.first || v == terminals_.second;
}

MWord MGraph::edge_label(size_t i, const std::string& from) const {
  const GraphEdge& e = edges_[i];
  if (from == e.u) return e.label;
  if (from == e.v) return op_E(e.label);
  throw std::invalid_argument("edge_label: vertex not on edge");
}

std::string MGraph::to_dot() const {
  std::ostringstream os;
  os << "graph mgraph {\n";
  os << "  " << terminals_.first << " [shape=doublecircle];\n";
  if (terminals_.second != terminals_.first)
    os << "  " << terminals_.second << " [shape=doublecircle];\n";
  for (const auto& e : edges_)
    os << "  \"" << e.u << "\" -- \"" << e.v << "\" [label=\""
       << e.label.render_compact() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string MGraph::signature() const {
  // fresh vertices from subdivision are renamed by first appearance so that
  // equal shapes from different move orders collide in the memo table
  std::vector<std::string> parts;
  for (const auto& e : edges_) {
    bool fwd = e.u <= e.v;
    std::string lab = (fwd ? e.label : op_E(e.label)).render_lower();
    parts.push_back((fwd ? e.u + "," + e.v : e.v + "," + e.u) + ":" + lab);
  }
  std::sort(parts.begin(), parts.end());
  std::map<std::string, std::string> rename;
  int next = 0;
  auto canon = [&](const std::string& v) -> std::string {
    if (v.empty() || v[0] != '_') return v;
    auto [it, inserted] = rename.emplace(v, "_" + std::to_string(next));
    if (inserted) ++next;
    return it->second;
  };
  std::ostringstream os;
  os << terminals_.first << ";" << terminals_.second;
  for (const auto& p : parts) {
    auto comma = p.find(',');
    auto colon = p.find(':');
    os << "|" << canon(p.substr(0, comma)) << ","
       << canon(p.substr(comma + 1, colon - comma - 1)) << p.substr(colon);
  }
  return os.str();
}

namespace {

struct EdgeRef {
  size_t index;
};

bool same_pair(const GraphEdge& e, const std::string& a, const std::string& b) {
  return (e.u == a && e.v == b) || (e.u == b && e.v == a);
}

}  // namespace

std::pair<MGraph, bool> reduce_series(const MGraph& g) {
  // smallest internal degree-2 vertex; the merged edge runs between its
  // neighbours (possibly equal, which makes a self-loop)
  std::vector<std::string> vs = g.vertices();
  for (const auto& m : vs) {
    if (g.is_terminal(m) || g.degree(m) != 2) continue;
    std::vector<size_t> inc;
    for (size_t i = 0; i < g.edges().size(); ++i)
      if (g.edges()[i].u == m || g.edges()[i].v == m) inc.push_back(i);
    if (inc.size() != 2) continue;  // double-counted self-loop, handled by cleanup
    const GraphEdge& e1 = g.edges()[inc[0]];
    const GraphEdge& e2 = g.edges()[inc[1]];
    std::string n1 = e1.u == m ? e1.v : e1.u;
    std::string n2 = e2.u == m ? e2.v : e2.u;
    size_t first_i = inc[0], second_i = inc[1];
    std::string p = n1, q = n2;
    if (n2 < n1) {
      std::swap(p, q);
      std::swap(first_i, second_i);
    }
    // read p -> m -> q; p == q makes a self-loop
    MWord merged = series_reduced(g.edge_label(first_i, p), g.edge_label(second_i, m));
    std::vector<GraphEdge> edges;
    for (size_t i = 0; i < g.edges().size(); ++i)
      if (i != inc[0] && i != inc[1]) edges.push_back(g.edges()[i]);
    edges.push_back({p, q, merged});
    return {MGraph(std::move(edges), g.terminals()), true};
  }
  return {g, false};
}

std::pair<MGraph, bool> reduce_parallel(const MGraph& g) {
  for (size_t i = 0; i < g.edges().size(); ++i) {
    for (size_t j = i + 1; j < g.edges().size(); ++j) {
      const GraphEdge& a = g.edges()[i];
      const GraphEdge& b = g.edges()[j];
      if (a.u == a.v || !same_pair(b, a.u, a.v)) continue;
      std::string p = std::min(a.u, a.v), q = std::max(a.u, a.v);
      MWord la = g.edge_label(i, p);
      MWord lb = g.edge_label(j, p);
      if (lb.render_lower() < la.render_lower()) std::swap(la, lb);
      MWord merged = parallel_reduced(la, lb);
      std::vector<GraphEdge> edges;
      for (size_t k = 0; k < g.edges().size(); ++k)
        if (k != i && k != j) edges.push_back(g.edges()[k]);
      edges.push_back({p, q, merged});
      return {MGraph(std::move(edges), g.terminals()), true};
    }
  }
  return {g, false};
}

bool slide_allowed(const MWord& u, const MWord& w) {
  const MWord ue = op_E(u), we = op_E(w);
  return geq_q(u, w) || geq_q(u, we) || geq_q(ue, w) || geq_q(ue, we);
}

MGraph slide(const MGraph& g, size_t movable, size_t along) {
  if (movable >= g.edges().size() || along >= g.edges().size() || movable == along)
    throw std::invalid_argument("slide: bad edge indices");
  const GraphEdge& u = g.edges()[movable];
  const GraphEdge& w = g.edges()[along];
  // shared endpoint Z, the moving anchor; Y is w's other endpoint
  std::string z, y;
  if (u.u == w.u || u.v == w.u) {
    z = w.u;
    y = w.v;
  } else if (u.u == w.v || u.v == w.v) {
    z = w.v;
    y = w.u;
  } else {
    throw std::invalid_argument("slide: edges share no endpoint");
  }
  if ((u.u == z && u.v == z))
    throw std::invalid_argument("slide: cannot slide a self-loop");
  std::string x = u.u == z ? u.v : u.u;
  if (y == x) throw std::invalid_argument("slide: would create a self-loop");
  if (!slide_allowed(u.label, w.label))
    throw std::invalid_argument(
        "slide: order condition fails: need movable >=_q along for some reading "
        "(l(u) <= l(w) and r(u) >= r(w))");
  std::vector<GraphEdge> edges = g.edges();
  GraphEdge& moved = edges[movable];
  if (moved.u == z) moved.u = y;
  else moved.v = y;
  return MGraph(std::move(edges), g.terminals());
}

namespace {

std::string fresh_vertex(const MGraph& g) {
  std::set<std::string> vs;
  for (const auto& e : g.edges()) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  for (int i = 1;; ++i) {
    std::string name = "_" + std::to_string(i);
    if (!vs.count(name)) return name;
  }
}

}  // namespace

MGraph subdivide(const MGraph& g, size_t i, const MWord& left_label, const MWord& right_label) {
  if (i >= g.edges().size()) throw std::invalid_argument("subdivide: bad edge index");
  const GraphEdge& e = g.edges()[i];
  MWord recomposed = series_reduced(left_label, right_label);
  if (recomposed != zip_reduce(e.label))
    throw std::invalid_argument("subdivide: split labels do not recompose the edge label");
  std::string m = fresh_vertex(g);
  std::vector<GraphEdge> edges;
  for (size_t k = 0; k < g.edges().size(); ++k)
    if (k != i) edges.push_back(g.edges()[k]);
  edges.push_back({e.u, m, left_label});
  edges.push_back({m, e.v, right_label});
  return MGraph(std::move(edges), g.terminals());
}

MGraph delta_to_star(const MGraph& g, const std::array<std::string, 3>& triangle,
                     size_t pivot, const MWord& left_label, const MWord& right_label) {
  if (pivot >= g.edges().size()) throw std::invalid_argument("delta_to_star: bad pivot");
  const GraphEdge pe = g.edges()[pivot];
  std::string apex;
  int matched = 0;
  for (const auto& v : triangle) {
    if (v == pe.u || v == pe.v) ++matched;
    else apex = v;
  }
  if (matched != 2 || apex.empty() || pe.u == pe.v)
    throw std::invalid_argument("delta_to_star: pivot must join two triangle vertices");

  MGraph cur = subdivide(g, pivot, left_label, right_label);
  std::string m = fresh_vertex(g);  // the vertex subdivide just created

  // slide the two non-pivot triangle edges onto the fresh vertex
  for (const std::string& corner : {pe.u, pe.v}) {
    std::optional<size_t> side, rail;
    for (size_t k = 0; k < cur.edges().size(); ++k) {
      const GraphEdge& e = cur.edges()[k];
      if (same_pair(e, apex, corner) && !side) side = k;
      if (same_pair(e, corner, m) && !rail) rail = k;
    }
    if (!side || !rail)
      throw std::invalid_argument("delta_to_star: triangle edge missing");
    cur = slide(cur, *side, *rail);
  }

  auto [merged, changed] = reduce_parallel(cur);
  return changed ? merged : cur;
}

namespace {

struct NormalizeOutcome {
  MGraph graph;
  bool solved = false;
  std::optional<MWord> result;
};

// Deterministic shrink: drop electrically irrelevant structure, then fold
// parallel pairs and series chains until nothing applies. For a (u,u) pair,
// self-loops at u are the payload and parallel merges touching u are left to
// the series walk around the cycle.
NormalizeOutcome normalize(MGraph g) {
  const bool loop_mode = g.terminals().first == g.terminals().second;
  const std::string& t1 = g.terminals().first;
  const std::string& t2 = g.terminals().second;

  for (;;) {
    bool changed = false;

    // components not containing a terminal, dangling vertices, irrelevant
    // self-loops
    {
      std::set<std::string> keep;
      std::deque<std::string> work{t1, t2};
      keep.insert(t1);
      keep.insert(t2);
      while (!work.empty()) {
        std::string v = work.front();
        work.pop_front();
        for (const auto& e : g.edges()) {
          if (e.u == v && !keep.count(e.v)) { keep.insert(e.v); work.push_back(e.v); }
          if (e.v == v && !keep.count(e.u)) { keep.insert(e.u); work.push_back(e.u); }
        }
      }
      std::vector<GraphEdge> edges;
      for (const auto& e : g.edges()) {
        if (!keep.count(e.u) || !keep.count(e.v)) { changed = true; continue; }
        if (e.u == e.v && !(loop_mode && e.u == t1)) { changed = true; continue; }
        edges.push_back(e);
      }
      if (changed) {
        if (edges.empty()) {
          if (loop_mode) {
            MWord zero = s_zero(g.edges().front().label.alphabet());
            return {g, true, zero};
          }
          return {g, false, std::nullopt};
        }
        g = MGraph(std::move(edges), g.terminals());
        continue;
      }
    }

    // dangling non-terminal vertices
    {
      bool dropped = false;
      for (const auto& v : g.vertices()) {
        if (g.is_terminal(v) || g.degree(v) != 1) continue;
        std::vector<GraphEdge> edges;
        for (const auto& e : g.edges())
          if (e.u != v && e.v != v) edges.push_back(e);
        if (edges.empty()) {
          if (loop_mode) {
            MWord zero = s_zero(g.edges().front().label.alphabet());
            return {g, true, zero};
          }
          return {g, false, std::nullopt};
        }
        g = MGraph(std::move(edges), g.terminals());
        dropped = true;
        break;
      }
      if (dropped) continue;
    }

    // parallel pairs. In loop mode a pair touching the terminal keeps its
    // last two edges so the final cycle winds down to a self-loop.
    {
      bool merged = false;
      for (size_t i = 0; i < g.edges().size() && !merged; ++i) {
        for (size_t j = i + 1; j < g.edges().size() && !merged; ++j) {
          const GraphEdge& a = g.edges()[i];
          const GraphEdge& b = g.edges()[j];
          if (a.u == a.v) {
            // parallel self-loops at the terminal fold together in loop mode
            if (!(loop_mode && a.u == t1 && b.u == b.v && b.u == t1)) continue;
          } else {
            if (!same_pair(b, a.u, a.v)) continue;
            if (loop_mode && (a.u == t1 || a.v == t1)) {
              int count = 0;
              for (const auto& e : g.edges())
                if (same_pair(e, a.u, a.v)) ++count;
              if (count <= 2) continue;
            }
          }
          std::string p = std::min(a.u, a.v), q = std::max(a.u, a.v);
          MWord la = g.edge_label(i, p);
          MWord lb = g.edge_label(j, p);
          if (lb.render_lower() < la.render_lower()) std::swap(la, lb);
          std::vector<GraphEdge> edges;
          for (size_t k = 0; k < g.edges().size(); ++k)
            if (k != i && k != j) edges.push_back(g.edges()[k]);
          edges.push_back({p, q, parallel_reduced(la, lb)});
          g = MGraph(std::move(edges), g.terminals());
          merged = true;
        }
      }
      if (merged) continue;
    }

    // series chains
    {
      auto [g2, did] = reduce_series(g);
      if (did) {
        g = std::move(g2);
        continue;
      }
    }

    break;
  }

  // solved?
  if (loop_mode) {
    if (g.edges().size() == 1 && g.edges()[0].u == t1 && g.edges()[0].v == t1) {
      MWord zero = s_zero(g.edges()[0].label.alphabet());
      MWord loop = g.edges()[0].label;
      MWord la = loop, lb = zero;
      if (lb.render_lower() < la.render_lower()) std::swap(la, lb);
      return {g, true, parallel_reduced(la, lb)};
    }
  } else {
    if (g.edges().size() == 1 && same_pair(g.edges()[0], t1, t2))
      return {g, true, g.edge_label(0, t1)};
  }
  return {g, false, std::nullopt};
}

std::vector<MWord> atom_splits(const MWord& label) {
  const AlphabetPtr& alpha = label.alphabet();
  const int n = alpha->size();
  MWord target = zip_reduce(label);
  std::vector<MWord> out;  // flattened (left, right) pairs
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          MWord left(alpha, {static_cast<uint8_t>(a), static_cast<uint8_t>(b)});
          MWord right(alpha, {static_cast<uint8_t>(c), static_cast<uint8_t>(d)});
          if (series_reduced(left, right) == target) {
            out.push_back(left);
            out.push_back(right);
          }
        }
  return out;
}

struct Move {
  MGraph graph;
  int priority;  // lower explores first
};

void collect_moves(const MGraph& g, std::vector<Move>& moves) {
  const auto vs = g.vertices();

  // delta-to-star on every triangle/pivot/split that admits the two slides
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j)
      for (size_t k = j + 1; k < vs.size(); ++k) {
        std::array<std::string, 3> tri{vs[i], vs[j], vs[k]};
        std::vector<size_t> tri_edges;
        for (size_t e = 0; e < g.edges().size(); ++e) {
          const GraphEdge& ed = g.edges()[e];
          bool on = (same_pair(ed, tri[0], tri[1]) || same_pair(ed, tri[0], tri[2]) ||
                     same_pair(ed, tri[1], tri[2]));
          if (on) tri_edges.push_back(e);
        }
        bool covers01 = false, covers02 = false, covers12 = false;
        for (size_t e : tri_edges) {
          const GraphEdge& ed = g.edges()[e];
          covers01 |= same_pair(ed, tri[0], tri[1]);
          covers02 |= same_pair(ed, tri[0], tri[2]);
          covers12 |= same_pair(ed, tri[1], tri[2]);
        }
        if (!(covers01 && covers02 && covers12)) continue;
        for (size_t pivot : tri_edges) {
          const GraphEdge& pe = g.edges()[pivot];
          std::vector<MWord> splits = atom_splits(pe.label);
          MWord zero = s_zero(pe.label.alphabet());
          MWord reduced = zip_reduce(pe.label);
          splits.push_back(reduced);
          splits.push_back(zero);
          splits.push_back(zero);
          splits.push_back(reduced);
          for (size_t s = 0; s + 1 < splits.size(); s += 2) {
            try {
              moves.push_back({delta_to_star(g, tri, pivot, splits[s], splits[s + 1]), 0});
            } catch (const std::invalid_argument&) {
            }
          }
        }
      }

  // slides; double slides of one edge across equal-pair rails come first
  // because they tend to create parallel pairs
  for (size_t u = 0; u < g.edges().size(); ++u) {
    for (size_t w = 0; w < g.edges().size(); ++w) {
      if (u == w) continue;
      const GraphEdge& ue = g.edges()[u];
      const GraphEdge& we = g.edges()[w];
      if (ue.u == ue.v) continue;
      bool share = ue.u == we.u || ue.u == we.v || ue.v == we.u || ue.v == we.v;
      if (!share) continue;
      try {
        MGraph g1 = slide(g, u, w);
        auto creates_pair = [&](const MGraph& gg) {
          const GraphEdge& moved = gg.edges()[u];
          for (size_t e = 0; e < gg.edges().size(); ++e)
            if (e != u && same_pair(gg.edges()[e], moved.u, moved.v)) return true;
          return false;
        };
        // second anchor across another rail (the paper's simultaneous slide)
        for (size_t w2 = 0; w2 < g1.edges().size(); ++w2) {
          if (w2 == u || w2 == w) continue;
          try {
            MGraph g2 = slide(g1, u, w2);
            bool dup2 = creates_pair(g2);
            moves.push_back({std::move(g2), dup2 ? 1 : 4});
          } catch (const std::invalid_argument&) {
          }
        }
        bool dup = creates_pair(g1);
        moves.push_back({std::move(g1), dup ? 2 : 3});
      } catch (const std::invalid_argument&) {
      }
    }
  }

  // s-zero subdivisions
  for (size_t e = 0; e < g.edges().size(); ++e) {
    const GraphEdge& ed = g.edges()[e];
    if (ed.u == ed.v) continue;
    MWord zero = s_zero(ed.label.alphabet());
    MWord reduced = zip_reduce(ed.label);
    try {
      moves.push_back({subdivide(g, e, reduced, zero), 5});
    } catch (const std::invalid_argument&) {
    }
    try {
      moves.push_back({subdivide(g, e, zero, reduced), 5});
    } catch (const std::invalid_argument&) {
    }
  }
}

}  // namespace

ThetaResult theta(const MGraph& g, const std::pair<std::string, std::string>& pair,
                  const ThetaOptions& opts) {
  ThetaResult res;
  MGraph start(g.edges(), pair);

  struct State {
    MGraph graph;
    int depth;
  };

  std::set<std::string> visited;
  std::deque<State> queue;
  std::vector<MWord> found;

  auto push = [&](MGraph graph, int depth) {
    auto norm = normalize(std::move(graph));
    if (norm.result) {
      bool dup = false;
      for (const auto& w : found) dup |= (w == *norm.result);
      if (!dup) found.push_back(*norm.result);
      return;
    }
    if (!norm.solved && depth <= opts.max_depth) {
      std::string sig = norm.graph.signature();
      if (visited.insert(sig).second) queue.push_back({std::move(norm.graph), depth});
    }
  };

  push(start, 0);
  int found_at_depth = -1;
  while (!queue.empty() && res.states_explored < opts.node_budget) {
    State st = std::move(queue.front());
    queue.pop_front();
    ++res.states_explored;
    res.depth_used = std::max(res.depth_used, st.depth);
    if (found_at_depth >= 0 && st.depth > found_at_depth + 1) continue;
    if (st.depth >= opts.max_depth) continue;

    std::vector<Move> moves;
    collect_moves(st.graph, moves);
    std::stable_sort(moves.begin(), moves.end(),
                     [](const Move& a, const Move& b) { return a.priority < b.priority; });
    for (auto& m : moves) {
      size_t before = found.size();
      push(std::move(m.graph), st.depth + 1);
      if (found.size() > before && found_at_depth < 0) found_at_depth = st.depth + 1;
    }
  }

  res.candidates = found;
  if (found.empty()) {
    res.reduced = false;
    res.message = "not reduced within depth " + std::to_string(opts.max_depth);
    return res;
  }

  std::vector<MWord> canon;
  for (const auto& w : found)
    canon.push_back(opts.canonicalize ? zip_canonical(w) : w);
  for (size_t i = 1; i < canon.size(); ++i)
    if (!phi_equivalent(canon[0], canon[i])) res.phi_consistent = false;

  auto better = [](const MWord& a, const MWord& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    std::string ca = a.render_compact(), cb = b.render_compact();
    if (ca.size() != cb.size()) return ca.size() < cb.size();
    return a.render_lower() < b.render_lower();
  };
  MWord best = canon[0];
  for (const auto& w : canon)
    if (better(w, best)) best = w;

  res.reduced = true;
  res.jorb = best;
  return res;
}

}  // namespace jorb
