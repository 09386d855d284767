#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jorb/word.hpp"

namespace jorb {

/// Jorb-labelled edge; the label is read in the u -> v direction, reading it
/// v -> u gives the reversal.
struct GraphEdge {
  std::string u;
  std::string v;
  MWord label;
};

/// Two-terminal multigraph with jorb-labelled edges. Values are immutable;
/// operations return modified copies.
class MGraph {
public:
  MGraph(std::vector<GraphEdge> edges, std::pair<std::string, std::string> terminals);

  /// Edge list format: `u v <jorb>` lines plus one `terminals u v` line;
  /// '#' starts a comment.
  static MGraph from_text(const AlphabetPtr& alphabet, const std::string& text);
  static MGraph from_file(const AlphabetPtr& alphabet, const std::string& path);

  const std::vector<GraphEdge>& edges() const { return edges_; }
  const std::pair<std::string, std::string>& terminals() const { return terminals_; }
  std::vector<std::string> vertices() const;
  int degree(const std::string& v) const;
  bool is_terminal(const std::string& v) const;

  MWord edge_label(size_t i, const std::string& from) const;

  std::string to_dot() const;
  std::string signature() const;

private:
  std::vector<GraphEdge> edges_;
  std::pair<std::string, std::string> terminals_;
};

/// One series merge at an internal degree-2 vertex; unchanged + flag when no
/// such vertex exists. Terminal vertices are never eliminated.
std::pair<MGraph, bool> reduce_series(const MGraph& g);

/// One parallel merge of a duplicated vertex pair; unchanged + flag when the
/// edge multiset has no duplicate pair.
std::pair<MGraph, bool> reduce_parallel(const MGraph& g);

/// Re-anchor edge `movable` across edge `along`: the shared endpoint of the
/// two edges moves to the other endpoint of `along`. Requires u >=_q w for
/// some reading of the two labels; throws otherwise.
MGraph slide(const MGraph& g, size_t movable, size_t along);
bool slide_allowed(const MWord& movable_label, const MWord& along_label);

/// Split edge `i` into left_label (u -> fresh) and right_label (fresh -> v).
/// The series of the two parts must reduce to the edge's reduced label.
MGraph subdivide(const MGraph& g, size_t i, const MWord& left_label, const MWord& right_label);

/// Triangle-to-star: subdivide the pivot edge of triangle {i,j,k} with the
/// given split, slide the two remaining triangle edges onto the fresh
/// vertex, and parallel-merge them there.
MGraph delta_to_star(const MGraph& g, const std::array<std::string, 3>& triangle,
                     size_t pivot, const MWord& left_label, const MWord& right_label);

struct ThetaOptions {
  int max_depth = 6;
  size_t node_budget = 60000;
  bool canonicalize = true;
};

struct ThetaResult {
  bool reduced = false;
  std::optional<MWord> jorb;          // canonical representative
  std::vector<MWord> candidates;      // distinct raw results found
  bool phi_consistent = true;
  size_t states_explored = 0;
  int depth_used = 0;
  std::string message;
};

/// Reduce the graph between the terminal pair: deterministic
/// series/parallel/cleanup passes, then bounded search over delta-star
/// moves, slides and s-zero subdivisions. theta(g, (u,u)) reduces everything
/// to self-loops at u and caps the fold with the s-zero, yielding the s-core
/// representative.
ThetaResult theta(const MGraph& g, const std::pair<std::string, std::string>& pair,
                  const ThetaOptions& opts = {});

}  // namespace jorb
