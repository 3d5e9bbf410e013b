#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/errors.hpp"

namespace sgt {

enum class Sign : unsigned char { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

struct Edge {
  int u = 0;
  int v = 0;
  Sign sign = Sign::plus;
  int label = 0;

  bool is_loop() const { return u == v; }
  bool operator==(const Edge&) const = default;
};

/// Labelled signed multigraph. Loops and parallel edges are allowed; labels
/// are a bijection with 1..n and edges are stored in label order.
class SignedGraph {
 public:
  SignedGraph() = default;
  SignedGraph(int num_vertices, std::vector<Edge> edges);

  int num_vertices() const { return num_vertices_; }
  std::span<const Edge> edges() const { return edges_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int label) const;
  bool has_label(int label) const {
    return label >= 1 && label <= num_edges();
  }

  /// Throws validation_error on duplicate labels, label gaps, or endpoints
  /// out of range. Construction already validates; this re-checks.
  void validate() const;

  int num_components() const;
  bool is_connected() const { return num_components() <= 1; }
  /// Size of every maximal spanning forest: num_vertices - num_components.
  int rank() const { return num_vertices_ - num_components(); }

  int count_sign(Sign s) const;

  bool operator==(const SignedGraph&) const = default;

  /// Text format: `v <num_vertices>` then `e <u> <v> <+|-> <label>` lines,
  /// 0-based vertices, `#` starts a comment.
  static SignedGraph parse(std::string_view text);
  std::string to_text() const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;  // sorted by label
};

/// Sorted labels of one maximal spanning forest.
using LabelSet = std::vector<int>;

/// Calls fn once per maximal spanning forest, in lexicographic order of the
/// sorted label sets. Works on disconnected graphs (maximal forests).
void for_each_spanning_forest(const SignedGraph& g, const std::function<void(const LabelSet&)>& fn);
std::vector<LabelSet> spanning_forests(const SignedGraph& g);

/// Unique cycle in tree + f, as sorted labels including f. For a loop f this
/// is {f}. f must not be in the tree.
LabelSet fundamental_cycle(const SignedGraph& g, const LabelSet& tree, int f);

/// All non-tree labels f such that (tree \ e) + f is again a maximal forest;
/// empty for a bridge. e must be in the tree.
LabelSet fundamental_cut(const SignedGraph& g, const LabelSet& tree, int e);

enum class Activity : unsigned char {
  internally_active,
  internally_inactive,
  externally_active,
  externally_inactive,
};

struct TreeActivities {
  LabelSet tree;
  std::map<int, Activity> classification;
};

/// Classifies every edge relative to a maximal spanning forest: a tree edge
/// is internally active iff its label is smallest in its fundamental cut
/// (vacuously for bridges); a non-tree edge is externally active iff its
/// label is smallest on its fundamental cycle (always for loops).
TreeActivities activities(const SignedGraph& g, const LabelSet& tree);

/// A minor together with the label audit map. Labels are rank-compressed to
/// 1..n-1 preserving relative order, which is all the activity machinery
/// depends on.
struct Minor {
  SignedGraph graph;
  std::map<int, int> old_to_new;
};

Minor delete_edge(const SignedGraph& g, int label);
/// Contracting a loop is rejected.
Minor contract_edge(const SignedGraph& g, int label);

}  // namespace sgt
