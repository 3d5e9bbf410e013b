#include "sgt/sgraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace sgt {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

}  // namespace

SignedGraph::SignedGraph(int num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices), edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) { return a.label < b.label; });
  validate();
}

const Edge& SignedGraph::edge(int label) const {
  if (!has_label(label)) throw usage_error("unknown edge label " + std::to_string(label));
  return edges_[static_cast<std::size_t>(label - 1)];
}

void SignedGraph::validate() const {
  if (num_vertices_ <= 0) throw validation_error("graph needs at least one vertex");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.label != static_cast<int>(i) + 1)
      throw validation_error("edge labels must be a bijection with 1..n (got label " +
                             std::to_string(e.label) + " at position " + std::to_string(i + 1) + ")");
    if (e.u < 0 || e.u >= num_vertices_ || e.v < 0 || e.v >= num_vertices_)
      throw validation_error("edge " + std::to_string(e.label) + " has a vertex out of range");
  }
}

int SignedGraph::num_components() const {
  UnionFind uf(num_vertices_);
  int comps = num_vertices_;
  for (const Edge& e : edges_)
    if (uf.unite(e.u, e.v)) --comps;
  return comps;
}

int SignedGraph::count_sign(Sign s) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [s](const Edge& e) { return e.sign == s; }));
}

SignedGraph SignedGraph::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int nv = -1;
  std::vector<Edge> edges;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v") {
      if (nv != -1) throw validation_error("duplicate v line");
      if (!(ls >> nv)) throw validation_error("bad v line at " + std::to_string(lineno));
    } else if (tag == "e") {
      if (nv == -1) throw validation_error("e line before v line");
      Edge e;
      std::string sign;
      if (!(ls >> e.u >> e.v >> sign >> e.label) || (sign != "+" && sign != "-"))
        throw validation_error("bad e line at " + std::to_string(lineno));
      e.sign = sign == "+" ? Sign::plus : Sign::minus;
      edges.push_back(e);
    } else {
      throw validation_error("unknown line tag '" + tag + "' at " + std::to_string(lineno));
    }
  }
  if (nv == -1) throw validation_error("missing v line");
  return SignedGraph(nv, std::move(edges));
}

std::string SignedGraph::to_text() const {
  std::ostringstream os;
  os << "v " << num_vertices_ << "\n";
  for (const Edge& e : edges_)
    os << "e " << e.u << " " << e.v << " " << sign_char(e.sign) << " " << e.label << "\n";
  return os.str();
}

namespace {

void enumerate_forests(const SignedGraph& g, int idx, int chosen, int target, UnionFind& uf,
                       LabelSet& current, const std::function<void(const LabelSet&)>& fn) {
  if (chosen == target) {
    fn(current);
    return;
  }
  int n = g.num_edges();
  if (n - idx + 1 < target - chosen) return;  // not enough edges left
  const Edge& e = g.edge(idx);
  if (uf.find(e.u) != uf.find(e.v)) {
    UnionFind saved = uf;
    uf.unite(e.u, e.v);
    current.push_back(idx);
    enumerate_forests(g, idx + 1, chosen + 1, target, uf, current, fn);
    current.pop_back();
    uf = std::move(saved);
  }
  enumerate_forests(g, idx + 1, chosen, target, uf, current, fn);
}

}  // namespace

void for_each_spanning_forest(const SignedGraph& g, const std::function<void(const LabelSet&)>& fn) {
  g.validate();
  UnionFind uf(g.num_vertices());
  LabelSet current;
  enumerate_forests(g, 1, 0, g.rank(), uf, current, fn);
}

std::vector<LabelSet> spanning_forests(const SignedGraph& g) {
  std::vector<LabelSet> out;
  for_each_spanning_forest(g, [&](const LabelSet& t) { out.push_back(t); });
  return out;
}

namespace {

// Path between u and v using only the given tree edges; labels on the path.
// Returns false if u and v are in different tree components.
bool tree_path(const SignedGraph& g, const LabelSet& tree, int u, int v, LabelSet& path_labels) {
  if (u == v) {
    path_labels.clear();
    return true;
  }
  std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(g.num_vertices()));
  for (int lbl : tree) {
    const Edge& e = g.edge(lbl);
    if (e.is_loop()) continue;
    adj[static_cast<std::size_t>(e.u)].emplace_back(e.v, lbl);
    adj[static_cast<std::size_t>(e.v)].emplace_back(e.u, lbl);
  }
  std::vector<std::pair<int, int>> prev(static_cast<std::size_t>(g.num_vertices()), {-1, -1});
  std::deque<int> q{u};
  prev[static_cast<std::size_t>(u)] = {u, 0};
  while (!q.empty()) {
    int x = q.front();
    q.pop_front();
    if (x == v) break;
    for (auto [y, lbl] : adj[static_cast<std::size_t>(x)]) {
      if (prev[static_cast<std::size_t>(y)].first == -1) {
        prev[static_cast<std::size_t>(y)] = {x, lbl};
        q.push_back(y);
      }
    }
  }
  if (prev[static_cast<std::size_t>(v)].first == -1) return false;
  path_labels.clear();
  for (int x = v; x != u; x = prev[static_cast<std::size_t>(x)].first)
    path_labels.push_back(prev[static_cast<std::size_t>(x)].second);
  return true;
}

}  // namespace

LabelSet fundamental_cycle(const SignedGraph& g, const LabelSet& tree, int f) {
  if (std::binary_search(tree.begin(), tree.end(), f))
    throw usage_error("fundamental_cycle: edge is in the tree");
  const Edge& ef = g.edge(f);
  if (ef.is_loop()) return {f};
  LabelSet path;
  if (!tree_path(g, tree, ef.u, ef.v, path))
    throw usage_error("fundamental_cycle: edge endpoints not connected by the tree");
  path.push_back(f);
  std::sort(path.begin(), path.end());
  return path;
}

LabelSet fundamental_cut(const SignedGraph& g, const LabelSet& tree, int e) {
  if (!std::binary_search(tree.begin(), tree.end(), e))
    throw usage_error("fundamental_cut: edge is not in the tree");
  // Side of the split component each vertex lands on after removing e.
  UnionFind uf(g.num_vertices());
  for (int lbl : tree)
    if (lbl != e) uf.unite(g.edge(lbl).u, g.edge(lbl).v);
  const Edge& ee = g.edge(e);
  int side_u = uf.find(ee.u), side_v = uf.find(ee.v);
  LabelSet cut;
  for (const Edge& f : g.edges()) {
    if (std::binary_search(tree.begin(), tree.end(), f.label)) continue;
    int a = uf.find(f.u), b = uf.find(f.v);
    if ((a == side_u && b == side_v) || (a == side_v && b == side_u)) cut.push_back(f.label);
  }
  return cut;
}

TreeActivities activities(const SignedGraph& g, const LabelSet& tree) {
  TreeActivities out;
  out.tree = tree;
  // smallest external label whose fundamental cycle passes through each tree edge
  std::map<int, int> min_external;
  std::vector<bool> in_tree(static_cast<std::size_t>(g.num_edges()) + 1, false);
  for (int lbl : tree) in_tree[static_cast<std::size_t>(lbl)] = true;
  for (const Edge& f : g.edges()) {
    if (in_tree[static_cast<std::size_t>(f.label)]) continue;
    LabelSet cyc = fundamental_cycle(g, tree, f.label);
    out.classification[f.label] = (f.label == cyc.front()) ? Activity::externally_active
                                                           : Activity::externally_inactive;
    for (int lbl : cyc)
      if (lbl != f.label) {
        auto [it, fresh] = min_external.emplace(lbl, f.label);
        if (!fresh) it->second = std::min(it->second, f.label);
      }
  }
  for (int lbl : tree) {
    auto it = min_external.find(lbl);
    bool active = (it == min_external.end()) || (lbl < it->second);
    out.classification[lbl] = active ? Activity::internally_active : Activity::internally_inactive;
  }
  return out;
}

namespace {

Minor build_minor(const SignedGraph& g, int removed_label, int merge_u, int merge_v) {
  // merge_u/merge_v < 0 means plain deletion
  std::vector<Edge> edges;
  std::map<int, int> relabel;
  int next = 1;
  for (const Edge& e : g.edges()) {
    if (e.label == removed_label) continue;
    relabel[e.label] = next;
    Edge ne = e;
    ne.label = next++;
    edges.push_back(ne);
  }
  int nv = g.num_vertices();
  if (merge_u >= 0) {
    int keep = std::min(merge_u, merge_v), drop = std::max(merge_u, merge_v);
    auto remap = [keep, drop](int w) { return w == drop ? keep : (w > drop ? w - 1 : w); };
    for (Edge& e : edges) {
      e.u = remap(e.u);
      e.v = remap(e.v);
    }
    nv -= 1;
  }
  return Minor{SignedGraph(nv, std::move(edges)), std::move(relabel)};
}

}  // namespace

Minor delete_edge(const SignedGraph& g, int label) {
  g.edge(label);  // existence check
  return build_minor(g, label, -1, -1);
}

Minor contract_edge(const SignedGraph& g, int label) {
  const Edge& e = g.edge(label);
  if (e.is_loop()) throw usage_error("contracting a loop is not defined here");
  return build_minor(g, label, e.u, e.v);
}

}  // namespace sgt
