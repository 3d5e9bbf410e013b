#include "sgt/tensor.hpp"

#include <algorithm>

namespace sgt {

SignedGraph tensor_graph(const TensorSpec& spec) {
  spec.m.validate();
  spec.n.validate();
  if (!spec.n.is_connected()) throw usage_error("tensor: n must be connected");
  const Edge& e = spec.n.edge(spec.e);
  if (e.is_loop()) throw usage_error("tensor: distinguished edge must not be a loop");

  std::vector<int> matched;
  for (const Edge& me : spec.m.edges())
    if (me.sign == spec.sign) {
      if (me.is_loop()) throw usage_error("tensor: cannot replace a loop of m");
      matched.push_back(me.label);
    }
  if (!spec.attach.empty() && spec.attach.size() != matched.size())
    throw usage_error("tensor: attachment bits must match the number of replaced edges");

  Minor ndel = delete_edge(spec.n, spec.e);

  std::vector<Edge> out_edges;
  int next_label = 1;
  int next_vertex = spec.m.num_vertices();
  std::size_t copy_idx = 0;
  for (const Edge& me : spec.m.edges()) {
    if (me.sign != spec.sign) {
      Edge ne = me;
      ne.label = next_label++;
      out_edges.push_back(ne);
      continue;
    }
    bool flip = !spec.attach.empty() && spec.attach[copy_idx];
    ++copy_idx;
    // vertex map for this copy of n\e
    std::vector<int> vmap(static_cast<std::size_t>(spec.n.num_vertices()), -1);
    vmap[static_cast<std::size_t>(e.u)] = flip ? me.v : me.u;
    vmap[static_cast<std::size_t>(e.v)] = flip ? me.u : me.v;
    for (const Edge& ce : ndel.graph.edges()) {
      for (int w : {ce.u, ce.v})
        if (vmap[static_cast<std::size_t>(w)] < 0) vmap[static_cast<std::size_t>(w)] = next_vertex++;
      Edge ne;
      ne.u = vmap[static_cast<std::size_t>(ce.u)];
      ne.v = vmap[static_cast<std::size_t>(ce.v)];
      ne.sign = ce.sign;
      ne.label = next_label++;
      out_edges.push_back(ne);
    }
  }
  return SignedGraph(next_vertex, std::move(out_edges));
}

Substitution tensor_substitution(Sign sign, const SignedGraph& n, int e) {
  if (delete_edge(n, e).graph.num_components() > n.num_components())
    throw usage_error(
        "tensor: the distinguished edge must not be a bridge (no cycle of n passes through it)");
  TuttePair tc = tctl(n, e);
  PolyZ t_del = tutte_activity(delete_edge(n, e).graph);
  PolyZ t_con = tutte_activity(contract_edge(n, e).graph);
  Substitution sub = Substitution::identity(VarSet::lambda8());
  const char s = sign_char(sign);
  sub.set(std::string("x") + s, std::move(t_del));
  sub.set(std::string("A") + s, std::move(tc.t_l));
  sub.set(std::string("y") + s, std::move(t_con));
  sub.set(std::string("B") + s, std::move(tc.t_c));
  return sub;
}

PolyZ tensor_subst(const PolyZ& t_m, Sign sign, const SignedGraph& n, int e) {
  return tensor_substitution(sign, n, e).apply(t_m);
}

std::pair<SignedGraph, int> thickening(int k, Sign sign) {
  if (k < 1) throw usage_error("thickening needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 1; i <= k + 1; ++i) edges.push_back(Edge{0, 1, sign, i});
  return {SignedGraph(2, std::move(edges)), k + 1};
}

std::pair<SignedGraph, int> stretch(int k, Sign sign) {
  if (k < 1) throw usage_error("stretch needs k >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i <= k; ++i) edges.push_back(Edge{i, (i + 1) % (k + 1), sign, i + 1});
  return {SignedGraph(k + 1, std::move(edges)), k + 1};
}

PolyZ unsigned_tensor(const PolyZ& t_m, int rank_m, int size_m, const SignedGraph& n, int e) {
  if (!(*t_m.varset() == *VarSet::xy2()))
    throw usage_error("unsigned_tensor expects a polynomial over {x, y}");
  if (rank_m < 0 || size_m < rank_m) throw usage_error("unsigned_tensor: bad rank or size");

  auto [t_l, t_c] = unsigned_tctl(n, e);
  PolyZ t_del = unsigned_tutte(delete_edge(n, e).graph);
  PolyZ t_con = unsigned_tutte(contract_edge(n, e).graph);

  auto powers = [](const PolyZ& base, int max_exp) {
    std::vector<PolyZ> p{PolyZ::constant(VarSet::xy2(), 1)};
    for (int i = 1; i <= max_exp; ++i) p.push_back(p.back() * base);
    return p;
  };
  const int cosize = size_m - rank_m;
  auto p_del = powers(t_del, rank_m), p_con = powers(t_con, cosize);
  auto p_l = powers(t_l, rank_m), p_c = powers(t_c, cosize);

  PolyZ out(VarSet::xy2());
  for (const auto& [m, coeff] : t_m.terms()) {
    const int i = m[0], j = m[1];
    if (i > rank_m || j > cosize)
      throw usage_error("unsigned_tensor: monomial exceeds the rank grading of the stated graph");
    out += coeff * (p_del[static_cast<std::size_t>(i)] * p_con[static_cast<std::size_t>(j)] *
                    p_l[static_cast<std::size_t>(rank_m - i)] * p_c[static_cast<std::size_t>(cosize - j)]);
  }
  return out;
}

}  // namespace sgt
