#include "sgt/tutte.hpp"

#include <algorithm>
#include <map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgt/parallel.hpp"
#include "sgt/quotient.hpp"

namespace sgt {

namespace {

// lambda8 slot of one edge's contribution: x,y,A,B blocks at 0,2,4,6 plus 1
// for negative sign
std::size_t slot(Sign s, Activity a) {
  std::size_t base = 0;
  switch (a) {
    case Activity::internally_active: base = 0; break;
    case Activity::externally_active: base = 2; break;
    case Activity::internally_inactive: base = 4; break;
    case Activity::externally_inactive: base = 6; break;
  }
  return base + (s == Sign::minus ? 1 : 0);
}

Monomial forest_monomial(const SignedGraph& g, const LabelSet& tree) {
  TreeActivities act = activities(g, tree);
  Monomial m(8, 0);
  for (const auto& [lbl, a] : act.classification) ++m[slot(g.edge(lbl).sign, a)];
  return m;
}

constexpr std::size_t kParallelForestThreshold = 256;

}  // namespace

PolyZ tutte_activity_serial(const SignedGraph& g) {
  PolyZ out(VarSet::lambda8());
  for_each_spanning_forest(g, [&](const LabelSet& tree) { out.add_term(forest_monomial(g, tree), 1); });
  return out;
}

PolyZ tutte_activity_parallel(const SignedGraph& g) {
#ifdef _OPENMP
  std::vector<LabelSet> forests = spanning_forests(g);
  int nt = num_threads();
#pragma omp parallel num_threads(nt > 0 ? nt : omp_get_max_threads())
  { nt = omp_get_num_threads(); }
  std::vector<PolyZ> partial(static_cast<std::size_t>(nt), PolyZ(VarSet::lambda8()));
#pragma omp parallel num_threads(nt)
  {
    PolyZ& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 16)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(forests.size()); ++i)
      mine.add_term(forest_monomial(g, forests[static_cast<std::size_t>(i)]), 1);
  }
  PolyZ out = std::move(partial[0]);
  for (std::size_t i = 1; i < partial.size(); ++i) out += partial[i];
  return out;
#else
  return tutte_activity_serial(g);
#endif
}

PolyZ tutte_activity(const SignedGraph& g) {
  if (parallel_enabled() &&
      static_cast<std::size_t>(g.num_edges()) * static_cast<std::size_t>(g.num_vertices()) >=
          kParallelForestThreshold / 4 &&
      g.num_edges() >= 10)
    return tutte_activity_parallel(g);
  return tutte_activity_serial(g);
}

namespace {

PolyZ signed_var(const char* base, Sign s) {
  std::string name = base;
  name += sign_char(s);
  return PolyZ::variable(VarSet::lambda8(), name);
}

// Vertices renamed by first appearance, isolated vertices dropped; captures
// the graph up to the renamings deletion-contraction produces.
std::vector<int> encode(const SignedGraph& g) {
  std::vector<int> key;
  key.reserve(static_cast<std::size_t>(g.num_edges()) * 3 + 1);
  std::map<int, int> vmap;
  for (const Edge& e : g.edges()) {
    auto id = [&](int w) {
      auto [it, fresh] = vmap.emplace(w, static_cast<int>(vmap.size()));
      return it->second;
    };
    int a = id(e.u), b = id(e.v);
    key.push_back(a);
    key.push_back(b);
    key.push_back(e.sign == Sign::plus ? 1 : -1);
  }
  return key;
}

bool is_bridge(const SignedGraph& g, int label) {
  return delete_edge(g, label).graph.num_components() > g.num_components();
}

PolyZ delcon_rec(const SignedGraph& g, std::map<std::vector<int>, PolyZ>* memo) {
  if (g.num_edges() == 0) return PolyZ::constant(VarSet::lambda8(), 1);
  std::vector<int> key;
  if (memo) {
    key = encode(g);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }
  const int lbl = g.num_edges();  // branch on the highest label
  const Edge& e = g.edge(lbl);
  PolyZ result(VarSet::lambda8());
  if (e.is_loop()) {
    result = signed_var("y", e.sign) * delcon_rec(delete_edge(g, lbl).graph, memo);
  } else if (is_bridge(g, lbl)) {
    result = signed_var("x", e.sign) * delcon_rec(contract_edge(g, lbl).graph, memo);
  } else {
    result = signed_var("B", e.sign) * delcon_rec(delete_edge(g, lbl).graph, memo) +
             signed_var("A", e.sign) * delcon_rec(contract_edge(g, lbl).graph, memo);
  }
  if (memo) memo->emplace(std::move(key), result);
  return result;
}

}  // namespace

PolyZ tutte_delcon(const SignedGraph& g, bool memoize) {
  g.validate();
  std::map<std::vector<int>, PolyZ> memo;
  return delcon_rec(g, memoize ? &memo : nullptr);
}

namespace {

// Same graph with e moved to the largest label, everything else
// rank-compressed in order. Returns the new graph; e becomes label n.
SignedGraph relabel_e_largest(const SignedGraph& n, int e) {
  std::vector<Edge> edges;
  int next = 1;
  for (const Edge& ed : n.edges()) {
    if (ed.label == e) continue;
    Edge ne = ed;
    ne.label = next++;
    edges.push_back(ne);
  }
  Edge moved = n.edge(e);
  moved.label = next;
  edges.push_back(moved);
  return SignedGraph(n.num_vertices(), std::move(edges));
}

}  // namespace

TuttePair tctl(const SignedGraph& n, int e) {
  n.validate();
  const Edge& edge_e = n.edge(e);
  if (!n.is_connected()) throw usage_error("tctl needs a connected graph");
  if (edge_e.is_loop()) throw usage_error("tctl: distinguished edge must not be a loop");

  SignedGraph g = relabel_e_largest(n, e);
  const int elbl = g.num_edges();
  const Edge& ee = g.edge(elbl);

  Minor del = delete_edge(g, elbl);
  Minor con = contract_edge(g, elbl);
  // e had the largest label, so both audit maps are identities on 1..n-1
  auto to_g = [](int lbl) { return lbl; };

  PolyZ t_l(VarSet::lambda8());
  for_each_spanning_forest(del.graph, [&](const LabelSet& tree) {
    TreeActivities act = activities(del.graph, tree);
    // tree edges on the cycle closed by e, when e's endpoints are connected
    LabelSet on_cycle;
    {
      LabelSet g_tree;
      for (int lbl : tree) g_tree.push_back(to_g(lbl));
      std::sort(g_tree.begin(), g_tree.end());
      LabelSet cyc;
      // e's endpoints live in g; deletion kept vertex ids
      try {
        cyc = fundamental_cycle(g, g_tree, elbl);
      } catch (const usage_error&) {
        cyc.clear();  // e is a bridge here: no cycle, no demotions
      }
      on_cycle = cyc;
    }
    Monomial m(8, 0);
    for (const auto& [lbl, a] : act.classification) {
      Activity eff = a;
      if (a == Activity::internally_active &&
          std::binary_search(on_cycle.begin(), on_cycle.end(), to_g(lbl)))
        eff = Activity::internally_inactive;
      ++m[slot(del.graph.edge(lbl).sign, eff)];
    }
    t_l.add_term(m, 1);
  });

  PolyZ t_c(VarSet::lambda8());
  for_each_spanning_forest(con.graph, [&](const LabelSet& tree) {
    TreeActivities act = activities(con.graph, tree);
    // spanning tree of g with e restored
    LabelSet g_tree;
    for (int lbl : tree) g_tree.push_back(to_g(lbl));
    g_tree.push_back(elbl);
    std::sort(g_tree.begin(), g_tree.end());
    Monomial m(8, 0);
    for (const auto& [lbl, a] : act.classification) {
      Activity eff = a;
      if (a == Activity::externally_active) {
        LabelSet cyc = fundamental_cycle(g, g_tree, to_g(lbl));
        if (std::binary_search(cyc.begin(), cyc.end(), elbl)) eff = Activity::externally_inactive;
      }
      ++m[slot(con.graph.edge(lbl).sign, eff)];
    }
    t_c.add_term(m, 1);
  });

  (void)ee;
  return TuttePair{std::move(t_l), std::move(t_c)};
}

bool verify_tctl_system(const SignedGraph& n, int e) {
  TuttePair tc = tctl(n, e);
  PolyZ t_del = tutte_activity(delete_edge(n, e).graph);
  PolyZ t_con = tutte_activity(contract_edge(n, e).graph);
  for (Sign s : {Sign::plus, Sign::minus}) {
    PolyZ lhs1 = signed_var("A", s) * (t_con - tc.t_c);
    PolyZ rhs1 = (signed_var("y", s) - signed_var("B", s)) * tc.t_l;
    if (!eq_mod_I1(lhs1, rhs1)) return false;
    PolyZ lhs2 = signed_var("B", s) * (t_del - tc.t_l);
    PolyZ rhs2 = (signed_var("x", s) - signed_var("A", s)) * tc.t_c;
    if (!eq_mod_I1(lhs2, rhs2)) return false;
  }
  return true;
}

namespace {

Monomial unsigned_monomial(const TreeActivities& act) {
  Monomial m(2, 0);
  for (const auto& [lbl, a] : act.classification) {
    if (a == Activity::internally_active) ++m[0];
    if (a == Activity::externally_active) ++m[1];
  }
  return m;
}

}  // namespace

PolyZ unsigned_tutte(const SignedGraph& g) {
  PolyZ out(VarSet::xy2());
  for_each_spanning_forest(g, [&](const LabelSet& tree) {
    out.add_term(unsigned_monomial(activities(g, tree)), 1);
  });
  return out;
}

std::pair<PolyZ, PolyZ> unsigned_tctl(const SignedGraph& n, int e) {
  n.validate();
  if (!n.is_connected()) throw usage_error("unsigned_tctl needs a connected graph");
  if (n.edge(e).is_loop()) throw usage_error("unsigned_tctl: distinguished edge must not be a loop");

  SignedGraph g = relabel_e_largest(n, e);
  const int elbl = g.num_edges();
  Minor del = delete_edge(g, elbl);
  Minor con = contract_edge(g, elbl);

  PolyZ t_l(VarSet::xy2());
  for_each_spanning_forest(del.graph, [&](const LabelSet& tree) {
    TreeActivities act = activities(del.graph, tree);
    LabelSet cyc;
    try {
      cyc = fundamental_cycle(g, tree, elbl);
    } catch (const usage_error&) {
      cyc.clear();
    }
    Monomial m(2, 0);
    for (const auto& [lbl, a] : act.classification) {
      if (a == Activity::internally_active && !std::binary_search(cyc.begin(), cyc.end(), lbl)) ++m[0];
      if (a == Activity::externally_active) ++m[1];
    }
    t_l.add_term(m, 1);
  });

  PolyZ t_c(VarSet::xy2());
  for_each_spanning_forest(con.graph, [&](const LabelSet& tree) {
    TreeActivities act = activities(con.graph, tree);
    LabelSet g_tree = tree;
    g_tree.push_back(elbl);
    std::sort(g_tree.begin(), g_tree.end());
    Monomial m(2, 0);
    for (const auto& [lbl, a] : act.classification) {
      if (a == Activity::internally_active) ++m[0];
      if (a == Activity::externally_active) {
        LabelSet cyc = fundamental_cycle(g, g_tree, lbl);
        if (!std::binary_search(cyc.begin(), cyc.end(), elbl)) ++m[1];
      }
    }
    t_c.add_term(m, 1);
  });

  return {std::move(t_l), std::move(t_c)};
}

}  // namespace sgt
