#include "sgt/verify.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "sgt/kfamily.hpp"
#include "sgt/parallel.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tensor.hpp"
#include "sgt/tutte.hpp"

namespace sgt {

int Rng::irange(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(eng_);
}
bool Rng::coin() { return irange(0, 1) == 1; }
Sign Rng::sign() { return coin() ? Sign::plus : Sign::minus; }
std::uint64_t Rng::raw() { return eng_(); }

SignedGraph random_graph(Rng& rng, int max_vertices, int max_edges, bool connected) {
  int nv = rng.irange(1, connected ? std::min(max_vertices, max_edges + 1) : max_vertices);
  std::vector<std::pair<int, int>> ends;
  if (connected)
    for (int v = 1; v < nv; ++v) ends.emplace_back(rng.irange(0, v - 1), v);
  int extra = rng.irange(0, max_edges - static_cast<int>(ends.size()));
  for (int i = 0; i < extra; ++i) ends.emplace_back(rng.irange(0, nv - 1), rng.irange(0, nv - 1));
  std::vector<int> labels(ends.size());
  std::iota(labels.begin(), labels.end(), 1);
  for (std::size_t i = labels.size(); i > 1; --i)
    std::swap(labels[i - 1], labels[static_cast<std::size_t>(rng.irange(0, static_cast<int>(i) - 1))]);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < ends.size(); ++i)
    edges.push_back(Edge{ends[i].first, ends[i].second, rng.sign(), labels[i]});
  return SignedGraph(nv, std::move(edges));
}

PolyZ random_poly(Rng& rng, const std::shared_ptr<const VarSet>& vars, int max_terms, int max_exp,
                  int max_coeff) {
  PolyZ p(vars);
  int nterms = rng.irange(0, max_terms);
  for (int t = 0; t < nterms; ++t) {
    Monomial m(vars->size(), 0);
    for (auto& e : m) e = rng.irange(0, max_exp);
    int c = rng.irange(-max_coeff, max_coeff);
    if (c != 0) p.add_term(m, c);
  }
  return p;
}

const std::vector<PDCode>& standard_pd_codes() {
  static const std::vector<PDCode> codes = [] {
    const char* texts[] = {
        "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n",
        "X 4 2 5 1\nX 8 6 1 5\nX 6 3 7 4\nX 2 7 3 8\n",
        "X 2 8 3 7\nX 4 10 5 9\nX 6 2 7 1\nX 8 4 9 3\nX 10 6 1 5\n",
        "X 1 4 2 5\nX 3 8 4 9\nX 5 10 6 1\nX 9 6 10 7\nX 7 2 8 3\n",
        "X 1 4 2 5\nX 7 10 8 11\nX 3 9 4 8\nX 9 3 10 2\nX 5 12 6 1\nX 11 6 12 7\n",
        "X 1 4 2 5\nX 5 10 6 11\nX 3 9 4 8\nX 9 3 10 2\nX 7 12 8 1\nX 11 6 12 7\n",
        "X 4 2 5 1\nX 8 4 9 3\nX 12 9 1 10\nX 10 5 11 6\nX 6 11 7 12\nX 2 8 3 7\n",
    };
    std::vector<PDCode> out;
    for (const char* t : texts) out.push_back(PDCode::parse(t));
    return out;
  }();
  return codes;
}

PDCode add_kink(const PDCode& pd, int arc, int variant) {
  variant &= 3;
  if (pd.num_crossings() == 0) {
    // the two one-crossing unknots
    return (variant & 1) ? PDCode({Crossing{1, 1, 2, 2}}) : PDCode({Crossing{1, 2, 2, 1}});
  }
  if (arc < 1 || arc > pd.num_labels()) throw usage_error("add_kink: no such arc");
  // locate where `arc` is consumed (incoming): slot a, or the over-in slot
  int ci = -1, cslot = -1;
  for (int i = 0; i < pd.num_crossings() && ci < 0; ++i) {
    const Crossing& x = pd.crossings()[static_cast<std::size_t>(i)];
    if (x.a == arc) {
      ci = i;
      cslot = 0;
    } else if (pd.over_runs_b_to_d(i) ? x.b == arc : x.d == arc) {
      ci = i;
      cslot = pd.over_runs_b_to_d(i) ? 1 : 3;
    }
  }
  std::vector<Crossing> xs = pd.crossings();
  for (Crossing& x : xs) {
    auto shift = [arc](int& lbl) {
      if (lbl > arc) lbl += 2;
    };
    shift(x.a);
    shift(x.b);
    shift(x.c);
    shift(x.d);
  }
  // the consumer now reads the tail piece of the split arc
  int* slot_ptr = nullptr;
  Crossing& host = xs[static_cast<std::size_t>(ci)];
  switch (cslot) {
    case 0: slot_ptr = &host.a; break;
    case 1: slot_ptr = &host.b; break;
    default: slot_ptr = &host.d; break;
  }
  *slot_ptr = arc + 2;
  const int L = arc;
  switch (variant) {
    case 0: xs.push_back(Crossing{L, L + 1, L + 1, L + 2}); break;
    case 1: xs.push_back(Crossing{L, L + 2, L + 1, L + 1}); break;
    case 2: xs.push_back(Crossing{L + 1, L, L + 2, L + 1}); break;
    default: xs.push_back(Crossing{L + 1, L + 1, L + 2, L}); break;
  }
  return PDCode(std::move(xs));
}

PDCode random_pd(Rng& rng, int max_crossings) {
  const auto& bases = standard_pd_codes();
  PDCode pd = bases[static_cast<std::size_t>(rng.irange(0, static_cast<int>(bases.size()) - 1))];
  if (pd.num_crossings() > max_crossings) pd = bases[0];
  int kinks = rng.irange(0, std::max(0, max_crossings - pd.num_crossings()));
  for (int i = 0; i < kinks; ++i)
    pd = add_kink(pd, rng.irange(1, pd.num_labels()), rng.irange(0, 3));
  return pd;
}

namespace {

struct Check {
  SuiteResult& r;
  void operator()(bool ok, const std::string& msg) {
    ++r.cases;
    if (!ok) {
      ++r.failures;
      if (r.messages.size() < 20) r.messages.push_back(msg);
    }
  }
};

struct UnionCount {
  std::vector<int> parent;
  explicit UnionCount(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

int def_size(int size, int fallback) { return size > 0 ? size : fallback; }

// --- ring ---------------------------------------------------------------

SuiteResult suite_ring_axioms(std::uint64_t seed, int size) {
  SuiteResult r{"ring-axioms"};
  Check check{r};
  Rng rng(seed);
  const auto& lam = VarSet::lambda8();
  for (int i = 0; i < def_size(size, 200); ++i) {
    PolyZ p = random_poly(rng, lam, 4, 2, 5);
    PolyZ q = random_poly(rng, lam, 4, 2, 5);
    PolyZ s = random_poly(rng, lam, 4, 2, 5);
    check((p + q) + s == p + (q + s), "addition associativity");
    check(p + q == q + p, "addition commutativity");
    check(p * q == q * p, "multiplication commutativity");
    check((p * q) * s == p * (q * s), "multiplication associativity");
    check(p * (q + s) == p * q + p * s, "distributivity");
    check(p + PolyZ::zero(lam) == p, "additive identity");
    check(p * PolyZ::constant(lam, 1) == p, "multiplicative identity");

    Substitution sub = Substitution::identity(lam);
    for (int v = 0; v < 2; ++v)
      sub.set(lam->name(static_cast<std::size_t>(rng.irange(0, 7))), random_poly(rng, lam, 3, 1, 3));
    check(sub.apply(p * q) == sub.apply(p) * sub.apply(q), "substitution respects products");
    check(sub.apply(p + q) == sub.apply(p) + sub.apply(q), "substitution respects sums");
  }
  return r;
}

// --- quotient ------------------------------------------------------------

const Substitution& change_to_tilde() {
  // independent copy of the basis change, for the confluence cross-check
  static const Substitution s = [] {
    Substitution sub(VarSet::lambda8(), VarSet::tilde8());
    auto tv = [](const char* n) { return PolyZ::variable(VarSet::tilde8(), n); };
    sub.set("x+", tv("x~+") + tv("A+"));
    sub.set("x-", tv("x~-") + tv("A-"));
    sub.set("y+", tv("y~+") + tv("B+"));
    sub.set("y-", tv("y~-") + tv("B-"));
    for (const char* n : {"A+", "A-", "B+", "B-"}) sub.set(n, tv(n));
    return sub;
  }();
  return s;
}

// One random single-step rewrite at a time until no redex is left.
PolyZ naive_reduce(PolyZ p, Rng& rng) {
  enum : std::size_t { XTP = 0, XTM = 1, YTP = 2, YTM = 3, AP = 4, AM = 5, BP = 6, BM = 7 };
  for (;;) {
    std::vector<std::pair<Monomial, int>> redexes;
    for (const auto& [m, c] : p.terms()) {
      if (m[XTP] > 0 && m[BM] > 0) redexes.emplace_back(m, 0);
      if (m[AP] > 0 && m[YTM] > 0) redexes.emplace_back(m, 1);
    }
    if (redexes.empty()) return p;
    auto [m, rule] = redexes[static_cast<std::size_t>(rng.irange(0, static_cast<int>(redexes.size()) - 1))];
    BigInt c = p.terms().at(m);
    Monomial m2 = m;
    if (rule == 0) {
      --m2[XTP]; --m2[BM]; ++m2[XTM]; ++m2[BP];
    } else {
      --m2[AP]; --m2[YTM]; ++m2[AM]; ++m2[YTP];
    }
    p.add_term(m, -c);
    p.add_term(m2, c);
  }
}

SuiteResult suite_quotient(std::uint64_t seed, int size) {
  SuiteResult r{"quotient"};
  Check check{r};
  Rng rng(seed);
  const auto& lam = VarSet::lambda8();
  for (int which : {0, 1})
    check(to_quotient(i1_generator(which)).is_zero(), "generator reduces to zero");
  for (int i = 0; i < def_size(size, 200); ++i) {
    PolyZ p = random_poly(rng, lam, 5, 2, 5);
    check(naive_reduce(change_to_tilde().apply(p), rng) == to_quotient(p).normal_form(),
          "random-order rewriting reaches the same normal form");
    QuotientElem q = to_quotient(p);
    check(to_quotient(from_quotient(q)) == q, "to_quotient o from_quotient is the identity");
    check(kauffman_specialize(p) == kauffman_specialize(from_quotient(q)),
          "bracket specialization factors through the quotient");
    PolyZ f = random_poly(rng, lam, 3, 1, 4);
    PolyZ g = random_poly(rng, lam, 3, 1, 4);
    check(to_quotient(f * i1_generator(0) + g * i1_generator(1)).is_zero(),
          "ideal members reduce to zero");
  }
  return r;
}

SuiteResult suite_telescoping(std::uint64_t /*seed*/, int size) {
  SuiteResult r{"telescoping"};
  Check check{r};
  const int max_k = size > 0 ? std::min(size, 8) : 5;
  const auto& lam = VarSet::lambda8();
  auto sv = [&](const char* base, Sign s) {
    return PolyZ::variable(lam, std::string(base) + sign_char(s));
  };
  for (int k = 1; k <= max_k; ++k) {
    for (int eps_bit = 0; eps_bit < 2; ++eps_bit) {
      Sign eps = eps_bit ? Sign::minus : Sign::plus;
      for (int mask = 0; mask < (1 << k); ++mask) {
        std::vector<Sign> es;
        for (int i = 0; i < k; ++i) es.push_back((mask >> i) & 1 ? Sign::minus : Sign::plus);
        PolyZ prod_y = PolyZ::constant(lam, 1), prod_b = PolyZ::constant(lam, 1);
        for (Sign s : es) {
          prod_y = prod_y * sv("y", s);
          prod_b = prod_b * sv("B", s);
        }
        PolyZ lhs = sv("A", eps) * (prod_y - prod_b);
        PolyZ rhs(lam);
        for (int i = 0; i < k; ++i) {
          PolyZ term = sv("A", es[static_cast<std::size_t>(i)]);
          for (int j = 0; j < i; ++j) term = term * sv("y", es[static_cast<std::size_t>(j)]);
          for (int t = i + 1; t < k; ++t) term = term * sv("B", es[static_cast<std::size_t>(t)]);
          rhs += term;
        }
        rhs = (sv("y", eps) - sv("B", eps)) * rhs;
        check(eq_mod_I1(lhs, rhs), "telescoping identity at k=" + std::to_string(k));
      }
    }
  }
  return r;
}

// --- graphs and activities ------------------------------------------------

SignedGraph relabel(const SignedGraph& g, const std::vector<int>& perm /* old label -> new label */) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Edge ne = e;
    ne.label = perm[static_cast<std::size_t>(e.label - 1)];
    edges.push_back(ne);
  }
  return SignedGraph(g.num_vertices(), std::move(edges));
}

std::vector<int> random_perm(Rng& rng, int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  for (std::size_t i = p.size(); i > 1; --i)
    std::swap(p[i - 1], p[static_cast<std::size_t>(rng.irange(0, static_cast<int>(i) - 1))]);
  return p;
}

SuiteResult suite_labelling(std::uint64_t seed, int size) {
  SuiteResult r{"labelling"};
  Check check{r};
  Rng rng(seed);
  for (int done = 0; done < def_size(size, 60);) {
    SignedGraph g = random_graph(rng, 5, 7, false);
    if (g.num_edges() == 0) continue;
    ++done;
    PolyZ base = tutte_activity(g);
    for (int p = 0; p < 20; ++p) {
      SignedGraph h = relabel(g, random_perm(rng, g.num_edges()));
      check(eq_mod_I1(base, tutte_activity(h)), "Tutte image is labelling independent");
    }
  }
  return r;
}

SuiteResult suite_delcon(std::uint64_t seed, int size) {
  SuiteResult r{"delcon"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 100); ++i) {
    SignedGraph g = random_graph(rng, 5, 8, false);
    PolyZ act = tutte_activity(g);
    PolyZ dc = tutte_delcon(g);
    check(eq_mod_I1(act, dc), "activity and deletion-contraction agree in the quotient");
    check(tutte_delcon(g, true) == dc, "memoized recursion is unchanged");
    check(tutte_activity_serial(g) == act, "serial kernel agrees");
  }
  return r;
}

SuiteResult suite_tctl_system(std::uint64_t seed, int size) {
  SuiteResult r{"tctl-system"};
  Check check{r};
  Rng rng(seed);
  for (int done = 0; done < def_size(size, 100);) {
    SignedGraph n = random_graph(rng, 4, 6, true);
    if (n.num_vertices() < 2) continue;
    // the system characterizes the pair only when some cycle passes through e
    std::vector<int> candidates;
    for (const Edge& e : n.edges())
      if (!e.is_loop() && delete_edge(n, e.label).graph.num_components() == n.num_components())
        candidates.push_back(e.label);
    if (candidates.empty()) continue;
    ++done;
    int e = candidates[static_cast<std::size_t>(rng.irange(0, static_cast<int>(candidates.size()) - 1))];
    check(verify_tctl_system(n, e), "deletion/contraction system holds in the quotient");
    // labelling independence of the pair
    TuttePair base = tctl(n, e);
    std::vector<int> perm = random_perm(rng, n.num_edges());
    SignedGraph h = relabel(n, perm);
    TuttePair pair2 = tctl(h, perm[static_cast<std::size_t>(e - 1)]);
    check(eq_mod_I1(base.t_l, pair2.t_l) && eq_mod_I1(base.t_c, pair2.t_c),
          "exception-rule pair is labelling independent");
  }
  return r;
}

SuiteResult suite_grading(std::uint64_t seed, int size) {
  SuiteResult r{"grading"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 100); ++i) {
    SignedGraph g = random_graph(rng, 5, 7, false);
    PolyZ t = tutte_activity(g);
    int pos = g.count_sign(Sign::plus), neg = g.count_sign(Sign::minus);
    bool deg_ok = true;
    for (const auto& [m, c] : t.terms()) {
      int dpos = m[0] + m[2] + m[4] + m[6];
      int dneg = m[1] + m[3] + m[5] + m[7];
      if (dpos != pos || dneg != neg) deg_ok = false;
    }
    check(deg_ok, "every monomial carries one variable per edge of its sign");
    // rank grading on the all-positive version
    SignedGraph gp = g;
    {
      std::vector<Edge> edges(g.edges().begin(), g.edges().end());
      for (Edge& e : edges) e.sign = Sign::plus;
      gp = SignedGraph(g.num_vertices(), std::move(edges));
    }
    PolyZ tp = tutte_activity(gp);
    bool rank_ok = true;
    for (const auto& [m, c] : tp.terms()) {
      if (m[0] + m[4] != g.rank()) rank_ok = false;                    // x+, A+ block
      if (m[2] + m[6] != g.num_edges() - g.rank()) rank_ok = false;    // y+, B+ block
    }
    check(rank_ok, "internal/external degrees match rank and corank");
    // bridges always internally active, loops always externally active
    bool act_ok = true;
    for (const LabelSet& tree : spanning_forests(g)) {
      TreeActivities act = activities(g, tree);
      for (const Edge& e : g.edges()) {
        if (e.is_loop() && act.classification.at(e.label) != Activity::externally_active) act_ok = false;
        bool bridge = delete_edge(g, e.label).graph.num_components() > g.num_components();
        if (bridge && act.classification.at(e.label) != Activity::internally_active) act_ok = false;
      }
    }
    check(act_ok, "bridges stay internally active and loops externally active");
  }
  return r;
}

SuiteResult suite_duality(std::uint64_t seed, int size) {
  SuiteResult r{"duality"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 100); ++i) {
    SignedGraph g = random_graph(rng, 5, 8, false);
    std::vector<LabelSet> forests = spanning_forests(g);
    if (forests.empty()) continue;
    const LabelSet& tree = forests[static_cast<std::size_t>(rng.irange(0, static_cast<int>(forests.size()) - 1))];
    // cut-cycle duality
    bool dual_ok = true;
    for (int e : tree) {
      LabelSet cut = fundamental_cut(g, tree, e);
      for (const Edge& f : g.edges()) {
        if (std::binary_search(tree.begin(), tree.end(), f.label)) continue;
        LabelSet cyc = fundamental_cycle(g, tree, f.label);
        bool in_cut = std::binary_search(cut.begin(), cut.end(), f.label);
        bool in_cyc = std::binary_search(cyc.begin(), cyc.end(), e);
        if (in_cut != in_cyc) dual_ok = false;
      }
    }
    check(dual_ok, "f in K(T,e) iff e in C(T,f)");
    // tree replacement and double-cycle membership
    auto acyclic = [&](const LabelSet& labels) {
      UnionCount uc(g.num_vertices());
      for (int lbl : labels) {
        const Edge& ed = g.edge(lbl);
        if (!uc.unite(ed.u, ed.v)) return false;
      }
      return true;
    };
    for (int e : tree) {
      LabelSet cut = fundamental_cut(g, tree, e);
      if (cut.size() < 2) continue;
      int ei = cut[0], ej = cut[1];
      LabelSet pi = tree, pj = tree, both = tree;
      pi.erase(std::find(pi.begin(), pi.end(), e));
      pj.erase(std::find(pj.begin(), pj.end(), e));
      both.erase(std::find(both.begin(), both.end(), e));
      pi.push_back(ei);
      pj.push_back(ej);
      both.push_back(ei);
      both.push_back(ej);
      std::sort(pi.begin(), pi.end());
      std::sort(pj.begin(), pj.end());
      std::vector<LabelSet> all = spanning_forests(g);
      bool pi_tree = std::find(all.begin(), all.end(), pi) != all.end();
      bool pj_tree = std::find(all.begin(), all.end(), pj) != all.end();
      check(pi_tree && pj_tree, "replacement sets are spanning forests");
      // at least one cycle exists, and every cycle uses both new edges:
      // dropping either edge leaves an acyclic set
      check(!acyclic(both) && acyclic(pi) && acyclic(pj),
            "cycles of the double replacement pass through both edges");
      break;
    }
    // forest-count deletion-contraction
    std::vector<int> cand;
    for (const Edge& e : g.edges()) {
      bool bridge = delete_edge(g, e.label).graph.num_components() > g.num_components();
      if (!e.is_loop() && !bridge) cand.push_back(e.label);
    }
    if (!cand.empty()) {
      int e = cand[static_cast<std::size_t>(rng.irange(0, static_cast<int>(cand.size()) - 1))];
      std::size_t total = spanning_forests(g).size();
      std::size_t del = spanning_forests(delete_edge(g, e).graph).size();
      std::size_t con = spanning_forests(contract_edge(g, e).graph).size();
      check(total == del + con, "forest counts satisfy deletion-contraction");
    }
  }
  return r;
}

// --- tensor ----------------------------------------------------------------

SignedGraph random_tensor_m(Rng& rng, Sign sign, int max_edges) {
  for (;;) {
    SignedGraph m = random_graph(rng, 4, max_edges, false);
    bool ok = m.num_edges() > 0;
    for (const Edge& e : m.edges())
      if (e.sign == sign && e.is_loop()) ok = false;
    if (ok) return m;
  }
}

// Connected n with a distinguished edge that is neither a loop nor a bridge,
// the hypotheses of the product formula.
std::pair<SignedGraph, int> random_tensor_n(Rng& rng, int max_edges) {
  for (;;) {
    SignedGraph n = random_graph(rng, 4, max_edges, true);
    if (n.num_vertices() < 2) continue;
    std::vector<int> cand;
    for (const Edge& e : n.edges())
      if (!e.is_loop() && delete_edge(n, e.label).graph.num_components() == n.num_components())
        cand.push_back(e.label);
    if (cand.empty()) continue;
    return {n, cand[static_cast<std::size_t>(rng.irange(0, static_cast<int>(cand.size()) - 1))]};
  }
}

SuiteResult suite_tensor_oracle(std::uint64_t seed, int size) {
  SuiteResult r{"tensor-oracle"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 50); ++i) {
    auto [n, e] = random_tensor_n(rng, 5);
    for (Sign sign : {Sign::plus, Sign::minus}) {
      SignedGraph m = random_tensor_m(rng, sign, 5);
      PolyZ via_subst = tensor_subst(tutte_activity(m), sign, n, e);
      std::size_t matched = 0;
      for (const Edge& me : m.edges())
        if (me.sign == sign) ++matched;
      std::vector<std::vector<bool>> attachments = {std::vector<bool>(matched, false),
                                                    std::vector<bool>(matched, true)};
      std::vector<bool> mixed(matched);
      for (std::size_t b = 0; b < matched; ++b) mixed[b] = rng.coin();
      attachments.push_back(mixed);
      for (const auto& attach : attachments) {
        SignedGraph product = tensor_graph(TensorSpec{m, sign, n, e, attach});
        check(eq_mod_I1(via_subst, tutte_activity(product)),
              "substitution equals the product graph's Tutte image");
      }
      // flipping the distinguished edge's sign changes nothing
      std::vector<Edge> edges(n.edges().begin(), n.edges().end());
      for (Edge& ne : edges)
        if (ne.label == e) ne.sign = opposite(ne.sign);
      SignedGraph n_flip(n.num_vertices(), std::move(edges));
      check(tensor_subst(tutte_activity(m), sign, n_flip, e) == via_subst,
            "the distinguished edge's sign plays no role");
    }
  }
  return r;
}

SuiteResult suite_ideal_preservation(std::uint64_t seed, int size) {
  SuiteResult r{"ideal-preservation"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 50); ++i) {
    auto [n, e] = random_tensor_n(rng, 5);
    Sign sign = rng.sign();
    Substitution sub = tensor_substitution(sign, n, e);
    for (int which : {0, 1})
      check(to_quotient(sub.apply(i1_generator(which))).is_zero(),
            "substitution maps the ideal into itself");
  }
  return r;
}

SuiteResult suite_unsigned(std::uint64_t seed, int size) {
  SuiteResult r{"unsigned"};
  Check check{r};
  Rng rng(seed);
  const auto& xy = VarSet::xy2();
  for (int i = 0; i < def_size(size, 50); ++i) {
    SignedGraph g = random_graph(rng, 5, 7, false);
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& e : edges) e.sign = Sign::plus;
    SignedGraph gp(g.num_vertices(), std::move(edges));
    check(unsigned_phi(tutte_activity(gp)) == unsigned_tutte(g),
          "phi of the all-positive Tutte polynomial is the ordinary one");
    if (!gp.is_connected() || gp.num_vertices() < 2) continue;
    std::vector<int> cand;
    for (const Edge& e : gp.edges())
      if (!e.is_loop() && delete_edge(gp, e.label).graph.num_components() == gp.num_components())
        cand.push_back(e.label);
    if (cand.empty()) continue;
    int e = cand[static_cast<std::size_t>(rng.irange(0, static_cast<int>(cand.size()) - 1))];
    auto [tl, tc] = unsigned_tctl(gp, e);
    TuttePair pair = tctl(gp, e);
    check(unsigned_phi(pair.t_l) == tl && unsigned_phi(pair.t_c) == tc,
          "phi carries the exception-rule pair to the unsigned pair");
    PolyZ t_del = unsigned_tutte(delete_edge(gp, e).graph);
    PolyZ t_con = unsigned_tutte(contract_edge(gp, e).graph);
    PolyZ x = PolyZ::variable(xy, "x"), y = PolyZ::variable(xy, "y");
    PolyZ one = PolyZ::constant(xy, 1);
    check(t_con - tc == (y - one) * tl && t_del - tl == (x - one) * tc,
          "unsigned pair solves its defining linear system exactly");
  }
  return r;
}

SuiteResult suite_unsigned_tensor(std::uint64_t seed, int size) {
  SuiteResult r{"unsigned-tensor"};
  Check check{r};
  Rng rng(seed);
  auto all_plus = [](const SignedGraph& g) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (Edge& ed : edges) ed.sign = Sign::plus;
    return SignedGraph(g.num_vertices(), std::move(edges));
  };
  for (int done = 0; done < def_size(size, 30);) {
    SignedGraph m = all_plus(random_tensor_m(rng, Sign::plus, 4));
    bool has_loop = false;
    for (const Edge& ed : m.edges())
      if (ed.is_loop()) has_loop = true;
    if (has_loop) continue;  // every edge of m gets replaced, loops cannot
    ++done;
    auto [n0, e] = random_tensor_n(rng, 4);
    SignedGraph n = all_plus(n0);
    PolyZ direct = unsigned_tutte(tensor_graph(TensorSpec{m, Sign::plus, n, e, {}}));
    PolyZ formula = unsigned_tensor(unsigned_tutte(m), m.rank(), m.num_edges(), n, e);
    check(formula == direct, "division-free product formula matches enumeration");
  }
  return r;
}

// --- knots -------------------------------------------------------------------

SuiteResult suite_bracket_oracle(std::uint64_t seed, int size) {
  SuiteResult r{"bracket-oracle"};
  Check check{r};
  Rng rng(seed);
  for (int i = 0; i < def_size(size, 20); ++i) {
    PDCode pd = random_pd(rng, 10);
    LaurentZ oracle = bracket_statesum(pd);
    for (int shading : {0, 1}) {
      TaitResult tait = tait_graph(pd, shading);
      check(bracket_via_tutte(tait.graph) == oracle,
            "Tutte-route bracket equals the state sum for both shadings");
      check(tait.writhe == writhe(pd), "writhe ignores the shading");
    }
    check(bracket_statesum_serial(pd) == oracle, "serial state sum agrees");
  }
  return r;
}

SuiteResult suite_reidemeister1(std::uint64_t seed, int size) {
  SuiteResult r{"reidemeister1"};
  Check check{r};
  Rng rng(seed);
  // kink normalization: all small unknot diagrams have Jones 1
  const LaurentZ one_t = LaurentZ::constant("t", 1);
  check(jones_of_pd(PDCode{}) == one_t, "0-crossing unknot normalizes to 1");
  for (int v = 0; v < 4; ++v) {
    PDCode k1 = add_kink(PDCode{}, 0, v);
    check(jones_of_pd(k1) == one_t, "1-crossing unknots normalize to 1");
    for (int arc = 1; arc <= 2; ++arc)
      for (int v2 = 0; v2 < 4; ++v2)
        check(jones_of_pd(add_kink(k1, arc, v2)) == one_t, "2-crossing unknots normalize to 1");
  }
  for (int i = 0; i < def_size(size, 30); ++i) {
    PDCode pd = random_pd(rng, 8);
    LaurentZ br = bracket_statesum(pd);
    PDCode kinked = add_kink(pd, rng.irange(1, pd.num_labels()), rng.irange(0, 3));
    LaurentZ br2 = bracket_statesum(kinked);
    bool twist_ok = br2 == br.mul_monomial(3, -1) || br2 == br.mul_monomial(-3, -1);
    check(twist_ok, "a curl multiplies the bracket by -A^3 or -A^-3");
    check(jones(br2, writhe(kinked)) == jones(br, writhe(pd)),
          "the Jones polynomial is curl invariant");
  }
  return r;
}

SuiteResult suite_serial_parallel(std::uint64_t seed, int size) {
  SuiteResult r{"serial-parallel"};
  Check check{r};
  Rng rng(seed);
  const auto& lam = VarSet::lambda8();
  for (int i = 0; i < def_size(size, 20); ++i) {
    PolyZ p = random_poly(rng, lam, 60, 3, 9);
    PolyZ q = random_poly(rng, lam, 60, 3, 9);
    check(mul_parallel(p, q) == mul_serial(p, q), "parallel product equals serial product");
    SignedGraph g = random_graph(rng, 6, 10, false);
    check(tutte_activity_parallel(g) == tutte_activity_serial(g),
          "parallel forest sum equals serial forest sum");
  }
  for (int i = 0; i < 3; ++i) {
    PDCode pd = random_pd(rng, 10);
    check(bracket_statesum_parallel(pd) == bracket_statesum_serial(pd),
          "parallel state sum equals serial state sum");
  }
  return r;
}

using SuiteFn = SuiteResult (*)(std::uint64_t, int);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> reg = {
      {"ring-axioms", suite_ring_axioms},
      {"quotient", suite_quotient},
      {"telescoping", suite_telescoping},
      {"labelling", suite_labelling},
      {"delcon", suite_delcon},
      {"tctl-system", suite_tctl_system},
      {"grading", suite_grading},
      {"duality", suite_duality},
      {"tensor-oracle", suite_tensor_oracle},
      {"ideal-preservation", suite_ideal_preservation},
      {"unsigned", suite_unsigned},
      {"unsigned-tensor", suite_unsigned_tensor},
      {"bracket-oracle", suite_bracket_oracle},
      {"reidemeister1", suite_reidemeister1},
      {"serial-parallel", suite_serial_parallel},
  };
  return reg;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int size) {
  for (const auto& [n, fn] : registry())
    if (n == name) return fn(seed, size);
  throw usage_error("unknown suite: " + name);
}

std::vector<SuiteResult> run_all_suites(std::uint64_t seed, int size) {
  std::vector<SuiteResult> out;
  for (const auto& [name, fn] : registry()) out.push_back(fn(seed, size));
  return out;
}

std::optional<SignedGraph> search_signed_k4(const PolyZ& target) {
  static const std::array<std::pair<int, int>, 6> k4_edges = {
      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};  // label i+1 -> K4 edge perm[i]
  const LabelSet want_tree = {1, 4, 5};
  const LabelSet want_c2 = {2, 4, 5};
  const LabelSet want_c3 = {1, 3, 4};
  do {
    std::vector<Edge> base;
    for (int i = 0; i < 6; ++i) {
      auto [u, v] = k4_edges[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
      base.push_back(Edge{u, v, Sign::plus, i + 1});
    }
    SignedGraph g(4, base);
    std::vector<LabelSet> forests = spanning_forests(g);
    if (std::find(forests.begin(), forests.end(), want_tree) == forests.end()) continue;
    if (fundamental_cycle(g, want_tree, 2) != want_c2) continue;
    if (fundamental_cycle(g, want_tree, 3) != want_c3) continue;
    for (int mask = 0; mask < 64; ++mask) {
      std::vector<Edge> edges = base;
      for (int i = 0; i < 6; ++i)
        if ((mask >> i) & 1) edges[static_cast<std::size_t>(i)].sign = Sign::minus;
      SignedGraph candidate(4, std::move(edges));
      if (tutte_activity(candidate) == target) return candidate;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

}  // namespace sgt
