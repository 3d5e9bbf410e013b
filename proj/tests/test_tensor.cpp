#include <doctest.h>

#include "oracles.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tensor.hpp"

using namespace sgt;

namespace {
PolyZ lam(const std::string& text) { return PolyZ::parse(VarSet::lambda8(), text); }
PolyZ xy(const std::string& text) { return PolyZ::parse(VarSet::xy2(), text); }
}  // namespace

TEST_CASE("a positive product leaves an all-negative host unchanged") {
  SignedGraph m(3, {Edge{0, 1, Sign::minus, 1}, Edge{1, 2, Sign::minus, 2}});
  SignedGraph n = sgt_test::figure_eight_n();
  SignedGraph product = tensor_graph(TensorSpec{m, Sign::plus, n, 4, {}});
  CHECK(product == m);
  CHECK(tensor_subst(tutte_activity(m), Sign::plus, n, 4) == tutte_activity(m));
}

TEST_CASE("replacing a digon's edges with triangle sides gives a four-cycle") {
  SignedGraph digon(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::plus, 2}});
  SignedGraph triangle(3, {Edge{0, 1, Sign::plus, 1}, Edge{1, 2, Sign::plus, 2},
                           Edge{0, 2, Sign::plus, 3}});
  SignedGraph product = tensor_graph(TensorSpec{digon, Sign::plus, triangle, 3, {}});
  CHECK(product.num_vertices() == 4);
  CHECK(product.num_edges() == 4);
  CHECK(product.is_connected());
  CHECK(spanning_forests(product).size() == 4);  // a four-cycle
}

TEST_CASE("edge counts of a product") {
  SignedGraph m = sgt_test::example_k4();  // four +, two -
  SignedGraph n = sgt_test::figure_eight_n();
  SignedGraph product = tensor_graph(TensorSpec{m, Sign::plus, n, 4, {}});
  CHECK(product.num_edges() == 2 + 4 * (n.num_edges() - 1));
}

TEST_CASE("rejected product shapes") {
  SignedGraph loop_m(1, {Edge{0, 0, Sign::plus, 1}});
  SignedGraph n = sgt_test::figure_eight_n();
  CHECK_THROWS_AS(tensor_graph(TensorSpec{loop_m, Sign::plus, n, 4, {}}), usage_error);
  SignedGraph loop_n(2, {Edge{0, 1, Sign::plus, 1}, Edge{1, 1, Sign::plus, 2}});
  SignedGraph m(2, {Edge{0, 1, Sign::plus, 1}});
  CHECK_THROWS_AS(tensor_graph(TensorSpec{m, Sign::plus, loop_n, 2, {}}), usage_error);
}

TEST_CASE("thickening substitution images") {
  auto [n3, e3] = thickening(3, Sign::minus);
  CHECK(n3.num_edges() == 4);
  CHECK(e3 == 4);
  Substitution sub = tensor_substitution(Sign::minus, n3, e3);
  CHECK(sub.apply(lam("y-")) == lam("y-^3"));
  CHECK(sub.apply(lam("B-")) == lam("B-^3"));
  CHECK(sub.apply(lam("A-")) == lam("A-*y-^2 + A-*y-*B- + A-*B-^2"));
  CHECK(sub.apply(lam("x-")) == lam("B-^2*x- + A-*y-^2 + A-*y-*B-"));
  CHECK(sub.apply(lam("x+")) == lam("x+"));  // other sign untouched

  CHECK(sub.apply(lam("y+*y-")) == lam("y+*y-^3"));
  CHECK(sub.apply(lam("x+*B- + y+*A-")) ==
        lam("x+*B-^3 + y+*A-*y-^2 + y+*A-*y-*B- + y+*A-*B-^2"));
}

TEST_CASE("general thickening images match the telescoped closed form") {
  for (int k = 1; k <= 6; ++k) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      auto [n, e] = thickening(k, s);
      TuttePair pair = tctl(n, e);
      std::string ys = std::string("y") + sign_char(s), bs = std::string("B") + sign_char(s);
      PolyZ y = lam(ys), b = lam(bs), a = lam(std::string("A") + sign_char(s));
      PolyZ x = lam(std::string("x") + sign_char(s));
      PolyZ geom(VarSet::lambda8());
      for (int i = 0; i < k; ++i) geom += y.pow(i) * b.pow(k - 1 - i);
      CHECK(pair.t_l == a * geom);
      CHECK(pair.t_c == b.pow(k));
      PolyZ tail(VarSet::lambda8());
      for (int i = 0; i + 1 < k; ++i) tail += y.pow(i) * b.pow(k - 2 - i);
      CHECK(tutte_activity(delete_edge(n, e).graph) == b.pow(k - 1) * x + a * y * tail);
      CHECK(tutte_activity(contract_edge(n, e).graph) == y.pow(k));
    }
  }
}

TEST_CASE("stretch graphs and their duals of the thickening images") {
  auto [n1, e1] = stretch(1, Sign::plus);
  CHECK(n1.num_edges() == 2);  // a digon
  auto [n3, e3] = stretch(3, Sign::plus);
  CHECK(n3.num_edges() == 4);
  CHECK(n3.num_vertices() == 4);
  // deleting the distinguished edge leaves a path: one tree, all internal
  PolyZ t_del = tutte_activity(delete_edge(n3, e3).graph);
  CHECK(t_del == lam("x+^3"));
  TuttePair pair = tctl(n3, e3);
  CHECK(pair.t_l == lam("A+^3"));
  CHECK(pair.t_c == lam("B+*x+^2 + B+*x+*A+ + B+*A+^2"));
  CHECK(verify_tctl_system(n3, e3));
}

TEST_CASE("unsigned tensor formula on tiny hosts") {
  SignedGraph n = sgt_test::figure_eight_n();
  // a single edge: T = x, rank 1: the product is n minus its edge
  CHECK(unsigned_tensor(xy("x"), 1, 1, n, 4) == unsigned_tutte(delete_edge(n, 4).graph));
  // a single loop: T = y, rank 0: the product contracts the edge away
  CHECK(unsigned_tensor(xy("y"), 0, 1, n, 4) == unsigned_tutte(contract_edge(n, 4).graph));
  CHECK_THROWS_AS(unsigned_tensor(xy("x^2"), 1, 1, n, 4), usage_error);
}

TEST_CASE("unsigned tensor formula matches enumeration on a triangle host") {
  SignedGraph triangle(3, {Edge{0, 1, Sign::plus, 1}, Edge{1, 2, Sign::plus, 2},
                           Edge{0, 2, Sign::plus, 3}});
  auto [n, e] = thickening(2, Sign::plus);
  SignedGraph product = tensor_graph(TensorSpec{triangle, Sign::plus, n, e, {}});
  CHECK(unsigned_tensor(unsigned_tutte(triangle), triangle.rank(), 3, n, e) ==
        unsigned_tutte(product));
}
