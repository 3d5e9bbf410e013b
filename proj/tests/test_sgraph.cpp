#include <doctest.h>

#include "oracles.hpp"
#include "sgt/sgraph.hpp"
#include "sgt/verify.hpp"

using namespace sgt;

TEST_CASE("validation accepts parallels and loops, rejects label gaps") {
  CHECK_NOTHROW(SignedGraph(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::plus, 2}}));
  CHECK_NOTHROW(SignedGraph(1, {Edge{0, 0, Sign::plus, 1}}));
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::plus, 3}}),
                  validation_error);
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 5, Sign::plus, 1}}), validation_error);
  CHECK_THROWS_AS(SignedGraph(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::plus, 1}}),
                  validation_error);
}

TEST_CASE("graph text round trips bit-exactly") {
  SignedGraph g = sgt_test::example_k4();
  std::string text = g.to_text();
  CHECK(SignedGraph::parse(text) == g);
  CHECK(SignedGraph::parse(text).to_text() == text);
  CHECK(SignedGraph::parse("# comment\nv 2\ne 0 1 + 1  # loop-free\n") ==
        SignedGraph(2, {Edge{0, 1, Sign::plus, 1}}));
}

TEST_CASE("spanning forest enumeration matches brute force") {
  SignedGraph k4 = sgt_test::example_k4();
  auto forests = spanning_forests(k4);
  CHECK(forests.size() == 16);
  CHECK(forests == sgt_test::brute_force_forests(k4));
  CHECK(std::is_sorted(forests.begin(), forests.end()));

  SignedGraph triangle(3, {Edge{0, 1, Sign::plus, 1}, Edge{1, 2, Sign::plus, 2},
                           Edge{0, 2, Sign::plus, 3}});
  CHECK(spanning_forests(triangle).size() == 3);

  SignedGraph loops(1, {Edge{0, 0, Sign::plus, 1}, Edge{0, 0, Sign::minus, 2}});
  auto lf = spanning_forests(loops);
  REQUIRE(lf.size() == 1);
  CHECK(lf[0].empty());
}

TEST_CASE("forest counts match the matrix-tree determinant") {
  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    SignedGraph g = random_graph(rng, 8, 14, true);
    CHECK(BigInt(spanning_forests(g).size()) == sgt_test::kirchhoff_tree_count(g));
  }
}

TEST_CASE("fundamental cycles of the four-vertex example") {
  SignedGraph g = sgt_test::example_k4();
  LabelSet tree = {1, 4, 5};
  CHECK(fundamental_cycle(g, tree, 2) == LabelSet{2, 4, 5});
  CHECK(fundamental_cycle(g, tree, 3) == LabelSet{1, 3, 4});
  CHECK_THROWS_AS(fundamental_cycle(g, tree, 4), usage_error);

  SignedGraph looped(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 0, Sign::plus, 2}});
  CHECK(fundamental_cycle(looped, {1}, 2) == LabelSet{2});
}

TEST_CASE("fundamental cuts of the four-vertex example") {
  SignedGraph g = sgt_test::example_k4();
  LabelSet tree = {1, 4, 5};
  LabelSet cut4 = fundamental_cut(g, tree, 4);
  CHECK(std::binary_search(cut4.begin(), cut4.end(), 3));
  LabelSet cut5 = fundamental_cut(g, tree, 5);
  CHECK(std::binary_search(cut5.begin(), cut5.end(), 2));
  CHECK_THROWS_AS(fundamental_cut(g, tree, 2), usage_error);

  SignedGraph bridge(2, {Edge{0, 1, Sign::plus, 1}});
  CHECK(fundamental_cut(bridge, {1}, 1).empty());
}

TEST_CASE("activity classification of the marked tree") {
  SignedGraph g = sgt_test::example_k4();
  TreeActivities act = activities(g, {1, 4, 5});
  CHECK(act.classification.at(1) == Activity::internally_active);
  CHECK(act.classification.at(4) == Activity::internally_inactive);
  CHECK(act.classification.at(5) == Activity::internally_inactive);
  CHECK(act.classification.at(2) == Activity::externally_active);
  CHECK(act.classification.at(3) == Activity::externally_inactive);
  CHECK(act.classification.at(6) == Activity::externally_inactive);
}

TEST_CASE("bridges and loops have forced activities") {
  SignedGraph bridge(2, {Edge{0, 1, Sign::plus, 1}});
  CHECK(activities(bridge, {1}).classification.at(1) == Activity::internally_active);
  SignedGraph loop(1, {Edge{0, 0, Sign::minus, 1}});
  CHECK(activities(loop, {}).classification.at(1) == Activity::externally_active);
}

TEST_CASE("minors relabel by rank compression") {
  SignedGraph n = sgt_test::figure_eight_n();
  Minor con = contract_edge(n, 4);
  CHECK(con.graph.num_vertices() == 2);
  CHECK(con.graph.num_edges() == 3);
  for (const Edge& e : con.graph.edges()) CHECK(!e.is_loop());
  CHECK(con.old_to_new == std::map<int, int>{{1, 1}, {2, 2}, {3, 3}});

  // deleting a loop just removes it
  SignedGraph looped(2, {Edge{0, 1, Sign::plus, 1}, Edge{1, 1, Sign::minus, 2}});
  Minor del = delete_edge(looped, 2);
  CHECK(del.graph == SignedGraph(2, {Edge{0, 1, Sign::plus, 1}}));

  // contracting one of two parallels turns the other into a loop
  SignedGraph digon(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::minus, 2}});
  Minor con2 = contract_edge(digon, 1);
  REQUIRE(con2.graph.num_edges() == 1);
  CHECK(con2.graph.edge(1).is_loop());
  CHECK(con2.old_to_new.at(2) == 1);

  CHECK_THROWS_AS(contract_edge(looped, 2), usage_error);
  CHECK_THROWS_AS(delete_edge(looped, 7), usage_error);

  // relabelling keeps relative order when a middle label vanishes
  SignedGraph path(3, {Edge{0, 1, Sign::plus, 1}, Edge{1, 2, Sign::minus, 2},
                       Edge{0, 2, Sign::plus, 3}});
  Minor del2 = delete_edge(path, 2);
  CHECK(del2.old_to_new == std::map<int, int>{{1, 1}, {3, 2}});
}
