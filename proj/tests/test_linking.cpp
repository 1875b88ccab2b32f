#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "graphlink/linking.hpp"

using namespace graphlink;

TEST_CASE("reference-link linking numbers") {
  SpliceDiagram d = fixtures::len();
  auto id = [&](const char* n) { return *d.find_vertex(n); };
  CHECK(linking_number(d, id("a1"), id("n1")) == 15);
  CHECK(linking_number(d, id("a2"), id("n1")) == -20);
  CHECK(linking_number(d, id("a3"), id("n1")) == -20);
  CHECK(linking_number(d, id("a1"), id("n2")) == -10);
  CHECK(linking_number(d, id("a2"), id("n2")) == -6);
  CHECK(linking_number(d, id("a3"), id("n2")) == -6);
  CHECK(linking_number(d, id("a1"), id("b1")) == 3);
}

TEST_CASE("trefoil linking numbers") {
  SpliceDiagram d = fixtures::trefoil();
  auto id = [&](const char* n) { return *d.find_vertex(n); };
  CHECK(linking_number(d, id("a1"), id("n1")) == 6);
  CHECK(linking_number(d, id("a1"), id("b1")) == 3);  // leaf of weight 2
  CHECK(linking_number(d, id("a1"), id("b2")) == 2);  // leaf of weight 3
}

TEST_CASE("arrowhead targets are rejected") {
  SpliceDiagram d = fixtures::len();
  CHECK_THROWS_AS(
      linking_number(d, *d.find_vertex("a1"), *d.find_vertex("a2")), Error);
  CHECK_THROWS_AS(
      linking_number(d, *d.find_vertex("n1"), *d.find_vertex("n2")), Error);
}

TEST_CASE("reference-link valences") {
  LinkingMatrix lm = linking_matrix(fixtures::len());
  REQUIRE(lm.num_nodes == 2);
  CHECK(lm.delta[0] == 3);
  CHECK(lm.delta[1] == 4);
  CHECK(lm.delta_tilde_minus_2[0] == make_rat(4, 5));
  CHECK(lm.delta_tilde_minus_2[1] == make_rat(3, 2));
  CHECK(lm.column(lm.columns[0]) == fixtures::vz({15, -20, -20}));
  CHECK(lm.column(lm.columns[1]) == fixtures::vz({-10, -6, -6}));
}

TEST_CASE("trefoil valences") {
  LinkingMatrix lm = linking_matrix(fixtures::trefoil());
  REQUIRE(lm.num_nodes == 1);
  CHECK(lm.delta[0] == 3);
  CHECK(lm.delta_tilde_minus_2[0] == make_rat(1, 6));
}

static void check_leaf_divisibility(const SpliceDiagram& d,
                                    const LinkingMatrix& lm) {
  for (VertexId n : d.node_ids()) {
    VecZ node_col = lm.column(n);
    for (int ei : d.incident_edges(n)) {
      const Edge& e = d.edges[ei];
      VertexId leaf = e.other(n);
      if (!d.is_leaf(leaf)) continue;
      Int alpha = e.weight_at(n);
      VecZ leaf_col = lm.column(leaf);
      for (std::size_t j = 0; j < node_col.size(); ++j)
        CHECK(alpha * leaf_col[j] == node_col[j]);
    }
  }
}

TEST_CASE("leaf columns divide their node column by the edge weight") {
  for (const char* src :
       {fixtures::kLenSpl, fixtures::kTrefoilSpl, fixtures::kSeifert235Spl}) {
    SpliceDiagram d = parse_diagram(src);
    check_leaf_divisibility(d, linking_matrix(d));
  }
  RandomParams p;
  p.max_nodes = 4;
  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    SpliceDiagram d = random_diagram(seed, p);
    LinkingMatrix lm = linking_matrix(d);
    check_leaf_divisibility(d, lm);
    for (const Rat& dt : lm.delta_tilde_minus_2) CHECK(dt > 0);
  }
}
