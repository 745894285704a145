#include <doctest.h>

#include <sstream>

#include "llt/errors.hpp"
#include "llt/random_instances.hpp"
#include "llt/tree_metrics.hpp"

using namespace llt;

namespace {

RootedTree star_on_line(int n, int center) {
  std::vector<int> parents(n, center);
  parents[center] = -1;
  RootedTree t = RootedTree::from_parents(center, parents);
  t.set_line_weights();
  return t;
}

RootedTree path_on_line(int n) {
  std::vector<int> parents(n, -1);
  for (int v = 1; v < n; ++v) parents[v] = v - 1;
  RootedTree t = RootedTree::from_parents(0, parents);
  t.set_line_weights();
  return t;
}

LinearOrder identity_order(const MetricSpace& m) {
  LinearOrder lo;
  for (int v = 0; v < m.size(); ++v) lo.order.push_back(v);
  for (int q = 0; q + 1 < m.size(); ++q) lo.edge_weights.push_back(m.dist(q, q + 1));
  return lo;
}

}  // namespace

TEST_SUITE("tree_model") {

TEST_CASE("depth-1 star on the 7-point line: depth 1, covering 2") {
  const MetricSpace m = line_metric(7);
  const RootedTree t = star_on_line(7, 3);  // root at coordinate 4
  const TreeMetrics tm = measure(t, m);
  CHECK(tm.depth == 1);
  CHECK(tm.max_covering == 2);
  CHECK(tm.hop_diameter == 2);
  CHECK(tm.weight == 12.0);
  CHECK(tm.mst_weight == 6.0);
}

TEST_CASE("the path is its own mst: lightness one") {
  const MetricSpace m = line_metric(9);
  const TreeMetrics tm = measure(path_on_line(9), m);
  CHECK(tm.depth == 8);
  CHECK(tm.lightness == doctest::Approx(1.0));
  CHECK(tm.max_covering == 0);
}

TEST_CASE("load counts order edges straddled by tree edges") {
  // Tree on the 5-point line: root 4 with children {1,3,5}, and 2 under 5.
  const MetricSpace m = line_metric(5);
  RootedTree t = RootedTree::from_parents(3, {3, 4, 3, -1, 3});
  t.set_line_weights();
  const LoadProfile lp = load(t, identity_order(m));
  CHECK(lp.per_edge[2] == 3);  // order edge between coordinates 3 and 4
  CHECK(lp.max == 3);
}

TEST_CASE("a path loaded against itself has load one") {
  const MetricSpace m = line_metric(8);
  const LoadProfile lp = load(path_on_line(8), identity_order(m));
  for (int q = 0; q < 7; ++q) CHECK(lp.per_edge[q] == 1);
  CHECK(lp.max == 1);
}

TEST_CASE("star rooted at the first order position: nested loads") {
  const MetricSpace m = line_metric(5);
  const LoadProfile lp = load(star_on_line(5, 0), identity_order(m));
  CHECK(lp.per_edge == std::vector<int>{4, 3, 2, 1});
  CHECK(lp.max == 4);
}

TEST_CASE("load of a single vertex is zero") {
  const MetricSpace m = line_metric(1);
  CHECK(load(RootedTree::singleton(), identity_order(m)).max == 0);
}

TEST_CASE("covering per vertex") {
  const CoveringProfile star = covering(star_on_line(7, 3));
  CHECK(star.per_vertex[2] == 2);  // coordinate 3, covered by (4,1) and (4,2)
  CHECK(star.max == 2);

  const CoveringProfile path = covering(path_on_line(6));
  CHECK(path.max == 0);
  CHECK(path.sum == 0);

  const CoveringProfile mid = covering(star_on_line(5, 2));
  CHECK(mid.sum == 2);
  CHECK(star_on_line(5, 2).weight() == 6.0);  // sum + n - 1
}

TEST_CASE("weight equals covering sum plus n-1 on random line trees") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const RootedTree t = random_theta_tree(2 + trial % 40, rng);
    const CoveringProfile cp = covering(t);
    CHECK(t.weight() == static_cast<double>(cp.sum + t.size() - 1));
  }
}

TEST_CASE("covering dominates half the degree slack everywhere") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const RootedTree t = random_theta_tree(2 + trial % 30, rng);
    const CoveringProfile cp = covering(t);
    CHECK(2 * cp.max >= t.max_degree() - 2);
  }
}

TEST_CASE("hop diameter brackets depth") {
  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const RootedTree t = random_theta_tree(1 + trial % 25, rng);
    const int h = t.depth();
    const int lambda = t.hop_diameter();
    CHECK(h <= lambda);
    CHECK(lambda <= 2 * h);
  }
}

TEST_CASE("star covering closed form") {
  CHECK(star_covering(7, 3) == 2);
  CHECK(min_star_covering(32) == 15);
  for (int n = 3; n <= 41; ++n) CHECK(min_star_covering(n) == (n - 3 + 1) / 2);
  CHECK(min_star_covering(2) == 0);
}

TEST_CASE("balanced-looking tree on 12 line points has depth 3") {
  // Root at coordinate 6, recursively halved; checked against measure().
  RootedTree t = RootedTree::from_parents(
      5, {2, 0, 5, 2, 3, -1, 8, 6, 5, 8, 9, 9});
  t.set_line_weights();
  CHECK(measure(t, line_metric(12)).depth == 3);
}

TEST_CASE("measure rejects non-spanning trees") {
  CHECK_THROWS_AS(measure(path_on_line(4), line_metric(5)), validation_error);
}

TEST_CASE("metrics serialize with fixed field names") {
  const TreeMetrics tm = measure(star_on_line(5, 2), line_metric(5));
  const std::string json = metrics_to_json(tm);
  for (const char* field : {"\"depth\"", "\"hop_diameter\"", "\"weight\"", "\"mst_weight\"",
                            "\"lightness\"", "\"load\"", "\"max_covering\"", "\"max_arity\""})
    CHECK(json.find(field) != std::string::npos);
  CHECK(json.find("\"load\": null") != std::string::npos);
}

TEST_CASE("tree text round trip") {
  Rng rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const RootedTree t = random_theta_tree(1 + trial % 20, rng);
    std::stringstream buf;
    write_tree(buf, t);
    const RootedTree back = read_tree(buf);
    CHECK(back.root == t.root);
    CHECK(back.parent == t.parent);
  }
}

TEST_CASE("malformed tree files are rejected") {
  std::istringstream no_root("1 2 1\n");
  CHECK_THROWS_AS(read_tree(no_root), validation_error);
  std::istringstream orphan("root 1\n2 3 1\n");
  CHECK_THROWS_AS(read_tree(orphan), validation_error);
  std::istringstream dup("root 1\n1 2 1\n1 2 1\n");
  CHECK_THROWS_AS(read_tree(dup), validation_error);
}

}  // TEST_SUITE
