#include "test_util.hpp"

#include "irrmaps/combinatorics.hpp"
#include "irrmaps/kernel.hpp"
#include "irrmaps/trees.hpp"

#include <algorithm>
#include <set>

using namespace irrmaps;

namespace {

long count_trees(int d, int k, int leaves) { return static_cast<long>(trees_with_leaves(d, k, leaves).size()); }

// certified slices of pure d-angular d-irreducible maps with <= max_edges edges
std::vector<SlicePackage> harvest(int d, int max_edges) {
  std::vector<SlicePackage> out;
  MapFilter f;
  f.min_girth = d;
  f.max_inner_degree = d;
  for (int e = 1; e <= max_edges; ++e)
    enumerate_maps(e, f, [&](const CombMap& m) {
      auto s = map_stats(m);
      if (s.inner_degrees.empty() || s.inner_degrees.front() != d || !is_d_irreducible(m, d)) return;
      Topology t = analyze(m);
      std::set<int> outer_vertices;
      for (int x : t.faces[t.outer]) outer_vertices.insert(t.vertex_of[x]);
      for (int apex : outer_vertices)
        for (int k = 1; k <= d - 2; ++k) {
          SlicePackage pkg{m, apex, k, 0};
          auto c = certify(pkg);
          if (c.right_length < 0) continue;
          pkg.p = c.right_length;
          if (certify_slice(pkg)) out.push_back(pkg);
        }
    });
  return out;
}

}  // namespace

TEST_CASE("ternary trees by leaves") {
  std::vector<long> counts;
  for (int l = 1; l <= 5; ++l) counts.push_back(count_trees(3, 1, l));
  CHECK(counts == std::vector<long>{1, 0, 1, 0, 3});
  for (int d = 3; d <= 7; ++d) {
    CHECK(count_trees(d, d - 2, 1) >= 1);
    CHECK(trees_with_leaves(d, d - 2, 1).front() == leaf_tree(d));
    CHECK(leaf_tree(d).edges() == 1);
  }
  CHECK_THROWS(trees_with_leaves(4, 3, 2));
  CHECK_THROWS(trees_with_leaves(4, 0, 2));
}

TEST_CASE("tree census equals slice series") {
  for (int d = 3; d <= 6; ++d) {
    auto ks = solve_kernel(WeightSpec::pure(d, 8));
    for (int k = 1; k <= d - 2; ++k)
      for (int l = 1; l <= 8; ++l) {
        INFO("d=" << d << " k=" << k << " leaves=" << l);
        CHECK(Rational(count_trees(d, k, l)) == ks.V(k).coeff_of("z", l));
      }
  }
}

TEST_CASE("contour heights") {
  for (int d = 3; d <= 5; ++d)
    for (int k = 1; k <= d - 2; ++k)
      enumerate_trees(d, k, 7, [&](const OrientedTree& t) {
        auto c = contour(t);
        CHECK(c.heights.front() == 0);
        CHECK(c.heights.back() == k);
        CHECK(c.completed.back() == -c.p - 1);
        CHECK(static_cast<int>(c.completed.size() - c.heights.size()) == k + c.p + 1);
        // height changes by m across every subtree
        for (const auto& sub : t.children) CHECK(contour(sub).heights.back() == sub.k);
      });
  CHECK(tree_depth(leaf_tree(5)) == 0);
}

TEST_CASE("closure of the single leaf edge is the d-gon") {
  for (int d = 3; d <= 7; ++d) {
    auto pkg = closure(leaf_tree(d));
    auto s = map_stats(pkg.map);
    CHECK(pkg.map.edges == d);
    CHECK(s.inner_degrees == std::vector<int>{d});
    CHECK(pkg.p == 0);
    CHECK(pkg.k == d - 2);
    CHECK(certify_slice(pkg));
    CHECK(open_slice(pkg, d) == leaf_tree(d));
  }
}

TEST_CASE("closure gives irreducible slices and opening inverts it") {
  for (int d = 3; d <= 5; ++d)
    for (int k = 1; k <= d - 2; ++k) {
      long n = 0;
      enumerate_trees(d, k, 8, [&](const OrientedTree& t) {
        ++n;
        INFO("d=" << d << " k=" << k << " tree " << tree_to_json(t).dump());
        auto pkg = closure(t);
        auto s = map_stats(pkg.map);
        CHECK(static_cast<int>(s.inner_degrees.size()) == t.leaves());
        CHECK(std::all_of(s.inner_degrees.begin(), s.inner_degrees.end(), [&](int x) { return x == d; }));
        CHECK(s.outer_degree == 2 * pkg.p + k + 2);
        CHECK(pkg.p == tree_depth(t));
        CHECK(certify_slice(pkg));
        CHECK(is_d_irreducible(pkg.map, d));
        CHECK(open_slice(pkg, d) == t);
      });
      // odd k with even d: no finite trees
      CHECK((n > 0) == (d % 2 != 0 || k % 2 == 0));
    }
}

TEST_CASE("worked example shape: d=5 2-slice of type 3/6 from four leaves") {
  bool found = false;
  for (const auto& t : trees_with_leaves(5, 2, 4)) {
    auto pkg = closure(t);
    if (pkg.p != 3) continue;
    found = true;
    CHECK(certify(pkg).left_length == 6);
  }
  CHECK(found);
}

TEST_CASE("opening slices found among small maps") {
  for (int d = 3; d <= 5; ++d) {
    auto slices = harvest(d, 7);
    CHECK(!slices.empty());
    for (const auto& s : slices) {
      INFO("d=" << d << " k=" << s.k << " p=" << s.p << " map " << map_to_json(s.map).dump());
      OrientedTree t = open_slice(s, d);
      CHECK(t.k == s.k);
      CHECK(same_slice(closure(t), s));
    }
  }
  // perturbed packages are rejected
  for (const auto& s : harvest(4, 6)) {
    SlicePackage wrong = s;
    wrong.k += 1;
    CHECK_FALSE(certify_slice(wrong));
  }
}

TEST_CASE("depth census") {
  auto census = depth_census(3, 9);
  long total = 0;
  for (const auto& [kp, row] : census) total += row[7];
  CHECK(total == count_trees(3, 1, 7));
  CHECK(census[{1, 0}][1] == 1);  // the single triangle
  CHECK(census[{1, 0}][3] == 0);
}

TEST_CASE("bipartite conversion") {
  // d=4, k=2: binary trees, Catalan by leaves
  for (int l = 1; l <= 8; ++l) {
    const auto& trees = trees_with_leaves(4, 2, l);
    CHECK(Integer(static_cast<long>(trees.size())) == catalan(l - 1));
    for (const auto& t : trees) {
      OrientedTree c = bipartite_convert(t);
      validate(c);
      CHECK(c.leaves() == t.leaves());
      CHECK(bipartite_unconvert(c) == t);
      // binary: every inner vertex has two subtrees
      std::function<bool(const OrientedTree&)> binary = [&](const OrientedTree& x) {
        if (x.leaf) return true;
        return x.children.size() == 2 && binary(x.children[0]) && binary(x.children[1]);
      };
      CHECK(binary(c));
    }
    CHECK(converted_trees_with_leaves(2, 1, l).size() == trees.size());
  }
  // d=6, k=2
  auto ks = solve_kernel_bipartite(WeightSpec::pure(6, 8));
  for (int l = 1; l <= 8; ++l) {
    CHECK(Rational(static_cast<long>(converted_trees_with_leaves(3, 1, l).size())) == ks.U(1).coeff_of("z", l));
    for (const auto& t : trees_with_leaves(6, 2, l)) {
      auto c = bipartite_convert(t);
      CHECK(tree_depth(bipartite_unconvert(c)) == tree_depth(t));
    }
  }
  CHECK_THROWS(bipartite_convert(trees_with_leaves(6, 1, 3).empty() ? leaf_tree(5) : trees_with_leaves(6, 1, 3)[0]));
  for (int l = 1; l <= 8; ++l) CHECK(count_trees(6, 1, l) == 0);
}

TEST_CASE("tree json round trip") {
  for (const auto& t : trees_with_leaves(5, 1, 4)) CHECK(tree_from_json(tree_to_json(t), 5) == t);
  CHECK(tree_to_json(leaf_tree(4)) == nlohmann::json({{"type", "leaf"}}));
  nlohmann::json bad = {{"type", "inner"}, {"m", 1}, {"children", {{{"type", "leaf"}}}}};
  CHECK_THROWS(tree_from_json(bad, 4));
}
