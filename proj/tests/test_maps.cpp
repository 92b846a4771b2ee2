#include "test_util.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/maps.hpp"

#include <set>

using namespace irrmaps;

namespace {

// face index of analyze(m) for every inner face of the given degree
std::vector<int> inner_faces(const Topology& t, int degree) {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    if (f != t.outer && static_cast<int>(t.faces[f].size()) == degree) out.push_back(f);
  return out;
}

bool all_inner_degree(const MapStats& s, int degree) {
  for (int x : s.inner_degrees)
    if (x != degree) return false;
  return true;
}

// single cycle of length d, rooted on it
CombMap polygon(int d) {
  CombMap m;
  m.edges = d;
  m.alpha.resize(2 * d);
  m.sigma.resize(2 * d);
  // dart 2i goes from vertex i to i+1, dart 2i+1 back
  for (int i = 0; i < d; ++i) {
    m.alpha[2 * i] = 2 * i + 1;
    m.alpha[2 * i + 1] = 2 * i;
    int out = 2 * i, in = 2 * ((i + d - 1) % d) + 1;
    m.sigma[out] = in;
    m.sigma[in] = out;
  }
  m.root = 0;
  return m;
}

}  // namespace

TEST_CASE("map counts by edges match the classical formula") {
  CHECK(rooted_map_count(1) == 2);
  CHECK(rooted_map_count(4) == 378);
  for (int e = 0; e <= 7; ++e) {
    long count = 0;
    enumerate_maps(e, {}, [&](const CombMap&) { ++count; });
    CHECK(Integer(count) == rooted_map_count(e));
  }
}

TEST_CASE("generated maps are valid and pairwise distinct") {
  for (int e = 0; e <= 5; ++e) {
    std::set<CombMap> seen;
    for (const auto& m : maps_with_edges(e)) {
      validate(m);
      CombMap c = canonical(m);
      CHECK(canonical(c) == c);
      seen.insert(c);
    }
    CHECK(Integer(static_cast<long>(seen.size())) == rooted_map_count(e));
  }
  auto one = maps_with_edges(1);
  REQUIRE(one.size() == 2);
  std::set<int> vertices;
  for (const auto& m : one) vertices.insert(analyze(m).vertices);
  CHECK(vertices == std::set<int>{1, 2});  // loop and bridge
}

TEST_CASE("sharded generation covers every map once") {
  std::set<CombMap> all;
  long total = 0;
  for (int s = 0; s < 3; ++s)
    enumerate_maps(5, {}, [&](const CombMap& m) {
      all.insert(canonical(m));
      ++total;
    }, s, 3);
  CHECK(total == 2916);
  CHECK(all.size() == 2916);
  CHECK_THROWS(enumerate_maps(9, {}, [](const CombMap&) {}));
}

TEST_CASE("stats and girth") {
  auto stats = map_stats(polygon(1));
  CHECK(stats.girth == 1);
  CHECK(map_stats(polygon(2)).girth == 2);
  auto hex = map_stats(polygon(6));
  CHECK(hex.outer_degree == 6);
  CHECK(hex.inner_degrees == std::vector<int>{6});
  for (int e = 1; e <= 4; ++e)
    for (const auto& m : maps_with_edges(e)) {
      auto s = map_stats(m);
      Topology t = analyze(m);
      int sum = s.outer_degree;
      for (int x : s.inner_degrees) sum += x;
      CHECK(sum == 2 * e);
      CHECK(!s.girth.has_value() == (t.vertices == e + 1));
    }
  CHECK(!map_stats(CombMap::vertex()).girth.has_value());
}

TEST_CASE("girth filter prunes soundly") {
  for (int g = 2; g <= 4; ++g) {
    MapFilter f;
    f.min_girth = g;
    long pruned = 0, direct = 0;
    enumerate_maps(6, f, [&](const CombMap&) { ++pruned; });
    enumerate_maps(6, {}, [&](const CombMap& m) {
      auto s = map_stats(m);
      if (!s.girth || *s.girth >= g) ++direct;
    });
    CHECK(pruned == direct);
  }
}

TEST_CASE("irreducibility predicates") {
  for (int d = 1; d <= 6; ++d) CHECK(is_d_irreducible(polygon(d), d));
  CHECK_FALSE(is_d_irreducible(polygon(3), 4));
  for (const auto& m : maps_with_edges(3)) CHECK(is_d_irreducible(m, 0));

  // outer degree 3, all inner faces triangles, 3 edges: only the triangle
  MapFilter f;
  f.outer_degree = 3;
  f.max_inner_degree = 3;
  int found = 0;
  enumerate_maps(3, f, [&](const CombMap& m) {
    if (is_d_irreducible(m, 3) && !map_stats(m).inner_degrees.empty()) ++found;
  });
  CHECK(found == 1);

  // small outer degree: tree or the single d-gon
  for (int d = 2; d <= 4; ++d)
    for (int e = 0; e <= 6; ++e)
      for (const auto& m : maps_with_edges(e)) {
        auto s = map_stats(m);
        if (s.outer_degree > d || !is_d_irreducible(m, d)) continue;
        bool tree = !s.girth.has_value();
        bool gon = s.outer_degree == d && s.inner_degrees == std::vector<int>{d};
        CHECK((tree || gon));
      }
}

TEST_CASE("weakly irreducible dissections of the d-gon") {
  // h3 = z + z^3 + ..., h4 = z + 2z^2 + 0 z^3 + ...
  std::map<int, std::vector<long>> expect{{3, {0, 1, 0, 1}}, {4, {0, 1, 2, 0}}};
  for (auto& [d, coeffs] : expect) {
    std::vector<long> counts(coeffs.size(), 0);
    MapFilter f;
    f.outer_degree = d;
    f.min_girth = d;
    f.max_inner_degree = d;
    for (int e = 1; e <= 8; ++e)
      enumerate_maps(e, f, [&](const CombMap& m) {
        auto s = map_stats(m);
        if (s.inner_degrees.empty() || !is_weakly_d_irreducible(m, d)) return;
        std::size_t k = s.inner_degrees.size();
        if (k < counts.size()) ++counts[k];
      });
    CHECK(counts == coeffs);
  }
}

TEST_CASE("cross validation against boundary series") {
  auto d4 = cross_validate(4, 6, 7, 4);
  std::map<std::string, long> got;
  for (const auto& r : d4.rows) got[r.monomial] = r.computed;
  CHECK(got["1"] == 5);
  CHECK(got["z"] == 6);
  CHECK(got["z^2"] == 3);
  CHECK(d4.ok());

  auto d3 = cross_validate(3, 4, 8, 3);
  got.clear();
  for (const auto& r : d3.rows) got[r.monomial] = r.computed;
  CHECK(got["1"] == 2);
  CHECK(got["z^2"] == 2);
  CHECK(d3.ok());

  auto d0 = cross_validate(0, 2, 5, 4);
  for (const auto& r : d0.rows) {
    INFO(r.context << " " << r.monomial);
    CHECK(r.ok());
  }
  for (int d = 2; d <= 3; ++d) {
    auto rep = cross_validate(d, d + 1, 6, 0, 2);
    for (const auto& r : rep.rows) {
      INFO(r.context << " " << r.monomial << " expected " << to_string(r.expected));
      CHECK(r.ok());
    }
  }
}

TEST_CASE("slice certificates") {
  // bridge, apex at the head of the root
  auto one = maps_with_edges(1);
  for (const auto& m : one) {
    Topology t = analyze(m);
    if (t.vertices != 2) continue;
    CHECK(certify_slice({m, t.head(m, m.root), 0, 0}));
    CHECK_FALSE(certify_slice({m, t.vertex_of[m.root], 0, 0}));
  }
  // d-gon rooted on an edge, apex p steps along the right boundary
  for (int d = 3; d <= 6; ++d) {
    CombMap g = polygon(d);
    Topology t = analyze(g);
    int x = g.root;
    int steps = (d - 1) / 2;  // p with d - 1 - p = p + k + 1
    for (int i = 0; i < steps; ++i) x = g.phi(x);
    int apex = t.head(g, x);
    int k = d - 2 - 2 * steps;
    CHECK(certify_slice({g, apex, k, steps}));
    CHECK_FALSE(certify_slice({g, apex, k + 1, steps}));
  }
  // path of two edges rooted at the near edge, apex at the far end
  for (const auto& m : maps_with_edges(2)) {
    Topology t = analyze(m);
    if (t.vertices != 3 || t.faces[t.outer].size() != 4) continue;
    for (int v = 0; v < 3; ++v) {
      if (v == t.vertex_of[m.root] || v == t.head(m, m.root)) continue;
      auto cert = certify({m, v, 0, 1});
      CHECK_FALSE(cert.has_inner_face);
      CHECK_FALSE(cert.ok());
    }
  }
}

TEST_CASE("annular maps") {
  CombMap hex = polygon(4);
  Topology t = analyze(hex);
  auto a = classify_annular(hex, inner_faces(t, 4).at(0), 4, 4);
  CHECK(a.separating_girth == 4);
  CHECK(!a.non_separating_girth.has_value());

  for (int d = 3; d <= 4; ++d) {
    auto ks = solve_kernel(WeightSpec::pure(d, 3));
    for (int n = d; n <= d + 2; ++n) {
      AnnularGF gf = annular_gf(n, d, ks);
      std::vector<long> irr(4, 0), quasi(4, 0);
      MapFilter f;
      f.outer_degree = n;
      f.min_girth = d;
      f.max_inner_degree = d;
      for (int e = 1; e <= 8; ++e)
        enumerate_maps(e, f, [&](const CombMap& m) {
          Topology tm = analyze(m);
          int others = static_cast<int>(tm.faces.size()) - 2;
          if (others > 3) return;
          for (int c : inner_faces(tm, d)) {
            auto cls = classify_annular(m, c, d, d);
            irr[others] += cls.irreducible;
            quasi[others] += cls.quasi_irreducible;
          }
        });
      for (int k = 0; k <= 3; ++k) {
        if ((n + d + d * k) / 2 > 8 || (n + d + d * k) % 2 != 0) continue;
        INFO("d=" << d << " n=" << n << " k=" << k);
        CHECK(Rational(irr[k]) == gf.irreducible.coeff_of("z", k));
        CHECK(Rational(quasi[k]) == gf.quasi_irreducible.coeff_of("z", k));
      }
    }
  }
}

TEST_CASE("map json round trip") {
  for (const auto& m : maps_with_edges(3)) CHECK(map_from_json(map_to_json(m)) == m);
  auto j = map_to_json(polygon(1));
  CHECK(j["root"] == 1);
  CHECK(j["alpha"] == nlohmann::json({2, 1}));
  nlohmann::json bad = {{"E", 1}, {"alpha", {1, 1}}, {"sigma", {1, 2}}, {"root", 1}};
  CHECK_THROWS(map_from_json(bad));
}
