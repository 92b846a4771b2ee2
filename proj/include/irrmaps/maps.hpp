#pragma once

#include "irrmaps/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace irrmaps {

// Rooted planar map as a rotation system on darts 0..2E-1. alpha pairs the
// two darts of an edge, sigma turns counterclockwise around a vertex, and
// faces are the cycles of phi = sigma o alpha. The outer face is the phi-cycle
// of the root dart. E = 0 is the single-vertex map (root = -1).
struct CombMap {
  int edges = 0;
  std::vector<int> alpha;
  std::vector<int> sigma;
  int root = -1;

  int darts() const { return 2 * edges; }
  int phi(int d) const { return sigma[alpha[d]]; }
  bool operator==(const CombMap& o) const {
    return edges == o.edges && root == o.root && alpha == o.alpha && sigma == o.sigma;
  }
  bool operator<(const CombMap& o) const;

  static CombMap vertex();
};

// Throws std::invalid_argument when the rotation system is not a rooted
// connected planar map.
void validate(const CombMap& m);

// Breadth-first relabeling from the root dart.
CombMap canonical(const CombMap& m);
// New label of every dart under canonical().
std::vector<int> canonical_labels(const CombMap& m);

struct Topology {
  int vertices = 0;
  std::vector<int> vertex_of;  // tail vertex of each dart
  std::vector<int> edge_of;
  std::vector<int> face_of;
  std::vector<std::vector<int>> faces;  // darts in phi order
  int outer = 0;
  // vertex -> (neighbour, edge id), one entry per dart
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  int head(const CombMap& m, int d) const { return vertex_of[m.alpha[d]]; }
  std::uint64_t face_edges(int f) const;
};

Topology analyze(const CombMap& m);

struct MapStats {
  int outer_degree = 0;
  std::vector<int> inner_degrees;  // sorted
  std::optional<int> girth;        // empty for trees
};

MapStats map_stats(const CombMap& m);
std::optional<int> girth(const CombMap& m, const Topology& t);

// Edge sets of all simple cycles of length exactly `length`.
std::vector<std::uint64_t> simple_cycles(const Topology& t, int length);
// Simple cycles of every length, as (length, edge set).
std::vector<std::pair<int, std::uint64_t>> all_simple_cycles(const Topology& t, int max_length);

bool is_d_irreducible(const CombMap& m, int d);
bool is_weakly_d_irreducible(const CombMap& m, int d);

// Classical count 2 * 3^E * C(2E, E) / ((E + 1)(E + 2)).
Integer rooted_map_count(int edges);

struct MapFilter {
  // Pruning is sound because deleting the root edge never lowers the girth
  // and keeps every inner face of the smaller maps.
  int min_girth = 0;
  int max_inner_degree = 0;  // 0 = no cap
  int outer_degree = -1;     // -1 = any
};

constexpr int kMaxEdges = 8;

// Every rooted planar map with exactly `edges` edges passing the filter, once
// each, built by the root-edge decomposition. `shard`/`shards` split the last
// level by base index.
void enumerate_maps(int edges, const MapFilter& filter, const std::function<void(const CombMap&)>& visit,
                    int shard = 0, int shards = 1);
std::vector<CombMap> maps_with_edges(int edges, const MapFilter& filter = {});

struct SlicePackage {
  CombMap map;
  int apex = 0;  // vertex index in analyze(map)
  int k = 0;
  int p = 0;
};

struct SliceCertificate {
  bool boundaries_meet = false;  // outer face = root + right + left
  bool right_unique_geodesic = false;
  bool left_geodesic = false;  // among paths avoiding the root edge
  bool lengths_match = false;  // p declared, left = p + k + 1
  bool apex_only_common = false;
  bool has_inner_face = false;
  bool trivial_edge = false;  // the 0/1 slice reduced to its root edge
  int right_length = -1;
  int left_length = -1;

  bool ok() const {
    return trivial_edge || (boundaries_meet && right_unique_geodesic && left_geodesic && lengths_match &&
                            apex_only_common && has_inner_face);
  }
};

SliceCertificate certify(const SlicePackage& pkg);
bool certify_slice(const SlicePackage& pkg);

struct AnnularClass {
  std::optional<int> separating_girth;
  std::optional<int> non_separating_girth;
  bool irreducible = false;
  bool quasi_irreducible = false;
};

// `central` is a face index of analyze(m); it must be an inner face.
AnnularClass classify_annular(const CombMap& m, int central, int d, int central_degree);

// Inner face profile as degree -> multiplicity.
using Profile = std::map<int, int>;
std::string profile_monomial(const Profile& p, int d);

struct CrossRow {
  std::string context;
  std::string monomial;
  Rational expected;  // series coefficient
  long computed = 0;  // exhaustive count
  bool ok() const { return expected == computed; }
};

struct CrossReport {
  int d = 0;
  int n = 0;
  int max_edges = 0;
  std::vector<CrossRow> rows;
  bool ok() const;
};

// Counts d-irreducible maps with outer degree n and at most max_edges edges
// by inner face profile and compares each count with the matching
// coefficient of F_n^(d). max_degree > 0 restricts the face degrees.
CrossReport cross_validate(int d, int n, int max_edges, int max_degree = 0, int jobs = 1);

nlohmann::json map_to_json(const CombMap& m);
CombMap map_from_json(const nlohmann::json& j);

}  // namespace irrmaps
