#pragma once

#include "irrmaps/maps.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <vector>

namespace irrmaps {

// d-oriented k-tree for irreducible d-angular dissections. A node is the
// edge leaving its root vertex: either a leaf edge (k = d-2) or an inner
// edge of type k/(d-1-k) whose lower vertex carries the subtrees `children`,
// with sum of child k equal to k+2. After bipartite conversion the same shape
// holds with d replaced by b = d/2: leaf k = b-1 and child sum k+1.
struct OrientedTree {
  int d = 3;
  int k = 1;
  bool leaf = false;
  bool converted = false;
  std::vector<OrientedTree> children;

  bool operator==(const OrientedTree& o) const {
    return d == o.d && k == o.k && leaf == o.leaf && converted == o.converted && children == o.children;
  }
  bool operator!=(const OrientedTree& o) const { return !(*this == o); }

  int edges() const;
  int leaves() const;
};

// Throws std::invalid_argument on a broken arrow count.
void validate(const OrientedTree& t);
OrientedTree leaf_tree(int d);

// All d-oriented k-trees with the given number of leaves, each once.
const std::vector<OrientedTree>& trees_with_leaves(int d, int k, int leaves);
void enumerate_trees(int d, int k, int max_edges, const std::function<void(const OrientedTree&)>& visit);

struct ContourLabeling {
  std::vector<int> heights;  // tree corners, 0 first and k last
  int p = 0;                 // minimum is -p-1
  std::vector<int> completed;  // heights plus k-1 .. -p-1 along the appended edges
};

ContourLabeling contour(const OrientedTree& t);
int tree_depth(const OrientedTree& t);

// The k-slice of type p/p+k+1 built by connecting each leaf to its successor.
SlicePackage closure(const OrientedTree& t);

// Inverse of closure by the iterated decomposition along leftmost geodesics.
// Throws when pkg is not a certified pure d-angular d-irreducible slice.
OrientedTree open_slice(const SlicePackage& pkg, int d);

// Same map, root and apex up to relabeling.
bool same_slice(const SlicePackage& a, const SlicePackage& b);

// (k, p) -> coefficient by leaves, for trees of depth exactly p.
using DepthCensus = std::map<std::pair<int, int>, std::vector<long>>;
DepthCensus depth_census(int d, int max_leaves);

OrientedTree bipartite_convert(const OrientedTree& t);
OrientedTree bipartite_unconvert(const OrientedTree& t);
// Converted trees enumerated directly from the b-rules.
const std::vector<OrientedTree>& converted_trees_with_leaves(int b, int k, int leaves);

nlohmann::json tree_to_json(const OrientedTree& t);
// d is the orientation parameter (b after conversion).
OrientedTree tree_from_json(const nlohmann::json& j, int d, bool converted = false);

}  // namespace irrmaps
