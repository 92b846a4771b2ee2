#include "irrmaps/trees.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <tuple>

namespace irrmaps {

int OrientedTree::edges() const {
  int e = 1;
  for (const auto& c : children) e += c.edges();
  return e;
}

int OrientedTree::leaves() const {
  if (leaf) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaves();
  return n;
}

namespace {

int leaf_k(int d, bool converted) { return converted ? d - 1 : d - 2; }
int child_sum(int k, bool converted) { return k + (converted ? 1 : 2); }

OrientedTree make_leaf(int d, bool converted) {
  OrientedTree t;
  t.d = d;
  t.k = leaf_k(d, converted);
  t.leaf = true;
  t.converted = converted;
  return t;
}

}  // namespace

void validate(const OrientedTree& t) {
  auto fail = [](const std::string& why) { throw std::invalid_argument("invalid tree: " + why); };
  if (t.d < (t.converted ? 2 : 3)) fail("d too small");
  const int top = leaf_k(t.d, t.converted);
  if (t.leaf) {
    if (t.k != top) fail("leaf edge needs k = " + std::to_string(top));
    if (!t.children.empty()) fail("leaf edge with children");
    return;
  }
  if (t.k < 1 || t.k > top) fail("k out of range");
  if (t.children.empty()) fail("inner edge without subtrees");
  int sum = 0;
  for (const auto& c : t.children) {
    if (c.d != t.d || c.converted != t.converted) fail("mixed parameters");
    sum += c.k;
    validate(c);
  }
  if (sum != child_sum(t.k, t.converted)) fail("out-degree of an inner vertex is wrong");
}

OrientedTree leaf_tree(int d) { return make_leaf(d, false); }

namespace {

const std::vector<OrientedTree>& generate(int d, bool converted, int k, int leaves) {
  static std::map<std::tuple<int, bool, int, int>, std::vector<OrientedTree>> memo;
  auto key = std::make_tuple(d, converted, k, leaves);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const int top = leaf_k(d, converted);
  if (d < (converted ? 2 : 3) || k < 1 || k > top) throw std::invalid_argument("need 1 <= k <= " + std::to_string(top));
  std::vector<OrientedTree> out;
  if (k == top && leaves == 1) out.push_back(make_leaf(d, converted));
  std::vector<OrientedTree> seq;
  std::function<void(int, int)> rec = [&](int sum, int left) {
    if (sum == 0) {
      if (left == 0 && !seq.empty()) {
        OrientedTree t;
        t.d = d;
        t.k = k;
        t.converted = converted;
        t.children = seq;
        out.push_back(std::move(t));
      }
      return;
    }
    for (int m = 1; m <= std::min(top, sum); ++m)
      for (int l = m == sum ? left : 1; l <= (m == sum ? left : left - 1); ++l)
        for (const auto& sub : generate(d, converted, m, l)) {
          seq.push_back(sub);
          rec(sum - m, left - l);
          seq.pop_back();
        }
  };
  if (leaves >= 1) rec(child_sum(k, converted), leaves);
  return memo[key] = std::move(out);
}

}  // namespace

const std::vector<OrientedTree>& trees_with_leaves(int d, int k, int leaves) { return generate(d, false, k, leaves); }

const std::vector<OrientedTree>& converted_trees_with_leaves(int b, int k, int leaves) {
  return generate(b, true, k, leaves);
}

void enumerate_trees(int d, int k, int max_edges, const std::function<void(const OrientedTree&)>& visit) {
  for (int leaves = 1; leaves <= max_edges; ++leaves)
    for (const auto& t : trees_with_leaves(d, k, leaves))
      if (t.edges() <= max_edges) visit(t);
}

// ---- contour and closure ----

namespace {

void walk_heights(const OrientedTree& t, std::vector<int>& h) {
  h.push_back(h.back() - 1);
  if (t.leaf) {
    h.push_back(h.back() + t.d - 1);
    return;
  }
  for (const auto& c : t.children) walk_heights(c, h);
  h.push_back(h.back() - 1);
}

}  // namespace

ContourLabeling contour(const OrientedTree& t) {
  validate(t);
  if (t.converted) throw std::invalid_argument("contour needs an unconverted tree");
  ContourLabeling c;
  c.heights.push_back(0);
  walk_heights(t, c.heights);
  c.p = -*std::min_element(c.heights.begin(), c.heights.end()) - 1;
  c.completed = c.heights;
  for (int h = t.k - 1; h >= -c.p - 1; --h) c.completed.push_back(h);
  return c;
}

int tree_depth(const OrientedTree& t) { return contour(t).p; }

namespace {

struct Builder {
  std::vector<std::vector<int>> rot;  // darts around each vertex, counterclockwise
  std::vector<int> alpha, tail;
  std::vector<char> leaf_vertex, leaf_up;

  int vertex(bool leaf = false) {
    rot.emplace_back();
    leaf_vertex.push_back(leaf);
    return static_cast<int>(rot.size()) - 1;
  }
  // dart u->v then v->u
  std::pair<int, int> edge(int u, int v) {
    int x = static_cast<int>(alpha.size());
    alpha.push_back(x + 1);
    alpha.push_back(x);
    tail.push_back(u);
    tail.push_back(v);
    leaf_up.push_back(0);
    leaf_up.push_back(0);
    return {x, x + 1};
  }
  void attach(const OrientedTree& t, int v) {
    int c = vertex(t.leaf);
    auto [down, up] = edge(v, c);
    rot[v].push_back(down);
    rot[c].push_back(up);
    if (t.leaf) leaf_up[up] = 1;
    for (const auto& sub : t.children) attach(sub, c);
  }
  std::vector<int> sigma() const {
    std::vector<int> s(alpha.size());
    for (const auto& r : rot)
      for (std::size_t i = 0; i < r.size(); ++i) s[r[i]] = r[(i + 1) % r.size()];
    return s;
  }
};

}  // namespace

SlicePackage closure(const OrientedTree& t) {
  ContourLabeling lab = contour(t);
  const int d = t.d;
  Builder b;
  const int root_vertex = b.vertex();
  b.attach(t, root_vertex);
  const int first = 0;  // root edge, from the root vertex down
  int prev = root_vertex, last = -1;
  for (int i = 0; i < t.k + lab.p + 1; ++i) {
    int n = b.vertex();
    auto [x, y] = b.edge(prev, n);
    b.rot[prev].push_back(x);
    b.rot[n].push_back(y);
    prev = n;
    last = x;
  }

  struct Corner {
    int vertex, anchor, height;
  };
  std::vector<int> sigma = b.sigma();
  std::vector<Corner> corners{{root_vertex, b.rot[root_vertex].back(), 0}};
  for (int x = first, h = 0;; x = sigma[b.alpha[x]]) {
    h += b.leaf_up[x] ? d - 1 : -1;
    corners.push_back({b.tail[b.alpha[x]], b.alpha[x], h});
    if (x == last) break;
  }
  if (corners.size() != lab.completed.size()) throw std::logic_error("contour length mismatch");
  for (std::size_t i = 0; i < corners.size(); ++i)
    if (corners[i].height != lab.completed[i]) throw std::logic_error("contour height mismatch");

  std::vector<std::pair<int, int>> chords;
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const int v = corners[i].vertex;
    if (!b.leaf_vertex[v]) continue;
    std::size_t j = i + 1;
    while (j < corners.size() && corners[j].height != corners[i].height) ++j;
    if (j == corners.size()) throw std::logic_error("leaf without successor");
    const int w = corners[j].vertex;
    auto [x, y] = b.edge(v, w);
    b.rot[v].push_back(x);
    auto& rw = b.rot[w];
    rw.insert(std::find(rw.begin(), rw.end(), corners[j].anchor) + 1, y);
    chords.emplace_back(x, y);
  }

  // contract every chord into the vertex of its successor corner
  sigma = b.sigma();
  const int n = static_cast<int>(sigma.size());
  std::vector<int> inv(n);
  for (int x = 0; x < n; ++x) inv[sigma[x]] = x;
  std::vector<char> gone(n, 0);
  for (auto [x, y] : chords) {
    int px = inv[x], sx = sigma[x], py = inv[y], sy = sigma[y];
    sigma[py] = sx;
    inv[sx] = py;
    sigma[px] = sy;
    inv[sy] = px;
    gone[x] = gone[y] = 1;
  }
  std::vector<int> label(n, -1);
  int kept = 0;
  for (int x = 0; x < n; ++x)
    if (!gone[x]) label[x] = kept++;
  SlicePackage pkg;
  pkg.map.edges = kept / 2;
  pkg.map.alpha.resize(kept);
  pkg.map.sigma.resize(kept);
  for (int x = 0; x < n; ++x)
    if (!gone[x]) {
      pkg.map.alpha[label[x]] = label[b.alpha[x]];
      pkg.map.sigma[label[x]] = label[sigma[x]];
    }
  pkg.map.root = label[first];
  validate(pkg.map);
  pkg.apex = analyze(pkg.map).vertex_of[label[b.alpha[last]]];
  pkg.k = t.k;
  pkg.p = lab.p;
  return pkg;
}

// ---- opening ----

namespace {

// Leftmost means the first candidate met when turning from the reversed
// arrival dart in the direction of sigma^-1.
constexpr bool kTurnBackward = true;

struct Region {
  std::vector<char> faces;
  int root = 0;  // A -> B
  int apex = 0;
  std::vector<int> right;  // B -> apex
  std::vector<int> left;   // A -> apex
  int k = 0;
  int p = 0;
};

struct Opener {
  const CombMap& m;
  const Topology& t;
  int d;
  std::vector<int> sigma_inv;

  Opener(const CombMap& map, const Topology& top, int d_) : m(map), t(top), d(d_), sigma_inv(map.darts()) {
    for (int x = 0; x < m.darts(); ++x) sigma_inv[m.sigma[x]] = x;
  }

  int head(int x) const { return t.head(m, x); }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("slice does not decompose: " + why);
  }

  int size(const Region& r) const {
    std::set<int> edges;
    for (int x = 0; x < m.darts(); ++x)
      if (r.faces[t.face_of[x]]) edges.insert(t.edge_of[x]);
    return static_cast<int>(edges.size()) - static_cast<int>(r.left.size());
  }

  std::vector<int> bfs(int source, const std::vector<char>& allowed, int skip) const {
    std::vector<int> dist(t.vertices, -1);
    dist[source] = 0;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (auto [w, e] : t.adjacency[u])
        if (allowed[e] && e != skip && dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue.push_back(w);
        }
    }
    return dist;
  }

  std::vector<int> leftmost_path(int start_arrival, int apex, const std::vector<char>& allowed, int skip,
                                 const std::vector<int>& dist) const {
    std::vector<int> path;
    int arrival = start_arrival, cur = head(arrival);
    while (cur != apex) {
      int chosen = -1, x = m.alpha[arrival];
      do {
        int e = t.edge_of[x];
        if (allowed[e] && e != skip && dist[head(x)] == dist[cur] - 1) {
          chosen = x;
          break;
        }
        x = kTurnBackward ? sigma_inv[x] : m.sigma[x];
      } while (x != m.alpha[arrival]);
      if (chosen < 0) fail("geodesic lost");
      path.push_back(chosen);
      arrival = chosen;
      cur = head(chosen);
    }
    return path;
  }

  OrientedTree open(const Region& r) const {
    const int total = size(r);
    int face_count = static_cast<int>(std::count(r.faces.begin(), r.faces.end(), 1));
    if (r.p == 0) {
      if (r.k != d - 2 || face_count != 1) fail("type 0 slice is not a single face");
      return leaf_tree(d);
    }
    std::vector<char> remaining = r.faces;
    std::vector<int> prev = r.right;
    const int b = head(r.root);
    int msum = 0, sizes = 0;
    OrientedTree node;
    node.d = d;
    node.k = r.k;
    while (true) {
      const int skip = t.edge_of[prev[0]];
      std::vector<char> allowed(m.edges, 0);
      for (int x = 0; x < m.darts(); ++x)
        if (remaining[t.face_of[x]]) allowed[t.edge_of[x]] = 1;
      for (int x : prev) allowed[t.edge_of[x]] = 1;
      for (int x : r.left) allowed[t.edge_of[x]] = 1;
      allowed[t.edge_of[r.root]] = 1;
      auto dist = bfs(r.apex, allowed, skip);
      if (dist[b] < 0) fail("apex unreachable");
      auto path = leftmost_path(r.root, r.apex, allowed, skip, dist);
      const int mi = static_cast<int>(path.size()) - static_cast<int>(prev.size());
      if (mi < 1) fail("right boundary is not the unique geodesic");

      // where the new path meets the previous one
      std::map<int, int> on_prev;
      for (std::size_t i = 0; i < prev.size(); ++i) on_prev[head(prev[i])] = static_cast<int>(i);
      std::size_t j = 0;
      while (!on_prev.count(head(path[j]))) ++j;
      const int q = on_prev[head(path[j])];
      if (path.size() - j != prev.size() - q) fail("paths do not share their tail");
      for (std::size_t i = 1; j + i < path.size(); ++i)
        if (path[j + i] != prev[q + i]) fail("paths do not share their tail");

      Region piece;
      piece.root = prev[0];
      piece.apex = head(path[j]);
      piece.right.assign(prev.begin() + 1, prev.begin() + q + 1);
      piece.left.assign(path.begin(), path.begin() + j + 1);
      piece.k = mi;
      piece.p = static_cast<int>(piece.right.size());
      if (static_cast<int>(piece.left.size()) != piece.p + mi + 1) fail("piece has the wrong type");
      if (mi > d - 2) fail("piece is not a k-slice with k <= d-2");

      std::set<int> cut;
      for (int x : path) cut.insert(t.edge_of[x]);
      piece.faces.assign(t.faces.size(), 0);
      int seed = remaining[t.face_of[prev[0]]] ? t.face_of[prev[0]] : t.face_of[m.alpha[prev[0]]];
      if (!remaining[seed]) fail("no face next to the first right edge");
      std::vector<int> stack{seed};
      piece.faces[seed] = 1;
      while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int x : t.faces[f]) {
          int g = t.face_of[m.alpha[x]];
          if (cut.count(t.edge_of[x]) || !remaining[g] || piece.faces[g]) continue;
          piece.faces[g] = 1;
          stack.push_back(g);
        }
      }
      for (std::size_t f = 0; f < remaining.size(); ++f)
        if (piece.faces[f]) remaining[f] = 0;

      node.children.push_back(open(piece));
      sizes += size(piece);
      msum += mi;
      prev = path;
      if (msum == r.k + 2) {
        std::vector<int> along{m.alpha[r.root]};
        along.insert(along.end(), r.left.begin(), r.left.end());
        if (path != along) fail("last path is not the left boundary");
        if (std::count(remaining.begin(), remaining.end(), 1) != 0) fail("faces left over");
        break;
      }
      if (msum > r.k + 2) fail("out-degrees overshoot");
    }
    if (sizes != total - 1) fail("sizes of the pieces do not add up");
    return node;
  }
};

}  // namespace

OrientedTree open_slice(const SlicePackage& pkg, int d) {
  auto cert = certify(pkg);
  if (!cert.ok() || cert.trivial_edge) throw std::invalid_argument("not a certified slice");
  if (pkg.k < 1 || pkg.k > d - 2) throw std::invalid_argument("need 1 <= k <= d-2");
  const CombMap& m = pkg.map;
  Topology t = analyze(m);
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    if (f != t.outer && static_cast<int>(t.faces[f].size()) != d)
      throw std::invalid_argument("slice is not d-angular");
  if (!is_d_irreducible(m, d)) throw std::invalid_argument("slice is not d-irreducible");

  Region r;
  r.faces.assign(t.faces.size(), 1);
  r.faces[t.outer] = 0;
  r.root = m.root;
  r.apex = pkg.apex;
  r.k = pkg.k;
  r.p = pkg.p;
  const auto& outer = t.faces[t.outer];
  const int right = cert.right_length;
  r.right.assign(outer.begin() + 1, outer.begin() + 1 + right);
  for (auto it = outer.rbegin(); it != outer.rend() - 1 - right; ++it) r.left.push_back(m.alpha[*it]);
  Opener op(m, t, d);
  OrientedTree tree = op.open(r);
  validate(tree);
  return tree;
}

bool same_slice(const SlicePackage& a, const SlicePackage& b) {
  if (a.k != b.k || a.p != b.p || !(canonical(a.map) == canonical(b.map))) return false;
  auto apex_label = [](const SlicePackage& s) {
    auto labels = canonical_labels(s.map);
    Topology t = analyze(s.map);
    int best = -1;
    for (int x = 0; x < s.map.darts(); ++x)
      if (t.vertex_of[x] == s.apex && (best < 0 || labels[x] < best)) best = labels[x];
    return best;
  };
  return apex_label(a) == apex_label(b);
}

DepthCensus depth_census(int d, int max_leaves) {
  DepthCensus out;
  for (int k = 1; k <= d - 2; ++k)
    for (int l = 1; l <= max_leaves; ++l)
      for (const auto& t : trees_with_leaves(d, k, l)) {
        auto& row = out[{k, tree_depth(t)}];
        row.resize(max_leaves + 1, 0);
        ++row[l];
      }
  return out;
}

// ---- bipartite conversion ----

OrientedTree bipartite_convert(const OrientedTree& t) {
  if (t.converted) throw std::invalid_argument("tree is already converted");
  if (t.d % 2 != 0) throw std::invalid_argument("conversion needs even d");
  if (t.k % 2 != 0) throw std::invalid_argument("conversion needs even k");
  OrientedTree out;
  out.d = t.d / 2;
  out.k = t.k / 2;
  out.leaf = t.leaf;
  out.converted = true;
  for (const auto& c : t.children) out.children.push_back(bipartite_convert(c));
  return out;
}

OrientedTree bipartite_unconvert(const OrientedTree& t) {
  if (!t.converted) throw std::invalid_argument("tree is not converted");
  OrientedTree out;
  out.d = 2 * t.d;
  out.k = 2 * t.k;
  out.leaf = t.leaf;
  for (const auto& c : t.children) out.children.push_back(bipartite_unconvert(c));
  return out;
}

// ---- JSON ----

nlohmann::json tree_to_json(const OrientedTree& t) {
  if (t.leaf) return {{"type", "leaf"}};
  nlohmann::json kids = nlohmann::json::array();
  for (const auto& c : t.children) kids.push_back(tree_to_json(c));
  return {{"type", "inner"}, {"m", t.k}, {"children", kids}};
}

namespace {

OrientedTree parse_tree(const nlohmann::json& j, int d, bool converted) {
  const std::string type = j.at("type").get<std::string>();
  if (type == "leaf") return make_leaf(d, converted);
  if (type != "inner") throw std::invalid_argument("unknown tree node type " + type);
  OrientedTree t;
  t.d = d;
  t.converted = converted;
  t.k = j.at("m").get<int>();
  for (const auto& c : j.at("children")) t.children.push_back(parse_tree(c, d, converted));
  return t;
}

}  // namespace

OrientedTree tree_from_json(const nlohmann::json& j, int d, bool converted) {
  OrientedTree t = parse_tree(j, d, converted);
  validate(t);
  return t;
}

}  // namespace irrmaps
