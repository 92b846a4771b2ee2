#include "irrmaps/maps.hpp"

#include "irrmaps/boundary.hpp"
#include "irrmaps/combinatorics.hpp"
#include "irrmaps/kernel.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

namespace irrmaps {

bool CombMap::operator<(const CombMap& o) const {
  return std::tie(edges, root, alpha, sigma) < std::tie(o.edges, o.root, o.alpha, o.sigma);
}

CombMap CombMap::vertex() { return CombMap{}; }

Topology analyze(const CombMap& m) {
  const int n = m.darts();
  Topology t;
  if (n == 0) {
    t.vertices = 1;
    t.faces.push_back({});
    t.adjacency.resize(1);
    return t;
  }
  t.vertex_of.assign(n, -1);
  t.edge_of.assign(n, -1);
  t.face_of.assign(n, -1);
  for (int d = 0; d < n; ++d) {
    if (t.vertex_of[d] >= 0) continue;
    for (int x = d; t.vertex_of[x] < 0; x = m.sigma[x]) t.vertex_of[x] = t.vertices;
    ++t.vertices;
  }
  int edges = 0;
  for (int d = 0; d < n; ++d)
    if (t.edge_of[d] < 0) t.edge_of[d] = t.edge_of[m.alpha[d]] = edges++;
  auto trace = [&](int start) {
    int f = static_cast<int>(t.faces.size());
    t.faces.emplace_back();
    for (int x = start; t.face_of[x] < 0; x = m.phi(x)) {
      t.face_of[x] = f;
      t.faces[f].push_back(x);
    }
  };
  trace(m.root);
  for (int d = 0; d < n; ++d)
    if (t.face_of[d] < 0) trace(d);
  t.outer = 0;
  t.adjacency.resize(t.vertices);
  for (int d = 0; d < n; ++d) t.adjacency[t.vertex_of[d]].emplace_back(t.head(m, d), t.edge_of[d]);
  return t;
}

std::uint64_t Topology::face_edges(int f) const {
  std::uint64_t mask = 0;
  for (int d : faces[f]) mask |= std::uint64_t{1} << edge_of[d];
  return mask;
}

void validate(const CombMap& m) {
  const int n = m.darts();
  auto fail = [](const char* why) { throw std::invalid_argument(std::string("invalid map: ") + why); };
  if (m.edges < 0) fail("negative edge count");
  if (static_cast<int>(m.alpha.size()) != n || static_cast<int>(m.sigma.size()) != n) fail("wrong array length");
  if (n == 0) {
    if (m.root != -1) fail("vertex map has no root dart");
    return;
  }
  if (m.edges > 64) fail("more than 64 edges");
  if (m.root < 0 || m.root >= n) fail("root out of range");
  std::vector<int> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    int a = m.alpha[d];
    if (a < 0 || a >= n || a == d || m.alpha[a] != d) fail("alpha is not a fixed-point-free involution");
    int s = m.sigma[d];
    if (s < 0 || s >= n || seen[s]++) fail("sigma is not a permutation");
  }
  std::vector<char> reach(n, 0);
  std::vector<int> stack{m.root};
  reach[m.root] = 1;
  int count = 1;
  while (!stack.empty()) {
    int d = stack.back();
    stack.pop_back();
    for (int x : {m.alpha[d], m.sigma[d]})
      if (!reach[x]) {
        reach[x] = 1;
        ++count;
        stack.push_back(x);
      }
  }
  if (count != n) fail("not connected");
  Topology t = analyze(m);
  if (t.vertices - m.edges + static_cast<int>(t.faces.size()) != 2) fail("not planar");
}

std::vector<int> canonical_labels(const CombMap& m) {
  const int n = m.darts();
  std::vector<int> label(n, -1), order;
  if (n == 0) return label;
  std::deque<int> queue{m.root};
  label[m.root] = 0;
  order.push_back(m.root);
  while (!queue.empty()) {
    int d = queue.front();
    queue.pop_front();
    for (int x : {m.alpha[d], m.sigma[d]})
      if (label[x] < 0) {
        label[x] = static_cast<int>(order.size());
        order.push_back(x);
        queue.push_back(x);
      }
  }
  return label;
}

CombMap canonical(const CombMap& m) {
  const int n = m.darts();
  if (n == 0) return m;
  std::vector<int> label = canonical_labels(m);
  CombMap out;
  out.edges = m.edges;
  out.root = 0;
  out.alpha.resize(n);
  out.sigma.resize(n);
  for (int d = 0; d < n; ++d) {
    out.alpha[label[d]] = label[m.alpha[d]];
    out.sigma[label[d]] = label[m.sigma[d]];
  }
  return out;
}

std::optional<int> girth(const CombMap& m, const Topology& t) {
  std::optional<int> best;
  if (m.edges == 0) return best;
  std::vector<int> dist(t.vertices), parent(t.vertices);
  for (int s = 0; s < t.vertices; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      if (best && 2 * dist[u] + 1 >= *best) break;
      for (auto [w, e] : t.adjacency[u]) {
        if (e == parent[u]) continue;
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = e;
          queue.push_back(w);
        } else {
          int len = dist[u] + dist[w] + 1;
          if (!best || len < *best) best = len;
        }
      }
    }
  }
  return best;
}

MapStats map_stats(const CombMap& m) {
  Topology t = analyze(m);
  MapStats s;
  s.outer_degree = static_cast<int>(t.faces[t.outer].size());
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    if (f != t.outer) s.inner_degrees.push_back(static_cast<int>(t.faces[f].size()));
  std::sort(s.inner_degrees.begin(), s.inner_degrees.end());
  s.girth = girth(m, t);
  return s;
}

namespace {

// Cycles through their smallest vertex `start`, each seen in both directions.
void cycle_search(const Topology& t, int start, int v, int length, int max_length, std::uint64_t used,
                  std::vector<char>& on_path, std::set<std::pair<int, std::uint64_t>>& found) {
  for (auto [w, e] : t.adjacency[v]) {
    std::uint64_t bit = std::uint64_t{1} << e;
    if (used & bit) continue;
    if (w == start) {
      found.emplace(length + 1, used | bit);
    } else if (w > start && !on_path[w] && length + 1 < max_length) {
      on_path[w] = 1;
      cycle_search(t, start, w, length + 1, max_length, used | bit, on_path, found);
      on_path[w] = 0;
    }
  }
}

}  // namespace

std::vector<std::pair<int, std::uint64_t>> all_simple_cycles(const Topology& t, int max_length) {
  std::set<std::pair<int, std::uint64_t>> found;
  std::vector<char> on_path(t.vertices, 0);
  for (int s = 0; s < t.vertices; ++s) {
    on_path[s] = 1;
    cycle_search(t, s, s, 0, max_length, 0, on_path, found);
    on_path[s] = 0;
  }
  return {found.begin(), found.end()};
}

std::vector<std::uint64_t> simple_cycles(const Topology& t, int length) {
  std::vector<std::uint64_t> out;
  for (auto [len, mask] : all_simple_cycles(t, length))
    if (len == length) out.push_back(mask);
  return out;
}

namespace {

bool irreducible_impl(const CombMap& m, int d, bool weak) {
  if (d <= 0) return true;
  Topology t = analyze(m);
  auto g = girth(m, t);
  if (g && *g < d) return false;
  if (!g || *g > d) return true;
  std::set<std::uint64_t> allowed;
  for (int f = 0; f < static_cast<int>(t.faces.size()); ++f)
    if (static_cast<int>(t.faces[f].size()) == d && (f != t.outer || weak)) allowed.insert(t.face_edges(f));
  for (auto mask : simple_cycles(t, d))
    if (!allowed.count(mask)) return false;
  return true;
}

}  // namespace

bool is_d_irreducible(const CombMap& m, int d) { return irreducible_impl(m, d, false); }
bool is_weakly_d_irreducible(const CombMap& m, int d) { return irreducible_impl(m, d, true); }

Integer rooted_map_count(int edges) {
  Integer three;
  mpz_ui_pow_ui(three.get_mpz_t(), 3, edges);
  return 2 * three * binomial(2 * edges, edges) / ((edges + 1) * (edges + 2));
}

// ---- generation by root-edge decomposition ----

namespace {

int sigma_inverse(const CombMap& m, int c) {
  int p = c;
  while (m.sigma[p] != c) p = m.sigma[p];
  return p;
}

// Puts dart x into the corner just before c (x becomes sigma^-1(c)).
// c = -1 means an isolated vertex.
void insert_before(CombMap& m, int x, int c) {
  if (c < 0) {
    m.sigma[x] = x;
    return;
  }
  int p = sigma_inverse(m, c);
  m.sigma[p] = x;
  m.sigma[x] = c;
}

CombMap grow(const CombMap& base, int extra_edges) {
  CombMap m = base;
  m.edges += extra_edges;
  m.alpha.resize(m.darts());
  m.sigma.resize(m.darts(), -1);
  for (int d = base.darts(); d < m.darts(); ++d) m.alpha[d] = d ^ 1;
  return m;
}

CombMap join_isthmus(const CombMap& left, const CombMap& right) {
  const int off = left.darts();
  CombMap m = grow(left, right.edges + 1);
  for (int d = 0; d < right.darts(); ++d) {
    m.alpha[off + d] = off + right.alpha[d];
    m.sigma[off + d] = off + right.sigma[d];
  }
  const int a = m.darts() - 2, b = a + 1;
  insert_before(m, a, left.root);
  insert_before(m, b, right.root < 0 ? -1 : off + right.root);
  m.root = a;
  return m;
}

std::vector<int> outer_orbit(const CombMap& m) {
  std::vector<int> out;
  if (m.root < 0) return out;
  int x = m.root;
  do {
    out.push_back(x);
    x = m.phi(x);
  } while (x != m.root);
  return out;
}

// choice 0..n: 0 and 1 put both ends at the root corner (outer degree n+1
// and 1), choice i >= 2 sends the far end to the corner of c_{i-1}.
CombMap add_chord(const CombMap& base, const std::vector<int>& orbit, int choice) {
  CombMap m = grow(base, 1);
  const int a = m.darts() - 2, b = a + 1;
  m.root = a;
  if (base.root < 0) {
    m.sigma[a] = b;
    m.sigma[b] = a;
    return m;
  }
  if (choice == 0) {
    insert_before(m, b, base.root);
    insert_before(m, a, b);
  } else if (choice == 1) {
    insert_before(m, a, base.root);
    insert_before(m, b, a);
  } else {
    insert_before(m, a, base.root);
    insert_before(m, b, orbit[choice - 1]);
  }
  return m;
}

bool passes(const CombMap& m, const MapFilter& f) {
  if (f.min_girth <= 0 && f.max_inner_degree <= 0) return true;
  Topology t = analyze(m);
  if (f.max_inner_degree > 0)
    for (int i = 0; i < static_cast<int>(t.faces.size()); ++i)
      if (i != t.outer && static_cast<int>(t.faces[i].size()) > f.max_inner_degree) return false;
  if (f.min_girth > 0) {
    auto g = girth(m, t);
    if (g && *g < f.min_girth) return false;
  }
  return true;
}

int outer_degree(const CombMap& m) { return static_cast<int>(outer_orbit(m).size()); }

// Maps built from smaller ones; each level only keeps maps passing the
// girth and inner degree part of the filter.
void build_level(int edges, const MapFilter& f, const std::vector<std::vector<CombMap>>& levels,
                 const std::function<void(const CombMap&)>& emit, int shard, int shards) {
  long unit = 0;
  auto mine = [&] { return (unit++ % shards) == shard; };
  for (int i = 0; i < edges; ++i)
    for (const auto& left : levels[i]) {
      if (!mine()) continue;
      for (const auto& right : levels[edges - 1 - i]) {
        CombMap m = join_isthmus(left, right);
        if (passes(m, f)) emit(m);
      }
    }
  for (const auto& base : levels[edges - 1]) {
    if (!mine()) continue;
    auto orbit = outer_orbit(base);
    int choices = orbit.empty() ? 1 : static_cast<int>(orbit.size()) + 1;
    for (int c = 0; c < choices; ++c) {
      CombMap m = add_chord(base, orbit, c);
      if (passes(m, f)) emit(m);
    }
  }
}

struct LevelCache {
  std::mutex lock;
  std::map<std::pair<int, int>, std::vector<std::vector<CombMap>>> tables;
};

LevelCache& level_cache() {
  static LevelCache cache;
  return cache;
}

// Levels 0..upto for this filter, computed once.
const std::vector<std::vector<CombMap>>& levels_for(const MapFilter& f, int upto) {
  auto& cache = level_cache();
  std::lock_guard<std::mutex> guard(cache.lock);
  auto& levels = cache.tables[{f.min_girth, f.max_inner_degree}];
  if (levels.empty()) levels.push_back({CombMap::vertex()});
  while (static_cast<int>(levels.size()) <= upto) {
    std::vector<CombMap> next;
    build_level(static_cast<int>(levels.size()), f, levels, [&](const CombMap& m) { next.push_back(m); }, 0, 1);
    levels.push_back(std::move(next));
  }
  return levels;
}

}  // namespace

void enumerate_maps(int edges, const MapFilter& filter, const std::function<void(const CombMap&)>& visit, int shard,
                    int shards) {
  if (edges < 0 || edges > kMaxEdges) throw std::invalid_argument("edge count out of range");
  if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard");
  auto emit = [&](const CombMap& m) {
    if (filter.outer_degree < 0 || outer_degree(m) == filter.outer_degree) visit(m);
  };
  if (edges == 0) {
    if (shard == 0) emit(CombMap::vertex());
    return;
  }
  const auto& levels = levels_for(filter, edges - 1);
  build_level(edges, filter, levels, emit, shard, shards);
}

std::vector<CombMap> maps_with_edges(int edges, const MapFilter& filter) {
  std::vector<CombMap> out;
  enumerate_maps(edges, filter, [&](const CombMap& m) { out.push_back(m); });
  return out;
}

// ---- slices ----

namespace {

struct Bfs {
  std::vector<int> dist;
  std::vector<Integer> count;  // geodesics, edges counted with multiplicity
};

Bfs bfs_from(const Topology& t, int source, int skip_edge) {
  Bfs b{std::vector<int>(t.vertices, -1), std::vector<Integer>(t.vertices, 0)};
  b.dist[source] = 0;
  b.count[source] = 1;
  std::deque<int> queue{source};
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (auto [w, e] : t.adjacency[u]) {
      if (e == skip_edge || w == u) continue;
      if (b.dist[w] < 0) {
        b.dist[w] = b.dist[u] + 1;
        queue.push_back(w);
      }
      if (b.dist[w] == b.dist[u] + 1) b.count[w] += b.count[u];
    }
  }
  return b;
}

}  // namespace

SliceCertificate certify(const SlicePackage& pkg) {
  const CombMap& m = pkg.map;
  validate(m);
  SliceCertificate c;
  if (m.edges == 0) return c;
  Topology t = analyze(m);
  if (pkg.apex < 0 || pkg.apex >= t.vertices) throw std::invalid_argument("apex out of range");
  const int r = m.root;
  const int tail = t.vertex_of[r], head = t.head(m, r);
  c.has_inner_face = t.faces.size() >= 2;
  if (m.edges == 1 && tail != head && pkg.apex == head && pkg.k == 0 && pkg.p == 0) c.trivial_edge = true;

  const auto& outer = t.faces[t.outer];  // starts at the root
  const int deg = static_cast<int>(outer.size());
  std::set<int> right{head};
  int pos = 1, cur = head;
  while (cur != pkg.apex && pos < deg) {
    cur = t.head(m, outer[pos++]);
    right.insert(cur);
  }
  if (cur != pkg.apex) return c;
  c.right_length = pos - 1;
  c.left_length = deg - pos;
  c.boundaries_meet = c.left_length >= 1;
  c.lengths_match = c.right_length == pkg.p && c.left_length == pkg.p + pkg.k + 1;

  c.apex_only_common = true;
  for (int i = pos; i < deg; ++i) {
    int v = t.head(m, outer[i]);  // vertices from the apex toward the tail
    if (i + 1 < deg && right.count(v)) c.apex_only_common = false;
  }
  if (right.count(tail) && tail != pkg.apex) c.apex_only_common = false;

  Bfs full = bfs_from(t, pkg.apex, -1);
  c.right_unique_geodesic = full.dist[head] == c.right_length && full.count[head] == 1;
  Bfs cut = bfs_from(t, pkg.apex, t.edge_of[r]);
  c.left_geodesic = cut.dist[tail] == c.left_length;
  return c;
}

bool certify_slice(const SlicePackage& pkg) { return certify(pkg).ok(); }

// ---- annular maps ----

AnnularClass classify_annular(const CombMap& m, int central, int d, int central_degree) {
  Topology t = analyze(m);
  const int faces = static_cast<int>(t.faces.size());
  if (central < 0 || central >= faces || central == t.outer) throw std::invalid_argument("central face must be inner");
  AnnularClass out;
  const std::uint64_t central_mask = t.face_edges(central);
  std::set<std::uint64_t> inner_d;
  for (int f = 0; f < faces; ++f)
    if (f != t.outer && f != central && static_cast<int>(t.faces[f].size()) == d) inner_d.insert(t.face_edges(f));

  // edge -> its two faces
  std::vector<std::pair<int, int>> sides(m.edges, {-1, -1});
  for (int x = 0; x < m.darts(); ++x) {
    auto& s = sides[t.edge_of[x]];
    (s.first < 0 ? s.first : s.second) = t.face_of[x];
  }
  auto separates = [&](std::uint64_t mask) {
    std::vector<int> parent(faces);
    for (int f = 0; f < faces; ++f) parent[f] = f;
    std::function<int(int)> find = [&](int f) { return parent[f] == f ? f : parent[f] = find(parent[f]); };
    for (int e = 0; e < m.edges; ++e)
      if (!(mask >> e & 1)) parent[find(sides[e].first)] = find(sides[e].second);
    return find(t.outer) != find(central);
  };

  bool non_sep_ok = true, sep_strict = true, sep_loose = true;
  for (auto [len, mask] : all_simple_cycles(t, m.edges)) {
    if (separates(mask)) {
      if (!out.separating_girth || len < *out.separating_girth) out.separating_girth = len;
      if (len < central_degree) sep_strict = sep_loose = false;
      if (len == central_degree && mask != central_mask) sep_strict = false;
    } else {
      if (!out.non_separating_girth || len < *out.non_separating_girth) out.non_separating_girth = len;
      if (len < d || (len == d && !inner_d.count(mask))) non_sep_ok = false;
    }
  }
  bool central_ok = static_cast<int>(t.faces[central].size()) == central_degree;
  out.irreducible = central_ok && non_sep_ok && sep_strict;
  out.quasi_irreducible = central_ok && non_sep_ok && sep_loose;
  return out;
}

// ---- cross-validation ----

std::string profile_monomial(const Profile& p, int d) {
  std::string out;
  for (auto [deg, mult] : p) {
    if (!out.empty()) out += '*';
    out += deg == d ? std::string("z") : face_var(deg);
    if (mult > 1) out += '^' + std::to_string(mult);
  }
  return out.empty() ? "1" : out;
}

bool CrossReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const CrossRow& r) { return r.ok(); });
}

namespace {

void profiles_upto(int low, int high, int budget, Profile& cur, std::vector<Profile>& out) {
  out.push_back(cur);
  for (int deg = low; deg <= high && deg <= budget; ++deg) {
    ++cur[deg];
    profiles_upto(deg, high, budget - deg, cur, out);
    if (--cur[deg] == 0) cur.erase(deg);
  }
}

}  // namespace

CrossReport cross_validate(int d, int n, int max_edges, int max_degree, int jobs) {
  if (d < 0 || n < 0) throw std::invalid_argument("d and n must be >= 0");
  if (max_edges < 0 || max_edges > kMaxEdges) throw std::invalid_argument("max_edges out of range");
  if (jobs < 1) jobs = 1;
  CrossReport report{d, n, max_edges, {}};
  const int low = std::max(d, 1);
  const int budget = 2 * max_edges - n;
  const int high = max_degree > 0 ? max_degree : budget;

  std::map<Profile, long> counts;
  std::mutex lock;
  MapFilter filter;
  filter.min_girth = d;
  filter.max_inner_degree = max_degree;
  filter.outer_degree = n;
  for (int e = 0; e <= max_edges; ++e) {
    auto visit = [&](const CombMap& m) {
      if (!is_d_irreducible(m, d)) return;
      Profile p;
      for (int deg : map_stats(m).inner_degrees) ++p[deg];
      std::lock_guard<std::mutex> guard(lock);
      ++counts[p];
    };
    levels_for(filter, std::max(e - 1, 0));
    if (jobs == 1 || e < 2) {
      enumerate_maps(e, filter, visit);
    } else {
      std::vector<std::thread> pool;
      for (int s = 0; s < jobs; ++s) pool.emplace_back([&, s] { enumerate_maps(e, filter, visit, s, jobs); });
      for (auto& th : pool) th.join();
    }
  }

  std::vector<Profile> profiles;
  if (budget >= 0) {
    Profile cur;
    profiles_upto(low, high, budget, cur, profiles);
  }
  std::map<std::vector<int>, std::vector<Profile>> by_support;
  for (const auto& p : profiles) {
    int total = 0;
    for (auto [deg, mult] : p) total += deg * mult;
    if ((total + n) % 2 != 0) continue;
    std::vector<int> support;
    for (auto [deg, mult] : p) support.push_back(deg);
    by_support[support].push_back(p);
  }
  for (const auto& [support, group] : by_support) {
    WeightSpec spec;
    spec.d = d;
    for (int deg : support)
      if (deg != d) spec.face_degrees.push_back(deg);
    for (const auto& p : group) {
      int faces = 0;
      for (auto [deg, mult] : p) faces += mult;
      spec.order = std::max(spec.order, faces);
    }
    auto ks = solve_kernel(spec);
    Series f = boundary_gf(n, ks);
    const auto& vars = f.vars();
    for (const auto& p : group) {
      Exponents e(vars->size(), 0);
      for (auto [deg, mult] : p) e[vars->index(deg == d ? std::string("z") : face_var(deg))] = mult;
      CrossRow row;
      row.context = "d=" + std::to_string(d) + " n=" + std::to_string(n);
      row.monomial = profile_monomial(p, d);
      row.expected = f.coeff(e);
      auto it = counts.find(p);
      row.computed = it == counts.end() ? 0 : it->second;
      report.rows.push_back(row);
    }
  }
  // a counted profile outside the expected list is a failure too
  for (const auto& [p, c] : counts) {
    bool listed = std::any_of(report.rows.begin(), report.rows.end(),
                              [&](const CrossRow& r) { return r.monomial == profile_monomial(p, d); });
    if (!listed) report.rows.push_back({"d=" + std::to_string(d) + " n=" + std::to_string(n) + " unexpected",
                                        profile_monomial(p, d), Rational(0), c});
  }
  return report;
}

// ---- JSON, darts 1-based ----

nlohmann::json map_to_json(const CombMap& m) {
  nlohmann::json j;
  j["E"] = m.edges;
  std::vector<int> a(m.darts()), s(m.darts());
  for (int d = 0; d < m.darts(); ++d) {
    a[d] = m.alpha[d] + 1;
    s[d] = m.sigma[d] + 1;
  }
  j["alpha"] = a;
  j["sigma"] = s;
  j["root"] = m.root < 0 ? 0 : m.root + 1;
  return j;
}

CombMap map_from_json(const nlohmann::json& j) {
  CombMap m;
  m.edges = j.at("E").get<int>();
  for (int x : j.at("alpha").get<std::vector<int>>()) m.alpha.push_back(x - 1);
  for (int x : j.at("sigma").get<std::vector<int>>()) m.sigma.push_back(x - 1);
  m.root = j.at("root").get<int>() - 1;
  validate(m);
  return m;
}

}  // namespace irrmaps
