#include "irrmaps/paths.hpp"

#include "irrmaps/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace irrmaps {

namespace {

std::vector<Series> powers(const Series& x, int n) {
  std::vector<Series> p;
  p.reserve(n + 1);
  p.push_back(Series::constant(x.vars(), x.order(), 1));
  for (int i = 1; i <= n; ++i) p.push_back(p.back() * x);
  return p;
}

int common_order(const Series& r, const Series& s) { return std::min(r.order(), s.order()); }

}  // namespace

Series path_poly(int n, int k, const Series& r, const Series& s, bool nonneg) {
  if (n < 0) throw std::invalid_argument("negative path length");
  if (nonneg && k < 0) throw std::invalid_argument("nonnegative paths cannot end below 0");
  Series out(r.vars(), common_order(r, s));
  int a = std::abs(k);
  if (a > n) return out;
  auto rp = powers(r, n);
  auto sp = powers(s, n);
  Integer nf = factorial(n);
  for (int j = 0; 2 * j + a <= n; ++j) {
    Integer c = nonneg ? Integer((a + 1) * nf) : nf;
    c /= factorial(j) * factorial(j + a + (nonneg ? 1 : 0)) * factorial(n - 2 * j - a);
    int downs = k >= 0 ? j : j + a;
    out += Rational(c) * (rp[downs] * sp[n - 2 * j - a]);
  }
  return out;
}

Series q_inverse(int n, int k, const Series& r, const Series& s) {
  if (k < 0 || k > n) throw std::invalid_argument("q_inverse needs 0 <= k <= n");
  Series out(r.vars(), common_order(r, s));
  auto rp = powers(-r, n);
  auto sp = powers(-s, n);
  for (int j = 0; 2 * j + k <= n; ++j) {
    Integer c = factorial(n - j) / (factorial(k) * factorial(j) * factorial(n - 2 * j - k));
    out += Rational(c) * (rp[j] * sp[n - 2 * j - k]);
  }
  return out;
}

HeightWeights HeightWeights::constant(const Series& r, const Series& s, int max_height) {
  HeightWeights w;
  for (int m = 0; m <= max_height + 1; ++m) {
    w.down.push_back(m == 0 ? Series(r.vars(), r.order()) : r);
    w.level.push_back(s);
  }
  return w;
}

Series z_weighted(int n, int p, int p2, const HeightWeights& w, bool nonneg) {
  if (n < 0 || p < -1 || p2 < -1) throw std::invalid_argument("bad path bounds");
  if (w.level.empty() && w.down.empty()) throw std::invalid_argument("no weights");
  const Series& proto = w.level.empty() ? w.down.front() : w.level.front();
  int floor = nonneg ? p : -1;
  auto level_at = [&](int h) -> const Series& {
    if (h < 0 || h >= static_cast<int>(w.level.size()))
      throw std::out_of_range("missing level weight at height " + std::to_string(h));
    return w.level[h];
  };
  auto down_from = [&](int h) -> const Series& {
    if (h < 1 || h >= static_cast<int>(w.down.size()))
      throw std::out_of_range("missing down weight at height " + std::to_string(h));
    return w.down[h];
  };
  std::map<int, Series> cur;
  cur.emplace(p, Series::constant(proto.vars(), proto.order(), 1));
  for (int step = 0; step < n; ++step) {
    int remaining = n - step - 1;
    std::map<int, Series> next;
    auto viable = [&](int h) { return h >= floor && std::abs(h - p2) <= remaining; };
    auto push = [&](int h, Series v) {
      if (v.is_zero()) return;
      auto it = next.find(h);
      if (it == next.end())
        next.emplace(h, std::move(v));
      else
        it->second += v;
    };
    for (const auto& [h, v] : cur) {
      if (viable(h + 1)) push(h + 1, v);
      if (viable(h - 1) && h >= 1) push(h - 1, v * down_from(h));
      if (viable(h)) push(h, v * level_at(h));
    }
    cur = std::move(next);
  }
  auto it = cur.find(p2);
  if (it == cur.end()) return Series(proto.vars(), proto.order());
  return it->second;
}

Series path_oracle(int n, int k, const Series& r, const Series& s, bool nonneg) {
  if (n < 0 || n > 14) throw std::invalid_argument("oracle limited to n <= 14");
  auto rp = powers(r, n);
  auto sp = powers(s, n);
  std::map<std::pair<int, int>, long> tally;
  long words = 1;
  for (int i = 0; i < n; ++i) words *= 3;
  for (long w = 0; w < words; ++w) {
    long x = w;
    int h = 0, downs = 0, levels = 0;
    bool ok = true;
    for (int i = 0; i < n; ++i) {
      int step = static_cast<int>(x % 3) - 1;
      x /= 3;
      h += step;
      if (step < 0) ++downs;
      if (step == 0) ++levels;
      if (nonneg && h < 0) ok = false;
    }
    if (ok && h == k) ++tally[{downs, levels}];
  }
  Series out(r.vars(), common_order(r, s));
  for (const auto& [dl, count] : tally) out += Rational(count) * (rp[dl.first] * sp[dl.second]);
  return out;
}

}  // namespace irrmaps
