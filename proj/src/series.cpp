#include "irrmaps/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace irrmaps {

namespace {

constexpr int kByteBits = 8;

int shift_for(std::size_t i) { return kByteBits * static_cast<int>(VarSet::kMaxVars - 1 - i); }

int key_degree(std::uint64_t key) {
  int d = 0;
  while (key != 0) {
    d += static_cast<int>(key & 0xff);
    key >>= kByteBits;
  }
  return d;
}

int exponent_at(std::uint64_t key, std::size_t i) {
  return static_cast<int>((key >> shift_for(i)) & 0xff);
}

void require_same_vars(const Series& a, const Series& b) {
  if (a.vars() != b.vars() && !(*a.vars() == *b.vars()))
    throw std::invalid_argument("series variable sets differ");
}

int var_index(const Series& s, const std::string& var) {
  int i = s.vars()->index(var);
  if (i < 0) throw std::invalid_argument("unknown variable " + var);
  return i;
}

}  // namespace

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars) throw std::invalid_argument("too many series variables");
}

int VarSet::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

VarSetPtr make_vars(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

std::string face_var(int degree) { return "x" + std::to_string(degree); }

Series::Series(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {
  if (order_ < 0 || order_ > 255) throw std::invalid_argument("series order out of range");
}

Series Series::constant(VarSetPtr vars, int order, const Rational& c) {
  Series s(std::move(vars), order);
  Rational q = c;
  q.canonicalize();
  if (q != 0) s.terms_.push_back({0, 0, q});
  return s;
}

Series Series::variable(VarSetPtr vars, int order, const std::string& name) {
  Exponents e(vars->size(), 0);
  int i = vars->index(name);
  if (i < 0) throw std::invalid_argument("unknown variable " + name);
  e[i] = 1;
  return monomial(std::move(vars), order, e, 1);
}

Series Series::monomial(VarSetPtr vars, int order, const Exponents& exps, const Rational& c) {
  Series s(std::move(vars), order);
  std::uint64_t key = s.key_of(exps);
  int deg = key_degree(key);
  Rational q = c;
  q.canonicalize();
  if (q != 0 && deg <= order) s.terms_.push_back({key, deg, q});
  return s;
}

Exponents Series::exponents(const Term& t) const { return exponents_of_key(t.key); }

Exponents Series::exponents_of_key(std::uint64_t key) const {
  Exponents e(vars_->size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent_at(key, i);
  return e;
}

std::uint64_t Series::key_of(const Exponents& e) const {
  if (e.size() != vars_->size()) throw std::invalid_argument("exponent vector has wrong length");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] < 0 || e[i] > 255) throw std::invalid_argument("exponent out of range");
    key |= static_cast<std::uint64_t>(e[i]) << shift_for(i);
  }
  return key;
}

Rational Series::coeff(const Exponents& e) const {
  std::uint64_t key = key_of(e);
  if (key_degree(key) > order_)
    throw std::out_of_range("monomial " + monomial_string(*vars_, e) + " beyond order " +
                            std::to_string(order_));
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key,
                             [](const Term& t, std::uint64_t k) { return t.key < k; });
  if (it != terms_.end() && it->key == key) return it->coeff;
  return 0;
}

Rational Series::constant_term() const {
  if (!terms_.empty() && terms_.front().key == 0) return terms_.front().coeff;
  return 0;
}

Rational Series::coeff_of(const std::string& var, int n) const {
  Exponents e(vars_->size(), 0);
  e[var_index(*this, var)] = n;
  return coeff(e);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

void Series::add_scaled(const Series& b, int sign) {
  require_same_vars(*this, b);
  int order = std::min(order_, b.order_);
  std::vector<Term> out;
  out.reserve(terms_.size() + b.terms_.size());
  auto i = terms_.begin();
  auto j = b.terms_.begin();
  auto push = [&](Term t) {
    if (t.degree <= order && t.coeff != 0) out.push_back(std::move(t));
  };
  while (i != terms_.end() || j != b.terms_.end()) {
    if (j == b.terms_.end() || (i != terms_.end() && i->key < j->key)) {
      push(std::move(*i++));
    } else if (i == terms_.end() || j->key < i->key) {
      Term t = *j++;
      if (sign < 0) t.coeff = -t.coeff;
      push(std::move(t));
    } else {
      Term t = std::move(*i++);
      if (sign < 0)
        t.coeff -= j->coeff;
      else
        t.coeff += j->coeff;
      ++j;
      push(std::move(t));
    }
  }
  terms_ = std::move(out);
  order_ = order;
}

Series& Series::operator+=(const Series& b) {
  add_scaled(b, 1);
  return *this;
}

Series& Series::operator-=(const Series& b) {
  add_scaled(b, -1);
  return *this;
}

Series& Series::operator*=(const Rational& c_in) {
  Rational c = c_in;
  c.canonicalize();
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_vars(a, b);
  int order = std::min(a.order_, b.order_);
  std::vector<const Series::Term*> bs;
  bs.reserve(b.terms_.size());
  for (const auto& t : b.terms_)
    if (t.degree <= order) bs.push_back(&t);
  std::stable_sort(bs.begin(), bs.end(),
                   [](const Series::Term* x, const Series::Term* y) { return x->degree < y->degree; });
  std::unordered_map<std::uint64_t, Rational> acc;
  Rational prod;
  for (const auto& ta : a.terms_) {
    if (ta.degree > order) continue;
    for (const auto* tb : bs) {
      if (ta.degree + tb->degree > order) break;
      mpq_mul(prod.get_mpq_t(), ta.coeff.get_mpq_t(), tb->coeff.get_mpq_t());
      Rational& slot = acc[ta.key + tb->key];
      slot += prod;
    }
  }
  Series r(a.vars_, order);
  r.terms_.reserve(acc.size());
  for (auto& [key, c] : acc)
    if (c != 0) r.terms_.push_back({key, key_degree(key), std::move(c)});
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Series::Term& x, const Series::Term& y) { return x.key < y.key; });
  return r;
}

Series Series::operator+(const Rational& c) const { return *this + constant(vars_, order_, c); }

Series Series::operator-(const Rational& c) const { return *this - constant(vars_, order_, c); }

Series Series::pow(unsigned n) const {
  Series result = constant(vars_, order_, 1);
  Series base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Series Series::inverse() const {
  Rational c0 = constant_term();
  if (c0 == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  // Newton iteration b <- b (2 - a b), doubling the correct degree each step.
  Series b = constant(vars_, order_, 1 / c0);
  for (int known = 0; known < order_; known = 2 * known + 1) {
    Series ab = *this * b;
    b = b * (constant(vars_, order_, 2) - ab);
  }
  return b;
}

Series Series::derivative(const std::string& var) const {
  std::size_t i = static_cast<std::size_t>(var_index(*this, var));
  std::uint64_t unit = std::uint64_t{1} << shift_for(i);
  Series r(vars_, order_ > 0 ? order_ - 1 : 0);
  for (const auto& t : terms_) {
    int e = exponent_at(t.key, i);
    if (e == 0 || t.degree - 1 > r.order_) continue;
    r.terms_.push_back({t.key - unit, t.degree - 1, t.coeff * e});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.key < y.key; });
  return r;
}

Series Series::truncate(int new_order) const {
  Series r(vars_, std::min(new_order, order_));
  for (const auto& t : terms_)
    if (t.degree <= r.order_) r.terms_.push_back(t);
  return r;
}

Series Series::drop(const std::string& var) const {
  std::size_t i = static_cast<std::size_t>(var_index(*this, var));
  Series r(vars_, order_);
  for (const auto& t : terms_)
    if (exponent_at(t.key, i) == 0) r.terms_.push_back(t);
  return r;
}

Series Series::shift_down(const std::string& var) const {
  std::size_t i = static_cast<std::size_t>(var_index(*this, var));
  std::uint64_t unit = std::uint64_t{1} << shift_for(i);
  if (order_ == 0) throw std::domain_error("cannot divide an order-0 series");
  Series r(vars_, order_ - 1);
  for (const auto& t : terms_) {
    if (exponent_at(t.key, i) == 0) throw std::domain_error("series not divisible by " + var);
    r.terms_.push_back({t.key - unit, t.degree - 1, t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.key < y.key; });
  return r;
}

Series Series::shift_up(const std::string& var) const {
  std::size_t i = static_cast<std::size_t>(var_index(*this, var));
  std::uint64_t unit = std::uint64_t{1} << shift_for(i);
  Series r(vars_, order_ + 1);
  for (const auto& t : terms_) {
    if (exponent_at(t.key, i) == 255) throw std::overflow_error("exponent overflow");
    r.terms_.push_back({t.key + unit, t.degree + 1, t.coeff});
  }
  std::sort(r.terms_.begin(), r.terms_.end(),
            [](const Term& x, const Term& y) { return x.key < y.key; });
  return r;
}

Series Series::remap(const VarSetPtr& target,
                     const std::vector<std::pair<std::string, std::string>>& rename) const {
  std::vector<int> where(vars_->size(), -1);
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    std::string name = vars_->name(i);
    for (const auto& [from, to] : rename)
      if (from == name) name = to;
    where[i] = target->index(name);
  }
  SeriesBuilder b(target, order_);
  Exponents out(target->size());
  Series probe(target, order_);
  for (const auto& t : terms_) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < vars_->size(); ++i) {
      int e = exponent_at(t.key, i);
      if (e == 0) continue;
      if (where[i] < 0) throw std::invalid_argument("variable " + vars_->name(i) + " not in target");
      out[where[i]] += e;
    }
    b.add(probe.key_of(out), t.degree, t.coeff);
  }
  return b.build();
}

bool Series::is_nonnegative_integral() const {
  for (const auto& t : terms_)
    if (t.coeff < 0 || t.coeff.get_den() != 1) return false;
  return true;
}

bool Series::operator==(const Series& other) const {
  if (!(*vars_ == *other.vars_) || order_ != other.order_ || terms_.size() != other.terms_.size())
    return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].key != other.terms_[i].key || terms_[i].coeff != other.terms_[i].coeff)
      return false;
  return true;
}

std::string monomial_string(const VarSet& vars, const Exponents& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += vars.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Series::to_string() const {
  std::vector<const Term*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const Term* x, const Term* y) {
    if (x->degree != y->degree) return x->degree < y->degree;
    return x->key > y->key;
  });
  std::ostringstream os;
  bool first = true;
  for (const Term* t : order) {
    Rational c = t->coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono = monomial_string(*vars_, exponents(*t));
    if (mono == "1")
      os << c.get_str();
    else if (c == 1)
      os << mono;
    else
      os << c.get_str() << "*" << mono;
  }
  if (first) os << "0";
  os << " + O(" << order_ + 1 << ")";
  return os.str();
}

SeriesBuilder::SeriesBuilder(VarSetPtr vars, int order) : vars_(std::move(vars)), order_(order) {}

void SeriesBuilder::add(std::uint64_t key, int degree, const Rational& c) {
  if (degree > order_) return;
  Rational v = c;
  v.canonicalize();
  if (v != 0) pending_.push_back({key, degree, std::move(v)});
}

void SeriesBuilder::add_product(std::uint64_t key, int degree, const Rational& a, const Rational& b) {
  if (degree <= order_) pending_.push_back({key, degree, a * b});
}

Series SeriesBuilder::build() {
  std::sort(pending_.begin(), pending_.end(),
            [](const Series::Term& x, const Series::Term& y) { return x.key < y.key; });
  Series r(vars_, order_);
  for (auto& t : pending_) {
    if (!r.terms_.empty() && r.terms_.back().key == t.key)
      r.terms_.back().coeff += t.coeff;
    else
      r.terms_.push_back(std::move(t));
  }
  std::erase_if(r.terms_, [](const Series::Term& t) { return t.coeff == 0; });
  pending_.clear();
  return r;
}

Series compose(const Series& f, const std::string& var, const Series& g) {
  require_same_vars(f, g);
  if (g.constant_term() != 0) throw std::domain_error("substituted series has a constant term");
  std::size_t i = static_cast<std::size_t>(var_index(f, var));
  std::uint64_t mask = std::uint64_t{0xff} << shift_for(i);
  int order = std::min(f.order(), g.order());
  // Split f by powers of var, then evaluate by Horner's rule.
  int top = 0;
  for (const auto& t : f.terms()) top = std::max(top, exponent_at(t.key, i));
  std::vector<SeriesBuilder> parts(top + 1, SeriesBuilder(f.vars(), order));
  for (const auto& t : f.terms()) {
    int e = exponent_at(t.key, i);
    parts[e].add(t.key & ~mask, t.degree - e, t.coeff);
  }
  Series gt = g.truncate(order);
  Series result = parts[top].build();
  for (int e = top - 1; e >= 0; --e) result = result * gt + parts[e].build();
  return result;
}

Series revert(const Series& f, const std::string& var) {
  Series unit = f.shift_down(var);
  if (unit.constant_term() == 0) throw std::domain_error("linear coefficient is not invertible");
  Series x = Series::variable(f.vars(), f.order(), var);
  // h = var / unit(h); each pass fixes one more degree.
  Series h = x * (1 / unit.constant_term());
  for (int pass = 0; pass < f.order(); ++pass) {
    Series next = compose(unit, var, h).inverse().shift_up(var).truncate(f.order());
    if (next == h) break;
    h = std::move(next);
  }
  return h;
}

Series series_arith(const Series& a, const Series& b, ArithOp op) {
  switch (op) {
    case ArithOp::Add:
      return a + b;
    case ArithOp::Sub:
      return a - b;
    case ArithOp::Mul:
      return a * b;
  }
  throw std::invalid_argument("unknown op");
}

std::string first_difference(const Series& a, const Series& b) {
  require_same_vars(a, b);
  int order = std::min(a.order(), b.order());
  Series diff = a.truncate(order) - b.truncate(order);
  if (diff.is_zero()) return {};
  const Series::Term* best = nullptr;
  for (const auto& t : diff.terms())
    if (best == nullptr || t.degree < best->degree) best = &t;
  Exponents e = diff.exponents(*best);
  return monomial_string(*a.vars(), e) + ": " + a.coeff(e).get_str() + " vs " + b.coeff(e).get_str();
}

nlohmann::json to_json(const Series& s) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : s.terms())
    terms.push_back({{"exp", s.exponents(t)},
                     {"num", t.coeff.get_num().get_str()},
                     {"den", t.coeff.get_den().get_str()}});
  return {{"vars", s.vars()->names()}, {"order", s.order()}, {"terms", terms}};
}

Series series_from_json(const nlohmann::json& j) {
  auto vars = make_vars(j.at("vars").get<std::vector<std::string>>());
  int order = j.at("order").get<int>();
  SeriesBuilder b(vars, order);
  Series probe(vars, order);
  for (const auto& t : j.at("terms")) {
    Exponents e = t.at("exp").get<Exponents>();
    std::uint64_t key = probe.key_of(e);
    int deg = 0;
    for (int x : e) deg += x;
    if (deg > order) throw std::invalid_argument("term beyond series order");
    b.add(key, deg, parse_rational(t.at("num").get<std::string>(), t.at("den").get<std::string>()));
  }
  return b.build();
}

}  // namespace irrmaps
