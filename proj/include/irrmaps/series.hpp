#pragma once

#include "irrmaps/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace irrmaps {

class VarSet {
 public:
  static constexpr std::size_t kMaxVars = 8;

  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent.
  int index(const std::string& name) const;
  bool operator==(const VarSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
};

using VarSetPtr = std::shared_ptr<const VarSet>;

VarSetPtr make_vars(std::vector<std::string> names);
std::string face_var(int degree);  // "x<degree>"

using Exponents = std::vector<int>;

// Multivariate power series over the rationals, truncated at total degree
// `order`. Terms are kept sorted by exponent vector (lexicographic, first
// variable most significant) and never hold a zero coefficient.
class Series {
 public:
  struct Term {
    std::uint64_t key;
    int degree;
    Rational coeff;
  };

  Series(VarSetPtr vars, int order);

  static Series constant(VarSetPtr vars, int order, const Rational& c);
  static Series variable(VarSetPtr vars, int order, const std::string& name);
  static Series monomial(VarSetPtr vars, int order, const Exponents& exps, const Rational& c);

  const VarSetPtr& vars() const { return vars_; }
  int order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  Exponents exponents(const Term& t) const;
  Exponents exponents_of_key(std::uint64_t key) const;
  std::uint64_t key_of(const Exponents& e) const;

  // Throws std::out_of_range when the monomial lies beyond the order.
  Rational coeff(const Exponents& e) const;
  Rational constant_term() const;
  // Univariate convenience: coefficient of var^n with all other exponents 0.
  Rational coeff_of(const std::string& var, int n) const;

  Series operator-() const;
  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);
  Series& operator*=(const Rational& c);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(Series a, const Rational& c) { return a *= c; }
  friend Series operator*(const Rational& c, Series a) { return a *= c; }
  Series operator+(const Rational& c) const;
  Series operator-(const Rational& c) const;

  Series pow(unsigned n) const;
  // Multiplicative inverse; the constant term must be nonzero.
  Series inverse() const;
  Series derivative(const std::string& var) const;
  Series truncate(int new_order) const;
  // Sets `var` to zero.
  Series drop(const std::string& var) const;
  // Divides by `var`; every term must contain it. Order decreases by one.
  Series shift_down(const std::string& var) const;
  // Multiplies by `var`. Order increases by one.
  Series shift_up(const std::string& var) const;
  // Re-expresses the series over another variable set; `rename` maps old
  // names to new names (identity for names not listed). Terms involving
  // a variable absent from the target are an error.
  Series remap(const VarSetPtr& target,
               const std::vector<std::pair<std::string, std::string>>& rename = {}) const;

  // All coefficients are nonnegative integers.
  bool is_nonnegative_integral() const;

  bool operator==(const Series& other) const;
  bool operator!=(const Series& other) const { return !(*this == other); }

  std::string to_string() const;

 private:
  friend class SeriesBuilder;
  void add_scaled(const Series& b, int sign);

  VarSetPtr vars_;
  int order_;
  std::vector<Term> terms_;
};

// Accumulates terms and produces a normalized Series.
class SeriesBuilder {
 public:
  SeriesBuilder(VarSetPtr vars, int order);
  void add(std::uint64_t key, int degree, const Rational& c);
  void add_product(std::uint64_t key, int degree, const Rational& a, const Rational& b);
  Series build();

 private:
  VarSetPtr vars_;
  int order_;
  std::vector<Series::Term> pending_;
};

// f with `var` replaced by g. g must have zero constant term.
Series compose(const Series& f, const std::string& var, const Series& g);
// Compositional inverse in `var`, other variables acting as parameters.
// f must be divisible by var with an invertible quotient.
Series revert(const Series& f, const std::string& var);

// Result order is the minimum of the operand orders; variable sets must match.
enum class ArithOp { Add, Sub, Mul };
Series series_arith(const Series& a, const Series& b, ArithOp op);

// Empty when the series agree up to the smaller of the two orders, otherwise
// a description of the first differing monomial.
std::string first_difference(const Series& a, const Series& b);
std::string monomial_string(const VarSet& vars, const Exponents& e);

nlohmann::json to_json(const Series& s);
Series series_from_json(const nlohmann::json& j);

}  // namespace irrmaps
