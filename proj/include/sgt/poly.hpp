#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "sgt/errors.hpp"

namespace sgt {

using BigInt = boost::multiprecision::cpp_int;

/// Ordered set of variable names a polynomial ranges over. Immutable and
/// shared; polynomials over different varsets never mix.
class VarSet {
 public:
  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::span<const std::string> names() const { return names_; }
  std::optional<std::size_t> index(std::string_view name) const;

  bool operator==(const VarSet& other) const { return names_ == other.names_; }

  /// The eight signed variables x+, x-, y+, y-, A+, A-, B+, B-.
  static const std::shared_ptr<const VarSet>& lambda8();
  /// The tilde basis x~+, x~-, y~+, y~-, A+, A-, B+, B- used for normal forms.
  static const std::shared_ptr<const VarSet>& tilde8();
  /// The two-variable ring {x, y} of ordinary Tutte polynomials.
  static const std::shared_ptr<const VarSet>& xy2();

 private:
  std::vector<std::string> names_;
};

/// Exponent vector, one entry per variable of the owning varset.
using Monomial = std::vector<std::int32_t>;

/// Graded lexicographic order: total degree first, then lex position by
/// varset order. Used for canonical storage and printing.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

using TermMap = std::map<Monomial, BigInt, GradedLex>;

/// Sparse multivariate polynomial with exact integer coefficients.
/// Canonical form invariant: no stored coefficient is zero and every exponent
/// vector has length |varset|.
class PolyZ {
 public:
  explicit PolyZ(std::shared_ptr<const VarSet> vars);
  PolyZ(std::shared_ptr<const VarSet> vars, TermMap terms);

  static PolyZ zero(std::shared_ptr<const VarSet> vars) { return PolyZ(std::move(vars)); }
  static PolyZ constant(std::shared_ptr<const VarSet> vars, BigInt c);
  static PolyZ variable(std::shared_ptr<const VarSet> vars, std::string_view name, std::int32_t exp = 1);
  static PolyZ monomial(std::shared_ptr<const VarSet> vars, Monomial m, BigInt c);

  const std::shared_ptr<const VarSet>& varset() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t num_terms() const { return terms_.size(); }
  std::int64_t total_degree() const;
  std::int32_t degree_in(std::size_t var_index) const;

  PolyZ operator+(const PolyZ& rhs) const;
  PolyZ operator-(const PolyZ& rhs) const;
  PolyZ operator-() const;
  PolyZ operator*(const PolyZ& rhs) const;
  PolyZ operator*(const BigInt& scalar) const;
  PolyZ pow(std::uint32_t n) const;

  PolyZ& operator+=(const PolyZ& rhs);
  PolyZ& operator-=(const PolyZ& rhs);

  bool operator==(const PolyZ& rhs) const;

  void add_term(const Monomial& m, const BigInt& c);

  /// Canonical text form: terms in descending graded-lex order, `*` between
  /// factors, `^` for powers. Example: `x+*B- + y+*A-`.
  std::string str() const;
  static PolyZ parse(std::shared_ptr<const VarSet> vars, std::string_view text);

 private:
  void check_same_varset(const PolyZ& rhs) const;

  std::shared_ptr<const VarSet> vars_;
  TermMap terms_;
};

PolyZ operator*(const BigInt& scalar, const PolyZ& p);

/// Serial reference product. The dispatching operator* must agree with this
/// exactly; kept public for tests and the benchmark.
PolyZ mul_serial(const PolyZ& a, const PolyZ& b);
/// OpenMP product, splits the larger operand across threads and merges the
/// per-thread partial maps. Result is canonical and thread-count independent.
PolyZ mul_parallel(const PolyZ& a, const PolyZ& b);

/// Ring homomorphism determined by per-variable images. Images live in a
/// common codomain varset; applying to a polynomial whose varset differs from
/// the domain, or using a variable without an image, is a usage error.
class Substitution {
 public:
  Substitution(std::shared_ptr<const VarSet> domain, std::shared_ptr<const VarSet> codomain);

  /// Identity map on `vars` (every variable mapped to itself).
  static Substitution identity(const std::shared_ptr<const VarSet>& vars);

  void set(std::string_view var, PolyZ image);
  bool has(std::string_view var) const;

  const std::shared_ptr<const VarSet>& domain() const { return domain_; }
  const std::shared_ptr<const VarSet>& codomain() const { return codomain_; }

  PolyZ apply(const PolyZ& p) const;

 private:
  std::shared_ptr<const VarSet> domain_;
  std::shared_ptr<const VarSet> codomain_;
  std::vector<std::optional<PolyZ>> images_;
};

}  // namespace sgt
