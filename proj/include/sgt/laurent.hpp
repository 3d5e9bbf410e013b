#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "sgt/poly.hpp"

namespace sgt {

/// Single-variable Laurent polynomial: integer exponents of either sign,
/// exact integer coefficients, no stored zero coefficient.
class LaurentZ {
 public:
  explicit LaurentZ(std::string varname);
  LaurentZ(std::string varname, std::map<std::int64_t, BigInt> terms);

  static LaurentZ zero(std::string varname) { return LaurentZ(std::move(varname)); }
  static LaurentZ constant(std::string varname, BigInt c);
  /// c * var^e
  static LaurentZ monomial(std::string varname, std::int64_t e, BigInt c);

  const std::string& varname() const { return var_; }
  const std::map<std::int64_t, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  BigInt coeff(std::int64_t e) const;

  std::int64_t min_degree() const;  ///< domain error on zero
  std::int64_t max_degree() const;  ///< domain error on zero
  std::int64_t breadth() const;     ///< max_degree - min_degree; domain error on zero

  LaurentZ operator+(const LaurentZ& rhs) const;
  LaurentZ operator-(const LaurentZ& rhs) const;
  LaurentZ operator-() const;
  LaurentZ operator*(const LaurentZ& rhs) const;
  LaurentZ& operator+=(const LaurentZ& rhs);
  /// Multiply by c * var^e without building a temporary.
  LaurentZ mul_monomial(std::int64_t e, const BigInt& c) const;
  LaurentZ pow(std::uint32_t n) const;

  bool operator==(const LaurentZ& rhs) const;

  /// Exponent reindexing n -> c*n (c != 0), optionally renaming the variable.
  /// The Jones map uses c = -1 into quarter-powers of t.
  LaurentZ reexpress(std::int64_t c, std::string new_varname) const;

  /// Interpret exponents as quarter-powers: every exponent must be divisible
  /// by 4 (otherwise a domain error, which signals a link or an upstream
  /// bug); returns the polynomial in t with exponents divided by 4.
  LaurentZ quarter_to_whole(std::string new_varname) const;

  /// Ascending-exponent text, e.g. `t^2 - 2*t^3 + 4*t^4`.
  std::string str() const;
  static LaurentZ parse(std::string varname, std::string_view text);

 private:
  std::string var_;
  std::map<std::int64_t, BigInt> terms_;
};

}  // namespace sgt
