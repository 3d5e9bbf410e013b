#include "sgt/laurent.hpp"

#include <cctype>
#include <sstream>

namespace sgt {

LaurentZ::LaurentZ(std::string varname) : var_(std::move(varname)) {}

LaurentZ::LaurentZ(std::string varname, std::map<std::int64_t, BigInt> terms)
    : var_(std::move(varname)), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
}

LaurentZ LaurentZ::constant(std::string varname, BigInt c) {
  LaurentZ p(std::move(varname));
  if (c != 0) p.terms_.emplace(0, std::move(c));
  return p;
}

LaurentZ LaurentZ::monomial(std::string varname, std::int64_t e, BigInt c) {
  LaurentZ p(std::move(varname));
  if (c != 0) p.terms_.emplace(e, std::move(c));
  return p;
}

BigInt LaurentZ::coeff(std::int64_t e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? BigInt(0) : it->second;
}

std::int64_t LaurentZ::min_degree() const {
  if (terms_.empty()) throw domain_error("degree of the zero Laurent polynomial");
  return terms_.begin()->first;
}

std::int64_t LaurentZ::max_degree() const {
  if (terms_.empty()) throw domain_error("degree of the zero Laurent polynomial");
  return terms_.rbegin()->first;
}

std::int64_t LaurentZ::breadth() const { return max_degree() - min_degree(); }

LaurentZ& LaurentZ::operator+=(const LaurentZ& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

LaurentZ LaurentZ::operator+(const LaurentZ& rhs) const {
  LaurentZ out = *this;
  out += rhs;
  return out;
}

LaurentZ LaurentZ::operator-() const {
  LaurentZ out(var_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentZ LaurentZ::operator-(const LaurentZ& rhs) const { return *this + (-rhs); }

LaurentZ LaurentZ::operator*(const LaurentZ& rhs) const {
  LaurentZ out(var_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : rhs.terms_) {
      auto [it, fresh] = out.terms_.emplace(ea + eb, ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

LaurentZ LaurentZ::mul_monomial(std::int64_t e, const BigInt& c) const {
  LaurentZ out(var_);
  if (c == 0) return out;
  for (const auto& [ea, ca] : terms_) out.terms_.emplace(ea + e, ca * c);
  return out;
}

LaurentZ LaurentZ::pow(std::uint32_t n) const {
  LaurentZ acc = LaurentZ::constant(var_, 1);
  LaurentZ base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool LaurentZ::operator==(const LaurentZ& rhs) const { return terms_ == rhs.terms_; }

LaurentZ LaurentZ::reexpress(std::int64_t c, std::string new_varname) const {
  if (c == 0) throw usage_error("reexpress rule must be nonzero");
  LaurentZ out(std::move(new_varname));
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(c * e, coeff);
  return out;
}

LaurentZ LaurentZ::quarter_to_whole(std::string new_varname) const {
  LaurentZ out(std::move(new_varname));
  for (const auto& [e, coeff] : terms_) {
    if (e % 4 != 0)
      throw domain_error("exponent " + std::to_string(e) +
                         " is not a multiple of 4; input is a link or upstream is wrong");
    out.terms_.emplace(e / 4, coeff);
  }
  return out;
}

std::string LaurentZ::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (abs_c != 1 || e == 0) {
      os << abs_c;
      if (e != 0) os << "*";
    }
    if (e != 0) {
      os << var_;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentZ LaurentZ::parse(std::string varname, std::string_view text) {
  LaurentZ out(varname);
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> BigInt {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw validation_error("expected integer in Laurent text");
    BigInt v{std::string(text.substr(start, pos - start))};
    return neg ? BigInt(-v) : v;
  };
  int sign = 1;
  bool expect_term = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    char c = text[pos];
    if (c == '+' || c == '-') {
      if (c == '-') sign = expect_term ? -sign : -1;
      else if (!expect_term) sign = 1;
      ++pos;
      expect_term = true;
      continue;
    }
    BigInt coeff = 1;
    std::int64_t exp = 0;
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = read_int();
      any = true;
      skip_ws();
      if (pos < text.size() && text[pos] == '*') ++pos;
      skip_ws();
    }
    if (pos < text.size() && text.substr(pos, varname.size()) == varname) {
      pos += varname.size();
      exp = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        skip_ws();
        // optional parentheses around negative exponents
        bool paren = pos < text.size() && text[pos] == '(';
        if (paren) ++pos;
        exp = static_cast<std::int64_t>(read_int());
        if (paren) {
          skip_ws();
          if (pos >= text.size() || text[pos] != ')')
            throw validation_error("unbalanced parenthesis in Laurent exponent");
          ++pos;
        }
      }
      any = true;
    }
    if (!any) throw validation_error("unexpected character in Laurent text: " + std::string(1, c));
    auto [it, fresh] = out.terms_.emplace(exp, sign < 0 ? BigInt(-coeff) : coeff);
    if (!fresh) {
      it->second += sign < 0 ? BigInt(-coeff) : coeff;
      if (it->second == 0) out.terms_.erase(it);
    }
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !out.terms_.empty()) throw validation_error("dangling sign in Laurent text");
  return out;
}

}  // namespace sgt
