#include "sgt/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgt/parallel.hpp"

namespace sgt {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i)
    for (std::size_t j = i + 1; j < names_.size(); ++j)
      if (names_[i] == names_[j]) throw usage_error("duplicate variable name: " + names_[i]);
}

std::optional<std::size_t> VarSet::index(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

const std::shared_ptr<const VarSet>& VarSet::lambda8() {
  static const auto v = std::make_shared<const VarSet>(
      std::vector<std::string>{"x+", "x-", "y+", "y-", "A+", "A-", "B+", "B-"});
  return v;
}

const std::shared_ptr<const VarSet>& VarSet::tilde8() {
  static const auto v = std::make_shared<const VarSet>(
      std::vector<std::string>{"x~+", "x~-", "y~+", "y~-", "A+", "A-", "B+", "B-"});
  return v;
}

const std::shared_ptr<const VarSet>& VarSet::xy2() {
  static const auto v = std::make_shared<const VarSet>(std::vector<std::string>{"x", "y"});
  return v;
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  std::int64_t da = std::accumulate(a.begin(), a.end(), std::int64_t{0});
  std::int64_t db = std::accumulate(b.begin(), b.end(), std::int64_t{0});
  if (da != db) return da < db;
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

PolyZ::PolyZ(std::shared_ptr<const VarSet> vars) : vars_(std::move(vars)) {
  if (!vars_) throw usage_error("polynomial needs a varset");
}

PolyZ::PolyZ(std::shared_ptr<const VarSet> vars, TermMap terms)
    : vars_(std::move(vars)), terms_(std::move(terms)) {
  if (!vars_) throw usage_error("polynomial needs a varset");
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.size() != vars_->size())
      throw usage_error("exponent vector length does not match varset");
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

PolyZ PolyZ::constant(std::shared_ptr<const VarSet> vars, BigInt c) {
  PolyZ p(std::move(vars));
  if (c != 0) p.terms_.emplace(Monomial(p.vars_->size(), 0), std::move(c));
  return p;
}

PolyZ PolyZ::variable(std::shared_ptr<const VarSet> vars, std::string_view name, std::int32_t exp) {
  auto idx = vars->index(name);
  if (!idx) throw usage_error("unknown variable: " + std::string(name));
  if (exp < 0) throw usage_error("negative exponent in PolyZ");
  PolyZ p(std::move(vars));
  Monomial m(p.vars_->size(), 0);
  m[*idx] = exp;
  p.terms_.emplace(std::move(m), BigInt(1));
  return p;
}

PolyZ PolyZ::monomial(std::shared_ptr<const VarSet> vars, Monomial m, BigInt c) {
  PolyZ p(std::move(vars));
  if (m.size() != p.vars_->size()) throw usage_error("exponent vector length does not match varset");
  if (c != 0) p.terms_.emplace(std::move(m), std::move(c));
  return p;
}

std::int64_t PolyZ::total_degree() const {
  std::int64_t d = 0;
  for (const auto& [m, c] : terms_)
    d = std::max(d, std::accumulate(m.begin(), m.end(), std::int64_t{0}));
  return d;
}

std::int32_t PolyZ::degree_in(std::size_t var_index) const {
  std::int32_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var_index]);
  return d;
}

void PolyZ::check_same_varset(const PolyZ& rhs) const {
  if (vars_ != rhs.vars_ && !(*vars_ == *rhs.vars_))
    throw usage_error("varset mismatch between polynomial operands");
}

void PolyZ::add_term(const Monomial& m, const BigInt& c) {
  if (m.size() != vars_->size()) throw usage_error("exponent vector length does not match varset");
  assert(std::accumulate(m.begin(), m.end(), std::int64_t{0}) < (std::int64_t{1} << 30));
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

PolyZ& PolyZ::operator+=(const PolyZ& rhs) {
  check_same_varset(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

PolyZ& PolyZ::operator-=(const PolyZ& rhs) {
  check_same_varset(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

PolyZ PolyZ::operator+(const PolyZ& rhs) const {
  PolyZ out = *this;
  out += rhs;
  return out;
}

PolyZ PolyZ::operator-(const PolyZ& rhs) const {
  PolyZ out = *this;
  out -= rhs;
  return out;
}

PolyZ PolyZ::operator-() const {
  PolyZ out(vars_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
  return out;
}

PolyZ PolyZ::operator*(const BigInt& scalar) const {
  PolyZ out(vars_);
  if (scalar == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * scalar);
  return out;
}

PolyZ operator*(const BigInt& scalar, const PolyZ& p) { return p * scalar; }

namespace {

Monomial mono_add(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = a[i] + b[i];
  return m;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int32_t e : m) {
      h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e));
      h *= 1099511628211ull;
    }
    return h;
  }
};

void accumulate_product(TermMap& out, const TermMap& a, const TermMap& b) {
  for (const auto& [ma, ca] : a) {
    for (const auto& [mb, cb] : b) {
      Monomial m = mono_add(ma, mb);
      auto [it, fresh] = out.emplace(std::move(m), ca * cb);
      if (!fresh) {
        it->second += ca * cb;
        if (it->second == 0) out.erase(it);
      }
    }
  }
}

constexpr std::size_t kParallelMulThreshold = 1 << 14;  // |a|*|b| pairs

}  // namespace

PolyZ mul_serial(const PolyZ& a, const PolyZ& b) {
  if (!(*a.varset() == *b.varset()))
    throw usage_error("varset mismatch between polynomial operands");
  TermMap out;
  accumulate_product(out, a.terms(), b.terms());
  return PolyZ(a.varset(), std::move(out));
}

PolyZ mul_parallel(const PolyZ& a, const PolyZ& b) {
#ifdef _OPENMP
  if (!(*a.varset() == *b.varset()))
    throw usage_error("varset mismatch between polynomial operands");
  // Split the larger operand; workers accumulate into private hash maps and
  // the canonical ordered form is built once at the end.
  const PolyZ& big = a.num_terms() >= b.num_terms() ? a : b;
  const PolyZ& small = a.num_terms() >= b.num_terms() ? b : a;
  std::vector<const std::pair<const Monomial, BigInt>*> terms;
  terms.reserve(big.num_terms());
  for (const auto& t : big.terms()) terms.push_back(&t);

  using HashMap = std::unordered_map<Monomial, BigInt, MonomialHash>;
  int nt = num_threads();
#pragma omp parallel num_threads(nt > 0 ? nt : omp_get_max_threads())
  { nt = omp_get_num_threads(); }
  std::vector<HashMap> partial(static_cast<std::size_t>(nt));

#pragma omp parallel num_threads(nt)
  {
    HashMap& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
    mine.reserve(terms.size() * small.num_terms() / static_cast<std::size_t>(nt) + 16);
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(terms.size()); ++i) {
      const auto& [ma, ca] = *terms[static_cast<std::size_t>(i)];
      for (const auto& [mb, cb] : small.terms()) {
        auto [it, fresh] = mine.emplace(mono_add(ma, mb), ca * cb);
        if (!fresh) it->second += ca * cb;
      }
    }
  }

  HashMap& pool = partial[0];
  for (std::size_t i = 1; i < partial.size(); ++i) {
    for (auto& [m, c] : partial[i]) {
      auto [it, fresh] = pool.emplace(std::move(const_cast<Monomial&>(m)), std::move(c));
      if (!fresh) it->second += c;
    }
    partial[i].clear();
  }
  TermMap out;
  for (auto& [m, c] : pool)
    if (c != 0) out.emplace(std::move(const_cast<Monomial&>(m)), std::move(c));
  return PolyZ(a.varset(), std::move(out));
#else
  return mul_serial(a, b);
#endif
}

PolyZ PolyZ::operator*(const PolyZ& rhs) const {
  check_same_varset(rhs);
  if (parallel_enabled() && num_terms() * rhs.num_terms() >= kParallelMulThreshold)
    return mul_parallel(*this, rhs);
  return mul_serial(*this, rhs);
}

PolyZ PolyZ::pow(std::uint32_t n) const {
  PolyZ acc = PolyZ::constant(vars_, 1);
  PolyZ base = *this;
  while (n > 0) {
    if (n & 1u) acc = acc * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool PolyZ::operator==(const PolyZ& rhs) const {
  return (*vars_ == *rhs.vars_) && terms_ == rhs.terms_;
}

std::string PolyZ::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // descending canonical order
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    BigInt abs_c = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_vars = std::any_of(m.begin(), m.end(), [](std::int32_t e) { return e != 0; });
    bool printed = false;
    if (abs_c != 1 || !has_vars) {
      os << abs_c;
      printed = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) os << "*";
      os << vars_->name(i);
      if (m[i] != 1) os << "^" << m[i];
      printed = true;
    }
  }
  return os.str();
}

namespace {

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;
  const VarSet& vars;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return text[pos];
  }
  // longest variable name match at current position, or empty
  std::string match_var() {
    skip_ws();
    std::string best;
    for (const auto& name : vars.names()) {
      if (text.substr(pos, name.size()) == name && name.size() > best.size()) best = name;
    }
    pos += best.size();
    return best;
  }
  BigInt read_int() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw validation_error("expected integer in polynomial text");
    return BigInt(std::string(text.substr(start, pos - start)));
  }
};

}  // namespace

PolyZ PolyZ::parse(std::shared_ptr<const VarSet> vars, std::string_view text) {
  Tokenizer tk{text, 0, *vars};
  PolyZ out(vars);
  bool expect_term = true;
  int sign = 1;
  while (!tk.done()) {
    char c = tk.peek();
    if (expect_term && (c == '+' || c == '-')) {
      if (c == '-') sign = -sign;
      ++tk.pos;
      continue;
    }
    if (!expect_term) {
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++tk.pos;
        expect_term = true;
        continue;
      }
      throw validation_error("unexpected character in polynomial text: " + std::string(1, c));
    }
    // one term: [int] ['*'] factor ( '*'? factor )*
    BigInt coeff = 1;
    Monomial mono(vars->size(), 0);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      coeff = tk.read_int();
      any = true;
    }
    while (!tk.done()) {
      char d = tk.peek();
      if (d == '*') {
        ++tk.pos;
        continue;
      }
      if (d == '+' || d == '-') {
        // separator only if it is not part of a variable name
        std::size_t save = tk.pos;
        std::string v = tk.match_var();
        if (v.empty()) {
          tk.pos = save;
          break;
        }
        tk.pos = save;
      }
      std::string v = tk.match_var();
      if (v.empty()) break;
      std::int32_t exp = 1;
      if (!tk.done() && tk.peek() == '^') {
        ++tk.pos;
        exp = static_cast<std::int32_t>(tk.read_int());
      }
      mono[*vars->index(v)] += exp;
      any = true;
    }
    if (!any) throw validation_error("empty term in polynomial text");
    out.add_term(mono, sign < 0 ? BigInt(-coeff) : coeff);
    sign = 1;
    expect_term = false;
  }
  if (expect_term && !out.is_zero())
    throw validation_error("dangling sign in polynomial text");
  return out;
}

Substitution::Substitution(std::shared_ptr<const VarSet> domain, std::shared_ptr<const VarSet> codomain)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(domain_->size()) {}

Substitution Substitution::identity(const std::shared_ptr<const VarSet>& vars) {
  Substitution s(vars, vars);
  for (std::size_t i = 0; i < vars->size(); ++i)
    s.images_[i] = PolyZ::variable(vars, vars->name(i));
  return s;
}

void Substitution::set(std::string_view var, PolyZ image) {
  auto idx = domain_->index(var);
  if (!idx) throw usage_error("substitution: unknown variable " + std::string(var));
  if (!(*image.varset() == *codomain_))
    throw usage_error("substitution image varset does not match codomain");
  images_[*idx] = std::move(image);
}

bool Substitution::has(std::string_view var) const {
  auto idx = domain_->index(var);
  return idx && images_[*idx].has_value();
}

PolyZ Substitution::apply(const PolyZ& p) const {
  if (!(*p.varset() == *domain_)) throw usage_error("substitution domain mismatch");
  // image powers shared across this polynomial's terms
  std::vector<std::vector<PolyZ>> pow_cache(domain_->size());
  PolyZ out(codomain_);
  for (const auto& [m, c] : p.terms()) {
    PolyZ term = PolyZ::constant(codomain_, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!images_[i])
        throw usage_error("substitution: no image for variable " + domain_->name(i));
      auto& cache = pow_cache[i];
      if (cache.empty()) cache.push_back(PolyZ::constant(codomain_, 1));
      while (cache.size() <= static_cast<std::size_t>(m[i]))
        cache.push_back(cache.back() * *images_[i]);
      term = term * cache[static_cast<std::size_t>(m[i])];
    }
    out += term;
  }
  return out;
}

}  // namespace sgt
