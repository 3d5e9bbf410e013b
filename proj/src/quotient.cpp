#include "sgt/quotient.hpp"

#include <mutex>

namespace sgt {

namespace {

// tilde8 variable positions
enum : std::size_t { XT_P = 0, XT_M = 1, YT_P = 2, YT_M = 3, T_AP = 4, T_AM = 5, T_BP = 6, T_BM = 7 };
// lambda8 variable positions
enum : std::size_t { L_XP = 0, L_XM = 1, L_YP = 2, L_YM = 3, L_AP = 4, L_AM = 5, L_BP = 6, L_BM = 7 };

// Rewrite a tilde-basis monomial to its normal form. Each rule moves the
// full overlap at once: x~+^a ... B-^d with k = min(a,d) becomes
// x~+^(a-k) x~-^(b+k) B+^(c+k) B-^(d-k); the A/y~ rule is identical on its
// own four variables. The rules share no variables, so order is irrelevant.
Monomial reduce_monomial(Monomial m) {
  std::int32_t k = std::min(m[XT_P], m[T_BM]);
  if (k > 0) {
    m[XT_P] -= k;
    m[T_BM] -= k;
    m[XT_M] += k;
    m[T_BP] += k;
  }
  k = std::min(m[T_AP], m[YT_M]);
  if (k > 0) {
    m[T_AP] -= k;
    m[YT_M] -= k;
    m[T_AM] += k;
    m[YT_P] += k;
  }
  return m;
}

bool monomial_is_reduced(const Monomial& m) {
  return !(m[XT_P] > 0 && m[T_BM] > 0) && !(m[T_AP] > 0 && m[YT_M] > 0);
}

const Substitution& lambda_to_tilde() {
  // x_e = x~e + A_e, y_e = y~e + B_e
  static const Substitution s = [] {
    const auto& lam = VarSet::lambda8();
    const auto& til = VarSet::tilde8();
    Substitution sub(lam, til);
    auto v = [&](const char* n) { return PolyZ::variable(til, n); };
    sub.set("x+", v("x~+") + v("A+"));
    sub.set("x-", v("x~-") + v("A-"));
    sub.set("y+", v("y~+") + v("B+"));
    sub.set("y-", v("y~-") + v("B-"));
    sub.set("A+", v("A+"));
    sub.set("A-", v("A-"));
    sub.set("B+", v("B+"));
    sub.set("B-", v("B-"));
    return sub;
  }();
  return s;
}

const Substitution& tilde_to_lambda() {
  static const Substitution s = [] {
    const auto& lam = VarSet::lambda8();
    const auto& til = VarSet::tilde8();
    Substitution sub(til, lam);
    auto v = [&](const char* n) { return PolyZ::variable(lam, n); };
    sub.set("x~+", v("x+") - v("A+"));
    sub.set("x~-", v("x-") - v("A-"));
    sub.set("y~+", v("y+") - v("B+"));
    sub.set("y~-", v("y-") - v("B-"));
    sub.set("A+", v("A+"));
    sub.set("A-", v("A-"));
    sub.set("B+", v("B+"));
    sub.set("B-", v("B-"));
    return sub;
  }();
  return s;
}

}  // namespace

QuotientElem::QuotientElem(PolyZ reduced) : nf_(std::move(reduced)) {
  if (!(*nf_.varset() == *VarSet::tilde8()))
    throw usage_error("QuotientElem must be over the tilde basis");
  for (const auto& [m, c] : nf_.terms())
    if (!monomial_is_reduced(m)) throw usage_error("QuotientElem holds an unreduced monomial");
}

QuotientElem to_quotient(const PolyZ& p) {
  if (!(*p.varset() == *VarSet::lambda8()))
    throw usage_error("to_quotient expects a polynomial over the signed variables");
  PolyZ tilde = lambda_to_tilde().apply(p);
  PolyZ out(VarSet::tilde8());
  for (const auto& [m, c] : tilde.terms()) out.add_term(reduce_monomial(m), c);
  return QuotientElem(std::move(out));
}

PolyZ from_quotient(const QuotientElem& q) { return tilde_to_lambda().apply(q.normal_form()); }

bool eq_mod_I1(const PolyZ& p, const PolyZ& q) { return to_quotient(p - q).is_zero(); }

PolyZ i1_generator(int which) {
  const auto& lam = VarSet::lambda8();
  auto v = [&](const char* n) { return PolyZ::variable(lam, n); };
  PolyZ det_xB = v("x+") * v("B-") - v("x-") * v("B+");
  PolyZ det_AB = v("A+") * v("B-") - v("A-") * v("B+");
  PolyZ det_Ay = v("A+") * v("y-") - v("A-") * v("y+");
  switch (which) {
    case 0: return det_xB - det_AB;
    case 1: return det_AB - det_Ay;
    default: throw usage_error("i1_generator index must be 0 or 1");
  }
}

namespace {

LaurentZ kauffman_raw(const PolyZ& p) {
  // exponent and sign of each variable's image as a power of A
  static constexpr std::int64_t kExp[8] = {-3, 3, 3, -3, 1, -1, -1, 1};
  static constexpr bool kNeg[8] = {true, true, true, true, false, false, false, false};
  LaurentZ out("A");
  for (const auto& [m, c] : p.terms()) {
    std::int64_t e = 0;
    bool neg = false;
    for (std::size_t i = 0; i < 8; ++i) {
      e += kExp[i] * m[i];
      if (kNeg[i] && (m[i] & 1)) neg = !neg;
    }
    out += LaurentZ::monomial("A", e, neg ? BigInt(-c) : c);
  }
  return out;
}

void kauffman_self_test() {
  static std::once_flag flag;
  std::call_once(flag, [] {
    for (int i = 0; i < 2; ++i)
      if (!kauffman_raw(i1_generator(i)).is_zero())
        throw std::logic_error("bracket specialization does not annihilate the ideal");
  });
}

}  // namespace

LaurentZ kauffman_specialize(const PolyZ& p) {
  if (!(*p.varset() == *VarSet::lambda8()))
    throw usage_error("kauffman_specialize expects a polynomial over the signed variables");
  kauffman_self_test();
  return kauffman_raw(p);
}

PolyZ unsigned_phi(const PolyZ& p) {
  if (!(*p.varset() == *VarSet::lambda8()))
    throw usage_error("unsigned_phi expects a polynomial over the signed variables");
  PolyZ out(VarSet::xy2());
  for (const auto& [m, c] : p.terms()) {
    if (m[L_XM] || m[L_YM] || m[L_AM] || m[L_BM])
      throw usage_error("unsigned_phi is defined on the positive subring only");
    Monomial img{m[L_XP], m[L_YP]};
    out.add_term(img, c);
  }
  return out;
}

}  // namespace sgt
