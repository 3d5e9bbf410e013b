#pragma once

#include "sgt/laurent.hpp"
#include "sgt/poly.hpp"

namespace sgt {

/// Element of the quotient of the eight-variable signed ring by the ideal
/// generated by the two determinant differences
///   (x+B- - x-B+) - (A+B- - A-B+)   and   (A+B- - A-B+) - (A+y- - A-y+).
/// Stored as the unique fully reduced polynomial over the tilde basis
/// x~e = xe - Ae, y~e = ye - Be, where reduction exhaustively rewrites
/// x~+B- -> x~-B+ and A+y~- -> A-y~+. The two rewrite rules touch disjoint
/// variables, so they form a Groebner basis with coprime leading terms and
/// the normal form is confluent and canonical.
class QuotientElem {
 public:
  QuotientElem() : nf_(VarSet::tilde8()) {}
  explicit QuotientElem(PolyZ reduced_tilde_form);

  const PolyZ& normal_form() const { return nf_; }
  bool is_zero() const { return nf_.is_zero(); }
  bool operator==(const QuotientElem& rhs) const { return nf_ == rhs.nf_; }

 private:
  PolyZ nf_;
};

/// Canonical image of a signed-ring polynomial in the quotient.
QuotientElem to_quotient(const PolyZ& p);

/// Deterministic display representative back over the signed variables.
/// Round-trip law: to_quotient(from_quotient(q)) == q.
PolyZ from_quotient(const QuotientElem& q);

/// Equality in the quotient ring: reduce the difference to zero.
bool eq_mod_I1(const PolyZ& p, const PolyZ& q);

/// The two ideal generators (index 0 and 1) as signed-ring polynomials.
PolyZ i1_generator(int which);

/// Bracket specialization x+ -> -A^-3, x- -> -A^3, y+ -> -A^3, y- -> -A^-3,
/// A+ -> A, A- -> A^-1, B+ -> A^-1, B- -> A. Annihilates both ideal
/// generators (checked once at first use), so it is well defined on
/// quotient classes.
LaurentZ kauffman_specialize(const PolyZ& p);

/// x+ -> x, y+ -> y, A+ -> 1, B+ -> 1 on the positive subring; any negative
/// variable present is a usage error.
PolyZ unsigned_phi(const PolyZ& p);

}  // namespace sgt
