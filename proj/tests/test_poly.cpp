#include <doctest.h>

#include "sgt/laurent.hpp"
#include "sgt/poly.hpp"

using namespace sgt;

namespace {
PolyZ lam(const std::string& text) { return PolyZ::parse(VarSet::lambda8(), text); }
}  // namespace

TEST_CASE("difference of squares") {
  PolyZ x = lam("x+"), y = lam("y+");
  CHECK((x + y) * (x - y) == lam("x+^2 - y+^2"));
}

TEST_CASE("identity elements") {
  PolyZ p = lam("3*x+*B- - 2*y-^4");
  CHECK(p + PolyZ::zero(VarSet::lambda8()) == p);
  CHECK(p * PolyZ::constant(VarSet::lambda8(), 1) == p);
}

TEST_CASE("binomial expansion") {
  PolyZ s = lam("A+ + B+");
  CHECK(s.pow(3) == lam("A+^3 + 3*A+^2*B+ + 3*A+*B+^2 + B+^3"));
}

TEST_CASE("varset mismatch is rejected") {
  PolyZ p = lam("x+");
  PolyZ q = PolyZ::parse(VarSet::xy2(), "x");
  CHECK_THROWS_AS(p + q, usage_error);
  CHECK_THROWS_AS(p * q, usage_error);
}

TEST_CASE("canonical form drops zero coefficients") {
  PolyZ p = lam("x+ - x+");
  CHECK(p.is_zero());
  CHECK(p.str() == "0");
  CHECK(lam("x+ + x+") == lam("2*x+"));
}

TEST_CASE("substitution homomorphism on the cube example") {
  Substitution sub = Substitution::identity(VarSet::lambda8());
  sub.set("y+", lam("y+^3"));
  sub.set("y-", lam("y-^3"));
  CHECK(sub.apply(lam("y+*y-")) == lam("y+^3*y-^3"));
}

TEST_CASE("identity substitution changes nothing") {
  Substitution sub = Substitution::identity(VarSet::lambda8());
  PolyZ p = lam("5*x+^2*A-*B+ - y-");
  CHECK(sub.apply(p) == p);
}

TEST_CASE("annihilating substitution") {
  Substitution sub = Substitution::identity(VarSet::lambda8());
  sub.set("x+", PolyZ::zero(VarSet::lambda8()));
  sub.set("y+", PolyZ::zero(VarSet::lambda8()));
  CHECK(sub.apply(lam("x+*B- + y+*A-")).is_zero());
}

TEST_CASE("missing image for a used variable is a usage error") {
  Substitution sub(VarSet::lambda8(), VarSet::lambda8());
  sub.set("x+", lam("x+"));
  CHECK_THROWS_AS(sub.apply(lam("x+*B-")), usage_error);
  CHECK(sub.apply(lam("x+^2")) == lam("x+^2"));  // unused variables stay unconstrained
}

TEST_CASE("printing follows descending graded lex with explicit stars") {
  CHECK(lam("x+*B- + y+*A-").str() == "x+*B- + y+*A-");
  CHECK(lam("y+*A- + x+*B-").str() == "x+*B- + y+*A-");
  CHECK(lam("1 + x+").str() == "x+ + 1");
  CHECK(lam("-x+ - 1").str() == "-x+ - 1");
}

TEST_CASE("parser is whitespace insensitive and star optional") {
  CHECK(PolyZ::parse(VarSet::lambda8(), "x+*B-+y+*A-") == lam("x+*B- + y+*A-"));
  CHECK(PolyZ::parse(VarSet::lambda8(), "2 y+^2 A+") == lam("2*y+^2*A+"));
  CHECK(PolyZ::parse(VarSet::xy2(), "x^2+x*y") == PolyZ::parse(VarSet::xy2(), "x^2 + x*y"));
}

TEST_CASE("round trip through text") {
  PolyZ p = lam("4*x+*y+*A+*A-*B+*B- + 2*y+^2*A+*A-^2*B+ - 7*x-^5");
  CHECK(PolyZ::parse(VarSet::lambda8(), p.str()) == p);
}

TEST_CASE("big coefficients survive multiplication") {
  BigInt big("101497138129454");
  PolyZ p = PolyZ::constant(VarSet::lambda8(), big);
  PolyZ q = p * p;
  CHECK(q == PolyZ::constant(VarSet::lambda8(), big * big));
  CHECK(PolyZ::parse(VarSet::lambda8(), q.str()) == q);
}

TEST_CASE("laurent arithmetic and normalization") {
  LaurentZ a = LaurentZ::monomial("A", -3, -1);  // -A^-3
  LaurentZ b = LaurentZ::monomial("A", 3, -1);   // -A^3
  CHECK(a * b == LaurentZ::constant("A", 1));
  CHECK(LaurentZ::parse("A", "A^19 + A^-9").breadth() == 28);
}

TEST_CASE("laurent breadth of zero is a domain error") {
  CHECK_THROWS_AS(LaurentZ::zero("A").breadth(), sgt::domain_error);
}

TEST_CASE("laurent reexpression and quarter powers") {
  LaurentZ p = LaurentZ::monomial("A", -8, 1);
  LaurentZ q = p.reexpress(-1, "q");
  CHECK(q == LaurentZ::monomial("q", 8, 1));
  CHECK(q.quarter_to_whole("t") == LaurentZ::monomial("t", 2, 1));
  CHECK(LaurentZ::constant("A", 1).reexpress(-1, "q").quarter_to_whole("t") ==
        LaurentZ::constant("t", 1));
  LaurentZ odd = LaurentZ::monomial("A", -2, 1).reexpress(-1, "q");
  CHECK_THROWS_AS(odd.quarter_to_whole("t"), sgt::domain_error);
}

TEST_CASE("laurent text round trip") {
  LaurentZ p = LaurentZ::parse("t", "t^-10 - 4*t^-9 + 12*t^-8 - 1 + 3*t^15");
  CHECK(LaurentZ::parse("t", p.str()) == p);
  CHECK(LaurentZ::parse("A", "-A^19 + 2*A^15").coeff(19) == -1);
}

TEST_CASE("serial and parallel products agree") {
  PolyZ a = lam("x+ + 2*y- + 3*A+*B-^2 - x-*y+");
  PolyZ b = lam("5*B+ - A-^3 + x+*x-");
  CHECK(mul_serial(a, b) == mul_parallel(a, b));
  CHECK(mul_serial(a, b) == a * b);
}
