#include "sgt/kfamily.hpp"

#include "sgt/knot.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tensor.hpp"
#include "sgt/tutte.hpp"

namespace sgt {

SignedGraph kfamily_m1() {
  return SignedGraph(2, {Edge{0, 1, Sign::plus, 1}, Edge{0, 1, Sign::minus, 2}});
}

SignedGraph kfamily_m2() {
  return SignedGraph(1, {Edge{0, 0, Sign::plus, 1}, Edge{0, 0, Sign::minus, 2}});
}

KFamilyParts kfamily_tutte(int k) {
  if (k < 3 || k % 2 == 0)
    throw usage_error("the knot family is defined for odd k >= 3");

  PolyZ t_del = tutte_activity(kfamily_m1());
  PolyZ t_con = tutte_activity(kfamily_m2());

  // product with the stretch graphs for both signs, then the thickenings
  for (auto maker : {&stretch, &thickening}) {
    for (Sign s : {Sign::plus, Sign::minus}) {
      auto [n, e] = maker(k, s);
      Substitution sub = tensor_substitution(s, n, e);
      t_del = sub.apply(t_del);
      t_con = sub.apply(t_con);
    }
  }

  const auto& lam = VarSet::lambda8();
  PolyZ t_g = PolyZ::variable(lam, "B+") * t_del + PolyZ::variable(lam, "A+") * t_con;
  return KFamilyParts{std::move(t_del), std::move(t_con), std::move(t_g)};
}

LaurentZ kfamily_jones(int k) {
  KFamilyParts parts = kfamily_tutte(k);
  return jones(kauffman_specialize(parts.t_g), -1);
}

}  // namespace sgt
