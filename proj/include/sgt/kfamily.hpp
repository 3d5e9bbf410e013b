#pragma once

#include "sgt/laurent.hpp"
#include "sgt/poly.hpp"
#include "sgt/sgraph.hpp"

namespace sgt {

/// The two seed graphs of the twisted knot family: two parallel edges of
/// opposite sign, and two opposite-sign loops on one vertex.
SignedGraph kfamily_m1();
SignedGraph kfamily_m2();

/// Tutte representatives of the deleted/contracted halves of the family
/// member: the seed polynomials pushed through the k-stretch products for
/// both signs, then the k-thickening products for both signs.
struct KFamilyParts {
  PolyZ t_del;  ///< T(G \ g)
  PolyZ t_con;  ///< T(G / g)
  PolyZ t_g;    ///< B+ T(G\g) + A+ T(G/g)
};
KFamilyParts kfamily_tutte(int k);

/// Jones polynomial of the k-th family member (odd k >= 3), writhe -1.
LaurentZ kfamily_jones(int k);

}  // namespace sgt
