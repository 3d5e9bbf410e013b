#pragma once

#include <utility>
#include <vector>

#include "sgt/poly.hpp"
#include "sgt/sgraph.hpp"
#include "sgt/tutte.hpp"

namespace sgt {

/// Replace every edge of `m` carrying `sign` with a copy of n minus its
/// distinguished edge e, identifying e's endpoints with the replaced edge's
/// endpoints. `attach` holds one orientation bit per replaced edge (in label
/// order); empty means all default. The sign of e itself never matters.
struct TensorSpec {
  SignedGraph m;
  Sign sign = Sign::plus;
  SignedGraph n;
  int e = 0;
  std::vector<bool> attach;
};

/// Explicit product graph. Replaced edges must not be loops, e must not be a
/// loop, n must be connected. New labels preserve the relative order of the
/// blocks (each copy of n\e slots in at its host edge's position).
SignedGraph tensor_graph(const TensorSpec& spec);

/// The substitution of the product formula for one sign:
///   x_s -> T(n\e), A_s -> T_L(n,e), y_s -> T(n/e), B_s -> T_C(n,e),
/// identity on the other sign's variables.
Substitution tensor_substitution(Sign sign, const SignedGraph& n, int e);

/// Image of t_m under tensor_substitution: a representative of the product
/// graph's Tutte polynomial modulo the ideal.
PolyZ tensor_subst(const PolyZ& t_m, Sign sign, const SignedGraph& n, int e);

/// k+1 parallel edges of one sign; returns the graph and the distinguished
/// (highest) label.
std::pair<SignedGraph, int> thickening(int k, Sign sign);

/// A (k+1)-cycle of one sign; returns the graph and the distinguished label.
std::pair<SignedGraph, int> stretch(int k, Sign sign);

/// Ordinary Tutte polynomial of an unsigned tensor product, computed
/// division-free: the monomial x^i y^j of t_m maps to
///   T(n\e)^i T(n/e)^j T_L^(rank_m - i) T_C^(size_m - rank_m - j).
/// A monomial exceeding the grading bounds is a usage error (t_m was not the
/// Tutte polynomial of a graph with the stated rank and size).
PolyZ unsigned_tensor(const PolyZ& t_m, int rank_m, int size_m, const SignedGraph& n, int e);

}  // namespace sgt
