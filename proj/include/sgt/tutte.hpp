#pragma once

#include <utility>

#include "sgt/poly.hpp"
#include "sgt/sgraph.hpp"

namespace sgt {

/// Signed Tutte polynomial by activity enumeration: one monomial per maximal
/// spanning forest, each edge contributing x/y/A/B of its own sign by its
/// activity class. The raw polynomial depends on the labelling; its quotient
/// image does not.
PolyZ tutte_activity(const SignedGraph& g);
PolyZ tutte_activity_serial(const SignedGraph& g);
PolyZ tutte_activity_parallel(const SignedGraph& g);

/// Signed Tutte polynomial by deletion-contraction:
/// T(G) = B_e T(G\e) + A_e T(G/e), bridges give x_e, loops y_e, isolated
/// vertices 1. Equals tutte_activity(g) modulo the ideal, not term by term.
PolyZ tutte_delcon(const SignedGraph& g, bool memoize = false);

/// The deletion-side and contraction-side polynomials of a graph with a
/// distinguished edge.
struct TuttePair {
  PolyZ t_l;
  PolyZ t_c;
};

/// T_L: like T(n\e) except internally active edges on the cycle closed by e
/// are demoted to inactive. T_C: like T(n/e) except externally active edges
/// whose cycle (with e restored) passes through e are demoted. The edge e is
/// internally re-assigned the largest label first.
TuttePair tctl(const SignedGraph& n, int e);

/// Checks, for both signs s, that modulo the ideal
///   A_s (T(n/e) - T_C) == (y_s - B_s) T_L   and
///   B_s (T(n\e) - T_L) == (x_s - A_s) T_C.
bool verify_tctl_system(const SignedGraph& n, int e);

/// Ordinary Tutte polynomial over {x, y} (signs ignored): active edges
/// contribute x or y, inactive edges 1.
PolyZ unsigned_tutte(const SignedGraph& g);

/// Unsigned T_L, T_C with the same exception rules, over {x, y}. They solve
///   T(n/e) - T_C == (y - 1) T_L,   T(n\e) - T_L == (x - 1) T_C.
std::pair<PolyZ, PolyZ> unsigned_tctl(const SignedGraph& n, int e);

}  // namespace sgt
