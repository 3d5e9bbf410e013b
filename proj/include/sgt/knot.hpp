#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sgt/laurent.hpp"
#include "sgt/sgraph.hpp"

namespace sgt {

/// One crossing X(a,b,c,d): edge labels counterclockwise, a the incoming
/// under-strand, the under-strand leaving at c.
struct Crossing {
  int a = 0, b = 0, c = 0, d = 0;
  int at(int slot) const {
    switch (slot & 3) {
      case 0: return a;
      case 1: return b;
      case 2: return c;
      default: return d;
    }
  }
};

/// Planar diagram code of a knot. Labels 1..2n traverse the knot in
/// orientation order; each label appears exactly twice; the under-strand
/// satisfies c = a+1 (mod 2n) at every crossing. Multi-component links and
/// codes without a planar embedding are rejected.
class PDCode {
 public:
  PDCode() = default;
  explicit PDCode(std::vector<Crossing> crossings);

  static PDCode parse(std::string_view text);
  std::string to_text() const;

  int num_crossings() const { return static_cast<int>(xs_.size()); }
  int num_labels() const { return 2 * num_crossings(); }
  const std::vector<Crossing>& crossings() const { return xs_; }

  /// Label following `label` along the knot (wraps 2n -> 1).
  int succ(int label) const { return label == num_labels() ? 1 : label + 1; }
  /// True when the over-strand at crossing i runs b -> d.
  bool over_runs_b_to_d(int i) const;
  /// +1 or -1 by the orientation convention.
  int crossing_sign(int i) const;

 private:
  void validate() const;
  std::vector<Crossing> xs_;
};

/// Faces of the diagram, computed from the rotation system by dart
/// traversal. Dart id = 4*crossing + slot.
struct FaceStructure {
  int num_faces = 0;
  std::vector<int> face_of_dart;
  /// Per corner (crossing, slot p between darts p and p+1): the face filling
  /// that corner.
  int corner_face(int crossing, int p) const {
    return face_of_dart[static_cast<std::size_t>(4 * crossing + ((p + 1) & 3))];
  }
  /// Checkerboard 2-coloring of the faces (0/1).
  std::vector<int> color_of_face;
};

FaceStructure faces(const PDCode& pd);

struct TaitResult {
  SignedGraph graph;   ///< one vertex per dark face, one signed edge per crossing
  int writhe = 0;      ///< orientation writhe, shading independent
  int shading = 0;     ///< which color class was taken dark
  int face_count = 0;
};

/// Checkerboard graph. dark_class selects the face class to become vertices
/// (0 or 1); -1 picks the deterministic default (the class excluding the
/// face that carries the highest edge label).
TaitResult tait_graph(const PDCode& pd, int dark_class = -1);

int writhe(const PDCode& pd);

/// Bracket polynomial through the Tutte pipeline of a Tait graph.
LaurentZ bracket_via_tutte(const SignedGraph& g);

/// Independent bracket oracle: the 2^n Kauffman state expansion. Refuses
/// codes above max_crossings.
LaurentZ bracket_statesum(const PDCode& pd, int max_crossings = 20);
LaurentZ bracket_statesum_serial(const PDCode& pd, int max_crossings = 20);
LaurentZ bracket_statesum_parallel(const PDCode& pd, int max_crossings = 20);

/// V_K(t) = (-A^-3)^w <K> with A = t^(-1/4). Errors when any t-exponent
/// comes out fractional (the input was a link, not a knot).
LaurentZ jones(const LaurentZ& bracket, int writhe);

/// Convenience: bracket (Tutte route) and writhe straight from a PD code.
LaurentZ jones_of_pd(const PDCode& pd);

}  // namespace sgt
