#include "sgt/knot.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "sgt/parallel.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tutte.hpp"

namespace sgt {

PDCode::PDCode(std::vector<Crossing> crossings) : xs_(std::move(crossings)) { validate(); }

void PDCode::validate() const {
  const int n = num_crossings();
  if (n == 0) return;  // the 0-crossing unknot
  const int labels = 2 * n;
  std::vector<int> count(static_cast<std::size_t>(labels) + 1, 0);
  for (const Crossing& x : xs_) {
    for (int slot = 0; slot < 4; ++slot) {
      int lbl = x.at(slot);
      if (lbl < 1 || lbl > labels)
        throw validation_error("PD label " + std::to_string(lbl) + " out of range 1..2n");
      ++count[static_cast<std::size_t>(lbl)];
    }
  }
  for (int lbl = 1; lbl <= labels; ++lbl)
    if (count[static_cast<std::size_t>(lbl)] != 2)
      throw validation_error("PD label " + std::to_string(lbl) + " must appear exactly twice");
  // orientation: under-strand runs a -> c, labels consecutive along the knot
  std::vector<int> incoming(static_cast<std::size_t>(labels) + 1, 0);
  std::vector<int> outgoing(static_cast<std::size_t>(labels) + 1, 0);
  for (int i = 0; i < n; ++i) {
    const Crossing& x = xs_[static_cast<std::size_t>(i)];
    if (x.c != succ(x.a))
      throw validation_error("crossing " + std::to_string(i + 1) +
                             ": under-strand must run a -> c with c = a+1 (mod 2n)");
    if (x.d != succ(x.b) && x.b != succ(x.d))
      throw validation_error("crossing " + std::to_string(i + 1) +
                             ": over-strand labels are not consecutive");
    bool btod = over_runs_b_to_d(i);
    ++incoming[static_cast<std::size_t>(x.a)];
    ++outgoing[static_cast<std::size_t>(x.c)];
    ++incoming[static_cast<std::size_t>(btod ? x.b : x.d)];
    ++outgoing[static_cast<std::size_t>(btod ? x.d : x.b)];
  }
  for (int lbl = 1; lbl <= labels; ++lbl)
    if (incoming[static_cast<std::size_t>(lbl)] != 1 || outgoing[static_cast<std::size_t>(lbl)] != 1)
      throw validation_error("PD code is not a single oriented component (label " +
                             std::to_string(lbl) + ")");
}

bool PDCode::over_runs_b_to_d(int i) const {
  const Crossing& x = xs_[static_cast<std::size_t>(i)];
  bool btod = x.d == succ(x.b);
  bool dtob = x.b == succ(x.d);
  // both hold only on one-crossing codes; the over-in slot cannot carry the
  // same arc end as the under-in slot a
  if (btod && dtob) return x.b != x.a;
  return btod;
}

int PDCode::crossing_sign(int i) const { return over_runs_b_to_d(i) ? -1 : +1; }

PDCode PDCode::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<Crossing> xs;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag != "X") throw validation_error("unknown PD line tag '" + tag + "' at " + std::to_string(lineno));
    Crossing x;
    if (!(ls >> x.a >> x.b >> x.c >> x.d))
      throw validation_error("malformed crossing at line " + std::to_string(lineno));
    int extra;
    if (ls >> extra) throw validation_error("trailing tokens at line " + std::to_string(lineno));
    xs.push_back(x);
  }
  return PDCode(std::move(xs));
}

std::string PDCode::to_text() const {
  std::ostringstream os;
  for (const Crossing& x : xs_) os << "X " << x.a << " " << x.b << " " << x.c << " " << x.d << "\n";
  return os.str();
}

FaceStructure faces(const PDCode& pd) {
  const int n = pd.num_crossings();
  FaceStructure fs;
  if (n == 0) {
    fs.num_faces = 2;
    fs.color_of_face = {0, 1};
    return fs;
  }
  const int ndarts = 4 * n;
  // arc involution: pair the two darts sharing a label
  std::vector<int> alpha(static_cast<std::size_t>(ndarts), -1);
  {
    std::vector<int> first(static_cast<std::size_t>(pd.num_labels()) + 1, -1);
    for (int i = 0; i < n; ++i)
      for (int slot = 0; slot < 4; ++slot) {
        int lbl = pd.crossings()[static_cast<std::size_t>(i)].at(slot);
        int dart = 4 * i + slot;
        if (first[static_cast<std::size_t>(lbl)] < 0) {
          first[static_cast<std::size_t>(lbl)] = dart;
        } else {
          alpha[static_cast<std::size_t>(dart)] = first[static_cast<std::size_t>(lbl)];
          alpha[static_cast<std::size_t>(first[static_cast<std::size_t>(lbl)])] = dart;
        }
      }
  }
  // faces = orbits of rotate-after-crossing
  fs.face_of_dart.assign(static_cast<std::size_t>(ndarts), -1);
  int nfaces = 0;
  for (int d0 = 0; d0 < ndarts; ++d0) {
    if (fs.face_of_dart[static_cast<std::size_t>(d0)] >= 0) continue;
    int d = d0;
    do {
      fs.face_of_dart[static_cast<std::size_t>(d)] = nfaces;
      int a = alpha[static_cast<std::size_t>(d)];
      d = (a & ~3) | ((a + 1) & 3);
    } while (d != d0);
    ++nfaces;
  }
  fs.num_faces = nfaces;
  if (nfaces != n + 2)
    throw validation_error("PD code has no planar embedding (face count " + std::to_string(nfaces) +
                           ", expected " + std::to_string(n + 2) + ")");
  // checkerboard coloring across arcs
  fs.color_of_face.assign(static_cast<std::size_t>(nfaces), -1);
  std::deque<int> queue;
  fs.color_of_face[0] = 0;
  queue.push_back(0);
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(nfaces));
  for (int d = 0; d < ndarts; ++d) {
    int f1 = fs.face_of_dart[static_cast<std::size_t>(d)];
    int f2 = fs.face_of_dart[static_cast<std::size_t>(alpha[static_cast<std::size_t>(d)])];
    adj[static_cast<std::size_t>(f1)].push_back(f2);
  }
  while (!queue.empty()) {
    int f = queue.front();
    queue.pop_front();
    for (int g : adj[static_cast<std::size_t>(f)]) {
      if (fs.color_of_face[static_cast<std::size_t>(g)] < 0) {
        fs.color_of_face[static_cast<std::size_t>(g)] = 1 - fs.color_of_face[static_cast<std::size_t>(f)];
        queue.push_back(g);
      } else if (fs.color_of_face[static_cast<std::size_t>(g)] ==
                 fs.color_of_face[static_cast<std::size_t>(f)]) {
        throw validation_error("face adjacency is not checkerboard 2-colorable");
      }
    }
  }
  return fs;
}

int writhe(const PDCode& pd) {
  int w = 0;
  for (int i = 0; i < pd.num_crossings(); ++i) w += pd.crossing_sign(i);
  return w;
}

TaitResult tait_graph(const PDCode& pd, int dark_class) {
  const int n = pd.num_crossings();
  if (n == 0) {
    // one dark disc, no crossings
    return TaitResult{SignedGraph(1, {}), 0, dark_class == 1 ? 1 : 0, 2};
  }
  FaceStructure fs = faces(pd);
  int dark;
  if (dark_class == 0 || dark_class == 1) {
    dark = dark_class;
  } else {
    // default: the class excluding the face carrying the highest label
    int hi_dart = -1;
    for (int i = 0; i < n && hi_dart < 0; ++i)
      for (int slot = 0; slot < 4; ++slot)
        if (pd.crossings()[static_cast<std::size_t>(i)].at(slot) == pd.num_labels()) {
          hi_dart = 4 * i + slot;
          break;
        }
    dark = 1 - fs.color_of_face[static_cast<std::size_t>(fs.face_of_dart[static_cast<std::size_t>(hi_dart)])];
  }
  // dark faces become vertices
  std::vector<int> vertex_of_face(static_cast<std::size_t>(fs.num_faces), -1);
  int nv = 0;
  for (int f = 0; f < fs.num_faces; ++f)
    if (fs.color_of_face[static_cast<std::size_t>(f)] == dark)
      vertex_of_face[static_cast<std::size_t>(f)] = nv++;

  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    std::array<int, 4> corner{};
    for (int p = 0; p < 4; ++p) corner[static_cast<std::size_t>(p)] = fs.corner_face(i, p);
    auto is_dark = [&](int p) {
      return fs.color_of_face[static_cast<std::size_t>(corner[static_cast<std::size_t>(p)])] == dark;
    };
    if (is_dark(0) != is_dark(2) || is_dark(1) != is_dark(3) || is_dark(0) == is_dark(1))
      throw validation_error("corner colors at a crossing do not alternate");
    // dark corners between (b,c) and (d,a) make the crossing positive
    Edge e;
    if (is_dark(1)) {
      e.sign = Sign::plus;
      e.u = vertex_of_face[static_cast<std::size_t>(corner[1])];
      e.v = vertex_of_face[static_cast<std::size_t>(corner[3])];
    } else {
      e.sign = Sign::minus;
      e.u = vertex_of_face[static_cast<std::size_t>(corner[0])];
      e.v = vertex_of_face[static_cast<std::size_t>(corner[2])];
    }
    e.label = i + 1;
    edges.push_back(e);
  }
  return TaitResult{SignedGraph(nv, std::move(edges)), writhe(pd), dark, fs.num_faces};
}

LaurentZ bracket_via_tutte(const SignedGraph& g) {
  if (!g.is_connected()) throw usage_error("bracket needs a connected Tait graph");
  return kauffman_specialize(tutte_activity(g));
}

namespace {

LaurentZ state_term(const PDCode& pd, const std::vector<int>& alpha, std::uint64_t state) {
  const int n = pd.num_crossings();
  const int ndarts = 4 * n;
  // smoothing pairing per crossing: A joins (a,b),(c,d); B joins (a,d),(b,c)
  std::vector<int> partner(static_cast<std::size_t>(ndarts));
  int a_count = 0;
  for (int i = 0; i < n; ++i) {
    bool a_smooth = ((state >> i) & 1u) == 0;
    a_count += a_smooth ? 1 : 0;
    int base = 4 * i;
    if (a_smooth) {
      partner[static_cast<std::size_t>(base + 0)] = base + 1;
      partner[static_cast<std::size_t>(base + 1)] = base + 0;
      partner[static_cast<std::size_t>(base + 2)] = base + 3;
      partner[static_cast<std::size_t>(base + 3)] = base + 2;
    } else {
      partner[static_cast<std::size_t>(base + 0)] = base + 3;
      partner[static_cast<std::size_t>(base + 3)] = base + 0;
      partner[static_cast<std::size_t>(base + 1)] = base + 2;
      partner[static_cast<std::size_t>(base + 2)] = base + 1;
    }
  }
  // loops: cycles alternating smoothing partner / arc partner
  std::vector<bool> seen(static_cast<std::size_t>(ndarts), false);
  int loops = 0;
  for (int d0 = 0; d0 < ndarts; ++d0) {
    if (seen[static_cast<std::size_t>(d0)]) continue;
    int d = d0;
    do {
      seen[static_cast<std::size_t>(d)] = true;
      int p = partner[static_cast<std::size_t>(d)];
      seen[static_cast<std::size_t>(p)] = true;
      d = alpha[static_cast<std::size_t>(p)];
    } while (d != d0);
    ++loops;
  }
  const int b_count = n - a_count;
  LaurentZ delta("A");
  delta += LaurentZ::monomial("A", 2, -1);
  delta += LaurentZ::monomial("A", -2, -1);
  return delta.pow(static_cast<std::uint32_t>(loops - 1)).mul_monomial(a_count - b_count, 1);
}

std::vector<int> arc_involution(const PDCode& pd) {
  const int n = pd.num_crossings();
  std::vector<int> alpha(static_cast<std::size_t>(4 * n), -1);
  std::vector<int> first(static_cast<std::size_t>(pd.num_labels()) + 1, -1);
  for (int i = 0; i < n; ++i)
    for (int slot = 0; slot < 4; ++slot) {
      int lbl = pd.crossings()[static_cast<std::size_t>(i)].at(slot);
      int dart = 4 * i + slot;
      if (first[static_cast<std::size_t>(lbl)] < 0) {
        first[static_cast<std::size_t>(lbl)] = dart;
      } else {
        alpha[static_cast<std::size_t>(dart)] = first[static_cast<std::size_t>(lbl)];
        alpha[static_cast<std::size_t>(first[static_cast<std::size_t>(lbl)])] = dart;
      }
    }
  return alpha;
}

}  // namespace

LaurentZ bracket_statesum_serial(const PDCode& pd, int max_crossings) {
  const int n = pd.num_crossings();
  if (n > max_crossings) throw usage_error("state sum: crossing bound exceeded");
  if (n == 0) return LaurentZ::constant("A", 1);
  std::vector<int> alpha = arc_involution(pd);
  LaurentZ out("A");
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state)
    out += state_term(pd, alpha, state);
  return out;
}

LaurentZ bracket_statesum_parallel(const PDCode& pd, int max_crossings) {
#ifdef _OPENMP
  const int n = pd.num_crossings();
  if (n > max_crossings) throw usage_error("state sum: crossing bound exceeded");
  if (n == 0) return LaurentZ::constant("A", 1);
  std::vector<int> alpha = arc_involution(pd);
  const std::int64_t total = std::int64_t{1} << n;
  int nt = num_threads();
#pragma omp parallel num_threads(nt > 0 ? nt : omp_get_max_threads())
  { nt = omp_get_num_threads(); }
  std::vector<LaurentZ> partial(static_cast<std::size_t>(nt), LaurentZ("A"));
#pragma omp parallel num_threads(nt)
  {
    LaurentZ& mine = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(static)
    for (std::int64_t state = 0; state < total; ++state)
      mine += state_term(pd, alpha, static_cast<std::uint64_t>(state));
  }
  LaurentZ out = std::move(partial[0]);
  for (std::size_t i = 1; i < partial.size(); ++i) out += partial[i];
  return out;
#else
  return bracket_statesum_serial(pd, max_crossings);
#endif
}

LaurentZ bracket_statesum(const PDCode& pd, int max_crossings) {
  if (parallel_enabled() && pd.num_crossings() >= 10)
    return bracket_statesum_parallel(pd, max_crossings);
  return bracket_statesum_serial(pd, max_crossings);
}

LaurentZ jones(const LaurentZ& bracket, int w) {
  // (-A^-3)^w, then A = t^(-1/4): track quarter powers of t and convert
  LaurentZ v = bracket.mul_monomial(-3 * static_cast<std::int64_t>(w), (w % 2 == 0) ? 1 : -1);
  LaurentZ quarters = v.reexpress(-1, "q");
  return quarters.quarter_to_whole("t");
}

LaurentZ jones_of_pd(const PDCode& pd) {
  TaitResult tait = tait_graph(pd);
  return jones(bracket_via_tutte(tait.graph), tait.writhe);
}

}  // namespace sgt
