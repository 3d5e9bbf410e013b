// Compares the OpenMP kernels against their serial reference implementations
// and times the substitution pipeline end to end.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "sgt/kfamily.hpp"
#include "sgt/knot.hpp"
#include "sgt/parallel.hpp"
#include "sgt/poly.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tutte.hpp"
#include "sgt/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double time_s(const std::function<void()>& fn) {
  auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void row(const std::string& kernel, const std::string& size, double serial, double parallel, bool equal) {
  std::cout << kernel << "\t" << size << "\t" << serial << "\t" << parallel << "\t"
            << (serial > 0 && parallel > 0 ? serial / parallel : 0.0) << "\t"
            << (equal ? "yes" : "NO") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int threads = 0;
  if (argc > 1) threads = std::stoi(argv[1]);
  sgt::set_num_threads(threads);

  std::cout << "kernel\tsize\tserial_s\tparallel_s\tspeedup\tequal\n";

  sgt::Rng rng(7);

  {
    // the pipeline's multiplications are collision heavy: powers of small sums
    sgt::PolyZ base = sgt::PolyZ::parse(sgt::VarSet::lambda8(), "1 + x+ + y+ + A+ + B+ + x-");
    sgt::PolyZ a = base.pow(8);
    sgt::PolyZ b = a;
    sgt::PolyZ r1(sgt::VarSet::lambda8()), r2(sgt::VarSet::lambda8());
    double s = time_s([&] { r1 = sgt::mul_serial(a, b); });
    double p = time_s([&] { r2 = sgt::mul_parallel(a, b); });
    row("poly-mul", std::to_string(a.num_terms()) + "x" + std::to_string(b.num_terms()), s, p, r1 == r2);
  }

  {
    // dense 7-vertex multigraph: tens of thousands of spanning trees
    std::vector<sgt::Edge> edges;
    int lbl = 1;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v) {
        edges.push_back(sgt::Edge{u, v, (u + v) % 2 ? sgt::Sign::plus : sgt::Sign::minus, lbl++});
      }
    sgt::SignedGraph g(7, std::move(edges));
    sgt::PolyZ r1(sgt::VarSet::lambda8()), r2(sgt::VarSet::lambda8());
    double s = time_s([&] { r1 = sgt::tutte_activity_serial(g); });
    double p = time_s([&] { r2 = sgt::tutte_activity_parallel(g); });
    row("tutte-forests", "K7", s, p, r1 == r2);
  }

  {
    sgt::PDCode pd = sgt::random_pd(rng, 18);
    sgt::LaurentZ r1("A"), r2("A");
    double s = time_s([&] { r1 = sgt::bracket_statesum_serial(pd); });
    double p = time_s([&] { r2 = sgt::bracket_statesum_parallel(pd); });
    row("state-sum", std::to_string(pd.num_crossings()) + " crossings", s, p, r1 == r2);
  }

  {
    sgt::LaurentZ j("t");
    double t = time_s([&] { j = sgt::kfamily_jones(9); });
    std::cout << "kfamily-k9\tend-to-end\t-\t" << t << "\t-\t-\n";
  }

  return 0;
}
