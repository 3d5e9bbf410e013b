#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sgt/errors.hpp"
#include "sgt/kfamily.hpp"
#include "sgt/knot.hpp"
#include "sgt/parallel.hpp"
#include "sgt/quotient.hpp"
#include "sgt/tensor.hpp"
#include "sgt/tutte.hpp"
#include "sgt/verify.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw sgt::validation_error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string strip_comments(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    out << line << "\n";
  }
  return out.str();
}

// Graph text may carry a trailing `w <writhe>` line (the pd2graph output
// format); split it off so the graph parser sees only v/e lines.
std::pair<std::string, std::optional<int>> split_writhe_line(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  std::optional<int> w;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    int value = 0;
    if (ls >> tag && tag == "w" && ls >> value) {
      w = value;
      continue;
    }
    out << line << "\n";
  }
  return {out.str(), w};
}

enum class FileKind { graph, pd, poly };

FileKind sniff(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    if (tag == "v" || tag == "e") return FileKind::graph;
    if (tag == "X") return FileKind::pd;
    return FileKind::poly;
  }
  return FileKind::poly;
}

sgt::Sign parse_sign(const std::string& s) {
  if (s == "+") return sgt::Sign::plus;
  if (s == "-") return sgt::Sign::minus;
  throw sgt::usage_error("sign must be + or -");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int run(int argc, char** argv) {
  CLI::App app{"signed Tutte polynomials, graph tensor products, and Jones polynomials"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "worker threads (0 = runtime default)");

  // tutte
  auto* cmd_tutte = app.add_subcommand("tutte", "signed Tutte polynomial of a graph file");
  std::string tutte_file, tutte_method = "activity", tutte_form = "raw";
  cmd_tutte->add_option("graph", tutte_file)->required();
  cmd_tutte->add_option("--method", tutte_method)->check(CLI::IsMember({"activity", "delcon"}));
  cmd_tutte->add_option("--form", tutte_form)->check(CLI::IsMember({"raw", "canonical"}));

  // tctl
  auto* cmd_tctl = app.add_subcommand("tctl", "exception-rule pair T_L, T_C of a graph with a distinguished edge");
  std::string tctl_file;
  int tctl_edge = 0;
  cmd_tctl->add_option("graph", tctl_file)->required();
  cmd_tctl->add_option("--edge", tctl_edge)->required();

  // tensor
  auto* cmd_tensor = app.add_subcommand("tensor", "substitute a graph product into a Tutte polynomial");
  std::string tensor_m, tensor_n, tensor_sign = "+";
  int tensor_edge = 0, tensor_repeat = 1;
  cmd_tensor->add_option("m", tensor_m, "graph or polynomial file for T(M)")->required();
  cmd_tensor->add_option("n", tensor_n, "graph file for N")->required();
  cmd_tensor->add_option("--sign", tensor_sign)->check(CLI::IsMember({"+", "-"}));
  cmd_tensor->add_option("--edge", tensor_edge)->required();
  cmd_tensor->add_option("--repeat", tensor_repeat)->check(CLI::NonNegativeNumber);

  // bracket
  auto* cmd_bracket = app.add_subcommand("bracket", "Kauffman bracket of a PD code or Tait graph");
  std::string bracket_file, bracket_method = "tutte", bracket_shading = "auto";
  cmd_bracket->add_option("input", bracket_file)->required();
  cmd_bracket->add_option("--method", bracket_method)->check(CLI::IsMember({"tutte", "statesum"}));
  cmd_bracket->add_option("--shading", bracket_shading)->check(CLI::IsMember({"auto", "0", "1"}));

  // jones
  auto* cmd_jones = app.add_subcommand("jones", "Jones polynomial of a PD code (or graph with --writhe)");
  std::string jones_file;
  int jones_writhe = 0;
  cmd_jones->add_option("input", jones_file)->required();
  cmd_jones->add_option("--writhe", jones_writhe);

  // pd2graph
  auto* cmd_pd2graph = app.add_subcommand("pd2graph", "Tait graph and writhe of a PD code");
  std::string pd_file, pd_shading = "auto";
  cmd_pd2graph->add_option("pd", pd_file)->required();
  cmd_pd2graph->add_option("--shading", pd_shading)->check(CLI::IsMember({"auto", "0", "1"}));

  // kfamily
  auto* cmd_kfamily = app.add_subcommand("kfamily", "Jones polynomial of the twisted family member");
  int kfam_k = 3;
  cmd_kfamily->add_option("--k", kfam_k)->required();

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "run property suites");
  std::string verify_suite = "all";
  std::uint64_t verify_seed = 20240901;
  int verify_size = 0;
  cmd_verify->add_option("--suite", verify_suite);
  cmd_verify->add_option("--seed", verify_seed);
  cmd_verify->add_option("--size", verify_size);

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "timing tables: substitution pipeline vs direct enumeration");
  std::string bench_family = "kfamily";
  int bench_kmin = 1, bench_kmax = 9;
  cmd_bench->add_option("--family", bench_family)->check(CLI::IsMember({"thickening", "kfamily"}));
  cmd_bench->add_option("--kmin", bench_kmin);
  cmd_bench->add_option("--kmax", bench_kmax);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  sgt::set_num_threads(threads);

  if (*cmd_tutte) {
    sgt::SignedGraph g = sgt::SignedGraph::parse(split_writhe_line(slurp(tutte_file)).first);
    sgt::PolyZ t = tutte_method == "activity" ? sgt::tutte_activity(g) : sgt::tutte_delcon(g);
    if (tutte_form == "canonical") t = sgt::from_quotient(sgt::to_quotient(t));
    std::cout << t.str() << "\n";
    return 0;
  }

  if (*cmd_tctl) {
    sgt::SignedGraph g = sgt::SignedGraph::parse(slurp(tctl_file));
    sgt::TuttePair pair = sgt::tctl(g, tctl_edge);
    std::cout << "TL = " << pair.t_l.str() << "\n";
    std::cout << "TC = " << pair.t_c.str() << "\n";
    return 0;
  }

  if (*cmd_tensor) {
    std::string mtext = slurp(tensor_m);
    sgt::PolyZ t_m = sniff(mtext) == FileKind::graph
                         ? sgt::tutte_activity(sgt::SignedGraph::parse(split_writhe_line(mtext).first))
                         : sgt::PolyZ::parse(sgt::VarSet::lambda8(), strip_comments(mtext));
    sgt::SignedGraph n = sgt::SignedGraph::parse(slurp(tensor_n));
    sgt::Substitution sub = sgt::tensor_substitution(parse_sign(tensor_sign), n, tensor_edge);
    for (int i = 0; i < tensor_repeat; ++i) t_m = sub.apply(t_m);
    std::cout << t_m.str() << "\n";
    return 0;
  }

  if (*cmd_bracket) {
    std::string text = slurp(bracket_file);
    sgt::LaurentZ br("A");
    if (sniff(text) == FileKind::pd) {
      sgt::PDCode pd = sgt::PDCode::parse(text);
      if (bracket_method == "statesum") {
        br = sgt::bracket_statesum(pd);
      } else {
        int shading = bracket_shading == "auto" ? -1 : std::stoi(bracket_shading);
        br = sgt::bracket_via_tutte(sgt::tait_graph(pd, shading).graph);
      }
    } else {
      br = sgt::bracket_via_tutte(sgt::SignedGraph::parse(split_writhe_line(text).first));
    }
    std::cout << br.str() << "\n";
    return 0;
  }

  if (*cmd_jones) {
    std::string text = slurp(jones_file);
    sgt::LaurentZ v("t");
    if (sniff(text) == FileKind::pd) {
      v = sgt::jones_of_pd(sgt::PDCode::parse(text));
    } else {
      auto [graph_text, embedded_w] = split_writhe_line(text);
      int w;
      if (cmd_jones->count("--writhe") > 0)
        w = jones_writhe;
      else if (embedded_w)
        w = *embedded_w;
      else
        throw sgt::usage_error("a bare graph needs --writhe (a PD code carries its own)");
      sgt::SignedGraph g = sgt::SignedGraph::parse(graph_text);
      v = sgt::jones(sgt::bracket_via_tutte(g), w);
    }
    if (!v.is_zero())
      std::cerr << "# breadth " << v.breadth()
                << " (a non-alternating knot's crossing number exceeds this)\n";
    std::cout << v.str() << "\n";
    return 0;
  }

  if (*cmd_pd2graph) {
    sgt::PDCode pd = sgt::PDCode::parse(slurp(pd_file));
    int shading = pd_shading == "auto" ? -1 : std::stoi(pd_shading);
    sgt::TaitResult tait = sgt::tait_graph(pd, shading);
    std::cout << tait.graph.to_text();
    std::cout << "w " << tait.writhe << "\n";
    return 0;
  }

  if (*cmd_kfamily) {
    sgt::LaurentZ v = sgt::kfamily_jones(kfam_k);
    std::cerr << "# breadth " << v.breadth()
              << " (a non-alternating knot's crossing number exceeds this)\n";
    std::cout << v.str() << "\n";
    return 0;
  }

  if (*cmd_verify) {
    std::vector<sgt::SuiteResult> results;
    if (verify_suite == "all") {
      results = sgt::run_all_suites(verify_seed, verify_size);
    } else {
      results.push_back(sgt::run_suite(verify_suite, verify_seed, verify_size));
    }
    bool ok = true;
    for (const auto& r : results) {
      std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.suite << " (" << r.cases << " checks)\n";
      for (const auto& msg : r.messages) std::cerr << "  " << r.suite << ": " << msg << "\n";
      ok = ok && r.passed();
    }
    return ok ? 0 : 1;
  }

  if (*cmd_bench) {
    std::cout << "family=" << bench_family << "\n";
    std::cout << "k\tsubstitution_s\tdirect_s\tagree\n";
    for (int k = bench_kmin; k <= bench_kmax; ++k) {
      if (bench_family == "kfamily") {
        if (k < 3 || k % 2 == 0) continue;
        auto t0 = std::chrono::steady_clock::now();
        sgt::KFamilyParts parts = sgt::kfamily_tutte(k);
        sgt::LaurentZ pipeline_bracket = sgt::kauffman_specialize(parts.t_g);
        double sub_s = seconds_since(t0);
        std::string direct_s = "skipped", agree = "-";
        if (k == 3) {
          // expanded member: the tripled hexagon plus the closing edge
          t0 = std::chrono::steady_clock::now();
          sgt::SignedGraph gdel = sgt::kfamily_m1();
          for (auto maker : {&sgt::stretch, &sgt::thickening})
            for (sgt::Sign s : {sgt::Sign::plus, sgt::Sign::minus}) {
              auto [n, e] = maker(k, s);
              gdel = sgt::tensor_graph(sgt::TensorSpec{gdel, s, n, e, {}});
            }
          std::vector<sgt::Edge> edges(gdel.edges().begin(), gdel.edges().end());
          edges.push_back(sgt::Edge{0, 1, sgt::Sign::plus, gdel.num_edges() + 1});
          sgt::SignedGraph full(gdel.num_vertices(), std::move(edges));
          sgt::LaurentZ direct_bracket = sgt::kauffman_specialize(sgt::tutte_activity(full));
          direct_s = std::to_string(seconds_since(t0));
          agree = direct_bracket == pipeline_bracket ? "yes" : "NO";
        }
        std::cout << k << "\t" << sub_s << "\t" << direct_s << "\t" << agree << "\n";
      } else {
        // thickening of every positive edge of a K4 with one negative edge
        std::vector<sgt::Edge> edges = {
            sgt::Edge{0, 1, sgt::Sign::plus, 1},  sgt::Edge{0, 2, sgt::Sign::plus, 2},
            sgt::Edge{0, 3, sgt::Sign::minus, 3}, sgt::Edge{1, 2, sgt::Sign::plus, 4},
            sgt::Edge{1, 3, sgt::Sign::plus, 5},  sgt::Edge{2, 3, sgt::Sign::plus, 6},
        };
        sgt::SignedGraph m(4, std::move(edges));
        auto [n, e] = sgt::thickening(k, sgt::Sign::plus);
        auto t0 = std::chrono::steady_clock::now();
        sgt::PolyZ via = sgt::tensor_subst(sgt::tutte_activity(m), sgt::Sign::plus, n, e);
        double sub_s = seconds_since(t0);
        std::string direct_s = "skipped", agree = "-";
        sgt::SignedGraph product = sgt::tensor_graph(sgt::TensorSpec{m, sgt::Sign::plus, n, e, {}});
        if (product.num_edges() <= 30) {
          t0 = std::chrono::steady_clock::now();
          sgt::PolyZ direct = sgt::tutte_activity(product);
          direct_s = std::to_string(seconds_since(t0));
          agree = sgt::eq_mod_I1(via, direct) ? "yes" : "NO";
        }
        std::cout << k << "\t" << sub_s << "\t" << direct_s << "\t" << agree << "\n";
      }
    }
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const sgt::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const sgt::validation_error& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 3;
  } catch (const sgt::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
