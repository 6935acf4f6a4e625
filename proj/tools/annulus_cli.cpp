#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <annulus/annulus.hpp>

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin),
                       std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

int default_winding_bound() {
  const char* env = std::getenv("ANNULUS_WINDING_BOUND");
  if (!env || !*env) return 3;
  try {
    return std::stoi(env);
  } catch (const std::exception&) {
    throw std::invalid_argument("ANNULUS_WINDING_BOUND is not an integer: " +
                                std::string(env));
  }
}

void print_blocks(const std::vector<annulus::Triangulation>& ts) {
  std::cout << annulus::write_sequence(ts);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact combinatorics of asymptotic triangulations of the marked annulus"};
  app.require_subcommand(1);

  // enumerate
  int en_p = 1, en_q = 0, en_bound = -1;
  std::string en_mode;
  auto* enumerate = app.add_subcommand("enumerate", "list triangulations, one block per line group");
  enumerate->add_option("p", en_p, "marked points on the lower boundary")->required();
  enumerate->add_option("q", en_q, "marked points on the upper boundary")->required();
  enumerate->add_option("mode", en_mode, "tube | boundary | oracle")
      ->required()
      ->check(CLI::IsMember({"tube", "boundary", "oracle"}));
  enumerate->add_option("--winding-bound", en_bound,
                        "oracle mode: max |winding| (default ANNULUS_WINDING_BOUND or 3)");

  // graph
  int gr_p = 1, gr_q = 0, gr_radius = -1;
  std::string gr_mode, gr_seed, gr_format = "dot";
  auto* graph = app.add_subcommand("graph", "build a flip graph and print it");
  graph->add_option("p", gr_p)->required();
  graph->add_option("q", gr_q)->required();
  graph->add_option("mode", gr_mode, "tube | boundary | bfs")
      ->required()
      ->check(CLI::IsMember({"tube", "boundary", "bfs"}));
  graph->add_option("--radius", gr_radius, "bfs mode: ball radius");
  graph->add_option("--seed", gr_seed, "bfs mode: triangulation file of the seed");
  graph->add_option("--format", gr_format, "dot | adjacency-json")
      ->check(CLI::IsMember({"dot", "adjacency-json"}));

  // mutate
  std::string mu_file;
  std::vector<std::string> mu_arc;
  auto* mut = app.add_subcommand("mutate", "flip one arc of a triangulation");
  mut->add_option("file", mu_file, "triangulation file ('-' for stdin)")->required();
  mut->add_option("arc", mu_arc, "arc literal, e.g.  P L 0 2  or  \"Pr L 1\"")->required();

  // twist
  std::string tw_file;
  int tw_k = 0;
  auto* twist = app.add_subcommand("twist", "apply a power of the core Dehn twist");
  twist->add_option("file", tw_file)->required();
  twist->add_option("k", tw_k, "twist exponent")->required();

  // limit
  std::string li_file, li_sign;
  auto* limit = app.add_subcommand("limit", "limit under the twist iteration");
  limit->add_option("file", li_file)->required();
  limit->add_option("sign", li_sign, "+ or -")->required()->check(CLI::IsMember({"+", "-"}));

  // converge
  std::string co_file;
  auto* converge = app.add_subcommand("converge", "classify a sequence window");
  converge->add_option("file", co_file, "sequence file, blocks separated by ---")->required();

  // subseq
  std::string su_file;
  auto* subseq = app.add_subcommand("subseq", "indices of a converging subsequence");
  subseq->add_option("file", su_file)->required();

  // quiver
  std::string qu_file;
  auto* quiver = app.add_subcommand("quiver", "exchange matrix of an ordinary triangulation");
  quiver->add_option("file", qu_file)->required();

  // canon
  std::string ca_file;
  auto* canon = app.add_subcommand("canon", "canonical twist-orbit representative");
  canon->add_option("file", ca_file)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) {
      annulus::Surface s{en_p, en_q};
      if (en_mode == "tube") {
        if (en_q != 0) throw std::invalid_argument("tube mode requires q = 0");
        print_blocks(annulus::build_tube_graph(en_p).vertices);
      } else if (en_mode == "boundary") {
        print_blocks(annulus::build_boundary_graph(s).vertices);
      } else {
        int bound = en_bound >= 0 ? en_bound : default_winding_bound();
        print_blocks(annulus::enumerate_bruteforce(s, bound));
      }
    } else if (*graph) {
      annulus::ExchangeGraph g;
      if (gr_mode == "tube") {
        if (gr_q != 0) throw std::invalid_argument("tube mode requires q = 0");
        g = annulus::build_tube_graph(gr_p);
      } else if (gr_mode == "boundary") {
        g = annulus::build_boundary_graph({gr_p, gr_q});
      } else {
        if (gr_radius < 0) throw std::invalid_argument("bfs mode requires --radius");
        if (gr_seed.empty()) throw std::invalid_argument("bfs mode requires --seed");
        annulus::Triangulation seed = annulus::parse_triangulation(slurp(gr_seed));
        if (seed.surface() != annulus::Surface{gr_p, gr_q})
          throw std::invalid_argument("seed surface does not match p, q");
        g = annulus::bfs_ordinary(seed, gr_radius);
      }
      std::cout << (gr_format == "dot" ? annulus::export_dot(g)
                                       : annulus::export_adjacency_json(g));
    } else if (*mut) {
      annulus::Triangulation t = annulus::parse_triangulation(slurp(mu_file));
      std::string literal;
      for (const std::string& tok : mu_arc) {
        if (!literal.empty()) literal += " ";
        literal += tok;
      }
      std::cout << annulus::to_text(annulus::mutate(t, annulus::parse_arc(literal)));
    } else if (*twist) {
      annulus::Triangulation t = annulus::parse_triangulation(slurp(tw_file));
      std::cout << annulus::to_text(annulus::dehn_twist(t, tw_k));
    } else if (*limit) {
      annulus::Triangulation t = annulus::parse_triangulation(slurp(li_file));
      annulus::LimitSign sign =
          li_sign == "+" ? annulus::LimitSign::Plus : annulus::LimitSign::Minus;
      std::cout << annulus::to_text(annulus::limit_triangulation(t, sign));
    } else if (*converge) {
      annulus::SequenceWindow w(annulus::parse_sequence(slurp(co_file)));
      std::cout << annulus::to_text(annulus::detect_convergence(w));
    } else if (*subseq) {
      annulus::SequenceWindow w(annulus::parse_sequence(slurp(su_file)));
      std::vector<int> idx = annulus::extract_converging_subsequence(w);
      for (std::size_t i = 0; i < idx.size(); ++i) std::cout << (i ? " " : "") << idx[i];
      std::cout << "\n";
    } else if (*quiver) {
      annulus::Triangulation t = annulus::parse_triangulation(slurp(qu_file));
      std::cout << annulus::to_text(annulus::quiver_of(t));
    } else if (*canon) {
      annulus::Triangulation t = annulus::parse_triangulation(slurp(ca_file));
      annulus::OrbitForm f = annulus::canonical_orbit_form(t);
      std::cerr << "shift " << f.shift << "\n";
      std::cout << annulus::to_text(f.form);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
