// Command-line front end: generators, property checks, decomposition
// pipelines, and the codes oracle, all over the plain-text formats from
// threshold_lab/io.hpp. Exit codes: 0 when every requested property holds,
// 1 when a checked property is false, 2 for usage, parse, or hypothesis
// errors.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "threshold_lab/codes.hpp"
#include "threshold_lab/constructions.hpp"
#include "threshold_lab/decompose.hpp"
#include "threshold_lab/graph.hpp"
#include "threshold_lab/io.hpp"
#include "threshold_lab/partition.hpp"
#include "threshold_lab/rational.hpp"
#include "threshold_lab/saturation.hpp"
#include "threshold_lab/search.hpp"
#include "threshold_lab/vc.hpp"

namespace {

using namespace tlab;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ParseError("bad integer list entry '" + item + "'");
    }
    if (used != item.size()) throw ParseError("bad integer list entry '" + item + "'");
    values.push_back(value);
  }
  if (values.empty()) throw ParseError("empty integer list");
  return values;
}

Rational parse_rational(const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad rational '") + text + "': " + e.what());
  }
}

std::string join(const std::vector<int>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values[i]);
  }
  return out;
}

// "u v" lines, comments and blank lines as in the edge-list format.
std::vector<Edge> read_pair_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::vector<Edge> pairs;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream row(line);
    int u = 0;
    if (!(row >> u)) continue;
    int v = 0;
    std::string extra;
    if (!(row >> v) || (row >> extra)) {
      throw ParseError(path + ": line " + std::to_string(lineno) + ": expected two integers");
    }
    pairs.push_back({u, v});
  }
  return pairs;
}

VertexMap read_map_file(const std::string& path, int n) {
  VertexMap phi(n, -1);
  for (const Edge& entry : read_pair_file(path)) {
    if (entry.first < 0 || entry.first >= n) {
      throw ParseError(path + ": vertex " + std::to_string(entry.first) + " out of range");
    }
    if (phi[entry.first] != -1) {
      throw ParseError(path + ": vertex " + std::to_string(entry.first) + " mapped twice");
    }
    phi[entry.first] = entry.second;
  }
  for (int v = 0; v < n; ++v) {
    if (phi[v] == -1) throw ParseError(path + ": vertex " + std::to_string(v) + " has no image");
  }
  return phi;
}

Partition read_coloring_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  std::vector<int> colors = read_coloring(in, n);
  return Partition::from_class_of(n, std::move(colors));
}

CodeAssignment read_assignment_file(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return read_assignment(in, n);
}

void print_graph_stats(const Graph& g) {
  std::cout << "n " << g.vertex_count() << "\n";
  std::cout << "m " << g.edge_count() << "\n";
  if (g.vertex_count() > 0) {
    const int delta = min_degree(g);
    std::cout << "delta " << delta << "\n";
    std::cout << "ratio " << Rational(delta, g.vertex_count()).str() << "\n";
  }
}

int emit_construction(const Construction& c, const std::string& output) {
  print_graph_stats(c.graph);
  if (!output.empty()) {
    write_edge_list_file(output, c.graph);
    write_metadata_file(output + ".meta", c.meta);
  }
  return 0;
}

int run_decompose_outcome(const DecomposeOutcome& outcome, const std::string& output) {
  if (const auto* failure = std::get_if<FailureReport>(&outcome)) {
    const std::string text = failure_to_json(*failure);
    std::cout << text;
    if (!output.empty()) {
      std::ofstream out(output);
      if (!out) throw ParseError(output + ": cannot open");
      out << text;
    }
    const bool hypothesis = failure->reason == FailureReason::min_degree ||
                            failure->reason == FailureReason::not_maximal;
    return hypothesis ? 2 : 1;
  }
  const auto& cert = std::get<BlowupCertificate>(outcome);
  std::cout << "quotient " << cert.quotient.vertex_count() << "\n";
  std::cout << "reduced " << cert.reduced_quotient.vertex_count() << "\n";
  if (!output.empty()) write_certificate_file(output, cert);
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for dense graphs without short odd cycles"};
  app.require_subcommand(1);
  app.fallthrough();

  int seed = 0;
  int threads = 1;
  app.add_option("--seed", seed, "seed for randomized harness commands")->capture_default_str();
  app.add_option("--threads", threads, "worker cap")
      ->envname("THRESHOLD_LAB_THREADS")
      ->check(CLI::PositiveNumber);

  std::function<int()> run;

  // gen: constructions and blowups, with optional edge-list + sidecar output.
  CLI::App* gen = app.add_subcommand("gen", "generate a construction");
  gen->require_subcommand(1);
  std::string gen_output;
  int gen_k = 0, gen_m = 0, gen_r = 0, gen_ell = 0, gen_s = 0, gen_t = 0;

  CLI::App* gen_andrasfai = gen->add_subcommand("andrasfai", "circulant family");
  gen_andrasfai->add_option("--k", gen_k, "odd girth parameter")->required();
  gen_andrasfai->add_option("--r", gen_r, "degree")->required();
  gen_andrasfai->add_option("-o,--output", gen_output, "edge-list path");
  gen_andrasfai->callback([&] {
    run = [&] { return emit_construction(andrasfai(gen_k, gen_r), gen_output); };
  });

  CLI::App* gen_even = gen->add_subcommand("lower-even", "2k-partite construction");
  gen_even->add_option("--k", gen_k, "half the part count")->required();
  gen_even->add_option("--m", gen_m, "coordinate range")->required();
  gen_even->add_option("-o,--output", gen_output, "edge-list path");
  gen_even->callback([&] {
    run = [&] { return emit_construction(lower_even(gen_k, gen_m), gen_output); };
  });

  CLI::App* gen_odd = gen->add_subcommand("lower-odd", "(2k+1)-partite construction");
  gen_odd->add_option("--k", gen_k, "block count parameter")->required();
  gen_odd->add_option("--m", gen_m, "coordinate range")->required();
  gen_odd->add_option("-o,--output", gen_output, "edge-list path");
  gen_odd->callback([&] {
    run = [&] { return emit_construction(lower_odd(gen_k, gen_m), gen_output); };
  });

  CLI::App* gen_general = gen->add_subcommand("general", "overlay composite");
  gen_general->add_option("--s", gen_s, "forbidden clique size")->required();
  gen_general->add_option("--t", gen_t, "target clique size")->required();
  gen_general->add_option("--m", gen_m, "coordinate range")->required();
  gen_general->add_option("-o,--output", gen_output, "edge-list path");
  gen_general->callback([&] {
    run = [&] { return emit_construction(general_lower(gen_s, gen_t, gen_m), gen_output); };
  });

  CLI::App* gen_kr = gen->add_subcommand("kr-composite", "clique-free composite");
  gen_kr->add_option("--r", gen_r, "forbidden clique size")->required();
  gen_kr->add_option("--ell", gen_ell, "core degree")->required();
  gen_kr->add_option("-o,--output", gen_output, "edge-list path");
  gen_kr->callback([&] {
    run = [&] { return emit_construction(kr_free_composite(gen_r, gen_ell), gen_output); };
  });

  CLI::App* gen_blowup = gen->add_subcommand("blowup", "replace vertices by classes");
  std::string blowup_input, blowup_sizes;
  int blowup_uniform = 0;
  gen_blowup->add_option("--input", blowup_input, "edge-list to blow up")->required();
  CLI::Option* uniform_opt = gen_blowup->add_option("--uniform", blowup_uniform, "class size");
  CLI::Option* sizes_opt = gen_blowup->add_option("--sizes", blowup_sizes, "per-vertex sizes");
  uniform_opt->excludes(sizes_opt);
  gen_blowup->add_option("-o,--output", gen_output, "edge-list path");
  gen_blowup->callback([&] {
    run = [&] {
      const Graph h = read_edge_list_file(blowup_input);
      std::vector<int> sizes;
      if (uniform_opt->count()) {
        sizes.assign(h.vertex_count(), blowup_uniform);
      } else if (sizes_opt->count()) {
        sizes = parse_int_list(blowup_sizes);
      } else {
        throw ParseError("blowup needs --uniform or --sizes");
      }
      const Graph g = blowup(h, sizes).graph;
      print_graph_stats(g);
      if (!gen_output.empty()) write_edge_list_file(gen_output, g);
      return 0;
    };
  });

  // check: single-property verdicts with stable witness lines.
  CLI::App* check = app.add_subcommand("check", "check one property");
  check->require_subcommand(1);
  std::string check_graph;
  std::string check_cycles;
  int check_cycle = 0;
  int check_at_least = -1;

  CLI::App* check_free = check->add_subcommand("free", "no cycle of the given lengths");
  check_free->add_option("--cycles", check_cycles, "comma-separated lengths")->required();
  check_free->add_option("graph", check_graph, "edge-list path")->required();
  check_free->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      if (auto cycle = is_family_free(g, parse_int_list(check_cycles))) {
        std::cout << "cycle " << join(cycle->vertices) << "\n";
        return 1;
      }
      std::cout << "free\n";
      return 0;
    };
  });

  CLI::App* check_induced = check->add_subcommand("induced-free", "no chordless cycle");
  check_induced->add_option("--cycles", check_cycles, "comma-separated lengths")->required();
  check_induced->add_option("graph", check_graph, "edge-list path")->required();
  check_induced->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      std::vector<int> lengths = parse_int_list(check_cycles);
      std::sort(lengths.begin(), lengths.end());
      for (int len : lengths) {
        if (auto cycle = find_induced_cycle(g, len)) {
          std::cout << "cycle " << join(cycle->vertices) << "\n";
          return 1;
        }
      }
      std::cout << "free\n";
      return 0;
    };
  });

  CLI::App* check_maximal = check->add_subcommand("maximal", "no addable non-edge");
  check_maximal->add_option("--cycle", check_cycle, "forbidden cycle length")->required();
  check_maximal->add_option("graph", check_graph, "edge-list path")->required();
  check_maximal->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      const MaximalityReport report = is_maximal_free(g, check_cycle);
      if (report.maximal) {
        std::cout << "maximal\n";
        return 0;
      }
      std::cout << "non-edge " << report.witness->first << " " << report.witness->second << "\n";
      return 1;
    };
  });

  CLI::App* check_vc = check->add_subcommand("vc", "neighborhood VC dimension");
  check_vc->add_option("--at-least", check_at_least, "required dimension");
  check_vc->add_option("graph", check_graph, "edge-list path")->required();
  check_vc->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      const VcResult result = vc_dimension(g);
      std::cout << "d " << result.dimension << "\n";
      std::cout << "witness";
      for (int v : result.witness) std::cout << " " << v;
      std::cout << "\n";
      if (check_at_least >= 0 && result.dimension < check_at_least) return 1;
      return 0;
    };
  });

  CLI::App* check_delta = check->add_subcommand("min-degree", "degree lower bound");
  check_delta->add_option("--at-least", check_at_least, "required minimum degree")->required();
  check_delta->add_option("graph", check_graph, "edge-list path")->required();
  check_delta->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      const int delta = min_degree(g);
      std::cout << "delta " << delta << "\n";
      if (delta >= check_at_least) return 0;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == delta) {
          std::cout << "witness " << v << "\n";
          break;
        }
      }
      return 1;
    };
  });

  CLI::App* check_twin = check->add_subcommand("twin-free", "no equal neighborhoods");
  check_twin->add_option("graph", check_graph, "edge-list path")->required();
  check_twin->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = u + 1; v < g.vertex_count(); ++v) {
          if (neighborhood_symdiff(g, u, v) == 0) {
            std::cout << "twin-pair " << u << " " << v << "\n";
            return 1;
          }
        }
      }
      std::cout << "twin-free\n";
      return 0;
    };
  });

  CLI::App* check_hom = check->add_subcommand("hom", "verify a vertex map");
  std::string hom_map, hom_target;
  check_hom->add_option("--map", hom_map, "one 'v image' line per vertex")->required();
  check_hom->add_option("--target", hom_target, "target edge-list path")->required();
  check_hom->add_option("graph", check_graph, "source edge-list path")->required();
  check_hom->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(check_graph);
      const Graph h = read_edge_list_file(hom_target);
      const VertexMap phi = read_map_file(hom_map, g.vertex_count());
      if (auto edge = verify_homomorphism(g, h, phi)) {
        std::cout << "violating-edge " << edge->first << " " << edge->second << "\n";
        return 1;
      }
      std::cout << "homomorphism\n";
      return 0;
    };
  });

  // pipelines
  std::string pipe_graph, pipe_output, pipe_epsilon, pipe_gamma, pipe_maximality = "auto";
  int pipe_k = 0;
  const std::map<std::string, MaximalityCheck> maximality_modes{
      {"auto", MaximalityCheck::automatic},
      {"on", MaximalityCheck::on},
      {"off", MaximalityCheck::off}};

  CLI::App* decompose = app.add_subcommand("decompose", "blowup decomposition certificate");
  decompose->add_option("--k", pipe_k, "odd girth parameter")->required();
  decompose->add_option("--epsilon", pipe_epsilon, "degree slack p/q")->required();
  decompose->add_option("--gamma", pipe_gamma, "packing schedule p/q");
  decompose->add_option("--maximality", pipe_maximality, "auto, on, or off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  decompose->add_option("-o,--output", pipe_output, "certificate path");
  decompose->add_option("graph", pipe_graph, "edge-list path")->required();
  decompose->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      std::optional<Rational> gamma;
      if (!pipe_gamma.empty()) gamma = parse_rational(pipe_gamma);
      const DecomposeOutcome outcome =
          decompose_blowup(g, pipe_k, parse_rational(pipe_epsilon), gamma,
                           maximality_modes.at(pipe_maximality));
      return run_decompose_outcome(outcome, pipe_output);
    };
  });

  CLI::App* c5_decompose = app.add_subcommand("c5-decompose", "pentagon warmup decomposition");
  c5_decompose->add_option("--epsilon", pipe_epsilon, "degree slack p/q")->required();
  c5_decompose->add_option("--maximality", pipe_maximality, "auto, on, or off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  c5_decompose->add_option("-o,--output", pipe_output, "certificate path");
  c5_decompose->add_option("graph", pipe_graph, "edge-list path")->required();
  c5_decompose->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const DecomposeOutcome outcome = c5_warmup_decompose(g, parse_rational(pipe_epsilon),
                                                           maximality_modes.at(pipe_maximality));
      return run_decompose_outcome(outcome, pipe_output);
    };
  });

  CLI::App* hitting = app.add_subcommand("hitting-set", "remove singular classes");
  hitting->add_option("--k", pipe_k, "odd girth parameter")->required();
  hitting->add_option("--epsilon", pipe_epsilon, "degree slack p/q")->required();
  hitting->add_option("graph", pipe_graph, "edge-list path")->required();
  hitting->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const HittingSetResult result =
          hitting_set_small_odd(g, pipe_k, parse_rational(pipe_epsilon));
      std::cout << "removed " << result.removed.size() << "\n";
      if (!result.removed.empty()) std::cout << "vertices " << join(result.removed) << "\n";
      std::cout << "first-level " << result.first_level_classes << "\n";
      std::cout << "free " << (result.verified_free ? "yes" : "no") << "\n";
      return result.verified_free ? 0 : 1;
    };
  });

  CLI::App* clique_image = app.add_subcommand("clique-image", "color-class quotient");
  std::string image_coloring;
  int image_s = 0, image_t = 0;
  clique_image->add_option("--s", image_s, "forbidden clique in the input")->required();
  clique_image->add_option("--t", image_t, "forbidden clique in the image")->required();
  clique_image->add_option("--coloring", image_coloring, "one 'v color' line per vertex")
      ->required();
  clique_image->add_option("--epsilon", pipe_epsilon, "degree slack p/q")->required();
  clique_image->add_option("graph", pipe_graph, "edge-list path")->required();
  clique_image->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const Partition coloring = read_coloring_file(image_coloring, g.vertex_count());
      const CliqueImageReport report =
          clique_image_pipeline(g, image_s, image_t, coloring, parse_rational(pipe_epsilon));
      std::cout << "quotient " << report.quotient.vertex_count() << "\n";
      std::cout << "forbidden " << report.forbidden_clique << "\n";
      if (report.clique) {
        std::cout << "clique " << join(*report.clique) << "\n";
        return 1;
      }
      std::cout << "clique-free\n";
      return 0;
    };
  });

  CLI::App* codes_check = app.add_subcommand("codes-check", "verify a vector assignment");
  std::string codes_assignment;
  int codes_s = 0, codes_r = 0;
  codes_check->add_option("--s", codes_s, "clique parameter")->required();
  codes_check->add_option("--assignment", codes_assignment, "one 'v bits' line per vertex")
      ->required();
  codes_check->add_option("graph", pipe_graph, "edge-list path")->required();
  codes_check->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const CodeAssignment a = read_assignment_file(codes_assignment, g.vertex_count());
      if (auto violation = check_code_condition(g, codes_s, a.t, a)) {
        std::cout << "violation\n";
        std::cout << "clique " << join(violation->clique) << "\n";
        std::cout << "coords " << violation->coord_a << " " << violation->coord_b << "\n";
        return 1;
      }
      std::cout << "ok\n";
      return 0;
    };
  });

  CLI::App* codes_search = app.add_subcommand("codes-search", "maximum total weight");
  long long codes_budget = 50000000;
  codes_search->add_option("--s", codes_s, "clique parameter")->required();
  codes_search->add_option("--r", codes_r, "cycle parameter")->required();
  codes_search->add_option("--budget", codes_budget, "search node budget")
      ->capture_default_str();
  codes_search->add_option("-o,--output", pipe_output, "assignment path for the optimum");
  codes_search->add_option("graph", pipe_graph, "edge-list path")->required();
  codes_search->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const int t = codes_r + codes_s - 3;
      const MaxWeightResult result = brute_force_max_weight(g, codes_s, t, codes_budget);
      std::cout << "max-weight " << result.best << "\n";
      std::cout << "bound " << weight_bound(g.vertex_count(), codes_s, codes_r).str() << "\n";
      if (!pipe_output.empty()) {
        std::ofstream out(pipe_output);
        if (!out) throw ParseError(pipe_output + ": cannot open");
        write_assignment(out, result.assignment);
      }
      return 0;
    };
  });

  CLI::App* saturate_cmd = app.add_subcommand("saturate", "greedy edge completion");
  std::string saturate_order;
  saturate_cmd->add_option("--cycle", check_cycle, "forbidden cycle length")->required();
  saturate_cmd->add_option("--order", saturate_order, "non-edge priority list");
  saturate_cmd->add_option("-o,--output", pipe_output, "edge-list path for the result");
  saturate_cmd->add_option("graph", pipe_graph, "edge-list path")->required();
  saturate_cmd->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      std::optional<std::vector<Edge>> order;
      if (!saturate_order.empty()) order = read_pair_file(saturate_order);
      const SaturationResult result = saturate(g, check_cycle, order);
      for (const Edge& e : result.added) {
        std::cout << "add " << e.first << " " << e.second << "\n";
      }
      std::cout << "added " << result.added.size() << "\n";
      std::cout << "maximal " << (result.maximal ? "yes" : "no") << "\n";
      if (!pipe_output.empty()) write_edge_list_file(pipe_output, result.graph);
      return 0;
    };
  });

  CLI::App* verify_cert = app.add_subcommand("verify-cert", "re-check a certificate");
  std::string cert_path;
  verify_cert->add_option("--cert", cert_path, "certificate path")->required();
  verify_cert->add_option("graph", pipe_graph, "edge-list path")->required();
  verify_cert->callback([&] {
    run = [&] {
      const Graph g = read_edge_list_file(pipe_graph);
      const BlowupCertificate cert = read_certificate_file(cert_path);
      const CertificateCheck check_result = verify_certificate(g, cert);
      if (check_result.ok) {
        std::cout << "ok\n";
        return 0;
      }
      std::cout << "failure " << check_result.failure << "\n";
      return 1;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    return run ? run() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
