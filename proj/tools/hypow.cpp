// Command-line front end: generation, verification, search, pipeline runs,
// certificate I/O, and the acceptance corpus runner.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hypow/absorbing.hpp"
#include "hypow/acceptance.hpp"
#include "hypow/certificates.hpp"
#include "hypow/clique_graph.hpp"
#include "hypow/io.hpp"
#include "hypow/kgraph.hpp"
#include "hypow/tilings.hpp"
#include "hypow/walks.hpp"

namespace {

constexpr int kOk = 0;           // success / verified
constexpr int kNegative = 1;     // definitive negative after exhaustive search
constexpr int kInconclusive = 2; // budget exceeded / infeasible
constexpr int kInputError = 3;

void emit_graph(const hypow::KGraph& G, const std::string& output, bool json) {
  if (output.empty()) {
    if (json)
      std::cout << hypow::khg_to_json(G).dump(2) << '\n';
    else
      hypow::write_khg(std::cout, G);
  } else {
    hypow::write_khg_file(output, G);
  }
}

void print_seq(const std::vector<int>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) std::cout << ' ';
    std::cout << seq[i];
  }
  std::cout << '\n';
}

int status_code(hypow::SearchStatus s) {
  switch (s) {
    case hypow::SearchStatus::Found:
      return kOk;
    case hypow::SearchStatus::NotFound:
      return kNegative;
    default:
      return kInconclusive;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact desk-scale toolkit for powers of tight cycles in "
               "uniform hypergraphs"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  int exit_code = kOk;

  // clique-graph
  {
    auto* cmd = app.add_subcommand("clique-graph", "r-sets spanning complete subgraphs");
    auto input = std::make_shared<std::string>();
    auto output = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto threads = std::make_shared<int>(1);
    cmd->add_option("--input", *input, "input .khg graph")->required();
    cmd->add_option("--r", *r, "clique size")->required();
    cmd->add_option("--output", *output, "output .khg file (default stdout)");
    cmd->add_option("--threads", *threads, "worker threads");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph H = hypow::read_khg_file(*input);
      const hypow::KGraph K = hypow::clique_graph(H, *r, *threads);
      emit_graph(K, *output, json);
      exit_code = kOk;
    });
  }

  // gen cycle-power | gen path-power
  {
    auto* gen = app.add_subcommand("gen", "construct named graphs");
    gen->require_subcommand(1);
    for (const bool cyclic : {true, false}) {
      auto* cmd = gen->add_subcommand(cyclic ? "cycle-power" : "path-power",
                                      cyclic ? "power of a tight cycle"
                                             : "power of a tight path");
      auto n = std::make_shared<int>(0);
      auto k = std::make_shared<int>(0);
      auto j = std::make_shared<int>(1);
      auto output = std::make_shared<std::string>();
      cmd->add_option("--n", *n, "vertices")->required();
      cmd->add_option("--k", *k, "uniformity")->required();
      cmd->add_option("--j", *j, "power");
      cmd->add_option("--output", *output, "output .khg file (default stdout)");
      cmd->callback([=, &exit_code, &json]() {
        const hypow::KGraph G = cyclic ? hypow::cycle_power(*n, *k, *j)
                                       : hypow::path_power(*n, *k, *j);
        emit_graph(G, *output, json);
        exit_code = kOk;
      });
    }
  }

  // verify walk | verify cert
  {
    auto* verify = app.add_subcommand("verify", "check walks and certificates");
    verify->require_subcommand(1);
    {
      auto* cmd = verify->add_subcommand("walk", "is the sequence a tight walk");
      auto graph = std::make_shared<std::string>();
      auto seq_str = std::make_shared<std::string>();
      cmd->add_option("--graph", *graph, "host .khg graph")->required();
      cmd->add_option("--seq", *seq_str, "comma- or space-separated vertices")
          ->required();
      cmd->callback([=, &exit_code, &json]() {
        const hypow::KGraph K = hypow::read_khg_file(*graph);
        const std::vector<int> seq = hypow::parse_vertex_list(*seq_str);
        if (static_cast<int>(seq.size()) < K.k)
          throw std::invalid_argument("sequence shorter than the uniformity");
        const auto bad = hypow::walk_violation(K, seq);
        if (json) {
          nlohmann::json out;
          out["verified"] = !bad.has_value();
          if (bad) out["violation_window"] = *bad;
          std::cout << out.dump(2) << '\n';
        } else if (bad) {
          std::cout << "not a walk: window " << *bad << " is missing\n";
        } else {
          std::cout << "walk verified (" << seq.size() << " vertices)\n";
        }
        exit_code = bad ? kNegative : kOk;
      });
    }
    {
      auto* cmd = verify->add_subcommand("cert", "re-verify a certificate");
      auto graph = std::make_shared<std::string>();
      auto cert_path = std::make_shared<std::string>();
      cmd->add_option("--graph", *graph, "input .khg graph")->required();
      cmd->add_option("--cert", *cert_path, "certificate .json file")->required();
      cmd->callback([=, &exit_code, &json]() {
        const hypow::KGraph H = hypow::read_khg_file(*graph);
        std::ifstream in(*cert_path);
        if (!in) throw std::invalid_argument("cannot open " + *cert_path);
        nlohmann::json j;
        in >> j;
        const hypow::Certificate cert = hypow::certificate_from_json(j);
        const bool good = hypow::verify_certificate(cert, H);
        if (json)
          std::cout << nlohmann::json{{"verified", good}, {"kind", cert.kind}}.dump(2)
                    << '\n';
        else
          std::cout << cert.kind << (good ? " certificate verified\n"
                                          : " certificate FAILED\n");
        exit_code = good ? kOk : kNegative;
      });
    }
  }

  // connect
  {
    auto* cmd = app.add_subcommand("connect", "tight path between two tuples");
    auto graph = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto from = std::make_shared<std::string>();
    auto to = std::make_shared<std::string>();
    auto len = std::make_shared<int>(0);
    auto avoid = std::make_shared<std::string>();
    auto budget = std::make_shared<unsigned long long>(10'000'000ull);
    cmd->add_option("--graph", *graph, "input .khg graph")->required();
    cmd->add_option("--r", *r, "window size")->required();
    cmd->add_option("--from", *from, "start tuple, r-1 vertices")->required();
    cmd->add_option("--to", *to, "end tuple, r-1 vertices")->required();
    cmd->add_option("--len", *len, "number of path edges")->required();
    cmd->add_option("--avoid", *avoid, "excluded vertices");
    cmd->add_option("--budget", *budget, "search node budget");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph H = hypow::read_khg_file(*graph);
      hypow::VertexSet U;
      for (int v : hypow::parse_vertex_list(*avoid)) U.insert(v);
      const auto res = hypow::connect_pair(H, *r, hypow::parse_vertex_list(*from),
                                           hypow::parse_vertex_list(*to), U, *len,
                                           *budget);
      if (json) {
        nlohmann::json out;
        out["status"] = res.status == hypow::SearchStatus::Found       ? "found"
                        : res.status == hypow::SearchStatus::NotFound ? "not-found"
                                                                      : "inconclusive";
        out["seq"] = res.seq;
        out["explored"] = res.explored;
        std::cout << out.dump(2) << '\n';
      } else if (res.status == hypow::SearchStatus::Found) {
        print_seq(res.seq);
      } else {
        std::cout << (res.status == hypow::SearchStatus::NotFound
                          ? "no connecting path\n"
                          : "budget exhausted\n");
      }
      exit_code = status_code(res.status);
    });
  }

  // absorb find
  {
    auto* absorb = app.add_subcommand("absorb", "path-absorbing tuples");
    absorb->require_subcommand(1);
    auto* cmd = absorb->add_subcommand("find", "enumerate absorbers of a vertex");
    auto graph = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto vertex = std::make_shared<int>(0);
    auto limit = std::make_shared<long long>(100);
    cmd->add_option("--graph", *graph, "input .khg graph")->required();
    cmd->add_option("--r", *r, "window size")->required();
    cmd->add_option("--vertex", *vertex, "vertex to absorb")->required();
    cmd->add_option("--limit", *limit, "maximum tuples to report, <=0 for all");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph H = hypow::read_khg_file(*graph);
      const hypow::AbsorberList list =
          hypow::enumerate_path_absorbers(H, *vertex, *r, *limit);
      if (json) {
        nlohmann::json out;
        out["count"] = list.members.size();
        out["truncated"] = list.truncated;
        nlohmann::json tuples = nlohmann::json::array();
        for (const auto& m : list.members) tuples.push_back(m.tuple);
        out["tuples"] = std::move(tuples);
        std::cout << out.dump(2) << '\n';
      } else {
        std::cout << list.members.size() << " absorbers"
                  << (list.truncated ? " (truncated)" : "") << '\n';
        for (const auto& m : list.members) print_seq(m.tuple);
      }
      exit_code = list.members.empty() ? kNegative : kOk;
    });
  }

  // pipeline run
  {
    auto* pipeline = app.add_subcommand("pipeline", "staged spanning-cycle search");
    pipeline->require_subcommand(1);
    auto* cmd = pipeline->add_subcommand("run", "reservoir, absorbers, closing");
    auto graph = std::make_shared<std::string>();
    auto r = std::make_shared<int>(0);
    auto seed = std::make_shared<unsigned long long>(1);
    auto budget = std::make_shared<unsigned long long>(10'000'000ull);
    auto gamma = std::make_shared<std::string>("1/2");
    auto mu = std::make_shared<std::string>("1/4");
    auto cert_out = std::make_shared<std::string>();
    cmd->add_option("--graph", *graph, "input .khg graph")->required();
    cmd->add_option("--r", *r, "window size")->required();
    cmd->add_option("--seed", *seed, "reservoir seed");
    cmd->add_option("--budget", *budget, "search node budget");
    cmd->add_option("--gamma", *gamma, "reservoir density p/q");
    cmd->add_option("--mu", *mu, "reservoir slack p/q");
    cmd->add_option("--cert", *cert_out, "write the certificate to this file");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph H = hypow::read_khg_file(*graph);
      hypow::PipelineParams params;
      params.seed = *seed;
      params.budget = *budget;
      params.gamma = hypow::Rat::parse(*gamma);
      params.mu = hypow::Rat::parse(*mu);
      const hypow::PipelineResult res =
          hypow::hamilton_power_pipeline(H, *r, H.k, params);
      if (res.status == hypow::SearchStatus::Found) {
        const hypow::Certificate cert = hypow::pipeline_certificate(H, *r, res);
        if (!cert_out->empty()) {
          std::ofstream out(*cert_out);
          if (!out)
            throw std::invalid_argument("cannot open " + *cert_out + " for writing");
          out << hypow::certificate_to_json(cert).dump(2) << '\n';
        }
        if (json) {
          std::cout << hypow::certificate_to_json(cert).dump(2) << '\n';
        } else {
          for (const auto& s : res.stages)
            std::cout << (s.ok ? "  ok   " : "  fail ") << s.name
                      << (s.note.empty() ? "" : ": " + s.note) << '\n';
          std::cout << "cycle: ";
          print_seq(res.cycle);
        }
        exit_code = cert.verdict ? kOk : kNegative;
      } else {
        if (json) {
          nlohmann::json out;
          out["status"] = res.status == hypow::SearchStatus::NotFound
                              ? "not-found"
                              : "inconclusive";
          nlohmann::json stages = nlohmann::json::array();
          for (const auto& s : res.stages)
            stages.push_back({{"name", s.name},
                              {"ok", s.ok},
                              {"fell_back", s.fell_back},
                              {"note", s.note}});
          out["stages"] = std::move(stages);
          std::cout << out.dump(2) << '\n';
        } else {
          for (const auto& s : res.stages)
            std::cout << (s.ok ? "  ok   " : "  fail ") << s.name
                      << (s.note.empty() ? "" : ": " + s.note) << '\n';
          std::cout << (res.status == hypow::SearchStatus::NotFound
                            ? "no spanning cycle power exists\n"
                            : "budget exhausted\n");
        }
        exit_code = status_code(res.status);
      }
    });
  }

  // threshold
  {
    auto* cmd = app.add_subcommand("threshold", "codegree threshold coefficient");
    auto k = std::make_shared<int>(0);
    auto j = std::make_shared<int>(0);
    cmd->add_option("--k", *k, "uniformity")->required();
    cmd->add_option("--j", *j, "clique size")->required();
    cmd->callback([=, &exit_code, &json]() {
      const hypow::Rat f = hypow::f_threshold(*k, *j);
      const hypow::Rat c = hypow::Rat(1) - f;
      if (json)
        std::cout << nlohmann::json{{"f", f.str()}, {"one_minus_f", c.str()}}.dump(2)
                  << '\n';
      else
        std::cout << "f_" << *k << "(" << *j << ") = " << f.str()
                  << "   threshold coefficient 1-f = " << c.str() << '\n';
      exit_code = kOk;
    });
  }

  // factor
  {
    auto* cmd = app.add_subcommand("factor", "vertex-disjoint pattern copies");
    auto graph = std::make_shared<std::string>();
    auto pattern = std::make_shared<std::string>();
    auto avoid = std::make_shared<std::string>();
    auto min_covered = std::make_shared<int>(-1);
    cmd->add_option("--graph", *graph, "host .khg graph")->required();
    cmd->add_option("--pattern", *pattern, "pattern .khg graph")->required();
    cmd->add_option("--avoid", *avoid, ".khg graph of forbidden edges");
    cmd->add_option("--min-covered", *min_covered,
                    "vertices to cover (default: all)");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph G = hypow::read_khg_file(*graph);
      const hypow::KGraph P = hypow::read_khg_file(*pattern);
      std::vector<std::vector<int>> forbidden;
      if (!avoid->empty()) forbidden = hypow::read_khg_file(*avoid).edges;
      const int want = *min_covered < 0 ? G.n : *min_covered;
      const hypow::MatchingResult mr = hypow::find_H_matching(G, P, want, forbidden);
      if (mr.found) {
        const hypow::Certificate cert =
            hypow::make_matching_certificate(G, P, mr.copies, want, forbidden);
        if (json) {
          std::cout << hypow::certificate_to_json(cert).dump(2) << '\n';
        } else {
          std::cout << mr.copies.size() << " copies\n";
          for (const auto& c : mr.copies) print_seq(c);
        }
        exit_code = cert.verdict ? kOk : kNegative;
      } else {
        if (json)
          std::cout << nlohmann::json{{"status", "not-found"}}.dump(2) << '\n';
        else
          std::cout << "no such family of copies\n";
        exit_code = kNegative;
      }
    });
  }

  // barrier-scan
  {
    auto* cmd = app.add_subcommand("barrier-scan", "incomplete transferral-free "
                                                   "partitions");
    auto graph = std::make_shared<std::string>();
    auto mu = std::make_shared<std::string>();
    auto min_part = std::make_shared<int>(1);
    cmd->add_option("--graph", *graph, "input .khg graph")->required();
    cmd->add_option("--mu", *mu, "robustness fraction p/q")->required();
    cmd->add_option("--min-part", *min_part, "minimum part size");
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph J = hypow::read_khg_file(*graph);
      const auto barriers =
          hypow::divisibility_barrier_scan(J, hypow::Rat::parse(*mu), *min_part);
      if (json) {
        std::cout << nlohmann::json{{"barriers", barriers}}.dump(2) << '\n';
      } else {
        std::cout << barriers.size() << " barriers\n";
        for (const auto& parts : barriers) {
          for (std::size_t i = 0; i < parts.size(); ++i) {
            std::cout << (i ? " | " : "");
            for (std::size_t a = 0; a < parts[i].size(); ++a)
              std::cout << (a ? " " : "") << parts[i][a];
          }
          std::cout << '\n';
        }
      }
      exit_code = barriers.empty() ? kNegative : kOk;
    });
  }

  // udense
  {
    auto* cmd = app.add_subcommand("udense", "uniform density over a partition "
                                             "family");
    auto graph = std::make_shared<std::string>();
    auto parts_path = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>();
    auto d = std::make_shared<std::string>();
    cmd->add_option("--graph", *graph, "input .khg graph")->required();
    cmd->add_option("--parts", *parts_path, "parts file, tuples separated by "
                                            "blank lines")->required();
    cmd->add_option("--eps", *eps, "size fraction p/q")->required();
    cmd->add_option("--d", *d, "density p/q")->required();
    cmd->callback([=, &exit_code, &json]() {
      const hypow::KGraph G = hypow::read_khg_file(*graph);
      const auto tuples = hypow::read_parts_file(*parts_path);
      const hypow::UDenseMatchingResult res = hypow::uniformly_dense_matching_check(
          G, tuples, hypow::Rat::parse(*eps), hypow::Rat::parse(*d));
      if (json) {
        nlohmann::json out;
        out["ok"] = res.ok;
        if (!res.ok) {
          out["reason"] = res.reason;
          out["bad_tuple"] = res.bad_edge;
          out["witness"] = res.detail.witness;
          out["h"] = res.detail.h;
        }
        std::cout << out.dump(2) << '\n';
      } else if (res.ok) {
        std::cout << "uniformly dense on all " << tuples.size() << " tuples\n";
      } else {
        std::cout << "violation: " << res.reason << '\n';
      }
      exit_code = res.ok ? kOk : kNegative;
    });
  }

  // corpus run
  {
    auto* corpus = app.add_subcommand("corpus", "batch suites");
    corpus->require_subcommand(1);
    auto* cmd = corpus->add_subcommand("run", "run a named suite");
    auto suite = std::make_shared<std::string>();
    cmd->add_option("--suite", *suite, "suite name")->required();
    cmd->callback([=, &exit_code]() {
      if (*suite != "acceptance")
        throw std::invalid_argument("unknown suite: " + *suite);
      exit_code = hypow::print_acceptance_suite(std::cout) == 0 ? kOk : kNegative;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return exit_code;
}
