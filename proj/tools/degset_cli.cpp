// Command-line front end: computes least sizes, checks graphicality,
// pads, realizes, and tabulates intervals. Structured output is one JSON
// record per line when --json-lines is given.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "degset/closedform.hpp"
#include "degset/graphicality.hpp"
#include "degset/padding.hpp"
#include "degset/parse.hpp"
#include "degset/realization.hpp"
#include "degset/solver.hpp"

namespace {

using nlohmann::json;

struct Options {
  bool json_lines = false;
  bool witness = false;
  bool dot = false;
  std::string method = "auto";
  std::int64_t limit = 100000;
  std::uint64_t seed = 0;  // reserved for randomized tooling
};

json runs_to_json(const degset::DegreeSequence& s) {
  json out = json::array();
  for (const auto& [value, mult] : s.runs()) out.push_back({value, mult});
  return out;
}

json edges_to_json(const degset::Graph& g) {
  json out = json::array();
  for (const auto& [u, v] : g.edges()) out.push_back({u, v});
  return out;
}

degset::SolverLimits solver_limits(const Options& opt) {
  degset::SolverLimits limits;
  limits.max_sigma = opt.limit;
  return limits;
}

degset::LqOutcome compute_lq(const degset::DegreeSet& d, const Options& opt) {
  const auto limits = solver_limits(opt);
  if (opt.method == "auto")
    return degset::lq_auto(d, limits, opt.witness);
  if (opt.method == "closed") {
    auto closed = degset::lq_closed(d, opt.witness);
    if (!closed) throw degset::NotApplicable("no closed form applies");
    return *closed;
  }
  if (opt.method == "search") return degset::lq_exact(d, limits, opt.witness);

  // oracle: recover the witness at the found total with the full decider
  std::int64_t lq = degset::lq_oracle(d, limits);
  for (const auto& mult : degset::enumerate_multiplicities(d, 2 * lq)) {
    std::vector<degset::DegreeSequence::Run> runs;
    for (std::size_t i = 0; i < mult.size(); ++i)
      runs.emplace_back(d.degrees()[i], mult[i]);
    degset::DegreeSequence candidate(std::move(runs));
    if (degset::is_graphic_full(candidate)) {
      degset::LqOutcome out{lq, std::move(candidate), std::nullopt,
                            degset::Method::oracle};
      if (opt.witness) out.graph = degset::realize(out.witness);
      return out;
    }
  }
  throw std::logic_error("oracle witness reconstruction failed");
}

void print_outcome(const std::string& set_text,
                   const degset::LqOutcome& outcome, const Options& opt) {
  if (opt.json_lines) {
    json record{{"set", set_text},
                {"lq", outcome.lq},
                {"method", degset::to_string(outcome.method)},
                {"witness", runs_to_json(outcome.witness)}};
    if (outcome.graph) record["edges"] = edges_to_json(*outcome.graph);
    std::cout << record.dump() << '\n';
    return;
  }
  std::cout << "set: " << set_text << '\n'
            << "lq: " << outcome.lq << '\n'
            << "method: " << degset::to_string(outcome.method) << '\n'
            << "witness: " << outcome.witness.to_text() << '\n';
  if (outcome.graph) {
    if (opt.dot)
      std::cout << degset::to_dot(*outcome.graph);
    else
      std::cout << degset::to_edge_list(*outcome.graph);
  }
}

int cmd_lq(const std::string& set_text, const Options& opt) {
  auto d = degset::parse_degree_set(set_text);
  print_outcome(d.to_text(), compute_lq(d, opt), opt);
  return 0;
}

int cmd_check(const std::string& seq_text, const Options& opt) {
  auto s = degset::parse_degree_sequence(seq_text);
  const bool graphic = degset::is_graphic_refined(s);
  if (opt.json_lines) {
    json record{{"sequence", s.to_text()}, {"graphic", graphic}};
    if (!graphic) {
      if (auto v = degset::first_violation(s)) {
        record["violated_k"] = v->first;
        record["delta"] = v->second;
      } else {
        record["reason"] = "odd-sum";
      }
    }
    std::cout << record.dump() << '\n';
    return 0;
  }
  if (graphic) {
    std::cout << "graphic\n";
  } else if (auto v = degset::first_violation(s)) {
    std::cout << "not graphic: violated at k=" << v->first
              << ", delta=" << v->second << '\n';
  } else {
    std::cout << "not graphic: odd sum\n";
  }
  return 0;
}

int cmd_pad(const std::string& set_text, const Options& opt) {
  auto d = degset::parse_degree_set(set_text);
  auto pr = degset::min_padding(d);
  if (opt.json_lines) {
    json record{{"set", d.to_text()},
                {"case", degset::to_string(pr.kase)},
                {"c", pr.c},
                {"k_star", pr.k_star},
                {"C_star", pr.C_star},
                {"padded", runs_to_json(pr.padded)}};
    std::cout << record.dump() << '\n';
    return 0;
  }
  std::cout << "set: " << d.to_text() << '\n'
            << "case: " << degset::to_string(pr.kase) << '\n'
            << "c: " << pr.c << '\n'
            << "k_star: " << pr.k_star << '\n'
            << "C_star: " << pr.C_star << '\n'
            << "padded: " << pr.padded.to_text() << '\n';
  return 0;
}

int cmd_realize(const std::string& seq_text, const Options& opt) {
  auto s = degset::parse_degree_sequence(seq_text);
  auto g = degset::realize(s);
  if (opt.json_lines) {
    json record{{"sequence", s.to_text()},
                {"vertices", g.vertex_count()},
                {"edges", edges_to_json(g)}};
    std::cout << record.dump() << '\n';
    return 0;
  }
  if (opt.dot)
    std::cout << degset::to_dot(g);
  else
    std::cout << degset::to_edge_list(g);
  return 0;
}

int cmd_approx(const std::string& set_text, const Options& opt) {
  auto d = degset::parse_degree_set(set_text);
  auto padded = degset::approx_sequence(d);
  auto window = degset::search_window(d);
  const int gap_bound = d.min() - 1;
  if (opt.json_lines) {
    json record{{"set", d.to_text()},
                {"padded", runs_to_json(padded)},
                {"sigma", padded.sigma()},
                {"window_lo_exclusive", window.lo_exclusive},
                {"window_hi_inclusive", window.hi_inclusive},
                {"gap_bound", gap_bound}};
    std::cout << record.dump() << '\n';
    return 0;
  }
  std::cout << "set: " << d.to_text() << '\n'
            << "padded: " << padded.to_text() << '\n'
            << "sigma: " << padded.sigma() << '\n'
            << "window: (" << window.lo_exclusive << ","
            << window.hi_inclusive << "]\n"
            << "gap_bound: " << gap_bound << '\n';
  return 0;
}

std::string branch_name(degset::IntervalBranch b) {
  switch (b) {
    case degset::IntervalBranch::singleton: return "singleton";
    case degset::IntervalBranch::small_m: return "small-m";
    case degset::IntervalBranch::large_m: return "large-m";
  }
  return "unknown";
}

int cmd_table(int max_n, const Options& opt) {
  if (max_n < 1) throw degset::ParseError("max-n must be positive");
  for (int n = 1; n <= max_n; ++n) {
    if (!opt.json_lines) std::cout << "n=" << n << ":";
    for (int m = 1; m <= n; ++m) {
      auto branch = degset::interval_branch(m, n);
      auto outcome = degset::lq_interval(m, n);
      if (opt.json_lines) {
        json record{{"m", m},
                    {"n", n},
                    {"lq", outcome.lq},
                    {"branch", branch_name(branch)}};
        std::cout << record.dump() << '\n';
      } else {
        std::cout << ' ' << outcome.lq << '/' << branch_name(branch);
      }
    }
    if (!opt.json_lines) std::cout << '\n';
  }
  return 0;
}

int cmd_batch(const std::string& path, const Options& opt) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw degset::ParseError("cannot open batch file " + path);
    in = &file;
  }
  std::string line;
  while (std::getline(*in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto d = degset::parse_degree_set(line);
    auto outcome = compute_lq(d, opt);
    if (opt.json_lines) {
      print_outcome(d.to_text(), outcome, opt);
    } else {
      std::cout << "set=" << d.to_text() << " lq=" << outcome.lq
                << " method=" << degset::to_string(outcome.method)
                << " witness=" << outcome.witness.to_text() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"least size of a simple graph with a given degree set"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_flag("--json-lines", opt.json_lines,
               "one JSON record per result line");
  app.add_option("--limit", opt.limit, "largest degree total to search");
  app.add_option("--seed", opt.seed, "seed for randomized tooling");

  std::string set_text, seq_text, batch_path;
  int max_n = 1;

  auto* lq = app.add_subcommand("lq", "least edge count for a degree set");
  lq->add_option("set", set_text, "degree set, e.g. \"5,4,3\"")->required();
  lq->add_option("--method", opt.method, "auto|closed|search|oracle")
      ->check(CLI::IsMember({"auto", "closed", "search", "oracle"}));
  lq->add_flag("--witness", opt.witness, "also realize a witness graph");
  lq->add_flag("--dot", opt.dot, "emit the witness graph as DOT");

  auto* check = app.add_subcommand("check", "is a degree sequence graphic");
  check->add_option("sequence", seq_text, "e.g. \"5,4,3^5\"")->required();

  auto* pad = app.add_subcommand("pad", "minimal padding of a degree set");
  pad->add_option("set", set_text)->required();

  auto* realize = app.add_subcommand("realize", "construct a witness graph");
  realize->add_option("sequence", seq_text)->required();
  realize->add_flag("--dot", opt.dot, "emit DOT instead of an edge list");

  auto* approx =
      app.add_subcommand("approx", "approximation sequence and window");
  approx->add_option("set", set_text)->required();

  auto* table = app.add_subcommand("table", "least sizes for intervals");
  table->add_option("max-n", max_n)->required();

  auto* batch = app.add_subcommand("batch", "one degree set per line");
  batch->add_option("file", batch_path, "input path, or - for stdin")
      ->required();
  batch->add_option("--method", opt.method, "auto|closed|search|oracle")
      ->check(CLI::IsMember({"auto", "closed", "search", "oracle"}));
  batch->add_flag("--witness", opt.witness);

  CLI11_PARSE(app, argc, argv);

  try {
    if (lq->parsed()) return cmd_lq(set_text, opt);
    if (check->parsed()) return cmd_check(seq_text, opt);
    if (pad->parsed()) return cmd_pad(set_text, opt);
    if (realize->parsed()) return cmd_realize(seq_text, opt);
    if (approx->parsed()) return cmd_approx(set_text, opt);
    if (table->parsed()) return cmd_table(max_n, opt);
    if (batch->parsed()) return cmd_batch(batch_path, opt);
  } catch (const degset::LimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const degset::NotApplicable& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
