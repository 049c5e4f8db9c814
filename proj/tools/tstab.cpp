// tstab: command line front end for the Turán stability workbench.
// Subcommands construct graphs, solve for minimum internal edges, enumerate
// clique-free graphs, run the statement verifiers, reduce graphs to
// pentagonal specs, and query the stability frontier.
//
// Exit codes: 0 success / verification passed, 1 verification failure or a
// reduction that does not dominate, 2 usage or input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "turan/canonical.hpp"
#include "turan/constructions.hpp"
#include "turan/enumeration.hpp"
#include "turan/frontier.hpp"
#include "turan/json_io.hpp"
#include "turan/parallel.hpp"
#include "turan/reduction.hpp"
#include "turan/solver.hpp"
#include "turan/verifier.hpp"

using turan::Json;

namespace {

struct Options {
  std::string format;  // per-subcommand default applied at dispatch
  std::string out_path;
  std::string in_path;
  std::string g6;
  std::string z_list;
  std::string sizes_list;
  std::string theta = "0";
  std::string base_g6;
  int r = 2;
  long long n = 0;
  long long t = 0;
  long long s = 0;
  long long x = 0, y = 0;
  long long min_edges = 0;
  long long max_total = 0;
  long long budget_ms = -1;
  double delta = 0;
  int forbid = 3;
  int cap = -1;
  int workers = turan::default_workers();
  int trials = 500;
  unsigned long long seed = 12345;
  int max_n = 40;
  int max_k = 8;
  int r_lo = 2, r_hi = 8;
  long long n_max = 100;
  int samples = 50;
  std::string sizes_csv;
  bool strict = false;
};

std::vector<long long> parse_ll_list(const std::string& text, const char* what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
    out.push_back(std::stoll(item));
  }
  if (out.empty()) throw std::invalid_argument(std::string(what) + ": empty list");
  return out;
}

turan::Threshold parse_theta(const std::string& text) {
  auto slash = text.find('/');
  turan::Threshold th;
  if (slash == std::string::npos) {
    th.num = std::stoll(text);
    th.den = 1;
  } else {
    th.num = std::stoll(text.substr(0, slash));
    th.den = std::stoll(text.substr(slash + 1));
  }
  if (th.den <= 0) throw std::invalid_argument("threshold denominator must be positive");
  return th;
}

turan::Graph read_input_graph(const Options& opt) {
  if (!opt.g6.empty()) return turan::decode_graph6(opt.g6);
  if (opt.in_path.empty()) throw std::invalid_argument("provide --g6 or --in");
  std::ifstream in(opt.in_path);
  if (!in) throw std::invalid_argument("cannot open " + opt.in_path);
  std::string line;
  const std::string header = ">>graph6<<";
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(header, 0) == 0) line.erase(0, header.size());
    if (!line.empty()) return turan::decode_graph6(line);
  }
  throw std::invalid_argument("no graph line in " + opt.in_path);
}

void emit(const Options& opt, const std::string& payload) {
  if (opt.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + opt.out_path);
  out << payload;
}

std::string format_or(const Options& opt, const char* fallback) {
  return opt.format.empty() ? fallback : opt.format;
}

void require_format(const std::string& got, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (got == a) return;
  throw std::invalid_argument("unsupported --format " + got + " for this subcommand");
}

int emit_graph(const Options& opt, const turan::Graph& g) {
  std::string fmt = format_or(opt, "graph6");
  require_format(fmt, {"graph6", "json"});
  if (fmt == "graph6") {
    emit(opt, turan::encode_graph6(g) + "\n");
  } else {
    Json j;
    j["n"] = g.n();
    j["edges"] = g.edge_count();
    j["graph6"] = turan::encode_graph6(g);
    emit(opt, j.dump() + "\n");
  }
  return 0;
}

int emit_report(const Options& opt, const turan::VerificationReport& rep) {
  require_format(format_or(opt, "json"), {"json"});
  emit(opt, turan::to_json(rep).dump() + "\n");
  return rep.pass() ? 0 : 1;
}

int run_construct(const Options& opt, const std::string& which) {
  if (which == "turan") return emit_graph(opt, turan::turan_graph(opt.r, (int)opt.n));
  if (which == "sample-ptg")
    return emit_graph(opt, turan::ptg_build(turan::sample_ptg(opt.r, opt.n, opt.s)));
  if (which == "blowup") {
    turan::BlowupSpec spec;
    spec.base = turan::decode_graph6(opt.base_g6);
    for (long long s : parse_ll_list(opt.sizes_list, "--sizes"))
      spec.sizes.push_back((int)s);
    return emit_graph(opt, turan::blowup(spec));
  }
  turan::PentagonalSpec spec;
  spec.r = opt.r;
  spec.x = opt.x;
  spec.y = opt.y;
  spec.z = parse_ll_list(opt.z_list, "--z");
  return emit_graph(opt, turan::ptg_build(spec));
}

int run_dr(const Options& opt, bool exact) {
  require_format(format_or(opt, "json"), {"json"});
  turan::Graph g = read_input_graph(opt);
  turan::DrResult res;
  if (!exact) {
    res = turan::dr_bruteforce(g, opt.r);
  } else if (opt.budget_ms >= 0) {
    res = turan::dr_exact(g, opt.r, std::chrono::milliseconds(opt.budget_ms));
  } else {
    res = turan::dr_exact(g, opt.r);
  }
  emit(opt, turan::to_json(res).dump() + "\n");
  return 0;
}

int run_enumerate(const Options& opt) {
  std::string fmt = format_or(opt, "json");
  require_format(fmt, {"json", "graph6"});
  turan::EnumSpec spec{(int)opt.n, opt.forbid, opt.min_edges, opt.cap};
  if (fmt == "graph6") {
    std::string payload;
    turan::enumerate_clique_free(spec, [&](const turan::Graph& g) {
      payload += turan::encode_graph6(g);
      payload += '\n';
    });
    emit(opt, payload);
    return 0;
  }
  long long count = 0, max_edges = 0;
  std::vector<long long> by_edges;
  turan::enumerate_clique_free(spec, [&](const turan::Graph& g) {
    long long e = g.edge_count();
    if ((size_t)e >= by_edges.size()) by_edges.resize((size_t)e + 1, 0);
    ++by_edges[(size_t)e];
    ++count;
    if (e > max_edges) max_edges = e;
  });
  Json j;
  j["count"] = count;
  j["max_edges"] = max_edges;
  j["by_edges"] = by_edges;
  emit(opt, j.dump() + "\n");
  return 0;
}

int run_verify(const Options& opt, const std::string& which) {
  if (which == "folklore") {
    std::vector<int> sizes;
    for (long long s : parse_ll_list(opt.sizes_csv, "--sizes")) sizes.push_back((int)s);
    return emit_report(opt, turan::verify_folklore(sizes));
  }
  if (which == "matching")
    return emit_report(opt, turan::verify_matching_lemma(opt.trials, opt.seed,
                                                         opt.max_n, opt.max_k));
  if (which == "aes") return emit_report(opt, turan::verify_aes(opt.r, (int)opt.n));
  if (which == "brouwer")
    return emit_report(opt, turan::verify_brouwer(opt.r, (int)opt.n));
  if (which == "cor26")
    return emit_report(opt, turan::verify_ptg_dr_closed_form(opt.r, opt.max_total));
  return emit_report(opt, turan::verify_turan_identities(opt.r_lo, opt.r_hi, opt.n_max,
                                                         opt.samples));
}

int run_reduce(const Options& opt, bool dense) {
  require_format(format_or(opt, "json"), {"json"});
  turan::Graph g = read_input_graph(opt);
  if (dense) {
    turan::DenseReduceResult res = turan::dense_reduce(g, opt.r);
    emit(opt, turan::to_json(res).dump() + "\n");
    bool good = res.status == turan::DenseStatus::ok && res.dom && res.dom->dominates;
    return good ? 0 : 1;
  }
  turan::GeneralReduceResult res =
      turan::general_reduce(g, opt.r, parse_theta(opt.theta), opt.strict);
  emit(opt, turan::to_json(res).dump() + "\n");
  bool good = res.status == turan::GeneralStatus::ok && res.dom && res.dom->dominates;
  return good ? 0 : 1;
}

int run_frontier(const Options& opt) {
  std::string fmt = format_or(opt, "json");
  require_format(fmt, {"json", "csv"});
  turan::FrontierRecord rec = turan::frontier(opt.r, (int)opt.n, opt.t);
  if (fmt == "csv") {
    std::string payload = "r,n,t,f,witness_graph6\n";
    payload += std::to_string(rec.r) + "," + std::to_string(rec.n) + "," +
               std::to_string(rec.t) + "," + std::to_string(rec.f) + "," +
               rec.witness_g6 + "\n";
    emit(opt, payload);
  } else {
    emit(opt, turan::to_json(rec).dump() + "\n");
  }
  return 0;
}

int run_optimize(const Options& opt) {
  require_format(format_or(opt, "json"), {"json"});
  turan::PtgOptimum res = turan::optimize_ptg(opt.r, opt.n, opt.min_edges, opt.workers);
  emit(opt, turan::to_json(res).dump() + "\n");
  return 0;
}

int run_asymptotic(const Options& opt) {
  require_format(format_or(opt, "json"), {"json"});
  Json j;
  j["dr"] = turan::asymptotic_dr(opt.r, (double)opt.n, opt.delta);
  j["x"] = turan::asymptotic_x(opt.r, (double)opt.n, opt.delta);
  j["y"] = turan::asymptotic_y((double)opt.n, opt.delta);
  emit(opt, j.dump() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Verification and optimization workbench for exact Turán stability"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "json | csv | graph6 (subset per subcommand)");
    cmd->add_option("--out", opt.out_path, "write output to this file instead of stdout");
  };
  auto add_graph_input = [&](CLI::App* cmd) {
    cmd->add_option("--in", opt.in_path, "file with one graph6 line");
    cmd->add_option("--g6", opt.g6, "graph6 string");
  };

  CLI::App* construct = app.add_subcommand("construct", "build a graph family member");
  construct->require_subcommand(1);
  CLI::App* c_turan = construct->add_subcommand("turan", "complete multipartite extremal graph");
  c_turan->add_option("--r", opt.r, "part count")->required()->check(CLI::Range(2, 64));
  c_turan->add_option("--n", opt.n, "vertices")->required()->check(CLI::NonNegativeNumber);
  add_common(c_turan);
  CLI::App* c_ptg = construct->add_subcommand("ptg", "pentagonal blowup from x, y, z");
  c_ptg->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  c_ptg->add_option("--x", opt.x)->required();
  c_ptg->add_option("--y", opt.y)->required();
  c_ptg->add_option("--z", opt.z_list, "comma separated z_1..z_r")->required();
  add_common(c_ptg);
  CLI::App* c_sample = construct->add_subcommand("sample-ptg", "balanced pentagonal sample");
  c_sample->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  c_sample->add_option("--n", opt.n)->required();
  c_sample->add_option("--s", opt.s)->required();
  add_common(c_sample);
  CLI::App* c_blow = construct->add_subcommand("blowup", "blow up a base graph");
  c_blow->add_option("--base-g6", opt.base_g6, "graph6 of the base")->required();
  c_blow->add_option("--sizes", opt.sizes_list, "comma separated part sizes")->required();
  add_common(c_blow);

  CLI::App* dr = app.add_subcommand("dr", "minimum internal edges over r-partitions");
  dr->require_subcommand(1);
  CLI::App* dr_ex = dr->add_subcommand("exact", "branch and bound solver");
  dr_ex->add_option("--r", opt.r)->required()->check(CLI::Range(1, 64));
  add_graph_input(dr_ex);
  dr_ex->add_option("--budget-ms", opt.budget_ms, "time budget; result may be inexact");
  add_common(dr_ex);
  CLI::App* dr_br = dr->add_subcommand("brute", "exhaustive assignment scan");
  dr_br->add_option("--r", opt.r)->required()->check(CLI::Range(1, 64));
  add_graph_input(dr_br);
  add_common(dr_br);

  CLI::App* enumerate = app.add_subcommand("enumerate", "isomorph-free clique-free graphs");
  enumerate->add_option("--n", opt.n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--forbid", opt.forbid, "forbidden clique size (default 3)");
  enumerate->add_option("--min-edges", opt.min_edges);
  enumerate->add_option("--cap", opt.cap, "vertex cap override");
  add_common(enumerate);

  CLI::App* verify = app.add_subcommand("verify", "check a statement on a grid");
  verify->require_subcommand(1);
  CLI::App* v_folk = verify->add_subcommand(
      "folklore", "max K_r-free subgraph of complete multipartite graphs");
  v_folk->add_option("--sizes", opt.sizes_csv, "part sizes, nondecreasing")->required();
  add_common(v_folk);
  CLI::App* v_match = verify->add_subcommand("matching", "edge bound forces a k-matching");
  v_match->add_option("--trials", opt.trials);
  v_match->add_option("--seed", opt.seed);
  v_match->add_option("--max-n", opt.max_n);
  v_match->add_option("--max-k", opt.max_k);
  add_common(v_match);
  CLI::App* v_aes = verify->add_subcommand("aes", "min-degree threshold forces r-partiteness");
  v_aes->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  v_aes->add_option("--n", opt.n)->required();
  add_common(v_aes);
  CLI::App* v_brouwer = verify->add_subcommand("brouwer", "edge threshold forces r-partiteness");
  v_brouwer->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  v_brouwer->add_option("--n", opt.n)->required();
  add_common(v_brouwer);
  CLI::App* v_cor = verify->add_subcommand(
      "cor26", "pentagonal blowup minimum equals x*y (closed form vs solver)");
  v_cor->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  v_cor->add_option("--max-total", opt.max_total)->required();
  add_common(v_cor);
  CLI::App* v_tur = verify->add_subcommand("turan-identities", "extremal count identities");
  v_tur->add_option("--r-lo", opt.r_lo);
  v_tur->add_option("--r-hi", opt.r_hi);
  v_tur->add_option("--n-max", opt.n_max);
  v_tur->add_option("--samples", opt.samples);
  add_common(v_tur);

  CLI::App* reduce = app.add_subcommand("reduce", "build a candidate pentagonal spec");
  reduce->require_subcommand(1);
  CLI::App* red_d = reduce->add_subcommand("dense", "single-vertex-deletion path");
  red_d->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  add_graph_input(red_d);
  add_common(red_d);
  CLI::App* red_g = reduce->add_subcommand("general", "peeling and matching pipeline");
  red_g->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  red_g->add_option("--theta", opt.theta, "degree threshold, integer or num/den");
  red_g->add_flag("--strict", opt.strict, "error out instead of extra peeling");
  add_graph_input(red_g);
  add_common(red_g);

  CLI::App* front = app.add_subcommand("frontier", "max internal-edge distance in a pool");
  front->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  front->add_option("--n", opt.n)->required();
  front->add_option("--t", opt.t)->required();
  add_common(front);

  CLI::App* optp = app.add_subcommand("optimize-ptg", "best spec under an edge budget");
  optp->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  optp->add_option("--n", opt.n)->required();
  optp->add_option("--min-edges", opt.min_edges)->required();
  optp->add_option("--workers", opt.workers)->check(CLI::PositiveNumber);
  add_common(optp);

  CLI::App* asy = app.add_subcommand("asymptotic", "closed-form optimum estimates");
  asy->add_option("--r", opt.r)->required()->check(CLI::Range(2, 64));
  asy->add_option("--n", opt.n)->required();
  asy->add_option("--delta", opt.delta)->required();
  add_common(asy);

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

  try {
    if (construct->parsed())
      for (CLI::App* sub : construct->get_subcommands())
        return run_construct(opt, sub->get_name());
    if (dr->parsed())
      for (CLI::App* sub : dr->get_subcommands())
        return run_dr(opt, sub->get_name() == "exact");
    if (enumerate->parsed()) return run_enumerate(opt);
    if (verify->parsed())
      for (CLI::App* sub : verify->get_subcommands())
        return run_verify(opt, sub->get_name());
    if (reduce->parsed())
      for (CLI::App* sub : reduce->get_subcommands())
        return run_reduce(opt, sub->get_name() == "dense");
    if (front->parsed()) return run_frontier(opt);
    if (optp->parsed()) return run_optimize(opt);
    if (asy->parsed()) return run_asymptotic(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
