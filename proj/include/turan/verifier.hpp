#pragma once
// Executable checks of the standalone statements: the folklore multipartite
// bound, the matching lemma, the Andrásfai-Erdős-Sós and Brouwer theorems,
// exact Turán-number identities, and the pentagonal closed form.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

struct Counterexample {
  std::string graph6;  // empty when no single graph is to blame
  std::string detail;
};

struct VerificationReport {
  std::string statement;
  std::string grid;
  long long instances = 0;
  std::vector<Counterexample> counterexamples;
  std::map<std::string, long long> stats;

  bool pass() const { return counterexamples.empty(); }
};

// Every K_r-free subgraph of the complete multipartite graph on parts
// n_1 <= ... <= n_r has at most e - n_1*n_2 edges, and some subgraph
// attains that. Brute force over all crossing-edge subsets; the total
// edge count must stay at 20 or below.
VerificationReport verify_folklore(const std::vector<int>& sizes);

// Random graphs with e > (k-1)*max_degree and max_degree >= 2k-1 always
// contain a k-matching. Trials are drawn from a fixed-seed generator with
// integer arithmetic only, so reports are reproducible everywhere.
VerificationReport verify_matching_lemma(int trials = 500, std::uint64_t seed = 12345,
                                         int max_n = 40, int max_k = 8);

// Min degree strictly above (3r-4)/(3r-1)*n forces r-partiteness, over all
// K_{r+1}-free graphs on n vertices.
VerificationReport verify_aes(int r, int n);

// A K_{r+1}-free graph with at least t_r(n) - floor(n/r) + 2 edges is
// r-partite. Requires n >= 2r+1.
VerificationReport verify_brouwer(int r, int n);

// Difference, sandwich and binomial-ratio identities for t_r(n), exact
// integer arithmetic, n' sampled at `samples` points per n.
VerificationReport verify_turan_identities(int r_lo, int r_hi, long long n_max,
                                           int samples);

// dr_exact(ptg_build(spec)) == x*y for every pent-r-partite spec with
// total vertex count up to max_total.
VerificationReport verify_ptg_dr_closed_form(int r, long long max_total);

}  // namespace turan
