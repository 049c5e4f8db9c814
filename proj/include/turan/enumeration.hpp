#pragma once
// Isomorph-free generation of clique-free graphs by edge augmentation, and
// ingestion of externally produced graph6 streams.

#include <functional>
#include <istream>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Default vertex cap for enumeration sweeps; TSTAB_ENUM_CAP overrides.
int enum_cap_default();

struct EnumSpec {
  int n = 0;
  int forbidden_clique = 3;  // q: generated graphs contain no K_q
  long long min_edges = 0;
  int cap = -1;  // -1 means enum_cap_default()
};

// Calls yield exactly once per isomorphism class of K_q-free graphs on n
// vertices with at least min_edges edges. Augmentation adds one edge at a
// time; a child survives iff the new edge lies in the automorphism orbit
// of its canonical form's last edge, so no class is ever produced twice.
void enumerate_clique_free(const EnumSpec& spec,
                           const std::function<void(const Graph&)>& yield);
std::vector<Graph> enumerate_clique_free(const EnumSpec& spec);

struct IngestOptions {
  bool strict = false;       // bad line: throw instead of skip-and-count
  bool verify = false;       // re-check clique-freeness and the edge floor
  int forbidden_clique = 0;  // q for verify; 0 skips the clique check
  long long min_edges = 0;
};

struct IngestStats {
  long long yielded = 0;
  long long bad_lines = 0;
  long long filtered = 0;
};

IngestStats ingest_graph6(std::istream& in, const IngestOptions& opt,
                          const std::function<void(const Graph&)>& yield);

}  // namespace turan
