#pragma once
// Canonical labeling for graphs on up to 64 vertices.

#include <string>
#include <vector>

#include "turan/graph.hpp"

namespace turan {

// Total-order key for an isomorphism class: the graph6 line of the graph
// under its canonical labeling. Equal certificates iff isomorphic.
struct CanonicalForm {
  std::string certificate;

  bool operator==(const CanonicalForm&) const = default;
  bool operator<(const CanonicalForm& o) const { return certificate < o.certificate; }
};

struct CanonicalAnalysis {
  CanonicalForm form;
  std::vector<int> canonical_label;               // vertex -> position
  std::vector<std::vector<int>> aut_generators;   // generate Aut(g)
};

// Iterated degree refinement plus full individualization backtracking.
// Discovered automorphisms prune branches that revisit equivalent choices;
// among surviving leaf labelings the lexicographically least packed
// upper-triangle bit string wins. Correctness over speed; intended for the
// small graphs the enumerator and the test sweeps touch.
CanonicalAnalysis canonical_analyze(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

}  // namespace turan
