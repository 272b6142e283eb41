// Minimal library walkthrough: build a digraph, inspect its two-way
// distance partition, and run the full analysis pipeline on the
// diameter-2 catalog.

#include <iostream>

#include "wdr/classify.hpp"
#include "wdr/report.hpp"

int main() {
  // A digraph can come from raw arcs ...
  const wdr::Digraph triangle =
      wdr::build_digraph(3, {{0, 1}, {1, 2}, {2, 0}}, /*require_not_undirected=*/true);
  const auto part = wdr::two_way_partition(triangle);
  std::cout << "triangle types:";
  for (const auto& t : part.types) std::cout << " " << wdr::to_string(t);
  std::cout << "\n\n";

  // ... or from a connection set over a cyclic group.
  for (const auto& entry : wdr::classification_catalog()) {
    const auto report = wdr::analyze(entry.spec.build());
    std::cout << entry.label << " " << entry.spec.to_string()
              << ": diameter=" << report.diameter
              << " max_valency=" << report.scheme.max_valency
              << " mixed_arc=" << (report.mixed_arc.consistent ? "consistent" : "?")
              << "\n";
  }
  return 0;
}
