#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

// Exhaustive enumeration of simple graphs up to isomorphism for small n,
// built by vertex augmentation with canonical-code deduplication. Used as the
// in-process stand-in for the published 8-node corpus.
namespace testsupport {

// Canonical upper-triangle edge code (bit for pair i<j at j*(j-1)/2 + i):
// minimum over all vertex orderings consistent with iterated color
// refinement. Equal codes <=> isomorphic graphs.
std::uint32_t canonical_code(std::uint32_t code, int n);

// All non-isomorphic simple graphs on exactly n nodes (n <= 8).
std::vector<eden::Graph> all_graphs(int n);

// The connected subset of all_graphs(n).
std::vector<eden::Graph> all_connected_graphs(int n);

}  // namespace testsupport
