#pragma once

#include <string>
#include <vector>

// Independent graph6 reference decoder used to cross-check the library's
// parser and serializer. Deliberately written against the format description
// only (bit vector first, then matrix fill) rather than sharing any code with
// src/graph.cpp.
namespace g6ref {

// Decodes one graph6 line into a symmetric 0/1 adjacency matrix.
// Returns false on any structural violation (bad byte, truncation, trailing
// bytes, nonzero padding).
bool decode(const std::string& line, std::vector<std::vector<int>>& adj);

}  // namespace g6ref
