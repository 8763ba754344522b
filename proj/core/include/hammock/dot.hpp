#pragma once

// Graphviz rendering of a stage category: one node per zig-zag, one edge per
// non-identity ladder.

#include <cstddef>
#include <string>

#include "hammock/hammock.hpp"

namespace hammock {

struct DotSummary {
  std::size_t nodes = 0;
  std::size_t edges = 0;
};

std::string stage_to_dot(const HammockStage& s, DotSummary* summary = nullptr);

}  // namespace hammock
