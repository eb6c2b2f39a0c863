#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "greensched/model.hpp"

namespace greensched {

struct DotParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses a GraphViz digraph with integer `weight` attributes on nodes and
/// edges. Nodes default to weight 1, edges to 0; nodes may be introduced by
/// an edge statement. Throws DotParseError on syntax errors (with line and
/// column), duplicate node statements, cycles, or invariant violations.
Workflow parse_dot(std::string_view text);

/// Symmetric writer: parse_dot(emit_dot(w)) reproduces w exactly.
std::string emit_dot(const Workflow& w);

}  // namespace greensched
