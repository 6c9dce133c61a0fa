#pragma once

#include <iosfwd>
#include <string>

#include "gsup/graph_system.hpp"
#include "gsup/regions.hpp"

namespace gsup {

/// Text format, one directive per line (# starts a comment):
///
///   version 1
///   vertices a b c ...
///   rotation a: b e          # ccw neighbor order, each neighbor once
///   colors red: a b          # optional; unmentioned vertices are blue
///   family H H1: a b c d
///   family K K1: c d
///
/// or the grid shorthand:
///
///   version 1
///   grid 3 3 torus           # rows cols plane|torus
///   region H R0: 0 0  0 1  0 2   # row col pairs
///   colors red: 0_0
///
/// Simple host graphs only; declared families must induce connected
/// subgraphs.  Parse errors carry the line number.
GraphSystem load_system(std::istream& in, const std::string& source_name = "<input>");
GraphSystem load_system_file(const std::string& path);

/// Canonical explicit form: vertices sorted by name, rotations as
/// embedded, families and colors sorted.  load(save(x)) == save-identical.
std::string save_system(const GraphSystem& sys);

std::string to_dot(const EmbeddedGraph& g, const std::map<VertexId, std::string>& names,
                   const std::string& graph_name = "g");

} // namespace gsup
