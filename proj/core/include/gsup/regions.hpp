#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gsup/graph_system.hpp"

namespace gsup {

enum class GridTopology { plane, torus };

struct GridSpec {
    int rows = 0;
    int cols = 0;
    GridTopology topology = GridTopology::plane;
};

struct Cell {
    int row = 0;
    int col = 0;
    auto operator<=>(const Cell&) const = default;
};

/// A named set of grid cells; must induce a connected subgraph of the
/// grid host.
struct Region {
    std::string name;
    std::set<Cell> cells;
};

/// Vertex id of a cell in the host built by build_system (row-major).
VertexId grid_vertex(const GridSpec& grid, Cell c);
std::string grid_vertex_name(Cell c);

/// The grid host graph with the canonical rotation (up, right, down,
/// left) at every vertex; plane genus 0, torus genus 1.
EmbeddedGraph grid_host(const GridSpec& grid);

struct BuiltSystem {
    GraphSystem system;
    bool cross_free = false;
    std::optional<CrossingWitness> witness;
};

/// Assemble a graph system from cell regions.  Connectivity of every
/// region is validated (error names the offender).  Cross-freeness is
/// reported, not guaranteed: arbitrary regions on a torus can cross.
BuiltSystem build_system(const GridSpec& grid, const std::vector<Region>& h_regions,
                         const std::vector<Region>& k_regions = {});

/// Deterministic random axis-aligned rectangles on a plane grid, resampled
/// so the family is pairwise non-piercing (hence cross-free).
std::vector<Region> random_rectangles(const GridSpec& grid, int count, std::uint64_t seed,
                                      const std::string& name_prefix = "R");

GraphSystem random_rectangle_system(const GridSpec& grid, int count, std::uint64_t seed);

/// Random torus regions (bands and patches), filtered to a cross-free
/// family; deterministic under the seed.
std::vector<Region> random_torus_regions(const GridSpec& grid, int count, std::uint64_t seed,
                                         const std::string& name_prefix = "R");

} // namespace gsup
