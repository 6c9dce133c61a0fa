#include "gsup/regions.hpp"

#include <algorithm>
#include <deque>
#include <random>

namespace gsup {

VertexId grid_vertex(const GridSpec& grid, Cell c) {
    return static_cast<VertexId>(c.row * grid.cols + c.col);
}

std::string grid_vertex_name(Cell c) {
    return std::to_string(c.row) + "_" + std::to_string(c.col);
}

EmbeddedGraph grid_host(const GridSpec& grid) {
    if (grid.rows < 1 || grid.cols < 1) throw StructuralError("grid needs positive extents");
    if (grid.topology == GridTopology::torus && (grid.rows < 3 || grid.cols < 3))
        throw StructuralError("torus grid needs rows >= 3 and cols >= 3");
    const bool torus = grid.topology == GridTopology::torus;

    std::map<VertexId, std::vector<VertexId>> rot;
    auto at = [&](int r, int c) -> std::optional<VertexId> {
        if (torus) {
            r = ((r % grid.rows) + grid.rows) % grid.rows;
            c = ((c % grid.cols) + grid.cols) % grid.cols;
        } else if (r < 0 || c < 0 || r >= grid.rows || c >= grid.cols) {
            return std::nullopt;
        }
        return grid_vertex(grid, {r, c});
    };
    for (int r = 0; r < grid.rows; ++r) {
        for (int c = 0; c < grid.cols; ++c) {
            std::vector<VertexId> nbrs;
            // up, right, down, left
            for (auto [dr, dc] : {std::pair{-1, 0}, {0, 1}, {1, 0}, {0, -1}}) {
                auto v = at(r + dr, c + dc);
                if (v && *v != grid_vertex(grid, {r, c})) nbrs.push_back(*v);
            }
            // 1xN / Nx1 torus would repeat a neighbor; excluded by the size check
            rot[grid_vertex(grid, {r, c})] = std::move(nbrs);
        }
    }
    return from_rotation_table(rot);
}

namespace {

bool cells_connected(const GridSpec& grid, const std::set<Cell>& cells) {
    if (cells.size() <= 1) return true;
    const bool torus = grid.topology == GridTopology::torus;
    auto norm = [&](Cell c) {
        if (torus) {
            c.row = ((c.row % grid.rows) + grid.rows) % grid.rows;
            c.col = ((c.col % grid.cols) + grid.cols) % grid.cols;
        }
        return c;
    };
    std::set<Cell> seen{*cells.begin()};
    std::deque<Cell> q{*cells.begin()};
    while (!q.empty()) {
        Cell c = q.front();
        q.pop_front();
        for (auto [dr, dc] : {std::pair{-1, 0}, {0, 1}, {1, 0}, {0, -1}}) {
            Cell n = norm({c.row + dr, c.col + dc});
            if (n.row < 0 || n.col < 0 || n.row >= grid.rows || n.col >= grid.cols) continue;
            if (cells.count(n) && seen.insert(n).second) q.push_back(n);
        }
    }
    return seen.size() == cells.size();
}

// connectedness of a cell-set difference, the piercing test for regions
bool difference_connected(const GridSpec& grid, const std::set<Cell>& a,
                          const std::set<Cell>& b) {
    std::set<Cell> diff;
    for (const Cell& c : a)
        if (!b.count(c)) diff.insert(c);
    return cells_connected(grid, diff);
}

} // namespace

BuiltSystem build_system(const GridSpec& grid, const std::vector<Region>& h_regions,
                         const std::vector<Region>& k_regions) {
    BuiltSystem out;
    out.system.host = grid_host(grid);
    for (int r = 0; r < grid.rows; ++r)
        for (int c = 0; c < grid.cols; ++c)
            out.system.vertex_names[grid_vertex(grid, {r, c})] = grid_vertex_name({r, c});

    auto add = [&](const std::vector<Region>& regs,
                   std::map<std::string, std::set<VertexId>>& fam) {
        for (const Region& reg : regs) {
            if (reg.cells.empty())
                throw StructuralError("region " + reg.name + " is empty");
            for (const Cell& c : reg.cells)
                if (c.row < 0 || c.col < 0 || c.row >= grid.rows || c.col >= grid.cols)
                    throw StructuralError("region " + reg.name + " leaves the grid");
            if (!cells_connected(grid, reg.cells))
                throw StructuralError("region " + reg.name + " is disconnected on the grid");
            std::set<VertexId> verts;
            for (const Cell& c : reg.cells) verts.insert(grid_vertex(grid, c));
            if (!fam.emplace(reg.name, std::move(verts)).second)
                throw StructuralError("duplicate region name " + reg.name);
        }
    };
    add(h_regions, out.system.H);
    add(k_regions, out.system.K);
    out.system.validate();
    out.witness = find_crossing(out.system);
    out.cross_free = !out.witness.has_value();
    return out;
}

std::vector<Region> random_rectangles(const GridSpec& grid, int count, std::uint64_t seed,
                                      const std::string& name_prefix) {
    if (grid.topology != GridTopology::plane)
        throw StructuralError("random_rectangles: plane topology only");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) { // inclusive
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    std::vector<Region> out;
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0;; ++attempt) {
            int r1 = pick(0, grid.rows - 1), r2 = pick(0, grid.rows - 1);
            int c1 = pick(0, grid.cols - 1), c2 = pick(0, grid.cols - 1);
            if (r1 > r2) std::swap(r1, r2);
            if (c1 > c2) std::swap(c1, c2);
            std::set<Cell> cells;
            for (int r = r1; r <= r2; ++r)
                for (int c = c1; c <= c2; ++c) cells.insert({r, c});
            bool ok = true;
            for (const Region& prev : out) {
                if (!difference_connected(grid, prev.cells, cells) ||
                    !difference_connected(grid, cells, prev.cells)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                out.push_back({name_prefix + std::to_string(i), std::move(cells)});
                break;
            }
            if (attempt > 500)
                throw StructuralError("random_rectangles: resampling failed to converge");
        }
    }
    return out;
}

GraphSystem random_rectangle_system(const GridSpec& grid, int count, std::uint64_t seed) {
    auto built = build_system(grid, random_rectangles(grid, count, seed));
    return std::move(built.system);
}

std::vector<Region> random_torus_regions(const GridSpec& grid, int count, std::uint64_t seed,
                                         const std::string& name_prefix) {
    if (grid.topology != GridTopology::torus)
        throw StructuralError("random_torus_regions: torus topology only");
    std::mt19937_64 rng(seed);
    auto pick = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    std::vector<Region> out;
    std::vector<std::set<Cell>> sets;
    auto make_patch = [&]() {
        // wrapped rectangle: height/width may span the whole cycle
        int h = pick(1, grid.rows);
        int w = pick(1, grid.cols);
        if (h == grid.rows && w == grid.cols) w = grid.cols - 1; // not the whole torus
        int r0 = pick(0, grid.rows - 1);
        int c0 = pick(0, grid.cols - 1);
        std::set<Cell> cells;
        for (int dr = 0; dr < h; ++dr)
            for (int dc = 0; dc < w; ++dc)
                cells.insert({(r0 + dr) % grid.rows, (c0 + dc) % grid.cols});
        return cells;
    };
    for (int i = 0; i < count; ++i) {
        for (int attempt = 0;; ++attempt) {
            std::set<Cell> cells = make_patch();
            // keep the family cross-free: verify the candidate against the
            // accepted regions on a trial system
            std::vector<Region> trial = out;
            trial.push_back({name_prefix + std::to_string(i), cells});
            bool ok = true;
            try {
                ok = build_system(grid, trial).cross_free;
            } catch (const StructuralError&) {
                ok = false;
            }
            if (ok) {
                out.push_back({name_prefix + std::to_string(i), std::move(cells)});
                break;
            }
            if (attempt > 200) {
                // fall back to a single cell duplicate-safe patch
                std::set<Cell> one{{pick(0, grid.rows - 1), pick(0, grid.cols - 1)}};
                std::vector<Region> t2 = out;
                t2.push_back({name_prefix + std::to_string(i), one});
                if (build_system(grid, t2).cross_free) {
                    out.push_back({name_prefix + std::to_string(i), std::move(one)});
                    break;
                }
            }
            if (attempt > 400)
                throw StructuralError("random_torus_regions: resampling failed to converge");
        }
    }
    return out;
}

} // namespace gsup
