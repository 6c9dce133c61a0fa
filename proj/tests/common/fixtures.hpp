#pragma once

// Shared test fixtures and independent oracles.  Oracles here deliberately
// avoid the library's traversal code: faces are counted with the opposite
// orientation convention, connectivity and blocking are re-implemented on
// plain adjacency sets.

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gsup/chords.hpp"
#include "gsup/embedding.hpp"
#include "gsup/graph_system.hpp"
#include "gsup/regions.hpp"

namespace fixtures {

using namespace gsup;

// ── fixture systems ─────────────────────────────────────────────────

/// K_{1,4}: center 0, leaves 1..4 in ccw order a,b,c,d.
/// H1 = {center,a,b}, H2 = {center,c,d}: cross-free but piercing.
inline GraphSystem star_k14() {
    GraphSystem sys;
    sys.host = from_rotation_table({{0, {1, 2, 3, 4}}, {1, {0}}, {2, {0}}, {3, {0}}, {4, {0}}});
    sys.vertex_names = {{0, "v"}, {1, "a"}, {2, "b"}, {3, "c"}, {4, "d"}};
    sys.H["H1"] = {0, 1, 2};
    sys.H["H2"] = {0, 3, 4};
    return sys;
}

/// Same star with leaves interleaved: a,c,b,d around the center.
inline GraphSystem star_k14_interleaved() {
    GraphSystem sys = star_k14();
    sys.host = from_rotation_table({{0, {1, 3, 2, 4}}, {1, {0}}, {2, {0}}, {3, {0}}, {4, {0}}});
    return sys;
}

/// 3x3 torus grid with the three row cycles and three column cycles:
/// non-piercing but not cross-free.
inline GraphSystem torus_cycles() {
    GridSpec grid{3, 3, GridTopology::torus};
    std::vector<Region> regs;
    for (int r = 0; r < 3; ++r)
        regs.push_back({"row" + std::to_string(r), {{r, 0}, {r, 1}, {r, 2}}});
    for (int c = 0; c < 3; ++c)
        regs.push_back({"col" + std::to_string(c), {{0, c}, {1, c}, {2, c}}});
    return build_system(grid, regs).system;
}

/// Planar six-vertex host with members H1={a,b,c,d}, H2={c,d,e},
/// H3={a,b,f,e}, H4={a,b,c,e}; cross-free, genus 0.
inline GraphSystem six_vertex_system() {
    GraphSystem sys;
    // a=0 b=1 c=2 d=3 e=4 f=5; edges ab bc cd ce ae ef
    sys.host = from_rotation_table({
        {0, {1, 4}},    // a: b, e
        {1, {0, 2}},    // b: a, c
        {2, {3, 1, 4}}, // c: d, b, e
        {3, {2}},       // d: c
        {4, {2, 0, 5}}, // e: c, a, f
        {5, {4}},       // f: e
    });
    sys.vertex_names = {{0, "a"}, {1, "b"}, {2, "c"}, {3, "d"}, {4, "e"}, {5, "f"}};
    sys.H["H1"] = {0, 1, 2, 3};
    sys.H["H2"] = {2, 3, 4};
    sys.H["H3"] = {0, 1, 5, 4};
    sys.H["H4"] = {0, 1, 2, 4};
    return sys;
}

/// Planar intersection system: H'1={a,b,c}, H'2={a,b,c,e}, H'3={c,e,f},
/// H'4={b,e,d}; K1={c,d}, K2={b,f}, K3={e,d}.  Cross-free in H and in K.
inline GraphSystem six_vertex_intersection_system() {
    GraphSystem sys;
    // a=0 b=1 c=2 d=3 e=4 f=5; edges ab bc be bf ce cd de ef
    sys.host = from_rotation_table({
        {0, {1}},          // a: b
        {1, {4, 2, 0, 5}}, // b: e, c, a, f
        {2, {1, 3, 4}},    // c: b, d, e
        {3, {2, 4}},       // d: c, e
        {4, {2, 3, 1, 5}}, // e: c, d, b, f
        {5, {4, 1}},       // f: e, b
    });
    sys.vertex_names = {{0, "a"}, {1, "b"}, {2, "c"}, {3, "d"}, {4, "e"}, {5, "f"}};
    sys.H["H1"] = {0, 1, 2};
    sys.H["H2"] = {0, 1, 2, 4};
    sys.H["H3"] = {2, 4, 5};
    sys.H["H4"] = {1, 4, 3};
    sys.K["K1"] = {2, 3};
    sys.K["K2"] = {1, 5};
    sys.K["K3"] = {4, 3};
    return sys;
}

inline void color_all(GraphSystem& sys, Color c) {
    for (VertexId v : sys.host.vertices()) sys.coloring[v] = c;
}

/// Deterministic pseudo-random coloring; roughly red_ratio red.
inline void color_random(GraphSystem& sys, std::uint64_t seed, int red_percent) {
    std::mt19937_64 rng(seed);
    for (VertexId v : sys.host.vertices())
        sys.coloring[v] = (static_cast<int>(rng() % 100) < red_percent) ? Color::red
                                                                        : Color::blue;
}

// ── independent oracles ─────────────────────────────────────────────

/// Face count via the opposite walking convention (twin of the rotation
/// predecessor); orbit counts agree with the library's face trace but the
/// code path is disjoint.
inline long face_count_oracle(const EmbeddedGraph& g) {
    std::map<DartId, DartId> nxt;
    for (VertexId v : g.vertices()) {
        const auto& rot = g.rotation(v);
        const std::size_t n = rot.size();
        for (std::size_t i = 0; i < n; ++i)
            nxt[rot[i]] = g.twin(rot[(i + n - 1) % n]);
    }
    std::set<DartId> seen;
    long faces = 0;
    for (const auto& [d, _] : nxt) {
        if (seen.count(d)) continue;
        ++faces;
        DartId c = d;
        while (seen.insert(c).second) c = nxt.at(c);
    }
    return faces;
}

inline int genus_oracle(const EmbeddedGraph& g) {
    long v = static_cast<long>(g.vertex_count());
    long e = static_cast<long>(g.edge_count());
    long f = e == 0 ? 1 : face_count_oracle(g);
    return static_cast<int>((2 - v + e - f) / 2);
}

/// Adjacency-set connectivity of a family inside cycle-plus-chords.
inline bool connected_in_cycle_plus_chords(const std::vector<VertexId>& cycle,
                                           const ChordSet& chords,
                                           const std::set<VertexId>& family) {
    if (family.size() <= 1) return true;
    std::map<VertexId, std::set<VertexId>> adj;
    const std::size_t n = cycle.size();
    for (std::size_t i = 0; i < n; ++i) {
        adj[cycle[i]].insert(cycle[(i + 1) % n]);
        adj[cycle[(i + 1) % n]].insert(cycle[i]);
    }
    for (const Chord& c : chords.chords) {
        adj[c.a].insert(c.b);
        adj[c.b].insert(c.a);
    }
    std::set<VertexId> seen{*family.begin()};
    std::deque<VertexId> q{*family.begin()};
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop_front();
        for (VertexId w : adj[v])
            if (family.count(w) && seen.insert(w).second) q.push_back(w);
    }
    return seen.size() == family.size();
}

/// Strict circular interleaving test for two chords by positions.
inline bool chords_cross(const std::vector<VertexId>& cycle, const Chord& x, const Chord& y) {
    auto pos = [&](VertexId v) {
        for (std::size_t i = 0; i < cycle.size(); ++i)
            if (cycle[i] == v) return static_cast<int>(i);
        return -1;
    };
    int a = pos(x.a), b = pos(x.b), c = pos(y.a), d = pos(y.b);
    if (a < 0 || b < 0 || c < 0 || d < 0) return false;
    auto between = [&](int lo, int hi, int q) { // strictly inside arc lo->hi (cw)
        const int n = static_cast<int>(cycle.size());
        for (int k = (lo + 1) % n; k != hi; k = (k + 1) % n)
            if (k == q) return true;
        return false;
    };
    if (a == c || a == d || b == c || b == d) return false; // shared endpoint: no crossing
    bool c_in = between(a, b, c);
    bool d_in = between(a, b, d);
    return c_in != d_in;
}

/// Independent blocking predicate: both open arcs of the chord contain a
/// family vertex and neither endpoint belongs to the family.
inline bool blocks_oracle(const std::vector<VertexId>& cycle, const std::set<VertexId>& fam,
                          VertexId x, VertexId y) {
    if (fam.count(x) || fam.count(y)) return false;
    const int n = static_cast<int>(cycle.size());
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
        if (cycle[k] == x) i = k;
        if (cycle[k] == y) j = k;
    }
    bool side1 = false, side2 = false;
    for (int k = (i + 1) % n; k != j; k = (k + 1) % n) side1 |= fam.count(cycle[k]) != 0;
    for (int k = (j + 1) % n; k != i; k = (k + 1) % n) side2 |= fam.count(cycle[k]) != 0;
    return side1 && side2;
}

/// Brute-force abab check over all position 4-tuples.
inline bool abab_free_oracle(const std::vector<VertexId>& cycle, const std::set<VertexId>& f1,
                             const std::set<VertexId>& f2) {
    const int n = static_cast<int>(cycle.size());
    auto only1 = [&](int i) { return f1.count(cycle[i]) && !f2.count(cycle[i]); };
    auto only2 = [&](int i) { return f2.count(cycle[i]) && !f1.count(cycle[i]); };
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    if (only1(a) && only2(b) && only1(c) && only2(d)) return false;
                    if (only2(a) && only1(b) && only2(c) && only1(d)) return false;
                }
    return true;
}

// ── random instance generators ──────────────────────────────────────

/// Random connected multigraph with a random rotation system; up to
/// max_vertices vertices, some parallel edges.
inline EmbeddedGraph random_embedded_graph(std::uint64_t seed, int max_vertices) {
    std::mt19937_64 rng(seed);
    int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_vertices - 1));
    EmbeddedGraph g;
    std::vector<VertexId> verts;
    for (int i = 0; i < n; ++i) verts.push_back(g.add_vertex());
    for (int i = 1; i < n; ++i) g.add_edge(verts[i], verts[static_cast<int>(rng() % i)]);
    int extra = static_cast<int>(rng() % static_cast<std::uint64_t>(n + 1));
    for (int i = 0; i < extra; ++i) {
        VertexId u = verts[static_cast<int>(rng() % n)];
        VertexId v = verts[static_cast<int>(rng() % n)];
        if (u == v) continue; // loops only via contraction
        g.add_edge(u, v);
    }
    // shuffle every rotation
    for (VertexId v : g.vertices()) {
        auto rot = g.rotation(v);
        std::shuffle(rot.begin(), rot.end(), rng);
        g.set_rotation(v, rot);
    }
    return g;
}

/// Random abab-free cycle system.  Candidate families are random subsets
/// of random windows, kept only when abab-free against every accepted
/// family; a single arc (always compatible) is the fallback.
inline CycleSystem random_cycle_system(std::uint64_t seed, int max_n, int max_families) {
    std::mt19937_64 rng(seed);
    int n = 3 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n - 2));
    CycleSystem cs;
    for (int i = 0; i < n; ++i) cs.cycle.push_back(i);
    int nf = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_families));
    for (int f = 0; f < nf; ++f) {
        std::set<VertexId> fam;
        for (int attempt = 0; attempt < 30; ++attempt) {
            std::set<VertexId> cand;
            int start = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            for (int k = 0; k < len; ++k)
                if (rng() % 2 == 0) cand.insert(cs.cycle[(start + k) % n]);
            if (cand.empty()) continue;
            bool ok = true;
            for (const auto& [_, other] : cs.families)
                if (!abab_free_oracle(cs.cycle, cand, other)) {
                    ok = false;
                    break;
                }
            if (ok) {
                fam = std::move(cand);
                break;
            }
        }
        if (fam.empty()) {
            // arcs never interleave with anything
            int start = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
            for (int k = 0; k < len; ++k) fam.insert(cs.cycle[(start + k) % n]);
        }
        cs.families["F" + std::to_string(f)] = std::move(fam);
    }
    return cs;
}

} // namespace fixtures
