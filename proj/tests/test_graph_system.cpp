#include <doctest.h>

#include "common/fixtures.hpp"
#include "gsup/graph_system.hpp"
#include "gsup/regions.hpp"

using namespace gsup;

TEST_CASE("reduced graph: disjoint members leave the host intact") {
    auto sys = fixtures::six_vertex_system();
    sys.H["D1"] = {3};
    sys.H["D2"] = {5};
    auto red = reduced_graph(sys, "D1", "D2");
    CHECK(red.graph.vertex_count() == sys.host.vertex_count());
    CHECK(red.graph.edge_count() == sys.host.edge_count());
}

TEST_CASE("reduced graph: identical members on a tree collapse to a point") {
    GraphSystem sys;
    sys.host = from_rotation_table({{0, {1}}, {1, {0, 2}}, {2, {1}}});
    sys.H["A"] = {0, 1, 2};
    sys.H["B"] = {0, 1, 2};
    auto red = reduced_graph(sys, "A", "B");
    CHECK(red.graph.vertex_count() == 1);
    CHECK(red.graph.edge_count() == 0);
    for (VertexId v : {0, 1, 2}) CHECK(red.image.at(v) == red.image.at(0));
}

TEST_CASE("reduced graph: row and column cycle meet in one vertex, host unchanged") {
    auto sys = fixtures::torus_cycles();
    auto red = reduced_graph(sys, "row0", "col0");
    CHECK(red.graph.vertex_count() == 9);
    CHECK(red.graph.edge_count() == 18);
}

TEST_CASE("cross-free at the star center depends on the leaf order") {
    auto ok = fixtures::star_k14();
    CHECK_FALSE(crossing_at(ok, "H1", "H2", 0).has_value());

    auto bad = fixtures::star_k14_interleaved();
    auto w = crossing_at(bad, "H1", "H2", 0);
    REQUIRE(w.has_value());
    CHECK(w->at == 0);
    // the four witness darts alternate between the two members
    std::set<VertexId> h1_only{1, 2}, h2_only{3, 4};
    CHECK(h1_only.count(w->reduced_neighbors[0]) + h2_only.count(w->reduced_neighbors[0]) == 1);
}

TEST_CASE("cross-free at is vacuous off the shared set and symmetric on it") {
    auto sys = fixtures::star_k14_interleaved();
    CHECK_FALSE(crossing_at(sys, "H1", "H2", 1).has_value()); // leaf only in H1
    CHECK(crossing_at(sys, "H1", "H2", 0).has_value());
    CHECK(crossing_at(sys, "H2", "H1", 0).has_value());
}

TEST_CASE("torus row/column cycles cross at their shared vertex") {
    auto sys = fixtures::torus_cycles();
    auto w = crossing_at(sys, "row0", "col0", grid_vertex({3, 3, GridTopology::torus}, {0, 0}));
    REQUIRE(w.has_value());
}

TEST_CASE("full scan: disjoint members are cross-free, the torus cycles are not") {
    GraphSystem disjoint;
    disjoint.host = from_rotation_table({{0, {1}}, {1, {0, 2}}, {2, {1, 3}}, {3, {2}}});
    disjoint.H["A"] = {0, 1};
    disjoint.H["B"] = {2, 3};
    CHECK(is_cross_free(disjoint));

    auto torus = fixtures::torus_cycles();
    auto w = find_crossing(torus);
    REQUIRE(w.has_value());

    CHECK(is_cross_free(fixtures::six_vertex_system()));
    CHECK(is_cross_free(fixtures::six_vertex_intersection_system()));
}

TEST_CASE("non-piercing: star members pierce, nested members do not, torus cycles do not") {
    auto star = fixtures::star_k14();
    auto w = find_piercing(star);
    REQUIRE(w.has_value());
    CHECK(w->components.size() == 2);

    GraphSystem nested;
    nested.host = from_rotation_table({{0, {1}}, {1, {0, 2}}, {2, {1, 3}}, {3, {2}}});
    nested.H["inner"] = {0, 1};
    nested.H["outer"] = {0, 1, 2, 3}; // outer minus inner stays connected
    CHECK(is_non_piercing(nested));

    CHECK(is_non_piercing(fixtures::torus_cycles()));
}

TEST_CASE("depth profile, maximality and twins") {
    GraphSystem sys;
    sys.host = from_rotation_table({{0, {1}}, {1, {0, 2}}, {2, {1}}});
    sys.H["E"] = {0, 1};
    auto prof = depth_profile(sys, FamilyScope::H);
    CHECK(prof.vertex_depth.at(0) == 1);
    CHECK(prof.vertex_depth.at(1) == 1);
    CHECK(prof.vertex_depth.at(2) == 0);

    // depth-0 vertices are never maximal; endpoints of a full edge neither
    CHECK_FALSE(is_maximal_vertex(sys, 2, FamilyScope::H));
    CHECK_FALSE(is_maximal_vertex(sys, 0, FamilyScope::H));
    CHECK_FALSE(is_maximal_vertex(sys, 1, FamilyScope::H));
    CHECK(are_twins(sys, 0, 1, FamilyScope::H));
    auto tw = adjacent_twins(sys, FamilyScope::H);
    REQUIRE(tw.size() == 1);
    CHECK(tw[0] == std::pair<VertexId, VertexId>{0, 1});
}

TEST_CASE("every torus-grid vertex is maximal for the row/column system") {
    auto sys = fixtures::torus_cycles();
    auto prof = depth_profile(sys, FamilyScope::H);
    for (VertexId v : sys.host.vertices()) CHECK(prof.vertex_depth.at(v) == 2);
    for (auto [d, _] : sys.host.edges()) CHECK(prof.edge_depth.at(d) == 1);
    CHECK(maximal_vertices(sys, FamilyScope::H).size() == 9);
}

TEST_CASE("reduced graphs never raise the genus") {
    auto sys = fixtures::torus_cycles();
    for (const auto& [a, _] : sys.H)
        for (const auto& [b, __] : sys.H) {
            if (a >= b) continue;
            auto red = reduced_graph(sys, a, b);
            if (red.graph.connected()) CHECK(red.graph.genus() <= sys.host.genus());
        }
}

TEST_CASE("law: planar non-piercing systems are cross-free") {
    int checked = 0;
    for (std::uint64_t seed = 0; seed < 120; ++seed) {
        GridSpec grid{4 + static_cast<int>(seed % 4), 4 + static_cast<int>((seed / 2) % 4),
                      GridTopology::plane};
        auto sys = random_rectangle_system(grid, 2 + static_cast<int>(seed % 5), seed);
        REQUIRE(is_non_piercing(sys));
        CHECK(is_cross_free(sys));
        ++checked;
    }
    CHECK(checked == 120);
}

TEST_CASE("crossing witness survives rotation re-anchoring") {
    auto sys = fixtures::torus_cycles();
    // rotate every rotation list by one slot: same cyclic order
    for (VertexId v : sys.host.vertices()) {
        auto rot = sys.host.rotation(v);
        std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        sys.host.set_rotation(v, rot);
    }
    CHECK(find_crossing(sys).has_value());
    CHECK_FALSE(is_cross_free(sys));

    auto ok = fixtures::six_vertex_system();
    for (VertexId v : ok.host.vertices()) {
        auto rot = ok.host.rotation(v);
        if (rot.size() > 1) std::rotate(rot.begin(), rot.begin() + 1, rot.end());
        ok.host.set_rotation(v, rot);
    }
    CHECK(is_cross_free(ok));
}
