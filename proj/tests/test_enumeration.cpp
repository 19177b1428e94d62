#include <doctest.h>

#include "test_helpers.hpp"

#include <cayley/enumeration.hpp>

using namespace cayley;

TEST_CASE("build_finite") {
    SUBCASE("prism: 6 vertices, matches the hand-built graph") {
        auto p = parse_presentation("<a,b | b^2, a^3, (ab)^2>");
        auto g = build_finite(p);
        CHECK(g.num_vertices() == 6);
        CHECK(g.is_complete_graph());
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(testutil::hand_prism()));
    }
    SUBCASE("3-cube: 8 vertices, matches the group-table graph") {
        auto p = parse_presentation("<b,c,d | b^2,c^2,d^2,(bc)^2,(cd)^2,(db)^2>");
        auto g = build_finite(p);
        CHECK(g.num_vertices() == 8);
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(testutil::hand_cube()));
    }
    SUBCASE("Z6 = <a,b | b^2, a^3, (ab a^-1 b)^1> is the prism too") {
        auto p = parse_presentation("<a,b | b^2, a^3, a b a^-1 b>");
        auto g = build_finite(p);
        CHECK(g.num_vertices() == 6);
    }
    SUBCASE("infinite free product exhausts the budget") {
        auto p = parse_presentation("<a,b | b^2, a^3>");
        CHECK_THROWS_AS(build_finite(p, 500), EnumerationError);
    }
}

TEST_CASE("build_ball") {
    SUBCASE("free product <a,b | b^2, a^3>: triangles joined by b-edges") {
        auto p = parse_presentation("<a,b | b^2, a^3>");
        auto r = build_ball(p, {4, 100000, 0});
        auto dist = r.graph.bfs_dist(r.graph.root);
        for (int v = 0; v < r.graph.num_vertices(); ++v) {
            if (dist[v] == kNone || dist[v] > 4) continue;
            CHECK(r.graph.complete(v));
            CHECK(trace_word(r.graph, v, parse_word(p.alphabet, "a^3")).kind ==
                  TraceKind::Closed);
        }
        // interior degree 3 and proper colouring
        CHECK(r.graph.properly_colored());
    }
    SUBCASE("finite presentation saturates to the full graph") {
        auto p = parse_presentation("<a,b | b^2, a^3, (ab)^2>");
        auto r = build_ball(p, {10, 100000, 0});
        CHECK(r.graph.is_complete_graph());
        CHECK(r.graph.num_vertices() == 6);
        CHECK(rooted_canonical_form(extract_ball(r.graph, 10)) ==
              rooted_canonical_form(extract_ball(build_finite(p), 10)));
    }
    SUBCASE("budget exhaustion is an error, never a wrong ball") {
        auto p = parse_presentation("<a,b | b^2, a^3>");
        CHECK_THROWS_AS(build_ball(p, {6, 30, 0}), EnumerationError);
    }
    SUBCASE("hexagonal-lattice-like row stabilises (euclidean case)") {
        auto p = parse_presentation("<a,b | b^2, (a^2 b)^2>");
        auto r = build_ball(p, {5, 200000, 0});
        auto dist = r.graph.bfs_dist(r.graph.root);
        int inner = 0;
        for (int v = 0; v < r.graph.num_vertices(); ++v)
            if (dist[v] != kNone && dist[v] <= 5) {
                ++inner;
                CHECK(r.graph.complete(v));
            }
        CHECK(inner > 10);
    }
}
