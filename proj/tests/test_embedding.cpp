#include <doctest.h>

#include "test_helpers.hpp"

#include <cayley/embedding.hpp>

using namespace cayley;

TEST_CASE("prism embedding from the all-preserve spin") {
    auto g = testutil::hand_prism();
    auto sa = SpinAssignment::from_string(g.alphabet, "a:P,b:P");
    SUBCASE("consistency holds") { CHECK(check_consistency(g, sa).pass); }
    SUBCASE("face census is {3,3,4,4,4}") {
        auto rs = derive_rotation_system(g, sa);
        auto census = trace_faces(g, rs);
        CHECK(census.open_count == 0);
        REQUIRE(census.closed_histogram.count(3));
        REQUIRE(census.closed_histogram.count(4));
        CHECK(census.closed_histogram.at(3) == 2);
        CHECK(census.closed_histogram.at(4) == 3);
        auto pl = planarity_verify(g, census);
        CHECK(pl.pass);
    }
    SUBCASE("declaring b reverse fails at a b-edge") {
        auto bad = SpinAssignment::from_string(g.alphabet, "a:P,b:R");
        auto r = check_consistency(g, bad);
        CHECK(!r.pass);
        CHECK(r.color == 1);
    }
}

TEST_CASE("cube embedding from the all-reverse spin") {
    auto g = testutil::hand_cube();
    auto sa = SpinAssignment::all(g.alphabet, SpinClass::Reverse);
    CHECK(check_consistency(g, sa).pass);
    auto rs = derive_rotation_system(g, sa);
    auto census = trace_faces(g, rs);
    CHECK(census.open_count == 0);
    REQUIRE(census.closed_histogram.size() == 1);
    CHECK(census.closed_histogram.at(4) == 6);  // six 4-faces
    CHECK(planarity_verify(g, census).pass);
    SUBCASE("all-preserve is not a plane embedding of the cube") {
        auto sp = SpinAssignment::all(g.alphabet, SpinClass::Preserve);
        CHECK(propagate_spin(g, sp).consistent);  // propagation alone is consistent
        auto census2 = trace_faces(g, derive_rotation_system(g, sp));
        CHECK(!planarity_verify(g, census2).pass);  // but the genus is wrong
        CHECK(!check_consistency(g, sp).pass);      // so the class check fails
    }
}

TEST_CASE("spin flip symmetry: mirrored rotations give the same census") {
    auto g = testutil::hand_prism();
    auto sa = SpinAssignment::from_string(g.alphabet, "a:P,b:P");
    auto rs = derive_rotation_system(g, sa);
    auto mirrored = rs;
    for (auto& ord : mirrored.order) std::reverse(ord.begin(), ord.end());
    auto c1 = trace_faces(g, rs);
    auto c2 = trace_faces(g, mirrored);
    CHECK(c1.closed_histogram == c2.closed_histogram);
}

TEST_CASE("open walks flagged on a truncated ball") {
    auto g = extract_ball(testutil::hand_prism(), 1);
    auto sa = SpinAssignment::from_string(g.alphabet, "a:P,b:P");
    auto census = trace_faces(g, derive_rotation_system(g, sa));
    CHECK(census.open_count > 0);
}

TEST_CASE("single vertex with three darts has one rotation and a gap-free order") {
    Alphabet ab;
    for (const char* n : {"b", "c", "d"}) ab.labels.push_back({n, true});
    ColoredGraph g(ab);
    g.add_vertex();
    for (int i = 0; i < 3; ++i) {
        int w = g.add_vertex(true);
        g.set_edge(0, i, w);
    }
    g.boundary[0] = 0;
    auto rs = derive_rotation_system(g, SpinAssignment::all(ab, SpinClass::Preserve));
    CHECK(rs.order[0].size() == 3);
}

TEST_CASE("dart partition covers every dart exactly once") {
    auto g = testutil::hand_cube();
    auto rs = derive_rotation_system(g, SpinAssignment::all(g.alphabet, SpinClass::Reverse));
    auto census = trace_faces(g, rs);
    size_t total = 0;
    for (const auto& f : census.faces) total += f.darts.size();
    CHECK(total == 24);  // 12 edges, 2 darts each
}
