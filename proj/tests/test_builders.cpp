#include <doctest.h>

#include "test_helpers.hpp"

#include <cayley/analysis.hpp>
#include <cayley/recipes.hpp>

using namespace cayley;

namespace {

// cross-builder oracle: induced radius-r balls must agree byte-for-byte
void check_agree(const ColoredGraph& geo, const ColoredGraph& oracle, int r,
                 const std::string& what) {
    auto a = rooted_canonical_form(extract_ball(geo, r));
    auto b = rooted_canonical_form(extract_ball(oracle, r));
    CHECK_MESSAGE(a == b, what);
}

void check_all_relators(const ColoredGraph& g, const Presentation& p, int radius,
                        const std::string& what) {
    auto rc = verify_relators(g, p, radius);
    std::string msg = what + ": relator open at vertex " + std::to_string(rc.vertex);
    CHECK_MESSAGE(rc.pass, msg);
}

}  // namespace

TEST_CASE("truncated tilings") {
    SUBCASE("(3,2) is the prism with Euler count 6-9+5") {
        auto g = build_truncated_tiling(3, 2, 6);
        CHECK(g.is_complete_graph());
        CHECK(g.num_vertices() == 6);
        CHECK(edge_count(g) == 9);
        auto census = trace_faces(
            g, derive_rotation_system(g, SpinAssignment::all(g.alphabet, SpinClass::Preserve)));
        CHECK(census.closed_histogram == std::map<int, int>{{3, 2}, {4, 3}});
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(testutil::hand_prism()));
    }
    SUBCASE("(3,3) is the 12-vertex truncated tetrahedron = Todd-Coxeter graph") {
        auto g = build_truncated_tiling(3, 3, 8);
        CHECK(g.num_vertices() == 12);
        auto oracle = build_finite(parse_presentation("<a,b | b^2, a^3, (ab)^3>"));
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(oracle));
    }
    SUBCASE("(4,3) is the 24-vertex truncated cube") {
        auto g = build_truncated_tiling(4, 3, 10);
        CHECK(g.num_vertices() == 24);
        auto oracle = build_finite(parse_presentation("<a,b | b^2, a^4, (ab)^3>"));
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(oracle));
    }
    SUBCASE("(6,3) is an infinite ball, all interior faces sized 6") {
        auto g = build_truncated_tiling(6, 3, 5);
        CHECK(!g.is_complete_graph());
        auto p = parse_presentation("<a,b | b^2, a^6, (ab)^3>");
        check_all_relators(g, p, 5, "tiling(6,3)");
        auto census = trace_faces(
            g, derive_rotation_system(g, SpinAssignment::all(g.alphabet, SpinClass::Preserve)));
        for (auto [k, cnt] : census.closed_histogram) CHECK(k == 6);
        check_agree(g, build_oracle_ball(p, 4), 4, "tiling(6,3) vs enumeration");
    }
    SUBCASE("(5,2) pentagon prism via both routes") {
        auto g = build_truncated_tiling(5, 2, 8);
        auto oracle = build_finite(parse_presentation("<a,b | b^2, a^5, (ab)^2>"));
        CHECK(g.num_vertices() == 10);
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(oracle));
    }
}

TEST_CASE("flip_alternate_orientation") {
    SUBCASE("tiling (3,4) flipped satisfies <a,b | b^2, a^3, (a b a^-1 b)^2>") {
        auto g = flip_alternate_orientation(build_truncated_tiling(3, 4, 8));
        auto p = parse_presentation("<a,b | b^2, a^3, (a b a^-1 b)^2>");
        auto oracle = build_finite(p);
        CHECK(rooted_canonical_form(extract_ball(g, 8)) ==
              rooted_canonical_form(extract_ball(oracle, 8)));
    }
    SUBCASE("flipping twice restores the graph") {
        auto g = build_truncated_tiling(3, 4, 6);
        auto tw = flip_alternate_orientation(flip_alternate_orientation(g));
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(tw));
    }
    SUBCASE("no b-edges is a parity error") {
        Alphabet ab;
        ab.labels.push_back({"a", false});
        ab.labels.push_back({"b", true});
        ColoredGraph g(ab);
        g.add_vertex();
        g.add_vertex();
        g.add_vertex();
        g.set_edge(0, 0, 1);
        g.set_edge(1, 0, 2);
        g.set_edge(2, 0, 0);
        CHECK_THROWS_AS(flip_alternate_orientation(g), ConstructionError);
    }
    SUBCASE("odd b-count on a cycle is a parity error") {
        auto g = build_truncated_tiling(3, 3, 6);  // (ab)^3 faces have 3 b's
        CHECK_THROWS_AS(flip_alternate_orientation(g), ConstructionError);
    }
}

TEST_CASE("parity_recolor") {
    SUBCASE("recoloured Aziv(2,2,2) cube satisfies the (ziii) relators") {
        auto cube = build_finite(
            parse_presentation("<b,c,d | b^2,c^2,d^2,(bc)^2,(cd)^2,(db)^2>"));
        auto g = parity_recolor(cube);
        auto ziii = parse_presentation("<b,c,d | b^2,c^2,d^2,(bc)^2,(b d c d)^1>");
        for (int v = 0; v < g.num_vertices(); ++v) {
            CHECK(trace_word(g, v, parse_word(g.alphabet, "(bc)^2")).kind == TraceKind::Closed);
            CHECK(trace_word(g, v, parse_word(g.alphabet, "b d c d")).kind == TraceKind::Closed);
        }
        CHECK(rooted_canonical_form(g) == rooted_canonical_form(build_finite(ziii)));
    }
    SUBCASE("recolouring twice restores the graph") {
        auto cube = testutil::hand_cube();
        auto tw = parity_recolor(parity_recolor(cube));
        CHECK(rooted_canonical_form(cube) == rooted_canonical_form(tw));
    }
    SUBCASE("recoloured cube is still vertex-transitive") {
        auto g = parity_recolor(testutil::hand_cube());
        CHECK(sabidussi_check(g, 3).pass);
    }
    SUBCASE("d-edges preserve spin afterwards") {
        auto g = parity_recolor(testutil::hand_cube());
        CHECK(check_consistency(g, SpinAssignment::from_string(g.alphabet, "b:R,c:R,d:P")).pass);
    }
}

TEST_CASE("hex strips") {
    SUBCASE("two-generator, same direction: Abi relators hold") {
        auto g = build_hex_strip(4, false, 6);  // n = 2
        auto p = parse_presentation("<a,b | b^2, a^2 b a^-2 b; (b a b a^-1)^2>");
        check_all_relators(g, p, 5, "hex strip bi");
        check_agree(g, build_oracle_ball(p, 4), 4, "hex bi vs enumeration");
    }
    SUBCASE("two-generator, alternating: Abiii relators hold") {
        auto g = build_hex_strip(4, true, 6);  // m = 2
        auto p = parse_presentation("<a,b | b^2, (a^2 b)^2; (ab)^4>");
        check_all_relators(g, p, 5, "hex strip biii");
        check_agree(g, build_oracle_ball(p, 4), 4, "hex biii vs enumeration");
    }
    SUBCASE("three-involution strip: AIIci relators, interior faces 6") {
        auto g = build_hex_strip3(4, 6);  // n = 2
        auto p = parse_presentation("<b,c,d | b^2, c^2, d^2, (bcd)^2; (bcdc)^2>");
        check_all_relators(g, p, 5, "hex strip 3");
        auto census = trace_faces(
            g, derive_rotation_system(g, SpinAssignment::all(g.alphabet, SpinClass::Preserve)));
        for (auto [k, cnt] : census.closed_histogram) CHECK(k == 6);
        check_agree(g, build_oracle_ball(p, 4), 4, "hex 3 vs enumeration");
    }
    SUBCASE("exactly two unbounded directions") {
        auto g = build_hex_strip(4, false, 7);
        CHECK(ends_estimate(g, 4) == 2);
    }
}

TEST_CASE("cycle tree") {
    auto g = build_cycle_tree(2, 6);
    auto p = parse_presentation("<a,z | z^2, (az)^2>");
    check_all_relators(g, p, 5, "cycle tree n=2");
    check_agree(g, build_oracle_ball(p, 4), 4, "cycle tree vs enumeration");
    SUBCASE("n=3 matches enumeration too") {
        auto h = build_cycle_tree(3, 5);
        auto q = parse_presentation("<a,z | z^2, (az)^3>");
        check_agree(h, build_oracle_ball(q, 4), 4, "cycle tree 3 vs enumeration");
    }
    SUBCASE("the (az)^n cycles bound faces") {
        auto rs = derive_rotation_system(
            g, SpinAssignment::from_string(g.alphabet, "a:P,z:P"));
        auto census = trace_faces(g, rs);
        int quads = census.closed_histogram.count(4) ? census.closed_histogram.at(4) : 0;
        CHECK(quads > 0);
    }
}

TEST_CASE("digon necklace core") {
    auto g = build_digon_necklace(2, "a", "d");
    CHECK(g.num_vertices() == 4);
    CHECK(g.is_complete_graph());
    for (int v = 0; v < 4; ++v) {
        CHECK(trace_word(g, v, parse_word(g.alphabet, "a^2")).kind == TraceKind::Closed);
        CHECK(trace_word(g, v, parse_word(g.alphabet, "(ad)^2")).kind == TraceKind::Closed);
    }
    // oracle: a kept as an order-2 non-involution so its digon dart pairs
    // survive (the parser would fold a^2 into an involution flag)
    Presentation p;
    p.alphabet.labels.push_back({"a", false});
    p.alphabet.labels.push_back({"d", true});
    p.face_relators.push_back(parse_word(p.alphabet, "a a"));
    p.face_relators.push_back(parse_word(p.alphabet, "(ad)^2"));
    auto oracle = build_finite(p);
    CHECK(rooted_canonical_form(g) == rooted_canonical_form(oracle));
}

TEST_CASE("mohar amalgamation: AIa2i at (3,2)") {
    const auto& e = entry_by_id(20);
    std::map<std::string, long long> P{{"n", 3}, {"m", 2}};
    auto geo = run_recipe(e, P, "", 4);
    auto inst = instantiate_entry(e, P);
    check_all_relators(geo, inst, 4, "AIa2i");
    SUBCASE("oracle agreement at radius 4") {
        auto oracle = build_oracle_ball(inst, 4);
        check_agree(geo, oracle, 4, "AIa2i geometric vs enumeration");
    }
    SUBCASE("degree 3 on the interior, a-orbits are 6-cycles") {
        auto dist = geo.bfs_dist(geo.root);
        for (int v = 0; v < geo.num_vertices(); ++v)
            if (dist[v] != kNone && dist[v] < 4) CHECK(geo.complete(v));
        CHECK(trace_word(geo, geo.root, parse_word(geo.alphabet, "a^6")).kind ==
              TraceKind::Closed);
    }
    SUBCASE("sabidussi passes on the inner ball") {
        CHECK(sabidussi_check(geo, 2).pass);
    }
}

TEST_CASE("mohar amalgamation: remaining rows at small parameters") {
    struct Row {
        int id;
        std::map<std::string, long long> P;
    };
    for (const auto& row : {Row{21, {{"n", 3}, {"m", 1}}}, Row{26, {{"n", 2}, {"m", 2}}},
                            Row{26, {{"n", 3}, {"m", 2}}}, Row{27, {{"n", 2}, {"m", 1}}}}) {
        const auto& e = entry_by_id(row.id);
        auto geo = run_recipe(e, row.P, "", 4);
        auto inst = instantiate_entry(e, row.P);
        check_all_relators(geo, inst, 4, e.name);
        check_agree(geo, build_oracle_ball(inst, 4), 4, e.name + " vs enumeration");
    }
}

TEST_CASE("twist-squeeze amalgamation rows") {
    struct Row {
        int id;
        std::map<std::string, long long> P;
    };
    for (const auto& row :
         {Row{23, {{"n", 2}, {"m", 2}}}, Row{25, {{"n", 3}, {"m", 2}}},
          Row{28, {{"n", 2}, {"m", 2}, {"p", 2}}}, Row{29, {{"n", 2}, {"m", 1}}}}) {
        const auto& e = entry_by_id(row.id);
        auto geo = run_recipe(e, row.P, "", 4);
        auto inst = instantiate_entry(e, row.P);
        check_all_relators(geo, inst, 4, e.name);
        check_agree(geo, build_oracle_ball(inst, 4), 4, e.name + " vs enumeration");
    }
}

TEST_CASE("metaedge substitution rows") {
    SUBCASE("AIIcii k=3 with the regular pattern (dcbc)^2") {
        const auto& e = entry_by_id(33);
        auto geo = run_recipe(e, {{"k", 3}}, "(dcbc)^2", 4);
        auto inst = instantiate_entry(e, {{"k", 3}}, "(dcbc)^2");
        check_all_relators(geo, inst, 4, "AIIcii");
        check_agree(geo, build_oracle_ball(inst, 4), 4, "AIIcii vs enumeration");
        auto census = trace_faces(
            geo,
            derive_rotation_system(geo, SpinAssignment::all(geo.alphabet, SpinClass::Preserve)));
        for (auto [k, cnt] : census.closed_histogram) CHECK(k == 9);
    }
    SUBCASE("AIIciii with the non-regular monster pattern: no finite faces") {
        const auto& e = entry_by_id(34);
        auto geo = run_recipe(e, {}, "(d cbc d cbcbc)^2", 4);
        auto inst = instantiate_entry(e, {}, "(d cbc d cbcbc)^2");
        check_all_relators(geo, inst, 4, "AIIciii");
        check_agree(geo, build_oracle_ball(inst, 4), 4, "AIIciii vs enumeration");
    }
    SUBCASE("AIId2i at (k,n,m) = (2,1,2)") {
        const auto& e = entry_by_id(35);
        std::map<std::string, long long> P{{"k", 2}, {"n", 1}, {"m", 2}};
        auto geo = run_recipe(e, P, "", 4);
        auto inst = instantiate_entry(e, P);
        check_all_relators(geo, inst, 4, "AIId2i");
        check_agree(geo, build_oracle_ball(inst, 4), 4, "AIId2i vs enumeration");
    }
}
