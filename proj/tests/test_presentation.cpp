#include <doctest.h>

#include "test_helpers.hpp"

#include <cayley/presentation.hpp>

using namespace cayley;

TEST_CASE("parse_presentation grammar") {
    SUBCASE("prism presentation") {
        auto p = parse_presentation("<a,b | b^2, a^3, (ab)^2>");
        CHECK(p.alphabet.size() == 2);
        CHECK(!p.alphabet.involution(0));
        CHECK(p.alphabet.involution(1));
        REQUIRE(p.face_relators.size() == 2);
        CHECK(p.face_relators[0].size() == 3);   // a^3
        CHECK(p.face_relators[1].size() == 4);   // (ab)^2
        CHECK(p.dividing_relators.empty());
    }
    SUBCASE("semicolon separates dividing relators (Abiii shape)") {
        auto p = parse_presentation("<a,b | b^2, (a^2 b)^2; (ab)^4>");
        REQUIRE(p.face_relators.size() == 1);
        REQUIRE(p.dividing_relators.size() == 1);
        CHECK(p.face_relators[0].size() == 6);
        CHECK(p.dividing_relators[0].size() == 8);
    }
    SUBCASE("syntax error carries a position") {
        CHECK_THROWS_AS(parse_presentation("<a,b | b^2, a b,"), ParseError);
    }
    SUBCASE("undeclared symbol") {
        CHECK_THROWS_AS(parse_presentation("<a,b | b^2, c^3>"), ParseError);
    }
    SUBCASE("exponent < 1") {
        CHECK_THROWS_AS(parse_presentation("<a,b | b^2, a^0>"), ParseError);
    }
    SUBCASE("inverses") {
        auto p = parse_presentation("<a,b | b^2, (a b a^-1 b)^2>");
        REQUIRE(p.face_relators.size() == 1);
        const Word& w = p.face_relators[0];
        REQUIRE(w.size() == 8);
        CHECK(w[2].sign == -1);
        CHECK(w[3].sign == +1);  // involution letters normalise to +1
    }
    SUBCASE("round-trip through the serializer") {
        for (const char* text :
             {"<a,b | b^2, a^3, (ab)^2>", "<a,b | b^2, (a^2 b)^2; (ab)^4>",
              "<b,c,d | b^2, c^2, d^2, (bc)^2, (cd)^3, (db)^2>",
              "<b,c,d | b^2, c^2, d^2; (c b c d)^4, (c b c b c d)^4>"}) {
            auto p = parse_presentation(text);
            auto q = parse_presentation(presentation_to_string(p));
            CHECK(presentations_equal(p, q));
        }
    }
}

TEST_CASE("word_extension") {
    SUBCASE("z -> a^2 turns <z,b|b^2,z^n,(zb)^m> into <a,b|b^2,a^2n,(a^2 b)^m>") {
        auto p = parse_presentation("<z,b | b^2, z^3, (zb)^2>");
        Substitution s;
        s.target.labels.push_back({"a", false});
        s.target.labels.push_back({"b", true});
        s.image = {parse_word(s.target, "a a"), parse_word(s.target, "b")};
        auto q = word_extension(p, s);
        REQUIRE(q.face_relators.size() == 2);
        CHECK(word_to_string(q.alphabet, q.face_relators[0]) == "a a a a a a");
        CHECK(word_to_string(q.alphabet, q.face_relators[1]) == "a a b a a b");
    }
    SUBCASE("identity substitution is a no-op") {
        auto p = parse_presentation("<a,b | b^2, a^3, (ab)^2>");
        Substitution s;
        s.target = p.alphabet;
        s.image = {parse_word(p.alphabet, "a"), parse_word(p.alphabet, "b")};
        auto q = word_extension(p, s);
        CHECK(presentations_equal(p, q));
    }
    SUBCASE("seam identity in the B,Z substitution") {
        // <w,z,d | ..., (zw)^{2r}, ...> with w -> bcdcb, z -> c(bc)^{N-1}:
        // the relator (zw)^2 becomes, up to rotation, (c(bc)^{N+1} d)^2.
        // Here N = 2, so the result is (c(bc)^3 d)^2.
        auto p = parse_presentation("<w,z,d | w^2, z^2, d^2, (zw)^2>");
        Substitution s;
        for (const char* n : {"b", "c", "d"}) s.target.labels.push_back({n, true});
        s.image = {parse_word(s.target, "b c d c b"), parse_word(s.target, "c b c"),
                   parse_word(s.target, "d")};
        auto q = word_extension(p, s);
        REQUIRE(q.face_relators.size() == 1);
        Word expect = parse_word(s.target, "(c b c b c b c d)^2");
        CHECK(cyclically_equal_upto_inversion(s.target, q.face_relators[0], expect));
    }
    SUBCASE("ss^-1 pairs created at seams cancel") {
        auto p = parse_presentation("<z,b | b^2, (z b z)^2>");
        Substitution s;
        s.target.labels.push_back({"a", false});
        s.target.labels.push_back({"b", true});
        // z -> a b a^-1 : the seam of z.b creates ... a^-1 b ... fine, but
        // z.z would create a^-1 a which must cancel
        s.image = {parse_word(s.target, "a b a^-1"), parse_word(s.target, "b")};
        auto q = word_extension(p, s);
        for (const auto& w : q.face_relators)
            for (size_t i = 0; i + 1 < w.size(); ++i) {
                bool cancels = w[i].color == w[i + 1].color && !s.target.involution(w[i].color) &&
                               w[i].sign == -w[i + 1].sign;
                CHECK(!cancels);
            }
    }
    SUBCASE("empty image is an error") {
        auto p = parse_presentation("<a,b | b^2, a^3>");
        Substitution s;
        s.target = p.alphabet;
        s.image = {Word{}, parse_word(p.alphabet, "b")};
        CHECK_THROWS(word_extension(p, s));
    }
    SUBCASE("extension distributes over concatenation") {
        auto ab = parse_presentation("<a,b | b^2, a^3>").alphabet;
        Substitution s;
        s.target.labels.push_back({"x", false});
        s.target.labels.push_back({"y", true});
        s.image = {parse_word(s.target, "x y"), parse_word(s.target, "y x y")};
        Word r1 = parse_word(ab, "a b a");
        Word r2 = parse_word(ab, "b a^-1 b");
        Word cat = r1;
        cat.insert(cat.end(), r2.begin(), r2.end());
        Word lhs = substitute_word(ab, s, cat);
        Word e1 = substitute_word(ab, s, r1);
        Word e2 = substitute_word(ab, s, r2);
        // concatenating and cancelling the seam gives the same reduced word
        Word rhs = e1;
        for (auto& l : e2) {
            if (!rhs.empty() && rhs.back().color == l.color &&
                (s.target.involution(l.color) || rhs.back().sign == -l.sign))
                rhs.pop_back();
            else
                rhs.push_back(l);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("is_simple_on") {
    auto g = testutil::hand_prism();
    CHECK(is_simple_on(g, parse_word(g.alphabet, "a^3")));
    CHECK(is_simple_on(g, parse_word(g.alphabet, "(ab)^2")));
    CHECK(!is_simple_on(g, parse_word(g.alphabet, "a^6")));  // wraps the 3-cycle twice
}
