#include <doctest.h>

#include <cayley/patterns.hpp>

using namespace cayley;

TEST_CASE("is_noncrossing on the named examples") {
    SUBCASE("(d cbc d cbcbc)^2 is non-crossing") {
        auto v = is_noncrossing(parse_pattern("(d cbc d cbcbc)^2"));
        CHECK(v.ok);
    }
    SUBCASE("(bcd)^3 fails condition (iii)") {
        auto v = is_noncrossing(parse_pattern("(bcd)^3"));
        CHECK(!v.ok);
        CHECK(v.reason.find("(iii)") != std::string::npos);
    }
    SUBCASE("bbcd fails condition (ii)") {
        auto v = is_noncrossing(parse_pattern("bbcd"));
        CHECK(!v.ok);
        CHECK(v.reason.find("(ii)") != std::string::npos);
    }
    SUBCASE("bcbc fails condition (i)") {
        auto v = is_noncrossing(parse_pattern("bcbc"));
        CHECK(!v.ok);
        CHECK(v.reason.find("(i)") != std::string::npos);
    }
    SUBCASE("(dcbc)^2 is non-crossing") {
        CHECK(is_noncrossing(parse_pattern("(dcbc)^2")).ok);
    }
    SUBCASE("short words rejected outright") {
        CHECK(!is_noncrossing(parse_pattern("bcd")).ok);
    }
    SUBCASE("non-alphabet letter throws") {
        CHECK_THROWS(parse_pattern("bca"));
    }
}

TEST_CASE("decompose_AZ") {
    SUBCASE("(dcbc)^2: dominant c, Z=c, n=2") {
        auto d = decompose_AZ(parse_pattern("(dcbc)^2"));
        REQUIRE(d.has_value());
        CHECK(d->dominant == 'c');
        CHECK(d->Z == "c");
        CHECK(d->n == 2);
    }
    SUBCASE("(d c(bc)^2)^3: Z = cbc, n=3") {
        auto d = decompose_AZ(parse_pattern("(d c (bc)^2)^3"));
        REQUIRE(d.has_value());
        CHECK(d->Z == "cbc");
        CHECK(d->n == 3);
    }
    SUBCASE("the monster pattern: Z = cbcdcbc, n=2") {
        auto d = decompose_AZ(parse_pattern("(d cbc d cbcbc)^2"));
        REQUIRE(d.has_value());
        CHECK(d->dominant == 'c');
        CHECK(d->Z == "cbcdcbc");
        CHECK(d->n == 2);
        // Z contains d exactly when the pattern is non-regular
        CHECK(d->Z.find('d') != std::string::npos);
    }
    SUBCASE("two adjacent non-dominant letters block the decomposition") {
        CHECK(!decompose_AZ(parse_pattern("bdbc")).has_value());
    }
    SUBCASE("reassembly round-trips") {
        for (const char* s : {"(dcbc)^2", "(d c (bc)^2)^3", "(d cbc d cbcbc)^2"}) {
            Pattern p = parse_pattern(s);
            auto d = decompose_AZ(p);
            REQUIRE(d.has_value());
            std::string unit = d->A + d->Z;
            std::string whole;
            for (int i = 0; i < d->n; ++i) whole += unit;
            CHECK(canonical_pattern(whole) == canonical_pattern(p.letters));
        }
    }
}

TEST_CASE("is_regular") {
    CHECK(is_regular(parse_pattern("(dcbc)^2")));
    CHECK(is_regular(parse_pattern("(d c (bc)^2)^3")));
    CHECK(!is_regular(parse_pattern("(d cbc d cbcbc)^2")));
    SUBCASE("regular patterns satisfy conditions (i)-(iii)") {
        for (const char* s : {"(dcbc)^2", "(d c (bc)^2)^2", "(d c (bc)^3)^2"}) {
            auto v = is_noncrossing(parse_pattern(s));
            // never rejected by (i)-(iii)
            if (!v.ok) {
                CHECK(v.reason.find("(iv)") != std::string::npos);
            }
        }
    }
}

TEST_CASE("enumerate_noncrossing") {
    auto list = enumerate_noncrossing(8);
    SUBCASE("contains (dcbc)^2 at max_len >= 8") {
        bool found = false;
        for (const auto& p : list)
            if (canonical_pattern(p.letters) == canonical_pattern("dcbcdcbc")) found = true;
        CHECK(found);
    }
    SUBCASE("everything listed passes conditions (i)-(iii)") {
        for (const auto& p : list) {
            CHECK(is_noncrossing(p).ok);
            CHECK(p.letters.size() >= 4);
        }
    }
    SUBCASE("every listed pattern decomposes via AZ") {
        for (const auto& p : list) CHECK(decompose_AZ(p).has_value());
    }
}

TEST_CASE("is_noncrossing invariant under rotation and inversion") {
    auto list = enumerate_noncrossing(12);
    CHECK(!list.empty());
    // property test over the enumeration: all rotations and the inversion of
    // an accepted pattern are accepted; same for a sample of rejected words
    int checked = 0;
    for (const auto& p : list) {
        const std::string& s = p.letters;
        for (size_t r = 0; r < s.size() && checked < 4000; ++r) {
            CHECK(is_noncrossing({rotate_string(s, r)}).ok);
            std::string rev(s.rbegin(), s.rend());
            CHECK(is_noncrossing({rotate_string(rev, r)}).ok);
            ++checked;
        }
    }
    SUBCASE("dominance: between two weak-colour letters both other colours appear") {
        for (const auto& p : list) {
            auto d = decompose_AZ(p);
            REQUIRE(d.has_value());
            const std::string& s = p.letters;
            const int L = static_cast<int>(s.size());
            std::map<char, int> cnt;
            for (char ch : s) cnt[ch]++;
            std::vector<char> nondom;
            for (char ch : {'b', 'c', 'd'})
                if (ch != d->dominant) nondom.push_back(ch);
            for (char weak : nondom) {
                if (cnt[weak] > cnt[nondom[0] == weak ? nondom[1] : nondom[0]]) continue;
                for (int i = 0; i < L; ++i) {
                    if (s[i] != weak) continue;
                    int j = (i + 1) % L;
                    std::set<char> seen;
                    while (s[j] != weak) {
                        seen.insert(s[j]);
                        j = (j + 1) % L;
                    }
                    CHECK(seen.size() == 2);  // no weak-X-weak with X avoiding a colour
                }
            }
        }
    }
}
