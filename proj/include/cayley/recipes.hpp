#pragma once

// Executes each catalog row's builder recipe.  Geometric recipes are the
// primary construction path; bounded coset enumeration (build_oracle_ball) is
// the independent oracle.  Disagreement between the two is a hard error in
// the acceptance suite.

#include <cayley/catalog.hpp>

#include <memory>

namespace cayley {

inline ColoredGraph rename_alphabet(ColoredGraph g, const std::vector<std::string>& names) {
    if (static_cast<int>(names.size()) != g.alphabet.size())
        throw std::invalid_argument("rename: wrong alphabet size");
    for (size_t i = 0; i < names.size(); ++i) g.alphabet.labels[i].symbol = names[i];
    return g;
}

// Cay<a,d | d^2, a^2, (ad)^m>: a 2m-cycle alternating a,d in which every
// a-edge is a digon (dart pair).  Degenerate core for the n=2 Mohar rows.
inline ColoredGraph build_digon_necklace(int m, const std::string& a_name,
                                         const std::string& d_name) {
    if (m < 1) throw ConstructionError("digon necklace needs m >= 1");
    Alphabet ab;
    ab.labels.push_back({a_name, false});
    ab.labels.push_back({d_name, true});
    ColoredGraph g(ab);
    for (int i = 0; i < 2 * m; ++i) g.add_vertex();
    for (int i = 0; i < 2 * m; i += 2) {
        g.set_edge(i, 0, i + 1);
        g.set_edge(i + 1, 0, i);  // the digon partner dart
    }
    for (int i = 1; i < 2 * m; i += 2) g.set_edge(i, 1, (i + 1) % (2 * m));
    g.root = 0;
    return g;
}

namespace detail {

inline Word z_word(const Alphabet& out_ab, int t) {
    // c (bc)^{t-1} over the alphabet b,c,d
    int b = out_ab.find("b"), c = out_ab.find("c");
    Word w{{c, 1}};
    for (int i = 1; i < t; ++i) {
        w.push_back({b, 1});
        w.push_back({c, 1});
    }
    return w;
}

inline Word word_from_string(const Alphabet& ab, const std::string& s) {
    return parse_word(ab, s);
}

inline Alphabet involutions(std::initializer_list<std::string> names) {
    Alphabet ab;
    for (const auto& n : names) ab.labels.push_back({n, true});
    return ab;
}

inline Alphabet two_gen(const std::string& a, const std::string& b) {
    Alphabet ab;
    ab.labels.push_back({a, false});
    ab.labels.push_back({b, true});
    return ab;
}

// memoizes the largest core built so far and serves smaller radii as balls
inline std::function<ColoredGraph(int)> memoized(std::function<ColoredGraph(int)> f) {
    auto cache = std::make_shared<std::pair<int, ColoredGraph>>(-1, ColoredGraph{});
    return [cache, f](int radius) {
        if (cache->first < radius) *cache = {radius, f(radius)};
        if (cache->first == radius) return cache->second;
        return extract_ball(cache->second, radius);
    };
}

}  // namespace detail

inline ColoredGraph run_recipe(const TableEntry& e, const std::map<std::string, long long>& params,
                               const std::string& pattern, int radius);

// Enumeration side: bounded Todd-Coxeter ball for any instantiated row.
inline ColoredGraph build_oracle_ball(const Presentation& p, int radius,
                                      long long budget = 400000) {
    return build_ball(p, BallSpec{radius, budget, 0}).graph;
}

namespace detail {

inline ColoredGraph glue_row(const TableEntry& e, const std::map<std::string, long long>& P,
                             const std::string& pattern, int radius) {
    auto iv = [&](const char* k) { return static_cast<int>(P.at(k)); };
    GlueRecipe r;
    r.radius = radius;
    switch (e.id) {
        case 20: {  // Mohar amalgamation of the (oi) tiling along its z-faces
            int n = iv("n"), m = iv("m");
            r.core_builder = memoized(
                [n, m](int rad) { return build_truncated_tiling(n, m, rad, "z", "b"); });
            Alphabet cab = two_gen("z", "b");
            r.core_spin = SpinAssignment::from_string(cab, "z:P,b:P");
            r.basic_relators = {word_from_string(cab, "z^" + std::to_string(n))};
            r.out_alphabet = two_gen("a", "b");
            r.mm.images = {word_from_string(r.out_alphabet, "a a"),
                           word_from_string(r.out_alphabet, "b")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "a:R,b:P");
            break;
        }
        case 21: {  // Mohar amalgamation of the (oii) graph
            int n = iv("n"), m = iv("m");
            r.core_builder = memoized([n, m](int rad) {
                return flip_alternate_orientation(
                    build_truncated_tiling(n, 2 * m, rad, "z", "b"));
            });
            Alphabet cab = two_gen("z", "b");
            r.core_spin = SpinAssignment::from_string(cab, "z:P,b:R");
            r.basic_relators = {word_from_string(cab, "z^" + std::to_string(n))};
            r.out_alphabet = two_gen("a", "b");
            r.mm.images = {word_from_string(r.out_alphabet, "a a"),
                           word_from_string(r.out_alphabet, "b")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "a:R,b:R");
            break;
        }
        case 23: {  // twist-squeeze of the (ziv) graph along (bc)^n
            int n = iv("n"), m = iv("m");
            auto core_p = instantiate_entry(entry_by_id(19),
                                            {{"n", n}, {"m", m}, {"p", n}});
            r.core_builder = memoized(
                [core_p](int rad) { return build_oracle_ball(core_p, rad); });
            r.core_spin = SpinAssignment::from_string(core_p.alphabet, "b:R,c:R,d:R");
            // the shared cycle reads (bc)^n from one side and (db)^n from the
            // other (c = a^-1 b a, d = a b a^-1 are mirror words)
            r.basic_relators = {parse_word(core_p.alphabet, "(bc)^" + std::to_string(n)),
                                parse_word(core_p.alphabet, "(db)^" + std::to_string(n))};
            r.out_alphabet = two_gen("a", "b");
            r.mm.images = {word_from_string(r.out_alphabet, "b"),
                           word_from_string(r.out_alphabet, "a^-1 b a"),
                           word_from_string(r.out_alphabet, "a b a^-1")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "a:R,b:R");
            break;
        }
        case 25: {  // twist-squeeze of the (oi) tiling along its (wb)^m faces
            int n = iv("n"), m = iv("m");
            r.core_builder = memoized(
                [n, m](int rad) { return build_truncated_tiling(n, m, rad, "w", "b"); });
            Alphabet cab = two_gen("w", "b");
            r.core_spin = SpinAssignment::from_string(cab, "w:P,b:P");
            r.basic_relators = {parse_word(cab, "(wb)^" + std::to_string(m))};
            r.out_alphabet = two_gen("a", "b");
            r.mm.images = {word_from_string(r.out_alphabet, "a b a"),
                           word_from_string(r.out_alphabet, "b")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "a:R,b:P");
            break;
        }
        case 26: {  // Mohar amalgamation along a^n, a -> bc
            int n = iv("n"), m = iv("m");
            r.core_builder = memoized([n, m](int rad) {
                return n >= 3 ? build_truncated_tiling(n, m, rad, "a", "d")
                              : build_digon_necklace(m, "a", "d");
            });
            Alphabet cab = two_gen("a", "d");
            r.core_spin = SpinAssignment::from_string(cab, "a:P,d:P");
            r.basic_relators = {word_from_string(cab, "a^" + std::to_string(n))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c"),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:P");
            break;
        }
        case 27: {
            int n = iv("n"), m = iv("m");
            r.core_builder = memoized([n, m](int rad) {
                return n >= 3 ? flip_alternate_orientation(
                                    build_truncated_tiling(n, 2 * m, rad, "a", "d"))
                              : build_digon_necklace(2 * m, "a", "d");
            });
            Alphabet cab = two_gen("a", "d");
            r.core_spin = SpinAssignment::from_string(cab, "a:P,d:R");
            r.basic_relators = {word_from_string(cab, "a^" + std::to_string(n))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c"),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:R");
            break;
        }
        case 28: {  // twist-squeeze of (ziv) with w = bcb along (wc)^n
            int n = iv("n"), m = iv("m"), p = iv("p");
            auto core_p = instantiate_entry(entry_by_id(19), {{"n", n}, {"m", m}, {"p", p}});
            r.core_builder = memoized([core_p](int rad) {
                return rename_alphabet(build_oracle_ball(core_p, rad), {"w", "c", "d"});
            });
            Alphabet cab = involutions({"w", "c", "d"});
            r.core_spin = SpinAssignment::from_string(cab, "w:R,c:R,d:R");
            r.basic_relators = {parse_word(cab, "(wc)^" + std::to_string(n))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c b"),
                           word_from_string(r.out_alphabet, "c"),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:R,d:R");
            break;
        }
        case 29: {  // twist-squeeze of (ziii) with w = bcb along (wc)^n
            int n = iv("n"), m = iv("m");
            auto core_p = instantiate_entry(entry_by_id(18), {{"n", n}, {"m", m}});
            r.core_builder = memoized([core_p](int rad) {
                return rename_alphabet(build_oracle_ball(core_p, rad), {"w", "c", "d"});
            });
            Alphabet cab = involutions({"w", "c", "d"});
            r.core_spin = SpinAssignment::from_string(cab, "w:R,c:R,d:P");
            r.basic_relators = {parse_word(cab, "(wc)^" + std::to_string(n))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c b"),
                           word_from_string(r.out_alphabet, "c"),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:R,d:P");
            break;
        }
        case 30: {  // twist-squeeze of an AIId11 graph, letters (b,c,d)->(d,c,w)
            int n = iv("n"), m = iv("m"), p = iv("p");
            const TableEntry& core_e = entry_by_id(28);
            r.core_builder = memoized([core_e, n, m, p](int rad) {
                return rename_alphabet(
                    run_recipe(core_e, {{"n", n}, {"m", m}, {"p", p}}, "", rad),
                    {"d", "c", "w"});
            });
            Alphabet cab = involutions({"d", "c", "w"});
            r.core_spin = SpinAssignment::from_string(cab, "d:P,c:R,w:R");
            r.basic_relators = {parse_word(cab, "(cw)^" + std::to_string(m))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "d"),
                           word_from_string(r.out_alphabet, "c"),
                           word_from_string(r.out_alphabet, "b c b")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:R,d:P");
            break;
        }
        case 31: {  // twist-squeeze of an AIId11 graph, letters (b,c,d)->(d,w,c)
            int n = iv("n"), m = iv("m"), p = iv("p");
            const TableEntry& core_e = entry_by_id(28);
            r.core_builder = memoized([core_e, n, m, p](int rad) {
                return rename_alphabet(
                    run_recipe(core_e, {{"n", n}, {"m", m}, {"p", p}}, "", rad),
                    {"d", "w", "c"});
            });
            Alphabet cab = involutions({"d", "w", "c"});
            r.core_spin = SpinAssignment::from_string(cab, "d:P,w:R,c:R");
            r.basic_relators = {parse_word(cab, "(wc)^" + std::to_string(m))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "d"),
                           word_from_string(r.out_alphabet, "b c b"),
                           word_from_string(r.out_alphabet, "c")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:R,d:P");
            break;
        }
        case 33:
        case 34: {  // metaedge substitution a -> A, z -> Z from the pattern
            Pattern pat = parse_pattern(pattern);
            auto dec = decompose_AZ(pat);
            if (!dec) throw ConstructionError("pattern does not decompose as (AZ)^n");
            int np = dec->n;
            if (e.id == 33) {
                int k = iv("k");
                r.core_builder = memoized(
                    [k, np](int rad) { return build_truncated_tiling(k, np, rad, "a", "z"); });
            } else {
                r.core_builder =
                    memoized([np](int rad) { return build_cycle_tree(np, rad, "a", "z"); });
            }
            Alphabet cab = two_gen("a", "z");
            r.core_spin = SpinAssignment::from_string(cab, "a:P,z:P");
            r.basic_relators = {parse_word(cab, "(az)^" + std::to_string(np))};
            r.out_alphabet = involutions({"b", "c", "d"});
            Word A, Z;
            for (char ch : dec->A) A.push_back({r.out_alphabet.find(std::string(1, ch)), 1});
            for (char ch : dec->Z) Z.push_back({r.out_alphabet.find(std::string(1, ch)), 1});
            r.mm.images = {A, Z};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:P");
            break;
        }
        case 35: {  // metaedge substitution with B = bcdcb, Z = c(bc)^{n-1}
            int k = iv("k"), n = iv("n"), m = iv("m");
            std::map<std::string, long long> env{{"k", k}, {"m", m}};
            auto core_p = parse_presentation(
                "< w, z, d | w^2, z^2, d^2, (wd)^k, (wzdz)^m >", &env);
            r.core_builder = memoized(
                [core_p](int rad) { return build_oracle_ball(core_p, rad); });
            r.core_spin = SpinAssignment::from_string(core_p.alphabet, "w:R,z:P,d:R");
            r.basic_relators = {parse_word(core_p.alphabet, "(wzdz)^" + std::to_string(m))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c d c b"),
                           z_word(r.out_alphabet, n),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:R");
            break;
        }
        case 36: {  // core is an AIId11 graph, letters (b,c,d)->(z,w,d)
            int n = iv("n"), rr = iv("r"), m = iv("m"), q = iv("q");
            const TableEntry& core_e = entry_by_id(28);
            r.core_builder = memoized([core_e, rr, q, m](int rad) {
                return rename_alphabet(
                    run_recipe(core_e, {{"n", rr}, {"m", q}, {"p", m}}, "", rad),
                    {"z", "w", "d"});
            });
            Alphabet cab = involutions({"z", "w", "d"});
            r.core_spin = SpinAssignment::from_string(cab, "z:P,w:R,d:R");
            r.basic_relators = {parse_word(cab, "(dzwz)^" + std::to_string(m))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {z_word(r.out_alphabet, n - 1),
                           word_from_string(r.out_alphabet, "b c d c b"),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:R");
            break;
        }
        case 37: {  // core of connectivity 2 (main2 type v)
            int n = iv("n"), rr = iv("r"), m = iv("m");
            std::map<std::string, long long> env{{"r", rr}, {"m", m}};
            auto core_p = parse_presentation(
                "< w, z, d | w^2, z^2, d^2, (zw)^{2r}, (zwzd)^m >", &env);
            r.core_builder = memoized(
                [core_p](int rad) { return build_oracle_ball(core_p, rad); });
            r.core_spin = SpinAssignment::from_string(core_p.alphabet, "w:R,z:P,d:R");
            r.basic_relators = {parse_word(core_p.alphabet, "(zwzd)^" + std::to_string(m))};
            r.out_alphabet = involutions({"b", "c", "d"});
            r.mm.images = {word_from_string(r.out_alphabet, "b c d c b"),
                           z_word(r.out_alphabet, n - 1),
                           word_from_string(r.out_alphabet, "d")};
            r.out_spin = SpinAssignment::from_string(r.out_alphabet, "b:P,c:P,d:R");
            break;
        }
        default:
            throw std::logic_error("no glue recipe for entry " + e.name);
    }
    return metaedge_substitution_build(r);
}

}  // namespace detail

// Runs the geometric builder recipe of a row; enumeration rows fall through
// to the bounded coset enumeration.
inline ColoredGraph run_recipe(const TableEntry& e, const std::map<std::string, long long>& params,
                               const std::string& pattern, int radius) {
    auto iv = [&](const char* k) { return static_cast<int>(params.at(k)); };
    switch (e.recipe) {
        case RecipeTag::Enumeration:
            return build_oracle_ball(instantiate_entry(e, params, pattern), radius);
        case RecipeTag::TruncatedTiling:
            return build_truncated_tiling(iv("n"), iv("m"), radius);
        case RecipeTag::Flip:
            return flip_alternate_orientation(
                build_truncated_tiling(iv("n"), 2 * iv("m"), radius));
        case RecipeTag::ParityRecolor: {
            auto core = instantiate_entry(entry_by_id(19), {{"n", params.at("n")},
                                                            {"m", 2 * params.at("m")},
                                                            {"p", 2 * params.at("m")}});
            return parity_recolor(build_oracle_ball(core, radius));
        }
        case RecipeTag::HexStrip: {
            if (e.id == 22) return build_hex_strip(2 * iv("n"), false, radius);
            if (e.id == 24) return build_hex_strip(2 * iv("m"), true, radius);
            if (e.id == 32) return build_hex_strip3(2 * iv("n"), radius);
            throw std::logic_error("hex strip recipe on unexpected row");
        }
        case RecipeTag::Mohar:
        case RecipeTag::TwistSqueeze:
        case RecipeTag::MetaedgeSubstitution:
            return detail::glue_row(e, params, pattern, radius);
    }
    throw std::logic_error("unhandled recipe tag");
}

inline ColoredGraph run_recipe(const std::string& name,
                               const std::map<std::string, long long>& params,
                               const std::string& pattern, int radius) {
    const TableEntry* e = entry_by_name(name);
    if (!e) throw std::invalid_argument("unknown catalog entry " + name);
    return run_recipe(*e, params, pattern, radius);
}

}  // namespace cayley
