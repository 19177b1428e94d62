#pragma once

// The classification table as data: one record per row, with parameter
// domains, expected connectivity, spin signature, endedness class and the
// builder recipe.  Rows 38-41 are degenerate records excluded from the table
// proper but kept so that classification can name them.

#include <cayley/amalgam.hpp>
#include <cayley/analysis.hpp>
#include <cayley/enumeration.hpp>
#include <cayley/patterns.hpp>
#include <cayley/transform.hpp>

namespace cayley {

enum class Endedness { FiniteOrOne, Two, Infinitely, ParameterDependent };

enum class RecipeTag {
    Enumeration,
    TruncatedTiling,
    Flip,
    ParityRecolor,
    Mohar,
    TwistSqueeze,
    HexStrip,
    MetaedgeSubstitution
};

struct ParamSpec {
    std::string name;
    long long min = 1;
    bool allow_infinity = false;
};

struct TableEntry {
    int id;
    std::string name;
    std::string section;
    std::string templ;  // presentation template over the parameters
    std::vector<ParamSpec> params;
    bool pattern_param = false;
    bool pattern_must_be_nonregular = false;
    int kappa;  // 0 = degenerate record
    Endedness ends;
    std::string spin;  // "" when the paper does not determine it
    RecipeTag recipe;
    int core_entry = 0;  // earlier row the recipe builds on (0 = none)
    std::map<std::string, long long> sweep;  // canonical minimal parameters
    std::string sweep_pattern;
    std::string note;
};

inline const std::vector<TableEntry>& catalog() {
    static const std::vector<TableEntry> entries = {
        {1, "Aici", "kappa=1", "< a, b | b^2, a^n >",
         {{"n", 2, true}}, false, false, 1, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 3}}, "", ""},
        {2, "Aicii", "kappa=1", "< b, c, d | b^2, c^2, d^2, (bc)^n >",
         {{"n", 1, true}}, false, false, 1, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}}, "", ""},
        {3, "Ai", "kappa=2", "< a, b | b^2, (ab)^n >",
         {{"n", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}}, "", ""},
        {4, "Aii", "kappa=2", "< a, b | b^2, (a b a^-1 b^-1)^n >",
         {{"n", 1, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 1}}, "", ""},
        {5, "Aiii", "kappa=2", "< a, b | b^2, a^4, (a^2 b)^n >",
         {{"n", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}}, "", ""},
        {6, "Aiv", "kappa=2", "< b, c, d | b^2, c^2, d^2, (bc)^2, (bcd)^m >",
         {{"m", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"m", 2}}, "", ""},
        {7, "Av", "kappa=2", "< b, c, d | b^2, c^2, d^2, (bc)^{2n}, (cbcd)^m >",
         {{"n", 2, false}, {"m", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}, {"m", 2}}, "", ""},
        {8, "Avi", "kappa=2", "< b, c, d | b^2, c^2, d^2, (bc)^n, (bd)^m >",
         {{"n", 2, false}, {"m", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}, {"m", 2}}, "", ""},
        {9, "Avii", "kappa=2", "< b, c, d | b^2, c^2, d^2, (b (cb)^n d)^m >",
         {{"n", 1, false}, {"m", 2, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 1}, {"m", 2}}, "", ""},
        {10, "Aviii", "kappa=2", "< b, c, d | b^2, c^2, d^2, (bcbd)^m >",
         {{"m", 1, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"m", 1}}, "", ""},
        {11, "Aix", "kappa=2", "< b, c, d | b^2, c^2, d^2, (bc)^n, c d >",
         {{"n", 1, false}}, false, false, 2, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}}, "",
         "degenerate cases with redundant generators"},
        {12, "Aoi", "kappa=3, finite or 1-ended, two generators",
         "< a, b | b^2, a^n, (ab)^m >",
         {{"n", 3, false}, {"m", 2, false}}, false, false, 3, Endedness::FiniteOrOne,
         "a:P,b:P", RecipeTag::TruncatedTiling, 0, {{"n", 3}, {"m", 2}}, "", ""},
        {13, "Aoii", "kappa=3, finite or 1-ended, two generators",
         "< a, b | b^2, a^n, (a b a^-1 b)^m >",
         {{"n", 3, false}, {"m", 1, false}}, false, false, 3, Endedness::FiniteOrOne,
         "a:P,b:R", RecipeTag::Flip, 12, {{"n", 3}, {"m", 1}}, "", ""},
        {14, "Aoiii", "kappa=3, finite or 1-ended, two generators",
         "< a, b | b^2, (a^2 b)^m >",
         {{"m", 1, false}}, false, false, 3, Endedness::FiniteOrOne, "a:R,b:P",
         RecipeTag::Enumeration, 0, {{"m", 1}}, "", ""},
        {15, "Aoiv", "kappa=3, finite or 1-ended, two generators",
         "< a, b | b^2, (a^2 b a^-2 b)^m >",
         {{"m", 1, false}}, false, false, 3, Endedness::FiniteOrOne, "a:R,b:R",
         RecipeTag::Enumeration, 0, {{"m", 1}}, "", ""},
        {16, "Azi", "kappa=3, finite or 1-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcd)^n >",
         {{"n", 1, false}}, false, false, 3, Endedness::FiniteOrOne, "b:P,c:P,d:P",
         RecipeTag::Enumeration, 0, {{"n", 1}}, "", ""},
        {17, "Azii", "kappa=3, finite or 1-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (cbcdbd)^n >",
         {{"n", 1, false}}, false, false, 3, Endedness::FiniteOrOne, "b:R,c:P,d:P",
         RecipeTag::Enumeration, 0, {{"n", 1}}, "", ""},
        {18, "Aziii", "kappa=3, finite or 1-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bc)^n, (bdcd)^m >",
         {{"n", 2, false}, {"m", 1, false}}, false, false, 3, Endedness::FiniteOrOne,
         "b:R,c:R,d:P", RecipeTag::ParityRecolor, 0, {{"n", 2}, {"m", 1}}, "",
         "recolours the (ziv) graph with relators (bc)^n, (cd)^2m, (db)^2m"},
        {19, "Aziv", "kappa=3, finite or 1-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bc)^n, (cd)^m, (db)^p >",
         {{"n", 2, false}, {"m", 2, false}, {"p", 2, false}}, false, false, 3,
         Endedness::FiniteOrOne, "b:R,c:R,d:R", RecipeTag::Enumeration, 0,
         {{"n", 2}, {"m", 2}, {"p", 2}}, "", ""},
        {20, "AIa2i", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, (a^2 b)^m ; a^{2n} >",
         {{"n", 3, false}, {"m", 2, false}}, false, false, 3, Endedness::Infinitely,
         "a:R,b:P", RecipeTag::Mohar, 12, {{"n", 3}, {"m", 2}}, "", ""},
        {21, "AIa2ii", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, (a^2 b a^-2 b)^m ; a^{2n} >",
         {{"n", 3, false}, {"m", 1, false}}, false, false, 3, Endedness::Infinitely,
         "a:R,b:R", RecipeTag::Mohar, 13, {{"n", 3}, {"m", 1}}, "", ""},
        {22, "Abi", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, a^2 b a^-2 b ; (b a b a^-1)^n >",
         {{"n", 2, false}}, false, false, 3, Endedness::Two, "a:R,b:R",
         RecipeTag::HexStrip, 0, {{"n", 2}}, "", ""},
        {23, "Abii", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, (a^2 b a^-2 b)^m ; (b a b a^-1)^n >",
         {{"n", 2, false}, {"m", 2, false}}, false, false, 3, Endedness::Infinitely,
         "a:R,b:R", RecipeTag::TwistSqueeze, 19, {{"n", 2}, {"m", 2}}, "", ""},
        {24, "Abiii", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, (a^2 b)^2 ; (ab)^{2m} >",
         {{"m", 2, false}}, false, false, 3, Endedness::Two, "a:R,b:P",
         RecipeTag::HexStrip, 0, {{"m", 2}}, "", ""},
        {25, "Abiv", "kappa=3, multi-ended, two generators",
         "< a, b | b^2, (a^2 b)^n ; (ab)^{2m} >",
         {{"n", 3, false}, {"m", 2, false}}, false, false, 3, Endedness::Infinitely,
         "a:R,b:P", RecipeTag::TwistSqueeze, 12, {{"n", 3}, {"m", 2}}, "", ""},
        {26, "AIIa2i", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcd)^m ; (bc)^n >",
         {{"n", 2, false}, {"m", 2, false}}, false, false, 3, Endedness::Infinitely,
         "b:P,c:P,d:P", RecipeTag::Mohar, 12, {{"n", 2}, {"m", 2}}, "", ""},
        {27, "AIIa2ii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcdcbd)^m ; (bc)^n >",
         {{"n", 2, false}, {"m", 1, false}}, false, false, 3, Endedness::Infinitely,
         "b:P,c:P,d:R", RecipeTag::Mohar, 13, {{"n", 2}, {"m", 1}}, "", ""},
        {28, "AIId11", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (cd)^m, (dbcb)^p ; (bc)^{2n} >",
         {{"n", 2, false}, {"m", 2, false}, {"p", 2, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:R,d:R", RecipeTag::TwistSqueeze, 19,
         {{"n", 2}, {"m", 2}, {"p", 2}}, "", ""},
        {29, "Addi", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcbdcd)^m ; (bc)^{2n} >",
         {{"n", 2, false}, {"m", 1, false}}, false, false, 3, Endedness::Infinitely,
         "b:P,c:R,d:P", RecipeTag::TwistSqueeze, 18, {{"n", 2}, {"m", 1}}, "", ""},
        {30, "Addii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcbdcd)^p ; (dc)^{2n}, (bc)^{2m} >",
         {{"n", 2, false}, {"m", 2, false}, {"p", 2, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:R,d:P", RecipeTag::TwistSqueeze, 28,
         {{"n", 2}, {"m", 2}, {"p", 2}}, "", ""},
        {31, "Addiii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcbdcd)^p ; (dbcb)^{2n}, (bc)^{2m} >",
         {{"n", 2, false}, {"m", 2, false}, {"p", 2, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:R,d:P", RecipeTag::TwistSqueeze, 28,
         {{"n", 2}, {"m", 2}, {"p", 2}}, "", ""},
        {32, "AIIci", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcd)^2 ; (bcdc)^n >",
         {{"n", 2, false}}, false, false, 3, Endedness::Two, "b:P,c:P,d:P",
         RecipeTag::HexStrip, 0, {{"n", 2}}, "", ""},
        {33, "AIIcii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bcd)^k ; P >",
         {{"k", 3, false}}, true, false, 3, Endedness::Infinitely, "b:P,c:P,d:P",
         RecipeTag::MetaedgeSubstitution, 12, {{"k", 3}}, "(dcbc)^2", ""},
        {34, "AIIciii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2 ; P >",
         {}, true, true, 3, Endedness::Infinitely, "b:P,c:P,d:P",
         RecipeTag::MetaedgeSubstitution, 3, {}, "(d cbc d cbcbc)^2", ""},
        {35, "AIId2i", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bdbcdc)^k ; (c (bc)^n d)^{2m} >",
         {{"k", 2, false}, {"n", 1, false}, {"m", 1, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:P,d:R", RecipeTag::MetaedgeSubstitution, 18,
         {{"k", 2}, {"n", 1}, {"m", 2}}, "",
         "domain also requires n+m >= 3; n=m=1 is rejected (not 3-connected)"},
        {36, "AIId2ii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2, (bdbcdc)^q ; (c (bc)^{n-1} d)^{2m}, (c (bc)^n d)^{2r} >",
         {{"n", 2, false}, {"r", 2, false}, {"m", 2, false}, {"q", 2, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:P,d:R", RecipeTag::MetaedgeSubstitution, 28,
         {{"n", 2}, {"r", 2}, {"m", 2}, {"q", 2}}, "", ""},
        {37, "AIId2iii", "kappa=3, multi-ended, three generators",
         "< b, c, d | b^2, c^2, d^2 ; (c (bc)^{n-1} d)^{2m}, (c (bc)^n d)^{2r} >",
         {{"n", 2, false}, {"r", 2, false}, {"m", 2, false}}, false, false, 3,
         Endedness::Infinitely, "b:P,c:P,d:R", RecipeTag::MetaedgeSubstitution, 7,
         {{"n", 2}, {"r", 2}, {"m", 2}}, "", ""},
        {38, "Aov1", "degenerate, excluded from Table 1",
         "< a, b | b^2, a^2, (ab)^n >",
         {{"n", 2, false}}, false, false, 0, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 2}}, "", "not cubic: both generators involutions"},
        {39, "Aov2", "degenerate, excluded from Table 1", "< a, b | b^2, a b >",
         {}, false, false, 0, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {}, "", "trivial two-element group"},
        {40, "Azv", "degenerate, excluded from Table 1",
         "< b, c, d | b^2, c^2, d^2, (bc)^n, c d >",
         {{"n", 1, false}}, false, false, 0, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"n", 1}}, "",
         "redundant generators (c = d); same form as table row Aix, which "
         "classification prefers"},
        {41, "AIId2i-deg", "degenerate, excluded from Table 1",
         "< b, c, d | b^2, c^2, d^2, (bdbcdc)^k ; (cbcd)^2 >",
         {{"k", 2, false}}, false, false, 0, Endedness::ParameterDependent, "",
         RecipeTag::Enumeration, 0, {{"k", 2}}, "",
         "the n=m=1 case of AIId2i; not 3-connected"},
    };
    return entries;
}

inline const TableEntry& entry_by_id(int id) {
    for (const auto& e : catalog())
        if (e.id == id) return e;
    throw std::invalid_argument("no catalog entry with id " + std::to_string(id));
}

inline const TableEntry* entry_by_name(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void check_domain(const TableEntry& e, const std::map<std::string, long long>& params) {
    for (const auto& ps : e.params) {
        auto it = params.find(ps.name);
        if (it == params.end()) throw DomainError(e.name + ": missing parameter " + ps.name);
        if (it->second < 0) {
            if (!ps.allow_infinity)
                throw DomainError(e.name + ": parameter " + ps.name + " cannot be infinite");
            continue;
        }
        if (it->second < ps.min)
            throw DomainError(e.name + ": parameter " + ps.name + " = " +
                              std::to_string(it->second) + " violates " + ps.name +
                              " >= " + std::to_string(ps.min));
    }
    if (e.id == 35) {
        long long n = params.at("n"), m = params.at("m");
        if (n >= 0 && m >= 0 && n + m < 3)
            throw DomainError(e.name + ": domain requires n+m >= 3");
    }
}

inline Presentation instantiate_entry(const TableEntry& e,
                                      const std::map<std::string, long long>& params,
                                      const std::string& pattern = "") {
    check_domain(e, params);
    std::string text = e.templ;
    if (e.pattern_param) {
        if (pattern.empty()) throw DomainError(e.name + ": missing pattern parameter");
        Pattern pat = parse_pattern(pattern);
        auto verdict = is_noncrossing(pat);
        if (!verdict.ok)
            throw DomainError(e.name + ": pattern is not non-crossing: " + verdict.reason);
        if (e.pattern_must_be_nonregular && is_regular(pat))
            throw DomainError(e.name + ": pattern must be non-regular");
        std::string spaced;
        for (char ch : pat.letters) {
            if (!spaced.empty()) spaced += ' ';
            spaced += ch;
        }
        auto posn = text.find(" P ");
        text = text.substr(0, posn) + " " + spaced + " " + text.substr(posn + 3);
    }
    Presentation p = parse_presentation(text, &params);
    p.source = SourceEntry{e.id, e.name, params, e.pattern_param ? pattern : ""};
    return p;
}

inline Presentation instantiate_entry(const std::string& name,
                                      const std::map<std::string, long long>& params,
                                      const std::string& pattern = "") {
    const TableEntry* e = entry_by_name(name);
    if (!e) throw std::invalid_argument("unknown catalog entry " + name);
    return instantiate_entry(*e, params, pattern);
}

// ---------------------------------------------------------------------------
// Expected analysis outcomes per row

struct ExpectedReport {
    int kappa = 0;
    Endedness ends = Endedness::ParameterDependent;
    std::string spin;
    std::set<int> face_sizes;    // allowed closed-face sizes
    bool no_finite_faces = false;
    std::vector<Word> dividing;  // instantiated dividing relators
};

inline ExpectedReport expected_report(const TableEntry& e,
                                      const std::map<std::string, long long>& params,
                                      const std::string& pattern = "") {
    Presentation p = instantiate_entry(e, params, pattern);
    ExpectedReport r;
    r.kappa = e.kappa;
    r.ends = e.ends;
    r.spin = e.spin;
    for (const auto& w : p.face_relators) r.face_sizes.insert(static_cast<int>(w.size()));
    r.no_finite_faces = p.face_relators.empty();
    r.dividing = p.dividing_relators;
    return r;
}

}  // namespace cayley
