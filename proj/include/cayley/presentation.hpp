#pragma once

// Presentation data model and the text grammar
//   < g1, g2[, g3] | R1, R2, ... [; D1, D2, ...] >
// Exponents are written ^k (k >= 1), inverses ^-1, and an involution is
// inferred from a relator g^2 which is consumed into a flag.

#include <cayley/graph.hpp>

#include <cctype>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <sstream>

namespace cayley {

struct SourceEntry {
    int entry_id = 0;
    std::string entry_name;
    std::map<std::string, long long> params;  // -1 encodes an omitted (infinite) relator
    std::string pattern;                      // pattern rows only
};

struct Presentation {
    Alphabet alphabet;
    std::vector<Word> face_relators;
    std::vector<Word> dividing_relators;
    std::optional<SourceEntry> source;

    std::vector<Word> all_relators() const {
        std::vector<Word> r = face_relators;
        r.insert(r.end(), dividing_relators.begin(), dividing_relators.end());
        return r;
    }
    int max_relator_length() const {
        size_t m = 0;
        for (const auto& w : all_relators()) m = std::max(m, w.size());
        for (const auto& l : alphabet.labels)
            if (l.involution) m = std::max(m, size_t(2));
        return static_cast<int>(m);
    }
};

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

namespace detail {

// Exponent expressions appearing in catalog templates: k, 2k, k-1, k+1, plain
// integers.  Concrete presentations only ever use integers and -1.
constexpr long long kInfExponent = std::numeric_limits<long long>::min();

struct ExpExpr {
    int coeff = 1;
    std::string param;  // empty for constants
    long long add = 0;
    long long eval(const std::map<std::string, long long>& env, size_t pos) const {
        if (param.empty()) return add;
        auto it = env.find(param);
        if (it == env.end()) throw ParseError("unbound parameter " + param, pos);
        if (it->second < 0) return kInfExponent;  // omitted-relator marker propagates
        return coeff * it->second + add;
    }
};

class WordParser {
public:
    WordParser(const std::string& text, size_t& pos, const Alphabet& ab,
               const std::map<std::string, long long>* env)
        : t_(text), p_(pos), ab_(ab), env_(env) {}

    // Parses a product of factors; stops at ',', ';', '>' or end.
    // Returns empty optional when the whole relator is annihilated by an
    // infinite exponent (omitted-relator convention).
    std::optional<Word> parse() {
        Word w;
        bool omitted = false;
        skip_ws();
        while (p_ < t_.size() && t_[p_] != ',' && t_[p_] != ';' && t_[p_] != '>') {
            auto f = factor();
            if (!f) omitted = true;
            else w.insert(w.end(), f->begin(), f->end());
            skip_ws();
        }
        if (omitted) return std::nullopt;
        return w;
    }

private:
    const std::string& t_;
    size_t& p_;
    const Alphabet& ab_;
    const std::map<std::string, long long>* env_;

    void skip_ws() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }

    std::optional<Word> factor() {
        skip_ws();
        if (p_ >= t_.size()) throw ParseError("unexpected end of word", p_);
        Word base;
        if (t_[p_] == '(') {
            ++p_;
            Word w;
            skip_ws();
            while (p_ < t_.size() && t_[p_] != ')') {
                auto f = factor();
                if (!f) throw ParseError("omitted factor inside parentheses", p_);
                w.insert(w.end(), f->begin(), f->end());
                skip_ws();
            }
            if (p_ >= t_.size()) throw ParseError("unterminated parenthesis", p_);
            ++p_;  // ')'
            base = w;
        } else {
            std::string name = take_name();
            int c = ab_.find(name);
            if (c == kNone) throw ParseError("relator uses undeclared symbol " + name, p_);
            base = {Letter{c, +1}};
        }
        skip_ws();
        if (p_ < t_.size() && t_[p_] == '^') {
            ++p_;
            long long e = exponent();
            if (e == kInfExponent) return std::nullopt;  // n = infinity: relator omitted
            if (e == 0) throw ParseError("exponent < 1", p_);
            Word unit = e < 0 ? invert(base) : base;
            Word out;
            for (long long i = 0; i < std::llabs(e); ++i)
                out.insert(out.end(), unit.begin(), unit.end());
            return out;
        }
        return base;
    }

    Word invert(const Word& w) const { return inverse_word(ab_, w); }

    std::string take_name() {
        skip_ws();
        if (p_ >= t_.size() || !std::isalpha(static_cast<unsigned char>(t_[p_])))
            throw ParseError("expected generator name", p_);
        std::string name(1, t_[p_++]);
        while (p_ < t_.size() && (t_[p_] == '*' || t_[p_] == '\''))
            name += t_[p_++];
        return name;
    }

    // exponent := integer | -1 | {expr} | expr  with expr := [int] name [(+|-) int]
    long long exponent() {
        skip_ws();
        bool braced = false;
        if (p_ < t_.size() && t_[p_] == '{') {
            braced = true;
            ++p_;
            skip_ws();
        }
        ExpExpr e;
        bool neg = false;
        if (p_ < t_.size() && t_[p_] == '-') {
            neg = true;
            ++p_;
        }
        size_t here = p_;
        if (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
            long long v = take_int();
            if (p_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[p_]))) {
                e.coeff = static_cast<int>(v);
                e.param = take_name();
            } else {
                e.add = neg ? -v : v;
                neg = false;
            }
        } else if (p_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[p_]))) {
            e.param = take_name();
        } else {
            throw ParseError("expected exponent", p_);
        }
        if (!e.param.empty()) {
            skip_ws();
            if (p_ < t_.size() && (t_[p_] == '+' || t_[p_] == '-')) {
                char op = t_[p_++];
                long long v = take_int();
                e.add = op == '+' ? v : -v;
            }
        }
        if (braced) {
            skip_ws();
            if (p_ >= t_.size() || t_[p_] != '}') throw ParseError("unterminated {exponent}", p_);
            ++p_;
        }
        if (!e.param.empty() && !env_) throw ParseError("parameter in concrete presentation", here);
        long long val = e.param.empty() ? e.add : e.eval(*env_, here);
        if (neg) val = -val;
        return val;
    }

    long long take_int() {
        skip_ws();
        size_t here = p_;
        long long v = 0;
        while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_])))
            v = v * 10 + (t_[p_++] - '0');
        if (p_ == here) throw ParseError("expected integer", p_);
        return v;
    }
};

inline std::string take_name_at(const std::string& t, size_t& p) {
    while (p < t.size() && std::isspace(static_cast<unsigned char>(t[p]))) ++p;
    if (p >= t.size() || !std::isalpha(static_cast<unsigned char>(t[p])))
        throw ParseError("expected generator name", p);
    std::string name(1, t[p++]);
    while (p < t.size() && (t[p] == '*' || t[p] == '\'')) name += t[p++];
    return name;
}

}  // namespace detail

// Parses a presentation; `env` binds template parameters when instantiating
// catalog rows (public callers pass concrete text and no env).
inline Presentation parse_presentation(const std::string& text,
                                       const std::map<std::string, long long>* env = nullptr) {
    Presentation p;
    size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    skip();
    if (pos >= text.size() || text[pos] != '<') throw ParseError("expected '<'", pos);
    ++pos;
    // generator list
    while (true) {
        std::string name = detail::take_name_at(text, pos);
        if (p.alphabet.find(name) != kNone) throw ParseError("duplicate generator " + name, pos);
        if (p.alphabet.size() >= kMaxColors) throw ParseError("too many generators", pos);
        p.alphabet.labels.push_back({name, false});
        skip();
        if (pos < text.size() && text[pos] == ',') {
            ++pos;
            continue;
        }
        break;
    }
    skip();
    if (pos >= text.size() || text[pos] != '|') throw ParseError("expected '|'", pos);
    ++pos;
    bool after_semicolon = false;
    while (true) {
        skip();
        if (pos >= text.size()) throw ParseError("unterminated presentation", pos);
        if (text[pos] == '>') {
            ++pos;
            break;
        }
        detail::WordParser wp(text, pos, p.alphabet, env);
        auto w = wp.parse();
        if (w) {
            if (w->empty()) throw ParseError("empty relator", pos);
            (after_semicolon ? p.dividing_relators : p.face_relators).push_back(*w);
        }
        skip();
        if (pos < text.size() && text[pos] == ',') ++pos;
        else if (pos < text.size() && text[pos] == ';') {
            if (after_semicolon) throw ParseError("second semicolon", pos);
            after_semicolon = true;
            ++pos;
        } else if (pos < text.size() && text[pos] == '>') {
            ++pos;
            break;
        } else
            throw ParseError("expected ',', ';' or '>'", pos);
    }
    // consume s^2 relators into involution flags, normalise signs
    std::vector<Word> faces;
    for (auto& w : p.face_relators) {
        if (w.size() == 2 && w[0].color == w[1].color &&
            !p.alphabet.involution(w[0].color)) {
            p.alphabet.labels[w[0].color].involution = true;
            continue;
        }
        faces.push_back(w);
    }
    p.face_relators = faces;
    for (auto* rel : {&p.face_relators, &p.dividing_relators})
        for (auto& w : *rel)
            for (auto& l : w)
                if (p.alphabet.involution(l.color)) l.sign = +1;
    return p;
}

// Compact text form; parses back to an equal presentation.
inline std::string presentation_to_string(const Presentation& p) {
    std::ostringstream os;
    os << "< ";
    for (int i = 0; i < p.alphabet.size(); ++i)
        os << (i ? ", " : "") << p.alphabet.symbol(i);
    os << " | ";
    auto emit_word = [&](const Word& w) {
        for (size_t i = 0; i < w.size();) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            os << p.alphabet.symbol(w[i].color);
            if (w[i].sign < 0) {
                os << "^-1";
                j = i + 1;  // inverse letters are emitted one at a time
            } else if (j - i > 1) {
                os << "^" << (j - i);
            }
            i = j;
            if (i < w.size()) os << " ";
        }
    };
    bool first = true;
    for (int c = 0; c < p.alphabet.size(); ++c)
        if (p.alphabet.involution(c)) {
            os << (first ? "" : ", ") << p.alphabet.symbol(c) << "^2";
            first = false;
        }
    for (const auto& w : p.face_relators) {
        os << (first ? "" : ", ");
        emit_word(w);
        first = false;
    }
    if (!p.dividing_relators.empty()) {
        os << " ; ";
        first = true;
        for (const auto& w : p.dividing_relators) {
            os << (first ? "" : ", ");
            emit_word(w);
            first = false;
        }
    }
    os << " >";
    return os.str();
}

inline bool presentations_equal(const Presentation& a, const Presentation& b) {
    if (!(a.alphabet == b.alphabet)) return false;
    if (a.face_relators != b.face_relators) return false;
    return a.dividing_relators == b.dividing_relators;
}

// ---------------------------------------------------------------------------
// Word extension: replace each occurrence of an old generator by a word over a
// new alphabet.  Only ss^-1 pairs created at substitution seams are cancelled.

struct Substitution {
    Alphabet target;
    std::vector<Word> image;  // indexed by old colour
};

inline Word substitute_word(const Alphabet& old_ab, const Substitution& s, const Word& w) {
    Word out;
    for (const auto& l : w) {
        Word img = s.image[l.color];
        if (img.empty()) throw std::invalid_argument("substitution image empty");
        if (l.sign < 0) img = inverse_word(s.target, img);
        for (const auto& nl : img) {
            bool cancel = false;
            if (!out.empty()) {
                const Letter& prev = out.back();
                if (prev.color == nl.color) {
                    if (s.target.involution(nl.color)) cancel = true;
                    else if (prev.sign == -nl.sign) cancel = true;
                }
            }
            if (cancel) out.pop_back();
            else out.push_back(nl);
        }
    }
    (void)old_ab;
    return out;
}

inline Presentation word_extension(const Presentation& p, const Substitution& s) {
    if (static_cast<int>(s.image.size()) != p.alphabet.size())
        throw std::invalid_argument("substitution not total on the alphabet");
    Presentation out;
    out.alphabet = s.target;
    for (const auto& w : p.face_relators) {
        Word nw = substitute_word(p.alphabet, s, w);
        if (!nw.empty()) out.face_relators.push_back(nw);
    }
    for (const auto& w : p.dividing_relators) {
        Word nw = substitute_word(p.alphabet, s, w);
        if (!nw.empty()) out.dividing_relators.push_back(nw);
    }
    return out;
}

// True iff the closed walk traced by `w` from the root visits no vertex twice
// (start excepted): the relator induces a cycle.
inline bool is_simple_on(const ColoredGraph& g, const Word& w) {
    auto t = trace_word(g, g.root, w);
    if (t.kind == TraceKind::Blocked) throw std::runtime_error("blocked trace in is_simple_on");
    if (t.kind != TraceKind::Closed) return false;
    std::set<int> seen;
    for (size_t i = 0; i + 1 < t.path.size(); ++i)
        if (!seen.insert(t.path[i]).second) return false;
    return true;
}

// Convenience: word from a compact string like "a b a^-1 b" or "(ab)^2".
inline Word parse_word(const Alphabet& ab, const std::string& text) {
    size_t pos = 0;
    detail::WordParser wp(text, pos, ab, nullptr);
    auto w = wp.parse();
    if (!w) throw ParseError("omitted word", pos);
    Word out = *w;
    for (auto& l : out)
        if (ab.involution(l.color)) l.sign = +1;
    return out;
}

}  // namespace cayley
