#pragma once

// Syntactic classification of a presentation against the catalog: match up to
// generator renaming and relator rotation/inversion, extracting parameters.

#include <cayley/catalog.hpp>

namespace cayley {

struct ClassifyResult {
    bool known = false;
    int id = 0;
    std::string name;
    std::map<std::string, long long> params;
    std::string pattern;
};

namespace detail {

// template relator tokens
struct TItem {
    bool group = false;
    int color = kNone;  // letter
    int sign = +1;
    std::vector<TItem> sub;  // group
    // exponent expression coeff*param + add (param empty = constant)
    int coeff = 1;
    std::string param;
    long long add = 0;
};

struct TRel {
    std::vector<TItem> items;
};

struct EntryTemplates {
    Alphabet alphabet;  // with involution flags resolved
    std::vector<TRel> faces;
    std::vector<TRel> dividing;
    bool pattern_divider = false;  // dividing side is the pattern P
};

// minimal tokenizer for the catalog template grammar
class TemplateParser {
public:
    TemplateParser(const std::string& text) : t_(text) {}

    EntryTemplates parse() {
        EntryTemplates out;
        expect('<');
        while (true) {
            std::string name = take_name();
            out.alphabet.labels.push_back({name, false});
            skip();
            if (t_[p_] == ',') {
                ++p_;
                continue;
            }
            break;
        }
        expect('|');
        bool after_semi = false;
        while (true) {
            skip();
            if (t_[p_] == '>') break;
            if (t_[p_] == 'P' && after_semi) {
                out.pattern_divider = true;
                ++p_;
                skip();
                continue;
            }
            TRel rel;
            while (p_ < t_.size() && t_[p_] != ',' && t_[p_] != ';' && t_[p_] != '>') {
                rel.items.push_back(item(out.alphabet));
                skip();
            }
            // s^2 relators become involution flags
            if (!after_semi && rel.items.size() == 1 && !rel.items[0].group &&
                rel.items[0].param.empty() && rel.items[0].add == 2) {
                out.alphabet.labels[rel.items[0].color].involution = true;
            } else if (!rel.items.empty()) {
                (after_semi ? out.dividing : out.faces).push_back(rel);
            }
            skip();
            if (t_[p_] == ',') ++p_;
            else if (t_[p_] == ';') {
                after_semi = true;
                ++p_;
            }
        }
        return out;
    }

private:
    const std::string& t_;
    size_t p_ = 0;

    void skip() {
        while (p_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[p_]))) ++p_;
    }
    void expect(char c) {
        skip();
        if (p_ >= t_.size() || t_[p_] != c)
            throw std::logic_error(std::string("template: expected ") + c);
        ++p_;
    }
    std::string take_name() {
        skip();
        std::string n(1, t_[p_++]);
        while (p_ < t_.size() && (t_[p_] == '*' || t_[p_] == '\'')) n += t_[p_++];
        return n;
    }

    TItem item(const Alphabet& ab) {
        skip();
        TItem it;
        if (t_[p_] == '(') {
            ++p_;
            it.group = true;
            skip();
            while (t_[p_] != ')') {
                it.sub.push_back(item(ab));
                skip();
            }
            ++p_;
        } else {
            std::string name = take_name();
            it.color = ab.find(name);
            if (it.color == kNone) throw std::logic_error("template letter " + name);
        }
        skip();
        it.add = it.group ? 1 : 1;
        if (p_ < t_.size() && t_[p_] == '^') {
            ++p_;
            skip();
            bool braced = false;
            if (t_[p_] == '{') {
                braced = true;
                ++p_;
                skip();
            }
            bool neg = false;
            if (t_[p_] == '-') {
                neg = true;
                ++p_;
            }
            long long num = 0;
            bool has_num = false;
            while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_]))) {
                num = num * 10 + (t_[p_++] - '0');
                has_num = true;
            }
            if (p_ < t_.size() && std::isalpha(static_cast<unsigned char>(t_[p_])) &&
                t_[p_] != 'P') {
                it.coeff = has_num ? static_cast<int>(num) : 1;
                it.param = take_name();
                skip();
                it.add = 0;
                if (t_[p_] == '+' || t_[p_] == '-') {
                    char op = t_[p_++];
                    long long v = 0;
                    while (p_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[p_])))
                        v = v * 10 + (t_[p_++] - '0');
                    it.add = op == '+' ? v : -v;
                }
            } else {
                it.add = neg ? -num : num;
            }
            if (braced) {
                skip();
                if (t_[p_] != '}') throw std::logic_error("template: unterminated {exp}");
                ++p_;
            }
            if (neg && !it.param.empty()) throw std::logic_error("template: negative param exp");
            if (!it.param.empty()) {
            } else if (it.add < 0) {
                it.sign = -1;
                it.add = -it.add;
            }
        }
        return it;
    }
};

using Bindings = std::map<std::string, long long>;

// expands an item under current bindings when its exponent is determined
inline bool item_exponent(const TItem& it, const Bindings& b, long long& out) {
    if (it.param.empty()) {
        out = it.add;
        return true;
    }
    auto f = b.find(it.param);
    if (f == b.end()) return false;
    out = it.coeff * f->second + it.add;
    return true;
}

inline bool bind_exponent(const TItem& it, long long value, Bindings& b) {
    if (it.param.empty()) return value == it.add;
    long long feasible = value - it.add;
    if (feasible % it.coeff) return false;
    long long pv = feasible / it.coeff;
    if (pv < 1) return false;
    auto f = b.find(it.param);
    if (f != b.end()) return f->second == pv;
    b[it.param] = pv;
    return true;
}

// match a literal pass of the item sequence (one repetition) against word w
// starting at pos; letters are mapped through perm (template colour ->
// target colour).
inline bool match_items(const std::vector<TItem>& items, size_t idx, const Word& w, size_t pos,
                        const std::vector<int>& perm, const Alphabet& target_ab, Bindings& b,
                        size_t& end_pos);

inline bool match_one(const TItem& it, const Word& w, size_t pos, const std::vector<int>& perm,
                      const Alphabet& target_ab, Bindings& b, size_t& end_pos) {
    if (!it.group) {
        long long e;
        if (item_exponent(it, b, e)) {
            if (e < 1) return false;
            for (long long i = 0; i < e; ++i) {
                if (pos >= w.size()) return false;
                int tc = perm[it.color];
                int sign = target_ab.involution(tc) ? +1 : it.sign;
                if (w[pos].color != tc || w[pos].sign != sign) return false;
                ++pos;
            }
            end_pos = pos;
            return true;
        }
        // unbound: greedily count repeats of the letter, then bind
        int tc = perm[it.color];
        int sign = target_ab.involution(tc) ? +1 : it.sign;
        size_t cnt = 0;
        while (pos + cnt < w.size() && w[pos + cnt].color == tc && w[pos + cnt].sign == sign)
            ++cnt;
        // try binding every count from the maximum down
        for (size_t k = cnt; k >= 1; --k) {
            Bindings b2 = b;
            if (!bind_exponent(it, static_cast<long long>(k), b2)) continue;
            b = b2;
            end_pos = pos + k;
            return true;  // letter repeats are unambiguous: longest feasible
        }
        return false;
    }
    // group
    long long e;
    if (item_exponent(it, b, e)) {
        if (e < 1) return false;
        size_t cur = pos;
        for (long long i = 0; i < e; ++i)
            if (!match_items(it.sub, 0, w, cur, perm, target_ab, b, cur)) return false;
        end_pos = cur;
        return true;
    }
    // unbound group exponent: match one repetition (binding inner params),
    // then count further repetitions
    size_t cur = pos;
    Bindings b2 = b;
    if (!match_items(it.sub, 0, w, cur, perm, target_ab, b2, cur)) return false;
    long long reps = 1;
    while (true) {
        size_t nxt = cur;
        Bindings b3 = b2;
        if (!match_items(it.sub, 0, w, nxt, perm, target_ab, b3, nxt)) break;
        if (b3 != b2) break;  // inner params must stay fixed across repeats
        cur = nxt;
        ++reps;
    }
    // try binding from the longest run downwards (shorter runs can be valid
    // when the next template item continues with the same letters)
    size_t unit = (cur - pos) / reps;
    for (long long k = reps; k >= 1; --k) {
        Bindings b4 = b2;
        if (!bind_exponent(it, k, b4)) continue;
        b = b4;
        end_pos = pos + unit * k;
        return true;
    }
    return false;
}

inline bool match_items(const std::vector<TItem>& items, size_t idx, const Word& w, size_t pos,
                        const std::vector<int>& perm, const Alphabet& target_ab, Bindings& b,
                        size_t& end_pos) {
    if (idx == items.size()) {
        end_pos = pos;
        return true;
    }
    size_t after = pos;
    Bindings saved = b;
    if (match_one(items[idx], w, pos, perm, target_ab, b, after)) {
        if (match_items(items, idx + 1, w, after, perm, target_ab, b, end_pos)) return true;
    }
    b = saved;
    return false;
}

inline bool match_relator(const TRel& rel, const Word& target, const std::vector<int>& perm,
                          const Alphabet& target_ab, Bindings& b) {
    // try every rotation and the inversion of the target
    std::vector<Word> variants;
    Word w = target;
    for (int dir = 0; dir < 2; ++dir) {
        for (size_t r = 0; r < w.size(); ++r) {
            Word rot(w.begin() + r, w.end());
            rot.insert(rot.end(), w.begin(), w.begin() + r);
            variants.push_back(rot);
        }
        w = inverse_word(target_ab, w);
    }
    for (const auto& v : variants) {
        Bindings b2 = b;
        size_t end = 0;
        if (match_items(rel.items, 0, v, 0, perm, target_ab, b2, end) && end == v.size()) {
            b = b2;
            return true;
        }
    }
    return false;
}

inline bool match_entry(const TableEntry& e, const Presentation& p, ClassifyResult& out) {
    EntryTemplates tpl = TemplateParser(e.templ).parse();
    if (tpl.alphabet.size() != p.alphabet.size()) return false;
    size_t want_dividing = tpl.pattern_divider ? 1 : tpl.dividing.size();
    if (p.dividing_relators.size() != want_dividing) return false;
    if (p.face_relators.size() != tpl.faces.size()) return false;
    // generator bijections respecting involution flags
    std::vector<int> idx(p.alphabet.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end());
    do {
        bool flags_ok = true;
        for (int c = 0; c < tpl.alphabet.size() && flags_ok; ++c)
            flags_ok = tpl.alphabet.involution(c) == p.alphabet.involution(idx[c]);
        if (!flags_ok) continue;
        // relator assignment: permutations of the target relators
        std::vector<int> fidx(p.face_relators.size());
        std::iota(fidx.begin(), fidx.end(), 0);
        std::sort(fidx.begin(), fidx.end());
        do {
            Bindings b;
            bool ok = true;
            for (size_t i = 0; i < tpl.faces.size() && ok; ++i)
                ok = match_relator(tpl.faces[i], p.face_relators[fidx[i]], idx, p.alphabet, b);
            if (!ok) continue;
            std::vector<int> didx(p.dividing_relators.size());
            std::iota(didx.begin(), didx.end(), 0);
            std::sort(didx.begin(), didx.end());
            bool matched = false;
            do {
                Bindings b2 = b;
                bool ok2 = true;
                std::string pattern;
                if (tpl.pattern_divider) {
                    // the dividing relator must be a pattern over b,c,d after
                    // renaming through the bijection
                    const Word& w = p.dividing_relators[didx[0]];
                    std::string s;
                    for (const auto& l : w) {
                        int tc = kNone;
                        for (int c = 0; c < tpl.alphabet.size(); ++c)
                            if (idx[c] == l.color) tc = c;
                        s += tpl.alphabet.symbol(tc);
                    }
                    Pattern pat{s};
                    auto verdict = is_noncrossing(pat);
                    ok2 = verdict.ok;
                    if (ok2 && e.pattern_must_be_nonregular && is_regular(pat)) ok2 = false;
                    pattern = s;
                } else {
                    for (size_t i = 0; i < tpl.dividing.size() && ok2; ++i)
                        ok2 = match_relator(tpl.dividing[i], p.dividing_relators[didx[i]], idx,
                                            p.alphabet, b2);
                }
                if (!ok2) continue;
                // domain check
                try {
                    check_domain(e, b2);
                } catch (const DomainError&) {
                    continue;
                }
                out.known = true;
                out.id = e.id;
                out.name = e.name;
                out.params = b2;
                out.pattern = pattern;
                matched = true;
                break;
            } while (std::next_permutation(didx.begin(), didx.end()));
            if (matched) return true;
        } while (std::next_permutation(fidx.begin(), fidx.end()));
    } while (std::next_permutation(idx.begin(), idx.end()));
    return false;
}

}  // namespace detail

// Matches p against all 41 rows; returns the first matching row in id order
// with the extracted parameters, or unknown.
inline ClassifyResult classify(const Presentation& p) {
    ClassifyResult r;
    for (const auto& e : catalog())
        if (detail::match_entry(e, p, r)) return r;
    return {};
}

}  // namespace cayley
