#pragma once

// Non-crossing patterns: words over {b,c,d} that may serve as dividing
// relators of the pattern-parameterised catalog rows.  A pattern is
// non-crossing when
//   (i)   it contains all three letters,
//   (ii)  it has no consecutive identical letters (cyclically),
//   (iii) it is not of the form (bcd)^n up to rotation and inversion,
//   (iv)  no rotation of a complying cycle crosses it.
// Condition (iv) is decided geometrically at one period: lay the cycle out on
// a disk with all vertices of one spin, attach the pending edges on the sides
// the spin forces, and check every alignment of the pattern against itself
// that shares at least one edge: a crossing is an alignment forced to emit
// continuation darts into both sides of the cycle.

#include <cayley/graph.hpp>

#include <sstream>

namespace cayley {

struct Pattern {
    std::string letters;  // over {b,c,d}
};

inline Pattern parse_pattern(const std::string& text) {
    // accepts spaced/parenthesised forms like "(d cbc d cbcbc)^2"
    std::string flat;
    std::vector<std::pair<std::string, int>> stack;  // group start + repeat slot
    std::vector<size_t> starts;
    size_t i = 0;
    while (i < text.size()) {
        char ch = text[i];
        if (ch == 'b' || ch == 'c' || ch == 'd') {
            flat += ch;
            ++i;
        } else if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
        } else if (ch == '(') {
            starts.push_back(flat.size());
            ++i;
        } else if (ch == ')') {
            if (starts.empty()) throw std::invalid_argument("pattern: unmatched ')'");
            size_t s = starts.back();
            starts.pop_back();
            ++i;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    e = e * 10 + (text[i++] - '0');
                if (e < 1) throw std::invalid_argument("pattern exponent < 1");
                std::string grp = flat.substr(s);
                for (int k = 1; k < e; ++k) flat += grp;
            }
        } else if (ch == '^') {
            ++i;
            int e = 0;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                e = e * 10 + (text[i++] - '0');
            if (e < 1 || flat.empty()) throw std::invalid_argument("bad pattern exponent");
            char last = flat.back();
            for (int k = 1; k < e; ++k) flat += last;
        } else {
            throw std::invalid_argument(std::string("pattern: non-alphabet letter '") + ch + "'");
        }
    }
    if (!starts.empty()) throw std::invalid_argument("pattern: unmatched '('");
    return {flat};
}

inline std::string rotate_string(const std::string& s, size_t r) {
    return s.substr(r) + s.substr(0, r);
}

// lexicographically least over all rotations and the inversion (b < c < d)
inline std::string canonical_pattern(const std::string& p) {
    std::string best;
    std::string rev(p.rbegin(), p.rend());
    for (const std::string* base : {&p, static_cast<const std::string*>(&rev)})
        for (size_t r = 0; r < p.size(); ++r) {
            std::string cand = rotate_string(*base, r);
            if (best.empty() || cand < best) best = cand;
        }
    return best;
}

struct NoncrossingVerdict {
    bool ok = false;
    std::string reason;  // names the first violated condition
};

namespace detail {

// The disk layout: cycle v_0..v_{L-1} with edge i coloured p[i] joining v_i to
// v_{i+1}, every vertex of the same spin.  side_of_pending[i] = which side of
// the cycle the third edge at v_i points into (+1/-1).
struct PatternDisk {
    std::string p;
    std::vector<char> pending;  // colour of the third edge at v_i
    std::vector<int> side;      // +1 / -1
};

inline PatternDisk lay_out(const std::string& p) {
    const int L = static_cast<int>(p.size());
    PatternDisk d;
    d.p = p;
    d.pending.resize(L);
    d.side.resize(L);
    auto idx = [](char ch) { return ch == 'b' ? 0 : ch == 'c' ? 1 : 2; };
    for (int i = 0; i < L; ++i) {
        char in = p[(i - 1 + L) % L], out = p[i];
        char third = 'b' + 'c' + 'd' - in - out;
        d.pending[i] = third;
        // Fixed spin (b,c,d) clockwise at every vertex.  Walking the cycle
        // v_{i-1} -> v_i -> v_{i+1}, the pending edge lies left or right of
        // the walk depending on whether `out` is the clockwise successor of
        // `in` (then the third colour sits on one fixed side) or not.
        int succ = (idx(in) + 1) % 3;
        d.side[i] = (succ == idx(out)) ? +1 : -1;
    }
    return d;
}

// All alignments of the cyclic word against itself (both directions) whose
// letter match spans a maximal run containing at least one edge; for each,
// report whether the two continuation darts exit on the same side.
inline bool crossing_found(const std::string& p) {
    const int L = static_cast<int>(p.size());
    PatternDisk disk = lay_out(p);
    auto md = [L](int x) { return (x % L + L) % L; };
    // D is the pattern read along C with offset r, direction e (+1 forward,
    // -1 reversed).  D's edge t lies on C's edge r+t (e=+1) or r-1-t (e=-1).
    for (int e : {+1, -1})
        for (int r = 0; r < L; ++r) {
            if (e == +1 && r == 0) continue;  // D == C
            std::vector<char> agree(L);
            bool all = true;
            for (int t = 0; t < L; ++t) {
                int ci = e == +1 ? md(r + t) : md(r - 1 - t);
                agree[t] = p[t] == p[ci];
                all = all && agree[t];
            }
            if (all) continue;  // D coincides with C (or its mirror image)
            int t0 = 0;
            while (agree[t0]) ++t0;  // start scanning at a mismatch
            for (int t = t0; t < t0 + L;) {
                if (!agree[md(t)]) {
                    ++t;
                    continue;
                }
                int start = t;
                while (t < t0 + L && agree[md(t)]) ++t;
                int end = t;  // run = D-edges start..end-1 (mod L), maximal
                // D enters the shared path before edge start and leaves after
                // edge end-1; the C-vertices at the path's two ends:
                int c_begin = e == +1 ? md(r + start) : md(r - start);
                int c_end = e == +1 ? md(r + end) : md(r - end);
                // D's continuation darts must be the pending darts there (no
                // other colour is available without extending the path)
                char before = p[md(start - 1)];
                char after = p[md(end)];
                if (before != disk.pending[c_begin] || after != disk.pending[c_end])
                    continue;  // alignment impossible as a maximal intersection
                if (disk.side[c_begin] != disk.side[c_end]) return true;
            }
        }
    return false;
}

}  // namespace detail

struct PatternDecomposition {
    char dominant;
    std::string A;  // some rotation of the roles of bcd, dominant in the middle
    std::string Z;  // symmetric
    int n;          // period count, >= 2
};

// P = (AZ)^n up to rotation and inversion, A the three-letter word with the
// dominant colour in the middle, Z symmetric.
inline std::optional<PatternDecomposition> decompose_AZ(const Pattern& pat) {
    const std::string p0 = pat.letters;
    const int L = static_cast<int>(p0.size());
    if (L < 4 || L % 2) return std::nullopt;
    std::string rev(p0.rbegin(), p0.rend());
    for (const std::string* base : {&p0, static_cast<const std::string*>(&rev)}) {
        const std::string& p = *base;
        // dominant colour: the letter at every other position
        for (int phase = 0; phase < 2; ++phase) {
            char dom = p[phase];
            bool ok = true;
            for (int i = phase; i < L && ok; i += 2) ok = p[i] == dom;
            for (int i = (phase + 1) % 2; i < L && ok; i += 2) ok = p[i] != dom;
            if (!ok) continue;
            // try period lengths: |A| + |Z| = 4 + 2t
            for (int period = 4; period <= L; period += 2) {
                if (L % period) continue;
                int n = L / period;
                if (n < 2) continue;
                for (int s = 0; s < L; ++s) {
                    // A at positions s..s+2, dominant in the middle
                    char x = p[s], mid = p[(s + 1) % L], y = p[(s + 2) % L];
                    if (mid != dom || x == y || x == dom || y == dom) continue;
                    std::string A{x, mid, y};
                    std::string Z;
                    for (int t = 3; t < period; ++t) Z += p[(s + t) % L];
                    std::string zr(Z.rbegin(), Z.rend());
                    if (Z != zr) continue;
                    bool tile = true;
                    for (int k = 0; k < n && tile; ++k)
                        for (int t = 0; t < period && tile; ++t)
                            tile = p[(s + k * period + t) % L] == (t < 3 ? A[t] : Z[t - 3]);
                    if (!tile) continue;
                    return PatternDecomposition{dom, A, Z, n};
                }
            }
        }
    }
    return std::nullopt;
}

inline NoncrossingVerdict is_noncrossing(const Pattern& pat) {
    const std::string& p = pat.letters;
    for (char ch : p)
        if (ch != 'b' && ch != 'c' && ch != 'd')
            throw std::invalid_argument("pattern: non-alphabet letter");
    if (p.size() < 4) return {false, "too short to satisfy conditions (i)+(ii) on a cycle"};
    bool hb = false, hc = false, hd = false;
    for (char ch : p) (ch == 'b' ? hb : ch == 'c' ? hc : hd) = true;
    if (!hb || !hc || !hd) return {false, "condition (i): must contain all three letters"};
    for (size_t i = 0; i < p.size(); ++i)
        if (p[i] == p[(i + 1) % p.size()])
            return {false, "condition (ii): consecutive identical letters"};
    if (p.size() % 3 == 0) {
        std::string bcd;
        for (size_t i = 0; i < p.size() / 3; ++i) bcd += "bcd";
        if (canonical_pattern(p) == canonical_pattern(bcd))
            return {false, "condition (iii): of the form (bcd)^n"};
    }
    if (detail::crossing_found(p))
        return {false, "condition (iv): a rotation crosses the cycle"};
    // a word with no (AZ)^n structure (n >= 2) has rotations that cannot keep
    // to one side over a full period; treated as crossing
    if (!decompose_AZ(pat))
        return {false, "condition (iv): no (AZ)^n decomposition"};
    return {true, ""};
}


// regular patterns: (d c (bc)^m)^n up to rotation and inversion
inline bool is_regular(const Pattern& pat) {
    const int L = static_cast<int>(pat.letters.size());
    for (int m = 1; 2 * m + 2 <= L; ++m) {
        int period = 2 * m + 2;
        if (L % period) continue;
        int n = L / period;
        std::string unit = "dc";
        for (int i = 0; i < m; ++i) unit += "bc";
        std::string whole;
        for (int i = 0; i < n; ++i) whole += unit;
        if (canonical_pattern(whole) == canonical_pattern(pat.letters)) return true;
    }
    return false;
}

// All non-crossing patterns of length <= max_len, canonical and sorted.
inline std::vector<Pattern> enumerate_noncrossing(int max_len) {
    std::set<std::string> seen;
    std::vector<Pattern> out;
    for (int len = 4; len <= max_len; ++len) {
        std::string w(len, 'b');
        const char letters[3] = {'b', 'c', 'd'};
        std::vector<int> digits(len, 0);
        while (true) {
            for (int i = 0; i < len; ++i) w[i] = letters[digits[i]];
            std::string canon = canonical_pattern(w);
            if (!seen.count(canon)) {
                seen.insert(canon);
                if (is_noncrossing({canon}).ok) out.push_back({canon});
            }
            int i = len - 1;
            while (i >= 0 && digits[i] == 2) digits[i--] = 0;
            if (i < 0) break;
            ++digits[i];
        }
    }
    std::sort(out.begin(), out.end(), [](const Pattern& a, const Pattern& b) {
        if (a.letters.size() != b.letters.size()) return a.letters.size() < b.letters.size();
        return a.letters < b.letters;
    });
    return out;
}

}  // namespace cayley
