#pragma once

// Coset enumeration over the trivial subgroup.  build_finite runs a standard
// HLT-style enumeration to completion; build_ball runs a breadth-bounded
// variant that returns the radius-r ball together with a stability
// certificate: every relator closes from every vertex of the inner ball and a
// final fixpoint pass finds no further deduction or coincidence anywhere.

#include <cayley/presentation.hpp>

#include <numeric>

namespace cayley {

struct EnumerationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BallSpec {
    int radius = 4;
    long long coset_budget = 400000;
    int extra_margin = 0;  // added to the R_rel stability margin
};

namespace detail {

class CosetTable {
public:
    const Alphabet ab;
    std::vector<VertexRow> rows;
    std::vector<int> parent;  // union-find
    std::deque<std::pair<int, int>> coincidences;
    long long budget;

    explicit CosetTable(const Alphabet& a, long long budget_) : ab(a), budget(budget_) {
        new_coset();
    }

    int new_coset() {
        if (static_cast<long long>(rows.size()) >= budget)
            throw EnumerationError("coset budget exhausted");
        rows.emplace_back();
        parent.push_back(static_cast<int>(rows.size()) - 1);
        return static_cast<int>(rows.size()) - 1;
    }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    bool alive(int x) { return find(x) == x; }

    int get(int x, Letter l) {
        x = find(x);
        int k = (!ab.involution(l.color) && l.sign < 0) ? 1 : 0;
        int y = rows[x].s[l.color][k];
        return y == kNone ? kNone : find(y);
    }

    // x . l = y (and the inverse entry).
    void set(int x, Letter l, int y) {
        x = find(x);
        y = find(y);
        if (ab.involution(l.color)) {
            join(x, l.color, 0, y);
            join(y, l.color, 0, x);
        } else if (l.sign > 0) {
            join(x, l.color, 0, y);
            join(y, l.color, 1, x);
        } else {
            join(x, l.color, 1, y);
            join(y, l.color, 0, x);
        }
    }

    void merge(int a, int b) {
        coincidences.push_back({a, b});
        process_coincidences();
    }

    void process_coincidences() {
        while (!coincidences.empty()) {
            auto [a, b] = coincidences.front();
            coincidences.pop_front();
            a = find(a);
            b = find(b);
            if (a == b) continue;
            if (a > b) std::swap(a, b);  // keep the older coset
            parent[b] = a;
            for (int c = 0; c < ab.size(); ++c)
                for (int k = 0; k < 2; ++k) {
                    int t = rows[b].s[c][k];
                    if (t == kNone) continue;
                    rows[b].s[c][k] = kNone;
                    int& slot = rows[a].s[c][k];
                    t = find(t);
                    if (slot == kNone) {
                        slot = t;
                        // fix the reverse entry of t
                        int kk = ab.involution(c) ? 0 : 1 - k;
                        int& back = rows[t].s[c][kk];
                        if (back == kNone) back = a;
                        else if (find(back) != a) coincidences.push_back({back, a});
                    } else if (find(slot) != t) {
                        coincidences.push_back({find(slot), t});
                    }
                }
        }
    }

    std::vector<int> distances() {
        std::vector<int> dist(rows.size(), kNone);
        std::deque<int> q;
        int r = find(0);
        dist[r] = 0;
        q.push_back(r);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int c = 0; c < ab.size(); ++c)
                for (int k = 0; k < (ab.involution(c) ? 1 : 2); ++k) {
                    int w = rows[v].s[c][k];
                    if (w == kNone) continue;
                    w = find(w);
                    if (dist[w] == kNone) {
                        dist[w] = dist[v] + 1;
                        q.push_back(w);
                    }
                }
        }
        return dist;
    }

private:
    void join(int x, int c, int k, int y) {
        int& slot = rows[x].s[c][k];
        if (slot == kNone) slot = y;
        else if (find(slot) != y) coincidences.push_back({find(slot), y});
    }
};

// Scan relator w from coset x; fill a single gap, or record a coincidence
// when the walk closes on the wrong coset.  Returns true if anything changed.
inline bool scan_and_fill(CosetTable& t, int x, const Word& w) {
    x = t.find(x);
    int f = x;
    size_t fi = 0;
    while (fi < w.size()) {
        int n = t.get(f, w[fi]);
        if (n == kNone) break;
        f = n;
        ++fi;
    }
    if (fi == w.size()) {
        if (f != x) {
            t.merge(f, x);
            return true;
        }
        return false;
    }
    int b = x;
    size_t bi = w.size();
    while (bi > fi) {
        Letter inv{w[bi - 1].color, t.ab.involution(w[bi - 1].color) ? +1 : -w[bi - 1].sign};
        int n = t.get(b, inv);
        if (n == kNone) break;
        b = n;
        --bi;
    }
    if (bi == fi) {
        if (t.find(f) != t.find(b)) {
            t.merge(f, b);
            return true;
        }
        return false;
    }
    if (bi == fi + 1) {
        t.set(f, w[fi], b);
        return true;
    }
    return false;
}

inline std::vector<Word> relators_with_involutions(const Presentation& p) {
    std::vector<Word> rel = p.all_relators();
    // involution squares participate as relators s^2 so that s-edges close
    for (int c = 0; c < p.alphabet.size(); ++c)
        if (p.alphabet.involution(c)) rel.push_back({Letter{c, 1}, Letter{c, 1}});
    return rel;
}

inline ColoredGraph table_to_graph(CosetTable& t, int keep_radius) {
    auto dist = t.distances();
    std::vector<int> remap(t.rows.size(), kNone);
    ColoredGraph g(t.ab);
    std::vector<int> kept;
    for (int v = 0; v < static_cast<int>(t.rows.size()); ++v)
        if (t.alive(v) && dist[v] != kNone && dist[v] <= keep_radius) {
            remap[v] = g.add_vertex();
            kept.push_back(v);
        }
    for (int v : kept)
        for (int c = 0; c < t.ab.size(); ++c) {
            int w = t.rows[v].s[c][0];
            if (w == kNone) continue;
            w = t.find(w);
            if (remap[w] == kNone) continue;
            if (t.ab.involution(c)) {
                if (v <= w && g.rows[remap[v]].s[c][0] == kNone)
                    g.set_edge(remap[v], c, remap[w]);
            } else {
                g.set_edge(remap[v], c, remap[w]);
            }
        }
    g.root = remap[t.find(0)];
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.complete(v)) g.boundary[v] = 1;
    return g;
}

}  // namespace detail

// Complete Cayley graph of a finite-group presentation; throws when the budget
// is exhausted before the enumeration closes (never returns a wrong graph).
inline ColoredGraph build_finite(const Presentation& p, long long coset_budget = 200000) {
    detail::CosetTable t(p.alphabet, coset_budget);
    auto rel = detail::relators_with_involutions(p);
    auto scan_all = [&] {
        bool sc = true;
        while (sc) {
            sc = false;
            for (int x = 0; x < static_cast<int>(t.rows.size()); ++x) {
                if (!t.alive(x)) continue;
                for (const auto& w : rel)
                    if (detail::scan_and_fill(t, x, w)) sc = true;
            }
        }
    };
    while (true) {
        scan_all();
        int hx = kNone, hc = 0, hk = 0;
        for (int x = 0; x < static_cast<int>(t.rows.size()) && hx == kNone; ++x) {
            if (!t.alive(x)) continue;
            for (int c = 0; c < p.alphabet.size() && hx == kNone; ++c)
                for (int k = 0; k < (p.alphabet.involution(c) ? 1 : 2); ++k)
                    if (t.rows[x].s[c][k] == kNone) {
                        hx = x;
                        hc = c;
                        hk = k;
                        break;
                    }
        }
        if (hx == kNone) break;
        int n = t.new_coset();
        t.set(hx, {hc, hk == 0 ? +1 : -1}, n);
    }
    auto g = detail::table_to_graph(t, static_cast<int>(t.rows.size()) + 1);
    if (!g.is_complete_graph()) throw EnumerationError("enumeration did not close");
    for (int v = 0; v < g.num_vertices(); ++v)
        for (const auto& w : rel)
            if (trace_word(g, v, w).kind != TraceKind::Closed)
                throw EnumerationError("relator open after enumeration");
    return g;
}

struct BallResult {
    ColoredGraph graph;     // stable region, boundary marked
    int certified_radius;   // relators close from every vertex within this distance
};

// Breadth-bounded enumeration.  Vertices are defined out to the stability
// margin; relator scans run to a global fixpoint.  A relator walk from a
// certified vertex stays within radius + len/2 of the root, so half the
// maximum relator length (plus slack) suffices as the margin.
inline BallResult build_ball(const Presentation& p, const BallSpec& spec) {
    const int r_rel = p.max_relator_length();
    const int dmax = spec.radius + (r_rel + 1) / 2 + 2 + spec.extra_margin;
    detail::CosetTable t(p.alphabet, spec.coset_budget);
    auto rel = detail::relators_with_involutions(p);
    bool changed = true;
    int rounds = 0;
    while (changed) {
        if (++rounds > 10000) throw EnumerationError("enumeration failed to stabilise");
        changed = false;
        auto dist = t.distances();
        // completion out to dmax (definitions grow the table; new cosets are
        // handled next round once their distances are known)
        const int known = static_cast<int>(dist.size());
        for (int x = 0; x < known; ++x) {
            if (!t.alive(x) || dist[x] == kNone || dist[x] >= dmax) continue;
            for (int c = 0; c < p.alphabet.size(); ++c)
                for (int k = 0; k < (p.alphabet.involution(c) ? 1 : 2); ++k)
                    if (t.alive(x) && t.rows[x].s[c][k] == kNone) {
                        int n = t.new_coset();
                        t.set(x, {c, k == 0 ? +1 : -1}, n);
                        changed = true;
                    }
        }
        // relator scans to fixpoint
        bool scan_changed = true;
        while (scan_changed) {
            scan_changed = false;
            for (int x = 0; x < static_cast<int>(t.rows.size()); ++x) {
                if (!t.alive(x)) continue;
                for (const auto& w : rel)
                    if (detail::scan_and_fill(t, x, w)) scan_changed = changed = true;
            }
        }
    }
    auto g = detail::table_to_graph(t, dmax);
    // certificate: every relator closes from every vertex of the inner ball
    auto dist = g.bfs_dist(g.root);
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (dist[v] == kNone || dist[v] > spec.radius) continue;
        if (!g.complete(v)) throw EnumerationError("incomplete vertex inside requested ball");
        for (const auto& w : rel) {
            auto tr = trace_word(g, v, w);
            if (tr.kind != TraceKind::Closed)
                throw EnumerationError("relator fails to close inside requested ball");
        }
    }
    return {std::move(g), spec.radius};
}

}  // namespace cayley
