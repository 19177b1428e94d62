#pragma once

// Dart-based, properly edge-coloured graphs for cubic Cayley graph work.
// A graph is either a complete finite Cayley graph or a rooted ball of an
// infinite one; vertices where some colour is missing carry a boundary flag.

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace cayley {

constexpr int kNone = -1;
constexpr int kMaxColors = 3;

struct ColorLabel {
    std::string symbol;
    bool involution = true;
};

struct Alphabet {
    std::vector<ColorLabel> labels;

    int size() const { return static_cast<int>(labels.size()); }
    int find(const std::string& sym) const {
        for (int i = 0; i < size(); ++i)
            if (labels[i].symbol == sym) return i;
        return kNone;
    }
    bool involution(int c) const { return labels[c].involution; }
    const std::string& symbol(int c) const { return labels[c].symbol; }
    bool operator==(const Alphabet& o) const {
        if (labels.size() != o.labels.size()) return false;
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i].symbol != o.labels[i].symbol ||
                labels[i].involution != o.labels[i].involution)
                return false;
        return true;
    }
};

// One step of a word: colour index and direction (+1 forward, -1 inverse).
// Involution letters always carry sign +1.
struct Letter {
    int color = 0;
    int sign = +1;
    bool operator==(const Letter& o) const { return color == o.color && sign == o.sign; }
};
using Word = std::vector<Letter>;

inline Word inverse_word(const Alphabet& ab, const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        r.push_back({it->color, ab.involution(it->color) ? +1 : -it->sign});
    return r;
}

inline std::string word_to_string(const Alphabet& ab, const Word& w) {
    std::string s;
    for (const auto& l : w) {
        if (!s.empty()) s += ' ';
        s += ab.symbol(l.color);
        if (l.sign < 0) s += "^-1";
    }
    return s;
}

// Cyclic-word equality up to rotation and (optionally) inversion.
inline bool cyclically_equal(const Word& a, const Word& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    const size_t n = a.size();
    for (size_t s = 0; s < n; ++s) {
        bool ok = true;
        for (size_t i = 0; i < n && ok; ++i)
            ok = (a[i] == b[(s + i) % n]);
        if (ok) return true;
    }
    return false;
}

inline bool cyclically_equal_upto_inversion(const Alphabet& ab, const Word& a, const Word& b) {
    return cyclically_equal(a, b) || cyclically_equal(a, inverse_word(ab, b));
}

// Per-vertex slot table.  Slot layout for colour c:
//   involution:      slot(c,0) = neighbour, slot(c,1) unused
//   non-involution:  slot(c,0) = head of the outgoing dart, slot(c,1) = tail of
//                    the incoming dart
struct VertexRow {
    std::array<std::array<int, 2>, kMaxColors> s;
    VertexRow() {
        for (auto& a : s) a = {kNone, kNone};
    }
};

class ColoredGraph {
public:
    Alphabet alphabet;
    std::vector<VertexRow> rows;
    std::vector<char> boundary;  // explicit incomplete marker
    int root = 0;

    ColoredGraph() = default;
    explicit ColoredGraph(Alphabet ab) : alphabet(std::move(ab)) {}

    int num_vertices() const { return static_cast<int>(rows.size()); }

    int add_vertex(bool is_boundary = false) {
        rows.emplace_back();
        boundary.push_back(is_boundary ? 1 : 0);
        return num_vertices() - 1;
    }

    int slot(int v, int c, int k) const { return rows[v].s[c][k]; }

    // u --c--> v; for involutions this is the single undirected edge.
    void set_edge(int u, int c, int v) {
        if (alphabet.involution(c)) {
            check_free(u, c, 0);
            if (u != v) check_free(v, c, 0);
            rows[u].s[c][0] = v;
            rows[v].s[c][0] = u;
        } else {
            check_free(u, c, 0);
            check_free(v, c, 1);
            rows[u].s[c][0] = v;
            rows[v].s[c][1] = u;
        }
    }

    bool has_edge(int u, int c, int sign) const { return neighbor(u, {c, sign}) != kNone; }

    int neighbor(int v, Letter l) const {
        if (alphabet.involution(l.color)) return rows[v].s[l.color][0];
        return l.sign > 0 ? rows[v].s[l.color][0] : rows[v].s[l.color][1];
    }

    // Number of darts at v, involutions counted once.
    int degree(int v) const {
        int d = 0;
        for (int c = 0; c < alphabet.size(); ++c) {
            if (alphabet.involution(c)) {
                if (rows[v].s[c][0] != kNone) ++d;
            } else {
                if (rows[v].s[c][0] != kNone) ++d;
                if (rows[v].s[c][1] != kNone) ++d;
            }
        }
        return d;
    }

    bool complete(int v) const {
        for (int c = 0; c < alphabet.size(); ++c) {
            if (rows[v].s[c][0] == kNone) return false;
            if (!alphabet.involution(c) && rows[v].s[c][1] == kNone) return false;
        }
        return true;
    }

    // Checks the Sabidussi precondition: at most one dart per colour/direction
    // and inverse slots paired up.
    bool properly_colored(std::string* why = nullptr) const {
        for (int v = 0; v < num_vertices(); ++v) {
            for (int c = 0; c < alphabet.size(); ++c) {
                int w = rows[v].s[c][0];
                if (w == kNone) continue;
                if (alphabet.involution(c)) {
                    if (rows[w].s[c][0] != v) {
                        if (why) *why = "involution edge not symmetric";
                        return false;
                    }
                } else {
                    if (rows[w].s[c][1] != v) {
                        if (why) *why = "dart pair broken";
                        return false;
                    }
                }
            }
        }
        return true;
    }

    std::vector<int> bfs_dist(int from) const {
        std::vector<int> dist(num_vertices(), kNone);
        std::deque<int> q;
        dist[from] = 0;
        q.push_back(from);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int c = 0; c < alphabet.size(); ++c) {
                for (int k = 0; k < (alphabet.involution(c) ? 1 : 2); ++k) {
                    int w = rows[v].s[c][k];
                    if (w != kNone && dist[w] == kNone) {
                        dist[w] = dist[v] + 1;
                        q.push_back(w);
                    }
                }
            }
        }
        return dist;
    }

    // Largest r such that every vertex within distance < r of the root is
    // complete.  Complete graphs report a radius past the diameter.
    int certified_radius() const {
        auto dist = bfs_dist(root);
        int r = num_vertices() + 1;
        for (int v = 0; v < num_vertices(); ++v)
            if (dist[v] != kNone && (!complete(v) || boundary[v])) r = std::min(r, dist[v]);
        return r;
    }

    bool is_complete_graph() const {
        for (int v = 0; v < num_vertices(); ++v)
            if (!complete(v)) return false;
        return true;
    }

private:
    void check_free(int v, int c, int k) {
        if (rows[v].s[c][k] != kNone)
            throw std::logic_error("proper colouring violated at vertex " + std::to_string(v) +
                                   " colour " + alphabet.symbol(c));
    }
};

// ---------------------------------------------------------------------------
// trace_word

enum class TraceKind { Vertex, Closed, Blocked };

struct TraceResult {
    TraceKind kind;
    int vertex = kNone;     // endpoint (or last reached vertex when blocked)
    int steps_done = 0;     // letters consumed before blocking
    std::vector<int> path;  // visited vertices, start included
};

inline TraceResult trace_word(const ColoredGraph& g, int start, const Word& w) {
    TraceResult r;
    r.path.push_back(start);
    int v = start;
    for (const auto& l : w) {
        if (l.color < 0 || l.color >= g.alphabet.size())
            throw std::invalid_argument("unknown symbol in word");
        int nxt = g.neighbor(v, l);
        if (nxt == kNone) {
            r.kind = TraceKind::Blocked;
            r.vertex = v;
            return r;
        }
        v = nxt;
        ++r.steps_done;
        r.path.push_back(v);
    }
    r.vertex = v;
    r.kind = (v == start && !w.empty()) ? TraceKind::Closed : TraceKind::Vertex;
    return r;
}

// ---------------------------------------------------------------------------
// Colour-automorphism machinery

struct PartialColorMap {
    std::vector<int> map;  // image vertex or kNone
    explicit PartialColorMap(int n) : map(n, kNone) {}
    bool defined(int v) const { return map[v] != kNone; }
};

struct ColorMapResult {
    bool conflict = false;
    PartialColorMap map{0};
    int conflict_vertex = kNone;
};

// BFS-extends the seed dart-by-dart up to `depth` steps from the seed domain.
// A required dart missing on the image side at a non-boundary vertex is a
// conflict; missing darts at boundary vertices are treated as unknown.
inline ColorMapResult extend_color_map(const ColoredGraph& g, const PartialColorMap& seed,
                                       int depth) {
    ColorMapResult res;
    res.map = seed;
    std::deque<std::pair<int, int>> q;  // vertex, depth used
    for (int v = 0; v < g.num_vertices(); ++v)
        if (seed.defined(v)) q.push_back({v, 0});
    while (!q.empty()) {
        auto [v, d] = q.front();
        q.pop_front();
        if (d >= depth) continue;
        int img = res.map.map[v];
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int nk = g.alphabet.involution(c) ? 1 : 2;
            for (int k = 0; k < nk; ++k) {
                int w = g.rows[v].s[c][k];
                if (w == kNone) continue;
                int wi = g.rows[img].s[c][k];
                if (wi == kNone) {
                    if (!g.boundary[img]) {
                        res.conflict = true;
                        res.conflict_vertex = v;
                        return res;
                    }
                    continue;  // image runs into the unbuilt region
                }
                if (res.map.map[w] == kNone) {
                    res.map.map[w] = wi;
                    q.push_back({w, d + 1});
                } else if (res.map.map[w] != wi) {
                    res.conflict = true;
                    res.conflict_vertex = w;
                    return res;
                }
            }
        }
    }
    return res;
}

struct SabidussiResult {
    bool pass = true;
    int witness_x = kNone, witness_y = kNone;
};

// Vertex-transitivity test on the radius-ball: for every pair x,y there must
// be a colour-automorphism fragment mapping x to y on their common depth.
inline SabidussiResult sabidussi_check(const ColoredGraph& g, int radius) {
    auto dist = g.bfs_dist(g.root);
    int cert = g.certified_radius();
    if (!g.is_complete_graph() && radius > cert - 1)
        throw std::invalid_argument("graph too small for requested sabidussi radius");
    std::vector<int> ball;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dist[v] != kNone && dist[v] <= radius) ball.push_back(v);
    for (int x : ball)
        for (int y : ball) {
            int depth = g.is_complete_graph() ? g.num_vertices()
                                              : cert - std::max(dist[x], dist[y]);
            if (depth < 0) continue;
            PartialColorMap seed(g.num_vertices());
            seed.map[x] = y;
            auto r = extend_color_map(g, seed, depth);
            if (r.conflict) return {false, x, y};
        }
    return {};
}

// ---------------------------------------------------------------------------
// Canonical form

// BFS canonical labelling with the fixed colour order.  For connected properly
// coloured graphs the traversal is rigid, so two rooted graphs are
// colour-isomorphic iff their forms are byte-equal.
inline std::string rooted_canonical_form(const ColoredGraph& g) {
    std::vector<int> canon(g.num_vertices(), kNone);
    std::vector<int> order;
    canon[g.root] = 0;
    order.push_back(g.root);
    for (size_t qi = 0; qi < order.size(); ++qi) {
        int v = order[qi];
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int nk = g.alphabet.involution(c) ? 1 : 2;
            for (int k = 0; k < nk; ++k) {
                int w = g.rows[v].s[c][k];
                if (w != kNone && canon[w] == kNone) {
                    canon[w] = static_cast<int>(order.size());
                    order.push_back(w);
                }
            }
        }
    }
    std::string out = "alphabet:";
    for (const auto& l : g.alphabet.labels) {
        out += l.symbol;
        out += l.involution ? "!" : "*";
        out += ";";
    }
    out += "|n=" + std::to_string(order.size()) + "|";
    for (size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        out += "[";
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int nk = g.alphabet.involution(c) ? 1 : 2;
            for (int k = 0; k < nk; ++k) {
                int w = g.rows[v].s[c][k];
                out += (w == kNone || canon[w] == kNone) ? std::string("-")
                                                         : std::to_string(canon[w]);
                out += ",";
            }
        }
        out += g.boundary[v] ? "b]" : ".]";
    }
    return out;
}

// Induced subgraph on the radius-r ball around the root.  Vertices at distance
// exactly r (and vertices already marked incomplete) become boundary.
inline ColoredGraph extract_ball(const ColoredGraph& g, int r) {
    auto dist = g.bfs_dist(g.root);
    std::vector<int> remap(g.num_vertices(), kNone);
    ColoredGraph out(g.alphabet);
    std::vector<int> kept;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dist[v] != kNone && dist[v] <= r) {
            remap[v] = out.add_vertex(g.boundary[v] || dist[v] == r);
            kept.push_back(v);
        }
    for (int v : kept)
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int w = g.rows[v].s[c][0];
            if (w == kNone || remap[w] == kNone) continue;
            if (g.alphabet.involution(c)) {
                if (v <= w && out.rows[remap[v]].s[c][0] == kNone)
                    out.set_edge(remap[v], c, remap[w]);
            } else {
                out.set_edge(remap[v], c, remap[w]);
            }
        }
    out.root = remap[g.root];
    return out;
}

}  // namespace cayley
