#pragma once

// Verification suite: relator checking, connectivity, hinges, dividing
// cycles, ends, Euler curvature, cycle-space rank.  All connectivity and end
// outputs are interior-certified bounds on the built ball, never claims about
// the infinite graph.

#include <cayley/embedding.hpp>
#include <cayley/presentation.hpp>

namespace cayley {

// Vertices whose whole neighbourhood is built: safe for separator search.
inline std::vector<char> interior_mask(const ColoredGraph& g) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v) in[v] = g.boundary[v] ? 0 : 1;
    return in;
}

struct RelatorCheck {
    bool pass = true;
    int vertex = kNone;
    Word relator;
    bool blocked = false;  // Blocked inside the safe region: ball instability
};

// Every relator must trace a closed walk from every vertex at distance
// <= radius - |relator|.
inline RelatorCheck verify_relators(const ColoredGraph& g, const Presentation& p, int radius) {
    auto dist = g.bfs_dist(g.root);
    auto rels = p.all_relators();
    for (int c = 0; c < p.alphabet.size(); ++c)
        if (p.alphabet.involution(c)) rels.push_back({{c, 1}, {c, 1}});
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (dist[v] == kNone) continue;
        for (const auto& w : rels) {
            if (dist[v] > radius - static_cast<int>(w.size())) continue;
            auto t = trace_word(g, v, w);
            if (t.kind == TraceKind::Closed) continue;
            return {false, v, w, t.kind == TraceKind::Blocked};
        }
    }
    return {};
}

struct ConnectivityResult {
    int kappa_lower = 3;          // certified: no separator of size < this found
    bool exact = false;           // true when a separator of size kappa_lower exists
    std::vector<int> witness;     // separating set when exact
};

namespace detail {

// does removing `removed` leave >= 2 components each containing a marked vertex?
inline bool separates(const ColoredGraph& g, const std::vector<char>& removed,
                      const std::vector<char>& must_contain) {
    std::vector<int> comp(g.num_vertices(), kNone);
    int ncomp = 0, good = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (removed[s] || comp[s] != kNone) continue;
        int id = ncomp++;
        bool has_mark = false;
        std::deque<int> q{s};
        comp[s] = id;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (must_contain[v]) has_mark = true;
            for (int c = 0; c < g.alphabet.size(); ++c)
                for (int k = 0; k < (g.alphabet.involution(c) ? 1 : 2); ++k) {
                    int w = g.rows[v].s[c][k];
                    if (w != kNone && !removed[w] && comp[w] == kNone) {
                        comp[w] = id;
                        q.push_back(w);
                    }
                }
        }
        if (has_mark) ++good;
    }
    return good >= 2;
}

}  // namespace detail

// Exhaustive search over 1- and 2-subsets of interior vertices.  A subset
// separates only if at least two components each contain interior vertices.
inline ConnectivityResult connectivity_estimate(const ColoredGraph& g) {
    auto interior = interior_mask(g);
    std::vector<int> iv;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (interior[v]) iv.push_back(v);
    if (iv.size() < 4) throw std::invalid_argument("ball too small for connectivity estimate");
    std::vector<char> removed(g.num_vertices(), 0);
    for (int x : iv) {
        removed[x] = 1;
        if (detail::separates(g, removed, interior)) return {1, true, {x}};
        removed[x] = 0;
    }
    for (size_t i = 0; i < iv.size(); ++i)
        for (size_t j = i + 1; j < iv.size(); ++j) {
            removed[iv[i]] = removed[iv[j]] = 1;
            bool sep = detail::separates(g, removed, interior);
            removed[iv[i]] = removed[iv[j]] = 0;
            if (sep) return {2, true, {iv[i], iv[j]}};
        }
    return {3, false, {}};
}

// All interior edges whose endpoint pair separates (interior-aware).
inline std::vector<std::pair<int, int>> find_hinges(const ColoredGraph& g) {
    auto interior = interior_mask(g);
    std::vector<std::pair<int, int>> hinges;
    std::vector<char> removed(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int w = g.rows[v].s[c][0];
            if (w == kNone || w < v) continue;
            if (!interior[v] || !interior[w]) continue;
            removed[v] = removed[w] = 1;
            if (detail::separates(g, removed, interior)) hinges.push_back({v, w});
            removed[v] = removed[w] = 0;
        }
    std::sort(hinges.begin(), hinges.end());
    hinges.erase(std::unique(hinges.begin(), hinges.end()), hinges.end());
    return hinges;
}

struct DividingCycle {
    bool found = false;
    std::vector<int> vertices;  // cyclic
    Word word;
};

namespace detail {

inline bool cycle_divides(const ColoredGraph& g, const std::vector<int>& cyc,
                          const std::vector<char>& reaches_far) {
    std::vector<char> removed(g.num_vertices(), 0);
    for (int v : cyc) removed[v] = 1;
    return separates(g, removed, reaches_far);
}

}  // namespace detail

// Shortest cycle (up to max_len) whose removal leaves >= 2 components each
// containing boundary-reaching vertices.  Dividing is approximated on the
// ball by components that meet the boundary.
inline DividingCycle find_dividing_cycle(const ColoredGraph& g, int max_len) {
    auto dist = g.bfs_dist(g.root);
    std::vector<char> far(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.boundary[v]) far[v] = 1;
    // vertices ordered BFS for determinism
    std::vector<int> order;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dist[v] != kNone) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return std::make_pair(dist[a], a) < std::make_pair(dist[b], b);
    });
    for (int len = 3; len <= max_len; ++len) {
        for (int start : order) {
            if (g.boundary[start]) continue;
            // DFS for simple cycles of exactly `len` edges from start
            std::vector<int> path{start};
            std::vector<char> on_path(g.num_vertices(), 0);
            on_path[start] = 1;
            Word word;
            std::vector<int> sdist = g.bfs_dist(start);
            std::function<DividingCycle(int)> dfs = [&](int v) -> DividingCycle {
                int rem = len - static_cast<int>(word.size());
                if (rem == 0) {
                    if (v != start) return {};
                    std::vector<int> cyc(path.begin(), path.end() - 1);
                    if (detail::cycle_divides(g, cyc, far)) return {true, cyc, word};
                    return {};
                }
                if (sdist[v] == kNone || sdist[v] > rem) return {};
                for (int c = 0; c < g.alphabet.size(); ++c)
                    for (int k = 0; k < (g.alphabet.involution(c) ? 1 : 2); ++k) {
                        int w = g.rows[v].s[c][k];
                        if (w == kNone) continue;
                        if (w != start && on_path[w]) continue;
                        if (w == start && rem > 1) continue;
                        if (!word.empty()) {  // no immediate backtracking
                            const Letter& lw = word.back();
                            if (lw.color == c &&
                                (g.alphabet.involution(c) || lw.sign == (k == 0 ? -1 : 1)))
                                continue;
                        }
                        word.push_back({c, k == 0 ? +1 : -1});
                        path.push_back(w);
                        on_path[w] = 1;
                        auto r = dfs(w);
                        if (r.found) return r;
                        on_path[w] = w == start ? 1 : 0;
                        path.pop_back();
                        word.pop_back();
                    }
                return {};
            };
            auto r = dfs(start);
            if (r.found) return r;
        }
    }
    return {};
}

// Removes the radius-k ball around the root and counts components containing
// vertices at distance >= radius - margin.  Monotone lower bound on the
// number of ends.
inline int ends_estimate(const ColoredGraph& g, int k, int margin = 1) {
    auto dist = g.bfs_dist(g.root);
    int radius = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (dist[v] != kNone) radius = std::max(radius, dist[v]);
    if (radius == 0) return 0;
    std::vector<int> comp(g.num_vertices(), kNone);
    int count = 0;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (dist[s] == kNone || dist[s] <= k || comp[s] != kNone) continue;
        bool deep = false;
        std::deque<int> q{s};
        comp[s] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            if (dist[v] >= radius - margin) deep = true;
            for (int c = 0; c < g.alphabet.size(); ++c)
                for (int kk = 0; kk < (g.alphabet.involution(c) ? 1 : 2); ++kk) {
                    int w = g.rows[v].s[c][kk];
                    if (w != kNone && dist[w] > k && comp[w] == kNone) {
                        comp[w] = 1;
                        q.push_back(w);
                    }
                }
        }
        if (deep) ++count;
    }
    return count;
}

struct EulerCheck {
    bool applicable = true;
    bool pass = false;
    long long curvature_sum = 0;
};

// Sum over closed faces of (6 - k) |F_k| = 12 for finite complete cubic plane
// graphs.
inline EulerCheck euler_curvature_check(const FaceCensus& census) {
    if (census.open_count) return {false, false, 0};
    long long sum = 0;
    for (auto [k, cnt] : census.closed_histogram) sum += static_cast<long long>(6 - k) * cnt;
    return {true, sum == 12, sum};
}

// GF(2) rank of the relator-induced circuits must be E - V + 1 on finite
// complete graphs.  Bit-set Gaussian elimination over a fixed edge numbering.
struct CycleSpaceCheck {
    bool pass = false;
    int rank = 0;
    int expected = 0;
};

inline CycleSpaceCheck cycle_space_check(const ColoredGraph& g, const Presentation& p) {
    if (!g.is_complete_graph())
        throw std::invalid_argument("cycle_space_check needs a finite complete graph");
    // edge numbering
    std::map<std::tuple<int, int, int>, int> edge_id;  // (min,max,color) -> id
    int E = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < g.alphabet.size(); ++c) {
            int w = g.rows[v].s[c][0];
            if (w == kNone) continue;
            auto key = std::make_tuple(std::min(v, w), std::max(v, w), c);
            if (!edge_id.count(key)) edge_id[key] = E++;
        }
    const int words = (E + 63) / 64;
    std::vector<std::vector<uint64_t>> basis;
    auto reduce_insert = [&](std::vector<uint64_t> row) {
        for (auto& b : basis) {
            int hb = kNone;
            for (int w = words - 1; w >= 0 && hb == kNone; --w)
                if (b[w]) hb = w * 64 + 63 - __builtin_clzll(b[w]);
            if (hb != kNone && (row[hb / 64] >> (hb % 64)) & 1)
                for (int w = 0; w < words; ++w) row[w] ^= b[w];
        }
        for (int w = 0; w < words; ++w)
            if (row[w]) {
                basis.push_back(row);
                return true;
            }
        return false;
    };
    for (const auto& rel : p.all_relators())
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto t = trace_word(g, v, rel);
            if (t.kind != TraceKind::Closed) continue;
            std::vector<uint64_t> row(words, 0);
            for (size_t i = 0; i + 1 < t.path.size(); ++i) {
                int a = t.path[i], b = t.path[i + 1];
                int c = rel[i].color;
                int id = edge_id[{std::min(a, b), std::max(a, b), c}];
                row[id / 64] ^= 1ull << (id % 64);
            }
            reduce_insert(std::move(row));
        }
    int expected = E - g.num_vertices() + 1;
    return {static_cast<int>(basis.size()) == expected, static_cast<int>(basis.size()), expected};
}

struct MacayCheck {
    bool pass = true;
    int witness_u = kNone, witness_v = kNone;  // overloaded edge
    bool nonsimple_relator = false;
};

// Every relator must be simple and no interior edge may lie in more than two
// relator-induced circuits.
inline MacayCheck macay_precondition_check(const Presentation& p, const ColoredGraph& g) {
    auto interior = interior_mask(g);
    for (const auto& rel : p.all_relators()) {
        bool any_closed = false;
        for (int v = 0; v < g.num_vertices() && !any_closed; ++v) {
            auto t = trace_word(g, v, rel);
            if (t.kind != TraceKind::Closed) continue;
            any_closed = true;
            std::set<int> seen(t.path.begin(), t.path.end() - 1);
            if (seen.size() != rel.size()) return {false, kNone, kNone, true};
        }
    }
    // count distinct relator circuits through each edge
    std::map<std::pair<int, int>, std::set<std::vector<int>>> through;
    for (const auto& rel : p.all_relators())
        for (int v = 0; v < g.num_vertices(); ++v) {
            auto t = trace_word(g, v, rel);
            if (t.kind != TraceKind::Closed) continue;
            std::vector<int> cyc(t.path.begin(), t.path.end() - 1);
            // canonical rotation/reflection of the vertex cycle
            std::vector<int> best = cyc;
            for (int refl = 0; refl < 2; ++refl) {
                for (size_t r = 0; r < cyc.size(); ++r) {
                    std::vector<int> cand;
                    for (size_t i = 0; i < cyc.size(); ++i) cand.push_back(cyc[(r + i) % cyc.size()]);
                    if (cand < best) best = cand;
                }
                std::reverse(cyc.begin(), cyc.end());
            }
            for (size_t i = 0; i + 1 < t.path.size(); ++i) {
                int a = std::min(t.path[i], t.path[i + 1]);
                int b = std::max(t.path[i], t.path[i + 1]);
                through[{a, b}].insert(best);
            }
        }
    for (auto& [e, circ] : through) {
        if (!interior[e.first] || !interior[e.second]) continue;
        if (circ.size() > 2) return {false, e.first, e.second, false};
    }
    return {};
}

struct FaceSizeCheck {
    bool pass = true;
    int offending_size = kNone;
};

// Every closed interior face size must be one of the allowed sizes (empty set
// means no finite faces are expected).
inline FaceSizeCheck face_size_expectation(const std::set<int>& allowed,
                                           const FaceCensus& census) {
    for (auto [k, cnt] : census.closed_histogram)
        if (!allowed.count(k)) return {false, k};
    return {};
}

struct VerificationReport {
    bool relators_ok = false;
    bool transitive_ok = false;   // sabidussi on the inner ball
    int kappa = 0;                // certified value; 3 means "no 2-separator"
    bool kappa_exact = false;
    std::vector<int> kappa_witness;
    std::vector<std::pair<int, int>> hinges;
    bool dividing_found = false;
    Word dividing_word;
    int ends_lower_bound = 0;
    bool euler_ok = false;
    bool euler_applicable = false;
    bool cycle_space_ok = false;
    bool cycle_space_applicable = false;
    int closed_faces = 0;
    int open_faces = 0;
    std::map<int, int> face_histogram;
    bool spin_ok = false;
};

}  // namespace cayley
