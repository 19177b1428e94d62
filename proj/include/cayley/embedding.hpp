#pragma once

// Rotation systems induced by spin assignments, face tracing, consistency and
// planarity verification.  The embedding is never computed by generic
// planarity testing: it is induced by a declared per-colour preserve/reverse
// classification and then verified.

#include <cayley/graph.hpp>

#include <map>

namespace cayley {

enum class SpinClass : char { Preserve = 'P', Reverse = 'R' };

struct SpinAssignment {
    std::vector<SpinClass> cls;  // per colour

    static SpinAssignment all(const Alphabet& ab, SpinClass c) {
        SpinAssignment s;
        s.cls.assign(ab.size(), c);
        return s;
    }
    static SpinAssignment from_string(const Alphabet& ab, const std::string& spec) {
        // spec like "a:P,b:R"
        SpinAssignment s;
        s.cls.assign(ab.size(), SpinClass::Preserve);
        size_t i = 0;
        while (i < spec.size()) {
            size_t colon = spec.find(':', i);
            size_t comma = spec.find(',', i);
            if (comma == std::string::npos) comma = spec.size();
            std::string sym = spec.substr(i, colon - i);
            int c = ab.find(sym);
            if (c == kNone) throw std::invalid_argument("spin spec: unknown symbol " + sym);
            s.cls[c] = spec[colon + 1] == 'P' ? SpinClass::Preserve : SpinClass::Reverse;
            i = comma + 1;
        }
        return s;
    }
};

// Vertex spins (+1/-1) propagated from the root: crossing an edge of a
// reversing colour flips the spin.  Fails when some cycle flips an odd number
// of times.
struct SpinPropagation {
    bool consistent = true;
    std::vector<int8_t> spin;   // +1 / -1 / 0 unreachable
    int witness_color = kNone;  // first offending edge on failure
    int witness_u = kNone, witness_v = kNone;
};

inline SpinPropagation propagate_spin(const ColoredGraph& g, const SpinAssignment& sa) {
    SpinPropagation r;
    r.spin.assign(g.num_vertices(), 0);
    std::deque<int> q;
    r.spin[g.root] = +1;
    q.push_back(g.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int c = 0; c < g.alphabet.size(); ++c)
            for (int k = 0; k < (g.alphabet.involution(c) ? 1 : 2); ++k) {
                int w = g.rows[v].s[c][k];
                if (w == kNone) continue;
                int8_t want = sa.cls[c] == SpinClass::Preserve ? r.spin[v] : int8_t(-r.spin[v]);
                if (r.spin[w] == 0) {
                    r.spin[w] = want;
                    q.push_back(w);
                } else if (r.spin[w] != want) {
                    r.consistent = false;
                    r.witness_color = c;
                    r.witness_u = v;
                    r.witness_v = w;
                    return r;
                }
            }
    }
    return r;
}

struct ConsistencyResult {
    bool pass = true;
    int color = kNone;
    int edge_u = kNone, edge_v = kNone;
};

struct RotationSystem;
inline RotationSystem derive_rotation_system(const ColoredGraph&, const SpinAssignment&);
struct FaceCensus;
inline FaceCensus trace_faces(const ColoredGraph&, const RotationSystem&);
struct PlanarityResult;
inline PlanarityResult planarity_verify(const ColoredGraph&, const FaceCensus&);

// A dart is (vertex, colour, k) with k = 0 outgoing / involution, k = 1
// incoming.  Encoded as v * (2*kMaxColors) + 2*c + k.
struct Dart {
    int v, c, k;
};
inline int dart_id(int v, int c, int k) { return v * (2 * kMaxColors) + 2 * c + k; }
inline Dart dart_of(int id) {
    return {id / (2 * kMaxColors), (id % (2 * kMaxColors)) / 2, id % 2};
}

struct RotationSystem {
    // per vertex: the full cyclic label sequence with kNone holes where a
    // colour is missing (boundary vertices)
    std::vector<std::vector<int>> order;
};

// Label order around a vertex: colours in declaration order, a non-involution
// colour contributing its outgoing then incoming dart.  Spin +1 uses this
// cyclic order, spin -1 the reverse.
inline RotationSystem derive_rotation_system(const ColoredGraph& g, const SpinAssignment& sa) {
    auto pr = propagate_spin(g, sa);
    if (!pr.consistent) throw std::invalid_argument("inconsistent spin assignment");
    RotationSystem rs;
    rs.order.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> seq;
        for (int c = 0; c < g.alphabet.size(); ++c) {
            if (g.alphabet.involution(c)) {
                seq.push_back(g.rows[v].s[c][0] != kNone ? dart_id(v, c, 0) : kNone);
            } else {
                for (int k = 0; k < 2; ++k)
                    seq.push_back(g.rows[v].s[c][k] != kNone ? dart_id(v, c, k) : kNone);
            }
        }
        if (pr.spin[v] < 0) std::reverse(seq.begin(), seq.end());
        rs.order[v] = std::move(seq);
    }
    return rs;
}

struct FaceWalk {
    std::vector<int> darts;  // dart ids in walk order
    bool closed = true;
};

struct FaceCensus {
    std::vector<FaceWalk> faces;
    std::map<int, int> closed_histogram;  // size -> count
    int open_count = 0;
};

namespace detail {

inline int reverse_dart(const ColoredGraph& g, int id) {
    Dart d = dart_of(id);
    int w = g.rows[d.v].s[d.c][d.k];
    if (g.alphabet.involution(d.c)) return dart_id(w, d.c, 0);
    return dart_id(w, d.c, 1 - d.k);
}

// next dart of the face on the fixed side: successor of the reverse dart in
// the head's rotation; a hole in the rotation opens the walk
inline int next_face_dart(const ColoredGraph& g, const RotationSystem& rs, int id) {
    int rev = reverse_dart(g, id);
    Dart d = dart_of(rev);
    const auto& ord = rs.order[d.v];
    for (size_t i = 0; i < ord.size(); ++i)
        if (ord[i] == rev) return ord[(i + 1) % ord.size()];
    return kNone;
}

}  // namespace detail

// Partitions all darts into face walks by the next-dart rule.  Walks that run
// into a boundary gap are extended backwards and flagged open.
inline FaceCensus trace_faces(const ColoredGraph& g, const RotationSystem& rs) {
    FaceCensus census;
    std::set<int> pending;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int id : rs.order[v])
            if (id != kNone) pending.insert(id);
    std::map<int, int> next, prev;
    for (int id : pending) {
        int n = detail::next_face_dart(g, rs, id);
        if (n != kNone) {
            next[id] = n;
            prev[n] = id;
        }
    }
    while (!pending.empty()) {
        int start = *pending.begin();
        // rewind to a walk head (or back to start if the walk is closed)
        int head = start;
        while (prev.count(head) && prev[head] != start) head = prev[head];
        FaceWalk w;
        w.closed = prev.count(head) > 0;  // only true when we returned to start
        int cur = head;
        while (true) {
            w.darts.push_back(cur);
            pending.erase(cur);
            auto it = next.find(cur);
            if (it == next.end()) {
                w.closed = false;
                break;
            }
            cur = it->second;
            if (cur == head) break;
        }
        if (w.closed)
            census.closed_histogram[static_cast<int>(w.darts.size())]++;
        else
            census.open_count++;
        census.faces.push_back(std::move(w));
    }
    return census;
}

inline Word face_word(const ColoredGraph& g, const FaceWalk& w) {
    Word word;
    for (int id : w.darts) {
        Dart d = dart_of(id);
        word.push_back({d.c, g.alphabet.involution(d.c) ? +1 : (d.k == 0 ? +1 : -1)});
    }
    return word;
}

// Undirected edge count, involutions counted once.
inline int edge_count(const ColoredGraph& g) {
    int darts = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < g.alphabet.size(); ++c) {
            if (g.rows[v].s[c][0] != kNone) ++darts;
            if (!g.alphabet.involution(c) && g.rows[v].s[c][1] != kNone) ++darts;
        }
    return darts / 2;
}

struct PlanarityResult {
    bool pass = true;
    std::string reason;
};

// Finite complete case: V - E + F = 2 exactly.  Ball case: the face-walk
// permutation must partition the darts with no dart reused.
inline PlanarityResult planarity_verify(const ColoredGraph& g, const FaceCensus& census) {
    long long total_darts = 0;
    std::set<int> seen;
    for (const auto& f : census.faces)
        for (int id : f.darts) {
            if (!seen.insert(id).second) return {false, "dart reused across face walks"};
            ++total_darts;
        }
    long long expect = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < g.alphabet.size(); ++c) {
            if (g.rows[v].s[c][0] != kNone) ++expect;
            if (!g.alphabet.involution(c) && g.rows[v].s[c][1] != kNone) ++expect;
        }
    if (total_darts != expect) return {false, "face walks do not cover all darts"};
    if (g.is_complete_graph()) {
        long long V = g.num_vertices();
        long long E = edge_count(g);
        long long F = 0;
        for (const auto& f : census.faces)
            if (f.closed) ++F;
        if (census.open_count) return {false, "open walks on a complete graph"};
        if (V - E + F != 2)
            return {false, "Euler characteristic " + std::to_string(V - E + F)};
    }
    return {};
}

// Verifies each colour's preserve/reverse class against every edge: the
// propagation must close consistently, and on complete graphs the induced
// rotation system must be the plane embedding (Euler characteristic 2).
// The witness names a colour whose class flip would repair the embedding.
inline ConsistencyResult check_consistency(const ColoredGraph& g, const SpinAssignment& sa) {
    auto pr = propagate_spin(g, sa);
    if (!pr.consistent) return {false, pr.witness_color, pr.witness_u, pr.witness_v};
    if (g.is_complete_graph()) {
        auto census = trace_faces(g, derive_rotation_system(g, sa));
        if (!planarity_verify(g, census).pass) {
            for (int c = 0; c < g.alphabet.size(); ++c) {
                SpinAssignment flipped = sa;
                flipped.cls[c] = flipped.cls[c] == SpinClass::Preserve ? SpinClass::Reverse
                                                                        : SpinClass::Preserve;
                auto pr2 = propagate_spin(g, flipped);
                if (!pr2.consistent) continue;
                auto census2 = trace_faces(g, derive_rotation_system(g, flipped));
                if (planarity_verify(g, census2).pass) {
                    for (int v = 0; v < g.num_vertices(); ++v)
                        if (g.rows[v].s[c][0] != kNone)
                            return {false, c, v, g.rows[v].s[c][0]};
                }
            }
            return {false, kNone, kNone, kNone};
        }
    }
    return {};
}

}  // namespace cayley
