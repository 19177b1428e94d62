#pragma once

// Direct geometric constructions: regular tilings and their truncations
// (the finite/1-ended two-generator graphs), tree-of-cycles graphs, and
// hexagonal strip cylinders.  These are independent of coset enumeration and
// act as its cross-check.

#include <cayley/graph.hpp>

namespace cayley {

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

// Plane multigraph with degree-n vertices and m-gonal faces, grown face by
// face from a root vertex.  Slot i of a vertex is its i-th edge in rotation
// order; faces live between consecutive slots.
class RegularTiling {
public:
    int degree, face_size;

    struct Slot {
        int nbr = kNone;
        int nbr_slot = kNone;
    };
    std::vector<std::vector<Slot>> verts;

    RegularTiling(int n, int m, int rings) : degree(n), face_size(m) {
        add_vertex();
        for (int r = 0; r <= rings; ++r) {
            auto dist = distances();
            const int known = static_cast<int>(dist.size());  // faces add vertices
            bool any = false;
            for (int v = 0; v < known; ++v)
                if (dist[v] == r)
                    for (int i = 0; i < degree; ++i) {
                        close_face(v, i);
                        any = true;
                    }
            if (!any) break;  // sphere closed up
        }
    }

    bool vertex_complete(int v) const {
        for (const auto& s : verts[v])
            if (s.nbr == kNone) return false;
        return true;
    }

    std::vector<int> distances() const {
        std::vector<int> dist(verts.size(), kNone);
        std::deque<int> q;
        dist[0] = 0;
        q.push_back(0);
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (const auto& s : verts[v])
                if (s.nbr != kNone && dist[s.nbr] == kNone) {
                    dist[s.nbr] = dist[v] + 1;
                    q.push_back(s.nbr);
                }
        }
        return dist;
    }

private:
    std::set<std::pair<int, int>> done_;  // corners already on a closed face

    int add_vertex() {
        verts.emplace_back(degree);
        return static_cast<int>(verts.size()) - 1;
    }

    void link(int u, int su, int v, int sv) {
        if (verts[u][su].nbr != kNone || verts[v][sv].nbr != kNone)
            throw ConstructionError("tiling slot already used");
        verts[u][su] = {v, sv};
        verts[v][sv] = {u, su};
    }

    // The face at the corner of v between slots i and i+1: entering v via
    // slot i, the face leaves via slot i+1.
    void close_face(int v, int i) {
        if (done_.count({v, i})) return;
        struct Pos {
            int v, in, out;
        };
        std::deque<Pos> walk;
        walk.push_back({v, i, (i + 1) % degree});
        bool closed = false;
        // forward
        while (true) {
            const Pos& p = walk.back();
            const Slot& s = verts[p.v][p.out];
            if (s.nbr == kNone) break;
            Pos nxt{s.nbr, s.nbr_slot, (s.nbr_slot + 1) % degree};
            if (nxt.v == walk.front().v && nxt.in == walk.front().in) {
                closed = true;
                break;
            }
            walk.push_back(nxt);
            if (static_cast<int>(walk.size()) > face_size)
                throw ConstructionError("face walk exceeds face size");
        }
        // backward
        while (!closed) {
            const Pos& p = walk.front();
            const Slot& s = verts[p.v][p.in];
            if (s.nbr == kNone) break;
            Pos prv{s.nbr, (s.nbr_slot + degree - 1) % degree, s.nbr_slot};
            walk.push_front(prv);
            if (static_cast<int>(walk.size()) > face_size)
                throw ConstructionError("face walk exceeds face size");
        }
        if (closed) {
            if (static_cast<int>(walk.size()) != face_size)
                throw ConstructionError("closed face of wrong size");
        } else {
            int have = static_cast<int>(walk.size()) - 1;  // edges already present
            int gap = face_size - have;
            int cur = walk.back().v, cur_slot = walk.back().out;
            for (int t = 1; t < gap; ++t) {
                int w = add_vertex();
                link(cur, cur_slot, w, 0);
                cur = w;
                cur_slot = 1;
            }
            link(cur, cur_slot, walk.front().v, walk.front().in);
            // rebuild the walk so all corners can be marked
            done_.erase({v, i});
            close_face_mark(v, i);
            return;
        }
        for (const auto& p : walk) done_.insert({p.v, p.in});
    }

    void close_face_mark(int v, int i) {
        struct Pos {
            int v, in, out;
        };
        Pos p{v, i, (i + 1) % degree};
        for (int steps = 0; steps < face_size; ++steps) {
            done_.insert({p.v, p.in});
            const Slot& s = verts[p.v][p.out];
            if (s.nbr == kNone) throw ConstructionError("face did not close");
            p = {s.nbr, s.nbr_slot, (s.nbr_slot + 1) % degree};
        }
        if (p.v != v || p.in != i) throw ConstructionError("face closure mismatch");
    }
};

}  // namespace detail

// Cay<a,b | b^2, a^n, (ab)^m>: replace every vertex of the {m-gon, degree-n}
// tiling H with an a-cycle of length n oriented clockwise, edges of H becoming
// b-edges.  Returns the full graph when finite, a ball otherwise.
inline ColoredGraph build_truncated_tiling(int n, int m, int radius,
                                           const std::string& a_name = "a",
                                           const std::string& b_name = "b") {
    if (n < 3 || m < 2) throw ConstructionError("truncated tiling needs n >= 3, m >= 2");
    detail::RegularTiling H(n, m, radius + 2);
    auto hdist = H.distances();
    Alphabet ab;
    ab.labels.push_back({a_name, false});
    ab.labels.push_back({b_name, true});
    ColoredGraph g(ab);
    std::vector<std::vector<int>> idx(H.verts.size());
    for (int x = 0; x < static_cast<int>(H.verts.size()); ++x) {
        if (!H.vertex_complete(x)) continue;
        idx[x].resize(n);
        for (int i = 0; i < n; ++i) idx[x][i] = g.add_vertex();
        for (int i = 0; i < n; ++i) g.set_edge(idx[x][i], 0, idx[x][(i + 1) % n]);
    }
    for (int x = 0; x < static_cast<int>(H.verts.size()); ++x) {
        if (idx[x].empty()) continue;
        for (int i = 0; i < n; ++i) {
            auto s = H.verts[x][i];
            if (s.nbr == kNone || idx[s.nbr].empty()) continue;
            if (x < s.nbr || (x == s.nbr && i < s.nbr_slot))
                g.set_edge(idx[x][i], 1, idx[s.nbr][s.nbr_slot]);
        }
    }
    g.root = idx[0].empty() ? 0 : idx[0][0];
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.complete(v)) g.boundary[v] = 1;
    return g;
}

// Cay<a,z | z^2, (az)^n>: an n-regular tree of 2n-cycles alternating a,z in
// which adjacent cycles share a single z-edge.  Ball of the given radius.
inline ColoredGraph build_cycle_tree(int n, int radius, const std::string& a_name = "a",
                                     const std::string& z_name = "z") {
    if (n < 2) throw ConstructionError("cycle tree needs n >= 2");
    Alphabet ab;
    ab.labels.push_back({a_name, false});
    ab.labels.push_back({z_name, true});
    ColoredGraph g(ab);
    // root cycle v0 -a-> v1 -z- v2 -a-> ... -z- v0
    std::vector<int> cyc(2 * n);
    for (auto& v : cyc) v = g.add_vertex();
    std::deque<std::pair<int, int>> zq;  // z-edges waiting for their second cycle
    auto lay_cycle = [&](const std::vector<int>& c) {
        for (int i = 0; i < 2 * n; i += 2) g.set_edge(c[i], 0, c[i + 1]);
        for (int i = 1; i < 2 * n; i += 2) {
            g.set_edge(c[i], 1, c[(i + 1) % (2 * n)]);
            zq.push_back({c[i], c[(i + 1) % (2 * n)]});
        }
    };
    lay_cycle(cyc);
    g.root = cyc[0];
    while (!zq.empty()) {
        auto [u, v] = zq.front();
        zq.pop_front();
        auto dist = g.bfs_dist(g.root);
        if (std::min(dist[u], dist[v]) > radius) continue;
        // second cycle through the z-edge {u,v}: pick the endpoint with a free
        // outgoing a-dart as x, the other as y; path y ... x of 2n-1 edges
        int x, y;
        if (g.rows[u].s[0][0] == kNone && g.rows[v].s[0][1] == kNone) {
            x = u;
            y = v;
        } else if (g.rows[v].s[0][0] == kNone && g.rows[u].s[0][1] == kNone) {
            x = v;
            y = u;
        } else {
            throw ConstructionError("z-edge has no free a-darts");
        }
        int cur = x;
        std::vector<std::pair<int, int>> new_z;
        for (int step = 0; step < 2 * n - 1; ++step) {
            int w = (step + 1 == 2 * n - 1) ? y : g.add_vertex();
            if (step % 2 == 0) g.set_edge(cur, 0, w);  // a forward
            else {
                g.set_edge(cur, 1, w);
                new_z.push_back({cur, w});
            }
            cur = w;
        }
        for (auto& e : new_z) zq.push_back(e);
    }
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.complete(v)) g.boundary[v] = 1;
    return g;
}

// Cylinder of hexagons on `count` parallel a-coloured double rays joined by
// b-rungs; `alternate` reverses the orientation of every second ray.
// Two-generator hexagonal-grid graphs: Cay<a,b | b^2, a^2 b a^-2 b; ...> when
// not alternating, Cay<a,b | b^2, (a^2 b)^2; ...> when alternating.
inline ColoredGraph build_hex_strip(int count, bool alternate, int radius) {
    if (count < 4 || count % 2) throw ConstructionError("hex strip needs even count >= 4");
    Alphabet ab;
    ab.labels.push_back({"a", false});
    ab.labels.push_back({"b", true});
    ColoredGraph g(ab);
    int L = radius + 2;
    auto id = [&](int i, int j) { return i * (2 * L + 1) + (j + L); };
    for (int i = 0; i < count; ++i)
        for (int j = -L; j <= L; ++j) g.add_vertex();
    for (int i = 0; i < count; ++i) {
        bool up = !alternate || i % 2 == 0;
        for (int j = -L; j < L; ++j) {
            if (up) g.set_edge(id(i, j), 0, id(i, j + 1));
            else g.set_edge(id(i, j + 1), 0, id(i, j));
        }
    }
    for (int i = 0; i < count; ++i)
        for (int j = -L; j <= L; ++j)
            if (((i + j) % 2 + 2) % 2 == 0) g.set_edge(id(i, j), 1, id((i + 1) % count, j));
    g.root = id(0, 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.complete(v)) g.boundary[v] = 1;
    return g;
}

// Three-involution hexagonal cylinder: rays alternate b,d edges, rungs are c.
// Cay<b,c,d | b^2,c^2,d^2, (bcd)^2; (bcdc)^n> with count = 2n rays.
inline ColoredGraph build_hex_strip3(int count, int radius) {
    if (count < 4 || count % 2) throw ConstructionError("hex strip needs even count >= 4");
    Alphabet ab;
    ab.labels.push_back({"b", true});
    ab.labels.push_back({"c", true});
    ab.labels.push_back({"d", true});
    ColoredGraph g(ab);
    int L = radius + 2;
    auto id = [&](int i, int j) { return i * (2 * L + 1) + (j + L); };
    for (int i = 0; i < count; ++i)
        for (int j = -L; j <= L; ++j) g.add_vertex();
    for (int i = 0; i < count; ++i)
        for (int j = -L; j < L; ++j) {
            int color = (((i + j) % 2 + 2) % 2 == 0) ? 0 : 2;  // b even, d odd
            g.set_edge(id(i, j), color, id(i, j + 1));
        }
    for (int i = 0; i < count; ++i)
        for (int j = -L; j <= L; ++j)
            if (((i + j) % 2 + 2) % 2 == 1) g.set_edge(id(i, j), 1, id((i + 1) % count, j));
    g.root = id(0, 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!g.complete(v)) g.boundary[v] = 1;
    return g;
}

}  // namespace cayley
