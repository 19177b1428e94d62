#pragma once

// Orientation and recolouring transforms from the finite/1-ended
// constructions: reversing every other a-cycle and the b/c parity recolouring.

#include <cayley/graph.hpp>
#include <cayley/tiling.hpp>

namespace cayley {

// Bipartition the a-cycles of g by the parity of b-edges on paths from the
// root and reverse the orientation of every a-cycle in the odd class.
// Converts spin type (oi) into (oii).  Colour 0 must be the non-involution a,
// colour 1 the involution b.
inline ColoredGraph flip_alternate_orientation(const ColoredGraph& g) {
    if (g.alphabet.size() != 2 || g.alphabet.involution(0) || !g.alphabet.involution(1))
        throw ConstructionError("flip expects alphabet {a non-involution, b involution}");
    bool has_b = false;
    for (int v = 0; v < g.num_vertices() && !has_b; ++v)
        if (g.rows[v].s[1][0] != kNone) has_b = true;
    if (!has_b) throw ConstructionError("parity error: no b-edges");
    // parity of b-count along any path from the root; must be well defined
    std::vector<int> par(g.num_vertices(), kNone);
    std::deque<int> q;
    par[g.root] = 0;
    q.push_back(g.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int c = 0; c < 2; ++c)
            for (int k = 0; k < (c == 1 ? 1 : 2); ++k) {
                int w = g.rows[v].s[c][k];
                if (w == kNone) continue;
                int want = c == 1 ? 1 - par[v] : par[v];
                if (par[w] == kNone) {
                    par[w] = want;
                    q.push_back(w);
                } else if (par[w] != want) {
                    throw ConstructionError("parity error: odd b-count on a cycle");
                }
            }
    }
    ColoredGraph out(g.alphabet);
    out.root = g.root;
    for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.boundary[v]);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int w = g.rows[v].s[0][0];
        if (w != kNone) {
            if (par[v] == 1) out.set_edge(w, 0, v);  // reversed class
            else out.set_edge(v, 0, w);
        }
        int b = g.rows[v].s[1][0];
        if (b != kNone && v < b) out.set_edge(v, 1, b);
    }
    return out;
}

// LG5 (ziv) -> (ziii) recolouring: exchange the b and c labels of every edge
// whose endpoints have an even number of d-letters in their defining words.
// The d-count parity is well defined because every relator uses an even
// number of d's; this is why the construction starts from
// <b,c,d | ..., (bc)^n, (cd)^{2m}, (db)^{2m}>.
inline ColoredGraph parity_recolor(const ColoredGraph& g) {
    if (g.alphabet.size() != 3 || !g.alphabet.involution(0) || !g.alphabet.involution(1) ||
        !g.alphabet.involution(2))
        throw ConstructionError("parity recolor expects three involutions");
    std::vector<int> dpar(g.num_vertices(), kNone);
    std::deque<int> q;
    dpar[g.root] = 0;
    q.push_back(g.root);
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int c = 0; c < 3; ++c) {
            int w = g.rows[v].s[c][0];
            if (w == kNone) continue;
            int want = c == 2 ? 1 - dpar[v] : dpar[v];
            if (dpar[w] == kNone) {
                dpar[w] = want;
                q.push_back(w);
            } else if (dpar[w] != want) {
                throw ConstructionError("d-parity ill defined; need even d-exponents");
            }
        }
    }
    ColoredGraph out(g.alphabet);
    out.root = g.root;
    for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.boundary[v]);
    for (int v = 0; v < g.num_vertices(); ++v)
        for (int c = 0; c < 3; ++c) {
            int w = g.rows[v].s[c][0];
            if (w == kNone || v > w) continue;
            int nc = c;
            if (dpar[v] == 0 && c < 2) nc = 1 - c;  // swap b and c inside the even class
            out.set_edge(v, nc, w);
        }
    return out;
}

}  // namespace cayley
