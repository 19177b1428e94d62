#pragma once

// Recursive gluing engine behind the multi-ended constructions.  A core
// Cayley graph is subdivided through a metaedge map (each core generator
// becomes a word in the output generators); the substituted images of a
// designated core relator are the basic cycles, each of which carries exactly
// two disjoint societies.  Fresh substituted copies are glued inside every
// facial basic cycle, attached at the unused society, until the requested
// radius is reached.
//
// Mohar amalgamation is the case |image| = 2 on the gluing colour;
// twist-squeeze amalgamation the case |image| = 3 on every other edge of the
// gluing cycle.

#include <cayley/embedding.hpp>
#include <cayley/presentation.hpp>
#include <cayley/tiling.hpp>

#include <functional>
#include <numeric>

namespace cayley {

struct MetaedgeMap {
    std::vector<Word> images;  // per core colour, over the output alphabet
};

struct GlueRecipe {
    std::function<ColoredGraph(int radius)> core_builder;  // core-metric ball
    SpinAssignment core_spin;   // per core colour; used to trace core faces
    std::vector<Word> basic_relators;  // over the core alphabet; a shared cycle
                                       // may read as different core relators
                                       // from its two sides
    Alphabet out_alphabet;
    MetaedgeMap mm;
    SpinAssignment out_spin;    // expected classes of the output graph
    int radius = 4;
    long long vertex_budget = 2000000;
};

namespace detail {

struct HostCycle {
    std::vector<int> verts;    // cyclic vertex sequence
    std::vector<Letter> cols;  // edge i joins verts[i] -> verts[i+1]
    std::vector<char> corner;  // owning copy's society positions
};

struct SubstitutedCore {
    ColoredGraph g;
    std::vector<char> is_corner;
    std::vector<HostCycle> basic_cycles;
};

// Expand a core ball through the metaedge map.  Involution core colours must
// have symmetric images so the path reads the same from both ends.
inline SubstitutedCore substitute_core(const ColoredGraph& core, const SpinAssignment& core_spin,
                                       const std::vector<Word>& basic_relators,
                                       const Alphabet& out_ab, const MetaedgeMap& mm) {
    for (int c = 0; c < core.alphabet.size(); ++c) {
        const Word& w = mm.images[c];
        if (w.empty()) throw ConstructionError("empty metaedge image");
        if (core.alphabet.involution(c)) {
            Word rev = inverse_word(out_ab, w);
            if (!(rev == w))
                throw ConstructionError("involution image must be a symmetric word");
        }
    }
    SubstitutedCore out;
    out.g = ColoredGraph(out_ab);
    std::vector<int> vmap(core.num_vertices());
    for (int v = 0; v < core.num_vertices(); ++v) {
        vmap[v] = out.g.add_vertex();
        out.is_corner.push_back(1);
    }
    // interiors[(u,c)] = path interior from u to rows[u].s[c][0]
    std::map<std::pair<int, int>, std::vector<int>> interiors;
    for (int u = 0; u < core.num_vertices(); ++u)
        for (int c = 0; c < core.alphabet.size(); ++c) {
            int v = core.rows[u].s[c][0];
            if (v == kNone) continue;
            if (core.alphabet.involution(c) && u > v) continue;
            const Word& w = mm.images[c];
            std::vector<int> inner;
            int cur = vmap[u];
            for (size_t i = 0; i < w.size(); ++i) {
                int nxt;
                if (i + 1 == w.size()) nxt = vmap[v];
                else {
                    nxt = out.g.add_vertex();
                    out.is_corner.push_back(0);
                    inner.push_back(nxt);
                }
                if (w[i].sign > 0) out.g.set_edge(cur, w[i].color, nxt);
                else out.g.set_edge(nxt, w[i].color, cur);
                cur = nxt;
            }
            interiors[{u, c}] = std::move(inner);
        }
    out.g.root = vmap[core.root];
    for (int v = 0; v < out.g.num_vertices(); ++v)
        if (!out.g.complete(v)) out.g.boundary[v] = 1;

    // host path of a core dart, endpoints excluded
    auto dart_path = [&](int u, int c, int k) {
        int v = core.rows[u].s[c][k];
        std::vector<int> inner;
        bool reversed = false;
        if (core.alphabet.involution(c)) {
            int a = std::min(u, v), b = std::max(u, v);
            inner = interiors[{a, c}];
            reversed = (u != a);
            (void)b;
        } else if (k == 0) {
            inner = interiors[{u, c}];
        } else {
            inner = interiors[{v, c}];
            reversed = true;
        }
        if (reversed) std::reverse(inner.begin(), inner.end());
        return inner;
    };
    auto letter_seq = [&](int c, int k) {
        Word w = mm.images[c];
        if (!core.alphabet.involution(c) && k == 1) w = inverse_word(out_ab, w);
        return w;
    };

    // basic cycles: closed core faces matching the basic relator
    auto rot = derive_rotation_system(core, core_spin);
    auto census = trace_faces(core, rot);
    for (const auto& f : census.faces) {
        if (!f.closed) continue;
        Word w = face_word(core, f);
        bool is_basic = false;
        for (const auto& rel : basic_relators)
            if (cyclically_equal_upto_inversion(core.alphabet, w, rel)) is_basic = true;
        if (!is_basic) continue;
        HostCycle hc;
        for (int id : f.darts) {
            Dart d = dart_of(id);
            int k = core.alphabet.involution(d.c) ? 0 : d.k;
            hc.verts.push_back(vmap[d.v]);
            hc.corner.push_back(1);
            auto inner = dart_path(d.v, d.c, k);
            Word seq = letter_seq(d.c, k);
            for (size_t i = 0; i < seq.size(); ++i) {
                hc.cols.push_back(seq[i]);
                if (i + 1 < seq.size()) {
                    hc.verts.push_back(inner[i]);
                    hc.corner.push_back(0);
                }
            }
        }
        out.basic_cycles.push_back(std::move(hc));
    }
    return out;
}

}  // namespace detail

class MetaedgeGluer {
public:
    explicit MetaedgeGluer(const GlueRecipe& r) : r_(r) {}

    ColoredGraph build() {
        const int L = basic_cycle_length();
        const int host_radius = r_.radius + L + 6;
        auto core0 = r_.core_builder(host_radius);
        auto host = detail::substitute_core(core0, r_.core_spin, r_.basic_relators,
                                            r_.out_alphabet, r_.mm);
        g_ = std::move(host.g);
        spin_ = propagate_spin(g_, r_.out_spin);
        if (!spin_.consistent) throw ConstructionError("host spin inconsistent");
        for (auto& c : host.basic_cycles) enqueue(c);
        // glue by distance from the root; deterministic copy numbering
        while (true) {
            auto dist = g_.bfs_dist(g_.root);
            int best = kNone;
            long long best_key = -1;
            for (int i = 0; i < static_cast<int>(queue_.size()); ++i) {
                if (done_[i]) continue;
                int dmin = std::numeric_limits<int>::max();
                for (int v : queue_[i].verts)
                    dmin = std::min(dmin, dist[v] == kNone ? dmin : dist[v]);
                if (dmin > r_.radius) continue;
                long long key = static_cast<long long>(dmin) * 1000000 + i;
                if (best == kNone || key < best_key) {
                    best = i;
                    best_key = key;
                }
            }
            if (best == kNone) break;
            done_[best] = 1;
            glue_copy(queue_[best], static_cast<int>(best_key / 1000000));
            if (g_.num_vertices() > r_.vertex_budget)
                throw ConstructionError("vertex budget exhausted during gluing");
        }
        for (int v = 0; v < g_.num_vertices(); ++v) g_.boundary[v] = g_.complete(v) ? 0 : 1;
        verify_result();
        return g_;
    }

private:
    GlueRecipe r_;
    ColoredGraph g_;
    SpinPropagation spin_;
    std::vector<detail::HostCycle> queue_;
    std::vector<char> done_;
    std::set<std::vector<int>> known_;  // canonical vertex sets of seen cycles

    int basic_cycle_length() const {
        int n = 0;
        for (const auto& l : r_.basic_relators.at(0))
            n += static_cast<int>(r_.mm.images[l.color].size());
        return n;
    }

    void enqueue(const detail::HostCycle& c) {
        std::vector<int> key = c.verts;
        std::sort(key.begin(), key.end());
        if (!known_.insert(key).second) return;
        queue_.push_back(c);
        done_.push_back(0);
    }

    // Alignment of the copy cycle onto the host cycle: map copy position j to
    // host position (s + eps j) mod L so that colours, dart directions, free
    // slots and spins all match.
    struct Alignment {
        int s, eps, tau;
        bool ok = false;
    };

    Alignment find_alignment(const detail::HostCycle& host, const detail::SubstitutedCore& copy,
                             const detail::HostCycle& cyc,
                             const SpinPropagation& copy_spin) const {
        const int L = static_cast<int>(host.verts.size());
        if (static_cast<int>(cyc.verts.size()) != L) return {};
        for (int eps : {-1, +1})
            for (int s = 0; s < L; ++s) {
                Alignment a{s, eps, 0, true};
                for (int j = 0; j < L && a.ok; ++j) {
                    int hj = ((s + eps * j) % L + L) % L;
                    // edge copy j -> j+1 against the corresponding host edge
                    Letter ce = cyc.cols[j];
                    Letter he;
                    if (eps == +1) he = host.cols[hj];
                    else {
                        Letter e = host.cols[((hj - 1) % L + L) % L];
                        he = {e.color,
                              r_.out_alphabet.involution(e.color) ? +1 : -e.sign};
                    }
                    if (!(ce == he)) a.ok = false;
                }
                if (!a.ok) continue;
                // spins: copy labelling must equal tau * host labelling
                for (int j = 0; j < L && a.ok; ++j) {
                    int hj = ((s + eps * j) % L + L) % L;
                    int t = spin_.spin[host.verts[hj]] * copy_spin.spin[cyc.verts[j]];
                    if (t == 0) a.ok = false;
                    else if (a.tau == 0) a.tau = t;
                    else if (a.tau != t) a.ok = false;
                }
                if (!a.ok) continue;
                // every copy dart not on the cycle needs a free host slot
                for (int j = 0; j < L && a.ok; ++j) {
                    int hj = ((s + eps * j) % L + L) % L;
                    int cv = cyc.verts[j], hv = host.verts[hj];
                    for (int c = 0; c < r_.out_alphabet.size() && a.ok; ++c)
                        for (int k = 0; k < (r_.out_alphabet.involution(c) ? 1 : 2); ++k) {
                            if (copy.g.rows[cv].s[c][k] == kNone) continue;
                            bool on_cycle = false;
                            int prev = ((j - 1) % L + L) % L;
                            int cnbr = copy.g.rows[cv].s[c][k];
                            if (cnbr == cyc.verts[(j + 1) % L] || cnbr == cyc.verts[prev])
                                on_cycle = true;
                            if (on_cycle) continue;
                            if (g_.rows[hv].s[c][k] != kNone) a.ok = false;
                        }
                }
                if (a.ok) return a;
            }
        return {};
    }

    void glue_copy(const detail::HostCycle& host, int dmin) {
        const int L = static_cast<int>(host.verts.size());
        int copy_radius = (r_.radius - dmin) + L + 6;
        auto core = r_.core_builder(copy_radius);
        auto copy = detail::substitute_core(core, r_.core_spin, r_.basic_relators,
                                            r_.out_alphabet, r_.mm);
        auto copy_spin = propagate_spin(copy.g, r_.out_spin);
        if (!copy_spin.consistent) throw ConstructionError("copy spin inconsistent");
        // candidate attachment cycles of the copy, nearest to its root first
        auto cdist = copy.g.bfs_dist(copy.g.root);
        std::vector<int> cand(copy.basic_cycles.size());
        std::iota(cand.begin(), cand.end(), 0);
        auto cyc_key = [&](int i) {
            int dmin2 = std::numeric_limits<int>::max();
            for (int v : copy.basic_cycles[i].verts)
                dmin2 = std::min(dmin2, cdist[v] == kNone ? dmin2 : cdist[v]);
            return dmin2;
        };
        std::stable_sort(cand.begin(), cand.end(),
                         [&](int a, int b) { return cyc_key(a) < cyc_key(b); });
        for (int ci : cand) {
            const auto& cyc = copy.basic_cycles[ci];
            auto al = find_alignment(host, copy, cyc, copy_spin);
            if (!al.ok) continue;
            merge(host, copy, ci, al, copy_spin);
            return;
        }
        throw ConstructionError("society attachment failed: no valid alignment");
    }

    void merge(const detail::HostCycle& host, const detail::SubstitutedCore& copy, int ci,
               const Alignment& al, const SpinPropagation& copy_spin) {
        const auto& cyc = copy.basic_cycles[ci];
        const int L = static_cast<int>(host.verts.size());
        std::vector<int> vmap(copy.g.num_vertices(), kNone);
        for (int j = 0; j < L; ++j) {
            int hj = ((al.s + al.eps * j) % L + L) % L;
            vmap[cyc.verts[j]] = host.verts[hj];
        }
        for (int v = 0; v < copy.g.num_vertices(); ++v)
            if (vmap[v] == kNone) {
                vmap[v] = g_.add_vertex();
                spin_.spin.push_back(al.tau * copy_spin.spin[v]);
            }
        for (int u = 0; u < copy.g.num_vertices(); ++u)
            for (int c = 0; c < r_.out_alphabet.size(); ++c) {
                int v = copy.g.rows[u].s[c][0];
                if (v == kNone) continue;
                if (r_.out_alphabet.involution(c) && u > v) continue;
                int mu = vmap[u], mv = vmap[v];
                if (g_.rows[mu].s[c][0] == mv) continue;  // shared cycle edge
                bool head_free = r_.out_alphabet.involution(c) ? g_.rows[mv].s[c][0] == kNone
                                                               : g_.rows[mv].s[c][1] == kNone;
                if (g_.rows[mu].s[c][0] != kNone || !head_free)
                    throw ConstructionError("society attachment violates existing structure");
                g_.set_edge(mu, c, mv);
            }
        // surface the copy's remaining basic cycles
        for (int i = 0; i < static_cast<int>(copy.basic_cycles.size()); ++i) {
            if (i == ci) continue;
            detail::HostCycle hc = copy.basic_cycles[i];
            for (auto& v : hc.verts) v = vmap[v];
            enqueue(hc);
        }
    }

    void verify_result() {
        auto chk = check_consistency(g_, r_.out_spin);
        if (!chk.pass) throw ConstructionError("glued graph has inconsistent spin");
        auto dist = g_.bfs_dist(g_.root);
        for (int v = 0; v < g_.num_vertices(); ++v)
            if (dist[v] != kNone && dist[v] < r_.radius && !g_.complete(v))
                throw ConstructionError("interior vertex left incomplete by gluing");
    }
};

inline ColoredGraph metaedge_substitution_build(const GlueRecipe& r) {
    return MetaedgeGluer(r).build();
}

}  // namespace cayley
