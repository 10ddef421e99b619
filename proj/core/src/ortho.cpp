#include "ekm/ortho.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>

namespace ekm {

Pt GridEmbedding::bbox_min() const {
    Pt mn{INT64_MAX, INT64_MAX};
    for (auto& p : vpos) { mn.x = std::min(mn.x, p.x); mn.y = std::min(mn.y, p.y); }
    for (auto& path : epath)
        for (auto& p : path) { mn.x = std::min(mn.x, p.x); mn.y = std::min(mn.y, p.y); }
    return mn;
}

Pt GridEmbedding::bbox_max() const {
    Pt mx{INT64_MIN, INT64_MIN};
    for (auto& p : vpos) { mx.x = std::max(mx.x, p.x); mx.y = std::max(mx.y, p.y); }
    for (auto& path : epath)
        for (auto& p : path) { mx.x = std::max(mx.x, p.x); mx.y = std::max(mx.y, p.y); }
    return mx;
}

namespace {

constexpr int kN = 0, kE = 1, kS = 2, kW = 3;

// ---------------------------------------------------------------------------
// Biconnected case: st-order sweep. Vertices are placed on increasing rows;
// every edge gets a reserved column, bending into its endpoints' rows at the
// ends. Columns live in a persistent left-to-right slot list so coordinates
// can be assigned once at the end; anything inserted between two slots later
// is created at a higher row and cannot cross earlier horizontal segments.
// ---------------------------------------------------------------------------
struct StDrawer {
    const Graph& g;
    const RotationSystem& rot;
    int s, t;
    std::vector<int> order;                 // st-numbering
    std::vector<int> rank;                  // vertex -> position in order
    std::vector<int> slots;                 // slot ids, left to right
    int next_slot = 0;

    struct Column {
        int slot;
        int top_row;
        int eid;
    };
    std::vector<Column> frontier;

    std::vector<Pt> vpos_sr;                           // (slot, row) space
    std::vector<std::vector<Pt>> epath_sr;

    StDrawer(const Graph& graph, const RotationSystem& rotation, int s_, int t_,
             std::vector<int> st_order)
        : g(graph), rot(rotation), s(s_), t(t_), order(std::move(st_order)) {
        rank.assign(g.n, -1);
        for (int i = 0; i < static_cast<int>(order.size()); ++i) rank[order[i]] = i;
        vpos_sr.assign(g.n, Pt{});
        epath_sr.assign(g.edges.size(), {});
    }

    bool edge_out(int eid, int v) const { return rank[g.other(eid, v)] > rank[v]; }

    int st_eid() const {
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            auto [a, b] = g.edges[e];
            if ((a == s && b == t) || (a == t && b == s)) return e;
        }
        throw std::logic_error("StDrawer: missing st edge");
    }

    // Splits rot.order[v] into in-run then out-run (cyclic); returns
    // {ins in clockwise order, outs in clockwise order}. Fails if not
    // consecutive (the orientation is then unusable for this embedding).
    bool split_runs(int v, std::vector<int>& ins, std::vector<int>& outs) const {
        const auto& cyc = rot.order[v];
        int n = static_cast<int>(cyc.size());
        ins.clear();
        outs.clear();
        if (n == 0) return true;
        // Find a position where an out-edge follows an in-edge.
        int start = -1;
        for (int i = 0; i < n; ++i) {
            bool prev_out = edge_out(cyc[(i + n - 1) % n], v);
            bool cur_out = edge_out(cyc[i], v);
            if (!prev_out && cur_out) { start = i; break; }
        }
        if (start < 0) {
            // All same direction (s or t).
            for (int e : cyc) (edge_out(e, v) ? outs : ins).push_back(e);
            return true;
        }
        int i = start;
        while (static_cast<int>(outs.size()) < n && edge_out(cyc[i], v)) {
            outs.push_back(cyc[i]);
            i = (i + 1) % n;
        }
        while (static_cast<int>(ins.size()) + static_cast<int>(outs.size()) < n) {
            if (edge_out(cyc[i], v)) return false;  // interleaved
            ins.push_back(cyc[i]);
            i = (i + 1) % n;
        }
        return true;
    }

    int slot_pos(int slot) const {
        for (int i = 0; i < static_cast<int>(slots.size()); ++i)
            if (slots[i] == slot) return i;
        throw std::logic_error("StDrawer: unknown slot");
    }

    int new_slot_at(int pos) {
        slots.insert(slots.begin() + pos, next_slot);
        return next_slot++;
    }

    void draw() {
        int st = st_eid();
        // --- place s ---
        int row = 0;
        std::vector<int> s_ins, s_outs;
        split_runs(s, s_ins, s_outs);
        assert(s_ins.empty());
        // Cyclic order starting at the st edge.
        std::vector<int> others;
        {
            const auto& cyc = rot.order[s];
            int idx = rot.index_of(s, st);
            for (int i = 1; i < static_cast<int>(cyc.size()); ++i)
                others.push_back(cyc[(idx + i) % cyc.size()]);
        }
        int s_slot = new_slot_at(0);
        vpos_sr[s] = {s_slot, row};
        // Directions for non-st out edges, preserving clockwise order after S.
        // 1 edge: N; 2: N,E; 3: W,N,E.
        std::vector<int> dirs;
        if (others.size() == 1) dirs = {kN};
        else if (others.size() == 2) dirs = {kN, kE};
        else if (others.size() == 3) dirs = {kW, kN, kE};
        else if (!others.empty())
            throw UnsupportedGraph("orthogonal_embed: degree exceeds 4");
        // W,N,E in clockwise-after-S order means listed order matches `others`.
        for (size_t i = 0; i < others.size(); ++i) {
            int e = others[i], d = dirs[i];
            if (d == kN) {
                frontier.push_back({s_slot, row, e});
                epath_sr[e] = {vpos_sr[s]};
            } else {
                int pos = slot_pos(s_slot);
                int slot = new_slot_at(d == kW ? pos : pos + 1);
                epath_sr[e] = {vpos_sr[s], Pt{slot, row}};
                Column col{slot, row, e};
                // Keep frontier in slot order: W goes before, E after.
                if (d == kW) frontier.insert(frontier.begin(), col);
                else frontier.push_back(col);
            }
        }
        // Frontier is now left-to-right; verify against expected L2R = others.
        reorder_frontier();
        {
            std::vector<int> fr;
            for (auto& c : frontier) fr.push_back(c.eid);
            if (fr != others) throw std::logic_error("StDrawer: source frontier mismatch");
        }

        // --- middle vertices and t ---
        for (int oi = 1; oi < static_cast<int>(order.size()); ++oi) {
            int v = order[oi];
            row = oi;
            std::vector<int> ins, outs;
            if (!split_runs(v, ins, outs))
                throw std::logic_error("StDrawer: in/out edges interleaved at vertex " +
                                       std::to_string(v));
            bool is_t = (v == t);
            if (is_t) {
                // Rotate so st comes first, rest are ins clockwise.
                std::vector<int> rest;
                const auto& cyc = rot.order[v];
                int idx = rot.index_of(v, st);
                for (int i = 1; i < static_cast<int>(cyc.size()); ++i)
                    rest.push_back(cyc[(idx + i) % cyc.size()]);
                ins = rest;
                outs.clear();
            }
            int q = static_cast<int>(ins.size()), p = static_cast<int>(outs.size());
            if (q == 0) throw std::logic_error("StDrawer: middle vertex without in-edge");
            if (q > 3 || p > 3 || q + p > 4)
                throw UnsupportedGraph("orthogonal_embed: degree exceeds 4");

            // Frontier positions of in-columns; must be consecutive and equal
            // to reverse(ins) left-to-right.
            std::vector<int> fpos;
            for (int i = 0; i < static_cast<int>(frontier.size()); ++i) {
                bool mine = false;
                for (int e : ins)
                    if (frontier[i].eid == e) mine = true;
                if (mine) fpos.push_back(i);
            }
            if (static_cast<int>(fpos.size()) != q)
                throw std::logic_error("StDrawer: lost in-edge");
            for (int i = 1; i < q; ++i)
                if (fpos[i] != fpos[0] + i)
                    throw std::logic_error("StDrawer: in-run not consecutive on frontier");
            for (int i = 0; i < q; ++i)
                if (frontier[fpos[0] + i].eid != ins[q - 1 - i])
                    throw std::logic_error("StDrawer: in-run order mismatch");

            // Vertex column: q=1 -> its column; q=2 -> left; q=3 -> middle.
            int vcol_idx = fpos[0] + (q == 3 ? 1 : 0);
            int vslot = frontier[vcol_idx].slot;
            vpos_sr[v] = {vslot, row};

            // Terminate in-columns: vertical to this row, plus bends.
            for (int i = 0; i < q; ++i) {
                Column& col = frontier[fpos[0] + i];
                auto& path = epath_sr[col.eid];
                if (col.slot == vslot) {
                    path.push_back(vpos_sr[v]);
                } else {
                    path.push_back(Pt{col.slot, row});
                    path.push_back(vpos_sr[v]);
                }
            }

            // Replace the run with out-columns.
            std::vector<Column> repl;
            auto make_col = [&](int eid, int d) {
                if (d == kN) {
                    epath_sr[eid] = {vpos_sr[v]};
                    repl.push_back({vslot, row, eid});
                } else {
                    int pos = slot_pos(vslot);
                    int slot = new_slot_at(d == kW ? pos : pos + 1);
                    epath_sr[eid] = {vpos_sr[v], Pt{slot, row}};
                    repl.push_back({slot, row, eid});
                }
            };
            if (p == 1) {
                make_col(outs[0], kN);
            } else if (p == 2) {
                if (q == 2) { make_col(outs[0], kW); make_col(outs[1], kN); }
                else { make_col(outs[0], kN); make_col(outs[1], kE); }
            } else if (p == 3) {
                make_col(outs[0], kW);
                make_col(outs[1], kN);
                make_col(outs[2], kE);
            }
            frontier.erase(frontier.begin() + fpos[0], frontier.begin() + fpos[0] + q);
            frontier.insert(frontier.begin() + fpos[0], repl.begin(), repl.end());
            reorder_frontier();
            if (is_t) {
                if (!frontier.empty()) throw std::logic_error("StDrawer: frontier not empty at t");
                break;
            }
        }

        // --- st edge wraps around the west side ---
        int st_slot = new_slot_at(0);
        int t_row = rank[t];
        epath_sr[st] = {vpos_sr[s], Pt{vpos_sr[s].x, -1}, Pt{st_slot, -1},
                        Pt{st_slot, t_row + 1}, Pt{vpos_sr[t].x, t_row + 1}, vpos_sr[t]};
    }

    void reorder_frontier() {
        std::vector<int> ord(slots.size());
        for (int i = 0; i < static_cast<int>(slots.size()); ++i) ord[slots[i]] = i;
        std::stable_sort(frontier.begin(), frontier.end(),
                         [&](const Column& a, const Column& b) { return ord[a.slot] < ord[b.slot]; });
    }

    // Final coordinates: x = slot position, y = row.
    void emit(GridEmbedding& emb, const std::vector<int>& vmap,
              const std::vector<int>& emap, Pt offset) const {
        std::vector<int> slot_x(next_slot);
        for (int i = 0; i < static_cast<int>(slots.size()); ++i) slot_x[slots[i]] = i;
        auto fix = [&](Pt p) { return Pt{slot_x[p.x] + offset.x, p.y + 1 + offset.y}; };
        for (int v = 0; v < g.n; ++v) emb.vpos[vmap[v]] = fix(vpos_sr[v]);
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            std::vector<Pt> path;
            for (Pt p : epath_sr[e]) {
                Pt q = fix(p);
                if (path.empty() || !(path.back() == q)) path.push_back(q);
            }
            emb.epath[emap[e]] = std::move(path);
        }
    }

    int width() const { return static_cast<int>(slots.size()); }
    int height() const { return static_cast<int>(order.size()) + 2; }
};

// ---------------------------------------------------------------------------
// Tree case: bottom-up recursive layout. Each subtree is drawn self-contained
// with its root at the origin; children fan into the free compass directions
// in rotation order and are pushed outward until every covered grid point of
// the shifted subtree and of the connecting straight edge is free.
// ---------------------------------------------------------------------------
struct TreeLayout {
    std::map<int, Pt> vpos;
    std::map<int, std::vector<Pt>> epaths;
    std::set<Pt> pts;  // all grid points covered by vertices and edge paths
};

struct TreeDrawer {
    const Graph& g;
    const RotationSystem& rot;
    std::vector<std::vector<int>> adj;

    TreeDrawer(const Graph& graph, const RotationSystem& rotation)
        : g(graph), rot(rotation), adj(graph.adjacency()) {}

    TreeLayout layout(int v, int parent_edge, int in_dir) const {
        TreeLayout L;
        L.vpos[v] = {0, 0};
        L.pts.insert({0, 0});
        const auto& cyc = rot.order[v];
        std::vector<int> children;
        if (parent_edge < 0) {
            children = cyc;
        } else {
            int idx = rot.index_of(v, parent_edge);
            for (int i = 1; i < static_cast<int>(cyc.size()); ++i)
                children.push_back(cyc[(idx + i) % cyc.size()]);
        }
        if (children.size() > (parent_edge < 0 ? 4u : 3u))
            throw UnsupportedGraph("orthogonal_embed: degree exceeds 4");
        int base = parent_edge < 0 ? kE : (in_dir + 1) % 4;
        for (size_t i = 0; i < children.size(); ++i) {
            int e = children[i];
            int d = (base + static_cast<int>(i)) % 4;
            int w = g.other(e, v);
            TreeLayout CL = layout(w, e, (d + 2) % 4);
            Pt dirv = kDirs[d];
            for (int64_t dist = 1;; ++dist) {
                Pt delta = dirv * dist;
                bool clear = true;
                for (const Pt& p : CL.pts)
                    if (L.pts.count(p + delta)) { clear = false; break; }
                for (int64_t j = 1; clear && j < dist; ++j) {
                    Pt ip = dirv * j;
                    if (L.pts.count(ip) || CL.pts.count(ip - delta)) clear = false;
                }
                if (!clear) continue;
                for (auto& [w2, p] : CL.vpos) L.vpos[w2] = p + delta;
                for (auto& [e2, path] : CL.epaths) {
                    auto moved = path;
                    for (auto& p : moved) p = p + delta;
                    L.epaths[e2] = std::move(moved);
                }
                for (const Pt& p : CL.pts) L.pts.insert(p + delta);
                for (int64_t j = 1; j < dist; ++j) L.pts.insert(dirv * j);
                L.epaths[e] = {Pt{0, 0}, delta};
                break;
            }
        }
        return L;
    }
};

}  // namespace

GridEmbedding orthogonal_embed(const Graph& g, const RotationSystem& rot) {
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 4) throw UnsupportedGraph("orthogonal_embed: degree exceeds 4");

    GridEmbedding emb;
    emb.vpos.assign(g.n, Pt{});
    emb.epath.assign(g.edges.size(), {});

    auto [comp, ncomp] = components(g);
    int64_t x_cursor = 0;
    for (int c = 0; c < ncomp; ++c) {
        // Component subgraph.
        std::vector<int> vmap_rev(g.n, -1), vmap;
        for (int v = 0; v < g.n; ++v)
            if (comp[v] == c) {
                vmap_rev[v] = static_cast<int>(vmap.size());
                vmap.push_back(v);
            }
        Graph sub;
        sub.n = static_cast<int>(vmap.size());
        std::vector<int> emap;  // sub edge -> global edge
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            auto [a, b] = g.edges[e];
            if (comp[a] != c) continue;
            sub.add_edge(vmap_rev[a], vmap_rev[b]);
            emap.push_back(e);
        }
        RotationSystem srot;
        srot.order.assign(sub.n, {});
        {
            std::vector<int> eid_map(g.edges.size(), -1);
            for (int se = 0; se < static_cast<int>(emap.size()); ++se) eid_map[emap[se]] = se;
            for (int sv = 0; sv < sub.n; ++sv)
                for (int e : rot.order[vmap[sv]]) srot.order[sv].push_back(eid_map[e]);
        }

        int E = static_cast<int>(sub.edges.size());
        GridEmbedding cemb;
        cemb.vpos.assign(sub.n, Pt{});
        cemb.epath.assign(E, {});

        if (E == sub.n - 1) {
            // Tree (possibly a single vertex).
            TreeDrawer td(sub, srot);
            TreeLayout L = td.layout(0, -1, 0);
            for (auto& [v, p] : L.vpos) cemb.vpos[v] = p;
            for (auto& [e, path] : L.epaths) cemb.epath[e] = path;
        } else {
            auto blocks = biconnected_blocks(sub);
            if (blocks.blocks.size() != 1)
                throw UnsupportedGraph(
                    "orthogonal_embed: component mixes cycles and cut vertices; only trees "
                    "and biconnected components are drawable");
            // Find an st edge whose orientation splits every rotation into
            // consecutive in/out runs.
            bool drawn = false;
            for (int cand = 0; cand < E && !drawn; ++cand) {
                auto [cs, ct] = sub.edges[cand];
                std::vector<int> ord;
                try {
                    ord = st_numbering(sub, cs, ct);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                StDrawer sd(sub, srot, cs, ct, ord);
                bool ok = true;
                for (int v = 0; v < sub.n && ok; ++v) {
                    std::vector<int> ins, outs;
                    ok = sd.split_runs(v, ins, outs);
                }
                if (!ok) continue;
                try {
                    sd.draw();
                } catch (const std::logic_error&) {
                    continue;
                }
                std::vector<int> idmap(sub.n), eidmap(E);
                for (int i = 0; i < sub.n; ++i) idmap[i] = i;
                for (int i = 0; i < E; ++i) eidmap[i] = i;
                sd.emit(cemb, idmap, eidmap, Pt{0, 0});
                drawn = true;
            }
            if (!drawn)
                throw UnsupportedGraph("orthogonal_embed: no usable st orientation found");
        }

        // Shift component into its own horizontal band.
        Pt mn{0, 0}, mx{0, 0};
        bool any = sub.n > 0;
        if (any) {
            mn = Pt{INT64_MAX, INT64_MAX};
            mx = Pt{INT64_MIN, INT64_MIN};
            for (auto& p : cemb.vpos) {
                mn.x = std::min(mn.x, p.x); mn.y = std::min(mn.y, p.y);
                mx.x = std::max(mx.x, p.x); mx.y = std::max(mx.y, p.y);
            }
            for (auto& path : cemb.epath)
                for (auto& p : path) {
                    mn.x = std::min(mn.x, p.x); mn.y = std::min(mn.y, p.y);
                    mx.x = std::max(mx.x, p.x); mx.y = std::max(mx.y, p.y);
                }
        }
        Pt shift{x_cursor - mn.x, -mn.y};
        for (int sv = 0; sv < sub.n; ++sv) emb.vpos[vmap[sv]] = cemb.vpos[sv] + shift;
        for (int se = 0; se < E; ++se) {
            auto path = cemb.epath[se];
            for (auto& p : path) p = p + shift;
            emb.epath[emap[se]] = std::move(path);
        }
        x_cursor += (mx.x - mn.x) + 3;
    }
    return emb;
}

std::vector<std::string> validate_embedding(const Graph& g, const RotationSystem& rot,
                                            const GridEmbedding& emb) {
    std::vector<std::string> bad;
    auto note = [&](std::string s) { bad.push_back(std::move(s)); };

    if (static_cast<int>(emb.vpos.size()) != g.n) {
        note("vertex position count mismatch");
        return bad;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (emb.vpos[u] == emb.vpos[v])
                note("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                     " coincide");

    // Per-edge path checks and segment collection.
    struct Seg {
        Pt a, b;
        int eid;
    };
    std::vector<Seg> segs;
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const auto& path = emb.epath[e];
        auto [u, v] = g.edges[e];
        if (path.size() < 2) {
            note("edge " + std::to_string(e) + ": path too short");
            continue;
        }
        if (!(path.front() == emb.vpos[u]) || !(path.back() == emb.vpos[v]))
            note("edge " + std::to_string(e) + ": path endpoints disagree with vertices");
        for (size_t i = 0; i + 1 < path.size(); ++i) {
            if (path[i].x != path[i + 1].x && path[i].y != path[i + 1].y)
                note("edge " + std::to_string(e) + ": leg not axis-parallel");
            if (path[i] == path[i + 1])
                note("edge " + std::to_string(e) + ": zero-length leg");
            segs.push_back({path[i], path[i + 1], e});
        }
        // Self-intersection: grid points visited twice.
        try {
            auto pts = walk_polyline(path);
            std::set<Pt> seen;
            for (auto& p : pts)
                if (!seen.insert(p).second) {
                    note("edge " + std::to_string(e) + ": path self-intersects");
                    break;
                }
        } catch (const std::invalid_argument&) {
            // already reported as non-axis-parallel
        }
    }

    // Pairwise disjointness except shared endpoints.
    for (size_t i = 0; i < segs.size(); ++i)
        for (size_t j = i + 1; j < segs.size(); ++j) {
            if (segs[i].eid == segs[j].eid) continue;
            if (!segments_intersect(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) continue;
            // Allowed only if the two edges share a vertex and the contact is
            // exactly that vertex position.
            auto [u1, v1] = g.edges[segs[i].eid];
            auto [u2, v2] = g.edges[segs[j].eid];
            std::vector<Pt> shared;
            for (int a : {u1, v1})
                for (int b : {u2, v2})
                    if (a == b) shared.push_back(emb.vpos[a]);
            bool ok = false;
            for (Pt sp : shared) {
                if (on_segment(segs[i].a, segs[i].b, sp) && on_segment(segs[j].a, segs[j].b, sp)) {
                    // Contact must be a single point: endpoints of both segs at sp.
                    bool ia = segs[i].a == sp || segs[i].b == sp;
                    bool ja = segs[j].a == sp || segs[j].b == sp;
                    // Also rule out collinear overlap beyond the point.
                    bool overlap = orientation(segs[i].a, segs[i].b, segs[j].a) == 0 &&
                                   orientation(segs[i].a, segs[i].b, segs[j].b) == 0 &&
                                   (on_segment(segs[i].a, segs[i].b, segs[j].a) &&
                                        !(segs[j].a == sp) ||
                                    on_segment(segs[i].a, segs[i].b, segs[j].b) &&
                                        !(segs[j].b == sp));
                    if (ia && ja && !overlap) ok = true;
                }
            }
            if (!ok)
                note("edges " + std::to_string(segs[i].eid) + " and " +
                     std::to_string(segs[j].eid) + " cross or touch improperly");
        }

    // Rotation conformance: clockwise order of initial directions.
    for (int v = 0; v < g.n; ++v) {
        std::vector<std::pair<int, int>> dir_edges;  // (clockwise key, eid)
        bool skip = false;
        for (int e : rot.order[v]) {
            const auto& path = emb.epath[e];
            if (path.size() < 2) { skip = true; break; }
            Pt a = path.front(), b = path[1];
            if (!(a == emb.vpos[v])) {
                a = path.back();
                b = path[path.size() - 2];
            }
            Pt d = b - a;
            int key;
            if (d.x == 0 && d.y > 0) key = kN;
            else if (d.x > 0 && d.y == 0) key = kE;
            else if (d.x == 0 && d.y < 0) key = kS;
            else if (d.x < 0 && d.y == 0) key = kW;
            else { skip = true; break; }
            dir_edges.emplace_back(key, e);
        }
        if (skip || dir_edges.size() < 2) continue;
        std::vector<int> seen_keys;
        for (auto& [k, e] : dir_edges) seen_keys.push_back(k);
        std::sort(seen_keys.begin(), seen_keys.end());
        if (std::adjacent_find(seen_keys.begin(), seen_keys.end()) != seen_keys.end()) {
            note("vertex " + std::to_string(v) + ": two edges leave in the same direction");
            continue;
        }
        auto sorted = dir_edges;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> clockwise;
        for (auto& [k, e] : sorted) clockwise.push_back(e);
        // rot.order[v] must be a rotation of `clockwise`.
        const auto& want = rot.order[v];
        bool match = false;
        int m = static_cast<int>(clockwise.size());
        for (int off = 0; off < m && !match; ++off) {
            bool eq = true;
            for (int i = 0; i < m; ++i)
                if (clockwise[(off + i) % m] != want[i]) { eq = false; break; }
            match = eq;
        }
        if (!match) note("vertex " + std::to_string(v) + ": rotation mismatch");
    }

    // Polynomial area.
    if (g.n > 0) {
        Pt mn = emb.bbox_min(), mx = emb.bbox_max();
        __int128 area = static_cast<__int128>(mx.x - mn.x + 1) * (mx.y - mn.y + 1);
        __int128 ve = g.n + static_cast<int>(g.edges.size());
        if (area > 4 * ve * ve + 64)
            note("bounding box area exceeds 4*(V+E)^2");
    }
    return bad;
}

}  // namespace ekm
