#include "ekm/planar.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>

namespace ekm {

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
        adj[edges[e].first].push_back(e);
        adj[edges[e].second].push_back(e);
    }
    return adj;
}

int Graph::degree(int v) const {
    int d = 0;
    for (auto& [a, b] : edges) d += (a == v) + (b == v);
    return d;
}

Graph Graph::from_incidence(const IncidenceGraph& g) {
    Graph out;
    out.n = g.node_count();
    for (auto& [v, c] : g.edges) out.add_edge(v, c);
    return out;
}

int RotationSystem::index_of(int v, int eid) const {
    const auto& cyc = order[v];
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
        if (cyc[i] == eid) return i;
    return -1;
}

std::vector<std::vector<HalfEdge>> trace_faces(const Graph& g, const RotationSystem& rot) {
    // next(u -> v along e) leaves v along the clockwise successor of e at v.
    std::map<std::pair<int, int>, bool> used;  // (tail, eid)
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        used[{g.edges[e].first, e}] = false;
        used[{g.edges[e].second, e}] = false;
    }
    std::vector<std::vector<HalfEdge>> faces;
    for (auto& [start, seen] : used) {
        if (seen) continue;
        std::vector<HalfEdge> face;
        HalfEdge h{start.first, start.second};
        while (true) {
            auto it = used.find({h.tail, h.eid});
            if (it->second) break;
            it->second = true;
            face.push_back(h);
            int v = g.other(h.eid, h.tail);
            int idx = rot.index_of(v, h.eid);
            if (idx < 0) throw std::logic_error("trace_faces: edge missing from rotation");
            const auto& cyc = rot.order[v];
            int next_eid = cyc[(idx + 1) % cyc.size()];
            h = HalfEdge{v, next_eid};
        }
        if (!face.empty()) faces.push_back(std::move(face));
    }
    return faces;
}

std::pair<std::vector<int>, int> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    auto adj = g.adjacency();
    int count = 0;
    for (int start = 0; start < g.n; ++start) {
        if (comp[start] >= 0) continue;
        std::vector<int> stack{start};
        comp[start] = count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : adj[v]) {
                int w = g.other(e, v);
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return {comp, count};
}

bool euler_ok(const Graph& g, const RotationSystem& rot, std::string* why) {
    auto [comp, ncomp] = components(g);
    auto faces = trace_faces(g, rot);
    std::vector<int> fv(ncomp, 0), vv(ncomp, 0), ev(ncomp, 0);
    for (int v = 0; v < g.n; ++v) vv[comp[v]]++;
    for (auto& [a, b] : g.edges) ev[comp[a]]++;
    for (auto& f : faces) fv[comp[f.front().tail]]++;
    for (int c = 0; c < ncomp; ++c) {
        if (vv[c] == 1 && ev[c] == 0) continue;  // isolated vertex: no orbits
        if (vv[c] - ev[c] + fv[c] != 2) {
            if (why) {
                std::ostringstream os;
                os << "component " << c << ": V-E+F = " << vv[c] << "-" << ev[c] << "+"
                   << fv[c] << " != 2";
                *why = os.str();
            }
            return false;
        }
    }
    return true;
}

BlockDecomposition biconnected_blocks(const Graph& g) {
    BlockDecomposition out;
    out.is_cut.assign(g.n, false);
    auto adj = g.adjacency();
    std::vector<int> num(g.n, -1), low(g.n, 0), parent_edge(g.n, -1);
    std::vector<int> edge_stack;
    int timer = 0;

    // Iterative DFS to keep deep graphs safe.
    struct Frame {
        int v;
        size_t ai;
    };
    for (int root = 0; root < g.n; ++root) {
        if (num[root] >= 0) continue;
        std::vector<Frame> stack{{root, 0}};
        num[root] = low[root] = timer++;
        int root_children = 0;
        while (!stack.empty()) {
            auto& fr = stack.back();
            int v = fr.v;
            if (fr.ai < adj[v].size()) {
                int e = adj[v][fr.ai++];
                if (e == parent_edge[v]) continue;
                int w = g.other(e, v);
                if (num[w] < 0) {
                    edge_stack.push_back(e);
                    num[w] = low[w] = timer++;
                    parent_edge[w] = e;
                    if (v == root) root_children++;
                    stack.push_back({w, 0});
                } else if (num[w] < num[v]) {
                    edge_stack.push_back(e);
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                stack.pop_back();
                if (!stack.empty()) {
                    int p = stack.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        // p closes a block; pop edges down to parent_edge[v].
                        std::vector<int> block;
                        while (!edge_stack.empty()) {
                            int e = edge_stack.back();
                            edge_stack.pop_back();
                            block.push_back(e);
                            if (e == parent_edge[v]) break;
                        }
                        if (!block.empty()) out.blocks.push_back(std::move(block));
                        if (p != root || root_children > 1) out.is_cut[p] = true;
                    }
                }
            }
        }
        if (root_children > 1) out.is_cut[root] = true;
    }
    return out;
}

namespace {

// ---- Demoucron face-insertion embedding for a 2-connected graph ----------

struct Face {
    std::vector<HalfEdge> boundary;  // consecutive half-edges, cyclic
};

struct Embedder {
    const Graph& g;
    std::vector<std::vector<int>> adj;
    std::vector<bool> edge_in, vert_in;
    std::vector<Face> faces;

    explicit Embedder(const Graph& graph)
        : g(graph), adj(graph.adjacency()), edge_in(graph.edges.size(), false),
          vert_in(graph.n, false) {}

    std::vector<int> find_cycle() const {
        // DFS until a back edge closes a cycle; returns vertex sequence.
        std::vector<int> par(g.n, -2), par_edge(g.n, -1);
        for (int root = 0; root < g.n; ++root) {
            if (par[root] != -2) continue;
            par[root] = -1;
            std::vector<int> stack{root};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : adj[v]) {
                    if (e == par_edge[v]) continue;
                    int w = g.other(e, v);
                    if (par[w] == -2) {
                        par[w] = v;
                        par_edge[w] = e;
                        stack.push_back(w);
                    } else {
                        // Cycle: v .. up to common ancestor .. w. Walk both up.
                        std::vector<int> pv{v}, pw{w};
                        std::set<int> seen(pv.begin(), pv.end());
                        int x = v;
                        while (par[x] >= 0) {
                            x = par[x];
                            pv.push_back(x);
                            seen.insert(x);
                        }
                        x = w;
                        while (seen.find(x) == seen.end()) {
                            x = par[x];
                            pw.push_back(x);
                        }
                        // x = meeting vertex; build w..x reversed + x..v part
                        std::vector<int> cycle;
                        for (int y : pw) cycle.push_back(y);  // w .. x
                        std::vector<int> upper;
                        for (int y : pv) {
                            if (y == x) break;
                            upper.push_back(y);
                        }
                        std::reverse(upper.begin(), upper.end());  // x-side .. v
                        for (int y : upper) cycle.push_back(y);
                        return cycle;  // closed by edge (v, w)
                    }
                }
            }
        }
        return {};
    }

    int edge_between(int u, int v) const {
        for (int e : adj[u])
            if (g.other(e, u) == v) return e;
        return -1;
    }

    void start_with_cycle(const std::vector<int>& cyc) {
        Face f1, f2;
        int L = static_cast<int>(cyc.size());
        for (int i = 0; i < L; ++i) {
            int u = cyc[i], v = cyc[(i + 1) % L];
            int e = edge_between(u, v);
            f1.boundary.push_back({u, e});
            edge_in[e] = true;
            vert_in[u] = true;
        }
        for (int i = L - 1; i >= 0; --i) {
            int u = cyc[(i + 1) % L], v = cyc[i];
            int e = edge_between(v, u);
            f2.boundary.push_back({u, e});
        }
        faces.push_back(std::move(f1));
        faces.push_back(std::move(f2));
    }

    struct Fragment {
        std::vector<int> edges;
        std::set<int> attachments;
    };

    std::vector<Fragment> fragments() const {
        std::vector<Fragment> out;
        std::vector<bool> edge_seen(g.edges.size(), false);
        // Chords between embedded vertices.
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
            if (edge_in[e]) continue;
            auto [u, v] = g.edges[e];
            if (vert_in[u] && vert_in[v]) {
                Fragment fr;
                fr.edges = {e};
                fr.attachments = {u, v};
                out.push_back(std::move(fr));
                edge_seen[e] = true;
            }
        }
        // Components of the unembedded part plus their attachment edges.
        std::vector<bool> vseen(g.n, false);
        for (int start = 0; start < g.n; ++start) {
            if (vert_in[start] || vseen[start]) continue;
            Fragment fr;
            std::vector<int> stack{start};
            vseen[start] = true;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int e : adj[v]) {
                    if (edge_in[e] || edge_seen[e]) continue;
                    edge_seen[e] = true;
                    fr.edges.push_back(e);
                    int w = g.other(e, v);
                    if (vert_in[w]) {
                        fr.attachments.insert(w);
                    } else if (!vseen[w]) {
                        vseen[w] = true;
                        stack.push_back(w);
                    }
                }
            }
            if (!fr.edges.empty()) out.push_back(std::move(fr));
        }
        return out;
    }

    std::set<int> face_vertices(const Face& f) const {
        std::set<int> vs;
        for (auto& h : f.boundary) vs.insert(h.tail);
        return vs;
    }

    // Path through the fragment between two distinct attachments, interior
    // disjoint from the embedded subgraph.
    std::vector<int> alpha_path(const Fragment& fr) const {
        assert(fr.attachments.size() >= 2);
        int a = *fr.attachments.begin();
        std::vector<bool> in_frag(g.edges.size(), false);
        for (int e : fr.edges) in_frag[e] = true;
        std::vector<int> prev(g.n, -2);
        std::vector<int> queue{a};
        prev[a] = -1;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            if (v != a && vert_in[v]) continue;  // don't pass through embedded verts
            for (int e : adj[v]) {
                if (!in_frag[e]) continue;
                int w = g.other(e, v);
                if (prev[w] != -2) continue;
                prev[w] = v;
                if (vert_in[w] && w != a) {
                    std::vector<int> path{w};
                    int x = w;
                    while (x != a) {
                        x = prev[x];
                        path.push_back(x);
                    }
                    std::reverse(path.begin(), path.end());
                    return path;  // a .. w
                }
                queue.push_back(w);
            }
        }
        throw std::logic_error("alpha_path: fragment with fewer than two attachments");
    }

    void insert_path(int face_idx, const std::vector<int>& path) {
        Face face = faces[face_idx];
        int u = path.front(), v = path.back();
        int L = static_cast<int>(face.boundary.size());
        int a = -1, b = -1;
        for (int i = 0; i < L; ++i) {
            if (face.boundary[i].tail == u) a = i;
            if (face.boundary[i].tail == v) b = i;
        }
        assert(a >= 0 && b >= 0 && a != b);
        Face f1, f2;
        for (int i = a; i != b; i = (i + 1) % L) f1.boundary.push_back(face.boundary[i]);
        for (int j = static_cast<int>(path.size()) - 1; j > 0; --j) {
            int e = edge_between(path[j], path[j - 1]);
            f1.boundary.push_back({path[j], e});
        }
        for (int i = b; i != a; i = (i + 1) % L) f2.boundary.push_back(face.boundary[i]);
        for (int j = 0; j + 1 < static_cast<int>(path.size()); ++j) {
            int e = edge_between(path[j], path[j + 1]);
            f2.boundary.push_back({path[j], e});
        }
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            edge_in[edge_between(path[j], path[j + 1])] = true;
            vert_in[path[j]] = true;
        }
        vert_in[path.back()] = true;
        faces[face_idx] = std::move(f1);
        faces.push_back(std::move(f2));
    }

    // Runs the insertion loop; throws NonplanarError if stuck.
    void run() {
        auto cyc = find_cycle();
        if (cyc.empty()) throw std::logic_error("Embedder: acyclic block");
        start_with_cycle(cyc);
        while (true) {
            auto frs = fragments();
            if (frs.empty()) break;
            // Admissible faces per fragment.
            std::vector<std::vector<int>> admissible(frs.size());
            std::vector<std::set<int>> fverts;
            fverts.reserve(faces.size());
            for (auto& f : faces) fverts.push_back(face_vertices(f));
            for (size_t i = 0; i < frs.size(); ++i) {
                for (size_t fi = 0; fi < faces.size(); ++fi) {
                    bool ok = true;
                    for (int at : frs[i].attachments)
                        if (fverts[fi].find(at) == fverts[fi].end()) {
                            ok = false;
                            break;
                        }
                    if (ok) admissible[i].push_back(static_cast<int>(fi));
                }
                if (admissible[i].empty())
                    throw NonplanarError("fragment with no admissible face (graph is nonplanar)");
            }
            size_t pick = 0;
            for (size_t i = 0; i < frs.size(); ++i)
                if (admissible[i].size() == 1) {
                    pick = i;
                    break;
                }
            auto path = alpha_path(frs[pick]);
            insert_path(admissible[pick][0], path);
        }
    }

    // Rotation system of the embedded block restricted to embedded edges.
    RotationSystem rotation() const {
        std::vector<std::map<int, int>> succ(g.n);  // at v: edge -> next edge cw
        for (auto& f : faces) {
            int L = static_cast<int>(f.boundary.size());
            for (int i = 0; i < L; ++i) {
                const HalfEdge& h = f.boundary[i];
                const HalfEdge& nx = f.boundary[(i + 1) % L];
                int v = g.other(h.eid, h.tail);
                assert(nx.tail == v);
                succ[v][h.eid] = nx.eid;
            }
        }
        RotationSystem rot;
        rot.order.assign(g.n, {});
        for (int v = 0; v < g.n; ++v) {
            if (succ[v].empty()) continue;
            int start = succ[v].begin()->first;
            int e = start;
            do {
                rot.order[v].push_back(e);
                auto it = succ[v].find(e);
                if (it == succ[v].end()) throw std::logic_error("rotation: broken orbit");
                e = it->second;
            } while (e != start && rot.order[v].size() <= succ[v].size());
            if (rot.order[v].size() != succ[v].size())
                throw std::logic_error("rotation: orbit does not cover incident edges");
        }
        return rot;
    }
};

}  // namespace

RotationSystem planar_rotation(const Graph& g) {
    RotationSystem rot;
    rot.order.assign(g.n, {});
    auto blocks = biconnected_blocks(g);
    auto adj = g.adjacency();
    // Per-vertex rotation: concatenate each block's cyclic run around it; a
    // planar embedding always exists with each block in its own region.
    for (auto& block : blocks.blocks) {
        if (block.size() == 1) {
            int e = block[0];
            rot.order[g.edges[e].first].push_back(e);
            rot.order[g.edges[e].second].push_back(e);
            continue;
        }
        // Build the block as a subgraph on the same vertex ids.
        Graph sub;
        sub.n = g.n;
        std::vector<int> back_map;  // sub edge id -> g edge id
        for (int e : block) {
            sub.add_edge(g.edges[e].first, g.edges[e].second);
            back_map.push_back(e);
        }
        Embedder emb(sub);
        emb.run();
        RotationSystem brot = emb.rotation();
        for (int v = 0; v < g.n; ++v)
            for (int se : brot.order[v]) rot.order[v].push_back(back_map[se]);
    }
    std::string why;
    if (!euler_ok(g, rot, &why))
        throw std::logic_error("planar_rotation: Euler check failed: " + why);
    return rot;
}

std::vector<int> st_numbering(const Graph& g, int s, int t) {
    // DFS from s forcing (s,t) as the first tree edge.
    auto adj = g.adjacency();
    std::vector<int> parent(g.n, -1), parent_edge(g.n, -1), num(g.n, -1), preorder;
    {
        std::vector<std::pair<int, size_t>> stack;
        num[s] = 0;
        preorder.push_back(s);
        int st_edge = -1;
        for (int e : adj[s])
            if (g.other(e, s) == t) st_edge = e;
        if (st_edge < 0) throw std::invalid_argument("st_numbering: s and t not adjacent");
        num[t] = 1;
        parent[t] = s;
        parent_edge[t] = st_edge;
        preorder.push_back(t);
        stack.push_back({t, 0});
        int timer = 2;
        while (!stack.empty()) {
            auto& [v, ai] = stack.back();
            if (ai < adj[v].size()) {
                int e = adj[v][ai++];
                int w = g.other(e, v);
                if (num[w] < 0) {
                    num[w] = timer++;
                    parent[w] = v;
                    parent_edge[w] = e;
                    preorder.push_back(w);
                    stack.push_back({w, 0});
                }
            } else {
                stack.pop_back();
            }
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (num[v] < 0) throw std::invalid_argument("st_numbering: graph not connected");

    // Chain decomposition; each chain after the first is an open ear.
    std::vector<bool> visited(g.n, false), echain(g.edges.size(), false);
    std::vector<int> pos(g.n, -1);
    std::vector<int> order_list;
    auto insert_after = [&](int anchor_pos, const std::vector<int>& vs) {
        order_list.insert(order_list.begin() + anchor_pos + 1, vs.begin(), vs.end());
        for (int i = 0; i < static_cast<int>(order_list.size()); ++i) pos[order_list[i]] = i;
    };

    bool first_chain = true;
    for (int u : preorder) {
        for (int e : adj[u]) {
            if (echain[e] || e == parent_edge[u]) continue;
            int d = g.other(e, u);
            if (parent_edge[d] == e) continue;      // tree edge below u
            if (num[d] < num[u]) continue;          // back edge handled at its upper end
            // Chain: u, d, then tree parents of d until a visited vertex.
            echain[e] = true;
            std::vector<int> chain{u};
            visited[u] = true;
            int w = d;
            while (!visited[w]) {
                chain.push_back(w);
                visited[w] = true;
                echain[parent_edge[w]] = true;
                w = parent[w];
            }
            chain.push_back(w);
            if (first_chain) {
                // Cycle through (s,t): order s, d, ..., t.
                if (u != s || w != s)
                    throw std::invalid_argument("st_numbering: graph not biconnected at root");
                std::vector<int> path(chain.begin(), chain.end() - 1);
                order_list = path;
                for (int i = 0; i < static_cast<int>(order_list.size()); ++i)
                    pos[order_list[i]] = i;
                if (order_list.back() != t)
                    throw std::logic_error("st_numbering: first cycle misses t");
                first_chain = false;
                continue;
            }
            if (u == w) throw std::invalid_argument("st_numbering: graph not biconnected");
            std::vector<int> internals(chain.begin() + 1, chain.end() - 1);
            if (internals.empty()) continue;
            if (pos[u] < pos[w]) {
                insert_after(pos[u], internals);
            } else {
                std::reverse(internals.begin(), internals.end());
                insert_after(pos[w], internals);
            }
        }
    }
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (!echain[e]) throw std::invalid_argument("st_numbering: bridge found (not biconnected)");
    if (static_cast<int>(order_list.size()) != g.n)
        throw std::invalid_argument("st_numbering: not all vertices covered");
    return order_list;
}

}  // namespace ekm
