#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekm/formula.hpp"

namespace ekm {

// Undirected simple graph with stable edge ids.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int add_edge(int u, int v) {
        edges.emplace_back(u, v);
        return static_cast<int>(edges.size()) - 1;
    }
    int other(int eid, int u) const {
        auto [a, b] = edges[eid];
        return a == u ? b : a;
    }
    std::vector<std::vector<int>> adjacency() const;  // edge ids per node
    int degree(int v) const;
    static Graph from_incidence(const IncidenceGraph& g);
};

// Clockwise cyclic order of incident edge ids around each node.
struct RotationSystem {
    std::vector<std::vector<int>> order;

    // Position of edge eid in node v's cycle, -1 if absent.
    int index_of(int v, int eid) const;
};

// Directed half-edge (tail, edge id).
struct HalfEdge {
    int tail = -1;
    int eid = -1;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// Face orbits of a rotation system under the left-face traversal rule:
// arriving at v along e, the next half-edge leaves v along the clockwise
// successor of e at v. Every half-edge appears in exactly one face.
std::vector<std::vector<HalfEdge>> trace_faces(const Graph& g, const RotationSystem& rot);

// Euler check per connected component: V - E + F = 2, where each component's
// faces are those orbits touching it (the shared outer orbit counts for its
// own component only when components are handled separately, as here).
bool euler_ok(const Graph& g, const RotationSystem& rot, std::string* why = nullptr);

struct NonplanarError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Planarity test + combinatorial embedding via face-insertion (Demoucron) on
// each biconnected block, merged across cut vertices and components. Throws
// NonplanarError on nonplanar input; the certificate is a message, not a
// Kuratowski subgraph.
RotationSystem planar_rotation(const Graph& g);

// Connected components (node -> component id, count).
std::pair<std::vector<int>, int> components(const Graph& g);

// Biconnected blocks as edge-id lists, plus cut vertices.
struct BlockDecomposition {
    std::vector<std::vector<int>> blocks;  // edge ids per block
    std::vector<bool> is_cut;
};
BlockDecomposition biconnected_blocks(const Graph& g);

// st-numbering of a biconnected graph w.r.t. edge (s,t): a vertex order with
// s first, t last, and every other vertex having both an earlier and a later
// neighbor. Built from an open ear decomposition.
std::vector<int> st_numbering(const Graph& g, int s, int t);

}  // namespace ekm
