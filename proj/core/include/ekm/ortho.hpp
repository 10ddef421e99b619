#pragma once

#include <string>
#include <vector>

#include "ekm/geom.hpp"
#include "ekm/planar.hpp"

namespace ekm {

// Orthogonal grid drawing: integer vertex positions plus, per edge, the
// corner list of an axis-parallel polyline joining its endpoints.
struct GridEmbedding {
    std::vector<Pt> vpos;
    std::vector<std::vector<Pt>> epath;  // corners, first == vpos[u], last == vpos[v]

    Pt bbox_min() const;
    Pt bbox_max() const;
};

struct UnsupportedGraph : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Draws a conforming orthogonal grid embedding for the given planar rotation
// system. Supported inputs: graphs whose connected components are trees or
// single biconnected blocks (incidence graphs of valid formulas are always
// biconnected per component). Max degree 4. Throws UnsupportedGraph or
// std::invalid_argument otherwise.
GridEmbedding orthogonal_embed(const Graph& g, const RotationSystem& rot);

// Lists every violated invariant: non-axis-parallel legs, coincident
// vertices, crossing or touching paths, rotation mismatches, area blowup.
// All geometry checks use exact integer arithmetic.
std::vector<std::string> validate_embedding(const Graph& g, const RotationSystem& rot,
                                            const GridEmbedding& emb);

}  // namespace ekm
