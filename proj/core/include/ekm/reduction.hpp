#pragma once

#include <memory>

#include "ekm/assembly.hpp"
#include "ekm/certify.hpp"
#include "ekm/formula.hpp"
#include "ekm/matcher.hpp"
#include "ekm/ortho.hpp"

namespace ekm {

enum class ReduceMode { grid, path_variant };

struct Provenance {
    enum class Kind { variable, clause, wire };
    Kind kind = Kind::wire;
    int owner = -1;  // variable index, clause index, or embedding edge id
};

struct PlacedGadget {
    GadgetTemplate tpl;  // placed, scaled coordinates
    std::shared_ptr<const Certification> cert;
    int point_offset = 0;
    std::vector<int> port_wire;  // per port: wire index, or -1
    std::vector<int> port_end;   // 0 = wire starts here, 1 = wire ends here
};

struct PlacedWire {
    int edge_id = -1;
    int var_gadget = -1, var_port = -1;
    int clause_gadget = -1, clause_port = -1;
    int point_offset = 0;
    int count = 0;
};

struct PlacementError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The reduction artifact: the point set S with exact coordinates (scaled by
// `unit` = 10^t in path-variant mode), its block count m, the target weight,
// and full provenance for witness construction and decoding.
struct ReductionOutput {
    int k = 3;
    ReduceMode mode = ReduceMode::grid;
    int t_digits = 0;
    int64_t unit = 1;
    Formula formula;
    std::vector<Pt> points;
    int64_t m = 0;
    Rat target;  // (k-1) * m * unit, plus 0.2 * unit in path-variant mode
    std::vector<Provenance> provenance;
    std::vector<PlacedGadget> gadgets;  // variables first, then clauses
    std::vector<PlacedWire> wires;

    WeightMode weight_mode() const {
        return mode == ReduceMode::grid ? WeightMode::mst : WeightMode::path;
    }
};

// Builds S from a validated embedding of the formula's incidence graph.
// k = 3 uses the hand-built templates on a 36x refinement; k >= 4 uses the
// assembled gadgets on a (k*s)x refinement with two parallel wires per edge.
// Path-variant mode evaluates blocks by Hamiltonian path cost and, for odd
// k >= 7, swaps every delta network for the off-grid triangle version.
ReductionOutput reduce(const Formula& f, const GridEmbedding& emb, int k,
                       ReduceMode mode = ReduceMode::grid);

// Gadget-local construction of the tight matching encoding a satisfying
// assignment. Throws std::invalid_argument if the assignment does not
// satisfy the formula.
Matching witness_matching(const ReductionOutput& red, const Assignment& a);

// Reads each variable gadget's realized boundary state out of a tight
// matching. Throws std::logic_error on states outside the certified tables.
Assignment decode_assignment(const ReductionOutput& red, const Matching& match);

// Point-set file and provenance sidecar (External Interfaces).
std::string serialize_points(const ReductionOutput& red);
std::string serialize_provenance(const ReductionOutput& red);
std::string serialize_matching(const Matching& m);
Matching parse_matching(const std::string& text, int k);

struct PointFile {
    int k = 3;
    ReduceMode mode = ReduceMode::grid;
    int t_digits = 0;
    int64_t unit = 1;
    Rat target;
    std::vector<Pt> points;
};
PointFile parse_points(const std::string& text);

}  // namespace ekm
