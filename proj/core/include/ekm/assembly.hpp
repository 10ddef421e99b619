#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ekm/certify.hpp"
#include "ekm/gadget.hpp"

namespace ekm {

// A placed copy of a certified template. The certification is computed on
// the canonical (untransformed) template; isometries preserve it, so the
// same table serves every placement.
struct GadgetInstance {
    GadgetTemplate tpl;  // placed coordinates
    std::shared_ptr<const Certification> cert;
    std::string label;
};

// A wire joining two instance ports, listed from the a-side port position to
// the b-side port position inclusive. Point count must be a positive
// multiple of k; outward charges at its two ends satisfy e_b = (k-e_a) mod k.
struct InternalWire {
    int a_inst = -1, a_port = -1;
    int b_inst = -1, b_port = -1;
    std::vector<Pt> pts;
};

// A boundary port of the assembly: an instance port continued by an
// extension wire (possibly empty, length = 0 mod k) whose far end is the
// assembly's interface. Extensions preserve the outward charge.
struct ExternalPort {
    int inst = -1, port = -1;
    std::vector<Pt> pts;          // extension, from the instance port outward
    Pt boundary_pos;              // first point outside the assembly
    Pt boundary_dir;
    std::vector<int> charge_spec;
    int pair_id = -1;
    int pair_side = 0;
};

struct Assembly {
    int k = 0;
    int64_t unit = 1;
    std::vector<GadgetInstance> instances;
    std::vector<InternalWire> wires;
    std::vector<ExternalPort> externals;

    // All points of instances, wires, and extensions, with ports at the
    // boundary positions. Witness slot encoding matches certify_gadget.
    GadgetTemplate flatten(const std::string& kind) const;

    // Relational join of the instance certifications across wire
    // constraints; states carry assembled witnesses over flatten()'s points.
    Certification compose(const std::string& kind) const;

    // Verifies the geometric premises behind compositional certification:
    // points distinct, wire lengths valid, and every unit-distance pair is
    // intra-instance, consecutive on a wire, or an intended port contact.
    // Throws std::logic_error on violation.
    void audit() const;
};

// Straight-line wire helper: corner waypoints walked at grid pitch `unit`,
// with a U-bump inserted on the longest leg to reach a point count divisible
// by k (bump adds 2 points per application; the leg must have room).
std::vector<Pt> route_wire(const std::vector<Pt>& corners, int k, int64_t unit, Pt bump_dir);

}  // namespace ekm
