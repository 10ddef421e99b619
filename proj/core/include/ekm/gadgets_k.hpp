#pragma once

#include "ekm/assembly.hpp"
#include "ekm/certify.hpp"
#include "ekm/gadget.hpp"

namespace ekm {

// General-k charge primitives (k >= 4). Port charges use the outward
// convention; a wire carrying pipeline charge c away from a gadget shows
// e = c at that gadget's port and e = k-c at the consumer's port.
enum class PrimitiveKind {
    fuse,
    switch_gate,
    amplifier,
    splitter,
    junction,
    xor_filter,
    xor_enforcer,
    delta_network,
};

const char* primitive_name(PrimitiveKind kind);

// Canonical template per the textual constructions. The splitter needs a
// second mino to realize s -> (1, s-1); build_primitive returns it with its
// design inflow s = k-1 (see splitter_gadget for other s).
GadgetTemplate build_primitive(PrimitiveKind kind, int k);

// Splitter for design inflow s (2 <= s <= k-1): feeder mino, bridge point,
// output mino, inline fuse on w1 and an (s-1)-cap on w2. Ports: in, w1, w2.
GadgetTemplate splitter_gadget(int k, int s);

// Amplifier with a reversed fuse on w2 so that an idle amplifier cannot leak
// split charges; used inside assembled gadgets.
GadgetTemplate amplifier_guarded(int k);

// Inline pass gadget admitting pipeline flows 0..cap ("fuse" generalized;
// cap = 1 is the paper's fuse).
GadgetTemplate cap_gadget(int k, int cap);

// Exhaustive charge table of a primitive over the full charge domain.
Certification charge_table(PrimitiveKind kind, int k, WeightMode mode = WeightMode::mst);

// Assembled variable gadget: a switch feeding three pair-builder ladders;
// boundary wires end one unit outside the s x s region at the six specified
// midpoints. Feasible boundary states: all zero, or floor(k/2) on the three
// pair-low ports and ceil(k/2) on the three pair-high ports.
Assembly variable_assembly_k(int k);

// Assembled clause gadget in an (s-2) x (s-2) region: three XOR-filters
// (positive) or XOR-enforcers (negative) cross-paired into a delta network.
Assembly clause_assembly_k(int k, bool positive);

GadgetTemplate variable_gadget_k(int k);
GadgetTemplate clause_gadget_k(int k, bool positive);

// Region side length for variable gadgets (even, multiple of 4); the clause
// region is (s-2) x (s-2).
int region_size_k(int k);

// Cached canonical certification per (kind string, k, mode).
std::shared_ptr<const Certification> cached_cert(const GadgetTemplate& canonical, WeightMode mode);

}  // namespace ekm
