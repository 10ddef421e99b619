#pragma once

#include "ekm/gadget.hpp"

namespace ekm {

// k=3 gadget templates. Port charges use the outward convention: a port's
// charge e is the number of wire points absorbed into the gadget-side
// straddling block, which equals the charge the wire carries away from the
// gadget (a wire carrying c into the gadget shows e = 3 - c).
//
// variable: three port arms around the center (8,8); feasible boundary
// states are exactly all-0 (FALSE) and all-1 (TRUE).
GadgetTemplate variable_gadget3();

// positive: one free point where three stubs meet; feasible states are the
// three one-hot receive patterns (e = 2 on exactly one port).
// negative: five free points; feasible states are the three patterns with
// e = 2 on exactly two ports.
GadgetTemplate clause_gadget3(bool positive);

// One wire cell: three collinear unit-spaced points with a port at each end.
GadgetTemplate wire_tromino3(bool horizontal);

}  // namespace ekm
