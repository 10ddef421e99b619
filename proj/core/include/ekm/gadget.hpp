#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ekm/geom.hpp"

namespace ekm {

// A wire attachment site. `pos` is the first external (wire) point, one grid
// unit outside the gadget along `dir`; the wire continues outward as
// pos + dir*unit*j. `charge_spec` lists the outward charges the reduction
// drives through this port (the certifier enumerates the full range and the
// spec is the contract domain).
struct Port {
    Pt pos;
    Pt dir;                       // unit axis vector
    std::vector<int> charge_spec;
    int pair_id = -1;             // parallel-wire pair (k >= 4 templates)
    int pair_side = 0;            // 0 carries floor(k/2) outward, 1 carries ceil(k/2)
};

// Local point set with typed interface ports and a behavioral contract
// established by exhaustive certification.
struct GadgetTemplate {
    std::string kind;
    int k = 3;
    int64_t unit = 1;  // grid unit in coordinate values (10^t in path mode)
    std::vector<Pt> points;
    std::vector<Port> ports;

    Pt bbox_min() const;
    Pt bbox_max() const;

    GadgetTemplate transformed(int quarter_turns_cw, bool mirror, Pt translate) const;

    std::string serialize() const;
    static GadgetTemplate parse(const std::string& text);
    uint64_t checksum() const;  // FNV-1a over the serialization
};

// Inward flow conversion: a wire leaving a port with outward charge e arrives
// at its far end carrying k-e (zero stays zero).
inline int inflow_of(int e, int k) { return e == 0 ? 0 : k - e; }

}  // namespace ekm
