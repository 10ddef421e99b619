#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ekm/gadget.hpp"
#include "ekm/matcher.hpp"

namespace ekm {

// Point slots in certification witnesses: internal i -> i, external grey j of
// port p -> N + p*k + j (N = internal count). Greys of port p sit at
// pos + dir*unit*j for j = 0..e_p-1.
inline int grey_slot(int n_internal, int k, int port, int j) { return n_internal + port * k + j; }

struct StateEntry {
    std::vector<int> e;  // outward charge per port
    long long cover_count = 0;
    std::vector<std::vector<int>> witness;  // blocks in slot encoding
};

// Exhaustively enumerated behavioral contract: for every boundary charge
// vector in the enumerated domain, whether the gadget interior (plus absorbed
// greys) tiles into weight-tight blocks, with matching counts.
struct Certification {
    std::string kind;
    int k = 0;
    WeightMode mode = WeightMode::mst;
    uint64_t checksum = 0;
    std::vector<std::vector<int>> domains;  // per-port enumerated charges
    std::vector<StateEntry> states;         // feasible states only

    const StateEntry* find(const std::vector<int>& e) const;
    bool feasible(const std::vector<int>& e) const { return find(e) != nullptr; }

    // Feasible states restricted to each port's charge_spec.
    std::vector<const StateEntry*> within_spec(const GadgetTemplate& t) const;

    std::string report() const;  // human-readable table
};

struct CertifyOptions {
    WeightMode mode = WeightMode::mst;
    int max_points = 90;
    // Extra per-block weight allowance in grid units (path-variant gadgets
    // whose special edges deviate from unit length by at most this much).
    Rat per_block_slack = Rat(0);
    // Per-port charge domains; empty means 0..k-1 for every port.
    std::vector<std::vector<int>> domains;
    long long count_cap = 1000000;
};

// Mechanized case analysis: enumerate boundary charges, build the absorbed
// point set, and count exact covers by weight-(k-1) blocks (plus slack in
// path mode). Throws if the template violates the port isolation premise
// (greys may touch only their own wire line and one internal anchor).
Certification certify_gadget(const GadgetTemplate& t, const CertifyOptions& opts = {});

}  // namespace ekm
