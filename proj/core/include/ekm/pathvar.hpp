#pragma once

#include "ekm/gadget.hpp"
#include "ekm/weight.hpp"

namespace ekm {

// Per-edge deviation budget for the rounded off-grid points: the four special
// edges of each modified delta network have length within [1-eps, 1+eps] of
// one grid unit, and n gadgets must keep 4*n*eps below 0.2.
struct EpsilonBudget {
    int t = 0;
    int n = 1;
    BigInt eps_num, eps_den;  // certified upper bound on per-edge deviation
    bool within_budget = false;
    double eps_approx() const;
};

struct Precision {
    int t = 0;
    EpsilonBudget budget;
};

// Smallest t (1..12 policy) with 4*n*eps(t) < 0.2.
Precision choose_precision(int n);

// Certified upper bound on max |edge length - 1| over the four special edges
// after rounding coordinates to t decimal digits (unit scale 10^t).
// Returned as an exact fraction eps = num/den.
std::pair<BigInt, BigInt> epsilon_bound(int t);

// The two off-grid points rounded half-to-even to t digits, as integers at
// scale 10^t. v1 is the equilateral-triangle corner, v2 the link to the
// horizontal mino.
std::pair<Pt, Pt> special_points(int t);

// floor(sqrt(3) * 10^digits), for tests of the closed forms.
BigInt sqrt3_scaled(int digits);

// Modified delta network for path mode (k odd >= 7), at unit scale 10^t:
// same charge behavior as the grid delta network, but every tight block is a
// path. Throws for even k or k < 7.
GadgetTemplate delta_network_path(int k, int t);

// Exact per-edge slack that certification and candidate generation use for a
// gadget rounded at t digits, as a Rat in grid units (1/5 covers every
// admissible instance by the 4*n*eps < 0.2 policy).
Rat path_block_slack();

}  // namespace ekm
