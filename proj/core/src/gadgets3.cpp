#include "ekm/gadgets3.hpp"

namespace ekm {

GadgetTemplate variable_gadget3() {
    GadgetTemplate t;
    t.kind = "variable3";
    t.k = 3;
    t.points.push_back({8, 8});  // center
    // Down arm: straight run with a dead-end hook beside the last point; the
    // hook pins the block offsets so only the two intended states tile.
    for (int64_t y = 7; y >= 3; --y) t.points.push_back({8, y});
    t.points.push_back({7, 3});
    // Up arm, mirrored.
    for (int64_t y = 9; y <= 13; ++y) t.points.push_back({8, y});
    t.points.push_back({9, 13});
    // Right arm: longer run, hook above its fourth point.
    for (int64_t x = 9; x <= 15; ++x) t.points.push_back({x, 8});
    t.points.push_back({12, 9});

    t.ports.push_back({{8, 2}, {0, -1}, {0, 1}});   // south
    t.ports.push_back({{8, 14}, {0, 1}, {0, 1}});   // north
    t.ports.push_back({{16, 8}, {1, 0}, {0, 1}});   // east
    return t;
}

GadgetTemplate clause_gadget3(bool positive) {
    GadgetTemplate t;
    t.kind = positive ? "clause3_pos" : "clause3_neg";
    t.k = 3;
    if (positive) {
        // One free point; stubs of six points reach toward three sides.
        t.points.push_back({0, 0});
        for (int64_t x = -1; x >= -6; --x) t.points.push_back({x, 0});
        for (int64_t x = 1; x <= 6; ++x) t.points.push_back({x, 0});
        for (int64_t y = -1; y >= -6; --y) t.points.push_back({0, y});
        t.ports.push_back({{-7, 0}, {-1, 0}, {0, 2}});
        t.ports.push_back({{7, 0}, {1, 0}, {0, 2}});
        t.ports.push_back({{0, -7}, {0, -1}, {0, 2}});
    } else {
        // Five free points: three absorbable heads Q and a central pair R
        // that mops up whichever head stays behind.
        t.points.push_back({0, 0});    // R1
        t.points.push_back({0, 1});    // R2
        t.points.push_back({-1, 0});   // Q1 (west head)
        t.points.push_back({1, 0});    // Q2 (east head)
        t.points.push_back({0, -1});   // Q3 (south head)
        for (int64_t x = -2; x >= -7; --x) t.points.push_back({x, 0});
        for (int64_t x = 2; x <= 7; ++x) t.points.push_back({x, 0});
        for (int64_t y = -2; y >= -7; --y) t.points.push_back({0, y});
        t.ports.push_back({{-8, 0}, {-1, 0}, {0, 2}});
        t.ports.push_back({{8, 0}, {1, 0}, {0, 2}});
        t.ports.push_back({{0, -8}, {0, -1}, {0, 2}});
    }
    return t;
}

GadgetTemplate wire_tromino3(bool horizontal) {
    GadgetTemplate t;
    t.kind = horizontal ? "wire3_h" : "wire3_v";
    t.k = 3;
    Pt step = horizontal ? Pt{1, 0} : Pt{0, 1};
    for (int i = 0; i < 3; ++i) t.points.push_back(step * i);
    t.ports.push_back({step * -1, step * -1, {0, 1, 2}});
    t.ports.push_back({step * 3, step, {0, 1, 2}});
    return t;
}

}  // namespace ekm
