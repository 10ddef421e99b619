#include "ekm/geom.hpp"

#include <algorithm>

namespace ekm {

std::string Rat::str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
}

int orientation(const Pt& a, const Pt& b, const Pt& c) {
    __int128 cross = static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
                     static_cast<__int128>(b.y - a.y) * (c.x - a.x);
    return cross > 0 ? 1 : (cross < 0 ? -1 : 0);
}

bool on_segment(const Pt& a, const Pt& b, const Pt& p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
           std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

bool segments_intersect(const Pt& a, const Pt& b, const Pt& c, const Pt& d) {
    int o1 = orientation(a, b, c);
    int o2 = orientation(a, b, d);
    int o3 = orientation(c, d, a);
    int o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

std::vector<Pt> walk_polyline(const std::vector<Pt>& corners) {
    std::vector<Pt> out;
    if (corners.empty()) return out;
    out.push_back(corners[0]);
    for (size_t i = 0; i + 1 < corners.size(); ++i) {
        Pt a = corners[i], b = corners[i + 1];
        if (a == b) continue;
        if (a.x != b.x && a.y != b.y)
            throw std::invalid_argument("walk_polyline: leg not axis-parallel");
        Pt step{(b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)};
        for (Pt p = a + step;; p = p + step) {
            out.push_back(p);
            if (p == b) break;
        }
    }
    return out;
}

}  // namespace ekm
