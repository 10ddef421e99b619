#include "ekm/gadget.hpp"

#include <algorithm>
#include <sstream>

namespace ekm {

Pt GadgetTemplate::bbox_min() const {
    Pt mn{INT64_MAX, INT64_MAX};
    for (auto& p : points) { mn.x = std::min(mn.x, p.x); mn.y = std::min(mn.y, p.y); }
    return mn;
}

Pt GadgetTemplate::bbox_max() const {
    Pt mx{INT64_MIN, INT64_MIN};
    for (auto& p : points) { mx.x = std::max(mx.x, p.x); mx.y = std::max(mx.y, p.y); }
    return mx;
}

GadgetTemplate GadgetTemplate::transformed(int quarter_turns_cw, bool mirror, Pt translate) const {
    GadgetTemplate out = *this;
    auto map_pt = [&](Pt p) {
        if (mirror) p = mirror_x(p);
        p = rotate_cw(p, quarter_turns_cw);
        return p + translate;
    };
    auto map_dir = [&](Pt d) {
        if (mirror) d = mirror_x(d);
        return rotate_cw(d, quarter_turns_cw);
    };
    for (auto& p : out.points) p = map_pt(p);
    for (auto& port : out.ports) {
        port.pos = map_pt(port.pos);
        port.dir = map_dir(port.dir);
    }
    return out;
}

std::string GadgetTemplate::serialize() const {
    std::ostringstream os;
    os << "gadget " << kind << " k=" << k << " unit=" << unit << "\n";
    os << "points " << points.size() << "\n";
    auto sorted = points;
    std::sort(sorted.begin(), sorted.end());
    for (auto& p : sorted) os << p.x << " " << p.y << "\n";
    os << "ports " << ports.size() << "\n";
    for (auto& port : ports) {
        os << port.pos.x << " " << port.pos.y << " " << port.dir.x << " " << port.dir.y
           << " spec=";
        for (size_t i = 0; i < port.charge_spec.size(); ++i)
            os << (i ? "," : "") << port.charge_spec[i];
        os << " pair=" << port.pair_id << " side=" << port.pair_side << "\n";
    }
    return os.str();
}

GadgetTemplate GadgetTemplate::parse(const std::string& text) {
    GadgetTemplate t;
    std::istringstream in(text);
    std::string tok;
    in >> tok;
    if (tok != "gadget") throw std::invalid_argument("gadget file: missing 'gadget' header");
    in >> t.kind;
    auto expect_kv = [&](const std::string& key) {
        std::string kv;
        in >> kv;
        if (kv.rfind(key + "=", 0) != 0)
            throw std::invalid_argument("gadget file: expected " + key + "=");
        return kv.substr(key.size() + 1);
    };
    t.k = std::stoi(expect_kv("k"));
    t.unit = std::stoll(expect_kv("unit"));
    in >> tok;
    if (tok != "points") throw std::invalid_argument("gadget file: expected points section");
    size_t np;
    in >> np;
    for (size_t i = 0; i < np; ++i) {
        Pt p;
        in >> p.x >> p.y;
        t.points.push_back(p);
    }
    in >> tok;
    if (tok != "ports") throw std::invalid_argument("gadget file: expected ports section");
    size_t nport;
    in >> nport;
    for (size_t i = 0; i < nport; ++i) {
        Port port;
        in >> port.pos.x >> port.pos.y >> port.dir.x >> port.dir.y;
        std::string spec = expect_kv("spec");
        std::istringstream ss(spec);
        std::string item;
        while (std::getline(ss, item, ',')) port.charge_spec.push_back(std::stoi(item));
        port.pair_id = std::stoi(expect_kv("pair"));
        port.pair_side = std::stoi(expect_kv("side"));
        t.ports.push_back(port);
    }
    return t;
}

uint64_t GadgetTemplate::checksum() const {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : serialize()) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace ekm
