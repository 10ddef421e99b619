#include "ekm/gadgets_k.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace ekm {

const char* primitive_name(PrimitiveKind kind) {
    switch (kind) {
        case PrimitiveKind::fuse: return "fuse";
        case PrimitiveKind::switch_gate: return "switch";
        case PrimitiveKind::amplifier: return "amplifier";
        case PrimitiveKind::splitter: return "splitter";
        case PrimitiveKind::junction: return "junction";
        case PrimitiveKind::xor_filter: return "xor_filter";
        case PrimitiveKind::xor_enforcer: return "xor_enforcer";
        case PrimitiveKind::delta_network: return "delta_network";
    }
    return "?";
}

namespace {

void require_k(int k) {
    if (k < 4) throw std::invalid_argument("general-k gadgets require k >= 4");
}

std::vector<int> spec_only(std::initializer_list<int> vals) { return std::vector<int>(vals); }

}  // namespace

GadgetTemplate cap_gadget(int k, int cap) {
    require_k(k);
    if (cap < 1 || cap > k - 2) throw std::invalid_argument("cap_gadget: cap out of range");
    GadgetTemplate t;
    t.kind = "cap" + std::to_string(cap);
    t.k = k;
    // Straight run of cap+1 points, then a perpendicular arm; flows above
    // `cap` would strand the arm.
    for (int64_t x = 0; x <= cap; ++x) t.points.push_back({x, 0});
    for (int64_t y = 1; y <= k - cap - 1; ++y) t.points.push_back({cap, y});
    Port in;
    in.pos = {-1, 0};
    in.dir = {-1, 0};
    for (int f = 0; f <= cap; ++f) in.charge_spec.push_back(f == 0 ? 0 : k - f);
    Port out;
    out.pos = {cap + 1, 0};
    out.dir = {1, 0};
    for (int f = 0; f <= cap; ++f) out.charge_spec.push_back(f);
    t.ports.push_back(in);
    t.ports.push_back(out);
    return t;
}

GadgetTemplate splitter_gadget(int k, int s) {
    require_k(k);
    if (s < 2 || s > k - 1) throw std::invalid_argument("splitter_gadget: s out of range");
    GadgetTemplate t;
    t.kind = "splitter_s" + std::to_string(s);
    t.k = k;
    // Feeder mino P with the input anchored at its second point; a bridge
    // point above P's far end; output column Q'; inline fuse on w1 and an
    // (s-1)-cap on w2 pin the two output charges.
    for (int64_t x = 0; x < k; ++x) t.points.push_back({x, 0});        // P
    t.points.push_back({k - 1, 1});                                     // bridge
    for (int64_t y = 2; y <= k; ++y) t.points.push_back({k - 1, y});    // Q' (k-1 pts)
    t.points.push_back({k - 1, k + 1});                                 // fuse pair
    t.points.push_back({k - 1, k + 2});
    for (int64_t x = k; x <= 2 * k - 3; ++x) t.points.push_back({x, k + 2});  // fuse arm
    for (int64_t x = k; x <= k + s - 1; ++x) t.points.push_back({x, 1});      // cap run
    for (int64_t y = 2; y <= k - s + 1; ++y) t.points.push_back({k + s - 1, y});  // cap arm

    Port in;
    in.pos = {1, -1};
    in.dir = {0, -1};
    in.charge_spec = spec_only({0, k - s});
    Port w1;
    w1.pos = {k - 1, k + 3};
    w1.dir = {0, 1};
    w1.charge_spec = spec_only({0, 1});
    Port w2;
    w2.pos = {k + s, 1};
    w2.dir = {1, 0};
    w2.charge_spec = spec_only({0, s - 1});
    t.ports.push_back(in);
    t.ports.push_back(w1);
    t.ports.push_back(w2);
    return t;
}

GadgetTemplate amplifier_guarded(int k) {
    require_k(k);
    GadgetTemplate t;
    t.kind = "amplifier_guarded";
    t.k = k;
    for (int64_t y = 0; y < k; ++y) t.points.push_back({0, y});        // amplifier mino
    for (int64_t x = 1; x <= k; ++x) t.points.push_back({x, 0});       // spacer mino
    t.points.push_back({k + 1, 0});                                     // reversed fuse pair
    t.points.push_back({k + 2, 0});
    for (int64_t y = 1; y <= k - 2; ++y) t.points.push_back({k + 1, y});  // fuse arm
    Port in;
    in.pos = {-1, 1};
    in.dir = {-1, 0};
    in.charge_spec = spec_only({0, k - 1});
    Port w1;
    w1.pos = {1, k - 1};
    w1.dir = {1, 0};
    w1.charge_spec = spec_only({0, 2});
    Port w2;
    w2.pos = {k + 3, 0};
    w2.dir = {1, 0};
    w2.charge_spec = spec_only({0, k - 1});
    t.ports.push_back(in);
    t.ports.push_back(w1);
    t.ports.push_back(w2);
    return t;
}

GadgetTemplate build_primitive(PrimitiveKind kind, int k) {
    require_k(k);
    GadgetTemplate t;
    t.kind = primitive_name(kind);
    t.k = k;
    const int lo = k / 2, hi = (k + 1) / 2;
    switch (kind) {
        case PrimitiveKind::fuse: {
            t.points.push_back({0, 0});
            t.points.push_back({1, 0});
            for (int64_t y = 1; y <= k - 2; ++y) t.points.push_back({1, y});
            t.ports.push_back({{-1, 0}, {-1, 0}, spec_only({0, k - 1})});
            t.ports.push_back({{2, 0}, {1, 0}, spec_only({0, 1})});
            break;
        }
        case PrimitiveKind::switch_gate: {
            for (int64_t x = 0; x < k; ++x) t.points.push_back({x, 0});
            t.ports.push_back({{k, 0}, {1, 0}, spec_only({0, k - 1})});
            t.ports.push_back({{k - 2, 1}, {0, 1}, spec_only({0, 1})});
            break;
        }
        case PrimitiveKind::amplifier: {
            for (int64_t y = 0; y < k; ++y) t.points.push_back({0, y});
            t.ports.push_back({{-1, 1}, {-1, 0}, spec_only({0, k - 1})});
            t.ports.push_back({{1, k - 1}, {1, 0}, spec_only({0, 2})});
            t.ports.push_back({{1, 0}, {1, 0}, spec_only({0, k - 1})});
            break;
        }
        case PrimitiveKind::splitter:
            return splitter_gadget(k, k - 1);
        case PrimitiveKind::junction: {
            for (int64_t y = 0; y < k; ++y) t.points.push_back({0, y});
            Port w1{{0, k}, {0, 1}, spec_only({0, k - 1})};
            Port w2{{0, -1}, {0, -1}, {}};
            w2.charge_spec.push_back(0);
            for (int ss = 1; ss <= k - 2; ++ss) w2.charge_spec.push_back(k - ss);
            std::sort(w2.charge_spec.begin(), w2.charge_spec.end());
            Port out{{1, k - 2}, {1, 0}, {}};
            out.charge_spec.push_back(0);
            for (int ss = 1; ss <= k - 2; ++ss) out.charge_spec.push_back(ss + 1);
            std::sort(out.charge_spec.begin(), out.charge_spec.end());
            out.charge_spec.erase(std::unique(out.charge_spec.begin(), out.charge_spec.end()),
                                  out.charge_spec.end());
            t.ports.push_back(w1);
            t.ports.push_back(w2);
            t.ports.push_back(out);
            break;
        }
        case PrimitiveKind::xor_filter: {
            for (int64_t x = 0; x < k; ++x) t.points.push_back({x, 0});
            t.ports.push_back({{-1, 0}, {-1, 0}, spec_only({0, hi})});   // w1: carries 0 or lo in
            t.ports.push_back({{0, -1}, {0, -1}, spec_only({0, lo})});   // w2: carries 0 or hi in
            t.ports.push_back({{k, 0}, {1, 0}, spec_only({0, lo, hi})});
            break;
        }
        case PrimitiveKind::xor_enforcer:
        case PrimitiveKind::delta_network: {
            for (int64_t y = -hi; y <= hi; ++y) t.points.push_back({0, y});        // t1
            for (int64_t x = 1; x <= 2 * k - 2 * hi - 1; ++x) t.points.push_back({x, 0});  // t2
            t.ports.push_back({{0, hi + 1}, {0, 1}, spec_only({0, hi})});
            t.ports.push_back({{0, -hi - 1}, {0, -1}, spec_only({0, lo})});
            t.ports.push_back({{2 * k - 2 * hi, 0}, {1, 0}, spec_only({0, lo, hi})});
            break;
        }
    }
    return t;
}

Certification charge_table(PrimitiveKind kind, int k, WeightMode mode) {
    CertifyOptions opts;
    opts.mode = mode;
    return certify_gadget(build_primitive(kind, k), opts);
}

std::shared_ptr<const Certification> cached_cert(const GadgetTemplate& canonical, WeightMode mode) {
    static std::map<std::pair<uint64_t, int>, std::shared_ptr<const Certification>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(canonical.checksum(), static_cast<int>(mode));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    CertifyOptions opts;
    opts.mode = mode;
    auto cert = std::make_shared<Certification>(certify_gadget(canonical, opts));
    cache[key] = cert;
    return cert;
}

// ---------------------------------------------------------------------------
// Assembly layouts
// ---------------------------------------------------------------------------
namespace {

// Assembly builder: instances placed via (mirror-then-rotate-then-translate)
// of canonical templates; wires routed through explicit corner lists.
struct Build {
    Assembly a;
    WeightMode mode = WeightMode::mst;

    explicit Build(int k) { a.k = k; a.unit = 1; }

    int add(const GadgetTemplate& canonical, int rot_cw, bool mirror, Pt at,
            const std::string& label) {
        GadgetInstance gi;
        gi.tpl = canonical.transformed(rot_cw, mirror, at);
        gi.cert = cached_cert(canonical, mode);
        gi.label = label;
        a.instances.push_back(std::move(gi));
        return static_cast<int>(a.instances.size()) - 1;
    }

    const Port& port(int inst, int p) const { return a.instances[inst].tpl.ports[p]; }

    void wire(int ia, int pa, int ib, int pb, std::vector<Pt> mids, Pt bump) {
        std::vector<Pt> corners;
        corners.push_back(port(ia, pa).pos);
        for (auto& m : mids) corners.push_back(m);
        corners.push_back(port(ib, pb).pos);
        InternalWire w;
        w.a_inst = ia;
        w.a_port = pa;
        w.b_inst = ib;
        w.b_port = pb;
        w.pts = route_wire(corners, a.k, a.unit, bump);
        a.wires.push_back(std::move(w));
    }

    // External wire from an instance port through mids to the last interior
    // point; the assembly's boundary port sits one unit beyond along bdir.
    void external(int inst, int p, std::vector<Pt> mids, Pt last, Pt bdir, Pt bump,
                  std::vector<int> spec, int pair_id, int pair_side) {
        ExternalPort x;
        x.inst = inst;
        x.port = p;
        std::vector<Pt> corners;
        corners.push_back(port(inst, p).pos);
        for (auto& m : mids) corners.push_back(m);
        corners.push_back(last);
        x.pts = route_wire(corners, a.k, a.unit, bump);
        x.boundary_pos = last + bdir;
        x.boundary_dir = bdir;
        x.charge_spec = std::move(spec);
        x.pair_id = pair_id;
        x.pair_side = pair_side;
        a.externals.push_back(std::move(x));
    }
};

// Handles into one pair-builder ladder.
struct Module {
    int sp_head = -1;  // chain-head splitter; port 0 takes the k-1 feed
    int j_head = -1;   // seed junction; port 1 takes the unit feed
    int out_hi_inst = -1, out_hi_port = -1;  // emits ceil(k/2)
    int out_lo_inst = -1, out_lo_port = -1;  // emits floor(k/2)
    Pt w_drop;  // W feed entry (descends into sp_head's north-facing input)
    Pt u_rise;  // U feed entry (ascends into j_head's south-facing input)
};

// One ladder in local coordinates mapped through (mirror, base): junction row
// at y=0 with the chain flowing toward local west, splitters upside down
// above with their unit outputs dropping straight onto the junctions.
Module build_module(Build& b, bool mirror, Pt base, const std::string& tag) {
    const int k = b.a.k;
    const int c = k / 2 - 1;
    const int span = 2 * k + 8;
    auto M = [&](Pt local) { return base + (mirror ? Pt{-local.x, local.y} : local); };
    auto place = [&](const GadgetTemplate& canon, int rot, bool mir, Pt local,
                     const std::string& label) {
        int q = (mir != mirror && mirror) ? ((4 - rot) % 4) : rot;
        return b.add(canon, q, mir != mirror, M(local), tag + label);
    };
    Pt east = mirror ? Pt{-1, 0} : Pt{1, 0};

    GadgetTemplate junction = build_primitive(PrimitiveKind::junction, k);

    Module m;
    std::vector<int> jx(c), jinst(c), spinst(c);
    for (int j = 0; j < c; ++j) {
        jx[j] = -j * span;
        // Junction mirrored so its output faces the chain direction (west).
        jinst[j] = place(junction, 0, true, Pt{jx[j], 0}, "_J" + std::to_string(j));
    }
    for (int j = 1; j <= c; ++j) {
        GadgetTemplate sp = splitter_gadget(k, k - j);
        // Rotated 180: input north, unit output south, w2 west.
        spinst[j - 1] = place(sp, 2, false, Pt{jx[j - 1] + (k - 1), 4 * k + 2},
                              "_SP" + std::to_string(j));
        b.wire(spinst[j - 1], 1, jinst[j - 1], 0, {}, east);  // straight unit drop
    }
    for (int j = 1; j < c; ++j) {  // splitter chain, east to west
        Pt w2 = b.port(spinst[j - 1], 2).pos;
        Pt in = b.port(spinst[j], 0).pos;
        b.wire(spinst[j - 1], 2, spinst[j], 0,
               {Pt{in.x + 3 * east.x, w2.y}, Pt{in.x + 3 * east.x, in.y + 2},
                Pt{in.x, in.y + 2}},
               Pt{0, 1});
    }
    for (int j = 0; j + 1 < c; ++j) {  // junction chain
        Pt out = b.port(jinst[j], 2).pos;
        Pt w2 = b.port(jinst[j + 1], 1).pos;
        b.wire(jinst[j], 2, jinst[j + 1], 1,
               {Pt{w2.x + 3 * east.x, out.y}, Pt{w2.x + 3 * east.x, w2.y - 2},
                Pt{w2.x, w2.y - 2}},
               Pt{0, -1});
    }
    m.sp_head = spinst[0];
    m.j_head = jinst[0];
    m.out_hi_inst = spinst[c - 1];
    m.out_hi_port = 2;
    m.out_lo_inst = jinst[c - 1];
    m.out_lo_port = 2;
    m.w_drop = b.port(spinst[0], 0).pos;
    m.u_rise = b.port(jinst[0], 1).pos;
    return m;
}

int round_up_mod4(int v) { return (v + 3) / 4 * 4; }

struct VarPlan {
    Build b;
    Module m1, m2, m3;
    int swi, amp1, amp2, ss1, ss2;
    explicit VarPlan(int k) : b(k) {}
};

// Cluster + three mirrored modules; band base B1 is a parameter so the
// middle pair can be centered on the region midline in a second pass.
VarPlan build_variable_core(int k, int B1) {
    VarPlan v(k);
    Build& b = v.b;

    const int clxA = 44;
    const int clxB = clxA + 3 * k + 16;
    GadgetTemplate sw = build_primitive(PrimitiveKind::switch_gate, k);
    GadgetTemplate seed = splitter_gadget(k, 2);
    GadgetTemplate ampg = amplifier_guarded(k);

    // Stack bottom to top: ss1, SW, ss2, AMP1, AMP2. Export ports then rise
    // in the lane order m1.U, m1.W, m2.U, m2.W, m3.U, m3.W.
    const int y_ss1 = 30;
    const int y_sw = y_ss1 + 2 * k + 12;
    const int y_ss2 = y_sw + 2 * k + 12;
    const int y_amp1 = y_ss2 + 3;
    const int y_amp2 = y_ss2 + k + 12;

    v.ss1 = b.add(seed, 0, false, {clxA, y_ss1}, "ss1");
    v.swi = b.add(sw, 0, false, {clxB, y_sw}, "switch");
    v.ss2 = b.add(seed, 0, false, {clxA, y_ss2}, "ss2");
    v.amp1 = b.add(ampg, 0, false, {clxB + k + 8, y_amp1}, "amp1");
    v.amp2 = b.add(ampg, 0, false, {clxB, y_amp2}, "amp2");

    // Chain hops on nested west columns (innermost 26 .. outermost 14).
    {
        Pt w2 = b.port(v.swi, 1).pos;  // switch w2 (north) -> amp1.in (west)
        Pt in = b.port(v.amp1, 0).pos;
        b.wire(v.swi, 1, v.amp1, 0, {Pt{w2.x, w2.y + 2}, Pt{26, w2.y + 2}, Pt{26, in.y}},
               Pt{0, 1});
    }
    {
        Pt w1 = b.port(v.amp1, 1).pos;  // amp1.w1 (east) -> ss1.in (south)
        Pt in = b.port(v.ss1, 0).pos;
        b.wire(v.amp1, 1, v.ss1, 0,
               {Pt{w1.x + 2, w1.y}, Pt{w1.x + 2, w1.y + 2}, Pt{22, w1.y + 2},
                Pt{22, in.y - 2}, Pt{in.x, in.y - 2}},
               Pt{0, 1});
    }
    {
        Pt w1 = b.port(v.ss1, 1).pos;  // ss1.w1 (north) -> amp2.in (west)
        Pt in = b.port(v.amp2, 0).pos;
        b.wire(v.ss1, 1, v.amp2, 0, {Pt{w1.x, w1.y + 2}, Pt{18, w1.y + 2}, Pt{18, in.y}},
               Pt{0, 1});
    }
    {
        Pt w1 = b.port(v.amp2, 1).pos;  // amp2.w1 (east) -> ss2.in (south)
        Pt in = b.port(v.ss2, 0).pos;
        b.wire(v.amp2, 1, v.ss2, 0,
               {Pt{w1.x + 2, w1.y}, Pt{w1.x + 2, w1.y + 2}, Pt{14, w1.y + 2},
                Pt{14, in.y - 2}, Pt{in.x, in.y - 2}},
               Pt{0, 1});
    }

    const int module_h = 4 * k + 16;
    const int gap = 26;
    const int B2 = B1 + module_h + gap;
    const int B3 = B2 + module_h + gap;
    const int MX = clxB + 8 * k + 80;

    v.m1 = build_module(b, true, {MX, B1}, "m1");
    v.m2 = build_module(b, true, {MX, B2}, "m2");
    v.m3 = build_module(b, true, {MX, B3}, "m3");

    struct Feed {
        int inst, prt;
        Module* mod;
        bool is_w;
        int col;
    };
    const int RE = clxB + 3 * k + 28;  // river columns, lane order top->bottom
    std::vector<Feed> feeds = {
        {v.amp2, 2, &v.m3, true, RE},
        {v.ss2, 1, &v.m3, false, RE + 4},
        {v.amp1, 2, &v.m2, true, RE + 8},
        {v.ss2, 2, &v.m2, false, RE + 12},
        {v.swi, 0, &v.m1, true, RE + 16},
        {v.ss1, 2, &v.m1, false, RE + 20},
    };
    for (auto& f : feeds) {
        Pt src = b.port(f.inst, f.prt).pos;
        std::vector<Pt> mids;
        Pt hop = src;
        if (b.port(f.inst, f.prt).dir.x == 0) {
            hop = Pt{src.x, src.y + 2};
            mids.push_back(hop);
        }
        if (f.is_w) {
            Pt drop = f.mod->w_drop;
            int lane = drop.y + 6;
            mids.push_back(Pt{f.col, hop.y});
            mids.push_back(Pt{f.col, lane});
            mids.push_back(Pt{drop.x, lane});
            b.wire(f.inst, f.prt, f.mod->sp_head, 0, mids, Pt{0, 1});
        } else {
            Pt rise = f.mod->u_rise;
            int lane = rise.y - 4;
            mids.push_back(Pt{f.col, hop.y});
            mids.push_back(Pt{f.col, lane});
            mids.push_back(Pt{rise.x, lane});
            b.wire(f.inst, f.prt, f.mod->j_head, 1, mids, Pt{0, -1});
        }
    }
    return v;
}

}  // namespace

Assembly variable_assembly_k(int k) {
    require_k(k);
    if (k % 2 == 0 && k > 4)
        throw std::invalid_argument("variable_assembly_k: even k > 4 layouts not implemented");

    // Pass 1: measure with a provisional band base.
    const int module_h = 4 * k + 16;
    const int gap = 26;
    int B1 = 30 + 3 * (2 * k + 12) + 40;
    int s;
    {
        VarPlan probe = build_variable_core(k, B1);
        int need = 0;
        for (auto& gi : probe.b.a.instances) {
            need = std::max<int>(need, static_cast<int>(gi.tpl.bbox_max().x));
            need = std::max<int>(need, static_cast<int>(gi.tpl.bbox_max().y));
        }
        for (auto& w : probe.b.a.wires)
            for (auto& p : w.pts) {
                need = std::max<int>(need, static_cast<int>(p.x));
                need = std::max<int>(need, static_cast<int>(p.y));
            }
        int B2 = B1 + module_h + gap;
        s = round_up_mod4(std::max(need + 36, 2 * (B2 + 2 * k + 2)));
        // Recenter so the middle pair brackets the midline: want
        // B2 + k - 2 < s/2 - 1 and B2 + 4k + 1 > s/2 + 1.
        int target_B2 = s / 2 - 2 * k;
        int delta = target_B2 - B2;
        delta -= delta % 2;  // keep wire parities intact
        B1 += delta;
        if (B1 < 30 + 3 * (2 * k + 12) + 20) {
            s += round_up_mod4(2 * (30 + 3 * (2 * k + 12) + 20 - B1));
            B1 = s / 2 - 2 * k - module_h - gap;
            B1 -= B1 % 2;
        }
    }

    VarPlan v = build_variable_core(k, B1);
    Build& b = v.b;
    const int lo = k / 2, hi = (k + 1) / 2;
    auto hi_spec = spec_only({0, hi});
    auto lo_spec = spec_only({0, lo});

    // m1 -> south pair: ceil rides the lower corridor lane and turns at
    // s/2+1; floor rides the upper lane and turns at s/2-1.
    {
        Pt ph = b.port(v.m1.out_hi_inst, v.m1.out_hi_port).pos;
        Pt pl = b.port(v.m1.out_lo_inst, v.m1.out_lo_port).pos;
        b.external(v.m1.out_hi_inst, v.m1.out_hi_port,
                   {Pt{s - 6, ph.y}, Pt{s - 6, 4}, Pt{s / 2 + 1, 4}}, Pt{s / 2 + 1, 0},
                   {0, -1}, Pt{0, -1}, hi_spec, 0, 1);
        b.external(v.m1.out_lo_inst, v.m1.out_lo_port,
                   {Pt{s - 10, pl.y}, Pt{s - 10, 8}, Pt{s / 2 - 1, 8}}, Pt{s / 2 - 1, 0},
                   {0, -1}, Pt{0, 1}, lo_spec, 0, 0);
    }
    // m2 -> east pair.
    {
        Pt ph = b.port(v.m2.out_hi_inst, v.m2.out_hi_port).pos;
        Pt pl = b.port(v.m2.out_lo_inst, v.m2.out_lo_port).pos;
        b.external(v.m2.out_hi_inst, v.m2.out_hi_port,
                   {Pt{s - 14, ph.y}, Pt{s - 14, s / 2 + 1}}, Pt{s, s / 2 + 1}, {1, 0},
                   Pt{0, 1}, hi_spec, 1, 1);
        b.external(v.m2.out_lo_inst, v.m2.out_lo_port,
                   {Pt{s - 18, pl.y}, Pt{s - 18, s / 2 - 1}}, Pt{s, s / 2 - 1}, {1, 0},
                   Pt{0, -1}, lo_spec, 1, 0);
    }
    // m3 -> north pair: floor rides the upper lane, turning at s/2+1.
    {
        Pt ph = b.port(v.m3.out_hi_inst, v.m3.out_hi_port).pos;
        Pt pl = b.port(v.m3.out_lo_inst, v.m3.out_lo_port).pos;
        b.external(v.m3.out_hi_inst, v.m3.out_hi_port,
                   {Pt{s - 26, ph.y}, Pt{s - 26, s - 8}, Pt{s / 2 - 1, s - 8}},
                   Pt{s / 2 - 1, s}, {0, 1}, Pt{0, -1}, hi_spec, 2, 1);
        b.external(v.m3.out_lo_inst, v.m3.out_lo_port,
                   {Pt{s - 22, pl.y}, Pt{s - 22, s - 4}, Pt{s / 2 + 1, s - 4}},
                   Pt{s / 2 + 1, s}, {0, 1}, Pt{0, 1}, lo_spec, 2, 0);
    }
    b.a.audit();
    return std::move(b.a);
}

int region_size_k(int k) {
    static std::map<int, int> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(k);
    if (it != cache.end()) return it->second;
    Assembly a = variable_assembly_k(k);
    // The east pair sits one unit outside the region at x = s+1.
    int s = static_cast<int>(a.externals[2].boundary_pos.x) - 1;
    cache[k] = s;
    return s;
}

Assembly clause_assembly_k(int k, bool positive) {
    require_k(k);
    Build b(k);
    const int s = region_size_k(k);
    const int r = s - 2;      // region [0,r]^2
    const int c = s / 2 - 1;  // region center
    const int lo = k / 2, hi = (k + 1) / 2;

    GadgetTemplate delta = build_primitive(PrimitiveKind::delta_network, k);
    GadgetTemplate gate =
        build_primitive(positive ? PrimitiveKind::xor_filter : PrimitiveKind::xor_enforcer, k);

    int d = b.add(delta, 0, false, {c, c}, "delta");
    Pt dw1 = b.port(d, 0).pos;  // (c, c+hi+1), north
    Pt dw2 = b.port(d, 1).pos;  // (c, c-hi-1), south
    Pt dw3 = b.port(d, 2).pos;  // east

    // Gate rotations give each gate the natural port compass for its corner:
    // g1 south-center (rot 3), g2 northwest (filter rot 1 / enforcer rot 0),
    // g3 east (rot 2). Boundary wires then run straight along their edges.
    const int dy = 3 * k + 18;
    int g1 = b.add(gate, 3, false, {c, c - dy - k}, "g1");
    int g2 = b.add(gate, positive ? 1 : 0, false, {c - 1, c + dy}, "g2");
    int g3 = b.add(gate, 2, false, {r - 3, c + dy}, "g3");

    // o-wires into the delta.
    b.wire(g1, 2, d, 1, {}, Pt{1, 0});  // straight vertical riser on x = c
    {
        Pt out = b.port(g2, 2).pos;  // filter: south at (c-1, ...) / enforcer: east
        if (positive) {
            b.wire(g2, 2, d, 0, {Pt{out.x, c + hi + 3}, Pt{dw1.x, c + hi + 3}}, Pt{-1, 0});
        } else {
            b.wire(g2, 2, d, 0,
                   {Pt{out.x + 2, out.y}, Pt{out.x + 2, c + hi + 3}, Pt{dw1.x, c + hi + 3}},
                   Pt{0, 1});
        }
    }
    {
        Pt out = b.port(g3, 2).pos;  // west-facing
        b.wire(g3, 2, d, 2, {Pt{dw3.x + 4, out.y}, Pt{dw3.x + 4, dw3.y}}, Pt{0, 1});
    }

    auto l_spec = spec_only({0, hi});
    auto r_spec = spec_only({0, lo});

    Pt p_w1g1 = b.port(g1, 0).pos, p_w2g1 = b.port(g1, 1).pos;
    Pt p_w1g2 = b.port(g2, 0).pos, p_w2g2 = b.port(g2, 1).pos;
    Pt p_w1g3 = b.port(g3, 0).pos, p_w2g3 = b.port(g3, 1).pos;

    // l1: west edge (0, c-1) -> g1.w1.
    if (positive) {
        // w1 faces south; wrap under the gate.
        b.external(g1, 0,
                   {Pt{p_w1g1.x, p_w1g1.y - 2}, Pt{2, p_w1g1.y - 2}, Pt{2, c - 1}},
                   Pt{0, c - 1}, {-1, 0}, Pt{0, -1}, l_spec, 0, 0);
    } else {
        // w1 faces west.
        b.external(g1, 0, {Pt{2, p_w1g1.y}, Pt{2, c - 1}}, Pt{0, c - 1}, {-1, 0}, Pt{0, 1},
                   l_spec, 0, 0);
    }
    // r3: east edge (r, c-1) -> g1.w2 (east-facing).
    b.external(g1, 1, {Pt{r - 2, p_w2g1.y}, Pt{r - 2, c - 1}}, Pt{r, c - 1}, {1, 0},
               Pt{0, 1}, r_spec, 2, 1);
    // l2: north edge (c-1, r) -> g2.w1 (north-facing); straight descent.
    b.external(g2, 0, {}, Pt{p_w1g2.x, r}, {0, 1}, Pt{1, 0}, l_spec, 1, 0);
    // r1: west edge (0, c+1) -> g2.w2.
    if (positive) {
        // w2 faces west.
        b.external(g2, 1, {Pt{c - 7, p_w2g2.y}, Pt{c - 7, c + 1}}, Pt{0, c + 1}, {-1, 0},
                   Pt{0, 1}, r_spec, 0, 1);
    } else {
        // w2 faces south; descend two columns west of the delta's spine.
        b.external(g2, 1,
                   {Pt{p_w2g2.x, p_w2g2.y - 2}, Pt{c - 3, p_w2g2.y - 2}, Pt{c - 3, c + 1}},
                   Pt{0, c + 1}, {-1, 0}, Pt{0, 1}, r_spec, 0, 1);
    }
    // l3: east edge (r, c+1) -> g3.w1.
    if (positive) {
        // w1 faces east at (r-2, YG3); ascend the r-2 column.
        b.external(g3, 0, {Pt{r - 2, c + 1}}, Pt{r, c + 1}, {1, 0}, Pt{0, 1}, l_spec, 2, 0);
    } else {
        // w1 faces south; wrap under.
        b.external(g3, 0,
                   {Pt{p_w1g3.x, p_w1g3.y - 2}, Pt{r - 2, p_w1g3.y - 2}, Pt{r - 2, c + 1}},
                   Pt{r, c + 1}, {1, 0}, Pt{0, 1}, l_spec, 2, 0);
    }
    // r2: north edge (c+1, r) -> g3.w2 (north-facing); up, west, up.
    b.external(g3, 1, {Pt{p_w2g3.x, r - 2}, Pt{c + 1, r - 2}}, Pt{c + 1, r}, {0, 1},
               Pt{0, 1}, r_spec, 1, 1);
    b.a.audit();
    return std::move(b.a);
}

GadgetTemplate variable_gadget_k(int k) {
    return variable_assembly_k(k).flatten("variable_k" + std::to_string(k));
}

GadgetTemplate clause_gadget_k(int k, bool positive) {
    return clause_assembly_k(k, positive)
        .flatten(std::string(positive ? "clause_pos_k" : "clause_neg_k") + std::to_string(k));
}

}  // namespace ekm
