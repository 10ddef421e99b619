#include "ekm/assembly.hpp"

#include <algorithm>
#include <unordered_map>

namespace ekm {

std::vector<Pt> route_wire(const std::vector<Pt>& corners, int k, int64_t unit, Pt bump_dir) {
    if (corners.size() < 1) throw std::invalid_argument("route_wire: empty corner list");
    // Walk at pitch `unit`.
    std::vector<Pt> pts;
    pts.push_back(corners[0]);
    for (size_t i = 0; i + 1 < corners.size(); ++i) {
        Pt a = corners[i], b = corners[i + 1];
        if (a == b) continue;
        if (a.x != b.x && a.y != b.y) throw std::invalid_argument("route_wire: diagonal leg");
        Pt d{(b.x > a.x) - (b.x < a.x), (b.y > a.y) - (b.y < a.y)};
        int64_t len = (std::abs(b.x - a.x) + std::abs(b.y - a.y));
        if (len % unit != 0) throw std::invalid_argument("route_wire: leg not a unit multiple");
        for (int64_t s = 1; s <= len / unit; ++s) pts.push_back(a + d * (s * unit));
    }
    int64_t count = static_cast<int64_t>(pts.size());
    int bumps = -1;
    for (int b = 0; b < k; ++b)
        if ((count + 2 * b) % k == 0) { bumps = b; break; }
    if (bumps < 0)
        throw std::logic_error("route_wire: point-count parity cannot reach a multiple of k");
    if (bumps > 0) {
        // Longest straight interior run.
        int best_start = -1, best_len = 0;
        int run_start = 0;
        auto run_dir = [&](int i) { return pts[i + 1] - pts[i]; };
        for (int i = 1; i < static_cast<int>(pts.size()); ++i) {
            if (i == static_cast<int>(pts.size()) - 1 || !(run_dir(i - 1) == run_dir(i))) {
                int len = i - run_start;
                if (len > best_len) { best_len = len; best_start = run_start; }
                run_start = i;
            }
        }
        if (best_len < 3 * bumps + 2)
            throw std::logic_error("route_wire: no room for slack bumps");
        Pt lift = bump_dir * unit;
        std::vector<Pt> out;
        int next_bump = best_start + 1;
        int placed = 0;
        for (int i = 0; i < static_cast<int>(pts.size()); ++i) {
            out.push_back(pts[i]);
            if (placed < bumps && i == next_bump && i + 1 < static_cast<int>(pts.size())) {
                out.push_back(pts[i] + lift);
                out.push_back(pts[i + 1] + lift);
                ++placed;
                next_bump += 3;
            }
        }
        pts = std::move(out);
    }
    if (static_cast<int64_t>(pts.size()) % k != 0)
        throw std::logic_error("route_wire: internal slack accounting error");
    return pts;
}

GadgetTemplate Assembly::flatten(const std::string& kind) const {
    GadgetTemplate t;
    t.kind = kind;
    t.k = k;
    t.unit = unit;
    for (auto& gi : instances)
        for (auto& p : gi.tpl.points) t.points.push_back(p);
    for (auto& w : wires)
        for (auto& p : w.pts) t.points.push_back(p);
    for (auto& x : externals)
        for (auto& p : x.pts) t.points.push_back(p);
    for (auto& x : externals) {
        Port port;
        port.pos = x.boundary_pos;
        port.dir = x.boundary_dir;
        port.charge_spec = x.charge_spec;
        port.pair_id = x.pair_id;
        port.pair_side = x.pair_side;
        t.ports.push_back(port);
    }
    return t;
}

namespace {

struct Offsets {
    std::vector<int> inst, wire, ext;
    int total = 0;
};

Offsets layout_offsets(const Assembly& a) {
    Offsets o;
    int at = 0;
    for (auto& gi : a.instances) { o.inst.push_back(at); at += static_cast<int>(gi.tpl.points.size()); }
    for (auto& w : a.wires) { o.wire.push_back(at); at += static_cast<int>(w.pts.size()); }
    for (auto& x : a.externals) { o.ext.push_back(at); at += static_cast<int>(x.pts.size()); }
    o.total = at;
    return o;
}

}  // namespace

Certification Assembly::compose(const std::string& kind) const {
    const int K = k;
    // Wire lookups per (instance, port).
    std::map<std::pair<int, int>, std::pair<int, int>> wire_at;  // -> (wire idx, side 0=a,1=b)
    for (int w = 0; w < static_cast<int>(wires.size()); ++w) {
        wire_at[{wires[w].a_inst, wires[w].a_port}] = {w, 0};
        wire_at[{wires[w].b_inst, wires[w].b_port}] = {w, 1};
    }
    std::map<std::pair<int, int>, int> ext_at;
    for (int x = 0; x < static_cast<int>(externals.size()); ++x)
        ext_at[{externals[x].inst, externals[x].port}] = x;

    for (auto& gi : instances) {
        if (!gi.cert) throw std::invalid_argument("compose: instance without certification");
        for (auto& d : gi.cert->domains)
            if (static_cast<int>(d.size()) != K)
                throw std::invalid_argument("compose: instance table not certified over the full "
                                            "charge domain (" + gi.label + ")");
    }
    for (auto& w : wires) {
        if (w.pts.empty() || static_cast<int>(w.pts.size()) % K != 0 ||
            static_cast<int>(w.pts.size()) < K)
            throw std::invalid_argument("compose: wire length must be a positive multiple of k");
    }

    Offsets off = layout_offsets(*this);
    int n_flat = off.total;

    struct Agg {
        long long count = 0;
        std::vector<std::vector<int>> witness;
    };
    std::map<std::vector<int>, Agg> by_external;

    // Backtracking over instance states with wire consistency.
    std::vector<const StateEntry*> chosen(instances.size(), nullptr);
    std::vector<int> ext_vec(externals.size(), 0);

    auto build_witness = [&]() {
        std::vector<std::vector<int>> blocks;
        for (int i = 0; i < static_cast<int>(instances.size()); ++i) {
            int n_i = static_cast<int>(instances[i].tpl.points.size());
            for (auto& blk : chosen[i]->witness) {
                std::vector<int> mapped;
                for (int slot : blk) {
                    if (slot < n_i) {
                        mapped.push_back(off.inst[i] + slot);
                        continue;
                    }
                    int p = (slot - n_i) / K, jj = (slot - n_i) % K;
                    auto wit = wire_at.find({i, p});
                    if (wit != wire_at.end()) {
                        auto [w, side] = wit->second;
                        int W = static_cast<int>(wires[w].pts.size());
                        mapped.push_back(off.wire[w] + (side == 0 ? jj : W - 1 - jj));
                        continue;
                    }
                    auto xit = ext_at.find({i, p});
                    if (xit == ext_at.end())
                        throw std::logic_error("compose: unconnected port carries charge");
                    int x = xit->second;
                    if (externals[x].pts.empty())
                        mapped.push_back(grey_slot(n_flat, K, x, jj));
                    else
                        mapped.push_back(off.ext[x] + jj);
                }
                std::sort(mapped.begin(), mapped.end());
                blocks.push_back(std::move(mapped));
            }
        }
        // Wire interiors.
        for (int w = 0; w < static_cast<int>(wires.size()); ++w) {
            int ea = chosen[wires[w].a_inst]->e[wires[w].a_port];
            int eb = chosen[wires[w].b_inst]->e[wires[w].b_port];
            int W = static_cast<int>(wires[w].pts.size());
            for (int at = ea; at + K <= W - eb; at += K) {
                std::vector<int> blk;
                for (int j = 0; j < K; ++j) blk.push_back(off.wire[w] + at + j);
                blocks.push_back(std::move(blk));
            }
        }
        // Extension interiors and boundary straddles.
        for (int x = 0; x < static_cast<int>(externals.size()); ++x) {
            int e = chosen[externals[x].inst]->e[externals[x].port];
            int L = static_cast<int>(externals[x].pts.size());
            if (L == 0) continue;
            int suffix = e == 0 ? 0 : K - e;
            for (int at = e; at + K <= L - suffix; at += K) {
                std::vector<int> blk;
                for (int j = 0; j < K; ++j) blk.push_back(off.ext[x] + at + j);
                blocks.push_back(std::move(blk));
            }
            if (e > 0) {
                std::vector<int> blk;
                for (int j = L - suffix; j < L; ++j) blk.push_back(off.ext[x] + j);
                for (int j = 0; j < e; ++j) blk.push_back(grey_slot(n_flat, K, x, j));
                std::sort(blk.begin(), blk.end());
                blocks.push_back(std::move(blk));
            }
        }
        std::sort(blocks.begin(), blocks.end());
        return blocks;
    };

    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == instances.size()) {
            for (int x = 0; x < static_cast<int>(externals.size()); ++x)
                ext_vec[x] = chosen[externals[x].inst]->e[externals[x].port];
            Agg& agg = by_external[ext_vec];
            long long prod = 1;
            for (auto* st : chosen) {
                prod = prod * st->cover_count;
                if (prod > 1000000000000000LL) { prod = 1000000000000000LL; break; }
            }
            if (agg.count == 0) agg.witness = build_witness();
            agg.count = std::min(agg.count + prod, 1000000000000000LL);
            return;
        }
        for (auto& st : instances[i].cert->states) {
            bool ok = true;
            for (int w = 0; w < static_cast<int>(wires.size()) && ok; ++w) {
                const auto& wr = wires[w];
                if (wr.a_inst == static_cast<int>(i) && wr.b_inst < static_cast<int>(i))
                    ok = chosen[wr.b_inst]->e[wr.b_port] == (K - st.e[wr.a_port]) % K;
                else if (wr.b_inst == static_cast<int>(i) && wr.a_inst < static_cast<int>(i))
                    ok = chosen[wr.a_inst]->e[wr.a_port] == (K - st.e[wr.b_port]) % K;
                else if (wr.a_inst == static_cast<int>(i) && wr.b_inst == static_cast<int>(i))
                    ok = st.e[wr.b_port] == (K - st.e[wr.a_port]) % K;
            }
            if (!ok) continue;
            chosen[i] = &st;
            rec(i + 1);
            chosen[i] = nullptr;
        }
    };
    rec(0);

    Certification cert;
    cert.kind = kind;
    cert.k = K;
    cert.mode = instances.empty() ? WeightMode::mst : instances[0].cert->mode;
    cert.checksum = flatten(kind).checksum();
    cert.domains.assign(externals.size(), {});
    for (auto& d : cert.domains)
        for (int e = 0; e < K; ++e) d.push_back(e);
    for (auto& [e, agg] : by_external) {
        StateEntry st;
        st.e = e;
        st.cover_count = agg.count;
        st.witness = agg.witness;
        cert.states.push_back(std::move(st));
    }
    return cert;
}

void Assembly::audit() const {
    struct Tag {
        int kind;  // 0 instance, 1 wire, 2 ext
        int id, idx;
    };
    std::unordered_map<Pt, Tag, PtHash> where;
    auto add = [&](const Pt& p, Tag t) {
        if (!where.emplace(p, t).second)
            throw std::logic_error("assembly audit: duplicate point at (" +
                                   std::to_string(p.x) + "," + std::to_string(p.y) + ")");
    };
    for (int i = 0; i < static_cast<int>(instances.size()); ++i)
        for (int j = 0; j < static_cast<int>(instances[i].tpl.points.size()); ++j)
            add(instances[i].tpl.points[j], {0, i, j});
    for (int w = 0; w < static_cast<int>(wires.size()); ++w)
        for (int j = 0; j < static_cast<int>(wires[w].pts.size()); ++j)
            add(wires[w].pts[j], {1, w, j});
    for (int x = 0; x < static_cast<int>(externals.size()); ++x)
        for (int j = 0; j < static_cast<int>(externals[x].pts.size()); ++j)
            add(externals[x].pts[j], {2, x, j});

    // Wire endpoints must agree with their ports.
    for (auto& w : wires) {
        const Port& pa = instances[w.a_inst].tpl.ports[w.a_port];
        const Port& pb = instances[w.b_inst].tpl.ports[w.b_port];
        if (!(w.pts.front() == pa.pos) || !(w.pts.back() == pb.pos))
            throw std::logic_error("assembly audit: wire endpoints disagree with ports");
    }
    for (auto& x : externals) {
        const Port& p = instances[x.inst].tpl.ports[x.port];
        if (x.pts.empty()) {
            if (!(x.boundary_pos == p.pos))
                throw std::logic_error("assembly audit: empty extension must sit at the port");
        } else {
            if (!(x.pts.front() == p.pos))
                throw std::logic_error("assembly audit: extension must start at the port");
            if (static_cast<int>(x.pts.size()) % k != 0)
                throw std::logic_error("assembly audit: extension length not a multiple of k");
        }
    }

    // Cell-hash proximity scan: any two points within one unit must be an
    // intended contact.
    std::unordered_map<Pt, std::vector<const Pt*>, PtHash> cells;
    std::vector<Pt> all;
    all.reserve(where.size());
    for (auto& [p, t] : where) all.push_back(p);
    auto cell_of = [&](const Pt& p) {
        auto fl = [&](int64_t c) { return c >= 0 ? c / unit : -((-c + unit - 1) / unit); };
        return Pt{fl(p.x), fl(p.y)};
    };
    for (auto& p : all) cells[cell_of(p)].push_back(&p);
    int64_t unit_sq = unit * unit;
    for (auto& p : all) {
        Pt c = cell_of(p);
        for (int64_t dx = -1; dx <= 1; ++dx)
            for (int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells.find(Pt{c.x + dx, c.y + dy});
                if (it == cells.end()) continue;
                for (const Pt* qp : it->second) {
                    const Pt& q = *qp;
                    if (!(p < q)) continue;
                    if (dist2(p, q) > unit_sq) continue;
                    Tag a = where[p], b = where[q];
                    bool ok = false;
                    if (a.kind == 0 && b.kind == 0) {
                        ok = a.id == b.id;
                    } else if (a.kind == b.kind && a.id == b.id) {
                        ok = std::abs(a.idx - b.idx) == 1;
                    } else {
                        // Port contact: wire/extension endpoint vs its anchor.
                        auto port_contact = [&](const Tag& seg, const Tag& inst) {
                            if (inst.kind != 0) return false;
                            if (seg.kind == 1) {
                                const InternalWire& w = wires[seg.id];
                                int W = static_cast<int>(w.pts.size());
                                return (seg.idx == 0 && inst.id == w.a_inst) ||
                                       (seg.idx == W - 1 && inst.id == w.b_inst);
                            }
                            if (seg.kind == 2)
                                return seg.idx == 0 && inst.id == externals[seg.id].inst;
                            return false;
                        };
                        ok = port_contact(a, b) || port_contact(b, a);
                    }
                    if (!ok)
                        throw std::logic_error(
                            "assembly audit: unintended contact near (" + std::to_string(p.x) +
                            "," + std::to_string(p.y) + ")");
                }
            }
    }
}

}  // namespace ekm
