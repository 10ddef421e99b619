#include "ekm/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ekm/gadgets3.hpp"
#include "ekm/gadgets_k.hpp"
#include "ekm/pathvar.hpp"

namespace ekm {

namespace {

Pt ccw(Pt d) { return {-d.y, d.x}; }

struct TemplateSet {
    GadgetTemplate var_tpl;
    std::shared_ptr<const Certification> var_cert;
    GadgetTemplate cpos_tpl, cneg_tpl;
    std::shared_ptr<const Certification> cpos_cert, cneg_cert;
    Pt var_ctr, clause_ctr;  // rotation pivots, template coordinates
    int64_t refine = 36;
};

TemplateSet make_templates(int k, ReduceMode mode, int t_digits) {
    WeightMode wm = mode == ReduceMode::grid ? WeightMode::mst : WeightMode::path;
    TemplateSet ts;
    if (k == 3) {
        ts.var_tpl = variable_gadget3();
        ts.cpos_tpl = clause_gadget3(true);
        ts.cneg_tpl = clause_gadget3(false);
        ts.var_cert = cached_cert(ts.var_tpl, wm);
        ts.cpos_cert = cached_cert(ts.cpos_tpl, wm);
        ts.cneg_cert = cached_cert(ts.cneg_tpl, wm);
        ts.var_ctr = {8, 8};
        ts.clause_ctr = {0, 0};
        ts.refine = 36;
        return ts;
    }
    int s = region_size_k(k);
    int64_t unit = 1;
    if (mode == ReduceMode::path_variant && k >= 7 && k % 2 == 1) {
        unit = 1;
        for (int i = 0; i < t_digits; ++i) unit *= 10;
    }
    Assembly var_asm = variable_assembly_k(k);
    ts.var_tpl = scale_template(var_asm.flatten("variable_k"), unit);
    {
        Assembly tmp = variable_assembly_k(k);
        for (auto& gi : tmp.instances) gi.cert = cached_cert_mode(gi.tpl, gi.cert, wm);
        ts.var_cert = std::make_shared<Certification>(tmp.compose("variable_k"));
    }
    bool swap_delta = mode == ReduceMode::path_variant && k >= 7 && k % 2 == 1;
    for (bool positive : {true, false}) {
        Assembly ca = swap_delta ? clause_assembly_path(k, positive, t_digits)
                                 : clause_assembly_k(k, positive);
        if (!swap_delta)
            for (auto& gi : ca.instances) gi.cert = cached_cert_mode(gi.tpl, gi.cert, wm);
        auto tpl = ca.flatten(positive ? "clause_pos" : "clause_neg");
        if (!swap_delta) tpl = scale_template(tpl, unit);
        auto cert = std::make_shared<Certification>(
            ca.compose(positive ? "clause_pos" : "clause_neg"));
        if (positive) {
            ts.cpos_tpl = tpl;
            ts.cpos_cert = cert;
        } else {
            ts.cneg_tpl = tpl;
            ts.cneg_cert = cert;
        }
    }
    ts.var_ctr = Pt{s / 2, s / 2} * unit;
    ts.clause_ctr = Pt{s / 2 - 1, s / 2 - 1} * unit;
    ts.refine = static_cast<int64_t>(k) * s * unit;
    return ts;
}

GadgetTemplate place_rotated(const GadgetTemplate& tpl, const Pt& ctr, int q, Pt at) {
    // Rotate about ctr, then drop the pivot on `at`.
    Pt shift = at - rotate_cw(ctr, q);
    return tpl.transformed(q, false, shift);
}

struct EdgeHook {
    int gadget = -1;
    int port = -1;  // template port index
};

}  // namespace

ReductionOutput reduce(const Formula& f, const GridEmbedding& emb, int k, ReduceMode mode) {
    validate_formula(f);
    if (k < 3) throw std::invalid_argument("reduce: k >= 3 required");
    IncidenceGraph inc = incidence_graph(f);
    Graph g = Graph::from_incidence(inc);

    ReductionOutput red;
    red.k = k;
    red.mode = mode;
    red.formula = f;
    red.t_digits = 0;
    red.unit = 1;
    if (mode == ReduceMode::path_variant && k >= 7 && k % 2 == 1) {
        auto pc = choose_precision(std::max(1, f.num_vars));
        red.t_digits = pc.t;
        for (int i = 0; i < red.t_digits; ++i) red.unit *= 10;
    }
    TemplateSet ts = make_templates(k, mode, red.t_digits);
    const int64_t R = ts.refine;
    const int64_t unit = red.unit;

    // Place every gadget, matching its rotated port directions to the
    // directions in which the embedding's edges leave the vertex.
    auto adj = g.adjacency();
    std::vector<std::map<int, EdgeHook>> hooks(g.edges.size());  // edge -> per end
    std::map<std::pair<int, int>, EdgeHook> edge_end_hook;       // (edge, end 0=var/1=cl)

    for (int v = 0; v < g.n; ++v) {
        bool is_var = v < f.num_vars;
        const GadgetTemplate& base =
            is_var ? ts.var_tpl
                   : (f.clauses[v - f.num_vars].positive ? ts.cpos_tpl : ts.cneg_tpl);
        auto cert = is_var ? ts.var_cert
                           : (f.clauses[v - f.num_vars].positive ? ts.cpos_cert : ts.cneg_cert);
        const Pt ctr = is_var ? ts.var_ctr : ts.clause_ctr;
        Pt center = emb.vpos[v] * R;

        // Edge directions at this vertex.
        std::map<int, int> edge_dir;  // eid -> dir index
        for (int e : adj[v]) {
            const auto& path = emb.epath[e];
            Pt a, bdir;
            if (g.edges[e].first == v) {
                a = path[0];
                bdir = path[1] - path[0];
            } else {
                a = path.back();
                bdir = path[path.size() - 2] - path.back();
            }
            edge_dir[e] = static_cast<int>(dir_of(bdir));
        }
        int placed_q = -1;
        GadgetTemplate placed;
        for (int q = 0; q < 4 && placed_q < 0; ++q) {
            GadgetTemplate cand = place_rotated(base, ctr, q, center);
            // Every edge must find a distinct port (or pair) pointing its way.
            std::map<int, std::vector<int>> by_dir;  // dir -> template port ids
            for (int p = 0; p < static_cast<int>(cand.ports.size()); ++p)
                by_dir[static_cast<int>(dir_of(cand.ports[p].dir))].push_back(p);
            bool ok = true;
            std::set<int> used_dirs;
            for (auto& [e, d] : edge_dir) {
                if (!by_dir.count(d) || used_dirs.count(d)) { ok = false; break; }
                used_dirs.insert(d);
            }
            if (ok && by_dir.size() >= edge_dir.size()) {
                placed_q = q;
                placed = cand;
            }
        }
        if (placed_q < 0)
            throw PlacementError("reduce: no rotation matches edge directions at vertex " +
                                 std::to_string(v));
        PlacedGadget pg;
        pg.tpl = placed;
        pg.cert = cert;
        pg.port_wire.assign(placed.ports.size(), -1);
        pg.port_end.assign(placed.ports.size(), 0);
        red.gadgets.push_back(std::move(pg));
        for (auto& [e, d] : edge_dir) {
            for (int p = 0; p < static_cast<int>(placed.ports.size()); ++p)
                if (static_cast<int>(dir_of(placed.ports[p].dir)) == d)
                    hooks[e][v < f.num_vars ? 0 : 1].gadget = v,
                    hooks[e][v < f.num_vars ? 0 : 1].port = -1;  // filled below
            // Record all ports pointing along d for this edge.
            std::vector<int> ps;
            for (int p = 0; p < static_cast<int>(placed.ports.size()); ++p)
                if (static_cast<int>(dir_of(placed.ports[p].dir)) == d) ps.push_back(p);
            // k = 3: single port; k >= 4: the pair.
            edge_end_hook[{e, is_var ? 0 : 1}] = EdgeHook{v, ps.front()};
            if (ps.size() == 2) {
                // Store the second port id in the sign bit trick below.
                edge_end_hook[{e, (is_var ? 0 : 1) + 2}] = EdgeHook{v, ps.back()};
            }
        }
    }

    // Materialize gadget points.
    for (int gi = 0; gi < static_cast<int>(red.gadgets.size()); ++gi) {
        auto& pg = red.gadgets[gi];
        pg.point_offset = static_cast<int>(red.points.size());
        for (auto& p : pg.tpl.points) {
            red.points.push_back(p);
            Provenance pr;
            pr.kind = gi < f.num_vars ? Provenance::Kind::variable : Provenance::Kind::clause;
            pr.owner = gi < f.num_vars ? gi : gi - f.num_vars;
            red.provenance.push_back(pr);
        }
    }

    // Wires along refined edge paths.
    auto port_of = [&](int e, int end, int side) -> std::pair<int, int> {
        // side: 0 for the lone/first port, 1 for the second pair port.
        auto it = edge_end_hook.find({e, end + (side ? 2 : 0)});
        if (it == edge_end_hook.end()) throw std::logic_error("reduce: missing port hook");
        return {it->second.gadget, it->second.port};
    };

    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        std::vector<Pt> sc;
        for (auto& p : emb.epath[e]) sc.push_back(p * R);
        auto build_one = [&](int var_port_side_sel, int cl_port_side_sel, int offset_side) {
            // offset_side: 0 = on the path, +1 = left of heading, -1 = right.
            auto [vg, vp] = port_of(e, 0, var_port_side_sel);
            auto [cg, cp] = port_of(e, 1, cl_port_side_sel);
            Pt start = red.gadgets[vg].tpl.ports[vp].pos;
            Pt end = red.gadgets[cg].tpl.ports[cp].pos;
            std::vector<Pt> corners;
            corners.push_back(start);
            for (size_t i = 1; i + 1 < sc.size(); ++i) {
                Pt p = sc[i];
                if (offset_side != 0) {
                    Pt din = sc[i] - sc[i - 1];
                    Pt dout = sc[i + 1] - sc[i];
                    auto norm = [](Pt d) {
                        return Pt{(d.x > 0) - (d.x < 0), (d.y > 0) - (d.y < 0)};
                    };
                    Pt n1 = ccw(norm(din)) * offset_side;
                    Pt n2 = ccw(norm(dout)) * offset_side;
                    p = p + (n1 + n2) * unit;
                }
                corners.push_back(p);
            }
            corners.push_back(end);
            // Slack bumps go on the longest leg, away from the partner wire.
            Pt bump{0, 1};
            {
                int64_t best = -1;
                for (size_t i = 0; i + 1 < corners.size(); ++i) {
                    int64_t len = std::abs(corners[i + 1].x - corners[i].x) +
                                  std::abs(corners[i + 1].y - corners[i].y);
                    if (len > best) {
                        best = len;
                        Pt d = corners[i + 1] - corners[i];
                        Pt dn{(d.x > 0) - (d.x < 0), (d.y > 0) - (d.y < 0)};
                        bump = offset_side == 0 ? rotate_cw(dn) : ccw(dn) * (offset_side);
                    }
                }
            }
            PlacedWire w;
            w.edge_id = e;
            w.var_gadget = vg;
            w.var_port = vp;
            w.clause_gadget = cg;
            w.clause_port = cp;
            w.point_offset = static_cast<int>(red.points.size());
            auto pts = route_wire(corners, k, unit, bump);
            w.count = static_cast<int>(pts.size());
            for (auto& p : pts) {
                red.points.push_back(p);
                Provenance pr;
                pr.kind = Provenance::Kind::wire;
                pr.owner = e;
                red.provenance.push_back(pr);
            }
            int widx = static_cast<int>(red.wires.size());
            red.gadgets[vg].port_wire[vp] = widx;
            red.gadgets[vg].port_end[vp] = 0;
            red.gadgets[cg].port_wire[cp] = widx;
            red.gadgets[cg].port_end[cp] = 1;
            red.wires.push_back(w);
        };
        if (k == 3) {
            build_one(0, 0, 0);
        } else {
            // Match pair sides: the left-of-heading wire carries ceil(k/2),
            // i.e. connects the side-1 ports.
            auto [vg, vp0] = port_of(e, 0, 0);
            auto [cg, cp0] = port_of(e, 1, 0);
            auto [vg2, vp1] = port_of(e, 0, 1);
            auto [cg2, cp1] = port_of(e, 1, 1);
            auto side_of = [&](int gidx, int p) { return red.gadgets[gidx].tpl.ports[p].pair_side; };
            int v_hi = side_of(vg, vp0) == 1 ? vp0 : vp1;
            int v_lo = side_of(vg, vp0) == 1 ? vp1 : vp0;
            int c_hi = side_of(cg, cp0) == 1 ? cp0 : cp1;
            int c_lo = side_of(cg, cp0) == 1 ? cp1 : cp0;
            // Rebind through explicit hooks for build_one.
            edge_end_hook[{e, 0}] = EdgeHook{vg, v_hi};
            edge_end_hook[{e, 2}] = EdgeHook{vg, v_lo};
            edge_end_hook[{e, 1}] = EdgeHook{cg, c_hi};
            edge_end_hook[{e, 3}] = EdgeHook{cg, c_lo};
            build_one(0, 0, +1);  // hi pair on the left
            build_one(1, 1, -1);  // lo pair on the right
        }
    }

    if (red.points.size() % k != 0)
        throw std::logic_error("reduce: point count not divisible by k");
    red.m = static_cast<int64_t>(red.points.size()) / k;
    red.target = Rat(static_cast<int64_t>(k - 1) * red.m * unit);
    if (mode == ReduceMode::path_variant) red.target = red.target + Rat(unit, 5);

    // Global contact audit: every pair of points within one unit must be an
    // intended adjacency, otherwise the placement is invalid.
    {
        std::unordered_map<Pt, int, PtHash> index;
        for (int i = 0; i < static_cast<int>(red.points.size()); ++i)
            if (!index.emplace(red.points[i], i).second)
                throw PlacementError("reduce: coincident points (gadget footprints overlap)");
        auto cell_of = [&](const Pt& p) {
            auto fl = [&](int64_t cc) { return cc >= 0 ? cc / unit : -((-cc + unit - 1) / unit); };
            return Pt{fl(p.x), fl(p.y)};
        };
        std::unordered_map<Pt, std::vector<int>, PtHash> cells;
        for (int i = 0; i < static_cast<int>(red.points.size()); ++i)
            cells[cell_of(red.points[i])].push_back(i);
        auto wire_of = [&](int idx) {
            // provenance owner is the edge; find the wire covering idx
            for (auto& w : red.wires)
                if (idx >= w.point_offset && idx < w.point_offset + w.count) return &w;
            return static_cast<PlacedWire*>(nullptr);
        };
        int64_t unit_sq = unit * unit;
        for (int i = 0; i < static_cast<int>(red.points.size()); ++i) {
            Pt ci = cell_of(red.points[i]);
            for (int64_t dx = -1; dx <= 1; ++dx)
                for (int64_t dy = -1; dy <= 1; ++dy) {
                    auto it = cells.find(Pt{ci.x + dx, ci.y + dy});
                    if (it == cells.end()) continue;
                    for (int j : it->second) {
                        if (j <= i) continue;
                        if (dist2(red.points[i], red.points[j]) > unit_sq) continue;
                        const Provenance &a = red.provenance[i], &b = red.provenance[j];
                        bool ok = false;
                        if (a.kind != Provenance::Kind::wire && b.kind != Provenance::Kind::wire) {
                            ok = a.kind == b.kind && a.owner == b.owner;
                        } else if (a.kind == Provenance::Kind::wire &&
                                   b.kind == Provenance::Kind::wire) {
                            ok = a.owner == b.owner && std::abs(i - j) == 1 &&
                                 wire_of(i) == wire_of(j);
                        } else {
                            int wi = a.kind == Provenance::Kind::wire ? i : j;
                            int gi = a.kind == Provenance::Kind::wire ? j : i;
                            const PlacedWire* w = wire_of(wi);
                            if (w) {
                                int rel = wi - w->point_offset;
                                int gadget = red.provenance[gi].kind == Provenance::Kind::variable
                                                 ? red.provenance[gi].owner
                                                 : f.num_vars + red.provenance[gi].owner;
                                ok = (rel == 0 && gadget == w->var_gadget) ||
                                     (rel == w->count - 1 && gadget == w->clause_gadget);
                            }
                        }
                        if (!ok)
                            throw PlacementError(
                                "reduce: unintended unit contact near (" +
                                std::to_string(red.points[i].x) + "," +
                                std::to_string(red.points[i].y) + ")");
                    }
                }
        }
    }
    return red;
}

namespace {

std::vector<int> gadget_state(const ReductionOutput& red, int gi, const Assignment& a) {
    const PlacedGadget& pg = red.gadgets[gi];
    int k = red.k;
    int nv = red.formula.num_vars;
    std::vector<int> e(pg.tpl.ports.size(), 0);
    if (gi < nv) {
        if (!a[gi]) return e;
        for (size_t p = 0; p < pg.tpl.ports.size(); ++p) {
            if (k == 3)
                e[p] = 1;
            else
                e[p] = pg.tpl.ports[p].pair_side == 0 ? k / 2 : (k + 1) / 2;
        }
        return e;
    }
    // Clause: charge arriving from each wire's variable end.
    for (size_t p = 0; p < pg.tpl.ports.size(); ++p) {
        int w = pg.port_wire[p];
        if (w < 0) throw std::logic_error("witness: clause port without wire");
        const PlacedWire& pw = red.wires[w];
        const PlacedGadget& vg = red.gadgets[pw.var_gadget];
        int ev;
        if (!a[pw.var_gadget]) {
            ev = 0;
        } else if (k == 3) {
            ev = 1;
        } else {
            ev = vg.tpl.ports[pw.var_port].pair_side == 0 ? k / 2 : (k + 1) / 2;
        }
        e[p] = ev == 0 ? 0 : k - ev;
    }
    return e;
}

}  // namespace

Matching witness_matching(const ReductionOutput& red, const Assignment& a) {
    if (static_cast<int>(a.size()) != red.formula.num_vars)
        throw std::invalid_argument("witness_matching: assignment size mismatch");
    if (!satisfies(red.formula, a))
        throw std::invalid_argument("witness_matching: assignment does not satisfy the formula");
    const int k = red.k;
    Matching m;
    m.k = k;
    std::vector<int> wire_evar(red.wires.size(), 0);
    for (int gi = 0; gi < static_cast<int>(red.gadgets.size()); ++gi) {
        const PlacedGadget& pg = red.gadgets[gi];
        std::vector<int> e = gadget_state(red, gi, a);
        const StateEntry* st = pg.cert->find(e);
        if (!st)
            throw std::invalid_argument("witness_matching: gadget state not feasible (" +
                                        pg.tpl.kind + ")");
        int n_i = static_cast<int>(pg.tpl.points.size());
        for (auto& blk : st->witness) {
            std::vector<int> mapped;
            for (int slot : blk) {
                if (slot < n_i) {
                    mapped.push_back(pg.point_offset + slot);
                } else {
                    int p = (slot - n_i) / k, jj = (slot - n_i) % k;
                    int w = pg.port_wire[p];
                    if (w < 0) throw std::logic_error("witness: charged port without wire");
                    const PlacedWire& pw = red.wires[w];
                    bool from_var = pg.port_end[p] == 0;
                    mapped.push_back(pw.point_offset +
                                     (from_var ? jj : pw.count - 1 - jj));
                }
            }
            std::sort(mapped.begin(), mapped.end());
            m.blocks.push_back(std::move(mapped));
        }
        // Record the charge this gadget pushes into each wire.
        for (size_t p = 0; p < pg.tpl.ports.size(); ++p) {
            int w = pg.port_wire[p];
            if (w >= 0 && pg.port_end[p] == 0) wire_evar[w] = e[p];
        }
    }
    for (size_t w = 0; w < red.wires.size(); ++w) {
        const PlacedWire& pw = red.wires[w];
        int ea = wire_evar[w];
        int eb = ea == 0 ? 0 : red.k - ea;
        for (int at = ea; at + k <= pw.count - eb; at += k) {
            std::vector<int> blk;
            for (int j = 0; j < k; ++j) blk.push_back(pw.point_offset + at + j);
            m.blocks.push_back(std::move(blk));
        }
    }
    std::sort(m.blocks.begin(), m.blocks.end());
    return m;
}

Assignment decode_assignment(const ReductionOutput& red, const Matching& match) {
    const int k = red.k;
    std::vector<int> block_of(red.points.size(), -1);
    for (int b = 0; b < static_cast<int>(match.blocks.size()); ++b)
        for (int i : match.blocks[b]) {
            if (i < 0 || i >= static_cast<int>(red.points.size()) || block_of[i] >= 0)
                throw std::invalid_argument("decode_assignment: not a partition");
            block_of[i] = b;
        }
    Assignment a(red.formula.num_vars, false);
    for (int v = 0; v < red.formula.num_vars; ++v) {
        const PlacedGadget& pg = red.gadgets[v];
        std::vector<int> e(pg.tpl.ports.size(), 0);
        for (size_t p = 0; p < pg.tpl.ports.size(); ++p) {
            int w = pg.port_wire[p];
            if (w < 0) continue;
            const PlacedWire& pw = red.wires[w];
            bool from_var = pg.port_end[p] == 0;
            int first = from_var ? pw.point_offset : pw.point_offset + pw.count - 1;
            int step = from_var ? 1 : -1;
            int blk = block_of[first];
            // Straddling block: contains gadget-internal points.
            bool straddles = false;
            for (int i : match.blocks[blk])
                if (i >= pg.point_offset &&
                    i < pg.point_offset + static_cast<int>(pg.tpl.points.size()))
                    straddles = true;
            if (!straddles) {
                e[p] = 0;
                continue;
            }
            int cnt = 0;
            for (int idx = first;
                 idx >= pw.point_offset && idx < pw.point_offset + pw.count && block_of[idx] == blk;
                 idx += step)
                ++cnt;
            e[p] = cnt;
        }
        const StateEntry* st = pg.cert->find(e);
        if (!st)
            throw std::logic_error("decode_assignment: variable gadget in uncertified state");
        bool all_zero = true;
        for (int x : e) all_zero = all_zero && x == 0;
        a[v] = !all_zero;
    }
    return a;
}

std::string serialize_points(const ReductionOutput& red) {
    std::ostringstream os;
    os << "p ekm k=" << red.k << " mode=" << (red.mode == ReduceMode::grid ? "grid" : "path")
       << " n=" << red.points.size() << " target=" << red.target.str()
       << " t=" << red.t_digits << "\n";
    for (auto& p : red.points) {
        if (red.t_digits == 0) {
            os << p.x << " " << p.y << "\n";
        } else {
            auto fixp = [&](int64_t v) {
                int64_t u = red.unit;
                int64_t ip = v >= 0 ? v / u : -((-v + u - 1) / u);
                int64_t frac = v - ip * u;
                std::string fs = std::to_string(frac);
                fs.insert(fs.begin(), red.t_digits - fs.size(), '0');
                return std::to_string(ip) + "." + fs;
            };
            os << fixp(p.x) << " " << fixp(p.y) << "\n";
        }
    }
    return os.str();
}

std::string serialize_provenance(const ReductionOutput& red) {
    std::ostringstream os;
    for (size_t i = 0; i < red.provenance.size(); ++i) {
        const auto& pr = red.provenance[i];
        const char* kind = pr.kind == Provenance::Kind::variable ? "variable"
                           : pr.kind == Provenance::Kind::clause ? "clause"
                                                                 : "wire";
        os << i << " " << kind << " " << pr.owner << "\n";
    }
    return os.str();
}

std::string serialize_matching(const Matching& m) {
    std::ostringstream os;
    for (auto& b : m.blocks) {
        for (size_t i = 0; i < b.size(); ++i) os << (i ? " " : "") << b[i];
        os << "\n";
    }
    return os.str();
}

Matching parse_matching(const std::string& text, int k) {
    Matching m;
    m.k = k;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<int> blk;
        int v;
        while (ls >> v) blk.push_back(v);
        if (blk.empty()) continue;
        if (static_cast<int>(blk.size()) != k)
            throw std::invalid_argument("matching file: block size != k");
        m.blocks.push_back(blk);
    }
    return m;
}

PointFile parse_points(const std::string& text) {
    PointFile pf;
    std::istringstream in(text);
    std::string line;
    bool saw_header = false;
    int64_t count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        if (!saw_header) {
            std::string tok, fmt;
            ls >> tok >> fmt;
            if (tok != "p" || fmt != "ekm")
                throw std::invalid_argument("point file: missing 'p ekm' header");
            std::string kv;
            while (ls >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) continue;
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "k") pf.k = std::stoi(val);
                else if (key == "mode")
                    pf.mode = val == "grid" ? ReduceMode::grid : ReduceMode::path_variant;
                else if (key == "n") count = std::stoll(val);
                else if (key == "t") pf.t_digits = std::stoi(val);
                else if (key == "target") {
                    auto slash = val.find('/');
                    if (slash == std::string::npos) pf.target = Rat(std::stoll(val));
                    else
                        pf.target = Rat(std::stoll(val.substr(0, slash)),
                                        std::stoll(val.substr(slash + 1)));
                }
            }
            pf.unit = 1;
            for (int i = 0; i < pf.t_digits; ++i) pf.unit *= 10;
            saw_header = true;
            continue;
        }
        auto parse_coord = [&](const std::string& sc) -> int64_t {
            auto dot = sc.find('.');
            if (dot == std::string::npos) return std::stoll(sc) * pf.unit;
            std::string ip = sc.substr(0, dot), fp = sc.substr(dot + 1);
            if (static_cast<int>(fp.size()) != pf.t_digits)
                throw std::invalid_argument("point file: wrong fixed-point precision");
            int64_t v = std::stoll(ip.empty() || ip == "-" ? ip + "0" : ip);
            bool neg = !ip.empty() && ip[0] == '-';
            int64_t f = std::stoll(fp);
            return v * pf.unit + (neg ? -f : f);
        };
        std::string xs, ys;
        if (!(ls >> xs >> ys)) throw std::invalid_argument("point file: bad point line");
        pf.points.push_back({parse_coord(xs), parse_coord(ys)});
    }
    if (count != static_cast<int64_t>(pf.points.size()))
        throw std::invalid_argument("point file: count mismatch");
    return pf;
}

}  // namespace ekm
