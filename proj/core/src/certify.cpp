#include "ekm/certify.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace ekm {

const StateEntry* Certification::find(const std::vector<int>& e) const {
    for (auto& s : states)
        if (s.e == e) return &s;
    return nullptr;
}

std::vector<const StateEntry*> Certification::within_spec(const GadgetTemplate& t) const {
    std::vector<const StateEntry*> out;
    for (auto& s : states) {
        bool ok = true;
        for (size_t p = 0; p < t.ports.size() && ok; ++p) {
            const auto& spec = t.ports[p].charge_spec;
            ok = std::find(spec.begin(), spec.end(), s.e[p]) != spec.end();
        }
        if (ok) out.push_back(&s);
    }
    return out;
}

std::string Certification::report() const {
    std::ostringstream os;
    os << "certification " << kind << " k=" << k
       << " mode=" << (mode == WeightMode::mst ? "mst" : "path") << " checksum=" << std::hex
       << checksum << std::dec << "\n";
    os << "feasible states (outward charge per port; inflow in parens):\n";
    for (auto& s : states) {
        os << "  (";
        for (size_t i = 0; i < s.e.size(); ++i) os << (i ? "," : "") << s.e[i];
        os << ")  in=(";
        for (size_t i = 0; i < s.e.size(); ++i) os << (i ? "," : "") << inflow_of(s.e[i], k);
        os << ")  matchings=" << s.cover_count << "\n";
    }
    return os.str();
}

Certification certify_gadget(const GadgetTemplate& t, const CertifyOptions& opts) {
    const int k = t.k;
    const int n_internal = static_cast<int>(t.points.size());
    const int nports = static_cast<int>(t.ports.size());

    std::vector<std::vector<int>> domains = opts.domains;
    if (domains.empty()) {
        domains.assign(nports, {});
        for (auto& d : domains)
            for (int e = 0; e < k; ++e) d.push_back(e);
    }
    if (static_cast<int>(domains.size()) != nports)
        throw std::invalid_argument("certify_gadget: domain count mismatch");

    // Port isolation premise, checked at maximal grey extension: a grey's
    // unit-distance neighbors are exactly its wire line predecessors and
    // successors plus, for the first grey, a single internal anchor.
    {
        std::vector<Pt> all = t.points;
        std::vector<std::pair<int, int>> grey_of;  // (port, j) per appended point
        for (int p = 0; p < nports; ++p) {
            int mx = 0;
            for (int e : domains[p]) mx = std::max(mx, e);
            for (int j = 0; j < mx; ++j)
                all.push_back(t.ports[p].pos + t.ports[p].dir * (t.unit * j)),
                    grey_of.emplace_back(p, j);
        }
        int64_t unit_sq = t.unit * t.unit;
        for (size_t gi = 0; gi < grey_of.size(); ++gi) {
            Pt g = all[n_internal + gi];
            auto [p, j] = grey_of[gi];
            int anchors = 0;
            for (int i = 0; i < static_cast<int>(all.size()); ++i) {
                if (i == n_internal + static_cast<int>(gi)) continue;
                if (dist2(all[i], g) > unit_sq) continue;
                if (dist2(all[i], g) < unit_sq && i < n_internal)
                    throw std::logic_error("certify_gadget: internal point closer than one unit "
                                           "to a wire grey (" + t.kind + ")");
                if (i < n_internal) {
                    if (j != 0)
                        throw std::logic_error("certify_gadget: internal anchor touches a deep "
                                               "grey (" + t.kind + ")");
                    ++anchors;
                } else {
                    auto [p2, j2] = grey_of[i - n_internal];
                    if (p2 != p || std::abs(j2 - j) != 1)
                        throw std::logic_error("certify_gadget: wires of different ports touch (" +
                                               t.kind + ")");
                }
            }
            if (j == 0 && anchors != 1)
                throw std::logic_error("certify_gadget: port of " + t.kind + " needs exactly one "
                                       "internal anchor, found " + std::to_string(anchors));
        }
    }

    Certification cert;
    cert.kind = t.kind;
    cert.k = k;
    cert.mode = opts.mode;
    cert.checksum = t.checksum();
    cert.domains = domains;

    std::vector<int> e(nports, 0);
    std::vector<size_t> idx(nports, 0);
    auto advance = [&]() {
        for (int p = 0; p < nports; ++p) {
            if (++idx[p] < domains[p].size()) return true;
            idx[p] = 0;
        }
        return false;
    };
    while (true) {
        for (int p = 0; p < nports; ++p) e[p] = domains[p][idx[p]];
        int total = n_internal;
        for (int p = 0; p < nports; ++p) total += e[p];
        if (total % k == 0) {
            std::vector<Pt> pts = t.points;
            std::vector<int> slot_of;  // appended point -> slot id
            for (int p = 0; p < nports; ++p)
                for (int j = 0; j < e[p]; ++j) {
                    pts.push_back(t.ports[p].pos + t.ports[p].dir * (t.unit * j));
                    slot_of.push_back(grey_slot(n_internal, k, p, j));
                }
            if (static_cast<int>(pts.size()) > opts.max_points)
                throw std::invalid_argument("certify_gadget: search budget exceeded (" +
                                            std::to_string(pts.size()) + " points)");
            Rat bound = Rat(k - 1) + opts.per_block_slack;
            auto cands = candidate_sets(pts, k,
                                        opts.mode == WeightMode::mst ? Rat(k - 1) : bound,
                                        opts.mode, t.unit);
            std::vector<std::vector<int>> witness;
            long long count =
                cover_count(static_cast<int>(pts.size()), cands, opts.count_cap, &witness);
            if (count > 0) {
                StateEntry st;
                st.e = e;
                st.cover_count = count;
                for (auto& block : witness) {
                    std::vector<int> mapped;
                    for (int i : block)
                        mapped.push_back(i < n_internal ? i : slot_of[i - n_internal]);
                    std::sort(mapped.begin(), mapped.end());
                    st.witness.push_back(std::move(mapped));
                }
                std::sort(st.witness.begin(), st.witness.end());
                cert.states.push_back(std::move(st));
            }
        }
        if (nports == 0 || !advance()) break;
    }
    return cert;
}

}  // namespace ekm
