#include "ekm/matcher.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <unordered_map>

namespace ekm {

WeightExpr mst_weight(std::span<const Pt> pts) {
    WeightExpr w;
    int n = static_cast<int>(pts.size());
    if (n <= 1) return w;
    // Prim with exact squared-distance comparisons. All MSTs share the same
    // multiset of edge weights, so the result is canonical.
    std::vector<bool> in_tree(n, false);
    std::vector<int64_t> best(n, INT64_MAX);
    std::vector<int> best_from(n, -1);
    in_tree[0] = true;
    for (int v = 1; v < n; ++v) best[v] = dist2(pts[0], pts[v]);
    for (int it = 1; it < n; ++it) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!in_tree[v] && (pick < 0 || best[v] < best[pick])) pick = v;
        w.add_sq(best[pick]);
        in_tree[pick] = true;
        for (int v = 0; v < n; ++v)
            if (!in_tree[v]) best[v] = std::min(best[v], dist2(pts[pick], pts[v]));
    }
    return w;
}

WeightExpr path_weight(std::span<const Pt> pts) {
    int n = static_cast<int>(pts.size());
    if (n > 10) throw std::invalid_argument("path_weight: more than 10 points");
    WeightExpr w;
    if (n <= 1) return w;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) d[i][j] = std::sqrt(static_cast<double>(dist2(pts[i], pts[j])));
    double best_d = 1e300;
    std::vector<std::vector<int>> near_best;
    do {
        if (perm.front() > perm.back()) continue;  // path reversal symmetry
        double total = 0;
        for (int i = 0; i + 1 < n; ++i) total += d[perm[i]][perm[i + 1]];
        if (total < best_d - 1e-9) {
            best_d = total;
            near_best.clear();
            near_best.push_back(perm);
        } else if (total <= best_d + 1e-9) {
            near_best.push_back(perm);
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Resolve near-ties exactly.
    WeightExpr best;
    bool have = false;
    for (auto& p : near_best) {
        WeightExpr cand;
        for (int i = 0; i + 1 < n; ++i) cand.add_sq(dist2(pts[p[i]], pts[p[i + 1]]));
        if (!have || WeightExpr::order(cand, best) == WeightExpr::Cmp::less) {
            best = cand;
            have = true;
        }
    }
    return best;
}

WeightExpr block_weight(std::span<const Pt> pts, const std::vector<int>& block, WeightMode mode) {
    std::vector<Pt> sub;
    sub.reserve(block.size());
    for (int i : block) sub.push_back(pts[i]);
    return mode == WeightMode::mst ? mst_weight(sub) : path_weight(sub);
}

WeightExpr matching_weight(std::span<const Pt> pts, const Matching& m, WeightMode mode) {
    WeightExpr total;
    for (auto& b : m.blocks) total += block_weight(pts, b, mode);
    return total;
}

namespace {

// Adjacency under "edge iff squared distance <= sq_limit" (== for units).
std::vector<std::vector<int>> proximity_graph(std::span<const Pt> pts, int64_t sq_limit,
                                              bool exact_unit, int64_t unit_sq) {
    int n = static_cast<int>(pts.size());
    std::unordered_map<Pt, int, PtHash> index;
    index.reserve(n * 2);
    for (int i = 0; i < n; ++i) index[pts[i]] = i;
    std::vector<std::vector<int>> adj(n);
    if (exact_unit) {
        int64_t u = isqrt64(unit_sq);
        for (int i = 0; i < n; ++i)
            for (Pt d : kDirs) {
                auto it = index.find(pts[i] + d * u);
                if (it != index.end()) adj[i].push_back(it->second);
            }
        return adj;
    }
    // General radius: grid hash over cells of the limit radius.
    int64_t r = isqrt64(sq_limit) + 1;
    std::unordered_map<Pt, std::vector<int>, PtHash> cells;
    auto cell_of = [&](const Pt& p) {
        auto fl = [&](int64_t c) { return c >= 0 ? c / r : -((-c + r - 1) / r); };
        return Pt{fl(p.x), fl(p.y)};
    };
    for (int i = 0; i < n; ++i) cells[cell_of(pts[i])].push_back(i);
    for (int i = 0; i < n; ++i) {
        Pt c = cell_of(pts[i]);
        for (int64_t dx = -1; dx <= 1; ++dx)
            for (int64_t dy = -1; dy <= 1; ++dy) {
                auto it = cells.find(Pt{c.x + dx, c.y + dy});
                if (it == cells.end()) continue;
                for (int j : it->second)
                    if (j != i && dist2(pts[i], pts[j]) <= sq_limit) adj[i].push_back(j);
            }
    }
    return adj;
}

// Connected k-subsets of the given graph, each emitted once (rooted at its
// smallest index, grown with the standard extension/exclusion scheme).
void connected_subsets(const std::vector<std::vector<int>>& adj, int k,
                       std::vector<std::vector<int>>& out) {
    int n = static_cast<int>(adj.size());
    std::vector<int> subset, ext;
    std::vector<char> in_sub(n, 0), banned(n, 0);
    std::function<void(int)> grow = [&](int root) {
        if (static_cast<int>(subset.size()) == k) {
            auto s = subset;
            std::sort(s.begin(), s.end());
            out.push_back(std::move(s));
            return;
        }
        // Extension: neighbors of the subset, index > root, not banned.
        std::vector<int> frontier;
        for (int v : subset)
            for (int w : adj[v])
                if (w > root && !in_sub[w] && !banned[w]) frontier.push_back(w);
        std::sort(frontier.begin(), frontier.end());
        frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
        std::vector<int> banned_here;
        for (int w : frontier) {
            if (banned[w]) continue;
            subset.push_back(w);
            in_sub[w] = 1;
            grow(root);
            in_sub[w] = 0;
            subset.pop_back();
            banned[w] = 1;
            banned_here.push_back(w);
        }
        for (int w : banned_here) banned[w] = 0;
    };
    for (int r = 0; r < n; ++r) {
        subset = {r};
        in_sub[r] = 1;
        grow(r);
        in_sub[r] = 0;
    }
}

}  // namespace

std::vector<std::vector<int>> candidate_sets(std::span<const Pt> pts, int k,
                                             Rat per_block_bound, WeightMode mode,
                                             int64_t unit_scale) {
    std::vector<std::vector<int>> out;
    if (pts.empty()) return out;
    int64_t unit_sq = unit_scale * unit_scale;
    if (mode == WeightMode::mst) {
        if (!(per_block_bound == Rat(k - 1)))
            throw std::invalid_argument("candidate_sets: mst mode expects the tight bound k-1");
        auto adj = proximity_graph(pts, unit_sq, true, unit_sq);
        connected_subsets(adj, k, out);
        return out;
    }
    // Path mode: edges longer than bound - (k-2) units cannot appear in a
    // tight path (the other k-2 edges are at least one unit each).
    Rat tau = per_block_bound - Rat(k - 2);
    if (!(Rat(0) < tau)) return out;
    // dist <= tau * unit  <=>  dist2 * tau_den^2 <= tau_num^2 * unit_sq
    __int128 num2 = static_cast<__int128>(tau.num) * tau.num * unit_sq;
    __int128 den2 = static_cast<__int128>(tau.den) * tau.den;
    int64_t sq_limit = static_cast<int64_t>(num2 / den2);  // floor is safe as a superset? no:
    // use exact check below; the grid hash radius just needs an upper bound.
    auto adj_all = proximity_graph(pts, sq_limit + 2, false, unit_sq);
    // Filter edges exactly.
    std::vector<std::vector<int>> adj(pts.size());
    for (size_t i = 0; i < pts.size(); ++i)
        for (int j : adj_all[i]) {
            __int128 lhs = static_cast<__int128>(dist2(pts[i], pts[j])) * den2;
            if (lhs <= num2) adj[i].push_back(j);
        }
    std::vector<std::vector<int>> conn;
    connected_subsets(adj, k, conn);
    // Keep subsets whose minimum Hamiltonian path meets the bound.
    Rat bound_scaled(per_block_bound.num * unit_scale, per_block_bound.den);
    for (auto& s : conn) {
        WeightExpr pw = block_weight(pts, s, WeightMode::path);
        auto c = pw.compare(bound_scaled);
        if (c == WeightExpr::Cmp::less || c == WeightExpr::Cmp::equal) out.push_back(s);
    }
    return out;
}

namespace {

// ---- exact cover over candidate blocks with unit propagation -------------
struct CoverSolver {
    int n, k;
    const std::vector<std::vector<int>>& cands;
    std::vector<std::vector<int>> point_cands;
    std::vector<char> covered, cand_dead;
    std::vector<int> alive_count;
    std::vector<int> chosen;
    std::chrono::steady_clock::time_point deadline;
    bool has_deadline;
    uint64_t nodes = 0;
    bool timed_out = false;

    CoverSolver(int n_, int k_, const std::vector<std::vector<int>>& cands_,
                std::chrono::milliseconds budget)
        : n(n_), k(k_), cands(cands_) {
        point_cands.resize(n);
        for (int c = 0; c < static_cast<int>(cands.size()); ++c)
            for (int p : cands[c]) point_cands[p].push_back(c);
        covered.assign(n, 0);
        cand_dead.assign(cands.size(), 0);
        alive_count.assign(n, 0);
        for (int p = 0; p < n; ++p) alive_count[p] = static_cast<int>(point_cands[p].size());
        has_deadline = budget != std::chrono::milliseconds::max();
        if (has_deadline) deadline = std::chrono::steady_clock::now() + budget;
    }

    struct TrailEntry {
        enum Kind { point_covered, cand_killed } kind;
        int id;
    };
    std::vector<TrailEntry> trail;

    bool kill_cand(int c) {
        if (cand_dead[c]) return true;
        cand_dead[c] = 1;
        trail.push_back({TrailEntry::cand_killed, c});
        for (int p : cands[c]) {
            if (covered[p]) continue;
            if (--alive_count[p] == 0) return false;
        }
        return true;
    }

    bool place(int c, std::vector<int>& forced_queue) {
        chosen.push_back(c);
        for (int p : cands[c]) {
            covered[p] = 1;
            trail.push_back({TrailEntry::point_covered, p});
        }
        for (int p : cands[c])
            for (int c2 : point_cands[p])
                if (!cand_dead[c2]) {
                    bool shares_uncovered_ok = true;
                    // c2 now conflicts with the cover; kill it.
                    if (!kill_cand(c2)) shares_uncovered_ok = false;
                    if (!shares_uncovered_ok) return false;
                }
        // Collect newly-forced points (exactly one alive candidate).
        for (int p : cands[c])
            for (int c2 : point_cands[p])
                for (int q : cands[c2])
                    if (!covered[q] && alive_count[q] == 1) forced_queue.push_back(q);
        return true;
    }

    void undo_to(size_t mark, size_t chosen_mark) {
        while (trail.size() > mark) {
            auto [kind, id] = trail.back();
            trail.pop_back();
            if (kind == TrailEntry::point_covered) {
                covered[id] = 0;
            } else {
                cand_dead[id] = 0;
                for (int p : cands[id])
                    if (!covered[p]) ++alive_count[p];
            }
        }
        chosen.resize(chosen_mark);
    }

    int pick_point() const {
        int best = -1;
        for (int p = 0; p < n; ++p) {
            if (covered[p]) continue;
            if (best < 0 || alive_count[p] < alive_count[best]) best = p;
        }
        return best;
    }

    int unique_alive_cand(int p) const {
        for (int c : point_cands[p])
            if (!cand_dead[c]) return c;
        return -1;
    }

    // Returns true when a full cover is found (chosen holds it).
    bool search() {
        if (has_deadline && (++nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        int p = pick_point();
        if (p < 0) return true;
        if (alive_count[p] == 0) return false;
        std::vector<int> options;
        for (int c : point_cands[p])
            if (!cand_dead[c]) options.push_back(c);
        for (int c : options) {
            size_t mark = trail.size(), cmark = chosen.size();
            std::vector<int> forced;
            bool ok = place(c, forced);
            // Unit propagation on forced points.
            for (size_t qi = 0; ok && qi < forced.size(); ++qi) {
                int q = forced[qi];
                if (covered[q]) continue;
                if (alive_count[q] == 0) { ok = false; break; }
                if (alive_count[q] != 1) continue;
                int fc = unique_alive_cand(q);
                if (fc < 0) { ok = false; break; }
                ok = place(fc, forced);
            }
            if (ok && search()) return true;
            if (timed_out) return false;
            undo_to(mark, cmark);
        }
        return false;
    }
};

Rat tight_total(int k, int64_t m, int64_t unit_scale) {
    return Rat((k - 1) * m * unit_scale);
}

// Exhaustive cover counting on the same machinery (gadget-scale inputs).
long long count_all(CoverSolver& s, long long cap, std::vector<int>* first) {
    int p = s.pick_point();
    if (p < 0) {
        if (first && first->empty()) *first = s.chosen;
        return 1;
    }
    if (s.alive_count[p] == 0) return 0;
    long long total = 0;
    std::vector<int> options;
    for (int c : s.point_cands[p])
        if (!s.cand_dead[c]) options.push_back(c);
    for (int c : options) {
        size_t mark = s.trail.size(), cmark = s.chosen.size();
        std::vector<int> forced;
        bool ok = s.place(c, forced);
        for (size_t qi = 0; ok && qi < forced.size(); ++qi) {
            int q = forced[qi];
            if (s.covered[q]) continue;
            if (s.alive_count[q] == 0) { ok = false; break; }
            if (s.alive_count[q] != 1) continue;
            int fc = s.unique_alive_cand(q);
            if (fc < 0) { ok = false; break; }
            ok = s.place(fc, forced);
        }
        if (ok) total += count_all(s, cap - total, first);
        s.undo_to(mark, cmark);
        if (total >= cap) return total;
    }
    return total;
}

// All partitions of indices into k-blocks (lowest free index anchors each
// block), invoking fn on each.
void enumerate_partitions(int n, int k, std::vector<std::vector<int>>& blocks,
                          std::vector<char>& used,
                          const std::function<void(const std::vector<std::vector<int>>&)>& fn) {
    int anchor = -1;
    for (int i = 0; i < n; ++i)
        if (!used[i]) { anchor = i; break; }
    if (anchor < 0) {
        fn(blocks);
        return;
    }
    std::vector<int> rest;
    for (int i = anchor + 1; i < n; ++i)
        if (!used[i]) rest.push_back(i);
    int need = k - 1;
    std::vector<int> pick(need);
    std::function<void(int, int)> combos = [&](int start, int got) {
        if (got == need) {
            std::vector<int> block{anchor};
            for (int j = 0; j < need; ++j) block.push_back(rest[pick[j]]);
            for (int v : block) used[v] = 1;
            blocks.push_back(block);
            enumerate_partitions(n, k, blocks, used, fn);
            blocks.pop_back();
            for (int v : block) used[v] = 0;
            return;
        }
        for (int i = start; i <= static_cast<int>(rest.size()) - (need - got); ++i) {
            pick[got] = i;
            combos(i + 1, got + 1);
        }
    };
    if (need == 0) {
        std::vector<int> block{anchor};
        used[anchor] = 1;
        blocks.push_back(block);
        enumerate_partitions(n, k, blocks, used, fn);
        blocks.pop_back();
        used[anchor] = 0;
        return;
    }
    combos(0, 0);
}

}  // namespace

CoverResult cover_first(int n, const std::vector<std::vector<int>>& cands,
                        std::chrono::milliseconds budget) {
    CoverSolver solver(n, 0, cands, budget);
    CoverResult res;
    res.found = solver.search();
    res.timed_out = solver.timed_out;
    if (res.found) res.chosen = solver.chosen;
    return res;
}

long long cover_count(int n, const std::vector<std::vector<int>>& cands, long long cap,
                      std::vector<std::vector<int>>* first_witness) {
    CoverSolver solver(n, 0, cands, std::chrono::milliseconds::max());
    std::vector<int> first;
    long long total = count_all(solver, cap, first_witness ? &first : nullptr);
    if (first_witness) {
        first_witness->clear();
        for (int c : first) first_witness->push_back(cands[c]);
    }
    return total;
}

DecideResult exact_decide(std::span<const Pt> pts, int k, Rat w, WeightMode mode,
                          const DecideOptions& opts) {
    DecideResult res;
    int n = static_cast<int>(pts.size());
    if (n % k != 0) throw std::invalid_argument("exact_decide: |points| not divisible by k");
    if (n == 0) {
        res.status = w >= Rat(0) ? DecideResult::Status::found : DecideResult::Status::infeasible;
        if (res.status == DecideResult::Status::found) res.matching = Matching{k, {}};
        return res;
    }
    int64_t m = n / k;
    Rat tight = tight_total(k, m, opts.unit_scale);
    Rat slack = w - tight;
    // Tight covers: every block must be a minimal-weight block. In mst mode a
    // slack below one grid unit still forces unit-connected blocks (the next
    // achievable block weight is k-2+sqrt(2) units). In path mode the same
    // holds while slack stays below sqrt(2)-1 units.
    bool tightish = !(slack < Rat(0)) && slack < Rat(opts.unit_scale, 3);
    if (tightish) {
        Rat per_block = mode == WeightMode::mst
                            ? Rat(k - 1)
                            : Rat(k - 1) + Rat(slack.num, slack.den * opts.unit_scale);
        auto cands = candidate_sets(pts, k, per_block, mode, opts.unit_scale);
        CoverSolver solver(n, k, cands, opts.budget);
        bool found = solver.search();
        if (solver.timed_out) {
            res.status = DecideResult::Status::budget_exceeded;
            return res;
        }
        if (!found) {
            res.status = DecideResult::Status::infeasible;
            return res;
        }
        Matching match;
        match.k = k;
        for (int c : solver.chosen) match.blocks.push_back(cands[c]);
        std::sort(match.blocks.begin(), match.blocks.end());
        // Belt and braces: certify the cover meets the threshold.
        auto rep = verify_matching(pts, match, w, mode);
        if (rep.verdict != Verdict::leq)
            throw std::logic_error("exact_decide: tight cover exceeded threshold");
        res.status = DecideResult::Status::found;
        res.matching = std::move(match);
        return res;
    }

    // General threshold: branch and bound over all k-subsets (small inputs).
    if (n > 30)
        throw std::invalid_argument("exact_decide: non-tight threshold limited to 30 points");
    double wd = static_cast<double>(w.num) / static_cast<double>(w.den);
    // Safe per-block lower bound: (k-1) * shortest pairwise distance.
    double dmin = 1e300;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            dmin = std::min(dmin, std::sqrt(static_cast<double>(dist2(pts[i], pts[j]))));
    double block_lb = (k - 1) * dmin;

    auto deadline = std::chrono::steady_clock::now() + opts.budget;
    bool has_deadline = opts.budget != std::chrono::milliseconds::max();
    std::vector<char> used(n, 0);
    std::vector<std::vector<int>> blocks;
    Matching found;
    bool have = false, timed_out = false;
    uint64_t nodes = 0;

    std::function<bool(double, int)> rec = [&](double acc, int blocks_left) -> bool {
        if (has_deadline && (++nodes & 511) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return false;
        }
        int anchor = -1;
        for (int i = 0; i < n; ++i)
            if (!used[i]) { anchor = i; break; }
        if (anchor < 0) {
            Matching m2;
            m2.k = k;
            m2.blocks = blocks;
            auto rep = verify_matching(pts, m2, w, mode);
            if (rep.verdict == Verdict::leq) {
                found = std::move(m2);
                have = true;
                return true;
            }
            return false;
        }
        std::vector<int> rest;
        for (int i = anchor + 1; i < n; ++i)
            if (!used[i]) rest.push_back(i);
        int need = k - 1;
        std::vector<int> pick;
        std::function<bool(int)> combos = [&](int start) -> bool {
            if (static_cast<int>(pick.size()) == need) {
                std::vector<int> block{anchor};
                block.insert(block.end(), pick.begin(), pick.end());
                double bw = block_weight(pts, block, mode).approx();
                double lb = acc + bw + (blocks_left - 1) * block_lb;
                if (lb > wd + 1e-6) return false;
                for (int v : block) used[v] = 1;
                blocks.push_back(block);
                bool done = rec(acc + bw, blocks_left - 1);
                blocks.pop_back();
                for (int v : block) used[v] = 0;
                return done;
            }
            for (int i = start; i < static_cast<int>(rest.size()); ++i) {
                if (static_cast<int>(rest.size()) - i < need - static_cast<int>(pick.size()))
                    break;
                pick.push_back(rest[i]);
                if (combos(i + 1)) return true;
                pick.pop_back();
                if (timed_out) return false;
            }
            return false;
        };
        return combos(0);
    };
    bool ok = rec(0.0, static_cast<int>(m));
    if (timed_out && !ok) {
        res.status = DecideResult::Status::budget_exceeded;
        return res;
    }
    if (!ok) {
        res.status = DecideResult::Status::infeasible;
        return res;
    }
    std::sort(found.blocks.begin(), found.blocks.end());
    res.status = DecideResult::Status::found;
    res.matching = std::move(found);
    return res;
}

Matching exact_solve_bruteforce(std::span<const Pt> pts, int k, WeightMode mode) {
    int n = static_cast<int>(pts.size());
    if (n % k != 0) throw std::invalid_argument("exact_solve_bruteforce: size not divisible by k");
    int limit = k <= 3 ? 12 : 10;
    if (n > limit) throw std::invalid_argument("exact_solve_bruteforce: too many points");
    Matching best;
    best.k = k;
    WeightExpr best_w;
    bool have = false;
    std::vector<std::vector<int>> blocks;
    std::vector<char> used(n, 0);
    enumerate_partitions(n, k, blocks, used, [&](const std::vector<std::vector<int>>& bl) {
        Matching m;
        m.k = k;
        m.blocks = bl;
        WeightExpr w = matching_weight(pts, m, mode);
        if (!have || WeightExpr::order(w, best_w) == WeightExpr::Cmp::less) {
            best = m;
            best_w = w;
            have = true;
        }
    });
    return best;
}

Matching greedy_local_search(std::span<const Pt> pts, int k, uint64_t seed) {
    int n = static_cast<int>(pts.size());
    if (n % k != 0) throw std::invalid_argument("greedy_local_search: size not divisible by k");
    Matching m;
    m.k = k;
    if (n == 0) return m;
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<char> assigned(n, 0);
    for (int idx : order) {
        if (assigned[idx]) continue;
        std::vector<int> block{idx};
        assigned[idx] = 1;
        while (static_cast<int>(block.size()) < k) {
            int best = -1;
            int64_t best_d = INT64_MAX;
            for (int j = 0; j < n; ++j) {
                if (assigned[j]) continue;
                int64_t d = INT64_MAX;
                for (int b : block) d = std::min(d, dist2(pts[b], pts[j]));
                if (d < best_d || (d == best_d && (best < 0 || j < best))) {
                    best_d = d;
                    best = j;
                }
            }
            block.push_back(best);
            assigned[best] = 1;
        }
        std::sort(block.begin(), block.end());
        m.blocks.push_back(block);
    }
    // 2-swap local search until no single exchange improves the weight.
    auto bw = [&](const std::vector<int>& b) { return block_weight(pts, b, WeightMode::mst).approx(); };
    bool improved = true;
    while (improved) {
        improved = false;
        for (size_t i = 0; i < m.blocks.size() && !improved; ++i)
            for (size_t j = i + 1; j < m.blocks.size() && !improved; ++j) {
                double cur = bw(m.blocks[i]) + bw(m.blocks[j]);
                for (int a = 0; a < k && !improved; ++a)
                    for (int b = 0; b < k && !improved; ++b) {
                        auto bi = m.blocks[i], bj = m.blocks[j];
                        std::swap(bi[a], bj[b]);
                        double alt = bw(bi) + bw(bj);
                        if (alt < cur - 1e-9) {
                            std::sort(bi.begin(), bi.end());
                            std::sort(bj.begin(), bj.end());
                            m.blocks[i] = bi;
                            m.blocks[j] = bj;
                            improved = true;
                        }
                    }
            }
    }
    std::sort(m.blocks.begin(), m.blocks.end());
    return m;
}

VerifyReport verify_matching(std::span<const Pt> pts, const Matching& m, Rat w,
                             WeightMode mode, int max_digits) {
    VerifyReport rep;
    int n = static_cast<int>(pts.size());
    std::vector<char> seen(n, 0);
    for (auto& b : m.blocks) {
        if (static_cast<int>(b.size()) != m.k) {
            rep.error = "block size != k";
            return rep;
        }
        for (int i : b) {
            if (i < 0 || i >= n || seen[i]) {
                rep.error = "indices do not partition the point set";
                return rep;
            }
            seen[i] = 1;
        }
    }
    for (int i = 0; i < n; ++i)
        if (!seen[i]) {
            rep.error = "indices do not partition the point set";
            return rep;
        }
    rep.valid_partition = true;
    rep.total = matching_weight(pts, m, mode);
    switch (rep.total.compare(w, max_digits)) {
        case WeightExpr::Cmp::less:
        case WeightExpr::Cmp::equal:
            rep.verdict = Verdict::leq;
            break;
        case WeightExpr::Cmp::greater:
            rep.verdict = Verdict::gt;
            break;
        default:
            rep.verdict = Verdict::undecidable_at_precision;
    }
    return rep;
}

}  // namespace ekm
