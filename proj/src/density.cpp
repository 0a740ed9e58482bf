#include "motzkin/density.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <limits>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <vector>

namespace motzkin {

namespace {

using u64 = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr i64 kNeg = std::numeric_limits<i64>::min() / 4;
constexpr i64 kPrefixStateCap = i64{1} << 22;

struct Deadline {
    std::optional<Clock::time_point> at;
    explicit Deadline(std::optional<double> seconds) {
        if (seconds)
            at = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(*seconds));
    }
    void check() const {
        if (at && Clock::now() > *at)
            fail(errc::time_budget_exceeded, "density computation exceeded its time budget");
    }
};

// ---------------------------------------------------------------------------
// Prefix dynamic program. State: the membership bits of the last w positions,
// w = largest element <= k_max (elements beyond the prefix cannot constrain
// it). Bit j of the window holds position p-1-j once position p is next.

struct PrefixDpSetup {
    std::vector<i64> relevant;
    i64 w = 0;
    u64 mask = 0;
    u64 conflict = 0; // bit d-1 per relevant element d
};

PrefixDpSetup prefix_setup(const DifferenceSet& M, i64 k_max) {
    PrefixDpSetup s;
    for (i64 e : M.elements())
        if (e <= k_max) s.relevant.push_back(e);
    if (s.relevant.empty()) return s;
    s.w = s.relevant.back();
    if (s.w > 62)
        fail(errc::state_cap_exceeded,
             "prefix window wider than 62 bits (largest relevant element " +
                 std::to_string(s.w) + ")");
    s.mask = (u64{1} << s.w) - 1;
    for (i64 d : s.relevant) s.conflict |= u64{1} << (d - 1);
    return s;
}

} // namespace

std::vector<i64> mset_prefix_counts(const DifferenceSet& M, i64 k_max) {
    if (k_max < 0) fail(errc::invalid_input, "prefix length must be >= 0");
    std::vector<i64> f;
    f.reserve(static_cast<std::size_t>(k_max) + 1);
    f.push_back(1); // S = {0}
    if (k_max == 0) return f;

    PrefixDpSetup s = prefix_setup(M, k_max);
    if (s.relevant.empty()) {
        for (i64 k = 1; k <= k_max; ++k) f.push_back(k + 1);
        return f;
    }

    std::unordered_map<u64, i64> cur;
    cur.emplace(u64{1}, 1); // position 0 is always taken
    std::unordered_map<u64, i64> next;
    for (i64 p = 1; p <= k_max; ++p) {
        next.clear();
        next.reserve(cur.size() * 2);
        i64 best = 0;
        for (auto [win, cnt] : cur) {
            u64 w0 = (win << 1) & s.mask;
            auto [it0, neu0] = next.try_emplace(w0, cnt);
            if (!neu0 && it0->second < cnt) it0->second = cnt;
            if (it0->second > best) best = it0->second;
            if (!(win & s.conflict)) {
                u64 w1 = w0 | 1;
                auto [it1, neu1] = next.try_emplace(w1, cnt + 1);
                if (!neu1 && it1->second < cnt + 1) it1->second = cnt + 1;
                if (it1->second > best) best = it1->second;
            }
        }
        if (static_cast<i64>(next.size()) > kPrefixStateCap) return f; // truncated range
        cur.swap(next);
        f.push_back(best);
    }
    return f;
}

PrefixResult max_mset_prefix(const DifferenceSet& M, i64 k) {
    if (k < 0) fail(errc::invalid_input, "prefix length must be >= 0");
    PrefixDpSetup s = prefix_setup(M, k);
    if (s.relevant.empty()) {
        PrefixResult r;
        r.count = k + 1;
        for (i64 p = 0; p <= k; ++p) r.witness.push_back(p);
        return r;
    }

    // Keep every layer for reconstruction.
    std::vector<std::unordered_map<u64, i64>> layers(static_cast<std::size_t>(k) + 1);
    layers[0].emplace(u64{1}, 1);
    for (i64 p = 1; p <= k; ++p) {
        auto& cur = layers[static_cast<std::size_t>(p - 1)];
        auto& next = layers[static_cast<std::size_t>(p)];
        next.reserve(cur.size() * 2);
        for (auto [win, cnt] : cur) {
            u64 w0 = (win << 1) & s.mask;
            auto [it0, neu0] = next.try_emplace(w0, cnt);
            if (!neu0 && it0->second < cnt) it0->second = cnt;
            if (!(win & s.conflict)) {
                u64 w1 = w0 | 1;
                auto [it1, neu1] = next.try_emplace(w1, cnt + 1);
                if (!neu1 && it1->second < cnt + 1) it1->second = cnt + 1;
            }
        }
        if (static_cast<i64>(next.size()) > kPrefixStateCap)
            fail(errc::state_cap_exceeded, "prefix state table exceeded the cap");
    }

    // Best final state, smallest window on ties, then walk predecessors.
    u64 win = 0;
    i64 cnt = -1;
    for (auto [w, c] : layers[static_cast<std::size_t>(k)]) {
        if (c > cnt || (c == cnt && w < win)) {
            cnt = c;
            win = w;
        }
    }
    PrefixResult r;
    r.count = cnt;
    for (i64 p = k; p >= 1; --p) {
        i64 b = static_cast<i64>(win & 1);
        if (b) r.witness.push_back(p);
        u64 base = win >> 1;
        u64 hi = u64{1} << (s.w - 1);
        bool found = false;
        for (u64 u : {base, base | hi}) {
            auto it = layers[static_cast<std::size_t>(p - 1)].find(u);
            if (it == layers[static_cast<std::size_t>(p - 1)].end()) continue;
            if (it->second != cnt - b) continue;
            if (b && (u & s.conflict)) continue;
            win = u;
            cnt -= b;
            found = true;
            break;
        }
        if (!found) fail(errc::internal, "prefix witness reconstruction lost its path");
    }
    if (win != 1 || cnt != 1) fail(errc::internal, "prefix witness did not end at position 0");
    r.witness.push_back(0);
    std::reverse(r.witness.begin(), r.witness.end());
    return r;
}

HaralambisBound haralambis_upper(const DifferenceSet& M, i64 k_max) {
    if (k_max < 1) fail(errc::invalid_input, "prefix bound needs k_max >= 1");
    std::vector<i64> f = mset_prefix_counts(M, k_max);
    HaralambisBound hb;
    hb.effective_k_max = static_cast<i64>(f.size()) - 1;
    if (hb.effective_k_max < 1) fail(errc::state_cap_exceeded, "prefix bound: no usable k");
    hb.alpha = Rational(f[1], 2);
    hb.best_k = 1;
    for (i64 k = 2; k <= hb.effective_k_max; ++k) {
        Rational cand(f[static_cast<std::size_t>(k)], k + 1);
        if (cand < hb.alpha) {
            hb.alpha = cand;
            hb.best_k = k;
        }
    }
    return hb;
}

// ---------------------------------------------------------------------------
// Window graph and maximum cycle mean.

namespace {

struct WindowGraph {
    i64 w = 0;
    std::vector<u64> nodes;       // sorted window values
    std::vector<std::int32_t> s0; // append-0 successor (always present)
    std::vector<std::int32_t> s1; // append-1 successor or -1

    int index_of(u64 win) const {
        auto it = std::lower_bound(nodes.begin(), nodes.end(), win);
        if (it == nodes.end() || *it != win) fail(errc::internal, "window graph: missing node");
        return static_cast<int>(it - nodes.begin());
    }
};

WindowGraph build_window_graph(const DifferenceSet& M, i64 state_cap, const Deadline& dl) {
    WindowGraph g;
    g.w = M.max_element();
    if (g.w > 62)
        fail(errc::state_cap_exceeded,
             "window graph wider than 62 bits (max element " + std::to_string(g.w) + ")");
    const u64 mask = (u64{1} << g.w) - 1;
    u64 conflict = 0;
    for (i64 d : M.elements()) conflict |= u64{1} << (d - 1);

    // Every internally consistent window is reachable from the empty window
    // by feeding its bits in oldest-first, so BFS enumerates exactly them.
    std::unordered_map<u64, std::int32_t> seen;
    std::vector<u64> order;
    seen.emplace(0, 0);
    order.push_back(0);
    for (std::size_t head = 0; head < order.size(); ++head) {
        if ((head & 0xfff) == 0) dl.check();
        u64 win = order[head];
        u64 w0 = (win << 1) & mask;
        if (seen.emplace(w0, 0).second) order.push_back(w0);
        if (!(win & conflict)) {
            u64 w1 = w0 | 1;
            if (seen.emplace(w1, 0).second) order.push_back(w1);
        }
        if (static_cast<i64>(order.size()) > state_cap)
            fail(errc::state_cap_exceeded,
                 "valid window count exceeds the state cap (" + std::to_string(state_cap) + ")");
    }

    g.nodes = order;
    std::sort(g.nodes.begin(), g.nodes.end());
    const std::size_t V = g.nodes.size();
    g.s0.resize(V);
    g.s1.assign(V, -1);
    for (std::size_t i = 0; i < V; ++i) {
        u64 win = g.nodes[i];
        u64 w0 = (win << 1) & mask;
        g.s0[i] = g.index_of(w0);
        if (!(win & conflict)) g.s1[i] = g.index_of(w0 | 1);
    }
    return g;
}

// Iterative Tarjan over the two-successor graph.
std::vector<std::int32_t> scc_ids(const WindowGraph& g, std::int32_t& comp_count) {
    const std::int32_t V = static_cast<std::int32_t>(g.nodes.size());
    std::vector<std::int32_t> idx(V, -1), low(V, 0), comp(V, -1);
    std::vector<bool> onstack(V, false);
    std::vector<std::int32_t> stack;
    struct Frame {
        std::int32_t v;
        int edge; // 0, 1, 2=done
    };
    std::vector<Frame> frames;
    std::int32_t counter = 0;
    comp_count = 0;

    for (std::int32_t root = 0; root < V; ++root) {
        if (idx[root] != -1) continue;
        frames.push_back({root, 0});
        idx[root] = low[root] = counter++;
        stack.push_back(root);
        onstack[root] = true;
        while (!frames.empty()) {
            Frame& f = frames.back();
            std::int32_t v = f.v;
            if (f.edge < 2) {
                std::int32_t to = f.edge == 0 ? g.s0[v] : g.s1[v];
                ++f.edge;
                if (to < 0) continue;
                if (idx[to] == -1) {
                    frames.push_back({to, 0});
                    idx[to] = low[to] = counter++;
                    stack.push_back(to);
                    onstack[to] = true;
                } else if (onstack[to] && idx[to] < low[v]) {
                    low[v] = idx[to];
                }
            } else {
                if (low[v] == idx[v]) {
                    while (true) {
                        std::int32_t u = stack.back();
                        stack.pop_back();
                        onstack[u] = false;
                        comp[u] = comp_count;
                        if (u == v) break;
                    }
                    ++comp_count;
                }
                frames.pop_back();
                if (!frames.empty()) {
                    std::int32_t parent = frames.back().v;
                    if (low[v] < low[parent]) low[parent] = low[v];
                }
            }
        }
    }
    return comp;
}

struct Edge {
    std::int32_t from, to;
    i64 weight;
};

// Maximum cycle mean of one strongly connected component via the walk-length
// dynamic program: mu = max_v min_k (D_n(v) - D_k(v)) / (n - k), D_k = best
// weight of a length-k walk from a fixed source. Two passes keep memory at
// O(V): the first finds D_n, the second replays the rows.
Rational component_max_mean(const std::vector<Edge>& edges, std::int32_t n,
                            const Deadline& dl) {
    std::vector<i64> prev(n, kNeg), cur(n, kNeg), dn(n, kNeg);
    auto run_rows = [&](auto&& per_row) {
        std::fill(prev.begin(), prev.end(), kNeg);
        prev[0] = 0;
        per_row(0, prev);
        for (std::int32_t k = 1; k <= n; ++k) {
            dl.check();
            std::fill(cur.begin(), cur.end(), kNeg);
            for (const Edge& e : edges)
                if (prev[e.from] > kNeg && prev[e.from] + e.weight > cur[e.to])
                    cur[e.to] = prev[e.from] + e.weight;
            per_row(k, cur);
            prev.swap(cur);
        }
    };

    run_rows([&](std::int32_t k, const std::vector<i64>& row) {
        if (k == n) dn = row;
    });

    // per-vertex running minimum of (D_n(v) - D_k(v)) / (n - k)
    std::vector<i64> min_num(n, 0), min_den(n, 0);
    run_rows([&](std::int32_t k, const std::vector<i64>& row) {
        if (k == n) return;
        for (std::int32_t v = 0; v < n; ++v) {
            if (dn[v] <= kNeg || row[v] <= kNeg) continue;
            i64 num = dn[v] - row[v], den = n - k;
            if (min_den[v] == 0 ||
                static_cast<__int128>(num) * min_den[v] < static_cast<__int128>(min_num[v]) * den) {
                min_num[v] = num;
                min_den[v] = den;
            }
        }
    });

    bool found = false;
    Rational best(0, 1);
    for (std::int32_t v = 0; v < n; ++v) {
        if (dn[v] <= kNeg || min_den[v] == 0) continue;
        Rational cand(min_num[v], min_den[v]);
        if (!found || cand > best) {
            best = cand;
            found = true;
        }
    }
    if (!found) fail(errc::internal, "cycle-mean DP found no finite vertex");
    return best;
}

Rational max_cycle_mean(const WindowGraph& g, const Deadline& dl) {
    std::int32_t comp_count = 0;
    std::vector<std::int32_t> comp = scc_ids(g, comp_count);
    const std::int32_t V = static_cast<std::int32_t>(g.nodes.size());

    std::vector<std::vector<std::int32_t>> members(comp_count);
    for (std::int32_t v = 0; v < V; ++v) members[comp[v]].push_back(v);

    bool have = false;
    Rational best(0, 1);
    std::vector<std::int32_t> local(V, -1);
    for (std::int32_t c = 0; c < comp_count; ++c) {
        auto& mem = members[c];
        std::vector<Edge> edges;
        for (std::size_t li = 0; li < mem.size(); ++li) local[mem[li]] = static_cast<std::int32_t>(li);
        for (std::int32_t v : mem) {
            if (g.s0[v] >= 0 && comp[g.s0[v]] == c)
                edges.push_back({local[v], local[g.s0[v]], 0});
            if (g.s1[v] >= 0 && comp[g.s1[v]] == c)
                edges.push_back({local[v], local[g.s1[v]], 1});
        }
        if (!edges.empty()) {
            Rational m = component_max_mean(edges, static_cast<std::int32_t>(mem.size()), dl);
            if (!have || m > best) {
                best = m;
                have = true;
            }
        }
        for (std::int32_t v : mem) local[v] = -1;
    }
    if (!have) fail(errc::internal, "window graph has no cycle"); // empty window self-loop always exists
    return best;
}

// Smallest period attaining the optimum: reweight edges by Q*b - P so optimal
// cycles become the zero-weight ones, take longest-walk potentials, and find
// the shortest cycle made of tight edges (every optimal cycle is entirely
// tight, and every tight cycle is optimal).
i64 minimal_optimal_period(const WindowGraph& g, const Rational& mu, const Deadline& dl) {
    const std::int32_t V = static_cast<std::int32_t>(g.nodes.size());
    const i64 P = mu.num(), Q = mu.den();
    auto wgt = [&](int bit) { return Q * bit - P; };

    std::vector<i64> pot(V, 0);
    bool changed = true;
    for (std::int32_t round = 0; round <= V && changed; ++round) {
        dl.check();
        changed = false;
        for (std::int32_t v = 0; v < V; ++v) {
            if (g.s0[v] >= 0 && pot[v] + wgt(0) > pot[g.s0[v]]) {
                pot[g.s0[v]] = pot[v] + wgt(0);
                changed = true;
            }
            if (g.s1[v] >= 0 && pot[v] + wgt(1) > pot[g.s1[v]]) {
                pot[g.s1[v]] = pot[v] + wgt(1);
                changed = true;
            }
        }
    }
    if (changed) fail(errc::internal, "positive cycle after optimal reweighting");

    auto tight0 = [&](std::int32_t v) {
        return g.s0[v] >= 0 && pot[v] + wgt(0) == pot[g.s0[v]] ? g.s0[v] : -1;
    };
    auto tight1 = [&](std::int32_t v) {
        return g.s1[v] >= 0 && pot[v] + wgt(1) == pot[g.s1[v]] ? g.s1[v] : -1;
    };

    i64 best = -1;
    std::vector<std::int32_t> dist(V);
    std::vector<std::int32_t> queue;
    for (std::int32_t s = 0; s < V; ++s) {
        if (tight0(s) < 0 && tight1(s) < 0) continue;
        dl.check();
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[s] = 0;
        queue.push_back(s);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::int32_t v = queue[head];
            if (best >= 0 && dist[v] + 1 >= best) continue;
            for (std::int32_t to : {tight0(v), tight1(v)}) {
                if (to < 0) continue;
                if (to == s) {
                    i64 len = dist[v] + 1;
                    if (best < 0 || len < best) best = len;
                } else if (dist[to] < 0) {
                    dist[to] = dist[v] + 1;
                    queue.push_back(to);
                }
            }
        }
        if (best == Q) break; // cycle lengths are multiples of Q; Q is minimal
    }
    if (best < 0) fail(errc::internal, "no tight cycle found at the optimum");
    if (best % Q != 0) fail(errc::internal, "tight cycle length not a multiple of the mean period");
    return best;
}

// Lexicographically smallest pattern of the given period and density that is
// a valid circular M-set, where "smallest" orders a set bit before a clear
// bit (so the pattern starts with 1 and selected residues are as early as
// possible). Plain backtracking, positions left to right, 1 tried first.
struct PatternSearch {
    i64 q;
    i64 need;
    std::vector<i64> dists; // element residues mod q, nonzero, deduplicated
    bool impossible = false;
    std::vector<std::uint8_t> bits;

    PatternSearch(const DifferenceSet& M, i64 period, i64 ones) : q(period), need(ones) {
        std::vector<i64> ds;
        for (i64 d : M.elements()) {
            i64 dd = d % q;
            if (dd == 0) {
                impossible = need > 0; // some element is a multiple of the period
                continue;
            }
            ds.push_back(dd);
        }
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        dists = std::move(ds);
        bits.assign(static_cast<std::size_t>(q), 0);
    }

    bool conflict(i64 pos) const {
        for (i64 dd : dists) {
            i64 fwd = pos + dd < q ? pos + dd : pos + dd - q;
            i64 bwd = pos - dd >= 0 ? pos - dd : pos - dd + q;
            if (fwd < pos && bits[static_cast<std::size_t>(fwd)]) return true;
            if (bwd < pos && bits[static_cast<std::size_t>(bwd)]) return true;
        }
        return false;
    }

    bool run(i64 pos, i64 ones) {
        if (ones == need) return true; // remaining positions stay 0
        if (ones + (q - pos) < need) return false;
        if (pos == q) return false;
        if (!conflict(pos)) {
            bits[static_cast<std::size_t>(pos)] = 1;
            if (run(pos + 1, ones + 1)) return true;
            bits[static_cast<std::size_t>(pos)] = 0;
        }
        return run(pos + 1, ones);
    }
};

} // namespace

MuResult mu_exact_small(const DifferenceSet& M, i64 state_cap,
                        std::optional<double> time_budget_s) {
    if (state_cap < 2) fail(errc::invalid_input, "state cap must be >= 2");
    Deadline dl(time_budget_s);
    WindowGraph g = build_window_graph(M, state_cap, dl);
    Rational mu = max_cycle_mean(g, dl);
    if (mu.num() <= 0) fail(errc::internal, "mu must be positive for a finite difference set");

    i64 q = minimal_optimal_period(g, mu, dl);
    i64 ones = q / mu.den() * mu.num();
    PatternSearch search(M, q, ones);
    if (search.impossible || !search.run(0, 0))
        fail(errc::internal, "no pattern of the optimal period and density");

    MuResult res;
    res.mu = mu;
    res.witness = PeriodicSet::make(std::move(search.bits));
    res.window_count = static_cast<i64>(g.nodes.size());
    if (res.witness.density != mu) fail(errc::internal, "mu witness density mismatch");
    if (!validate_periodic_mset(res.witness, M)) fail(errc::internal, "mu witness fails validation");
    return res;
}

DensityBounds density_bounds(const DifferenceSet& M, const DensityOptions& opts) {
    DensityBounds b;
    b.kappa = kappa_exact(M);
    b.lower = b.kappa.value;
    b.lower_method = "kappa-pair-sum";

    i64 k_max = opts.k_max;
    if (k_max <= 0) {
        i64 second = M.size() >= 2 ? M.elements()[1] : M.elements()[0];
        k_max = std::max<i64>(3 * second, 40);
    }
    HaralambisBound hb = haralambis_upper(M, k_max);
    b.upper = hb.alpha;
    b.upper_k = hb.best_k;
    b.upper_method = hb.effective_k_max == k_max
                         ? "prefix-count"
                         : "prefix-count (clamped to k_max=" + std::to_string(hb.effective_k_max) + ")";

    if (opts.want_exact) {
        try {
            MuResult mu = mu_exact_small(M, opts.state_cap, opts.time_budget_s);
            if (mu.mu > b.upper || mu.mu < b.lower)
                fail(errc::internal, "exact mu escapes the bound sandwich");
            b.exact = mu.mu;
            b.exact_method = "max-mean-cycle";
            b.witness = std::move(mu.witness);
            if (mu.mu < b.upper) { // the prefix bound stays when already tight
                b.upper = mu.mu;
                b.upper_method = "max-mean-cycle";
            }
        } catch (const Error& e) {
            if (e.code != errc::state_cap_exceeded && e.code != errc::time_budget_exceeded) throw;
            b.exact_method = "bounds-only (" + std::string(e.what()) + ")";
        }
    } else {
        b.exact_method = "bounds-only (exact disabled)";
    }
    if (b.lower > b.upper) fail(errc::internal, "lower bound exceeds upper bound");
    return b;
}

ColoringNumbers coloring_numbers(const DensityBounds& b) {
    ColoringNumbers c;
    if (b.lower.is_zero()) fail(errc::undefined_reciprocal, "zero density lower bound");
    c.chi_c_upper = b.lower.reciprocal();
    if (b.exact) c.chi_f = b.exact->reciprocal();
    return c;
}

} // namespace motzkin
