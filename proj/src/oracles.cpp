#include "cyclestab/oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <string>

namespace cyclestab {

namespace {

// Lean mask-based search used inside the branch-and-bound hot loops; the
// instrumented public detector would dominate the runtime here.
bool mask_path_exists(const std::vector<std::uint32_t>& adj, int cur, int target, int rem,
                      std::uint32_t visited) {
    if (rem == 1) return (adj[cur] >> target) & 1;
    std::uint32_t cand = adj[cur] & ~visited & ~(1u << target);
    while (cand) {
        int w = std::countr_zero(cand);
        cand &= cand - 1;
        if (mask_path_exists(adj, w, target, rem - 1, visited | (1u << w))) return true;
    }
    return false;
}

struct MaximalSearch {
    int n;
    int len;
    std::vector<std::pair<int, int>> edge_list;  // lexicographic
    std::vector<std::uint32_t> adj;
    std::vector<bool> alive;
    int alive_count = 0;
    long long e_cur = 0;
    long long leaves = 0;

    // Value mode: prune subtrees that cannot reach `best`; collect graphs
    // attaining it. Enumeration mode (best < 0): visit every leaf.
    long long best = -1;
    std::vector<Graph>* attaining = nullptr;
    const std::function<void(const Graph&)>* leaf_fn = nullptr;

    explicit MaximalSearch(int n, int len) : n(n), len(len), adj(n, 0) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) edge_list.emplace_back(u, v);
        }
        alive.assign(edge_list.size(), true);
        alive_count = static_cast<int>(edge_list.size());
    }

    bool closes_cycle(int u, int v) const {
        return mask_path_exists(adj, u, v, len - 1, 1u << u);
    }

    Graph current_graph() const {
        std::vector<std::pair<int, int>> es;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if ((adj[u] >> v) & 1) es.emplace_back(u, v);
            }
        }
        return Graph(n, es);
    }

    void at_leaf() {
        ++leaves;
        if (leaf_fn) {
            (*leaf_fn)(current_graph());
            return;
        }
        if (e_cur > best) {
            best = e_cur;
            attaining->clear();
        }
        if (e_cur == best) attaining->push_back(current_graph());
    }

    void run() {
        if (best >= 0 && e_cur + alive_count < best) return;
        int pick = -1;
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            if (alive[i]) {
                pick = static_cast<int>(i);
                break;
            }
        }
        if (pick == -1) {
            at_leaf();
            return;
        }

        auto [u, v] = edge_list[pick];

        // Include branch: add the edge, then retire every undecided edge
        // whose addition now closes a C_len (it can never come back).
        adj[u] |= 1u << v;
        adj[v] |= 1u << u;
        ++e_cur;
        std::vector<int> killed{pick};
        alive[pick] = false;
        --alive_count;
        for (std::size_t i = 0; i < edge_list.size(); ++i) {
            if (!alive[i]) continue;
            auto [a, b] = edge_list[i];
            if (closes_cycle(a, b)) {
                alive[i] = false;
                --alive_count;
                killed.push_back(static_cast<int>(i));
            }
        }
        run();
        for (int i : killed) {
            alive[i] = true;
            ++alive_count;
        }
        adj[u] &= ~(1u << v);
        adj[v] &= ~(1u << u);
        --e_cur;

        // Exclude branch.
        alive[pick] = false;
        --alive_count;
        run();
        alive[pick] = true;
        ++alive_count;
    }
};

std::uint64_t triangle_signature(const std::vector<std::uint32_t>& adj,
                                 const std::vector<int>& perm) {
    // Upper-triangle bits of the relabeled graph, column order, MSB-first.
    std::uint64_t sig = 0;
    int n = static_cast<int>(perm.size());
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            sig = (sig << 1) | ((adj[perm[u]] >> perm[v]) & 1);
        }
    }
    return sig;
}

}  // namespace

ExtremalResult max_edges_cycle_free(int n, int len, int budget) {
    if (len < 3) throw ParamError("max_edges_cycle_free: len must be >= 3");
    if (n < 1) throw ParamError("max_edges_cycle_free: n must be >= 1");
    if (n > budget || n > 11) {
        throw BudgetError("max_edges_cycle_free: n = " + std::to_string(n) +
                          " exceeds exhaustive budget " + std::to_string(std::min(budget, 11)));
    }

    MaximalSearch search(n, len);
    std::vector<Graph> attaining;
    search.attaining = &attaining;
    // Honest lower bound: the bipartite Turán graph, when the detector
    // confirms it is C_len-free.
    Graph turan = turan_bipartite(n);
    if (is_cycle_free(turan, len)) search.best = turan.edge_count();
    search.run();

    ExtremalResult res;
    res.n = n;
    res.len = len;
    res.max_edges = search.best;
    res.maximal_graphs_seen = search.leaves;
    std::vector<std::uint64_t> seen;
    for (const Graph& g : attaining) {
        std::uint64_t sig = canonical_signature(g);
        if (std::find(seen.begin(), seen.end(), sig) == seen.end()) {
            seen.push_back(sig);
            res.witnesses_g6.push_back(graph6_encode(canonical_graph(g)));
        }
    }
    std::sort(res.witnesses_g6.begin(), res.witnesses_g6.end());
    return res;
}

long long for_each_maximal_cycle_free(int n, int len, int budget,
                                      const std::function<void(const Graph&)>& fn) {
    if (n > budget || n > 11) {
        throw BudgetError("for_each_maximal_cycle_free: n exceeds budget");
    }
    MaximalSearch search(n, len);
    search.leaf_fn = &fn;
    search.run();
    return search.leaves;
}

std::uint64_t canonical_signature(const Graph& g) {
    int n = g.order();
    if (n > 11) throw BudgetError("canonical_signature: n > 11");
    std::vector<std::uint32_t> adj(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v)) {
            adj[u] |= 1u << v;
        }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~0ULL;
    do {
        best = std::min(best, triangle_signature(adj, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Graph canonical_graph(const Graph& g) {
    int n = g.order();
    std::uint64_t sig = canonical_signature(g);
    std::vector<std::pair<int, int>> edges;
    long long bits = static_cast<long long>(n) * (n - 1) / 2;
    long long i = bits - 1;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, --i) {
            if ((sig >> i) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

namespace {

struct InducedSearch {
    const Graph& g;
    int n;
    int best = 0;
    Bitset best_a, best_b;
    Bitset a, b;

    explicit InducedSearch(const Graph& g)
        : g(g), n(g.order()), best_a(g.order()), best_b(g.order()), a(g.order()), b(g.order()) {}

    void run(int i, int asz, int bsz) {
        if (asz + bsz + (n - i) <= best) return;
        if (i == n) {
            best = asz + bsz;
            best_a = a;
            best_b = b;
            return;
        }
        const Bitset& nb = g.neighbors(i);
        // Side A: independent from A, complete toward B.
        if (!nb.intersects(a) && b.subset_of(nb)) {
            a.set(i);
            run(i + 1, asz + 1, bsz);
            a.reset(i);
        }
        if (!nb.intersects(b) && a.subset_of(nb)) {
            b.set(i);
            run(i + 1, asz, bsz + 1);
            b.reset(i);
        }
        run(i + 1, asz, bsz);
    }
};

}  // namespace

InducedBipResult max_induced_complete_bipartite(const Graph& g, int budget) {
    if (g.order() > budget) {
        throw BudgetError("max_induced_complete_bipartite: n = " + std::to_string(g.order()) +
                          " exceeds budget " + std::to_string(budget));
    }
    InducedSearch s(g);
    s.run(0, 0, 0);
    return {s.best, {s.best_a, s.best_b}};
}

namespace {

// Max independent set along one Z path, restricted to eligible vertices.
int path_mis(const std::vector<int>& path, const std::vector<char>& eligible) {
    int take_prev = 0, skip_prev = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        int take = (eligible[i] ? 1 : -1000000) + skip_prev;
        int skip = std::max(take_prev, skip_prev);
        take_prev = take;
        skip_prev = skip;
    }
    return std::max(take_prev, skip_prev);
}

}  // namespace

ClasswiseSelection max_classwise_complete_bipartite(const Graph& g, const GkaLayout& layout) {
    const int t = layout.t;
    const int classes = 2 * (t + 1);
    std::vector<const Bitset*> cls(classes);
    for (int i = 0; i <= t; ++i) cls[i] = &layout.x_classes[i];
    for (int i = 0; i <= t; ++i) cls[t + 1 + i] = &layout.y_classes[i];

    // Twin check: within a class every vertex must have the same neighborhood.
    for (int c = 0; c < classes; ++c) {
        int rep = cls[c]->first();
        if (rep < 0) continue;
        for (int v = cls[c]->next(rep); v >= 0; v = cls[c]->next(v)) {
            if (!(g.neighbors(v) == g.neighbors(rep))) {
                throw PropertyError("max_classwise_complete_bipartite: class members " +
                                    std::to_string(rep) + " and " + std::to_string(v) +
                                    " are not twins");
            }
        }
    }
    // The per-block independent-set decomposition below assumes the minimal
    // member's Z structure: no edges between blocks, a path inside each.
    for (std::size_t i = 0; i < layout.z_paths.size(); ++i) {
        const auto& zi = layout.z_paths[i];
        for (std::size_t a = 0; a < zi.size(); ++a) {
            for (std::size_t b = a + 1; b < zi.size(); ++b) {
                if (g.adjacent(zi[a], zi[b]) != (b == a + 1)) {
                    throw PropertyError(
                        "max_classwise_complete_bipartite: block does not induce its path");
                }
            }
            for (std::size_t j = i + 1; j < layout.z_paths.size(); ++j) {
                for (int w : layout.z_paths[j]) {
                    if (g.adjacent(zi[a], w)) {
                        throw PropertyError(
                            "max_classwise_complete_bipartite: cross-block path edge present");
                    }
                }
            }
        }
    }

    std::vector<int> size(classes);
    for (int c = 0; c < classes; ++c) size[c] = cls[c]->count();
    // Cross-class edge counts decide same-side (must be 0) and cross-side
    // (must be complete) feasibility.
    std::vector<std::vector<long long>> cross(classes, std::vector<long long>(classes, 0));
    for (int c = 0; c < classes; ++c) {
        for (int d = c + 1; d < classes; ++d) {
            cross[c][d] = cross[d][c] = edges_between(g, *cls[c], *cls[d]);
        }
    }

    std::vector<int> z_all;
    for (const auto& p : layout.z_paths) z_all.insert(z_all.end(), p.begin(), p.end());

    ClasswiseSelection best;
    std::vector<int> assign(classes, 0);

    long long combos = 1;
    for (int c = 0; c < classes; ++c) combos *= 3;
    for (long long code = 0; code < combos; ++code) {
        long long x = code;
        int total = 0;
        Bitset side_a(layout.n), side_b(layout.n);
        bool ok = true;
        for (int c = 0; c < classes && ok; ++c) {
            assign[c] = static_cast<int>(x % 3);
            x /= 3;
            if (assign[c] == 0 || size[c] == 0) {
                if (assign[c] != 0 && size[c] == 0) assign[c] = 0;
                continue;
            }
            total += size[c];
            (assign[c] == 1 ? side_a : side_b) |= *cls[c];
        }
        if (!ok) continue;
        for (int c = 0; c < classes && ok; ++c) {
            if (assign[c] == 0) continue;
            for (int d = c + 1; d < classes && ok; ++d) {
                if (assign[d] == 0) continue;
                if (assign[c] == assign[d]) {
                    if (cross[c][d] != 0) ok = false;
                } else {
                    if (cross[c][d] != static_cast<long long>(size[c]) * size[d]) ok = false;
                }
            }
        }
        if (!ok) continue;

        // Z eligibility against the chosen classes.
        std::vector<char> can_a(z_all.size()), can_b(z_all.size());
        for (std::size_t i = 0; i < z_all.size(); ++i) {
            const Bitset& nb = g.neighbors(z_all[i]);
            can_a[i] = !nb.intersects(side_a) && side_b.subset_of(nb);
            can_b[i] = !nb.intersects(side_b) && side_a.subset_of(nb);
        }

        // Case 1/2: all chosen z on one side. Cross-block pairs on one side
        // are non-adjacent (fine); within a block the path needs an
        // independent pick.
        int z_one_side_a = 0, z_one_side_b = 0;
        {
            std::size_t off = 0;
            for (const auto& p : layout.z_paths) {
                std::vector<char> ea(p.size()), eb(p.size());
                for (std::size_t j = 0; j < p.size(); ++j) {
                    ea[j] = can_a[off + j];
                    eb[j] = can_b[off + j];
                }
                z_one_side_a += std::max(0, path_mis(p, ea));
                z_one_side_b += std::max(0, path_mis(p, eb));
                off += p.size();
            }
        }
        // Case 3: a mixed block (both sides drawing z's) forbids z picks in
        // every other block, since cross-block z pairs are never adjacent.
        int z_mixed = 0;
        {
            std::size_t off = 0;
            for (const auto& p : layout.z_paths) {
                int m = static_cast<int>(p.size());
                long long lim = 1;
                for (int j = 0; j < m; ++j) lim *= 3;
                for (long long zc = 0; zc < lim; ++zc) {
                    long long y = zc;
                    int asz = 0, bsz = 0;
                    bool good = true;
                    std::vector<int> zs(m);
                    for (int j = 0; j < m && good; ++j) {
                        zs[j] = static_cast<int>(y % 3);
                        y /= 3;
                        if (zs[j] == 1 && !can_a[off + j]) good = false;
                        if (zs[j] == 2 && !can_b[off + j]) good = false;
                        if (zs[j] == 1) ++asz;
                        if (zs[j] == 2) ++bsz;
                    }
                    if (!good || asz == 0 || bsz == 0) continue;
                    for (int j = 0; j < m && good; ++j) {
                        for (int l = j + 1; l < m && good; ++l) {
                            if (zs[j] == 0 || zs[l] == 0) continue;
                            bool adj = g.adjacent(p[j], p[l]);
                            if (zs[j] == zs[l] && adj) good = false;
                            if (zs[j] != zs[l] && !adj) good = false;
                        }
                    }
                    if (good) z_mixed = std::max(z_mixed, asz + bsz);
                }
                off += p.size();
            }
        }

        int z_gain = std::max({z_one_side_a, z_one_side_b, z_mixed});
        if (total + z_gain > best.total) {
            best.total = total + z_gain;
            best.class_side = assign;
            best.z_selected = z_gain;
        }
    }
    return best;
}

std::vector<PathWitness> enumerate_simple_paths(const Graph& g, int u, int v, int len, int budget,
                                                int max_len) {
    if (g.order() > budget || len > max_len) {
        throw BudgetError("enumerate_simple_paths: exceeds budget (n <= " +
                          std::to_string(budget) + ", len <= " + std::to_string(max_len) + ")");
    }
    if (u == v || u < 0 || v < 0 || u >= g.order() || v >= g.order() || len < 1) {
        throw ParamError("enumerate_simple_paths: bad endpoints or length");
    }
    std::vector<PathWitness> out;
    std::vector<int> path{u};
    Bitset visited(g.order());
    visited.set(u);
    auto rec = [&](auto&& self, int cur, int rem) -> void {
        if (rem == 0) {
            if (cur == v) out.push_back(PathWitness{path});
            return;
        }
        const Bitset& nb = g.neighbors(cur);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (visited.test(w)) continue;
            if (w == v && rem != 1) continue;
            visited.set(w);
            path.push_back(w);
            self(self, w, rem - 1);
            path.pop_back();
            visited.reset(w);
        }
    };
    rec(rec, u, len);
    return out;
}

namespace {

std::vector<int> dihedral_canonical(const std::vector<int>& sizes) {
    int m = static_cast<int>(sizes.size());
    std::vector<int> best = sizes;
    std::vector<int> cur(m);
    for (int flip = 0; flip < 2; ++flip) {
        for (int r = 0; r < m; ++r) {
            for (int i = 0; i < m; ++i) {
                int idx = flip ? (r - i % m + 2 * m) % m : (r + i) % m;
                cur[i] = sizes[idx];
            }
            if (cur < best) best = cur;
        }
    }
    return best;
}

void compositions(int n, int parts, int min_part, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (n >= min_part) {
            cur.push_back(n);
            fn(cur);
            cur.pop_back();
        }
        return;
    }
    for (int first = min_part; first <= n - min_part * (parts - 1); ++first) {
        cur.push_back(first);
        compositions(n - first, parts - 1, min_part, cur, fn);
        cur.pop_back();
    }
}

// Blowup with possibly-empty classes: empty classes simply contribute no
// join edges.
Graph blowup_weak(const std::vector<int>& sizes) {
    int m = static_cast<int>(sizes.size());
    int n = 0;
    std::vector<int> start(m);
    for (int i = 0; i < m; ++i) {
        start[i] = n;
        n += sizes[i];
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % m;
        for (int a = 0; a < sizes[i]; ++a) {
            for (int b = 0; b < sizes[j]; ++b) edges.emplace_back(start[i] + a, start[j] + b);
        }
    }
    return Graph(n, edges);
}

std::vector<BlowupEntry> blowup_table(int k, int n, bool allow_empty, int d2_budget) {
    int m = 2 * k + 3;
    std::vector<std::vector<int>> canon;
    std::vector<int> cur;
    int min_part = allow_empty ? 0 : 1;
    if (!allow_empty && n < m) return {};
    compositions(n, m, min_part, cur, [&](const std::vector<int>& sizes) {
        std::vector<int> c = dihedral_canonical(sizes);
        if (c == sizes) canon.push_back(c);
    });
    std::sort(canon.begin(), canon.end());
    std::vector<BlowupEntry> out;
    out.reserve(canon.size());
    for (const auto& sizes : canon) {
        Graph b = blowup_weak(sizes);
        BlowupEntry e;
        e.sizes = sizes;
        e.edges = b.edge_count();
        e.d2 = d2(b, d2_budget);
        out.push_back(std::move(e));
    }
    return out;
}

ConjectureRecord scan_record(const Graph& g, std::uint64_t sample_seed,
                             const std::vector<BlowupEntry>& table, int d2_budget) {
    ConjectureRecord rec;
    rec.graph6 = graph6_encode(g);
    rec.seed = sample_seed;
    rec.n = g.order();
    rec.edges = g.edge_count();
    rec.d2 = d2(g, d2_budget);
    rec.bipartite = (rec.d2 == 0);

    if (table.empty()) {
        rec.status = "no_valid_blowup";
        return rec;
    }
    // Prefer dominating entries; within the preferred tier take max edges,
    // then max D2 (table order is canonical, so ties resolve deterministically).
    auto better = [](const BlowupEntry& a, const BlowupEntry& b) {
        return a.edges > b.edges || (a.edges == b.edges && a.d2 > b.d2);
    };
    const BlowupEntry* best = nullptr;
    bool dominated = false;
    for (const auto& e : table) {
        bool dom = e.edges >= rec.edges && e.d2 >= rec.d2;
        if (dom && !dominated) {
            dominated = true;
            best = &e;
            continue;
        }
        if (dom == dominated && (best == nullptr || better(e, *best))) best = &e;
    }
    rec.status = dominated ? "dominated" : "not_dominated";
    rec.best_blowup = *best;
    return rec;
}

}  // namespace

ConjectureScanResult conjecture_scan(const ConjectureScanConfig& cfg) {
    if (cfg.k < 2) throw ParamError("conjecture_scan: k must be >= 2");
    if (cfg.n < 1) throw ParamError("conjecture_scan: n must be >= 1");
    if (cfg.n > cfg.d2_budget) {
        throw BudgetError("conjecture_scan: n = " + std::to_string(cfg.n) + " exceeds D2 budget " +
                          std::to_string(cfg.d2_budget));
    }
    ConjectureScanResult res;
    res.cfg = cfg;
    res.blowups = blowup_table(cfg.k, cfg.n, cfg.allow_empty_classes, cfg.d2_budget);

    if (cfg.exhaustive) {
        if (cfg.n > 8) throw BudgetError("conjecture_scan: exhaustive mode needs n <= 8");
        std::vector<std::uint64_t> seen;
        for_each_maximal_cycle_free(cfg.n, 2 * cfg.k + 1, 8, [&](const Graph& g) {
            std::uint64_t sig = canonical_signature(g);
            if (std::find(seen.begin(), seen.end(), sig) != seen.end()) return;
            seen.push_back(sig);
            res.records.push_back(scan_record(g, 0, res.blowups, cfg.d2_budget));
        });
        return res;
    }

    std::vector<std::uint64_t> seeds(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i) seeds[i] = cfg.seed + static_cast<std::uint64_t>(i);
    res.records.resize(cfg.samples);
    for (int i = 0; i < cfg.samples; ++i) {
        auto [g, trace] = saturate(Graph(cfg.n, {}), 2 * cfg.k + 1, SaturationPolicy::Random,
                                   seeds[i]);
        res.records[i] = scan_record(g, seeds[i], res.blowups, cfg.d2_budget);
    }
    return res;
}

ConjectureRecord conjecture_scan_one(const ConjectureScanConfig& cfg, std::uint64_t sample_seed) {
    auto table = blowup_table(cfg.k, cfg.n, cfg.allow_empty_classes, cfg.d2_budget);
    auto [g, trace] = saturate(Graph(cfg.n, {}), 2 * cfg.k + 1, SaturationPolicy::Random,
                               sample_seed);
    return scan_record(g, sample_seed, table, cfg.d2_budget);
}

}  // namespace cyclestab
