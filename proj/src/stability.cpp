#include "cyclestab/stability.hpp"

#include <algorithm>
#include <cmath>

#include "cyclestab/constructions.hpp"

namespace cyclestab {

std::string to_string(DecomposeStatus s) {
    switch (s) {
        case DecomposeStatus::Verified: return "verified";
        case DecomposeStatus::Stuck: return "stuck";
        case DecomposeStatus::SurvivorNotBipartite: return "survivor_not_bipartite";
    }
    return "?";
}

PeelResult peel_min_degree(const Graph& g, int k) {
    if (k < 2) throw ParamError("peel_min_degree: k must be >= 2");
    int n = g.order();
    Bitset alive = Bitset::full(n);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

    PeelResult result;
    result.removed_set = Bitset(n);
    long long order = n;
    const long long tnum = 10LL * k - 1;  // threshold = tnum/(20k) * order
    const long long tden = 20LL * k;

    while (order > 0) {
        int pick = -1;
        for (int v = alive.first(); v >= 0; v = alive.next(v)) {
            if (tden * deg[v] < tnum * order) {
                if (pick == -1 || deg[v] < deg[pick]) pick = v;  // min degree, then min id
            }
        }
        if (pick == -1) break;
        result.trace.removed.push_back({pick, deg[pick], static_cast<int>(order)});
        result.trace.thresholds.push_back(static_cast<double>(tnum) / tden * order);
        alive.reset(pick);
        result.removed_set.set(pick);
        for (int w = g.neighbors(pick).first(); w >= 0; w = g.neighbors(pick).next(w)) {
            if (alive.test(w)) --deg[w];
        }
        --order;
    }

    result.survivor = g.induced(alive, &result.survivor_to_original);

    // Removal-rule and survivor-threshold invariants, exactly.
    for (const auto& step : result.trace.removed) {
        if (tden * step.degree >= tnum * step.order) {
            throw PropertyError("peel: removal violated the degree threshold rule");
        }
    }
    result.survivor_min_degree = 0;
    int sn = result.survivor.order();
    if (sn > 0) {
        result.survivor_min_degree = result.survivor.degree(0);
        for (int v = 1; v < sn; ++v) {
            result.survivor_min_degree = std::min(result.survivor_min_degree,
                                                  result.survivor.degree(v));
        }
        if (tden * static_cast<long long>(result.survivor_min_degree) < tnum * sn) {
            throw PropertyError("peel: survivor min degree below threshold");
        }
    }
    // e(G) <= e(G') + sum_{i<|T|} (1/2 - 1/(20k))(n - i), scaled by 2*tden.
    __int128 lhs = static_cast<__int128>(2) * tden * g.edge_count();
    __int128 rhs = static_cast<__int128>(2) * tden * result.survivor.edge_count();
    for (std::size_t i = 0; i < result.trace.removed.size(); ++i) {
        rhs += static_cast<__int128>(2) * tnum * (n - static_cast<long long>(i));
    }
    if (lhs > rhs) throw PropertyError("peel: accounting inequality violated");

    return result;
}

CycleClassification classify_around_cycle(const Graph& g, const CycleWitness& c, int k) {
    if (k < 2) throw ParamError("classify_around_cycle: k must be >= 2");
    if (c.length() != 2 * k || !validate_cycle(g, c)) {
        throw ParamError("classify_around_cycle: witness is not a 2k-cycle of the graph");
    }
    int n = g.order();
    Bitset on_cycle(n);
    for (int v : c.vertices) on_cycle.set(v);

    // Paper positions v_1..v_{2k}: list index j holds v_{j+1}, so odd paper
    // positions sit at even indices.
    Bitset odd_pos(n), even_pos(n);
    for (int j = 0; j < 2 * k; ++j) {
        if (j % 2 == 0) {
            odd_pos.set(c.vertices[j]);
        } else {
            even_pos.set(c.vertices[j]);
        }
    }

    CycleClassification out;
    out.cycle = c;
    out.s_odd = Bitset(n);
    out.s_even = Bitset(n);
    out.s_prime = Bitset(n);
    for (int u = 0; u < n; ++u) {
        if (on_cycle.test(u)) continue;
        int cnt = g.degree_in(u, on_cycle);
        if (cnt > k) {
            std::vector<int> nbrs;
            for (int v : c.vertices) {
                if (g.adjacent(u, v)) nbrs.push_back(v);
            }
            throw ClassifyError("classify_around_cycle: vertex " + std::to_string(u) + " has " +
                                    std::to_string(cnt) +
                                    " > k neighbors on the cycle (freeness violated)",
                                u, std::move(nbrs));
        }
        if (odd_pos.subset_of(g.neighbors(u))) {
            out.s_odd.set(u);
        } else if (even_pos.subset_of(g.neighbors(u))) {
            out.s_even.set(u);
        } else {
            out.s_prime.set(u);
        }
    }
    out.s_prime_odd = Bitset(n);
    for (int u = out.s_prime.first(); u >= 0; u = out.s_prime.next(u)) {
        if (!g.neighbors(u).intersects(out.s_odd)) out.s_prime_odd.set(u);
    }
    out.s_prime_even = out.s_prime.minus(out.s_prime_odd);
    return out;
}

namespace {

std::optional<std::pair<int, int>> first_internal_edge(const Graph& g, const Bitset& s) {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        Bitset hit = g.neighbors(u) & s;
        int v = hit.next(u);
        if (v >= 0) return std::make_pair(u, v);
    }
    return std::nullopt;
}

}  // namespace

C2kResult bipartition_via_c2k(const Graph& g, int k) {
    auto cycle = find_cycle_of_length(g, 2 * k);
    if (!cycle) return C2kFailure{C2kFailureKind::NoCycle, std::nullopt, std::nullopt};

    CycleClassification cls;
    try {
        cls = classify_around_cycle(g, *cycle, k);
    } catch (const ClassifyError& e) {
        return C2kFailure{C2kFailureKind::ExcessCycleNeighbors, std::nullopt, e.vertex};
    }

    int n = g.order();
    Bipartition parts{Bitset(n), Bitset(n)};
    parts.left = cls.s_even | cls.s_prime_even;
    parts.right = cls.s_odd | cls.s_prime_odd;
    for (int j = 0; j < 2 * k; ++j) {
        if (j % 2 == 0) {
            parts.left.set(cls.cycle.vertices[j]);  // odd paper positions v_1, v_3, ...
        } else {
            parts.right.set(cls.cycle.vertices[j]);
        }
    }
    if (auto e = first_internal_edge(g, parts.left)) {
        return C2kFailure{C2kFailureKind::SideNotIndependent, e, std::nullopt};
    }
    if (auto e = first_internal_edge(g, parts.right)) {
        return C2kFailure{C2kFailureKind::SideNotIndependent, e, std::nullopt};
    }
    return C2kBipartition{std::move(parts), std::move(cls)};
}

BfsResult bipartition_bfs(const Graph& g) {
    int n = g.order();
    std::vector<int> color(n, -1);
    std::vector<int> parent(n, -1);
    Bipartition parts{Bitset(n), Bitset(n)};

    auto walk_to_root = [&](int v) {
        std::vector<int> w;
        for (int x = v; x != -1; x = parent[x]) w.push_back(x);
        return w;
    };

    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        parts.left.set(root);
        std::vector<int> queue{root};
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            const Bitset& nb = g.neighbors(u);
            for (int w = nb.first(); w >= 0; w = nb.next(w)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    (color[w] == 0 ? parts.left : parts.right).set(w);
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Closed odd walk: root..u, edge uw, then w..root.
                    std::vector<int> up = walk_to_root(u);
                    std::reverse(up.begin(), up.end());
                    std::vector<int> down = walk_to_root(w);
                    up.insert(up.end(), down.begin(), down.end());
                    return OddWalk{std::move(up)};
                }
            }
        }
    }
    return parts;
}

ExtractionOutcome extract_complete_bipartite(const Graph& g, const Bitset& t, const Bitset& x,
                                             const Bitset& y, int k) {
    if (k < 2) throw ParamError("extract_complete_bipartite: k must be >= 2");
    int n = g.order();
    Bitset all = t | x | y;
    if (t.intersects(x) || t.intersects(y) || x.intersects(y) || all != g.vertex_set()) {
        throw ParamError("extract_complete_bipartite: t, x, y must partition V");
    }
    if (!is_independent(g, x) || !is_independent(g, y)) {
        throw ParamError("extract_complete_bipartite: g[x ∪ y] is not bipartite with sides x, y");
    }

    ExtractionOutcome out;
    Bitset cur_x = x, cur_y = y;
    while (true) {
        // Lexicographically least cross non-edge of the current sides.
        int a = -1, b = -1;
        for (int u = cur_x.first(); u >= 0; u = cur_x.next(u)) {
            Bitset missing = cur_y.minus(g.neighbors(u));
            int v = missing.first();
            if (v >= 0) {
                a = u;
                b = v;
                break;
            }
        }
        if (a == -1) break;

        auto q = find_path_through_set(g, a, b, 2 * k, t);
        if (!q) {
            out.stuck = StuckInfo{{a, b}};
            out.final_parts = {cur_x, cur_y};
            return out;
        }
        int xp = q->vertices[1];
        int yp = q->vertices[2 * k - 1];
        Bitset xi = g.neighbors(xp) & cur_x;
        Bitset yi = g.neighbors(yp) & cur_y;

        // Every cross edge between the two attachment neighborhoods must meet
        // the interior of Q_i: otherwise it closes a C_{2k+1}, so the input was
        // not free.
        Bitset interior(n);
        for (int j = 2; j <= 2 * k - 2; ++j) interior.set(q->vertices[j]);
        if (edges_between(g, xi.minus(interior), yi.minus(interior)) != 0) {
            throw PropertyError(
                "extract_complete_bipartite: an X_i–Y_i edge avoids the path interior "
                "(input was not C_{2k+1}-free)");
        }

        ExtractionStep step;
        step.non_edge = {a, b};
        step.path = *q;
        step.x_i = xi;
        step.y_i = yi;
        step.non_edges_between_xi_yi = non_edges_between(g, xi, yi);
        step.deleted_x_side = xi.count() <= yi.count();  // tie goes to the x side
        if (step.deleted_x_side) {
            cur_x.remove(xi);
            out.sum_si += xi.count();
        } else {
            cur_y.remove(yi);
            out.sum_si += yi.count();
        }
        out.steps.push_back(std::move(step));
    }

    out.final_parts = {cur_x, cur_y};
    if (!is_induced_complete_bipartite(g, out.final_parts)) {
        throw PropertyError("extract_complete_bipartite: final pair failed verification");
    }
    return out;
}

namespace {

BoundComparison make_bound(std::string name, double measured, double bound, bool satisfied) {
    return {std::move(name), measured, bound, satisfied};
}

}  // namespace

StabilityReport decompose(const Graph& g, int k) {
    if (k < 2) throw ParamError("decompose: k must be >= 2");
    if (auto c = find_cycle_of_length(g, 2 * k + 1)) {
        throw NotFreeError("decompose: input contains a C_" + std::to_string(2 * k + 1), *c);
    }

    StabilityReport r;
    r.k = k;
    r.n = g.order();
    r.edges = g.edge_count();
    const long long n = r.n;
    const long long deficit4 = n * n - 4 * r.edges;  // 4*(n^2/4 - e)
    const long long deficit4c = std::max(0LL, deficit4);
    double deficit = static_cast<double>(deficit4) / 4.0;
    r.eps_n32 = deficit > 0 ? deficit / std::pow(static_cast<double>(n), 1.5) : 0.0;
    r.eps_n2 = deficit > 0 ? deficit / (static_cast<double>(n) * n) : 0.0;

    r.peel = peel_min_degree(g, k);
    const Bitset& t_set = r.peel.removed_set;
    long long t_size = t_set.count();

    auto bfs = bipartition_bfs(r.peel.survivor);

    // Cycle-classification diagnostic on the survivor; the pipeline itself
    // 2-colors by plain BFS, and agreement is recorded, never assumed.
    auto diag = bipartition_via_c2k(r.peel.survivor, k);
    if (std::holds_alternative<C2kBipartition>(diag)) {
        r.c2k_status = "success";
        if (std::holds_alternative<Bipartition>(bfs)) {
            const auto& lp = std::get<C2kBipartition>(diag).parts;
            const auto& bp = std::get<Bipartition>(bfs);
            r.c2k_agrees = (lp.left == bp.left && lp.right == bp.right) ||
                             (lp.left == bp.right && lp.right == bp.left);
        }
    } else {
        switch (std::get<C2kFailure>(diag).kind) {
            case C2kFailureKind::NoCycle: r.c2k_status = "no_2k_cycle"; break;
            case C2kFailureKind::SideNotIndependent:
                r.c2k_status = "side_not_independent";
                break;
            case C2kFailureKind::ExcessCycleNeighbors:
                r.c2k_status = "excess_cycle_neighbors";
                break;
        }
    }

    auto add_core_bounds = [&](long long survivor_edges, long long survivor_min_deg,
                                long long survivor_order) {
        // |T| <= 50 k eps n with eps = (n^2/4 - e)/n^2: 4 n |T| <= 50 k (n^2 - 4e).
        r.bounds.push_back(make_bound(
            "peel_removed_le_50k_eps_n", static_cast<double>(t_size),
            50.0 * k * r.eps_n2 * n, 4 * n * t_size <= 50 * k * deficit4c));
        // e(G') >= n^2/4 - 25 k eps n^2: 4 e' >= n^2 - 25 k (n^2 - 4e).
        r.bounds.push_back(make_bound(
            "survivor_edges_ge_quarter_minus_25k_eps_n2", static_cast<double>(survivor_edges),
            static_cast<double>(n) * n / 4.0 - 25.0 * k * r.eps_n2 * n * n,
            4 * survivor_edges >= n * n - 25 * k * deficit4c));
        // delta(G') >= (1/2 - 1/(16k)) n: 16 k delta >= (8k - 1) n.
        r.bounds.push_back(make_bound(
            "survivor_min_degree_ge_half_minus_1_over_16k",
            static_cast<double>(survivor_min_deg), (0.5 - 1.0 / (16.0 * k)) * n,
            16LL * k * survivor_min_deg >= (8LL * k - 1) * n && survivor_order > 0));
    };
    add_core_bounds(r.peel.survivor.edge_count(), r.peel.survivor_min_degree,
                     r.peel.survivor.order());

    if (std::holds_alternative<OddWalk>(bfs)) {
        r.status = DecomposeStatus::SurvivorNotBipartite;
        // Translate the witness back to original ids.
        OddWalk w = std::get<OddWalk>(bfs);
        for (int& v : w.vertices) v = r.peel.survivor_to_original[v];
        r.odd_walk = std::move(w);
        return r;
    }

    // Map survivor sides to original ids and extract on the full graph.
    const auto& sides = std::get<Bipartition>(bfs);
    Bitset x(r.n), y(r.n);
    for (int v = sides.left.first(); v >= 0; v = sides.left.next(v)) {
        x.set(r.peel.survivor_to_original[v]);
    }
    for (int v = sides.right.first(); v >= 0; v = sides.right.next(v)) {
        y.set(r.peel.survivor_to_original[v]);
    }
    r.extraction = extract_complete_bipartite(g, t_set, x, y, k);

    r.final_parts = r.extraction.final_parts;
    r.final_order = r.final_parts.total();

    // Extraction accounting: deleted + final + |T| = n.
    if (r.extraction.sum_si + r.final_order + t_size != n) {
        throw PropertyError("decompose: extraction vertex accounting failed");
    }

    // Step budget sum |S_i|^2 <= 16*25 k^3 eps n^2 = 100 k^3 (n^2 - 4e).
    long long sum_si_sq = 0;
    for (const auto& step : r.extraction.steps) {
        long long si = step.deleted_x_side ? step.x_i.count() : step.y_i.count();
        sum_si_sq += si * si;
    }
    r.bounds.push_back(make_bound("extraction_sum_si_sq_le_400_k3_eps_n2",
                                  static_cast<double>(sum_si_sq),
                                  400.0 * k * k * k * r.eps_n2 * n * n,
                                  static_cast<__int128>(sum_si_sq) <=
                                      static_cast<__int128>(100) * k * k * k * deficit4c));

    long long deleted = n - r.final_order;
    // n^{3/2} reading: final >= (1 - 250 k^2 eps) n with eps per n^{3/2}:
    // deleted <= 250 k^2 (n^2 - 4e) / (4 sqrt(n)); compare squared.
    {
        __int128 lhs = static_cast<__int128>(16) * n * deleted * deleted;
        __int128 rhs_root = static_cast<__int128>(250) * k * k * deficit4c;
        r.bounds.push_back(make_bound("final_order_ge_1_minus_250k2_eps_n32_reading",
                                      static_cast<double>(r.final_order),
                                      n * (1.0 - 250.0 * k * k * r.eps_n32),
                                      lhs <= rhs_root * rhs_root));
    }
    // Alternate normalization: eps per n^2, so deleted <= 250 k^2 eps n.
    r.bounds.push_back(make_bound("final_order_ge_1_minus_250k2_eps_n2_reading",
                                  static_cast<double>(r.final_order),
                                  n * (1.0 - 250.0 * k * k * r.eps_n2),
                                  4 * n * deleted <= 250LL * k * k * deficit4c));

    if (r.extraction.stuck) {
        r.status = DecomposeStatus::Stuck;
        return r;
    }
    r.final_verified = is_induced_complete_bipartite(g, r.final_parts);
    if (!r.final_verified) throw PropertyError("decompose: final pair failed verification");
    r.status = DecomposeStatus::Verified;
    return r;
}

}  // namespace cyclestab
