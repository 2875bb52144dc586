#include "cyclestab/constructions.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string>

namespace cyclestab {

Graph turan_bipartite(int n) {
    if (n < 1) throw ParamError("turan_bipartite: n must be >= 1");
    int left = (n + 1) / 2;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(left) * (n - left));
    for (int u = 0; u < left; ++u) {
        for (int v = left; v < n; ++v) edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Bitset GkaLayout::x_union() const {
    Bitset b(n);
    for (const auto& c : x_classes) b |= c;
    return b;
}

Bitset GkaLayout::y_union() const {
    Bitset b(n);
    for (const auto& c : y_classes) b |= c;
    return b;
}

Bitset GkaLayout::z_union() const {
    Bitset b(n);
    for (const auto& p : z_paths) {
        for (int v : p) b.set(v);
    }
    return b;
}

GkaLayout gka_layout(const GkaParams& p) {
    if (p.k < 2) throw ParamError("gka_layout: k must be >= 2");
    if (p.n < 1) throw ParamError("gka_layout: n must be >= 1");
    if (p.alpha.num <= 0 || 2 * p.alpha.num > p.alpha.den) {
        throw ParamError("gka_layout: alpha must lie in (0, 1/2], got " + p.alpha.str());
    }
    const long long k = p.k, n = p.n;
    const long long ap = p.alpha.num, aq = p.alpha.den;

    // t = ceil(sqrt(alpha*n / 4k)), exactly.
    long long t = ceil_sqrt_ratio(ap * n, aq * 4 * k);
    if (t < 1) t = 1;

    // |X_i| = |Y_i| = floor((alpha*n - (2k-1)t) / 2t) for i <= t.
    long long numer = ap * n - aq * (2 * k - 1) * t;
    long long s = floor_div(numer, aq * 2 * t);
    if (s < 1) {
        throw ParamError("gka_layout: infeasible parameters (class size would be " +
                         std::to_string(s) + " < 1) for k=" + std::to_string(p.k) + " alpha=" +
                         p.alpha.str() + " n=" + std::to_string(p.n));
    }
    long long rest = n - 2 * t * s - (2 * k - 1) * t;
    if (rest < 0) throw ParamError("gka_layout: infeasible parameters (negative remainder)");

    GkaLayout layout;
    layout.n = p.n;
    layout.k = p.k;
    layout.t = static_cast<int>(t);
    layout.block_size = static_cast<int>(s);

    int next_id = 0;
    auto take = [&](int count) {
        Bitset b(p.n);
        for (int i = 0; i < count; ++i) b.set(next_id++);
        return b;
    };

    // Ids ascend through X_1..X_{t+1}, then Y_1..Y_{t+1}, then Z_1..Z_t.
    int x_last = static_cast<int>((rest + 1) / 2);  // X_{t+1} takes the ceiling
    int y_last = static_cast<int>(rest / 2);
    for (int i = 0; i < layout.t; ++i) layout.x_classes.push_back(take(layout.block_size));
    layout.x_classes.push_back(take(x_last));
    for (int i = 0; i < layout.t; ++i) layout.y_classes.push_back(take(layout.block_size));
    layout.y_classes.push_back(take(y_last));
    for (int i = 0; i < layout.t; ++i) {
        std::vector<int> z(2 * p.k - 1);
        for (int& v : z) v = next_id++;
        layout.z_paths.push_back(std::move(z));
    }
    return layout;
}

std::pair<Graph, GkaLayout> gka_minimal(const GkaParams& p) {
    GkaLayout layout = gka_layout(p);
    std::vector<std::pair<int, int>> edges;
    int t = layout.t;

    auto join = [&](const Bitset& a, const Bitset& b) {
        for (int u = a.first(); u >= 0; u = a.next(u)) {
            for (int v = b.first(); v >= 0; v = b.next(v)) edges.emplace_back(u, v);
        }
    };

    // Cross blocks: complete for i != j, plus the complete (t+1, t+1) block;
    // the diagonal blocks i <= t stay empty.
    for (int i = 0; i <= t; ++i) {
        for (int j = 0; j <= t; ++j) {
            if (i == j && i < t) continue;
            join(layout.x_classes[i], layout.y_classes[j]);
        }
    }
    // Each Z_i induces exactly its path; the ends attach to X_i and Y_i.
    for (int i = 0; i < t; ++i) {
        const auto& z = layout.z_paths[i];
        for (std::size_t j = 0; j + 1 < z.size(); ++j) edges.emplace_back(z[j], z[j + 1]);
        for (int v = layout.x_classes[i].first(); v >= 0; v = layout.x_classes[i].next(v)) {
            edges.emplace_back(z.front(), v);
        }
        for (int v = layout.y_classes[i].first(); v >= 0; v = layout.y_classes[i].next(v)) {
            edges.emplace_back(z.back(), v);
        }
    }
    return {Graph(p.n, edges), std::move(layout)};
}

namespace {

void add_violation(MembershipReport& r, int clause_index, const std::string& clause,
                   const std::string& detail) {
    r.ok = false;
    r.clause_ok[clause_index] = false;
    r.violations.push_back({clause, detail});
}

}  // namespace

MembershipReport verify_membership(const Graph& g, const GkaLayout& layout, const GkaParams& p) {
    MembershipReport r;
    int t = layout.t;
    int k = p.k;

    Bitset all(layout.n);
    for (const auto& c : layout.x_classes) all |= c;
    for (const auto& c : layout.y_classes) all |= c;
    for (const auto& z : layout.z_paths) {
        for (int v : z) all.set(v);
    }
    if (g.order() != layout.n || all != g.vertex_set()) {
        throw ParamError("verify_membership: layout does not cover the vertex set");
    }

    // (i) |Z_i| = 2k-1 and G[Z_i] contains the recorded path.
    for (int i = 0; i < t; ++i) {
        const auto& z = layout.z_paths[i];
        if (static_cast<int>(z.size()) != 2 * k - 1) {
            add_violation(r, 0, "i", "Z_" + std::to_string(i + 1) + " has size " +
                                         std::to_string(z.size()));
            continue;
        }
        for (std::size_t j = 0; j + 1 < z.size(); ++j) {
            if (!g.adjacent(z[j], z[j + 1])) {
                add_violation(r, 0, "i", "Z_" + std::to_string(i + 1) + " misses path edge (" +
                                             std::to_string(z[j]) + "," + std::to_string(z[j + 1]) +
                                             ")");
            }
        }
    }

    // (ii) class sizes.
    for (int i = 0; i < t; ++i) {
        if (layout.x_classes[i].count() != layout.block_size ||
            layout.y_classes[i].count() != layout.block_size) {
            add_violation(r, 1, "ii", "block " + std::to_string(i + 1) + " sizes differ from " +
                                          std::to_string(layout.block_size));
        }
    }
    if (std::abs(layout.x_classes[t].count() - layout.y_classes[t].count()) > 1) {
        add_violation(r, 1, "ii", "X_{t+1}, Y_{t+1} not balanced");
    }

    // (iii) X and Y unions independent.
    if (!is_independent(g, layout.x_union())) add_violation(r, 2, "iii", "X side not independent");
    if (!is_independent(g, layout.y_union())) add_violation(r, 2, "iii", "Y side not independent");

    // (iv) empty diagonal blocks, complete everywhere else across.
    for (int i = 0; i <= t; ++i) {
        for (int j = 0; j <= t; ++j) {
            long long e = edges_between(g, layout.x_classes[i], layout.y_classes[j]);
            long long full = static_cast<long long>(layout.x_classes[i].count()) *
                             layout.y_classes[j].count();
            bool want_empty = (i == j && i < t);
            if (want_empty && e != 0) {
                add_violation(r, 3, "iv", "G[X_" + std::to_string(i + 1) + ",Y_" +
                                              std::to_string(j + 1) + "] not empty");
            }
            if (!want_empty && e != full) {
                add_violation(r, 3, "iv", "G[X_" + std::to_string(i + 1) + ",Y_" +
                                              std::to_string(j + 1) + "] not complete");
            }
        }
    }

    // (v) path-end attachments.
    for (int i = 0; i < t; ++i) {
        const auto& z = layout.z_paths[i];
        if (static_cast<int>(z.size()) != 2 * k - 1) continue;
        const Bitset& xi = layout.x_classes[i];
        const Bitset& yi = layout.y_classes[i];
        if (g.neighbors(z.front()).intersection_count(xi) != xi.count()) {
            add_violation(r, 4, "v", "z^" + std::to_string(i + 1) + "_1 not complete to X_" +
                                         std::to_string(i + 1));
        }
        if (g.neighbors(z.back()).intersection_count(yi) != yi.count()) {
            add_violation(r, 4, "v", "z^" + std::to_string(i + 1) + "_{2k-1} not complete to Y_" +
                                         std::to_string(i + 1));
        }
    }
    return r;
}

Graph blowup_cycle(int m, const std::vector<int>& sizes) {
    if (m < 3) throw ParamError("blowup_cycle: m must be >= 3");
    if (static_cast<int>(sizes.size()) != m) {
        throw ParamError("blowup_cycle: size vector length " + std::to_string(sizes.size()) +
                         " does not match m = " + std::to_string(m));
    }
    for (int s : sizes) {
        if (s < 1) throw ParamError("blowup_cycle: class sizes must be >= 1");
    }
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

std::pair<Graph, SaturationTrace> saturate(const Graph& g, int len, SaturationPolicy policy,
                                           std::uint64_t seed) {
    if (auto c = find_cycle_of_length(g, len)) {
        throw NotFreeError("saturate: input already contains a C_" + std::to_string(len), *c);
    }

    SaturationTrace trace;
    trace.policy = policy;
    trace.seed = seed;
    Graph cur = g;
    int n = g.order();
    std::mt19937_64 rng(seed);

    while (true) {
        std::vector<std::pair<int, int>> candidates;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (!cur.adjacent(u, v)) candidates.emplace_back(u, v);
            }
        }
        if (policy == SaturationPolicy::Random) {
            // Fisher-Yates with our own rng stream: std::shuffle is not
            // specified bit-for-bit across standard libraries.
            for (std::size_t i = candidates.size(); i > 1; --i) {
                std::size_t j = rng() % i;
                std::swap(candidates[i - 1], candidates[j]);
            }
        }

        int additions = 0;
        std::vector<std::pair<std::pair<int, int>, PathWitness>> rejected;
        for (auto [u, v] : candidates) {
            if (cur.adjacent(u, v)) continue;  // became an edge earlier this pass
            if (auto w = exists_path_of_length(cur, u, v, len - 1)) {
                rejected.push_back({{u, v}, std::move(*w)});
            } else {
                cur = cur.with_edge(u, v);
                trace.added.emplace_back(u, v);
                ++additions;
            }
        }
        ++trace.passes;
        if (additions == 0) {
            // Terminal pass: rejections double as the maximality certificate.
            trace.rejected = std::move(rejected);
            break;
        }
    }
    return {std::move(cur), std::move(trace)};
}

}  // namespace cyclestab
