#include "cyclestab/cycles.hpp"

#include <array>
#include <cstdint>

namespace cyclestab {

namespace {

constexpr std::uint8_t kInf = 255;

// Shortest-walk distances to `target`, split by length parity and capped.
// Walk lengths lower-bound simple-path lengths, so these prune exactly.
// In bipartite graphs the wrong parity is unreachable, which kills odd-cycle
// searches at the first candidate scan.
struct ParityDist {
    std::array<std::vector<std::uint8_t>, 2> d;
    std::uint8_t at(int v, int parity) const { return d[parity][v]; }
};

ParityDist parity_distances(const Graph& g, int target, int cap, const Bitset* mask) {
    int n = g.order();
    ParityDist pd;
    pd.d[0].assign(n, kInf);
    pd.d[1].assign(n, kInf);
    if (mask && !mask->test(target)) return pd;
    pd.d[0][target] = 0;
    std::array<Bitset, 2> seen{Bitset(n), Bitset(n)};
    seen[0].set(target);
    Bitset frontier(n);
    frontier.set(target);
    for (int layer = 1; layer <= cap && frontier.any(); ++layer) {
        Bitset next(n);
        for (int v = frontier.first(); v >= 0; v = frontier.next(v)) next |= g.neighbors(v);
        if (mask) next &= *mask;
        int p = layer & 1;
        next.remove(seen[p]);
        seen[p] |= next;
        for (int v = next.first(); v >= 0; v = next.next(v)) {
            pd.d[p][v] = static_cast<std::uint8_t>(layer);
        }
        frontier = std::move(next);
    }
    return pd;
}

struct PathSearch {
    const Graph& g;
    const ParityDist& pd;
    int target;
    std::vector<int> path;
    Bitset visited;

    PathSearch(const Graph& g, const ParityDist& pd, int start, int target)
        : g(g), pd(pd), target(target), visited(g.order()) {
        path.push_back(start);
        visited.set(start);
    }

    bool run(int cur, int rem) {
        if (rem == 1) {
            if (g.adjacent(cur, target)) {
                path.push_back(target);
                return true;
            }
            return false;
        }
        const Bitset& nb = g.neighbors(cur);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (w == target || visited.test(w)) continue;
            if (pd.at(w, (rem - 1) & 1) > rem - 1) continue;
            visited.set(w);
            path.push_back(w);
            if (run(w, rem - 1)) return true;
            path.pop_back();
            visited.reset(w);
        }
        return false;
    }
};

void check_vertex(const Graph& g, int v, const char* what) {
    if (v < 0 || v >= g.order()) {
        throw ParamError(std::string(what) + ": vertex " + std::to_string(v) + " out of range");
    }
}

}  // namespace

bool validate_path(const Graph& g, const PathWitness& w) {
    if (w.vertices.empty()) return false;
    Bitset seen(g.order());
    for (std::size_t i = 0; i < w.vertices.size(); ++i) {
        int v = w.vertices[i];
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
        if (i > 0 && !g.adjacent(w.vertices[i - 1], v)) return false;
    }
    return true;
}

bool validate_path(const Graph& g, const PathWitness& w, int u, int v, int len) {
    return validate_path(g, w) && w.length() == len && w.vertices.front() == u &&
           w.vertices.back() == v;
}

bool validate_cycle(const Graph& g, const CycleWitness& w) {
    int l = w.length();
    if (l < 3) return false;
    Bitset seen(g.order());
    for (int v : w.vertices) {
        if (v < 0 || v >= g.order() || seen.test(v)) return false;
        seen.set(v);
    }
    for (int i = 0; i < l; ++i) {
        if (!g.adjacent(w.vertices[i], w.vertices[(i + 1) % l])) return false;
    }
    return true;
}

bool validate_cycle(const Graph& g, const CycleWitness& w, int len) {
    return w.length() == len && validate_cycle(g, w);
}

std::optional<PathWitness> exists_path_of_length(const Graph& g, int u, int v, int len) {
    check_vertex(g, u, "exists_path_of_length");
    check_vertex(g, v, "exists_path_of_length");
    if (u == v) throw ParamError("exists_path_of_length: endpoints coincide");
    if (len < 1) throw ParamError("exists_path_of_length: len must be >= 1");
    if (len > g.order() - 1) return std::nullopt;

    ParityDist pd = parity_distances(g, v, len, nullptr);
    if (pd.at(u, len & 1) > len) return std::nullopt;
    PathSearch s(g, pd, u, v);
    if (!s.run(u, len)) return std::nullopt;
    return PathWitness{std::move(s.path)};
}

std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int len) {
    if (len < 3) throw ParamError("find_cycle_of_length: len must be >= 3");
    int n = g.order();
    if (len > n) return std::nullopt;

    for (int s = 0; s < n; ++s) {
        // Canonical search: s is the least vertex of the cycle.
        Bitset mask(n);
        for (int v = s; v < n; ++v) mask.set(v);
        if (g.degree_in(s, mask) < 2) continue;
        ParityDist pd = parity_distances(g, s, len, &mask);

        std::vector<int> path{s};
        Bitset visited(n);
        visited.set(s);
        auto dfs = [&](auto&& self, int cur, int rem) -> bool {
            if (rem == 1) return g.adjacent(cur, s);
            const Bitset& nb = g.neighbors(cur);
            for (int w = nb.next(s); w >= 0; w = nb.next(w)) {
                if (visited.test(w)) continue;
                if (pd.at(w, (rem - 1) & 1) > rem - 1) continue;
                visited.set(w);
                path.push_back(w);
                if (self(self, w, rem - 1)) return true;
                path.pop_back();
                visited.reset(w);
            }
            return false;
        };
        if (dfs(dfs, s, len)) return CycleWitness{std::move(path)};
    }
    return std::nullopt;
}

bool is_cycle_free(const Graph& g, int len) {
    return !find_cycle_of_length(g, len).has_value();
}

std::optional<PathWitness> creates_cycle_on_addition(const Graph& g, int u, int v, int len) {
    check_vertex(g, u, "creates_cycle_on_addition");
    check_vertex(g, v, "creates_cycle_on_addition");
    if (len < 3) throw ParamError("creates_cycle_on_addition: len must be >= 3");
    if (u == v) throw ParamError("creates_cycle_on_addition: endpoints coincide");
    if (g.adjacent(u, v)) {
        throw ParamError("creates_cycle_on_addition: (" + std::to_string(u) + "," +
                         std::to_string(v) + ") is already an edge");
    }
    return exists_path_of_length(g, u, v, len - 1);
}

std::optional<PathWitness> find_path_through_set(const Graph& g, int x, int y, int len,
                                                 const VertexSet& through) {
    check_vertex(g, x, "find_path_through_set");
    check_vertex(g, y, "find_path_through_set");
    if (x == y) throw ParamError("find_path_through_set: endpoints coincide");
    if (len < 3) throw ParamError("find_path_through_set: len must be >= 3");
    if (g.adjacent(x, y)) {
        throw ParamError("find_path_through_set: (" + std::to_string(x) + "," +
                         std::to_string(y) + ") is an edge");
    }
    if (len > g.order() - 1) return std::nullopt;

    ParityDist pd = parity_distances(g, y, len, nullptr);
    if (pd.at(x, len & 1) > len) return std::nullopt;

    int n = g.order();
    std::vector<int> path{x};
    Bitset visited(n);
    visited.set(x);
    // Positions 1 and len-1 must lie in `through`; a candidate being pushed
    // sits at position len - rem + 1.
    auto dfs = [&](auto&& self, int cur, int rem) -> bool {
        if (rem == 1) {
            if (g.adjacent(cur, y)) {
                path.push_back(y);
                return true;
            }
            return false;
        }
        bool need_member = (rem == len) || (rem == 2);
        const Bitset& nb = g.neighbors(cur);
        for (int w = nb.first(); w >= 0; w = nb.next(w)) {
            if (w == y || visited.test(w)) continue;
            if (need_member && !through.test(w)) continue;
            if (pd.at(w, (rem - 1) & 1) > rem - 1) continue;
            visited.set(w);
            path.push_back(w);
            if (self(self, w, rem - 1)) return true;
            path.pop_back();
            visited.reset(w);
        }
        return false;
    };
    if (!dfs(dfs, x, len)) return std::nullopt;
    return PathWitness{std::move(path)};
}

}  // namespace cyclestab
