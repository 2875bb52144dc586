#include "cyclestab/graph.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace cyclestab {

void Graph::check_endpoint(int v) const {
    if (v < 0 || v >= n_) {
        throw ParamError("edge endpoint " + std::to_string(v) + " out of range for n = " +
                         std::to_string(n_));
    }
}

void Graph::add_edge_unchecked(int u, int v) {
    adj_[u].set(v);
    adj_[v].set(u);
    ++deg_[u];
    ++deg_[v];
    ++m_;
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw ParamError("negative vertex count");
    adj_.assign(n, Bitset(n));
    deg_.assign(n, 0);
    for (auto [u, v] : edges) {
        check_endpoint(u);
        check_endpoint(v);
        if (u == v) throw ParamError("self-loop at vertex " + std::to_string(u));
        if (!adj_[u].test(v)) add_edge_unchecked(u, v);
    }
}

Graph Graph::with_edge(int u, int v) const {
    check_endpoint(u);
    check_endpoint(v);
    if (u == v) throw ParamError("self-loop at vertex " + std::to_string(u));
    if (adj_[u].test(v)) {
        throw ParamError("with_edge: (" + std::to_string(u) + "," + std::to_string(v) +
                         ") is already an edge");
    }
    Graph g = *this;
    g.add_edge_unchecked(u, v);
    return g;
}

Graph Graph::induced(const Bitset& keep, std::vector<int>* new_to_old) const {
    std::vector<int> map = keep.to_vector();
    Graph g;
    g.n_ = static_cast<int>(map.size());
    g.adj_.assign(g.n_, Bitset(g.n_));
    g.deg_.assign(g.n_, 0);
    for (int i = 0; i < g.n_; ++i) {
        for (int j = i + 1; j < g.n_; ++j) {
            if (adjacent(map[i], map[j])) g.add_edge_unchecked(i, j);
        }
    }
    if (new_to_old) *new_to_old = std::move(map);
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u) {
        for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
    }
    return out;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph(n, edges);
}

long long edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.intersects(y)) throw ParamError("edges_between: sets overlap");
    long long c = 0;
    for (int u = x.first(); u >= 0; u = x.next(u)) c += g.neighbors(u).intersection_count(y);
    return c;
}

long long non_edges_between(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return static_cast<long long>(x.count()) * y.count() - edges_between(g, x, y);
}

bool is_independent(const Graph& g, const VertexSet& s) {
    for (int u = s.first(); u >= 0; u = s.next(u)) {
        if (g.neighbors(u).intersects(s)) return false;
    }
    return true;
}

bool is_bipartition_of(const Graph& g, const Bipartition& b) {
    if (b.left.intersects(b.right)) throw ParamError("bipartition sides overlap");
    if ((b.left | b.right) != g.vertex_set()) {
        throw ParamError("bipartition does not cover the vertex set");
    }
    return is_independent(g, b.left) && is_independent(g, b.right);
}

bool is_induced_complete_bipartite(const Graph& g, const Bipartition& b) {
    if (b.left.intersects(b.right)) throw ParamError("bipartition sides overlap");
    if (!is_independent(g, b.left) || !is_independent(g, b.right)) return false;
    long long want = static_cast<long long>(b.left.count()) * b.right.count();
    return edges_between(g, b.left, b.right) == want;
}

MaxCutResult maxcut_exact(const Graph& g, int budget) {
    int n = g.order();
    if (n > budget) {
        throw BudgetError("maxcut_exact: n = " + std::to_string(n) + " exceeds budget " +
                          std::to_string(budget));
    }
    if (n > 62) throw BudgetError("maxcut_exact: n > 62 unsupported");
    if (n == 0) return {0, {Bitset(0), Bitset(0)}};

    std::vector<std::uint64_t> row(n);
    for (int v = 0; v < n; ++v) row[v] = g.neighbors(v).words().empty() ? 0 : g.neighbors(v).words()[0];
    std::uint64_t all = (n == 64) ? ~0ULL : ((1ULL << n) - 1);

    long long best = -1;
    std::uint64_t best_right = 0;
    // Vertex 0 stays on the left; masks range over vertices 1..n-1.
    std::uint64_t limit = (n == 1) ? 1 : (1ULL << (n - 1));
    for (std::uint64_t m = 0; m < limit; ++m) {
        std::uint64_t right = m << 1;
        std::uint64_t left = all & ~right;
        long long cut = 0;
        for (std::uint64_t r = right; r;) {
            int v = std::countr_zero(r);
            r &= r - 1;
            cut += std::popcount(row[v] & left);
        }
        if (cut > best) {
            best = cut;
            best_right = right;
        }
    }

    Bipartition parts{Bitset(n), Bitset(n)};
    for (int v = 0; v < n; ++v) {
        if ((best_right >> v) & 1) {
            parts.right.set(v);
        } else {
            parts.left.set(v);
        }
    }
    return {best, parts};
}

long long d2(const Graph& g, int budget) {
    return g.edge_count() - maxcut_exact(g, budget).cut_edges;
}

std::string graph6_encode(const Graph& g) {
    int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    } else {
        throw ParamError("graph6_encode: n > 258047 unsupported");
    }
    int acc = 0;
    int bits = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
    return out;
}

Graph graph6_decode(std::string_view text) {
    // Trailing newline/space tolerated; anything else must be payload bytes.
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
        text.remove_suffix(1);
    }
    if (text.empty()) throw FormatError("graph6: empty input", 0);

    std::size_t pos = 0;
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= text.size()) throw FormatError("graph6: truncated input", text.size());
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw FormatError("graph6: invalid byte", i);
        return c - 63;
    };

    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126) {
            throw FormatError("graph6: 8-byte order form unsupported", 1);
        }
        n = (static_cast<long long>(byte_at(1)) << 12) | (byte_at(2) << 6) | byte_at(3);
        pos = 4;
    } else {
        n = byte_at(0);
        if (n > 62) throw FormatError("graph6: bad order byte", 0);
        pos = 1;
    }

    long long bits_needed = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits_needed + 5) / 6);
    if (text.size() != pos + body) {
        throw FormatError(text.size() < pos + body ? "graph6: truncated input"
                                                   : "graph6: trailing bytes",
                          std::min(text.size(), pos + body));
    }

    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int chunk = byte_at(pos + static_cast<std::size_t>(bit / 6));
            if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
        }
    }
    return Graph(static_cast<int>(n), edges);
}

}  // namespace cyclestab
