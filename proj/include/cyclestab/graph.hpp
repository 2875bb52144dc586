#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclestab/bitset.hpp"
#include "cyclestab/errors.hpp"

namespace cyclestab {

using VertexSet = Bitset;

// Disjoint pair of vertex sets claimed to 2-color something.
struct Bipartition {
    VertexSet left;
    VertexSet right;

    int total() const { return left.count() + right.count(); }
    bool operator==(const Bipartition&) const = default;
};

// Simple undirected graph on vertices 0..n-1. Immutable after construction;
// derived graphs are produced by value (with_edge, induced).
class Graph {
  public:
    Graph() = default;
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    long long edge_count() const { return m_; }

    bool adjacent(int u, int v) const { return adj_[u].test(v); }
    const Bitset& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return deg_[v]; }
    int degree_in(int v, const Bitset& s) const {
        return static_cast<int>(adj_[v].intersection_count(s));
    }

    // Copy of this graph with one extra edge; (u,v) must be a non-edge.
    Graph with_edge(int u, int v) const;

    // Induced subgraph on `keep`; new_to_old (if given) maps new ids back to
    // ids in this graph.
    Graph induced(const Bitset& keep, std::vector<int>* new_to_old = nullptr) const;

    // Edge list in lexicographic (u,v) order with u < v.
    std::vector<std::pair<int, int>> edges() const;

    Bitset vertex_set() const { return Bitset::full(n_); }

    bool operator==(const Graph&) const = default;

  private:
    void check_endpoint(int v) const;
    void add_edge_unchecked(int u, int v);

    int n_ = 0;
    long long m_ = 0;
    std::vector<Bitset> adj_;
    std::vector<int> deg_;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// |{(u,v) in E : u in x, v in y}| for disjoint x, y.
long long edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);
// |x||y| minus the above (non-adjacent cross pairs).
long long non_edges_between(const Graph& g, const VertexSet& x, const VertexSet& y);

bool is_independent(const Graph& g, const VertexSet& s);

// Both sides independent; requires left/right to partition V(g).
bool is_bipartition_of(const Graph& g, const Bipartition& b);

// Both sides independent and every cross pair an edge (the subgraph induced
// by left ∪ right is exactly complete bipartite). Sides need not cover V.
bool is_induced_complete_bipartite(const Graph& g, const Bipartition& b);

inline constexpr int kDefaultMaxcutBudget = 24;

struct MaxCutResult {
    long long cut_edges;
    Bipartition parts;
};

// Exhaustive maximum cut; throws BudgetError when g.order() > budget.
MaxCutResult maxcut_exact(const Graph& g, int budget = kDefaultMaxcutBudget);

// Minimum number of edge removals that make g bipartite: e(G) - maxcut.
long long d2(const Graph& g, int budget = kDefaultMaxcutBudget);

// graph6 interchange format (standard bit layout: N(n) header, then the
// upper triangle x_{0,1}, x_{0,2}, x_{1,2}, ... packed big-endian into 6-bit
// chunks, each offset by 63).
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view text);

}  // namespace cyclestab
