#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cyclestab/constructions.hpp"
#include "cyclestab/cycles.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {

inline constexpr int kDefaultExtremalBudget = 10;
inline constexpr int kDefaultInducedBudget = 18;
inline constexpr int kDefaultPathEnumBudget = 10;
inline constexpr int kMaxPathEnumLen = 9;
inline constexpr int kDefaultD2ScanBudget = 16;

struct ExtremalResult {
    int n = 0;
    int len = 0;
    long long max_edges = 0;
    // Extremal witnesses, deduplicated by canonical form, as graph6 of the
    // canonical labeling.
    std::vector<std::string> witnesses_g6;
    long long maximal_graphs_seen = 0;
};

// Exact ex(n, C_len) by branch-and-bound over edge inclusion: branches on
// the first edge whose addition does not currently close a C_len, prunes by
// included + still-addable versus the best known, and collects every
// extremal witness. Throws BudgetError when n > budget.
ExtremalResult max_edges_cycle_free(int n, int len, int budget = kDefaultExtremalBudget);

// Enumerates every maximal C_len-free graph on n labeled vertices (the leaf
// set of the same search tree, without the edge-count prune). Returns the
// number of leaves visited.
long long for_each_maximal_cycle_free(int n, int len, int budget,
                                      const std::function<void(const Graph&)>& fn);

// Canonical form by minimizing the upper-triangle adjacency bits over all
// vertex permutations; n <= 11 keeps the bit signature in one word.
std::uint64_t canonical_signature(const Graph& g);
Graph canonical_graph(const Graph& g);

struct InducedBipResult {
    int total = 0;
    Bipartition parts;
};

// Exact maximum |A| + |B| over disjoint independent A, B with every cross
// pair an edge; branch-and-bound over three-way vertex assignment.
InducedBipResult max_induced_complete_bipartite(const Graph& g,
                                                int budget = kDefaultInducedBudget);

struct ClasswiseSelection {
    int total = 0;
    // 0 = out, 1 = side A, 2 = side B, indexed X_1..X_{t+1} then Y_1..Y_{t+1}.
    std::vector<int> class_side;
    int z_selected = 0;
};

// Maximum induced complete bipartite subgraph over whole-class selections
// (legitimate because class members are twins; twin structure is verified
// and a violation reported via PropertyError). Z vertices are handled
// individually.
ClasswiseSelection max_classwise_complete_bipartite(const Graph& g, const GkaLayout& layout);

// All simple u-v paths with exactly len edges, by unpruned recursion.
std::vector<PathWitness> enumerate_simple_paths(const Graph& g, int u, int v, int len,
                                                int budget = kDefaultPathEnumBudget,
                                                int max_len = kMaxPathEnumLen);

struct BlowupEntry {
    std::vector<int> sizes;
    long long edges = 0;
    long long d2 = 0;
};

struct ConjectureRecord {
    std::string graph6;
    std::uint64_t seed = 0;
    int n = 0;
    long long edges = 0;
    long long d2 = 0;
    bool bipartite = false;
    std::string status;  // dominated | not_dominated | no_valid_blowup
    std::optional<BlowupEntry> best_blowup;
};

struct ConjectureScanConfig {
    int k = 2;
    int n = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    // Blowup classes of C_{2k+3} may be empty (weak compositions); with
    // positive parts instead, n < 2k+3 has no valid blowup at all.
    bool allow_empty_classes = true;
    // Enumerate all maximal C_{2k+1}-free graphs (n <= 8) instead of
    // sampling by random saturation.
    bool exhaustive = false;
    int d2_budget = kDefaultD2ScanBudget;
};

struct ConjectureScanResult {
    ConjectureScanConfig cfg;
    std::vector<BlowupEntry> blowups;  // canonical size-vectors, dihedral-deduplicated
    std::vector<ConjectureRecord> records;
};

// For each sampled maximal C_{2k+1}-free graph, compares (e, D2) against
// every blowup of C_{2k+3} on n vertices; a sample no blowup dominates is a
// conjecture counterexample candidate.
ConjectureScanResult conjecture_scan(const ConjectureScanConfig& cfg);

// Single-record rerun for reproducibility checks.
ConjectureRecord conjecture_scan_one(const ConjectureScanConfig& cfg, std::uint64_t sample_seed);

}  // namespace cyclestab
