#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cyclestab/cycles.hpp"
#include "cyclestab/graph.hpp"

namespace cyclestab {

struct PeelStep {
    int vertex;  // original id
    int degree;  // at removal time
    int order;   // graph order at removal time
};

struct PeelTrace {
    std::vector<PeelStep> removed;
    // (1/2 - 1/(20k)) * order at each removal, for the record.
    std::vector<double> thresholds;
};

struct PeelResult {
    Graph survivor;
    std::vector<int> survivor_to_original;
    Bitset removed_set;  // original ids (the set T)
    PeelTrace trace;
    int survivor_min_degree = 0;
};

// Repeatedly removes a vertex of degree < (1/2 - 1/(20k)) * (current order);
// among candidates the minimum degree wins, then the minimum id. The
// threshold comparison is exact integer arithmetic: 20k*deg < (10k-1)*order.
// Asserts the removal rule and the accounting inequality
// e(G) <= e(G') + sum_i (1/2 - 1/(20k))(n - i) on every run.
PeelResult peel_min_degree(const Graph& g, int k);

// Partition of the vertices outside a 2k-cycle by their attachment pattern.
struct CycleClassification {
    CycleWitness cycle;
    Bitset s_odd;         // adjacent to every odd-position cycle vertex
    Bitset s_even;        // adjacent to every even-position cycle vertex
    Bitset s_prime;       // the rest of U
    Bitset s_prime_odd;   // members of S' with no neighbor in S_odd
    Bitset s_prime_even;  // S' minus S'_odd
};

// A vertex outside the cycle with more than k cycle neighbors contradicts
// C_{2k+1}-freeness; reported as a witness.
struct ClassifyError : Error {
    ClassifyError(const std::string& msg, int vertex, std::vector<int> nbrs)
        : Error(msg), vertex(vertex), cycle_neighbors(std::move(nbrs)) {}
    int vertex;
    std::vector<int> cycle_neighbors;
};

CycleClassification classify_around_cycle(const Graph& g, const CycleWitness& c, int k);

enum class C2kFailureKind { NoCycle, SideNotIndependent, ExcessCycleNeighbors };

struct C2kFailure {
    C2kFailureKind kind;
    std::optional<std::pair<int, int>> violating_edge;
    std::optional<int> vertex;
};

struct C2kBipartition {
    Bipartition parts;  // left = S_even ∪ S'_even ∪ odd-position cycle vertices
    CycleClassification classification;
};

using C2kResult = std::variant<C2kBipartition, C2kFailure>;

// 2-coloring derived from a 2k-cycle: find one, classify the outside
// vertices, assemble the two sides, and verify both are independent.
// Verification failures are first-class results; the construction is only
// guaranteed under asymptotic hypotheses that desk sizes never meet.
C2kResult bipartition_via_c2k(const Graph& g, int k);

// Closed walk of odd length certifying non-bipartiteness.
struct OddWalk {
    std::vector<int> vertices;
};

using BfsResult = std::variant<Bipartition, OddWalk>;

// Component-wise 2-coloring; components are processed by smallest vertex id,
// whose side is "left".
BfsResult bipartition_bfs(const Graph& g);

struct ExtractionStep {
    std::pair<int, int> non_edge;
    PathWitness path;  // x, x', u_1..u_{2k-3}, y', y with x', y' in T
    Bitset x_i, y_i;
    bool deleted_x_side;
    long long non_edges_between_xi_yi;
};

struct StuckInfo {
    std::pair<int, int> non_edge;
};

struct ExtractionOutcome {
    std::vector<ExtractionStep> steps;
    Bipartition final_parts;
    long long sum_si = 0;
    std::optional<StuckInfo> stuck;
};

// Greedy deletion toward an induced complete bipartite subgraph. x, y, t must
// partition V(g) with x and y independent. Each step picks the
// lexicographically least cross non-edge, finds a length-2k path through t,
// and deletes the smaller of N(x') ∩ x, N(y') ∩ y (tie: the x side). A
// missing through-path yields a StuckInfo result rather than an error.
ExtractionOutcome extract_complete_bipartite(const Graph& g, const Bitset& t, const Bitset& x,
                                             const Bitset& y, int k);

struct BoundComparison {
    std::string name;
    double measured;
    double bound;
    bool satisfied;  // decided in exact arithmetic where possible
};

enum class DecomposeStatus { Verified, Stuck, SurvivorNotBipartite };

std::string to_string(DecomposeStatus s);

struct StabilityReport {
    DecomposeStatus status = DecomposeStatus::Verified;
    int n = 0;
    int k = 0;
    long long edges = 0;
    // Two normalizations of the edge deficit n^2/4 - e(G) are in play in the
    // tracked bounds: per n^{3/2} and per n^2. Both are reported.
    double eps_n32 = 0.0;
    double eps_n2 = 0.0;

    PeelResult peel;

    std::string bipartition_source = "bfs";
    std::string c2k_status;
    bool c2k_agrees = false;
    std::optional<OddWalk> odd_walk;  // present when the survivor is not bipartite

    ExtractionOutcome extraction;  // populated once a bipartition exists

    int final_order = 0;
    Bipartition final_parts;  // original vertex ids
    bool final_verified = false;

    std::vector<BoundComparison> bounds;
};

// Full pipeline: freeness check, epsilon, peeling, BFS 2-coloring (with the
// c2k procedure as a recorded diagnostic), extraction, bound accounting.
// Throws NotFreeError if g contains a C_{2k+1}.
StabilityReport decompose(const Graph& g, int k);

}  // namespace cyclestab
