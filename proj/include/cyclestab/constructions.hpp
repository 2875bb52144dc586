#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclestab/cycles.hpp"
#include "cyclestab/graph.hpp"
#include "cyclestab/rational.hpp"

namespace cyclestab {

// Complete bipartite K_{ceil(n/2), floor(n/2)}; the unique extremal
// C_{2k+1}-free graph at n >= 4k.
Graph turan_bipartite(int n);

struct GkaParams {
    int k = 2;
    Rational alpha;
    int n = 0;
};

// Class structure of a G_{k,alpha}(n) member: blocks X_1..X_{t+1} and
// Y_1..Y_{t+1}, plus t paths Z_i of 2k-1 vertices each (stored in path
// order z_1 .. z_{2k-1}).
struct GkaLayout {
    int n = 0;
    int k = 0;
    int t = 0;
    int block_size = 0;  // |X_i| = |Y_i| for i <= t
    std::vector<Bitset> x_classes;  // size t+1; index t holds X_{t+1}
    std::vector<Bitset> y_classes;
    std::vector<std::vector<int>> z_paths;

    Bitset x_union() const;
    Bitset y_union() const;
    Bitset z_union() const;
};

// t = ceil(sqrt(alpha n / 4k)) and the vertex-id assignment
// X_1..X_{t+1}, Y_1..Y_{t+1}, Z_1..Z_t in contiguous ascending blocks.
// Throws ParamError when a class size would drop below 1.
GkaLayout gka_layout(const GkaParams& p);

// The minimum-edge member for the layout: cross-complete X_i/Y_j blocks
// except the t empty diagonal blocks, Z_i inducing exactly its path, and the
// two path-end attachments per block.
std::pair<Graph, GkaLayout> gka_minimal(const GkaParams& p);

struct MembershipViolation {
    std::string clause;  // "i" .. "v"
    std::string detail;
};

struct MembershipReport {
    bool ok = true;
    std::array<bool, 5> clause_ok{true, true, true, true, true};
    std::vector<MembershipViolation> violations;
};

// Checks all five defining clauses of the family (clause (i) in containment
// form: G[Z_i] contains the recorded path). Returns every violation.
MembershipReport verify_membership(const Graph& g, const GkaLayout& layout, const GkaParams& p);

// Classes W_1..W_m of the given sizes, complete joins between cyclically
// consecutive classes. All sizes must be >= 1.
Graph blowup_cycle(int m, const std::vector<int>& sizes);

// A graph is C_len-free but had a cycle / needs freeness.
struct NotFreeError : Error {
    NotFreeError(const std::string& msg, CycleWitness w)
        : Error(msg), witness(std::move(w)) {}
    CycleWitness witness;
};

enum class SaturationPolicy { Lex, Random };

struct SaturationTrace {
    SaturationPolicy policy = SaturationPolicy::Lex;
    std::uint64_t seed = 0;  // meaningful for the random policy
    int passes = 0;
    std::vector<std::pair<int, int>> added;
    // One entry per non-edge of the final graph, recorded during the
    // terminal zero-addition pass; the witness path closes a C_len.
    std::vector<std::pair<std::pair<int, int>, PathWitness>> rejected;
};

// Adds edges until no further edge can be added without creating a C_len.
// Scans non-edges in passes (lexicographic by default) until a full pass
// makes no addition; the result is maximal C_len-free by construction.
// Throws NotFreeError when the input already contains a C_len.
std::pair<Graph, SaturationTrace> saturate(const Graph& g, int len,
                                           SaturationPolicy policy = SaturationPolicy::Lex,
                                           std::uint64_t seed = 0);

}  // namespace cyclestab
