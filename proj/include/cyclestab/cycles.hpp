#pragma once

#include <optional>
#include <vector>

#include "cyclestab/graph.hpp"

namespace cyclestab {

// Simple path: distinct vertices, consecutive pairs adjacent, length = edges.
struct PathWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()) - 1; }
    bool operator==(const PathWitness&) const = default;
};

// Simple cycle given as a cyclically ordered vertex list.
struct CycleWitness {
    std::vector<int> vertices;
    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const CycleWitness&) const = default;
};

bool validate_path(const Graph& g, const PathWitness& w);
bool validate_path(const Graph& g, const PathWitness& w, int u, int v, int len);
bool validate_cycle(const Graph& g, const CycleWitness& w);
bool validate_cycle(const Graph& g, const CycleWitness& w, int len);

// First (deterministic) simple path with exactly `len` edges from u to v.
// Exact depth-bounded backtracking; partial paths are abandoned when the
// remaining budget cannot reach v (parity-aware BFS distances from v).
std::optional<PathWitness> exists_path_of_length(const Graph& g, int u, int v, int len);

// First simple cycle on exactly `len` vertices, canonicalized by searching
// from ascending start vertices restricted to larger ids.
std::optional<CycleWitness> find_cycle_of_length(const Graph& g, int len);

bool is_cycle_free(const Graph& g, int len);

// For a non-edge (u,v): the length-(len-1) path that would close into a
// C_len if uv were added, if any. Throws ParamError when uv is an edge.
std::optional<PathWitness> creates_cycle_on_addition(const Graph& g, int u, int v, int len);

// Simple path x .. y with exactly `len` edges whose second and second-to-last
// vertices both lie in `through`. The membership constraint is enforced
// during the search, not by post-filtering. Requires (x,y) to be a non-edge
// and len >= 3.
std::optional<PathWitness> find_path_through_set(const Graph& g, int x, int y, int len,
                                                 const VertexSet& through);

}  // namespace cyclestab
