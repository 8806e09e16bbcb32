#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace pxkit {

// Simple undirected graph on vertices 0..n-1 with dense, stable edge ids.
// Immutable after construction; cheap to copy at the sizes this library
// works with and safe to share across threads.
class Graph {
public:
    Graph() = default;

    // Validates simplicity: rejects loops, parallel edges and out-of-range
    // endpoints. Edge ids are assigned in the order given (0..m-1).
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    // Endpoints of an edge, always returned with first < second.
    const std::pair<int, int>& edge(int id) const { return edges_[static_cast<std::size_t>(id)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    const std::vector<int>& neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& incident_edges(int v) const { return inc_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    bool adjacent(int u, int v) const;
    std::optional<int> edge_id(int u, int v) const;

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<int>> inc_;
};

struct DegreeStats {
    int max_degree = 0;
    int min_degree = 0;
    std::vector<int> degrees; // indexed by vertex
};

DegreeStats degree_stats(const Graph& g);

struct BridgeStats {
    std::vector<int> bridges;    // cut-edge ids, ascending
    std::vector<int> per_vertex; // b(v) = bridges incident to v
    int max_per_vertex = 0;      // b = max_v b(v)
};

bool is_connected(const Graph& g);

// Cut edges via DFS lowpoints. Rejects disconnected input.
BridgeStats bridge_stats(const Graph& g);

bool is_tree(const Graph& g);

// Connected with exactly one cycle (m == n).
bool is_unicyclic(const Graph& g);

// Vertex set of the unique cycle of a unicyclic graph, ascending.
std::vector<int> cycle_vertices(const Graph& g);

// Spanning path witness (vertex order), or nullopt. Bitmask DP; refuses n > 20.
std::optional<std::vector<int>> hamilton_path(const Graph& g);
bool hamilton_path_exists(const Graph& g);

enum class TreeStream {
    complete, // every spanning tree was yielded
    capped,   // enumeration stopped at the cap
    stopped,  // the visitor asked to stop
};

// Enumerates spanning trees by contraction/deletion, each exactly once, in a
// deterministic order (include-lowest-edge-id branch first). The visitor gets
// the ascending edge-id set of each tree and returns false to stop early.
// At most `cap` trees are yielded.
TreeStream for_each_spanning_tree(const Graph& g, std::uint64_t cap,
                                  const std::function<bool(const std::vector<int>&)>& visit);

// Backtracking with degree-sequence pruning. Refuses n > 10.
bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace pxkit
