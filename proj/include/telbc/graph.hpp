#ifndef TELBC_GRAPH_HPP
#define TELBC_GRAPH_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace telbc {

using Vertex = int;
using Round = int;

/// Raised for malformed graphs, specs and other precondition failures.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction rejects self-loops, duplicate edges and out-of-range
/// endpoints. The object is immutable afterwards.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges);

    int size() const { return n_; }
    const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    int degree(Vertex v) const { return static_cast<int>(adjacency_.at(v).size()); }
    bool has_edge(Vertex u, Vertex v) const;
    bool contains(Vertex v) const { return v >= 0 && v < n_; }

    bool is_connected() const;
    bool is_tree() const;

    /// BFS distances from `source`; unreachable vertices get -1.
    std::vector<int> distances_from(Vertex source) const;
    /// Multi-source BFS distances.
    std::vector<int> distances_from(std::span<const Vertex> sources) const;

private:
    int n_ = 0;
    std::vector<std::pair<Vertex, Vertex>> edges_;  // normalized u < v, sorted
    std::vector<std::vector<Vertex>> adjacency_;
};

/// Throws InvalidInput unless `g` is connected.
void require_connected(const Graph& g);

/// max(ceil(log2 n), eccentricity of `source`). No schedule completes earlier.
int broadcast_lower_bound(const Graph& g, Vertex source);

/// True iff every edge spans at most `k` positions of `ordering`.
/// Throws InvalidInput if `ordering` is not a permutation of the vertices.
bool verify_bandwidth_ordering(const Graph& g, std::span<const Vertex> ordering, int k);

/// Largest |pos(u) - pos(v)| over the edges of `g`.
int ordering_bandwidth(const Graph& g, std::span<const Vertex> ordering);

/// Reverse Cuthill-McKee ordering, best over all start vertices.
std::vector<Vertex> cuthill_mckee_ordering(const Graph& g);

int ceil_log2(long long n);

}  // namespace telbc

#endif
