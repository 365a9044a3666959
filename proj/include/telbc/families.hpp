#ifndef TELBC_FAMILIES_HPP
#define TELBC_FAMILIES_HPP

#include "telbc/graph.hpp"

#include <vector>

namespace telbc {

/// k cycles through one shared center; lengths[i] counts the non-center
/// vertices of cycle i (each >= 2).
struct KCycleSpec {
    std::vector<int> lengths;

    void validate() const;
    int vertex_count() const;
    bool operator==(const KCycleSpec&) const = default;
};

/// k internally disjoint s-t paths; lengths[i] counts internal vertices of
/// path i (0 means a direct s-t edge). `st_edge` adds one more direct edge.
struct KPathSpec {
    std::vector<int> lengths;
    bool st_edge = false;

    void validate() const;
    int vertex_count() const;
    bool operator==(const KPathSpec&) const = default;
};

/// Canonical numbering: center is vertex 0, then cycle 0's vertices in arc
/// order (first one adjacent to the center), then cycle 1, and so on.
struct KCycleGraph {
    Graph graph;
    Vertex center = 0;
    std::vector<std::vector<Vertex>> cycles;  // arc order, ends adjacent to center
};

/// Canonical numbering: s = 0, t = 1, then each path's internal vertices from
/// the s side to the t side, paths in input order.
struct KPathGraph {
    Graph graph;
    Vertex s = 0;
    Vertex t = 1;
    std::vector<std::vector<Vertex>> paths;  // internal vertices, s side first
};

KCycleGraph build_k_cycle(const KCycleSpec& spec);
KPathGraph build_k_path(const KPathSpec& spec);

/// Recovers the cycle lengths of a k-cycle graph with the given center, sorted
/// descending. Throws InvalidInput if the graph is not a k-cycle around `center`.
std::vector<int> decompose_k_cycle(const Graph& g, Vertex center);

/// Recovers internal path lengths (sorted descending) and the direct-edge
/// flag of a k-path graph with endpoints s and t.
KPathSpec decompose_k_path(const Graph& g, Vertex s, Vertex t);

/// Path on n vertices 0-1-...-(n-1).
Graph make_path(int n);
/// Cycle on n >= 3 vertices.
Graph make_cycle(int n);
/// Star with center 0 and n-1 leaves.
Graph make_star(int n);
Graph make_complete(int n);
/// Cycles of the given sizes chained so consecutive cycles share one vertex.
Graph make_necklace(const std::vector<int>& cycle_sizes);

/// Bandwidth-2 ordering of make_necklace(cycle_sizes).
std::vector<Vertex> necklace_ordering(const std::vector<int>& cycle_sizes);

/// Ordering 0, n-1, 1, n-2, ... of a cycle, bandwidth 2.
std::vector<Vertex> interleaved_cycle_ordering(int n);

}  // namespace telbc

#endif
