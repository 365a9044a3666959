#ifndef TELBC_ORACLE_HPP
#define TELBC_ORACLE_HPP

#include "telbc/graph.hpp"
#include "telbc/schedule.hpp"

#include <stdexcept>
#include <vector>

namespace telbc {

/// The exact search refused an instance above its vertex cap.
class InstanceTooLarge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleConfig {
    int max_vertices = 20;        // single source
    int max_vertices_multi = 16;  // several sources with releases
};

struct OracleResult {
    Round rounds = 0;
    BroadcastSchedule schedule;
};

/// Minimum broadcast time from `source` by iterative deepening over the
/// target round with a memo on informed sets.
OracleResult exact_broadcast_time(const Graph& g, Vertex source, const OracleConfig& config = {});

/// Same search with several sources, each holding the message from its
/// release round on.
OracleResult exact_broadcast_time_multi(const Graph& g, const std::vector<Source>& sources,
                                        const OracleConfig& config = {});

/// Optimal broadcast on a tree: each vertex calls its children in
/// non-increasing order of their subtree broadcast times.
OracleResult tree_broadcast_time(const Graph& tree, Vertex source);

}  // namespace telbc

#endif
