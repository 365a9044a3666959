#ifndef TELBC_BANDWIDTH_DP_HPP
#define TELBC_BANDWIDTH_DP_HPP

#include "telbc/graph.hpp"
#include "telbc/schedule.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace telbc {

/// A dynamic-programming row grew past its configured state budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// What the sweep remembers about one of the last k processed vertices.
struct WindowSlot {
    Round time = 0;            // inform round
    bool pending = false;      // still waits for a parent later in the ordering
    std::uint64_t calls = 0;   // bit r set: the vertex already calls in round r
    bool operator==(const WindowSlot&) const = default;
};

/// Boundary of a partial broadcast tree: slots of the last (up to) k
/// vertices of the ordering, oldest first. Slots of vertices without
/// neighbors further along are retired to a bare time.
struct WindowState {
    std::vector<WindowSlot> slots;
    bool operator==(const WindowState&) const = default;
    /// Latest inform time among the window's vertices.
    Round latest() const;
};

/// How the next vertex of the ordering was attached.
struct WindowMove {
    Round time = 0;
    int parent = -1;             // slot index of its caller, -1 for none (source or pending)
    bool pending = false;
    std::uint64_t children = 0;  // bit j: claims the pending vertex of slot j
};

/// Fixed problem data for one sweep.
struct SweepContext {
    const Graph* graph = nullptr;
    std::vector<Vertex> ordering;
    int k = 1;
    Round horizon = 0;                  // no inform round beyond this
    std::vector<Round> release;         // per vertex, -1 for non-sources
};

/// All states at step i + 1 reachable from `state` (covering positions
/// 0..i - 1) by placing ordering[i].
std::vector<std::pair<WindowState, WindowMove>> successor_states(const SweepContext& ctx, int step,
                                                                 const WindowState& state);

/// dp[i+1][s] = max(dp[i][s*], latest(s)).
inline Round dp_value_recurrence(Round predecessor_value, const WindowState& next) {
    return std::max(predecessor_value, next.latest());
}

struct DpConfig {
    std::size_t max_states_per_row = 1'000'000;
};

struct DpStats {
    std::size_t peak_row_states = 0;
    Round horizons_tried = 0;
};

struct DpResult {
    Round rounds = 0;
    BroadcastSchedule schedule;
    int k = 0;
    bool cross_source_edges = false;  // some edge jumps over the originator in the ordering
    DpStats stats;
};

/// Exact broadcast time on a graph with a bandwidth-k ordering, several
/// sources allowed. Searches horizons upwards from a distance lower bound.
DpResult dp_broadcast(const Graph& g, std::span<const Vertex> ordering, int k, std::span<const Source> sources,
                      const DpConfig& config = {});

DpResult dp_broadcast(const Graph& g, std::span<const Vertex> ordering, int k, Vertex source,
                      const DpConfig& config = {});

/// Single source anywhere in the ordering; both sides of the source are
/// swept together so edges crossing the source's position are handled.
DpResult dp_broadcast_general_source(const Graph& g, std::span<const Vertex> ordering, int k, Vertex source,
                                     const DpConfig& config = {});

/// Upper bound on states per row for bandwidth k and n vertices.
double window_state_bound(int k, int n);

}  // namespace telbc

#endif
