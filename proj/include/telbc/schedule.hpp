#ifndef TELBC_SCHEDULE_HPP
#define TELBC_SCHEDULE_HPP

#include "telbc/graph.hpp"

#include <string>
#include <vector>

namespace telbc {

/// A vertex that holds the message from `release` on and may call from
/// round `release + 1`.
struct Source {
    Vertex v = 0;
    Round release = 0;
    auto operator<=>(const Source&) const = default;
};

/// One call: `caller` informs `callee` in round `round` (rounds start at 1).
struct Call {
    Round round = 1;
    Vertex caller = 0;
    Vertex callee = 0;
    auto operator<=>(const Call&) const = default;
};

/// Timed call list. Validity against a graph is checked by validate_schedule.
struct BroadcastSchedule {
    std::vector<Source> sources;
    std::vector<Call> calls;

    /// Latest inform round over sources and callees (no graph check).
    Round completion() const;
    /// Sort calls by (round, caller, callee).
    void normalize();
    bool operator==(const BroadcastSchedule&) const = default;
};

enum class ScheduleFault {
    UncoveredVertex,
    DoubleCall,
    CallerUninformed,
    NonEdgeCall,
    DoubleInform,
    CalleeIsSource,
    BadVertex,
    BadRound,
    NoSource,
};

std::string to_string(ScheduleFault fault);

/// Raised by validate_schedule; carries the fault kind and the offending round/vertex.
class ScheduleError : public std::runtime_error {
public:
    ScheduleError(ScheduleFault fault, Round round, Vertex vertex, const std::string& detail);

    ScheduleFault fault() const { return fault_; }
    Round round() const { return round_; }
    Vertex vertex() const { return vertex_; }

private:
    ScheduleFault fault_;
    Round round_;
    Vertex vertex_;
};

/// Checks every protocol rule and returns the completion round.
Round validate_schedule(const Graph& g, const BroadcastSchedule& schedule);

/// Inform round per vertex (-1 if never informed). No validation.
std::vector<Round> inform_rounds(int n, const BroadcastSchedule& schedule);

/// Number of informed vertices after each round 0..completion.
std::vector<int> informed_count_profile(int n, const BroadcastSchedule& schedule);

/// Re-times a valid schedule so every vertex places its calls, in their
/// original order, in the earliest rounds after it is informed. The broadcast
/// tree is unchanged and no vertex is informed later than before.
BroadcastSchedule compact_schedule(const Graph& g, const BroadcastSchedule& schedule);

}  // namespace telbc

#endif
