#include "telbc/schedule.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace telbc {

Round BroadcastSchedule::completion() const {
    Round last = 0;
    for (const auto& s : sources)
        last = std::max(last, s.release);
    for (const auto& c : calls)
        last = std::max(last, c.round);
    return last;
}

void BroadcastSchedule::normalize() {
    std::sort(calls.begin(), calls.end());
}

std::string to_string(ScheduleFault fault) {
    switch (fault) {
    case ScheduleFault::UncoveredVertex: return "UncoveredVertex";
    case ScheduleFault::DoubleCall: return "DoubleCall";
    case ScheduleFault::CallerUninformed: return "CallerUninformed";
    case ScheduleFault::NonEdgeCall: return "NonEdgeCall";
    case ScheduleFault::DoubleInform: return "DoubleInform";
    case ScheduleFault::CalleeIsSource: return "CalleeIsSource";
    case ScheduleFault::BadVertex: return "BadVertex";
    case ScheduleFault::BadRound: return "BadRound";
    case ScheduleFault::NoSource: return "NoSource";
    }
    return "Unknown";
}

ScheduleError::ScheduleError(ScheduleFault fault, Round round, Vertex vertex, const std::string& detail)
    : std::runtime_error(to_string(fault) + " (round " + std::to_string(round) + ", vertex " +
                         std::to_string(vertex) + "): " + detail),
      fault_(fault), round_(round), vertex_(vertex) {}

std::vector<Round> inform_rounds(int n, const BroadcastSchedule& schedule) {
    std::vector<Round> when(n, -1);
    for (const auto& s : schedule.sources)
        if (s.v >= 0 && s.v < n)
            when[s.v] = s.release;
    for (const auto& c : schedule.calls)
        if (c.callee >= 0 && c.callee < n)
            when[c.callee] = c.round;
    return when;
}

Round validate_schedule(const Graph& g, const BroadcastSchedule& schedule) {
    const int n = g.size();
    if (schedule.sources.empty())
        throw ScheduleError(ScheduleFault::NoSource, 0, -1, "schedule has no source");

    std::vector<Round> informed(n, -1);
    std::vector<char> is_source(n, 0);
    for (const auto& s : schedule.sources) {
        if (!g.contains(s.v))
            throw ScheduleError(ScheduleFault::BadVertex, s.release, s.v, "source not in graph");
        if (s.release < 0)
            throw ScheduleError(ScheduleFault::BadRound, s.release, s.v, "negative release");
        if (is_source[s.v])
            throw ScheduleError(ScheduleFault::DoubleInform, s.release, s.v, "source listed twice");
        is_source[s.v] = 1;
        informed[s.v] = s.release;
    }
    for (const auto& c : schedule.calls) {
        if (!g.contains(c.caller) || !g.contains(c.callee))
            throw ScheduleError(ScheduleFault::BadVertex, c.round, g.contains(c.caller) ? c.callee : c.caller,
                                "call endpoint not in graph");
        if (c.round < 1)
            throw ScheduleError(ScheduleFault::BadRound, c.round, c.caller, "call rounds start at 1");
        if (is_source[c.callee])
            throw ScheduleError(ScheduleFault::CalleeIsSource, c.round, c.callee, "callee is a source");
        if (informed[c.callee] >= 0)
            throw ScheduleError(ScheduleFault::DoubleInform, c.round, c.callee, "vertex called twice");
        informed[c.callee] = c.round;
    }
    std::set<std::pair<Vertex, Round>> busy;
    for (const auto& c : schedule.calls) {
        if (!g.has_edge(c.caller, c.callee))
            throw ScheduleError(ScheduleFault::NonEdgeCall, c.round, c.caller,
                                "no edge to " + std::to_string(c.callee));
        if (informed[c.caller] < 0 || informed[c.caller] >= c.round)
            throw ScheduleError(ScheduleFault::CallerUninformed, c.round, c.caller,
                                "caller not informed before the call");
        if (!busy.emplace(c.caller, c.round).second)
            throw ScheduleError(ScheduleFault::DoubleCall, c.round, c.caller, "two calls in one round");
    }
    Round completion = 0;
    for (Vertex v = 0; v < n; ++v) {
        if (informed[v] < 0)
            throw ScheduleError(ScheduleFault::UncoveredVertex, 0, v, "vertex never informed");
        completion = std::max(completion, informed[v]);
    }
    return completion;
}

std::vector<int> informed_count_profile(int n, const BroadcastSchedule& schedule) {
    auto when = inform_rounds(n, schedule);
    Round last = 0;
    for (Round r : when)
        last = std::max(last, r);
    std::vector<int> count(last + 1, 0);
    for (Round r : when)
        if (r >= 0)
            ++count[r];
    for (std::size_t i = 1; i < count.size(); ++i)
        count[i] += count[i - 1];
    return count;
}

BroadcastSchedule compact_schedule(const Graph& g, const BroadcastSchedule& schedule) {
    validate_schedule(g, schedule);
    std::map<Vertex, std::vector<Call>> outgoing;
    for (const auto& c : schedule.calls)
        outgoing[c.caller].push_back(c);
    for (auto& [v, calls] : outgoing)
        std::sort(calls.begin(), calls.end());

    BroadcastSchedule out;
    out.sources = schedule.sources;
    std::vector<std::pair<Vertex, Round>> frontier;
    for (const auto& s : schedule.sources)
        frontier.emplace_back(s.v, s.release);
    while (!frontier.empty()) {
        auto [v, at] = frontier.back();
        frontier.pop_back();
        auto it = outgoing.find(v);
        if (it == outgoing.end())
            continue;
        Round next = at;
        for (const auto& c : it->second) {
            ++next;
            out.calls.push_back({next, v, c.callee});
            frontier.emplace_back(c.callee, next);
        }
    }
    out.normalize();
    return out;
}

}  // namespace telbc
