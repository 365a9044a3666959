#include "telbc/bandwidth_dp.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <unordered_map>

namespace telbc {

namespace {

struct Layout {
    std::vector<int> position;       // vertex -> index in the ordering
    std::vector<int> last_neighbor;  // vertex -> furthest neighbor position
};

Layout layout_of(const SweepContext& ctx) {
    const Graph& g = *ctx.graph;
    Layout lay;
    lay.position.assign(g.size(), -1);
    for (int i = 0; i < static_cast<int>(ctx.ordering.size()); ++i)
        lay.position[ctx.ordering[i]] = i;
    lay.last_neighbor.assign(g.size(), -1);
    for (Vertex v = 0; v < g.size(); ++v)
        for (Vertex u : g.neighbors(v))
            lay.last_neighbor[v] = std::max(lay.last_neighbor[v], lay.position[u]);
    return lay;
}

std::vector<Round> earliest_times(const SweepContext& ctx) {
    const Graph& g = *ctx.graph;
    std::vector<Round> best(g.size(), std::numeric_limits<Round>::max());
    for (Vertex s = 0; s < g.size(); ++s) {
        if (ctx.release[s] < 0)
            continue;
        auto dist = g.distances_from(s);
        for (Vertex v = 0; v < g.size(); ++v)
            if (dist[v] >= 0)
                best[v] = std::min(best[v], ctx.release[s] + dist[v]);
    }
    return best;
}

std::string state_key(const WindowState& state) {
    std::string key;
    key.reserve(state.slots.size() * 10);
    for (const auto& slot : state.slots) {
        key.push_back(static_cast<char>(slot.time));
        key.push_back(static_cast<char>(slot.pending));
        for (int b = 0; b < 8; ++b)
            key.push_back(static_cast<char>((slot.calls >> (8 * b)) & 0xff));
    }
    return key;
}

class Sweep {
public:
    Sweep(const SweepContext& ctx) : ctx_(ctx), layout_(layout_of(ctx)), earliest_(earliest_times(ctx)) {}

    std::vector<std::pair<WindowState, WindowMove>> expand(int step, const WindowState& state) const {
        std::vector<std::pair<WindowState, WindowMove>> out;
        const Graph& g = *ctx_.graph;
        const Vertex w = ctx_.ordering[step];
        const int width = static_cast<int>(state.slots.size());
        const int first = step - width;
        const bool is_source = ctx_.release[w] >= 0;
        const bool has_future = layout_.last_neighbor[w] > step;

        std::vector<int> adjacent;
        for (int j = 0; j < width; ++j)
            if (g.has_edge(ctx_.ordering[first + j], w))
                adjacent.push_back(j);

        Round lo = is_source ? ctx_.release[w] : std::max(1, earliest_[w]);
        Round hi = is_source ? ctx_.release[w] : ctx_.horizon;
        for (Round t = lo; t <= hi; ++t) {
            std::vector<std::pair<int, bool>> parents;  // (slot, pending)
            if (!is_source) {
                for (int j : adjacent) {
                    const auto& slot = state.slots[j];
                    if (slot.time < t && !(slot.calls >> t & 1))
                        parents.push_back({j, false});
                }
                if (has_future)
                    parents.push_back({-1, true});
            } else {
                parents.push_back({-1, false});
            }
            std::vector<int> claimable;
            for (int j : adjacent)
                if (state.slots[j].pending && state.slots[j].time > t)
                    claimable.push_back(j);

            for (auto [parent, pending] : parents) {
                const int subsets = 1 << claimable.size();
                for (int mask = 0; mask < subsets; ++mask) {
                    std::uint64_t rounds = 0;
                    std::uint64_t children = 0;
                    bool ok = true;
                    for (std::size_t b = 0; b < claimable.size() && ok; ++b) {
                        if (!(mask >> b & 1))
                            continue;
                        const int j = claimable[b];
                        const std::uint64_t bit = std::uint64_t{1} << state.slots[j].time;
                        ok = !(rounds & bit);
                        rounds |= bit;
                        children |= std::uint64_t{1} << j;
                    }
                    if (!ok)
                        continue;
                    WindowMove move{t, parent, pending, children};
                    if (auto next = apply(step, state, move))
                        out.emplace_back(std::move(*next), move);
                }
            }
        }
        return out;
    }

private:
    std::optional<WindowState> apply(int step, const WindowState& state, const WindowMove& move) const {
        WindowState next = state;
        const int width = static_cast<int>(state.slots.size());
        const int first = step - width;
        WindowSlot placed{move.time, move.pending, 0};
        if (move.parent >= 0)
            next.slots[move.parent].calls |= std::uint64_t{1} << move.time;
        for (int j = 0; j < width; ++j) {
            if (move.children >> j & 1) {
                next.slots[j].pending = false;
                placed.calls |= std::uint64_t{1} << state.slots[j].time;
            }
        }
        next.slots.push_back(placed);
        int base = first;
        if (static_cast<int>(next.slots.size()) > ctx_.k) {
            if (next.slots.front().pending)
                return std::nullopt;
            next.slots.erase(next.slots.begin());
            ++base;
        }
        for (std::size_t j = 0; j < next.slots.size(); ++j) {
            const Vertex v = ctx_.ordering[base + static_cast<int>(j)];
            if (layout_.last_neighbor[v] > step)
                continue;
            if (next.slots[j].pending)
                return std::nullopt;
            next.slots[j] = WindowSlot{};
        }
        return next;
    }

    const SweepContext& ctx_;
    Layout layout_;
    std::vector<Round> earliest_;
};

struct Entry {
    WindowState state;
    Round value = 0;
    int pred = -1;
    WindowMove move;
};

std::optional<BroadcastSchedule> run_sweep(const SweepContext& ctx, const DpConfig& config, DpStats& stats) {
    Sweep sweep(ctx);
    const int n = static_cast<int>(ctx.ordering.size());
    std::vector<std::vector<Entry>> rows(n + 1);
    rows[0].push_back({WindowState{}, 0, -1, {}});
    for (int i = 0; i < n; ++i) {
        std::unordered_map<std::string, int> index;
        auto& row = rows[i + 1];
        for (int e = 0; e < static_cast<int>(rows[i].size()); ++e) {
            const Round base = rows[i][e].value;
            for (auto& [state, move] : sweep.expand(i, rows[i][e].state)) {
                const Round value = dp_value_recurrence(base, state);
                auto key = state_key(state);
                auto [it, fresh] = index.try_emplace(std::move(key), static_cast<int>(row.size()));
                if (fresh) {
                    row.push_back({std::move(state), value, e, move});
                    if (row.size() > config.max_states_per_row)
                        throw BudgetExceeded("dynamic program exceeded " +
                                             std::to_string(config.max_states_per_row) + " states in row " +
                                             std::to_string(i + 1));
                } else if (value < row[it->second].value) {
                    row[it->second].value = value;
                    row[it->second].pred = e;
                    row[it->second].move = move;
                }
            }
        }
        stats.peak_row_states = std::max(stats.peak_row_states, row.size());
        if (row.empty())
            return std::nullopt;
    }

    int best = 0;
    for (int e = 1; e < static_cast<int>(rows[n].size()); ++e)
        if (rows[n][e].value < rows[n][best].value)
            best = e;

    BroadcastSchedule sched;
    std::vector<Round> time(n, 0);
    std::vector<Vertex> parent(ctx.graph->size(), -1);
    for (int i = n, e = best; i > 0; e = rows[i][e].pred, --i) {
        const auto& move = rows[i][e].move;
        const Vertex w = ctx.ordering[i - 1];
        const int width = std::min(i - 1, ctx.k);
        const int first = i - 1 - width;
        time[w] = move.time;
        if (move.parent >= 0)
            parent[w] = ctx.ordering[first + move.parent];
        for (int j = 0; j < width; ++j)
            if (move.children >> j & 1)
                parent[ctx.ordering[first + j]] = w;
    }
    for (Vertex v = 0; v < ctx.graph->size(); ++v) {
        if (ctx.release[v] >= 0)
            sched.sources.push_back({v, ctx.release[v]});
        else
            sched.calls.push_back({time[v], parent[v], v});
    }
    sched.normalize();
    return sched;
}

}  // namespace

Round WindowState::latest() const {
    Round best = 0;
    for (const auto& slot : slots)
        best = std::max(best, slot.time);
    return best;
}

std::vector<std::pair<WindowState, WindowMove>> successor_states(const SweepContext& ctx, int step,
                                                                 const WindowState& state) {
    if (step < 0 || step >= static_cast<int>(ctx.ordering.size()))
        throw InvalidInput("step outside the ordering");
    if (static_cast<int>(state.slots.size()) != std::min(step, ctx.k))
        throw InvalidInput("window width does not match the step");
    return Sweep(ctx).expand(step, state);
}

DpResult dp_broadcast(const Graph& g, std::span<const Vertex> ordering, int k, std::span<const Source> sources,
                      const DpConfig& config) {
    require_connected(g);
    if (k < 1)
        throw InvalidInput("bandwidth must be at least 1");
    if (!verify_bandwidth_ordering(g, ordering, k))
        throw InvalidInput("ordering has bandwidth " + std::to_string(ordering_bandwidth(g, ordering)) +
                           ", more than " + std::to_string(k));
    if (sources.empty())
        throw InvalidInput("no source");

    SweepContext ctx;
    ctx.graph = &g;
    ctx.ordering.assign(ordering.begin(), ordering.end());
    ctx.k = k;
    ctx.release.assign(g.size(), -1);
    Round latest_release = 0;
    for (const auto& s : sources) {
        if (!g.contains(s.v) || s.release < 0)
            throw InvalidInput("bad source");
        if (ctx.release[s.v] >= 0)
            throw InvalidInput("duplicate source");
        ctx.release[s.v] = s.release;
        latest_release = std::max(latest_release, s.release);
    }
    if (latest_release + g.size() > 62)
        throw InvalidInput("horizon too large for the window encoding");

    Round lo = 0;
    for (Round t : earliest_times(ctx))
        lo = std::max(lo, t);
    if (sources.size() == 1 && sources[0].release == 0)
        lo = std::max(lo, broadcast_lower_bound(g, sources[0].v));

    DpResult result;
    result.k = k;
    if (sources.size() == 1) {
        std::vector<int> pos(g.size());
        for (int i = 0; i < g.size(); ++i)
            pos[ordering[i]] = i;
        const int p = pos[sources[0].v];
        for (auto [u, v] : g.edges())
            if (std::min(pos[u], pos[v]) < p && p < std::max(pos[u], pos[v]))
                result.cross_source_edges = true;
    }
    for (Round horizon = lo; horizon <= latest_release + g.size(); ++horizon) {
        ctx.horizon = horizon;
        ++result.stats.horizons_tried;
        if (auto sched = run_sweep(ctx, config, result.stats)) {
            result.schedule = std::move(*sched);
            result.rounds = validate_schedule(g, result.schedule);
            return result;
        }
    }
    throw std::logic_error("no schedule within the trivial horizon");
}

DpResult dp_broadcast(const Graph& g, std::span<const Vertex> ordering, int k, Vertex source,
                      const DpConfig& config) {
    const Source s{source, 0};
    return dp_broadcast(g, ordering, k, std::span<const Source>(&s, 1), config);
}

DpResult dp_broadcast_general_source(const Graph& g, std::span<const Vertex> ordering, int k, Vertex source,
                                     const DpConfig& config) {
    return dp_broadcast(g, ordering, k, source, config);
}

double window_state_bound(int k, int n) {
    const double two_k = 2.0 * k;
    return std::pow(two_k + 1, k) * std::pow(two_k, k) * std::pow(two_k, k * (two_k + 1)) * std::pow(n, k);
}

}  // namespace telbc
