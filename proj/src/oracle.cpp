#include "telbc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <unordered_map>

namespace telbc {

namespace {

using Mask = std::uint32_t;

class BroadcastSearch {
public:
    BroadcastSearch(const Graph& g, std::vector<Source> sources) : g_(g), n_(g.size()), sources_(std::move(sources)) {
        full_ = n_ == 32 ? ~Mask{0} : (Mask{1} << n_) - 1;
        neighbor_mask_.assign(n_, 0);
        for (Vertex v = 0; v < n_; ++v)
            for (Vertex w : g_.neighbors(v))
                neighbor_mask_[v] |= Mask{1} << w;
        // ball_[v][d]: vertices within distance d of v
        ball_.assign(n_, std::vector<Mask>(n_ + 1, 0));
        for (Vertex v = 0; v < n_; ++v) {
            auto dist = g_.distances_from(v);
            for (Vertex w = 0; w < n_; ++w)
                for (int d = std::max(dist[w], 0); d <= n_; ++d)
                    ball_[v][d] |= Mask{1} << w;
        }
        std::sort(sources_.begin(), sources_.end(),
                  [](const Source& a, const Source& b) { return a.release < b.release; });
        for (const auto& s : sources_)
            source_mask_ |= Mask{1} << s.v;
    }

    OracleResult solve() {
        for (Round target = 0;; ++target) {
            failed_at_.clear();
            calls_.clear();
            if (search(0, 0, target)) {
                OracleResult result;
                result.rounds = target;
                result.schedule.sources = sources_;
                std::sort(result.schedule.sources.begin(), result.schedule.sources.end());
                result.schedule.calls = calls_;
                result.schedule.normalize();
                result.rounds = std::max(result.rounds, 0);
                result.rounds = validate_schedule(g_, result.schedule);
                return result;
            }
        }
    }

private:
    Mask released_by(Round r) const {
        Mask m = 0;
        for (const auto& s : sources_)
            if (s.release <= r)
                m |= Mask{1} << s.v;
        return m;
    }

    bool hopeless(Mask informed, Round r, Round target) const {
        const int remaining = target - r;
        // informed vertices at most double each round
        long long reach = static_cast<long long>(std::popcount(informed)) << std::min(remaining, 40);
        for (const auto& s : sources_)
            if (s.release > r && s.release <= target && !(informed >> s.v & 1))
                reach += 1LL << std::min(target - s.release, 40);
        if (reach < n_)
            return true;
        for (Vertex v = 0; v < n_; ++v) {
            if (informed >> v & 1)
                continue;
            if (ball_[v][remaining] & informed)
                continue;
            bool late_ok = false;
            for (const auto& s : sources_)
                if (s.release > r && s.release <= target && (ball_[v][target - s.release] >> s.v & 1)) {
                    late_ok = true;
                    break;
                }
            if (!late_ok)
                return true;
        }
        return false;
    }

    struct Successor {
        Mask informed;
        std::vector<std::pair<Vertex, Vertex>> calls;
    };

    void enumerate(const std::vector<Vertex>& callers, std::size_t idx, Mask uninformed, Mask taken,
                   std::vector<std::pair<Vertex, Vertex>>& chosen, std::vector<Vertex>& idle,
                   std::vector<Successor>& out, std::unordered_map<Mask, std::size_t>& seen) const {
        if (idx == callers.size()) {
            for (Vertex c : idle)
                if (neighbor_mask_[c] & uninformed & ~taken)
                    return;  // not maximal
            if (seen.emplace(taken, out.size()).second)
                out.push_back({taken, chosen});
            return;
        }
        Vertex c = callers[idx];
        Mask options = neighbor_mask_[c] & uninformed & ~taken;
        while (options) {
            Vertex w = std::countr_zero(options);
            options &= options - 1;
            chosen.emplace_back(c, w);
            enumerate(callers, idx + 1, uninformed, taken | Mask{1} << w, chosen, idle, out, seen);
            chosen.pop_back();
        }
        idle.push_back(c);
        enumerate(callers, idx + 1, uninformed, taken, chosen, idle, out, seen);
        idle.pop_back();
    }

    bool search(Mask informed, Round r, Round target) {
        informed |= released_by(r);
        if (informed == full_)
            return true;
        if (r >= target)
            return false;
        if (auto it = failed_at_.find(informed); it != failed_at_.end() && it->second <= r)
            return false;
        if (hopeless(informed, r, target)) {
            remember_failure(informed, r);
            return false;
        }

        // late sources wait for their release
        const Mask uninformed = full_ & ~informed & ~source_mask_;
        std::vector<Vertex> callers;
        for (Mask m = informed; m; m &= m - 1) {
            Vertex v = std::countr_zero(m);
            if (neighbor_mask_[v] & uninformed)
                callers.push_back(v);
        }
        std::vector<Successor> successors;
        std::unordered_map<Mask, std::size_t> seen;
        std::vector<std::pair<Vertex, Vertex>> chosen;
        std::vector<Vertex> idle;
        enumerate(callers, 0, uninformed, 0, chosen, idle, successors, seen);
        std::stable_sort(successors.begin(), successors.end(), [](const Successor& a, const Successor& b) {
            return std::popcount(a.informed) > std::popcount(b.informed);
        });

        for (const auto& next : successors) {
            if (search(informed | next.informed, r + 1, target)) {
                for (const auto& [caller, callee] : next.calls)
                    calls_.push_back({r + 1, caller, callee});
                return true;
            }
        }
        remember_failure(informed, r);
        return false;
    }

    void remember_failure(Mask informed, Round r) {
        auto [it, inserted] = failed_at_.emplace(informed, r);
        if (!inserted)
            it->second = std::min(it->second, r);
    }

    const Graph& g_;
    int n_;
    std::vector<Source> sources_;
    Mask full_ = 0;
    Mask source_mask_ = 0;
    std::vector<Mask> neighbor_mask_;
    std::vector<std::vector<Mask>> ball_;
    std::unordered_map<Mask, Round> failed_at_;
    std::vector<Call> calls_;
};

}  // namespace

OracleResult exact_broadcast_time(const Graph& g, Vertex source, const OracleConfig& config) {
    if (g.size() > config.max_vertices)
        throw InstanceTooLarge("exact search capped at " + std::to_string(config.max_vertices) + " vertices, got " +
                               std::to_string(g.size()));
    if (!g.contains(source))
        throw InvalidInput("source not in graph");
    require_connected(g);
    return BroadcastSearch(g, {{source, 0}}).solve();
}

OracleResult exact_broadcast_time_multi(const Graph& g, const std::vector<Source>& sources,
                                        const OracleConfig& config) {
    if (sources.empty())
        throw InvalidInput("source list is empty");
    if (g.size() > config.max_vertices_multi)
        throw InstanceTooLarge("multi-source exact search capped at " + std::to_string(config.max_vertices_multi) +
                               " vertices, got " + std::to_string(g.size()));
    std::vector<char> seen(g.size(), 0);
    for (const auto& s : sources) {
        if (!g.contains(s.v))
            throw InvalidInput("source not in graph");
        if (s.release < 0)
            throw InvalidInput("negative release round");
        if (seen[s.v]++)
            throw InvalidInput("source listed twice");
    }
    require_connected(g);
    return BroadcastSearch(g, sources).solve();
}

OracleResult tree_broadcast_time(const Graph& tree, Vertex source) {
    if (!tree.contains(source))
        throw InvalidInput("source not in graph");
    if (!tree.is_tree())
        throw InvalidInput("input is not a tree");
    const int n = tree.size();

    std::vector<Vertex> parent(n, -1), order;
    order.reserve(n);
    order.push_back(source);
    parent[source] = source;
    for (std::size_t head = 0; head < order.size(); ++head)
        for (Vertex w : tree.neighbors(order[head]))
            if (parent[w] < 0) {
                parent[w] = order[head];
                order.push_back(w);
            }

    std::vector<int> time(n, 0);
    std::vector<std::vector<Vertex>> children(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = children[v];
        for (Vertex w : tree.neighbors(v))
            if (w != parent[v])
                kids.push_back(w);
        std::stable_sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return time[a] > time[b]; });
        for (std::size_t i = 0; i < kids.size(); ++i)
            time[v] = std::max(time[v], static_cast<int>(i) + 1 + time[kids[i]]);
    }

    OracleResult result;
    result.rounds = time[source];
    result.schedule.sources = {{source, 0}};
    std::vector<Round> informed(n, 0);
    for (Vertex v : order)
        for (std::size_t i = 0; i < children[v].size(); ++i) {
            Vertex w = children[v][i];
            informed[w] = informed[v] + static_cast<Round>(i) + 1;
            result.schedule.calls.push_back({informed[w], v, w});
        }
    result.schedule.normalize();
    return result;
}

}  // namespace telbc
