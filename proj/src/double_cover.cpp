#include "telbc/double_cover.hpp"

#include "telbc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace telbc {

namespace {

struct Supply {
    std::vector<int> value;
    std::vector<int> count;

    explicit Supply(const RoundedMultiset& set) {
        for (const auto& part : set.parts) {
            value.push_back(part.value);
            count.push_back(part.count);
        }
    }
    int types() const { return static_cast<int>(value.size()); }
    int total() const { return std::accumulate(count.begin(), count.end(), 0); }
    long long top_sum(int k) const {
        long long sum = 0;
        for (int t = 0; t < types() && k > 0; ++t) {
            int take = std::min(k, count[t]);
            sum += static_cast<long long>(take) * value[t];
            k -= take;
        }
        return sum;
    }
    // smallest available type with value in [lo, hi); -1 if none
    int smallest_in(int lo, int hi) const {
        for (int t = types() - 1; t >= 0; --t)
            if (count[t] > 0 && value[t] >= lo && value[t] < hi)
                return t;
        return -1;
    }
};

class RoundedDoubleSearch {
public:
    RoundedDoubleSearch(const RoundedMultiset& ground, const RoundedMultiset& c_side, const RoundedMultiset& d_side)
        : demand_(ground.values()), suffix_(demand_.size() + 1, 0), c_(c_side), d_(d_side),
          picks_(demand_.size(), {-1, -1}) {
        for (int i = static_cast<int>(demand_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + demand_[i];
    }

    bool run() { return go(0); }
    const std::vector<std::pair<int, int>>& picks() const { return picks_; }

private:
    std::string key(std::size_t idx) const {
        std::string k;
        auto put = [&](int v) {
            k.push_back(static_cast<char>(v & 0xff));
            k.push_back(static_cast<char>(v >> 8));
        };
        put(static_cast<int>(idx));
        for (int v : c_.count)
            put(v);
        for (int v : d_.count)
            put(v);
        return k;
    }

    bool go(std::size_t idx) {
        if (idx == demand_.size())
            return true;
        const int left = static_cast<int>(demand_.size() - idx);
        if (c_.total() + d_.total() < left || c_.top_sum(left) + d_.top_sum(left) < suffix_[idx])
            return false;
        auto k = key(idx);
        if (failed_.count(k))
            return false;
        const int need = demand_[idx];
        constexpr int kAny = 1 << 30;
        if (int a = c_.smallest_in(need, kAny); a >= 0 && attempt(idx, a, -1))
            return true;
        if (int b = d_.smallest_in(need, kAny); b >= 0 && attempt(idx, -1, b))
            return true;
        for (int a = 0; a < c_.types(); ++a) {
            if (c_.count[a] == 0 || c_.value[a] >= need)
                continue;
            int b = d_.smallest_in(need - c_.value[a], need);
            if (b >= 0 && attempt(idx, a, b))
                return true;
        }
        failed_.insert(std::move(k));
        return false;
    }

    bool attempt(std::size_t idx, int a, int b) {
        if (a >= 0)
            --c_.count[a];
        if (b >= 0)
            --d_.count[b];
        picks_[idx] = {a, b};
        bool ok = go(idx + 1);
        if (a >= 0)
            ++c_.count[a];
        if (b >= 0)
            ++d_.count[b];
        return ok;
    }

    std::vector<int> demand_;
    std::vector<long long> suffix_;
    Supply c_, d_;
    std::vector<std::pair<int, int>> picks_;
    std::unordered_set<std::string> failed_;
};

std::vector<int> part_starts(const RoundedMultiset& set) {
    std::vector<int> starts;
    for (int start = 0; const auto& part : set.parts) {
        starts.push_back(start);
        start += part.count;
    }
    return starts;
}

// Moves the used values of one side to the top of [top], keeping their order.
bool compact_side(std::vector<int>& values, int top) {
    std::vector<int> used;
    for (int v : values)
        if (v > 0)
            used.push_back(v);
    std::sort(used.begin(), used.end(), std::greater<>());
    for (int& v : values) {
        if (v == 0)
            continue;
        auto rank = std::find(used.begin(), used.end(), v) - used.begin();
        v = std::min(v, top - static_cast<int>(rank));
        if (v < 1)
            return false;
    }
    return true;
}

struct PathView {
    Vertex near = 0, far = 1;
    std::vector<std::vector<Vertex>> paths;  // internal vertices, near side first
};

PathView view_of(const KPathGraph& built, bool swapped) {
    PathView view;
    view.near = swapped ? built.t : built.s;
    view.far = swapped ? built.s : built.t;
    view.paths = built.paths;
    if (swapped)
        for (auto& path : view.paths)
            std::reverse(path.begin(), path.end());
    return view;
}

}  // namespace

std::optional<RankedDoubleCover> feasible_double_cover_rounded(const RoundedMultiset& ground,
                                                               const RoundedMultiset& c_side,
                                                               const RoundedMultiset& d_side) {
    RoundedDoubleSearch search(ground, c_side, d_side);
    if (!search.run())
        return std::nullopt;
    auto c_next = part_starts(c_side);
    auto d_next = part_starts(d_side);
    RankedDoubleCover out;
    for (const auto& [a, b] : search.picks()) {
        out.c_rank.push_back(a >= 0 ? c_next[a]++ : -1);
        out.d_rank.push_back(b >= 0 ? d_next[b]++ : -1);
    }
    return out;
}

DoubleCoverWitness lift_double_cover(const RankedDoubleCover& cover, std::span<const int> ground, int m, int beta,
                                     int p) {
    if (cover.c_rank.size() != ground.size() || cover.d_rank.size() != ground.size())
        throw InvalidInput("ranked double cover does not match the ground multiset");
    DoubleCoverWitness w;
    w.m = m + part_size(m, p);
    w.beta = beta;
    w.c.assign(ground.size(), 0);
    w.d.assign(ground.size(), 0);
    std::vector<int> order(ground.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return ground[a] > ground[b]; });
    for (std::size_t j = 0; j < order.size(); ++j) {
        if (int r = cover.c_rank[j]; r >= 0) {
            if (r >= m)
                throw InvalidInput("C rank outside the rounded prefix");
            w.c[order[j]] = lifted_value(r, m, p);
        }
        if (int r = cover.d_rank[j]; r >= 0) {
            if (r >= m - beta)
                throw InvalidInput("D rank outside the rounded prefix");
            w.d[order[j]] = lifted_value(r, m, p) - beta;
        }
    }
    return w;
}

DoubleCoverWitness shrink_double_cover(std::span<const int> ground, DoubleCoverWitness witness) {
    for (;;) {
        DoubleCoverWitness smaller = witness;
        smaller.m = witness.m - 1;
        if (smaller.m < 1 || !compact_side(smaller.c, smaller.m) ||
            !compact_side(smaller.d, smaller.m - smaller.beta) || !is_valid_double_cover(ground, smaller))
            return witness;
        witness = std::move(smaller);
    }
}

DoublePrefixCoverResult ptas_double_prefix_cover(std::span<const int> ground, int beta, int p) {
    if (ground.empty())
        throw InvalidInput("ground multiset is empty");
    if (p < 1)
        throw InvalidInput("p must be at least 1");
    if (beta < 0)
        throw InvalidInput("beta must be non-negative");
    for (int v : ground)
        if (v < 1)
            throw InvalidInput("ground elements must be positive");
    const auto rounded_ground = round_multiset(ground, p);
    const int count = static_cast<int>(ground.size());
    const int largest = *std::max_element(ground.begin(), ground.end());

    std::optional<RankedDoubleCover> found;
    int m = 1;
    for (;; ++m) {
        const int slots = m + std::max(0, m - beta);
        if (slots < count || slots < largest)
            continue;
        found = feasible_double_cover_rounded(rounded_ground, round_prefix(m, p), round_prefix(m - beta, p));
        if (found)
            break;
    }
    DoublePrefixCoverResult result;
    result.p = p;
    result.rounded_m = m;
    result.lifted_m = m + part_size(m, p);
    result.guarantee = double_cover_factor(p);
    result.witness = shrink_double_cover(ground, lift_double_cover(*found, ground, m, beta, p));
    return result;
}

BroadcastSchedule double_cover_to_schedule(const KPathSpec& spec, const DoubleCoverWitness& witness, Round alpha) {
    if (alpha < 0)
        throw InvalidInput("release round must be non-negative");
    if (witness.beta != covering_offset(alpha))
        throw InvalidInput("witness offset " + std::to_string(witness.beta) + " does not match release round " +
                           std::to_string(alpha));
    if (auto err = check_double_cover(spec.lengths, witness); !err.empty())
        throw InvalidInput("witness does not cover the path lengths: " + err);
    auto built = build_k_path(spec);
    const int m = witness.m;
    BroadcastSchedule sched;
    sched.sources = {{built.s, 0}, {built.t, alpha}};
    for (std::size_t i = 0; i < built.paths.size(); ++i) {
        const auto& path = built.paths[i];
        const int length = static_cast<int>(path.size());
        const int from_s = std::min(witness.c[i], length);
        Round r = m - witness.c[i] + 1;
        Vertex prev = built.s;
        for (int q = 0; q < from_s; ++q, ++r) {
            sched.calls.push_back({r, prev, path[q]});
            prev = path[q];
        }
        r = m - witness.d[i] + 1;
        prev = built.t;
        for (int q = length - 1; q >= from_s; --q, ++r) {
            sched.calls.push_back({r, prev, path[q]});
            prev = path[q];
        }
    }
    sched.normalize();
    return sched;
}

DoubleSourceInstance reduce_single_source(const KPathSpec& spec, Vertex originator) {
    auto built = build_k_path(spec);
    if (!built.graph.contains(originator))
        throw InvalidInput("originator not in graph");

    DoubleSourceInstance out;
    int home = -1, pos = -1;
    for (std::size_t i = 0; i < built.paths.size(); ++i) {
        auto it = std::find(built.paths[i].begin(), built.paths[i].end(), originator);
        if (it != built.paths[i].end()) {
            home = static_cast<int>(i);
            pos = static_cast<int>(it - built.paths[i].begin());
        }
    }
    if (home >= 0) {
        const int length = static_cast<int>(built.paths[home].size());
        out.swapped = pos + 1 > length - pos;
        if (out.swapped)
            pos = length - 1 - pos;
    } else {
        out.swapped = originator == built.t;
    }
    const PathView view = view_of(built, out.swapped);
    out.originator_path = home;

    // shortest route between the endpoints other than the originator's path
    int relay_length = -1;
    for (std::size_t i = 0; i < spec.lengths.size(); ++i) {
        if (static_cast<int>(i) == home)
            continue;
        if (relay_length < 0 || spec.lengths[i] < relay_length) {
            relay_length = spec.lengths[i];
            out.relay_path = static_cast<int>(i);
        }
    }
    if (spec.st_edge) {
        relay_length = 0;
        out.relay_path = -1;
    } else if (out.relay_path >= 0 && spec.lengths[out.relay_path] == 0) {
        out.relay_path = -1;
    }

    auto& calls = out.prefix.calls;
    out.prefix.sources = {{originator, 0}};
    std::vector<char> excluded(spec.lengths.size(), 0);
    bool use_relay = true;
    Round near_informed = 0;

    if (home >= 0) {
        const auto& arc = view.paths[home];
        const int length = static_cast<int>(arc.size());
        const int d_near = pos + 1;
        const int d_far = length - pos;
        near_informed = d_near;
        for (int t = 1; t <= pos; ++t)
            calls.push_back({t, arc[pos - t + 1], arc[pos - t]});
        calls.push_back({d_near, arc[0], view.near});
        excluded[home] = 1;
        const Round far_direct = d_far + 1;
        use_relay = relay_length >= 0 && d_near + 1 + relay_length < far_direct;
        // second call of the originator heads towards the far endpoint
        for (int q = pos + 1; q < length; ++q)
            calls.push_back({q - pos + 1, arc[q - 1], arc[q]});
        if (!use_relay) {
            calls.push_back({far_direct, arc.back(), view.far});
            out.reduction = ReductionCase::CaseI;
            out.prefix_rounds = d_near;
            out.alpha = far_direct - d_near;
        } else {
            out.reduction = ReductionCase::CaseII;
        }
    } else {
        out.reduction = ReductionCase::Direct;
    }

    if (use_relay) {
        Round r = near_informed + 1;
        Vertex prev = view.near;
        if (out.relay_path >= 0) {
            excluded[out.relay_path] = 1;
            for (Vertex v : view.paths[out.relay_path]) {
                calls.push_back({r++, prev, v});
                prev = v;
            }
        }
        calls.push_back({r, prev, view.far});
        out.prefix_rounds = near_informed + 1;
        out.alpha = relay_length;
    }
    if (!use_relay || out.relay_path < 0) {
        // zero-length paths carry no vertices either way
        for (std::size_t i = 0; i < spec.lengths.size(); ++i)
            if (spec.lengths[i] == 0)
                excluded[i] = 1;
    }
    for (std::size_t i = 0; i < spec.lengths.size(); ++i)
        if (!excluded[i] && spec.lengths[i] > 0) {
            out.residual.lengths.push_back(spec.lengths[i]);
            out.residual_paths.push_back(static_cast<int>(i));
        }
    out.prefix.normalize();
    return out;
}

KPathBroadcastResult kpath_broadcast_ptas(const KPathSpec& spec, Vertex originator, int p) {
    auto built = build_k_path(spec);
    KPathBroadcastResult result;
    result.p = p;
    result.guarantee = double_cover_factor(p);
    result.reduction = reduce_single_source(spec, originator);
    const auto& red = result.reduction;
    result.schedule = red.prefix;

    if (!red.residual.lengths.empty()) {
        auto cover = ptas_double_prefix_cover(red.residual.lengths, covering_offset(red.alpha), p);
        auto sub = double_cover_to_schedule(red.residual, cover.witness, red.alpha);
        auto sub_built = build_k_path(red.residual);
        const PathView view = view_of(built, red.swapped);
        std::vector<Vertex> to_full(sub_built.graph.size(), -1);
        to_full[sub_built.s] = view.near;
        to_full[sub_built.t] = view.far;
        for (std::size_t j = 0; j < red.residual_paths.size(); ++j) {
            // residual paths run s -> t; in the view they run near -> far
            for (std::size_t q = 0; q < sub_built.paths[j].size(); ++q)
                to_full[sub_built.paths[j][q]] = view.paths[red.residual_paths[j]][q];
        }
        for (const auto& c : sub.calls)
            result.schedule.calls.push_back({c.round + red.prefix_rounds, to_full[c.caller], to_full[c.callee]});
    }
    result.schedule.normalize();
    result.rounds = validate_schedule(built.graph, result.schedule);
    return result;
}

}  // namespace telbc
