#include "telbc/prefix_cover.hpp"

#include "telbc/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_set>

namespace telbc {

namespace {

class RoundedCoverSearch {
public:
    RoundedCoverSearch(const RoundedMultiset& ground, const RoundedMultiset& cover)
        : demand_(ground.values()), suffix_(demand_.size() + 1, 0) {
        for (const auto& part : cover.parts) {
            value_.push_back(part.value);
            supply_.push_back(part.count);
        }
        for (int i = static_cast<int>(demand_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + demand_[i];
        picks_.assign(demand_.size(), {});
    }

    bool run() { return go(0); }

    // type indices chosen for each ground rank
    const std::vector<std::vector<int>>& picks() const { return picks_; }

private:
    std::string key(std::size_t idx) const {
        std::string k;
        k.reserve(2 * supply_.size() + 2);
        k.push_back(static_cast<char>(idx & 0xff));
        k.push_back(static_cast<char>(idx >> 8));
        for (int s : supply_) {
            k.push_back(static_cast<char>(s & 0xff));
            k.push_back(static_cast<char>(s >> 8));
        }
        return k;
    }

    long long top_sum(int count) const {
        long long total = 0;
        for (std::size_t k = 0; k < value_.size() && count > 0; ++k) {
            int take = std::min(count, supply_[k]);
            total += static_cast<long long>(take) * value_[k];
            count -= take;
        }
        return total;
    }

    bool go(std::size_t idx) {
        if (idx == demand_.size())
            return true;
        const int left = static_cast<int>(demand_.size() - idx);
        if (std::accumulate(supply_.begin(), supply_.end(), 0) < left || top_sum(2 * left) < suffix_[idx])
            return false;
        auto k = key(idx);
        if (failed_.count(k))
            return false;

        const int need = demand_[idx];
        const int types = static_cast<int>(value_.size());
        // single: the smallest sufficient value
        for (int t = types - 1; t >= 0; --t) {
            if (supply_[t] == 0 || value_[t] < need)
                continue;
            if (try_pick(idx, {t}))
                return true;
            break;
        }
        // pairs of values below the demand; for each larger partner the
        // smallest sufficient smaller partner
        for (int a = 0; a < types; ++a) {
            if (supply_[a] == 0 || value_[a] >= need)
                continue;
            for (int b = types - 1; b >= a; --b) {
                int available = supply_[b] - (a == b ? 1 : 0);
                if (available <= 0 || value_[a] + value_[b] < need)
                    continue;
                if (try_pick(idx, {a, b}))
                    return true;
                break;
            }
        }
        failed_.insert(std::move(k));
        return false;
    }

    bool try_pick(std::size_t idx, std::vector<int> types) {
        for (int t : types)
            --supply_[t];
        picks_[idx] = types;
        bool ok = go(idx + 1);
        for (int t : types)
            ++supply_[t];
        return ok;
    }

    std::vector<int> demand_;
    std::vector<long long> suffix_;
    std::vector<int> value_;
    std::vector<int> supply_;
    std::vector<std::vector<int>> picks_;
    std::unordered_set<std::string> failed_;
};

std::vector<int> descending_indices(std::span<const int> values) {
    std::vector<int> idx(values.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return values[a] > values[b]; });
    return idx;
}

}  // namespace

std::optional<RankedCover> feasible_cover_rounded(const RoundedMultiset& ground, const RoundedMultiset& cover) {
    RoundedCoverSearch search(ground, cover);
    if (!search.run())
        return std::nullopt;
    // hand out concrete ranks inside each cover part in order of use
    std::vector<int> next_rank;
    for (int start = 0; const auto& part : cover.parts) {
        next_rank.push_back(start);
        start += part.count;
    }
    RankedCover out;
    for (const auto& types : search.picks()) {
        std::vector<int> ranks;
        for (int t : types)
            ranks.push_back(next_rank[t]++);
        out.ranks.push_back(std::move(ranks));
    }
    return out;
}

CoverWitness lift_cover(const RankedCover& cover, std::span<const int> ground, int m, int p) {
    if (cover.ranks.size() != ground.size())
        throw InvalidInput("ranked cover does not match the ground multiset");
    CoverWitness w;
    w.m = m + part_size(m, p);
    w.assignment.resize(ground.size());
    std::vector<char> used(w.m + 1, 0);
    auto order = descending_indices(ground);
    for (std::size_t j = 0; j < order.size(); ++j) {
        for (int rank : cover.ranks[j]) {
            if (rank < 0 || rank >= m)
                throw InvalidInput("cover rank outside the rounded prefix");
            int value = lifted_value(rank, m, p);
            w.assignment[order[j]].push_back(value);
            used[value] = 1;
        }
    }
    for (int x = w.m; x >= 1; --x)
        if (!used[x])
            w.unused.push_back(x);
    return w;
}

CoverWitness shrink_cover(std::span<const int> ground, CoverWitness witness) {
    for (;;) {
        const int target = witness.m - 1;
        if (target < 1)
            return witness;
        std::vector<int> used;
        for (const auto& part : witness.assignment)
            used.insert(used.end(), part.begin(), part.end());
        std::sort(used.begin(), used.end(), std::greater<>());
        if (static_cast<int>(used.size()) > target)
            return witness;
        std::vector<int> remap(witness.m + 1, 0);
        for (std::size_t j = 0; j < used.size(); ++j)
            remap[used[j]] = std::min(used[j], target - static_cast<int>(j));
        CoverWitness smaller;
        smaller.m = target;
        for (const auto& part : witness.assignment) {
            std::vector<int> moved;
            for (int x : part)
                moved.push_back(remap[x]);
            smaller.assignment.push_back(std::move(moved));
        }
        std::vector<char> taken(target + 1, 0);
        for (const auto& part : smaller.assignment)
            for (int x : part)
                taken[x] = 1;
        for (int x = target; x >= 1; --x)
            if (!taken[x])
                smaller.unused.push_back(x);
        if (!is_valid_cover(ground, smaller))
            return witness;
        witness = std::move(smaller);
    }
}

PrefixCoverResult ptas_prefix_cover(std::span<const int> ground, int p) {
    if (ground.empty())
        throw InvalidInput("ground multiset is empty");
    if (p < 1)
        throw InvalidInput("p must be at least 1");
    for (int v : ground)
        if (v < 1)
            throw InvalidInput("ground elements must be positive");
    const auto rounded_ground = round_multiset(ground, p);
    const int count = static_cast<int>(ground.size());
    const int largest = *std::max_element(ground.begin(), ground.end());

    // Feasibility of the rounded prefix is not monotone in m, so scan upwards
    // from the lower bound; [largest + count] always succeeds.
    std::optional<RankedCover> found;
    int m = std::max(count, (largest + 1) / 2);
    for (;; ++m) {
        found = feasible_cover_rounded(rounded_ground, round_prefix(m, p));
        if (found)
            break;
    }

    PrefixCoverResult result;
    result.p = p;
    result.rounded_m = m;
    result.lifted_m = m + part_size(m, p);
    result.guarantee = prefix_cover_factor(p);
    result.witness = shrink_cover(ground, lift_cover(*found, ground, m, p));
    return result;
}

BroadcastSchedule kcycle_cover_to_schedule(const KCycleSpec& spec, const CoverWitness& witness) {
    auto built = build_k_cycle(spec);
    if (auto err = check_cover(spec.lengths, witness); !err.empty())
        throw InvalidInput("witness does not cover the cycle lengths: " + err);
    const int m = witness.m;
    BroadcastSchedule sched;
    sched.sources = {{built.center, 0}};
    for (std::size_t i = 0; i < built.cycles.size(); ++i) {
        const auto& arc = built.cycles[i];
        const int length = static_cast<int>(arc.size());
        auto numbers = witness.assignment[i];
        std::sort(numbers.begin(), numbers.end(), std::greater<>());
        // the larger number runs from the front of the arc, the other from the back
        const int front = std::min(numbers[0], length);
        const int back = length - front;
        Round r = m - numbers[0] + 1;
        Vertex prev = built.center;
        for (int q = 0; q < front; ++q, ++r) {
            sched.calls.push_back({r, prev, arc[q]});
            prev = arc[q];
        }
        if (back > 0) {
            r = m - numbers[1] + 1;
            prev = built.center;
            for (int q = length - 1; q >= front; --q, ++r) {
                sched.calls.push_back({r, prev, arc[q]});
                prev = arc[q];
            }
        }
    }
    sched.normalize();
    return sched;
}

KCycleBroadcastResult kcycle_broadcast_ptas(const KCycleSpec& spec, Vertex originator, int p) {
    auto built = build_k_cycle(spec);
    if (!built.graph.contains(originator))
        throw InvalidInput("originator not in graph");

    KCycleBroadcastResult result;
    result.p = p;
    result.guarantee = prefix_cover_factor(p);

    if (originator == built.center) {
        auto cover = ptas_prefix_cover(spec.lengths, p);
        result.schedule = kcycle_cover_to_schedule(spec, cover.witness);
        result.rounds = validate_schedule(built.graph, result.schedule);
        return result;
    }

    // locate the originator's cycle and orient its arc so the originator is
    // nearer to the front
    std::size_t home = 0;
    int pos = -1;
    for (; home < built.cycles.size(); ++home) {
        auto it = std::find(built.cycles[home].begin(), built.cycles[home].end(), originator);
        if (it != built.cycles[home].end()) {
            pos = static_cast<int>(it - built.cycles[home].begin());
            break;
        }
    }
    std::vector<Vertex> arc = built.cycles[home];
    const int length = static_cast<int>(arc.size());
    if (pos + 1 > length - pos) {
        std::reverse(arc.begin(), arc.end());
        pos = length - 1 - pos;
    }

    BroadcastSchedule& sched = result.schedule;
    sched.sources = {{originator, 0}};
    for (int t = 1; t <= pos; ++t)
        sched.calls.push_back({t, arc[pos - t + 1], arc[pos - t]});
    const Round center_informed = pos + 1;
    sched.calls.push_back({center_informed, arc[0], built.center});

    // vertices past the originator: from the originator from round 2 on, or
    // from the center's other edge from round center_informed + 1 on
    int split = pos;  // last arc position reached from the originator
    for (int q = pos + 1; q < length; ++q) {
        Round from_origin = q - pos + 1;
        Round from_center = center_informed + 1 + (length - 1 - q);
        if (from_origin <= from_center)
            split = q;
        else
            break;
    }
    for (int q = pos + 1; q <= split; ++q)
        sched.calls.push_back({q - pos + 1, arc[q - 1], arc[q]});
    Round offset = center_informed;
    if (split < length - 1) {
        Vertex prev = built.center;
        Round r = center_informed + 1;
        for (int q = length - 1; q > split; --q, ++r) {
            sched.calls.push_back({r, prev, arc[q]});
            prev = arc[q];
        }
        offset = center_informed + 1;
    }

    KCycleSpec rest;
    std::vector<std::size_t> rest_ids;
    for (std::size_t i = 0; i < spec.lengths.size(); ++i)
        if (i != home) {
            rest.lengths.push_back(spec.lengths[i]);
            rest_ids.push_back(i);
        }
    if (!rest.lengths.empty()) {
        auto cover = ptas_prefix_cover(rest.lengths, p);
        auto sub = kcycle_cover_to_schedule(rest, cover.witness);
        auto sub_built = build_k_cycle(rest);
        std::vector<Vertex> to_full(sub_built.graph.size(), -1);
        to_full[sub_built.center] = built.center;
        for (std::size_t j = 0; j < rest_ids.size(); ++j)
            for (std::size_t q = 0; q < sub_built.cycles[j].size(); ++q)
                to_full[sub_built.cycles[j][q]] = built.cycles[rest_ids[j]][q];
        for (const auto& c : sub.calls)
            sched.calls.push_back({c.round + offset, to_full[c.caller], to_full[c.callee]});
    }
    sched.normalize();
    result.rounds = validate_schedule(built.graph, sched);
    return result;
}

}  // namespace telbc
