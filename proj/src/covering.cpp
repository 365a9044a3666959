#include "telbc/covering.hpp"

#include "telbc/graph.hpp"
#include "telbc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <unordered_set>

namespace telbc {

namespace {

using Bits = std::uint64_t;
constexpr int kMaxCoverValue = 63;

Bits bit(int x) { return Bits{1} << x; }

// Ground indices sorted by value, descending; ties by index.
std::vector<int> descending_order(std::span<const int> ground) {
    std::vector<int> idx(ground.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return ground[a] > ground[b]; });
    return idx;
}

void require_positive(std::span<const int> ground) {
    if (ground.empty())
        throw InvalidInput("ground multiset is empty");
    for (int v : ground)
        if (v < 1)
            throw InvalidInput("ground elements must be positive");
}

// Smallest available number >= lo in `avail` (numbers are bit positions).
int smallest_at_least(Bits avail, int lo) {
    lo = std::max(lo, 1);
    if (lo > kMaxCoverValue)
        return 0;
    Bits masked = avail & ~(bit(lo) - 1);
    return masked ? std::countr_zero(masked) : 0;
}

long long sum_of_top(Bits avail, int count) {
    long long total = 0;
    for (int x = kMaxCoverValue; x >= 1 && count > 0; --x)
        if (avail & bit(x)) {
            total += x;
            --count;
        }
    return total;
}

struct PairHash {
    std::size_t operator()(const std::pair<int, Bits>& k) const {
        return std::hash<Bits>()(k.second * 0x9E3779B97F4A7C15ULL ^ static_cast<Bits>(k.first));
    }
};

class PrefixCoverSearch {
public:
    explicit PrefixCoverSearch(std::vector<int> demand) : demand_(std::move(demand)), suffix_(demand_.size() + 1, 0) {
        for (int i = static_cast<int>(demand_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + demand_[i];
    }

    bool feasible(int m) {
        failed_.clear();
        picks_.assign(demand_.size(), {});
        return go(0, (bit(m + 1) - 1) & ~Bits{1});
    }

    const std::vector<std::vector<int>>& picks() const { return picks_; }

private:
    bool go(std::size_t idx, Bits avail) {
        if (idx == demand_.size())
            return true;
        const int left = static_cast<int>(demand_.size() - idx);
        if (std::popcount(avail) < left || sum_of_top(avail, 2 * left) < suffix_[idx])
            return false;
        if (failed_.count({static_cast<int>(idx), avail}))
            return false;
        const int need = demand_[idx];
        if (int x = smallest_at_least(avail, need)) {
            picks_[idx] = {x};
            if (go(idx + 1, avail & ~bit(x)))
                return true;
        }
        for (int x = std::min(need - 1, kMaxCoverValue); 2 * x > need; --x) {
            if (!(avail & bit(x)))
                continue;
            int y = smallest_at_least(avail & ~bit(x), need - x);
            if (y == 0 || y >= x)
                continue;
            picks_[idx] = {x, y};
            if (go(idx + 1, avail & ~bit(x) & ~bit(y)))
                return true;
        }
        failed_.insert({static_cast<int>(idx), avail});
        return false;
    }

    std::vector<int> demand_;
    std::vector<long long> suffix_;
    std::vector<std::vector<int>> picks_;
    std::unordered_set<std::pair<int, Bits>, PairHash> failed_;
};

struct TripleHash {
    std::size_t operator()(const std::tuple<int, Bits, Bits>& k) const {
        auto [i, a, b] = k;
        return std::hash<Bits>()(a * 0x9E3779B97F4A7C15ULL ^ (b + 0x632BE59BD9B4E019ULL) * 31 ^ static_cast<Bits>(i));
    }
};

class DoubleCoverSearch {
public:
    explicit DoubleCoverSearch(std::vector<int> demand) : demand_(std::move(demand)), suffix_(demand_.size() + 1, 0) {
        for (int i = static_cast<int>(demand_.size()) - 1; i >= 0; --i)
            suffix_[i] = suffix_[i + 1] + demand_[i];
    }

    bool feasible(int m, int beta) {
        failed_.clear();
        picks_.assign(demand_.size(), {0, 0});
        Bits c_avail = (bit(m + 1) - 1) & ~Bits{1};
        int d_top = m - beta;
        Bits d_avail = d_top >= 1 ? (bit(d_top + 1) - 1) & ~Bits{1} : 0;
        return go(0, c_avail, d_avail);
    }

    const std::vector<std::pair<int, int>>& picks() const { return picks_; }

private:
    bool go(std::size_t idx, Bits c_avail, Bits d_avail) {
        if (idx == demand_.size())
            return true;
        const int left = static_cast<int>(demand_.size() - idx);
        if (std::popcount(c_avail) + std::popcount(d_avail) < left ||
            sum_of_top(c_avail, left) + sum_of_top(d_avail, left) < suffix_[idx])
            return false;
        auto key = std::make_tuple(static_cast<int>(idx), c_avail, d_avail);
        if (failed_.count(key))
            return false;
        const int need = demand_[idx];
        if (int x = smallest_at_least(c_avail, need)) {
            picks_[idx] = {x, 0};
            if (go(idx + 1, c_avail & ~bit(x), d_avail))
                return true;
        }
        if (int y = smallest_at_least(d_avail, need)) {
            picks_[idx] = {0, y};
            if (go(idx + 1, c_avail, d_avail & ~bit(y)))
                return true;
        }
        for (int x = std::min(need - 1, kMaxCoverValue); x >= 1; --x) {
            if (!(c_avail & bit(x)))
                continue;
            int y = smallest_at_least(d_avail, need - x);
            if (y == 0 || y >= need)
                continue;
            picks_[idx] = {x, y};
            if (go(idx + 1, c_avail & ~bit(x), d_avail & ~bit(y)))
                return true;
        }
        failed_.insert(key);
        return false;
    }

    std::vector<int> demand_;
    std::vector<long long> suffix_;
    std::vector<std::pair<int, int>> picks_;
    std::unordered_set<std::tuple<int, Bits, Bits>, TripleHash> failed_;
};

}  // namespace

std::string check_cover(std::span<const int> ground, const CoverWitness& w) {
    if (w.assignment.size() != ground.size())
        return "assignment size does not match ground multiset";
    std::vector<char> used(std::max(w.m, 0) + 1, 0);
    auto take = [&](int x) -> std::string {
        if (x < 1 || x > w.m)
            return "covering number " + std::to_string(x) + " outside [" + std::to_string(w.m) + "]";
        if (used[x]++)
            return "covering number " + std::to_string(x) + " used twice";
        return {};
    };
    for (std::size_t i = 0; i < ground.size(); ++i) {
        const auto& part = w.assignment[i];
        if (part.size() > 2)
            return "element " + std::to_string(i) + " uses more than two numbers";
        long long total = 0;
        for (int x : part) {
            if (auto err = take(x); !err.empty())
                return err;
            total += x;
        }
        if (total < ground[i])
            return "element " + std::to_string(i) + " (" + std::to_string(ground[i]) + ") not covered";
    }
    for (int x : w.unused)
        if (auto err = take(x); !err.empty())
            return err;
    return {};
}

std::string check_double_cover(std::span<const int> ground, const DoubleCoverWitness& w) {
    if (w.c.size() != ground.size() || w.d.size() != ground.size())
        return "witness size does not match ground multiset";
    if (w.beta < 0)
        return "negative beta";
    std::set<int> cs, ds;
    const int d_top = w.m - w.beta;
    for (std::size_t i = 0; i < ground.size(); ++i) {
        int c = w.c[i], d = w.d[i];
        if (c < 0 || c > w.m)
            return "c value " + std::to_string(c) + " outside {0} u [" + std::to_string(w.m) + "]";
        if (d < 0 || d > std::max(d_top, 0))
            return "d value " + std::to_string(d) + " outside {0} u [" + std::to_string(d_top) + "]";
        if (c > 0 && !cs.insert(c).second)
            return "c value " + std::to_string(c) + " repeated";
        if (d > 0 && !ds.insert(d).second)
            return "d value " + std::to_string(d) + " repeated";
        if (c + d < ground[i])
            return "element " + std::to_string(i) + " (" + std::to_string(ground[i]) + ") not covered";
    }
    return {};
}

CoverWitness exact_prefix_cover(std::span<const int> ground) {
    require_positive(ground);
    auto order = descending_order(ground);
    std::vector<int> demand;
    for (int i : order)
        demand.push_back(ground[i]);
    const long long total = std::accumulate(demand.begin(), demand.end(), 0LL);
    const int count = static_cast<int>(demand.size());

    int m = std::max(count, (demand.front() + 1) / 2);
    while (static_cast<long long>(m) * (m + 1) / 2 < total)
        ++m;
    PrefixCoverSearch search(demand);
    for (;; ++m) {
        if (m > kMaxCoverValue)
            throw InstanceTooLarge("exact prefix covering supports m <= " + std::to_string(kMaxCoverValue));
        if (search.feasible(m))
            break;
    }
    CoverWitness w;
    w.m = m;
    w.assignment.resize(ground.size());
    std::vector<char> used(m + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        w.assignment[order[k]] = search.picks()[k];
        for (int x : search.picks()[k])
            used[x] = 1;
    }
    for (int x = m; x >= 1; --x)
        if (!used[x])
            w.unused.push_back(x);
    return w;
}

DoubleCoverWitness exact_double_prefix_cover(std::span<const int> ground, int beta) {
    require_positive(ground);
    if (beta < 0)
        throw InvalidInput("beta must be non-negative");
    auto order = descending_order(ground);
    std::vector<int> demand;
    for (int i : order)
        demand.push_back(ground[i]);
    const int count = static_cast<int>(demand.size());

    DoubleCoverSearch search(demand);
    int m = 1;
    for (;; ++m) {
        if (m > kMaxCoverValue)
            throw InstanceTooLarge("exact double covering supports m <= " + std::to_string(kMaxCoverValue));
        const int slots = m + std::max(0, m - beta);
        if (slots < count || slots < demand.front())
            continue;
        if (search.feasible(m, beta))
            break;
    }
    DoubleCoverWitness w;
    w.m = m;
    w.beta = beta;
    w.c.assign(ground.size(), 0);
    w.d.assign(ground.size(), 0);
    for (std::size_t k = 0; k < order.size(); ++k) {
        w.c[order[k]] = search.picks()[k].first;
        w.d[order[k]] = search.picks()[k].second;
    }
    return w;
}

int single_number_cover(std::span<const int> ground) {
    require_positive(ground);
    std::vector<int> sorted(ground.begin(), ground.end());
    std::sort(sorted.rbegin(), sorted.rend());
    int m = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        m = std::max(m, sorted[i] + static_cast<int>(i));
    return m;
}

}  // namespace telbc
