#include "support.hpp"

#include "telbc/bandwidth_dp.hpp"
#include "telbc/oracle.hpp"

#include <doctest.h>

using namespace telbc;

namespace {

std::vector<Vertex> identity(int n) {
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    return order;
}

SweepContext context(const Graph& g, std::vector<Vertex> ordering, int k, Round horizon, Vertex source) {
    SweepContext ctx;
    ctx.graph = &g;
    ctx.ordering = std::move(ordering);
    ctx.k = k;
    ctx.horizon = horizon;
    ctx.release.assign(g.size(), -1);
    ctx.release[source] = 0;
    return ctx;
}

}  // namespace

TEST_CASE("bandwidth DP on small families") {
    CHECK(dp_broadcast(make_path(6), identity(6), 1, 0).rounds == 5);
    for (Vertex s = 0; s < 8; ++s)
        CHECK(dp_broadcast(make_cycle(8), interleaved_cycle_ordering(8), 2, s).rounds == 4);

    const std::vector<int> two{3, 3};
    const auto bow = make_necklace(two);
    REQUIRE(bow.size() == 5);
    Vertex end = -1;
    for (Vertex v = 0; v < 5; ++v)
        if (bow.degree(v) == 2 && end < 0)
            end = v;
    auto res = dp_broadcast(bow, necklace_ordering(two), 2, end);
    CHECK(res.rounds == 3);
    CHECK(exact_broadcast_time(bow, end).rounds == 3);
    CHECK(validate_schedule(bow, res.schedule) == 3);
}

TEST_CASE("bandwidth DP with the source inside the ordering") {
    CHECK(dp_broadcast_general_source(make_path(7), identity(7), 1, 0).rounds == 6);
    CHECK(dp_broadcast_general_source(make_path(7), identity(7), 1, 3).rounds == 4);
    const auto c7 = make_cycle(7);
    const auto order = interleaved_cycle_ordering(7);
    auto res = dp_broadcast_general_source(c7, order, 2, order[3]);
    CHECK(res.rounds == 4);
    CHECK(res.cross_source_edges);
}

TEST_CASE("bandwidth DP rejects bad orderings") {
    CHECK_THROWS_AS(dp_broadcast(make_cycle(6), identity(6), 1, 0), InvalidInput);
    CHECK_THROWS_AS(dp_broadcast(make_star(5), identity(5), 1, 0), InvalidInput);
    std::vector<Vertex> dup{0, 0, 1};
    CHECK_THROWS_AS(dp_broadcast(make_path(3), dup, 1, 0), InvalidInput);
    DpConfig tiny;
    tiny.max_states_per_row = 2;
    CHECK_THROWS_AS(dp_broadcast(make_cycle(10), interleaved_cycle_ordering(10), 2, 0, tiny), BudgetExceeded);
}

TEST_CASE("window transitions") {
    const auto path = make_path(4);
    auto ctx = context(path, identity(4), 1, 3, 0);

    auto first = successor_states(ctx, 0, WindowState{});
    REQUIRE(first.size() == 1);
    CHECK(first[0].first.slots[0].time == 0);
    CHECK(dp_value_recurrence(0, first[0].first) == 0);

    // from v_1 the next vertex is informed through the back edge one round later
    auto second = successor_states(ctx, 1, first[0].first);
    bool chained = false;
    for (const auto& [state, move] : second) {
        CHECK(state.slots.size() == 1);
        if (move.parent == 0 && move.time == 1)
            chained = true;
        CHECK((move.parent == 0 || move.pending));
    }
    CHECK(chained);

    // the boundary vertex claims a parent it has no edge to: nothing follows
    const Graph split(3, {{0, 1}, {0, 2}});
    auto bad = context(split, {1, 2, 0}, 2, 3, 0);
    WindowState orphan{{WindowSlot{1, true, 0}}};
    auto none = successor_states(bad, 1, orphan);
    for (const auto& [state, move] : none)
        CHECK((move.children == 0 && move.parent != 0));

    CHECK(dp_value_recurrence(120, WindowState{{WindowSlot{109, false, 0}}}) == 120);
    CHECK(dp_value_recurrence(3, WindowState{{WindowSlot{5, false, 0}}}) == 5);
}

TEST_CASE("bandwidth DP agrees with the oracle") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        auto og = testing::random_low_bandwidth(rng, 11);
        const Vertex s = testing::uniform(rng, 0, og.graph.size() - 1);
        auto dp = dp_broadcast_general_source(og.graph, og.ordering, og.k, s);
        CHECK(dp.rounds == exact_broadcast_time(og.graph, s).rounds);
        CHECK(validate_schedule(og.graph, dp.schedule) == dp.rounds);
        CHECK(static_cast<double>(dp.stats.peak_row_states) <= window_state_bound(og.k, og.graph.size()));
    }
}

TEST_CASE("bandwidth DP with several sources") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 20; ++trial) {
        auto og = testing::random_low_bandwidth(rng, 10);
        const int n = og.graph.size();
        std::vector<Source> sources{{testing::uniform(rng, 0, n - 1), 0}};
        const Vertex late = testing::uniform(rng, 0, n - 1);
        if (late != sources[0].v)
            sources.push_back({late, testing::uniform(rng, 0, 3)});
        auto dp = dp_broadcast(og.graph, og.ordering, og.k, sources);
        CHECK(dp.rounds == exact_broadcast_time_multi(og.graph, sources).rounds);
    }
}
