#include "support.hpp"

#include "telbc/covering.hpp"
#include "telbc/oracle.hpp"

#include <doctest.h>

using namespace telbc;

namespace {

Graph binary_tree(int depth) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    const int n = (1 << (depth + 1)) - 1;
    for (int v = 1; v < n; ++v)
        edges.emplace_back((v - 1) / 2, v);
    return Graph(n, std::move(edges));
}

}  // namespace

TEST_CASE("exact broadcast time, single source") {
    CHECK(exact_broadcast_time(make_path(5), 0).rounds == 4);
    for (Vertex s = 0; s < 7; ++s)
        CHECK(exact_broadcast_time(make_cycle(7), s).rounds == 4);
    CHECK(exact_broadcast_time(build_k_cycle({{2, 2}}).graph, 0).rounds == 3);
    CHECK(exact_broadcast_time(make_complete(8), 3).rounds == 3);
    CHECK(exact_broadcast_time(make_star(6), 0).rounds == 5);
    CHECK(exact_broadcast_time(Graph(1, {}), 0).rounds == 0);

    auto res = exact_broadcast_time(binary_tree(2), 0);
    CHECK(res.rounds == 4);
    CHECK(validate_schedule(binary_tree(2), res.schedule) == 4);
}

TEST_CASE("oracle caps and bad input") {
    CHECK_THROWS_AS(exact_broadcast_time(make_path(21), 0), InstanceTooLarge);
    OracleConfig tight;
    tight.max_vertices = 4;
    CHECK_THROWS_AS(exact_broadcast_time(make_path(5), 0, tight), InstanceTooLarge);
    CHECK_THROWS_AS(exact_broadcast_time(Graph(3, {{0, 1}}), 0), InvalidInput);
    CHECK_THROWS_AS(exact_broadcast_time_multi(make_path(3), {}), InvalidInput);
    CHECK_THROWS_AS(exact_broadcast_time_multi(make_path(17), {{0, 0}}), InstanceTooLarge);
}

TEST_CASE("exact broadcast time, several sources") {
    CHECK(exact_broadcast_time_multi(make_path(6), {{0, 0}, {5, 0}}).rounds == 2);
    std::vector<Source> all;
    for (Vertex v = 0; v < 5; ++v)
        all.push_back({v, 0});
    CHECK(exact_broadcast_time_multi(make_cycle(5), all).rounds == 0);
    // the late source only counts once released
    CHECK(exact_broadcast_time_multi(make_path(2), {{0, 0}, {1, 4}}).rounds == 4);
    auto res = exact_broadcast_time_multi(make_path(7), {{0, 0}, {6, 2}});
    CHECK(res.rounds == 4);
    CHECK(validate_schedule(make_path(7), res.schedule) == 4);
}

TEST_CASE("witnesses validate and respect the lower bound") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        auto g = testing::random_low_bandwidth(rng, 14).graph;
        Vertex s = testing::uniform(rng, 0, g.size() - 1);
        auto res = exact_broadcast_time(g, s);
        CHECK(validate_schedule(g, res.schedule) == res.rounds);
        CHECK(res.rounds >= broadcast_lower_bound(g, s));
    }
}

TEST_CASE("tree solver") {
    CHECK(tree_broadcast_time(make_star(6), 0).rounds == 5);
    CHECK(tree_broadcast_time(make_path(9), 0).rounds == 8);
    CHECK(tree_broadcast_time(binary_tree(2), 0).rounds == 4);
    CHECK_THROWS_AS(tree_broadcast_time(make_cycle(4), 0), InvalidInput);

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        auto t = testing::random_tree(rng, testing::uniform(rng, 1, 12));
        Vertex s = testing::uniform(rng, 0, t.size() - 1);
        auto fast = tree_broadcast_time(t, s);
        CHECK(validate_schedule(t, fast.schedule) == fast.rounds);
        CHECK(fast.rounds == exact_broadcast_time(t, s).rounds);
    }
}

TEST_CASE("exact prefix covering") {
    const std::vector<int> s{13, 8, 7, 6};
    auto w = exact_prefix_cover(s);
    CHECK(w.m == 8);
    CHECK(is_valid_cover(s, w));

    CoverWitness known{8, {{8, 5}, {7, 2}, {4, 3}, {6}}, {1}};
    CHECK(is_valid_cover(s, known));
    known.m = 7;
    CHECK_FALSE(is_valid_cover(s, known));

    CHECK(exact_prefix_cover(std::vector<int>{1}).m == 1);
    CHECK(exact_prefix_cover(std::vector<int>{2, 2}).m == 3);
    CHECK(exact_prefix_cover(std::vector<int>{7, 7, 9, 13}).m == 8);
}

TEST_CASE("prefix covering is monotone under insertion") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = testing::random_multiset(rng, 6, 20);
        const int before = exact_prefix_cover(s).m;
        s.push_back(testing::uniform(rng, 1, 20));
        CHECK(exact_prefix_cover(s).m >= before);
    }
}

TEST_CASE("exact double prefix covering") {
    const std::vector<int> s{8, 4, 4, 2};
    auto w = exact_double_prefix_cover(s, 2);
    CHECK(w.m == 5);
    CHECK(is_valid_double_cover(s, w));

    DoubleCoverWitness known{5, 2, {5, 4, 2, 1}, {3, 0, 2, 1}};
    CHECK(is_valid_double_cover(s, known));
    known.d[0] = 4;  // outside [m - beta]
    CHECK_FALSE(is_valid_double_cover(s, known));

    CHECK(exact_double_prefix_cover(std::vector<int>{1}, 0).m == 1);
    auto three = exact_double_prefix_cover(std::vector<int>{3, 3}, 1);
    CHECK(three.m == 3);
    CHECK(is_valid_double_cover(std::vector<int>{3, 3}, DoubleCoverWitness{3, 1, {3, 2}, {0, 1}}));
    CHECK(exact_double_prefix_cover(std::vector<int>{7, 5, 4, 4}, 0).m == 4);
    CHECK(exact_double_prefix_cover(std::vector<int>{7, 5, 4, 4}, 1).m == 5);
}

TEST_CASE("large offsets reduce double covering to single numbers") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        auto s = testing::random_multiset(rng, 6, 15);
        const int single = single_number_cover(s);
        auto w = exact_double_prefix_cover(s, single);
        CHECK(w.m == single);
        CHECK(std::all_of(w.d.begin(), w.d.end(), [](int d) { return d == 0; }));
    }
}
