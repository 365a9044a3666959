#ifndef TELBC_TESTS_SUPPORT_HPP
#define TELBC_TESTS_SUPPORT_HPP

#include "telbc/families.hpp"
#include "telbc/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace telbc::testing {

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline std::vector<int> random_multiset(std::mt19937_64& rng, int max_size, int max_value) {
    std::vector<int> s(uniform(rng, 1, max_size));
    for (int& v : s)
        v = uniform(rng, 1, max_value);
    return s;
}

// Prufer-free construction: each vertex attaches to a random earlier one.
inline Graph random_tree(std::mt19937_64& rng, int n) {
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    std::shuffle(label.begin(), label.end(), rng);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(label[uniform(rng, 0, v - 1)], label[v]);
    return Graph(n, std::move(edges));
}

inline KCycleSpec random_kcycle(std::mt19937_64& rng, int max_vertices) {
    KCycleSpec spec;
    int left = max_vertices - 1;
    do {
        int c = uniform(rng, 2, std::min(left, 8));
        spec.lengths.push_back(c);
        left -= c;
    } while (left >= 2 && uniform(rng, 0, 3) > 0);
    return spec;
}

inline KPathSpec random_kpath(std::mt19937_64& rng, int max_vertices) {
    KPathSpec spec;
    int left = max_vertices - 2;
    do {
        int l = uniform(rng, 1, std::min(left, 7));
        spec.lengths.push_back(l);
        left -= l;
    } while (left >= 1 && uniform(rng, 0, 3) > 0);
    spec.st_edge = uniform(rng, 0, 3) == 0;
    return spec;
}

struct OrderedGraph {
    Graph graph;
    std::vector<Vertex> ordering;
    int k = 1;
};

// Connected graph whose random vertex labelling has bandwidth <= k.
inline OrderedGraph random_bandwidth_graph(std::mt19937_64& rng, int n, int k, double density) {
    OrderedGraph out;
    out.k = k;
    out.ordering.resize(n);
    std::iota(out.ordering.begin(), out.ordering.end(), 0);
    std::shuffle(out.ordering.begin(), out.ordering.end(), rng);
    std::bernoulli_distribution keep(density);
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= std::min(n - 1, i + k); ++j)
            if (j == i + 1 || keep(rng))
                edges.emplace_back(out.ordering[i], out.ordering[j]);
    out.graph = Graph(n, std::move(edges));
    return out;
}

// Paths, cycles, necklaces and random bandwidth-2 graphs, n <= max_n.
inline OrderedGraph random_low_bandwidth(std::mt19937_64& rng, int max_n) {
    switch (uniform(rng, 0, 3)) {
    case 0: {
        int n = uniform(rng, 2, max_n);
        OrderedGraph g{make_path(n), {}, 1};
        g.ordering.resize(n);
        std::iota(g.ordering.begin(), g.ordering.end(), 0);
        return g;
    }
    case 1: {
        int n = uniform(rng, 3, max_n);
        return {make_cycle(n), interleaved_cycle_ordering(n), 2};
    }
    case 2: {
        std::vector<int> sizes;
        int n = 1;
        do {
            int size = uniform(rng, 3, 5);
            if (n + size - 1 > max_n)
                break;
            sizes.push_back(size);
            n += size - 1;
        } while (uniform(rng, 0, 3) > 0);
        if (sizes.empty())
            sizes.push_back(3);
        return {make_necklace(sizes), necklace_ordering(sizes), 2};
    }
    default:
        return random_bandwidth_graph(rng, uniform(rng, 2, max_n), 2, 0.5);
    }
}

}  // namespace telbc::testing

#endif
