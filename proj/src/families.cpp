#include "telbc/families.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace telbc {

void KCycleSpec::validate() const {
    if (lengths.empty())
        throw InvalidInput("k-cycle spec needs at least one cycle");
    for (int c : lengths)
        if (c < 2)
            throw InvalidInput("k-cycle lengths must be >= 2, got " + std::to_string(c));
}

int KCycleSpec::vertex_count() const {
    return 1 + std::accumulate(lengths.begin(), lengths.end(), 0);
}

void KPathSpec::validate() const {
    if (lengths.empty())
        throw InvalidInput("k-path spec needs at least one path");
    int zeros = 0;
    for (int l : lengths) {
        if (l < 0)
            throw InvalidInput("k-path lengths must be non-negative");
        zeros += (l == 0);
    }
    if (zeros + (st_edge ? 1 : 0) > 1)
        throw InvalidInput("k-path spec would duplicate the s-t edge");
}

int KPathSpec::vertex_count() const {
    return 2 + std::accumulate(lengths.begin(), lengths.end(), 0);
}

KCycleGraph build_k_cycle(const KCycleSpec& spec) {
    spec.validate();
    KCycleGraph out;
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 1;
    for (int c : spec.lengths) {
        std::vector<Vertex> arc(c);
        std::iota(arc.begin(), arc.end(), next);
        next += c;
        edges.emplace_back(0, arc.front());
        for (int i = 0; i + 1 < c; ++i)
            edges.emplace_back(arc[i], arc[i + 1]);
        edges.emplace_back(arc.back(), 0);
        out.cycles.push_back(std::move(arc));
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

KPathGraph build_k_path(const KPathSpec& spec) {
    spec.validate();
    KPathGraph out;
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (spec.st_edge)
        edges.emplace_back(0, 1);
    Vertex next = 2;
    for (int l : spec.lengths) {
        std::vector<Vertex> path(l);
        std::iota(path.begin(), path.end(), next);
        next += l;
        if (l == 0) {
            edges.emplace_back(0, 1);
        } else {
            edges.emplace_back(0, path.front());
            for (int i = 0; i + 1 < l; ++i)
                edges.emplace_back(path[i], path[i + 1]);
            edges.emplace_back(path.back(), 1);
        }
        out.paths.push_back(std::move(path));
    }
    out.graph = Graph(next, std::move(edges));
    return out;
}

// Walks from `start` away from `from` through degree-2 vertices until an
// endpoint in `stops` is reached; returns the internal vertices visited and the
// endpoint.
static std::pair<std::vector<Vertex>, Vertex> walk_chain(const Graph& g, Vertex from, Vertex start,
                                                         const std::function<bool(Vertex)>& is_stop) {
    std::vector<Vertex> chain;
    Vertex prev = from, cur = start;
    while (!is_stop(cur)) {
        if (g.degree(cur) != 2)
            throw InvalidInput("vertex " + std::to_string(cur) + " has degree " + std::to_string(g.degree(cur)) +
                               ", expected 2");
        chain.push_back(cur);
        auto nb = g.neighbors(cur);
        Vertex nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        if (static_cast<int>(chain.size()) > g.size())
            throw InvalidInput("chain does not terminate");
    }
    return {chain, cur};
}

std::vector<int> decompose_k_cycle(const Graph& g, Vertex center) {
    if (!g.contains(center))
        throw InvalidInput("center not in graph");
    std::vector<char> used(g.size(), 0);
    std::vector<int> lengths;
    for (Vertex w : g.neighbors(center)) {
        if (used[w])
            continue;
        auto [chain, end] = walk_chain(g, center, w, [&](Vertex v) { return v == center; });
        if (chain.size() < 2)
            throw InvalidInput("cycle with fewer than two non-center vertices");
        for (Vertex v : chain)
            used[v] = 1;
        lengths.push_back(static_cast<int>(chain.size()));
    }
    int covered = 1 + static_cast<int>(std::count(used.begin(), used.end(), 1));
    if (covered != g.size())
        throw InvalidInput("graph has vertices outside the cycles");
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

KPathSpec decompose_k_path(const Graph& g, Vertex s, Vertex t) {
    if (!g.contains(s) || !g.contains(t) || s == t)
        throw InvalidInput("bad k-path endpoints");
    KPathSpec spec;
    std::vector<char> used(g.size(), 0);
    for (Vertex w : g.neighbors(s)) {
        if (w == t) {
            spec.st_edge = true;
            continue;
        }
        auto [chain, end] = walk_chain(g, s, w, [&](Vertex v) { return v == t || v == s; });
        if (end != t)
            throw InvalidInput("path from s returns to s");
        for (Vertex v : chain)
            used[v] = 1;
        spec.lengths.push_back(static_cast<int>(chain.size()));
    }
    if (2 + static_cast<int>(std::count(used.begin(), used.end(), 1)) != g.size())
        throw InvalidInput("graph has vertices outside the s-t paths");
    if (spec.lengths.empty() && spec.st_edge) {
        spec.lengths.push_back(0);
        spec.st_edge = false;
    }
    std::sort(spec.lengths.rbegin(), spec.lengths.rend());
    return spec;
}

Graph make_path(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3)
        throw InvalidInput("cycle needs at least 3 vertices");
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        edges.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 1; i < n; ++i)
        edges.emplace_back(0, i);
    return Graph(n, std::move(edges));
}

Graph make_complete(int n) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

Graph make_necklace(const std::vector<int>& cycle_sizes) {
    if (cycle_sizes.empty())
        throw InvalidInput("necklace needs at least one cycle");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex joint = 0, next = 1;
    for (int size : cycle_sizes) {
        if (size < 3)
            throw InvalidInput("necklace cycles need at least 3 vertices");
        Vertex prev = joint;
        for (int i = 1; i < size; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, joint);
        // the next cycle hangs off the vertex opposite the joint
        joint = next - size + size / 2;
    }
    return Graph(next, std::move(edges));
}

std::vector<Vertex> necklace_ordering(const std::vector<int>& cycle_sizes) {
    std::vector<Vertex> order{0};
    Vertex next = 1;
    for (int size : cycle_sizes) {
        const int half = size / 2;
        std::vector<Vertex> near, far;  // the two arcs between consecutive joints
        for (int pos = 1; pos < half; ++pos)
            near.push_back(next + pos - 1);
        for (int pos = size - 1; pos > half; --pos)
            far.push_back(next + pos - 1);
        if (far.size() > near.size())
            std::swap(near, far);
        for (std::size_t i = 0; i < near.size(); ++i) {
            order.push_back(near[i]);
            if (i < far.size())
                order.push_back(far[i]);
        }
        order.push_back(next + half - 1);
        next += size - 1;
    }
    return order;
}

std::vector<Vertex> interleaved_cycle_ordering(int n) {
    std::vector<Vertex> order;
    for (int lo = 0, hi = n - 1; lo <= hi; ++lo, --hi) {
        order.push_back(lo);
        if (lo != hi)
            order.push_back(hi);
    }
    return order;
}

}  // namespace telbc
