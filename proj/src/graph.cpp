#include "telbc/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace telbc {

Graph::Graph(int n, std::vector<std::pair<Vertex, Vertex>> edges) : n_(n), adjacency_(n < 0 ? 0 : n) {
    if (n < 0)
        throw InvalidInput("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InvalidInput("edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
        if (u == v)
            throw InvalidInput("self-loop at vertex " + std::to_string(u));
        if (u > v)
            std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end())
        throw InvalidInput("duplicate edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ")");
    for (const auto& [u, v] : edges) {
        adjacency_[u].push_back(v);
        adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
    edges_ = std::move(edges);
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (!contains(u) || !contains(v))
        return false;
    const auto& adj = adjacency_[u];
    return std::binary_search(adj.begin(), adj.end(), v);
}

std::vector<int> Graph::distances_from(Vertex source) const {
    return distances_from(std::span<const Vertex>(&source, 1));
}

std::vector<int> Graph::distances_from(std::span<const Vertex> sources) const {
    std::vector<int> dist(n_, -1);
    std::deque<Vertex> queue;
    for (Vertex s : sources) {
        if (!contains(s))
            throw InvalidInput("vertex " + std::to_string(s) + " not in graph");
        if (dist[s] != 0) {
            dist[s] = 0;
            queue.push_back(s);
        }
    }
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : adjacency_[u]) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

bool Graph::is_connected() const {
    if (n_ <= 1)
        return true;
    auto dist = distances_from(0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

bool Graph::is_tree() const {
    return n_ >= 1 && static_cast<int>(edges_.size()) == n_ - 1 && is_connected();
}

void require_connected(const Graph& g) {
    if (g.size() == 0)
        throw InvalidInput("empty graph");
    if (!g.is_connected())
        throw InvalidInput("graph is not connected");
}

int ceil_log2(long long n) {
    int bits = 0;
    long long reach = 1;
    while (reach < n) {
        reach *= 2;
        ++bits;
    }
    return bits;
}

int broadcast_lower_bound(const Graph& g, Vertex source) {
    require_connected(g);
    auto dist = g.distances_from(source);
    int ecc = *std::max_element(dist.begin(), dist.end());
    return std::max(ceil_log2(g.size()), ecc);
}

static std::vector<int> positions_of(const Graph& g, std::span<const Vertex> ordering) {
    if (static_cast<int>(ordering.size()) != g.size())
        throw InvalidInput("ordering has " + std::to_string(ordering.size()) + " entries, graph has " +
                           std::to_string(g.size()) + " vertices");
    std::vector<int> pos(g.size(), -1);
    for (int i = 0; i < static_cast<int>(ordering.size()); ++i) {
        Vertex v = ordering[i];
        if (!g.contains(v) || pos[v] >= 0)
            throw InvalidInput("ordering is not a permutation of the vertices");
        pos[v] = i;
    }
    return pos;
}

int ordering_bandwidth(const Graph& g, std::span<const Vertex> ordering) {
    auto pos = positions_of(g, ordering);
    int width = 0;
    for (const auto& [u, v] : g.edges())
        width = std::max(width, std::abs(pos[u] - pos[v]));
    return width;
}

bool verify_bandwidth_ordering(const Graph& g, std::span<const Vertex> ordering, int k) {
    return ordering_bandwidth(g, ordering) <= k;
}

std::vector<Vertex> cuthill_mckee_ordering(const Graph& g) {
    const int n = g.size();
    std::vector<Vertex> best(n);
    std::iota(best.begin(), best.end(), 0);
    if (n <= 2)
        return best;
    int best_width = ordering_bandwidth(g, best);

    std::vector<char> seen(n);
    std::vector<Vertex> order;
    for (Vertex start = 0; start < n; ++start) {
        std::fill(seen.begin(), seen.end(), 0);
        order.clear();
        // components after the first are appended from their lowest vertex
        for (Vertex root = start, scanned = 0; static_cast<int>(order.size()) < n;) {
            seen[root] = 1;
            std::size_t head = order.size();
            order.push_back(root);
            while (head < order.size()) {
                Vertex u = order[head++];
                std::vector<Vertex> next;
                for (Vertex w : g.neighbors(u))
                    if (!seen[w]) {
                        seen[w] = 1;
                        next.push_back(w);
                    }
                std::stable_sort(next.begin(), next.end(),
                                 [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
                order.insert(order.end(), next.begin(), next.end());
            }
            while (scanned < n && seen[scanned])
                ++scanned;
            root = scanned;
        }
        std::reverse(order.begin(), order.end());
        int width = ordering_bandwidth(g, order);
        if (width < best_width) {
            best_width = width;
            best = order;
        }
    }
    return best;
}

}  // namespace telbc
