#include "generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace decount::testing {

auto erdos_renyi(std::size_t n, double p, Rng & rng) -> UndirectedGraph
{
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace_back(u, v);
    return UndirectedGraph::from_edges(n, edges);
}

auto bounded_degeneracy(std::size_t n, std::size_t d, Rng & rng) -> UndirectedGraph
{
    std::vector<Edge> edges;
    for (VertexId v = 1; v < n; ++v) {
        std::size_t want = std::uniform_int_distribution<std::size_t>(0, std::min<std::size_t>(d, v))(rng);
        std::set<VertexId> picked;
        std::uniform_int_distribution<VertexId> pick(0, v - 1);
        while (picked.size() < want)
            picked.insert(pick(rng));
        for (auto u : picked)
            edges.emplace_back(u, v);
    }
    return UndirectedGraph::from_edges(n, edges);
}

auto mixed_random_graph(std::size_t max_n, Rng & rng) -> UndirectedGraph
{
    std::size_t n = std::uniform_int_distribution<std::size_t>(std::min<std::size_t>(4, max_n), max_n)(rng);
    if (std::bernoulli_distribution(0.5)(rng)) {
        double p = std::uniform_real_distribution<double>(0.2, 0.6)(rng);
        return erdos_renyi(n, p, rng);
    }
    std::size_t d = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    return bounded_degeneracy(n, d, rng);
}

auto random_pattern(int n, double p, Rng & rng) -> Pattern
{
    std::set<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace(u, v);
    }
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng))
                edges.emplace(u, v);
    std::vector<std::pair<int, int>> list(edges.begin(), edges.end());
    return relabel(Pattern::from_edges(n, list), rng);
}

auto relabel(const Pattern & h, Rng & rng) -> Pattern
{
    std::vector<int> perm(h.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    auto edges = h.edges();
    for (auto & [u, v] : edges) {
        u = perm[u];
        v = perm[v];
    }
    return Pattern::from_edges(h.num_vertices(), edges);
}

auto random_orientation(const Pattern & h, Rng & rng) -> SmallDigraph
{
    std::vector<int> rank(h.num_vertices());
    std::iota(rank.begin(), rank.end(), 0);
    std::shuffle(rank.begin(), rank.end(), rng);
    SmallDigraph d;
    d.n = h.num_vertices();
    for (auto [u, v] : h.edges()) {
        if (rank[u] < rank[v])
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

auto random_layered(int k, std::size_t width, double p, int max_weight, Rng & rng) -> LayeredWeightedGraph
{
    LayeredWeightedGraph lg(k);
    for (int i = 0; i < k; ++i)
        for (std::size_t v = 0; v < width; ++v)
            lg.add_vertex(i);
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<int> weight(1, max_weight);
    for (int i = 0; i < k; ++i)
        for (VertexId u = 0; u < width; ++u)
            for (VertexId v = 0; v < width; ++v)
                if (coin(rng))
                    lg.add_edge(i, u, v, weight(rng));
    return lg;
}

auto cycle_graph(std::size_t n) -> UndirectedGraph
{
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v)
        edges.emplace_back(v, static_cast<VertexId>((v + 1) % n));
    return UndirectedGraph::from_edges(n, edges);
}

auto complete_graph(std::size_t n) -> UndirectedGraph
{
    std::vector<Edge> edges;
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            edges.emplace_back(u, v);
    return UndirectedGraph::from_edges(n, edges);
}

} // namespace decount::testing
