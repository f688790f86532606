#include <decount/error.hpp>
#include <decount/reductions.hpp>

#include <algorithm>

namespace decount {

namespace
{
    auto with_fresh_labels(UndirectedGraph g, const UndirectedGraph & source) -> UndirectedGraph
    {
        auto labels = source.labels();
        std::uint64_t next = 0;
        for (auto l : labels)
            next = std::max(next, l + 1);
        while (labels.size() < g.num_vertices())
            labels.push_back(next++);
        g.set_labels(std::move(labels));
        return g;
    }
}

auto expand_even(const UndirectedGraph & g) -> UndirectedGraph
{
    auto n = g.num_vertices();
    auto original = g.edges();
    std::vector<Edge> edges;
    edges.reserve(2 * original.size());
    for (std::size_t e = 0; e < original.size(); ++e) {
        auto mid = static_cast<VertexId>(n + e);
        edges.emplace_back(original[e].first, mid);
        edges.emplace_back(mid, original[e].second);
    }
    return with_fresh_labels(UndirectedGraph::from_edges(n + original.size(), edges, false), g);
}

auto expand_odd(const UndirectedGraph & g) -> UndirectedGraph
{
    auto n = g.num_vertices();
    auto original = g.edges();
    std::vector<Edge> edges;
    edges.reserve(5 * original.size());
    for (std::size_t e = 0; e < original.size(); ++e) {
        auto [u, v] = original[e];
        auto a = static_cast<VertexId>(n + 3 * e);
        auto b = a + 1, c = a + 2;
        edges.emplace_back(u, a);
        edges.emplace_back(a, v);
        edges.emplace_back(u, b);
        edges.emplace_back(b, c);
        edges.emplace_back(c, v);
    }
    return with_fresh_labels(UndirectedGraph::from_edges(n + 3 * original.size(), edges, false), g);
}

auto recover_from_even(const BigInt & c2k_of_expansion, int k) -> BigInt
{
    if (k < 3)
        throw InputError("cycle length must be at least 3");
    return c2k_of_expansion;
}

auto recover_from_odd(const BigInt & c7, const BigInt & c9) -> OddRecovery
{
    auto c3 = exact_divide(c7, 3, "C7 count of the odd expansion");
    BigInt rest = c9 - c3;
    if (rest < 0)
        throw InvariantError("C9 count of the odd expansion is smaller than the recovered C3 count");
    return OddRecovery{c3, exact_divide(rest, 4, "C9 minus C3 count of the odd expansion")};
}

auto recover_from_odd(const BigInt & c7, const BigInt & c9, const BigInt & c3_of_g) -> OddRecovery
{
    auto result = recover_from_odd(c7, c9);
    if (result.c3 != c3_of_g)
        throw VerificationError("C7 / 3 = " + result.c3.str() + " but the graph has " + c3_of_g.str() + " triangles");
    return result;
}

} // namespace decount
